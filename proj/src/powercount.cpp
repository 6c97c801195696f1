#include "specact/powercount.hpp"

#include "specact/errors.hpp"

#include <functional>

namespace specact {

int GraphSpec::gauge_vertex_count() const {
  int s = 0;
  for (const auto& [valence, count] : v) s += count;
  return s;
}

namespace {

int raw_loops(const GraphSpec& g) {
  return g.I + g.Itilde - g.gauge_vertex_count() - g.vtilde + 1;
}

}  // namespace

void validate(const GraphSpec& g) {
  if (g.n < 4 || g.n % 2) throw MalformedInput("theory order n must be even and >= 4");
  if (g.I < 0 || g.Itilde < 0 || g.E < 0 || g.Etilde < 0 || g.vtilde < 0)
    throw MalformedInput("edge and vertex counts must be non-negative");
  int gauge_ends = 0;
  for (const auto& [valence, count] : g.v) {
    if (count < 0) throw MalformedInput("vertex counts must be non-negative");
    if (valence < 3 || valence > g.n)
      throw MalformedInput("gauge vertex valence " + std::to_string(valence) +
                           " does not occur at order n=" + std::to_string(g.n));
    gauge_ends += valence * count;
  }
  if (2 * g.I + g.E != gauge_ends + g.vtilde)
    throw MalformedInput("gauge handshake violated: 2I + E != sum_i i v_i + vtilde");
  if (2 * g.Itilde + g.Etilde != 2 * g.vtilde)
    throw MalformedInput("ghost handshake violated: 2 Itilde + Etilde != 2 vtilde");
  if (raw_loops(g) < 0) throw MalformedInput("Euler formula gives a negative loop number");
}

int loops(const GraphSpec& g) {
  validate(g);
  return raw_loops(g);
}

int omega(const GraphSpec& g) {
  const int L = loops(g);
  int w = 4 * L - (g.I + g.Itilde) * (g.n - 2) + g.vtilde * (g.n - 3);
  for (const auto& [valence, count] : g.v) w += count * (g.n - valence);
  return w;
}

int omega_closed(int L, int E, int Etilde, int n) { return (4 - n) * (L - 1) + 4 - (E + Etilde); }

DivergenceReport analyze(const GraphSpec& g) {
  DivergenceReport r;
  r.L = loops(g);
  r.omega_bound = omega(g);
  r.omega_closed = omega_closed(r.L, g.E, g.Etilde, g.n);
  r.divergent = r.L >= 1 && r.omega_bound >= 0;
  r.vacuum = g.E + g.Etilde == 0;
  return r;
}

DivergenceClassification classify_divergences(int n, int loop_cap) {
  if (n < 4 || n % 2) throw MalformedInput("theory order n must be even and >= 4");
  DivergenceClassification c;
  c.n = n;
  c.loop_independent = (n == 4);
  c.loop_cap = loop_cap;
  for (int L = 1;; ++L) {
    const int top = omega_closed(L, 0, 0, n);
    if (top < 0 || (c.loop_independent && L > loop_cap)) break;
    for (int m = 0; m <= top; ++m) c.sectors.emplace_back(L, m);
  }
  c.superrenormalizable = true;
  for (const auto& [L, m] : c.sectors)
    if (L > 1 && m > 0) c.superrenormalizable = false;
  return c;
}

std::vector<GraphSpec> enumerate_graphs(int n, int max_vertices, int max_internal) {
  std::vector<GraphSpec> out;
  GraphSpec g;
  g.n = n;
  const int valences = n - 2;  // 3..n
  std::vector<int> counts(valences, 0);

  std::function<void(int, int)> place = [&](int slot, int used) {
    if (slot == valences) {
      for (int vt = 0; used + vt <= max_vertices; ++vt) {
        if (used + vt == 0) continue;
        g.v.clear();
        int gauge_ends = 0;
        for (int i = 0; i < valences; ++i)
          if (counts[i]) {
            g.v[i + 3] = counts[i];
            gauge_ends += (i + 3) * counts[i];
          }
        g.vtilde = vt;
        for (int I = 0; I <= max_internal && 2 * I <= gauge_ends + vt; ++I)
          for (int It = 0; It <= max_internal && It <= vt; ++It) {
            g.I = I;
            g.Itilde = It;
            g.E = gauge_ends + vt - 2 * I;
            g.Etilde = 2 * vt - 2 * It;
            if (raw_loops(g) >= 0) out.push_back(g);
          }
      }
      return;
    }
    for (int c = 0; used + c <= max_vertices; ++c) {
      counts[slot] = c;
      place(slot + 1, used + c);
    }
    counts[slot] = 0;
  };
  place(0, 0);
  return out;
}

}  // namespace specact
