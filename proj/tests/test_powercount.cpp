#include "doctest.h"
#include "specact/errors.hpp"
#include "specact/powercount.hpp"

#include <functional>
#include <set>

using namespace specact;

namespace {

GraphSpec graph(int n, int I, int E, std::map<int, int> v) {
  GraphSpec g;
  g.n = n;
  g.I = I;
  g.E = E;
  g.v = std::move(v);
  return g;
}

// Every single-count change of a valid graph, each by +1 and -1.
std::vector<GraphSpec> single_mutations(const GraphSpec& g) {
  std::vector<GraphSpec> out;
  for (int delta : {-1, 1}) {
    for (int GraphSpec::*field : {&GraphSpec::I, &GraphSpec::Itilde, &GraphSpec::E,
                                  &GraphSpec::Etilde, &GraphSpec::vtilde}) {
      GraphSpec m = g;
      m.*field += delta;
      out.push_back(m);
    }
    for (const auto& [valence, count] : g.v) {
      GraphSpec m = g;
      m.v[valence] = count + delta;
      out.push_back(m);
    }
    GraphSpec m = g;
    m.n += delta;
    out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_CASE("loop numbers from the Euler formula") {
  CHECK(loops(graph(8, 2, 2, {{3, 2}})) == 1);
  CHECK(loops(graph(8, 1, 2, {{4, 1}})) == 1);
  CHECK(loops(graph(8, 0, 3, {{3, 1}})) == 0);
}

TEST_CASE("degree of divergence") {
  CHECK(omega(graph(8, 2, 2, {{3, 2}})) == 2);
  CHECK(omega(graph(8, 1, 2, {{4, 1}})) == 2);
  CHECK(omega(graph(8, 4, 2, {{3, 2}, {4, 1}})) == -2);
  CHECK(omega_closed(1, 2, 0, 8) == 2);
  CHECK(omega_closed(1, 2, 0, 12) == 2);
  CHECK(omega_closed(2, 2, 0, 8) == -2);
  CHECK(omega_closed(1, 4, 0, 8) == 0);
  CHECK(omega_closed(1, 2, 2, 8) == 0);

  const auto two_loop_vacuum = analyze(graph(8, 3, 0, {{3, 2}}));
  CHECK(two_loop_vacuum.L == 2);
  CHECK(two_loop_vacuum.omega_bound == 0);
  CHECK(two_loop_vacuum.vacuum);

  const auto tree = analyze(graph(8, 0, 3, {{3, 1}}));
  CHECK(tree.L == 0);
  CHECK_FALSE(tree.divergent);
  CHECK(analyze(graph(8, 1, 2, {{4, 1}})).divergent);
}

TEST_CASE("malformed graphs are rejected") {
  CHECK_THROWS_AS(validate(graph(8, 1, 2, {{9, 1}})), MalformedInput);
  CHECK_THROWS_AS(validate(graph(8, 1, 2, {{2, 1}})), MalformedInput);
  CHECK_THROWS_AS(validate(graph(7, 1, 2, {{4, 1}})), MalformedInput);
  CHECK_THROWS_AS(validate(graph(8, 3, 1, {{3, 2}})), MalformedInput);

  GraphSpec ghost_loop;  // gauge line closing a ghost loop with two ghost-ghost-gauge vertices
  ghost_loop.n = 8;
  ghost_loop.Itilde = 2;
  ghost_loop.E = 2;
  ghost_loop.vtilde = 2;
  CHECK_NOTHROW(validate(ghost_loop));
  CHECK(loops(ghost_loop) == 1);

  for (const GraphSpec& g : {graph(8, 2, 2, {{3, 2}}), graph(8, 4, 2, {{3, 2}, {4, 1}}), ghost_loop})
    for (const GraphSpec& m : single_mutations(g)) CHECK_THROWS_AS(validate(m), MalformedInput);
}

TEST_CASE("classification of divergent sectors") {
  const auto c8 = classify_divergences(8);
  // the two-loop vacuum sector sits exactly on the bound
  CHECK(c8.sectors == std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 0}});
  CHECK(c8.superrenormalizable);
  const auto c10 = classify_divergences(10);
  CHECK(c10.sectors == std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}});
  CHECK(c10.superrenormalizable);

  const auto c6 = classify_divergences(6);
  int max_loops = 0;
  for (auto [L, m] : c6.sectors) max_loops = std::max(max_loops, L);
  // (4 - 6)(L - 1) + 4 - m >= 0 still admits the vacuum sector at three loops
  CHECK(max_loops == 3);
  CHECK(std::count(c6.sectors.begin(), c6.sectors.end(), std::pair{3, 0}) == 1);
  CHECK(std::count(c6.sectors.begin(), c6.sectors.end(), std::pair{2, 2}) == 1);
  CHECK_FALSE(c6.superrenormalizable);

  const auto c4 = classify_divergences(4, 5);
  CHECK(c4.loop_independent);
  CHECK_FALSE(c4.superrenormalizable);
  for (int L = 1; L <= 5; ++L)
    for (int m = 0; m <= 4; ++m)
      CHECK(std::count(c4.sectors.begin(), c4.sectors.end(), std::pair{L, m}) == 1);
}

TEST_CASE("bound against the closed form on all small graphs") {
  for (int n : {6, 8, 10}) {
    const auto graphs = enumerate_graphs(n, 4, 8);
    CHECK(!graphs.empty());
    for (const auto& g : graphs) {
      const auto r = analyze(g);
      CHECK(r.omega_bound <= r.omega_closed);
      if (n >= 8 && r.L >= 2) {
        if (r.vacuum)
          CHECK(r.omega_bound <= (n == 8 ? 0 : -1));
        else
          CHECK(r.omega_bound < 0);
      }
    }
  }
}
