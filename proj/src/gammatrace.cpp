#include "specact/gammatrace.hpp"

#include "specact/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace specact {

namespace {

using LabelPairs = std::vector<std::pair<std::string, std::string>>;

// Pairings of positions [first, n) in recursion order, each with sign
// (-1)^{j-1} for pairing the head with the j-th remaining element.
void expand(std::vector<int>& rest, Pairing& current, Rat sign, std::vector<MetricTerm>& out) {
  if (rest.empty()) {
    Pairing p = current;
    std::sort(p.begin(), p.end());
    out.push_back({sign * Rat(kSpinorDim), std::move(p)});
    return;
  }
  const int head = rest.front();
  for (std::size_t j = 1; j < rest.size(); ++j) {
    std::vector<int> next;
    for (std::size_t i = 1; i < rest.size(); ++i)
      if (i != j) next.push_back(rest[i]);
    current.emplace_back(head, rest[j]);
    expand(next, current, (j % 2) ? sign : -sign, out);
    current.pop_back();
  }
}

}  // namespace

MetricMonomialSum trace_gammas(const std::vector<std::string>& labels) {
  MetricMonomialSum s;
  s.labels = labels;
  if (labels.size() % 2) return s;
  std::vector<int> pos(labels.size());
  std::iota(pos.begin(), pos.end(), 0);
  Pairing current;
  expand(pos, current, Rat(1), s.terms);
  if (labels.empty()) s.terms = {{Rat(kSpinorDim), {}}};
  return s;
}

std::map<LabelPairs, Rat> MetricMonomialSum::by_labels() const {
  std::map<LabelPairs, Rat> out;
  for (const auto& t : terms) {
    LabelPairs key;
    for (auto [i, j] : t.pairing) {
      auto a = labels[i], b = labels[j];
      if (b < a) std::swap(a, b);
      key.emplace_back(a, b);
    }
    std::sort(key.begin(), key.end());
    auto& c = out[key];
    c += t.coeff;
    if (c.is_zero()) out.erase(key);
  }
  return out;
}

std::map<LabelPairs, Rat> MetricMonomialSum::contract_repeated() const {
  // Positions sharing a label are joined by a contraction; metric factors
  // join their two positions. Closed loops give the dimension, open chains
  // a metric between their free ends.
  std::map<std::string, std::vector<int>> where;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) where[labels[i]].push_back(i);
  for (const auto& [l, ps] : where)
    if (ps.size() > 2) throw MalformedInput("label '" + l + "' appears more than twice");

  std::map<LabelPairs, Rat> out;
  for (const auto& t : terms) {
    std::vector<int> metric_partner(labels.size());
    for (auto [i, j] : t.pairing) {
      metric_partner[i] = j;
      metric_partner[j] = i;
    }
    auto label_partner = [&](int i) {
      const auto& ps = where[labels[i]];
      if (ps.size() < 2) return -1;
      return ps[0] == i ? ps[1] : ps[0];
    };
    std::vector<bool> seen(labels.size(), false);
    Rat factor = t.coeff;
    LabelPairs key;
    // Open chains start at a free position.
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
      if (seen[i] || label_partner(i) != -1) continue;
      int cur = i;
      while (true) {
        seen[cur] = true;
        int m = metric_partner[cur];
        seen[m] = true;
        int nxt = label_partner(m);
        if (nxt == -1) {
          auto a = labels[i], b = labels[m];
          if (b < a) std::swap(a, b);
          key.emplace_back(a, b);
          break;
        }
        cur = nxt;
      }
    }
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
      if (seen[i]) continue;
      int cur = i;
      while (!seen[cur]) {
        seen[cur] = true;
        int m = metric_partner[cur];
        seen[m] = true;
        cur = label_partner(m);
      }
      factor *= Rat(4);
    }
    std::sort(key.begin(), key.end());
    auto& c = out[key];
    c += factor;
    if (c.is_zero()) out.erase(key);
  }
  return out;
}

std::string MetricMonomialSum::str() const {
  auto m = by_labels();
  if (m.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : m) {
    Rat coef = c;
    if (!first) {
      os << (coef.sign() < 0 ? " - " : " + ");
      if (coef.sign() < 0) coef = -coef;
    }
    first = false;
    os << coef.str();
    for (const auto& [a, b] : key) os << "*g(" << a << "," << b << ")";
  }
  return os.str();
}

namespace {

// Rotates to the smallest slot first, then orients towards the smaller
// neighbour; each reversal of a length-p cycle costs (-1)^p.
std::pair<std::vector<int>, int> canonical_cycle(std::vector<int> c) {
  std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  int sign = 1;
  if (c.size() >= 3 && c[1] > c.back()) {
    std::reverse(c.begin() + 1, c.end());
    if (c.size() % 2) sign = -1;
  }
  return {c, sign};
}

}  // namespace

std::map<CycleProduct, Rat> contract_slots(const MetricMonomialSum& trace,
                                           const std::vector<FSlot>& slots) {
  // label -> (slot index, 0 for the first index, 1 for the second)
  std::map<std::string, std::pair<int, int>> slot_of;
  for (int s = 0; s < static_cast<int>(slots.size()); ++s) {
    for (int side = 0; side < 2; ++side) {
      const auto& l = side ? slots[s].b : slots[s].a;
      if (!slot_of.emplace(l, std::make_pair(s, side)).second)
        throw MalformedInput("label '" + l + "' used by two curvature slots");
    }
  }
  std::map<std::string, int> pos_of;
  for (int i = 0; i < static_cast<int>(trace.labels.size()); ++i) {
    const auto& l = trace.labels[i];
    if (!slot_of.count(l)) throw MalformedInput("trace label '" + l + "' is not in any slot");
    if (!pos_of.emplace(l, i).second) throw MalformedInput("trace label '" + l + "' repeated");
  }
  if (pos_of.size() != slot_of.size()) throw MalformedInput("slot label missing from the trace");

  std::map<CycleProduct, Rat> out;
  for (const auto& t : trace.terms) {
    std::vector<int> partner(trace.labels.size());
    for (auto [i, j] : t.pairing) {
      partner[i] = j;
      partner[j] = i;
    }
    std::vector<bool> used(slots.size(), false);
    CycleProduct cycles;
    int sign = 1;
    bool vanishes = false;
    for (int s0 = 0; s0 < static_cast<int>(slots.size()) && !vanishes; ++s0) {
      if (used[s0]) continue;
      // Enter slot s0 through its first index, leave through the second.
      std::vector<int> cycle;
      int s = s0, out_side = 1;
      while (true) {
        used[s] = true;
        cycle.push_back(s);
        if (out_side == 0) sign = -sign;  // traversed as F_{ba}
        const auto& leave = out_side ? slots[s].b : slots[s].a;
        const auto& arrive = trace.labels[partner[pos_of[leave]]];
        auto [ns, in_side] = slot_of[arrive];
        if (ns == s0) {
          // Closing back on the entry index: consistent only through side 0.
          if (in_side != 0) {
            // entered s0 at side 0 yet arrive at its side 1: the walk would
            // have to reuse an index, impossible for a perfect matching.
            vanishes = true;
          }
          break;
        }
        if (used[ns]) {
          vanishes = true;
          break;
        }
        s = ns;
        out_side = 1 - in_side;
      }
      if (cycle.size() == 1) vanishes = true;  // g^{ab} F_{ab}
      if (vanishes) break;
      auto [canon, csign] = canonical_cycle(cycle);
      sign *= csign;
      cycles.push_back(std::move(canon));
    }
    if (vanishes) continue;
    std::sort(cycles.begin(), cycles.end());
    auto& c = out[cycles];
    c += Rat(sign) * t.coeff;
    if (c.is_zero()) out.erase(cycles);
  }
  return out;
}

InvariantPolynomial cycles_to_invariants(const std::map<CycleProduct, Rat>& cycles,
                                         const std::vector<FSlot>& slots) {
  InvariantPolynomial out;
  int boxed = 0;
  for (const auto& s : slots) boxed += s.boxed;
  for (const auto& [prod, c] : cycles) {
    if (prod.size() != 1) throw UnsupportedExact("product of several traces is outside the basis");
    const auto& cyc = prod.front();
    if (cyc.size() == 2 && boxed == 0) {
      out.add(Basis::B1, to_pipoly(PiScaled(-c, 0)));  // F_{ab} F_{ba} = -F.F
    } else if (cyc.size() == 2 && boxed == 1) {
      out.add(Basis::B4, to_pipoly(PiScaled(-c, 0)));
    } else if (cyc.size() == 3 && boxed == 0) {
      out.add(Basis::B5, to_pipoly(PiScaled(c, 0)));
    } else {
      throw UnsupportedExact("contraction shape is outside the invariant basis");
    }
  }
  return out;
}

InvariantPolynomial tr_E_power(int power, bool box) {
  if (power < 1 || power > 3) throw std::invalid_argument("tr_E_power: power must be 1, 2 or 3");
  if (box && power != 2) throw std::invalid_argument("tr_E_power: box only with power 2");
  std::vector<std::string> labels;
  std::vector<FSlot> slots;
  for (int s = 0; s < power; ++s) {
    std::string a = "a" + std::to_string(s), b = "b" + std::to_string(s);
    labels.push_back(a);
    labels.push_back(b);
    slots.push_back({s, a, b, box && s == power - 1});
  }
  auto cycles = contract_slots(trace_gammas(labels), slots);
  Rat prefactor = Rat(kEndomorphismSign, 2).pow(power);
  for (auto& [k, c] : cycles) c *= prefactor;
  if (power == 1) return {};
  return cycles_to_invariants(cycles, slots);
}

}  // namespace specact
