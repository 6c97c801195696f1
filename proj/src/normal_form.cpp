#include "specact/normal_form.hpp"

#include "specact/errors.hpp"

#include <algorithm>

namespace specact {

void accumulate(NormalForm& into, const NormalForm& from, const Poly& scale) {
  for (const auto& [key, c] : from) {
    Poly add = c * scale;
    if (add.is_zero()) continue;
    auto& slot = into[key];
    slot += add;
    if (slot.is_zero()) into.erase(key);
  }
}

NormalForm difference(const NormalForm& a, const NormalForm& b) {
  NormalForm r = a;
  accumulate(r, b, Poly(Rat(-1)));
  return r;
}

NormalForm layer(const NormalForm& nf, int order) {
  NormalForm r;
  for (const auto& [key, c] : nf)
    if (key.order() == order) r.emplace(key, c);
  return r;
}

NormalForm at_zero_curvature(const NormalForm& nf) {
  NormalForm r;
  for (const auto& [key, c] : nf) {
    Poly z = c.at_zero_curvature();
    if (!z.is_zero()) r.emplace(key, std::move(z));
  }
  return r;
}

NormalForm substitute(const NormalForm& nf, Var v, const Rat& value) {
  NormalForm r;
  for (const auto& [key, c] : nf) {
    Poly z = c.substitute(v, value);
    if (!z.is_zero()) r.emplace(key, std::move(z));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Rewriting concrete words

WeylRewriter::WeylRewriter(std::uint64_t seed) : randomized_(true), rng_(seed) {}

namespace {

NablaCounts counts_of(const WeylRewriter::ConcreteWord& w) {
  NablaCounts c{};
  for (auto x : w) ++c[x];
  return c;
}

WeylRewriter::ConcreteWord sorted_word(const NablaCounts& m) {
  WeylRewriter::ConcreteWord w;
  for (std::uint8_t d = 0; d < 4; ++d) w.insert(w.end(), m[d], d);
  return w;
}

template <class K>
void add_into(std::map<K, Poly>& into, const K& key, const Poly& c) {
  if (c.is_zero()) return;
  auto& slot = into[key];
  slot += c;
  if (slot.is_zero()) into.erase(key);
}

}  // namespace

std::map<WeylRewriter::ConcreteWord, Poly> WeylRewriter::sorted_form(const ConcreteWord& word) {
  std::vector<std::size_t> inversions;
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] > word[i + 1]) inversions.push_back(i);
  if (inversions.empty()) return {{word, Poly(Rat(1))}};

  if (!randomized_) {
    auto it = sorted_memo_.find(word);
    if (it != sorted_memo_.end()) return it->second;
  }
  std::size_t i = inversions.front();
  if (randomized_) i = inversions[std::uniform_int_distribution<std::size_t>(0, inversions.size() - 1)(rng_)];

  // nabla_a nabla_b = nabla_b nabla_a + adF_ab, and adF_ab is central here.
  ConcreteWord swapped = word;
  std::swap(swapped[i], swapped[i + 1]);
  ConcreteWord shorter;
  for (std::size_t j = 0; j < word.size(); ++j)
    if (j != i && j != i + 1) shorter.push_back(word[j]);
  const Poly f = Poly::curvature(word[i], word[i + 1]);

  std::map<ConcreteWord, Poly> out = sorted_form(swapped);
  for (const auto& [w, c] : sorted_form(shorter)) add_into(out, w, c * f);
  if (!randomized_) sorted_memo_.emplace(word, out);
  return out;
}

std::map<NablaCounts, Poly> WeylRewriter::sorted_to_weyl(const NablaCounts& m) {
  const int n = m[0] + m[1] + m[2] + m[3];
  if (n <= 1) return {{m, Poly(Rat(1))}};
  if (!randomized_) {
    auto it = weyl_memo_.find(m);
    if (it != weyl_memo_.end()) return it->second;
  }
  // Weyl(m) is the average of all arrangements of m. Each arrangement equals
  // sorted(m) plus lower-order sorted words, so
  //   sorted(m) = Weyl(m) - average(arrangement - sorted(m)).
  ConcreteWord arrangement = sorted_word(m);
  std::map<ConcreteWord, Poly> lower;
  long count = 0;
  do {
    ++count;
    for (const auto& [w, c] : sorted_form(arrangement))
      if (static_cast<int>(w.size()) < n) add_into(lower, w, c);
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));

  std::map<NablaCounts, Poly> out{{m, Poly(Rat(1))}};
  const Rat scale(-1, count);
  for (const auto& [w, c] : lower)
    for (const auto& [mm, cc] : sorted_to_weyl(counts_of(w))) add_into(out, mm, c * cc * scale);
  if (!randomized_) weyl_memo_.emplace(m, out);
  return out;
}

std::map<NablaCounts, Poly> WeylRewriter::weyl_form(const ConcreteWord& word) {
  std::map<NablaCounts, Poly> out;
  for (const auto& [w, c] : sorted_form(word))
    for (const auto& [m, cc] : sorted_to_weyl(counts_of(w))) add_into(out, m, c * cc);
  return out;
}

// ---------------------------------------------------------------------------
// Operators

NormalForm normal_form(const std::vector<OperatorTerm>& terms, WeylRewriter& rw) {
  NormalForm nf;
  for (const auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    const std::vector<int> ids = t.indices();
    const int max_id = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end());
    std::vector<int> value(max_id + 1, 0);
    const std::size_t n = ids.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 4;

    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i) {
        value[ids[i]] = static_cast<int>(c % 4);
        c /= 4;
      }
      Poly f = t.coeff;
      WeylRewriter::ConcreteWord word;
      bool zero = false;
      for (const auto& l : t.letters) {
        if (l.kind == Letter::Kind::AdF) {
          const int a = value[l.i], b = value[l.j];
          if (a == b) {
            zero = true;
            break;
          }
          f = f * Poly::curvature(a, b);
        } else {
          word.push_back(static_cast<std::uint8_t>(value[l.i]));
        }
      }
      if (zero) continue;
      NFKey key;
      for (int o : t.outer) key.outer.push_back(o == kScalarSlot ? kScalarSlot : value[o]);
      for (const auto& [m, cc] : rw.weyl_form(word)) {
        key.nablas = m;
        add_into(nf, key, f * cc);
      }
    }
  }
  return nf;
}

NormalForm normal_form(const std::vector<OperatorTerm>& terms) {
  WeylRewriter rw;
  return normal_form(terms, rw);
}

NormalForm operator_normal_form(const QuadraticForm& q, WeylRewriter& rw) {
  switch (q.kind) {
    case FormKind::Gauge: {
      std::vector<OperatorTerm> both;
      for (const auto& t : q.terms) {
        both.push_back(t);
        both.push_back(transpose(t));
      }
      NormalForm nf = normal_form(both, rw);
      NormalForm out;
      accumulate(out, nf, Poly(Rat(-1)));
      return out;
    }
    case FormKind::Ghost: {
      NormalForm out;
      accumulate(out, normal_form(q.terms, rw), Poly(Rat(-1)));
      return out;
    }
    case FormKind::Operator:
      return normal_form(q.terms, rw);
  }
  return {};
}

NormalForm operator_normal_form(const QuadraticForm& q) {
  WeylRewriter rw;
  return operator_normal_form(q, rw);
}

QuadraticForm leading_term(int k, bool scalar) {
  QuadraticForm q;
  q.kind = FormKind::Operator;
  q.k = k;
  OperatorTerm t;
  t.coeff = Poly(Rat(k % 2 ? -1 : 1));
  t.outer = scalar ? std::vector<int>{kScalarSlot, kScalarSlot} : std::vector<int>{0, 0};
  for (int f = 0; f < k; ++f) {
    t.letters.push_back(Letter::nabla(1 + f));
    t.letters.push_back(Letter::nabla(1 + f));
  }
  q.terms.push_back(std::move(t));
  return q;
}

LaplacianLayers extract_p2_p4(const NormalForm& op, bool scalar) {
  LaplacianLayers out;
  out.k = 2;
  out.scalar = scalar;
  // A pure perturbation (no four-derivative layer) is read off as is, so its
  // layers add linearly to those of a full operator.
  const bool has_top = !layer(op, 4).empty();
  const NormalForm rest =
      has_top ? difference(op, operator_normal_form(leading_term(2, scalar))) : op;
  out.leading_matches = has_top;
  for (const auto& [key, c] : rest) {
    const int order = key.order();
    if (order == 2)
      out.p2.emplace(key, c);
    else if (order == 0)
      out.p4.emplace(key, c);
    else {
      if (order == 4) out.leading_matches = false;
      out.other.emplace(key, c);
    }
  }
  return out;
}

LaplacianLayers extract_p2_p4(const QuadraticForm& q) {
  if (q.k != 2) throw UnsupportedExact("p2/p4 extraction is implemented for fourth-order operators");
  const bool scalar = q.kind == FormKind::Ghost;
  return extract_p2_p4(operator_normal_form(q), scalar);
}

// ---------------------------------------------------------------------------
// Readable structures

namespace structures {

namespace {

enum : int { kMu = 0, kNu = 1, kA = 2, kB = 3, kK = 4, kL = 5 };

QuadraticForm op(std::vector<OperatorTerm> terms) {
  QuadraticForm q;
  q.kind = FormKind::Operator;
  q.terms = std::move(terms);
  return q;
}

std::vector<int> outer_pair(bool diagonal, bool scalar) {
  if (scalar) return {kScalarSlot, kScalarSlot};
  return diagonal ? std::vector<int>{kMu, kMu} : std::vector<int>{kMu, kNu};
}

const Letter D(int i) { return Letter::nabla(i); }
const Letter F(int i, int j) { return Letter::adf(i, j); }

}  // namespace

QuadraticForm p2_f_g() { return op({{Poly(Rat(1)), {kMu, kNu}, {F(kMu, kNu), D(kA), D(kA)}}}); }

QuadraticForm p2_fmu_g() {
  return op({{Poly(Rat(1)), {kMu, kNu}, {F(kMu, kB), D(kNu), D(kB)}},
             {Poly(Rat(1)), {kMu, kNu}, {F(kMu, kA), D(kA), D(kNu)}}});
}

QuadraticForm p2_fnu_g() {
  return op({{Poly(Rat(1)), {kMu, kNu}, {F(kNu, kB), D(kMu), D(kB)}},
             {Poly(Rat(1)), {kMu, kNu}, {F(kNu, kA), D(kA), D(kMu)}}});
}

QuadraticForm p2_g_g(bool scalar) {
  return op({{Poly(Rat(1)), outer_pair(true, scalar), {D(kA), D(kA)}}});
}

QuadraticForm p4_ff_g(bool scalar) {
  return op({{Poly(Rat(1)), outer_pair(true, scalar), {F(kK, kL), F(kK, kL)}}});
}

QuadraticForm p4_fmk_fnk() { return op({{Poly(Rat(1)), {kMu, kNu}, {F(kMu, kK), F(kNu, kK)}}}); }

QuadraticForm p4_f() { return op({{Poly(Rat(1)), {kMu, kNu}, {F(kMu, kNu)}}}); }

QuadraticForm p4_g(bool scalar) { return op({{Poly(Rat(1)), outer_pair(true, scalar), {}}}); }

}  // namespace structures

namespace {

// Splits a monomial into its curvature part and its parameter part.
std::pair<Monomial, Monomial> split_monomial(const Monomial& m) {
  Monomial f{}, p{};
  for (std::size_t i = 0; i < kVarCount; ++i) (i < kCurvatureVarCount ? f : p)[i] = m[i];
  return {f, p};
}

// Exact least-squares-free solve: returns a solution of A x = b or nullopt.
std::optional<std::vector<Rat>> solve(std::vector<std::vector<Rat>> rows, std::vector<Rat> rhs,
                                      std::size_t unknowns) {
  const std::size_t m = rows.size();
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < m; ++c) {
    std::size_t p = r;
    while (p < m && rows[p][c].is_zero()) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    const Rat inv = Rat(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    rhs[r] *= inv;
    for (std::size_t q = 0; q < m; ++q) {
      if (q == r || rows[q][c].is_zero()) continue;
      const Rat f = rows[q][c];
      for (std::size_t j = 0; j < unknowns; ++j) rows[q][j] -= f * rows[r][j];
      rhs[q] -= f * rhs[r];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t q = r; q < m; ++q)
    if (!rhs[q].is_zero()) return std::nullopt;
  std::vector<Rat> x(unknowns);
  for (std::size_t q = 0; q < r; ++q) x[pivot_col[q]] = rhs[q];
  return x;
}

}  // namespace

std::optional<std::vector<Poly>> decompose(const NormalForm& target,
                                           const std::vector<NormalForm>& basis) {
  using Row = std::pair<NFKey, Monomial>;
  // Parameter monomial -> (row -> value)
  std::map<Monomial, std::map<Row, Rat>> targets;
  for (const auto& [key, c] : target)
    for (const auto& [m, v] : c.terms()) {
      auto [f, p] = split_monomial(m);
      targets[p][{key, f}] += v;
    }
  std::map<Row, std::vector<Rat>> columns;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (const auto& [key, c] : basis[i])
      for (const auto& [m, v] : c.terms()) {
        auto [f, p] = split_monomial(m);
        if (p != Monomial{}) throw std::invalid_argument("decompose: basis carries parameters");
        auto& col = columns[{key, f}];
        col.resize(basis.size());
        col[i] += v;
      }

  std::vector<Poly> out(basis.size());
  for (const auto& [p, values] : targets) {
    std::map<Row, std::pair<std::vector<Rat>, Rat>> system;
    for (const auto& [row, col] : columns) system[row].first = col;
    for (const auto& [row, v] : values) system[row].second = v;
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;
    for (auto& [row, eq] : system) {
      eq.first.resize(basis.size());
      a.push_back(eq.first);
      b.push_back(eq.second);
    }
    auto x = solve(a, b, basis.size());
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < basis.size(); ++i) out[i] += Poly::monomial(p, (*x)[i]);
  }
  return out;
}

std::optional<StructureCoefficients> readable_structures(const LaplacianLayers& layers) {
  if (layers.scalar) {
    auto p2 = decompose(layers.p2, {operator_normal_form(structures::p2_g_g(true))});
    auto p4 = decompose(layers.p4, {operator_normal_form(structures::p4_ff_g(true)),
                                    operator_normal_form(structures::p4_g(true))});
    if (!p2 || !p4) return std::nullopt;
    return StructureCoefficients{*p2, *p4};
  }
  auto p2 = decompose(layers.p2, {operator_normal_form(structures::p2_f_g()),
                                  operator_normal_form(structures::p2_fmu_g()),
                                  operator_normal_form(structures::p2_fnu_g()),
                                  operator_normal_form(structures::p2_g_g())});
  auto p4 = decompose(layers.p4, {operator_normal_form(structures::p4_ff_g()),
                                  operator_normal_form(structures::p4_fmk_fnk()),
                                  operator_normal_form(structures::p4_f()),
                                  operator_normal_form(structures::p4_g())});
  if (!p2 || !p4) return std::nullopt;
  return StructureCoefficients{*p2, *p4};
}

// ---------------------------------------------------------------------------
// Commutation identities

bool check_commutation_identity(CommutationRelation relation, const Word& prefix,
                                const std::vector<int>& prefix_free) {
  constexpr int kOffset = 10;  // keeps prefix indices apart from the identity's own
  enum : int { m = 0, n = 1, k = 2, l = 3 };
  auto D = [](int i) { return Letter::nabla(i); };
  auto F = [](int i, int j) { return Letter::adf(i, j); };

  std::vector<int> free;
  std::vector<std::pair<Rat, Word>> lhs, rhs;
  switch (relation) {
    case CommutationRelation::A:
      // Delta nabla_m = nabla_m Delta + 2 adF_mk nabla_k
      free = {m};
      lhs = {{Rat(-1), {D(k), D(k), D(m)}}};
      rhs = {{Rat(-1), {D(m), D(k), D(k)}}, {Rat(2), {F(m, k), D(k)}}};
      break;
    case CommutationRelation::B:
      // nabla_m Delta nabla_n = nabla_n Delta nabla_m + adF_mn Delta
      //   + 2 adF_nk nabla_m nabla_k - 2 adF_mk nabla_n nabla_k
      free = {m, n};
      lhs = {{Rat(-1), {D(m), D(k), D(k), D(n)}}};
      rhs = {{Rat(-1), {D(n), D(k), D(k), D(m)}},
             {Rat(-1), {F(m, n), D(k), D(k)}},
             {Rat(2), {F(n, k), D(m), D(k)}},
             {Rat(-2), {F(m, k), D(n), D(k)}}};
      break;
    case CommutationRelation::C:
      // -nabla_m Delta nabla_m = Delta^2 - adF_mk adF_mk
      lhs = {{Rat(1), {D(m), D(k), D(k), D(m)}}};
      rhs = {{Rat(1), {D(k), D(k), D(l), D(l)}}, {Rat(-1), {F(m, k), F(m, k)}}};
      break;
  }

  Word shifted_prefix = prefix;
  for (auto& letter : shifted_prefix) {
    letter.i += kOffset;
    if (letter.kind == Letter::Kind::AdF) letter.j += kOffset;
  }
  std::vector<int> outer;
  for (int f : prefix_free) outer.push_back(f + kOffset);
  outer.insert(outer.end(), free.begin(), free.end());

  auto build = [&](const std::vector<std::pair<Rat, Word>>& side) {
    std::vector<OperatorTerm> terms;
    for (const auto& [c, w] : side) {
      OperatorTerm t;
      t.coeff = Poly(c);
      t.outer = outer;
      t.letters = shifted_prefix;
      t.letters.insert(t.letters.end(), w.begin(), w.end());
      check_contraction(t);
      terms.push_back(std::move(t));
    }
    return terms;
  };
  return normal_form(build(lhs)) == normal_form(build(rhs));
}

}  // namespace specact
