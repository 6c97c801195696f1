#include "specact/lie_expansion.hpp"

#include "specact/errors.hpp"

#include <optional>

namespace specact {

namespace {

// coeff * word(A_field)
struct Atom {
  Rat coeff{1};
  Word word;
  int field = 0;
};

// coeff * [x, y]
struct Commutator {
  Rat coeff{1};
  Atom x;
  Atom y;
};

// A Lie-algebra valued expression split by order in A. The order-zero part
// is either absent or a multiple of one background curvature component.
struct Expansion {
  std::optional<Letter> background;  // an AdF letter naming F_{ij}
  Rat background_coeff{1};
  std::vector<Atom> linear;
  std::vector<Commutator> quadratic;
};

Atom with_prefix(Atom a, const Letter& l) {
  a.word.insert(a.word.begin(), l);
  return a;
}

// F_{ab}(B + A) = F_{ab} + (D_a A_b - D_b A_a) + [A_a, A_b]
Expansion curvature(int a, int b) {
  Expansion e;
  e.background = Letter::adf(a, b);
  e.linear = {{Rat(1), {Letter::nabla(a)}, b}, {Rat(-1), {Letter::nabla(b)}, a}};
  e.quadratic = {{Rat(1), {Rat(1), {}, a}, {Rat(1), {}, b}}};
  return e;
}

// D_k X = nabla_k X + [A_k, X]; the background part is covariantly constant.
Expansion covariant(int k, const Expansion& x) {
  Expansion out;
  const Letter d = Letter::nabla(k);
  for (const auto& a : x.linear) out.linear.push_back(with_prefix(a, d));
  if (x.background) {
    // [A_k, c F] = -c adF(A_k)
    out.linear.push_back({-x.background_coeff, {*x.background}, k});
  }
  for (const auto& c : x.quadratic) {
    out.quadratic.push_back({c.coeff, with_prefix(c.x, d), c.y});
    out.quadratic.push_back({c.coeff, c.x, with_prefix(c.y, d)});
  }
  for (const auto& a : x.linear) out.quadratic.push_back({Rat(1), {Rat(1), {}, k}, a});
  return out;
}

// integral tr (x)(y) as an operator term between the two fields.
OperatorTerm pair_term(const Atom& x, const Atom& y, const Rat& c) {
  OperatorTerm t;
  Rat coeff = c * x.coeff * y.coeff;
  if (x.word.size() % 2) coeff = -coeff;
  t.coeff = Poly(coeff);
  t.outer = {x.field, y.field};
  t.letters.assign(x.word.rbegin(), x.word.rend());
  t.letters.insert(t.letters.end(), y.word.begin(), y.word.end());
  return t;
}

// Quadratic part of c * integral tr(X Y).
void trace_product(const Expansion& X, const Expansion& Y, const Rat& c,
                   std::vector<OperatorTerm>& out) {
  for (const auto& x : X.linear)
    for (const auto& y : Y.linear) out.push_back(pair_term(x, y, c));
  // tr(F [x, y]) = tr((adF x) y), and tr([x, y] F) is the same by cyclicity.
  auto background_with = [&](const Expansion& bg, const Expansion& q) {
    if (!bg.background) return;
    for (const auto& cm : q.quadratic)
      out.push_back(pair_term(with_prefix(cm.x, *bg.background), cm.y,
                              c * bg.background_coeff * cm.coeff));
  };
  background_with(X, Y);
  background_with(Y, X);
}

// Quadratic part of c * integral tr(X [Y, Z]) with covariantly constant,
// hence mutually commuting, background parts.
void trace_commutator(const Expansion& X, const Expansion& Y, const Expansion& Z, const Rat& c,
                      std::vector<OperatorTerm>& out) {
  // tr(L1 [L2, F]) = tr((adF L1) L2)
  if (Z.background)
    for (const auto& x : X.linear)
      for (const auto& y : Y.linear)
        out.push_back(pair_term(with_prefix(x, *Z.background), y, c * Z.background_coeff));
  // tr(L1 [F, L3]) = tr(L1 (adF L3))
  if (Y.background)
    for (const auto& x : X.linear)
      for (const auto& z : Z.linear)
        out.push_back(pair_term(x, with_prefix(z, *Y.background), c * Y.background_coeff));
  // tr(F [L2, L3]) = tr((adF L2) L3)
  if (X.background)
    for (const auto& y : Y.linear)
      for (const auto& z : Z.linear)
        out.push_back(pair_term(with_prefix(y, *X.background), z, c * X.background_coeff));
}

QuadraticForm gauge_form(std::vector<OperatorTerm> terms) {
  QuadraticForm q;
  q.kind = FormKind::Gauge;
  q.terms = std::move(terms);
  return q;
}

enum : int { kA = 0, kB = 1, kC = 2, kK = 3 };

}  // namespace

QuadraticForm expand_invariant(Basis b) {
  std::vector<OperatorTerm> out;
  switch (b) {
    case Basis::Vol:
      break;
    case Basis::B1:
      trace_product(curvature(kA, kB), curvature(kA, kB), Rat(1), out);
      break;
    case Basis::B2:
      trace_product(covariant(kA, curvature(kA, kB)), covariant(kC, curvature(kC, kB)), Rat(1), out);
      break;
    case Basis::B3:
      trace_product(covariant(kK, curvature(kA, kB)), covariant(kK, curvature(kA, kB)), Rat(1), out);
      break;
    case Basis::B4:
      trace_product(curvature(kA, kB), covariant(kK, covariant(kK, curvature(kA, kB))), Rat(1), out);
      break;
    case Basis::B5:
      // tr F_ab F_bc F_ca = 1/2 tr F_ab [F_bc, F_ca]
      trace_commutator(curvature(kA, kB), curvature(kB, kC), curvature(kC, kA), Rat(1, 2), out);
      break;
  }
  return gauge_form(std::move(out));
}

QuadraticForm expand_quadratic(const InvariantPolynomial& action) {
  QuadraticForm q;
  bool first = true;
  for (const auto& [b, c] : action.coeffs()) {
    if (b == Basis::Vol) continue;
    if (!first && c.pi_power != q.pi_power)
      throw UnsupportedExact("expand_quadratic: coefficients carry different powers of pi");
    first = false;
    QuadraticForm part = expand_invariant(b).scaled(c.coeff);
    part.pi_power = c.pi_power;
    q += part;
    q.pi_power = c.pi_power;
  }
  return q;
}

QuadraticForm gauge_fixing_box() {
  std::vector<OperatorTerm> out;
  Atom div{Rat(1), {Letter::nabla(kA)}, kA};
  Atom box_div{Rat(-1), {Letter::nabla(kK), Letter::nabla(kK), Letter::nabla(kB)}, kB};
  out.push_back(pair_term(div, box_div, Rat(-1, 2)));
  return gauge_form(std::move(out));
}

QuadraticForm gauge_fixing_mass() {
  std::vector<OperatorTerm> out;
  out.push_back(pair_term({Rat(1), {Letter::nabla(kA)}, kA}, {Rat(1), {Letter::nabla(kB)}, kB},
                          Rat(-1, 2)));
  return gauge_form(std::move(out));
}

QuadraticForm ghost_action() {
  QuadraticForm q;
  q.kind = FormKind::Ghost;
  const std::vector<int> scalar{kScalarSlot, kScalarSlot};
  q.terms.push_back({Poly(Rat(-1)), scalar,
                     {Letter::nabla(kA), Letter::nabla(kA), Letter::nabla(kB), Letter::nabla(kB)}});
  q.terms.push_back({Poly::variable(Var::Lambda2), scalar, {Letter::nabla(kA), Letter::nabla(kA)}});
  return q;
}

QuadraticForm action_div_f_squared() {
  QuadraticForm q = expand_invariant(Basis::B2).scaled(Poly(Rat(-1, 2)));
  q += gauge_fixing_box();
  return q;
}

QuadraticForm action_f_box_f() {
  QuadraticForm q = expand_invariant(Basis::B4).scaled(Poly(Rat(1, 4)));
  q += gauge_fixing_box();
  return q;
}

QuadraticForm action_f_cubed() { return expand_invariant(Basis::B5).scaled(Poly(Rat(-1, 3))); }

QuadraticForm action_higher_derivative_ym() {
  const Poly lambda2 = Poly::variable(Var::Lambda2);
  QuadraticForm q = action_div_f_squared();
  q += action_f_cubed().scaled(Poly::variable(Var::Gamma));
  q += expand_invariant(Basis::B1).scaled(lambda2 * Rat(-1, 4));
  q += gauge_fixing_mass().scaled(lambda2);
  return q;
}

QuadraticForm linearised_fdeltaf(int j) {
  if (j < 0) throw std::invalid_argument("linearised_fdeltaf: j must be non-negative");
  std::vector<Atom> fhat = {{Rat(1), {Letter::nabla(kA)}, kB}, {Rat(-1), {Letter::nabla(kB)}, kA}};
  std::vector<OperatorTerm> out;
  for (const auto& x : fhat)
    for (Atom y : fhat) {
      // Delta^j = (-1)^j (nabla_k nabla_k)^j with a fresh index per factor.
      for (int f = 0; f < j; ++f) {
        const int idx = kK + f;
        y.word.insert(y.word.begin(), {Letter::nabla(idx), Letter::nabla(idx)});
      }
      if (j % 2) y.coeff = -y.coeff;
      out.push_back(pair_term(x, y, Rat(1)));
    }
  return gauge_form(std::move(out));
}

}  // namespace specact
