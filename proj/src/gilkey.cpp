#include "specact/gilkey.hpp"

#include "specact/errors.hpp"

#include <functional>

namespace specact {

namespace {

constexpr int kDim = 4;

const PiScaled kFourPiSquaredInv{Rat(1, 16), -2};  // (4 pi)^-2

Poly F(int a, int b) { return Poly::curvature(a, b); }
Rat delta(int a, int b) { return Rat(a == b ? 1 : 0); }

// sum_{kl} F_kl F_kl
Poly f_squared() {
  Poly s;
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) s += F(a, b) * F(a, b);
  return s;
}

// Calls fn for every assignment of `rank` slot values.
void for_each_slots(int rank, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> s(rank, 0);
  while (true) {
    fn(s);
    int i = 0;
    while (i < rank && ++s[i] == kDim) s[i++] = 0;
    if (i == rank) return;
  }
}

std::vector<std::string> standard_warnings(const HigherLaplacian& P) {
  std::vector<std::string> w;
  if (P.has_odd_terms) w.emplace_back("odd-order terms are present and do not enter a0, a2 or a4");
  if (P.k > 3) w.emplace_back("the S(delta^{k-2}) normalisation is only validated for k <= 3");
  return w;
}

}  // namespace

// ---------------------------------------------------------------------------

SlotTensor::SlotTensor(int fiber, int rank) : fiber_(fiber), rank_(rank) {
  std::size_t n = static_cast<std::size_t>(fiber) * fiber;
  for (int i = 0; i < rank; ++i) n *= kDim;
  data_.resize(n);
}

std::size_t SlotTensor::offset(int row, int col, const std::vector<int>& slots) const {
  if (static_cast<int>(slots.size()) != rank_ || row < 0 || col < 0 || row >= fiber_ ||
      col >= fiber_)
    throw std::out_of_range("SlotTensor: index shape mismatch");
  std::size_t o = static_cast<std::size_t>(row) * fiber_ + col;
  for (int s : slots) o = o * kDim + s;
  return o;
}

Poly& SlotTensor::at(int row, int col, const std::vector<int>& slots) {
  return data_[offset(row, col, slots)];
}

const Poly& SlotTensor::at(int row, int col, const std::vector<int>& slots) const {
  return data_[offset(row, col, slots)];
}

SlotTensor& SlotTensor::operator+=(const SlotTensor& o) {
  if (o.fiber_ != fiber_ || o.rank_ != rank_) throw std::invalid_argument("SlotTensor shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

// ---------------------------------------------------------------------------

HigherLaplacian HigherLaplacian::from_structures(int k, const P2Spec& s, bool scalar_only) {
  if (k < 1) throw MalformedInput("operator order k must be positive");
  HigherLaplacian P;
  P.k = k;
  P.scalar_only = scalar_only;
  const int n = P.fiber_rank();
  P.p2 = SlotTensor(n, 2);
  P.p4 = SlotTensor(n, std::max(0, 2 * k - 4));
  for (int m = 0; m < n; ++m)
    for (int v = 0; v < n; ++v)
      for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b) {
          Poly x = s.lambda * delta(a, b) * delta(m, v);
          if (!scalar_only) {
            x += s.a * F(m, v) * delta(a, b);
            x += s.b * (F(m, b) * delta(v, a) + F(m, a) * delta(v, b));
            x += s.c * (F(v, b) * delta(m, a) + F(v, a) * delta(m, b));
          }
          P.p2.at(m, v, {a, b}) = x;
        }
  return P;
}

namespace {

int fiber_index(int outer) { return outer == kScalarSlot ? 0 : outer; }

}  // namespace

HigherLaplacian HigherLaplacian::from_layers(const LaplacianLayers& layers) {
  if (layers.k != 2) throw UnsupportedExact("layers are only read for fourth-order operators");
  HigherLaplacian P = from_structures(2, {}, layers.scalar);
  for (const auto& [key, c] : layers.p2) {
    std::vector<int> dirs;
    for (int d = 0; d < kDim; ++d)
      for (int r = 0; r < key.nablas[d]; ++r) dirs.push_back(d);
    const int m = fiber_index(key.outer.at(0)), v = fiber_index(key.outer.at(1));
    if (dirs[0] == dirs[1]) {
      P.p2.at(m, v, {dirs[0], dirs[0]}) += c;
    } else {
      // the symmetrised product stands for both orders
      P.p2.at(m, v, {dirs[0], dirs[1]}) += c * Rat(1, 2);
      P.p2.at(m, v, {dirs[1], dirs[0]}) += c * Rat(1, 2);
    }
  }
  for (const auto& [key, c] : layers.p4)
    P.p4.at(fiber_index(key.outer.at(0)), fiber_index(key.outer.at(1))) += c;
  P.has_odd_terms = !layers.other.empty();
  return P;
}

HigherLaplacian& HigherLaplacian::with_p4_terms(const std::vector<OperatorTerm>& terms) {
  if (k != 2) throw MalformedInput("operator-term p4 is for k = 2");
  p4 = SlotTensor(fiber_rank(), 0);
  for (const auto& [key, c] : normal_form(terms)) {
    if (key.order() != 0) throw MalformedInput("p4 terms must not contain derivatives");
    if (key.outer.size() != 2) throw MalformedInput("p4 terms need two outer slots");
    const bool scalar_key = key.outer[0] == kScalarSlot;
    if (scalar_key != scalar_only) throw MalformedInput("p4 terms do not match the field type");
    p4.at(fiber_index(key.outer[0]), fiber_index(key.outer[1])) += c;
  }
  return *this;
}

HigherLaplacian& HigherLaplacian::with_k3_p4(const K3P4Spec& spec) {
  if (k != 3 || scalar_only) throw MalformedInput("the eight-structure p4 is for k = 3 vector operators");
  p4 = k3_p4_tensor(spec);
  return *this;
}

std::vector<OperatorTerm> p4_preset(const std::string& name) {
  auto scaled = [](const QuadraticForm& q, const Rat& s) {
    std::vector<OperatorTerm> out = q.terms;
    for (auto& t : out) t.coeff = t.coeff * s;
    return out;
  };
  auto join = [](std::vector<OperatorTerm> a, const std::vector<OperatorTerm>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  if (name == "none") return {};
  if (name == "S1") return scaled(structures::p4_fmk_fnk(), Rat(-4));
  if (name == "S2")
    return join(scaled(structures::p4_ff_g(), Rat(-3, 2)), scaled(structures::p4_fmk_fnk(), Rat(-1)));
  if (name == "S3")
    return join(scaled(structures::p4_ff_g(), Rat(1, 2)), scaled(structures::p4_fmk_fnk(), Rat(-1)));
  throw MalformedInput("unknown p4 preset '" + name + "' (expected S1, S2, S3 or none)");
}

// ---------------------------------------------------------------------------

const Poly& default_fiber() {
  static const Poly n2 = Poly::variable(Var::N2);
  return n2;
}

InvariantPolynomial fiber_trace(const Poly& p, const Poly& fiber) {
  Poly vol;
  std::array<Poly, kCurvatureVarCount> diagonal;
  for (const auto& [mono, c] : p.terms()) {
    Monomial params = mono;
    for (std::size_t i = 0; i < kCurvatureVarCount; ++i) params[i] = 0;
    const Poly coeff = Poly::monomial(params, c);
    switch (curvature_degree(mono)) {
      case 0:
        vol += coeff;
        break;
      case 1:
        break;  // adF is traceless
      case 2: {
        std::size_t var = kCurvatureVarCount;
        for (std::size_t i = 0; i < kCurvatureVarCount; ++i)
          if (mono[i] == 2) var = i;
        if (var == kCurvatureVarCount)
          throw DomainError("curvature trace is not a multiple of tr F^2: " + p.str());
        diagonal[var] += coeff;
        break;
      }
      default:
        throw UnsupportedExact("curvature traces above degree two are not on the basis");
    }
  }
  for (std::size_t i = 1; i < kCurvatureVarCount; ++i)
    if (!(diagonal[i] == diagonal[0]))
      throw DomainError("curvature trace is not rotation invariant: " + p.str());

  InvariantPolynomial out;
  out.add(Basis::Vol, PiPoly(vol * fiber, 0));
  // sum_{ab} F_ab F_ab = 2 sum_x F_x^2 is one unit of B1
  out.add(Basis::B1, PiPoly(diagonal[0] * Rat(1, 2), 0));
  return out;
}

InvariantPolynomial fiber_trace(const SlotTensor& t, const Poly& fiber) {
  if (t.rank() != 0) throw std::invalid_argument("fiber_trace needs a rank-0 tensor");
  Poly s;
  for (int m = 0; m < t.fiber(); ++m) s += t.at(m, m);
  return fiber_trace(s, fiber);
}

SlotTensor symmetric_contraction(const SlotTensor& t) {
  SlotTensor out(t.fiber(), 0);
  if (t.rank() % 2) return out;
  // all perfect matchings of the slots
  std::vector<std::vector<std::pair<int, int>>> matchings;
  std::vector<std::pair<int, int>> current;
  std::vector<bool> used(t.rank(), false);
  std::function<void()> match = [&] {
    int first = 0;
    while (first < t.rank() && used[first]) ++first;
    if (first == t.rank()) {
      matchings.push_back(current);
      return;
    }
    used[first] = true;
    for (int j = first + 1; j < t.rank(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      current.emplace_back(first, j);
      match();
      current.pop_back();
      used[j] = false;
    }
    used[first] = false;
  };
  match();

  for (int m = 0; m < t.fiber(); ++m)
    for (int v = 0; v < t.fiber(); ++v)
      for_each_slots(t.rank(), [&](const std::vector<int>& s) {
        int weight = 0;
        for (const auto& pairing : matchings) {
          bool ok = true;
          for (const auto& [i, j] : pairing) ok = ok && s[i] == s[j];
          weight += ok;
        }
        if (weight) out.at(m, v) += t.at(m, v, s) * Rat(weight);
      });
  return out;
}

Rat symmetric_delta_norm(int k) {
  if (k < 2) throw MalformedInput("S(delta^{k-2}) needs k >= 2");
  SlotTensor d(1, 2 * k - 4);
  for_each_slots(d.rank(), [&](const std::vector<int>& s) {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < s.size(); i += 2) ok = ok && s[i] == s[i + 1];
    if (ok) d.at(0, 0, s) = Poly(Rat(1));
  });
  auto c = symmetric_contraction(d).at(0, 0).as_constant();
  return c ? *c : Rat(0);
}

InvariantPolynomial p2_square_trace(const HigherLaplacian& P, const Poly& fiber) {
  const int n = P.fiber_rank();
  std::vector<std::vector<Poly>> traced(n, std::vector<Poly>(n));
  for (int m = 0; m < n; ++m)
    for (int v = 0; v < n; ++v)
      for (int a = 0; a < kDim; ++a) traced[m][v] += P.p2.at(m, v, {a, a});
  Poly total;
  for (int m = 0; m < n; ++m)
    for (int v = 0; v < n; ++v) {
      total += traced[m][v] * traced[v][m];
      for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b)
          total += P.p2.at(m, v, {a, b}) * P.p2.at(v, m, {b, a}) * Rat(2);
    }
  return fiber_trace(total, fiber);
}

InvariantPolynomial p2_square_trace_closed(const Poly& a, const Poly& b, const Poly& c) {
  const Poly v = (-(a * a) - a * b + a * c + b * c * Rat(2)) * Rat(24);
  return InvariantPolynomial::single(Basis::B1, PiPoly(v, 0));
}

SlotTensor k3_p4_tensor(const K3P4Spec& s) {
  SlotTensor t(kDim, 2);
  const Poly ff = f_squared();
  for (int m = 0; m < kDim; ++m)
    for (int v = 0; v < kDim; ++v)
      for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b) {
          Poly fk_m_fk_v, fa_fb, fm_fb, fv_fb;
          for (int x = 0; x < kDim; ++x) {
            fk_m_fk_v += F(x, m) * F(x, v);
            fa_fb += F(a, x) * F(b, x);
            fm_fb += F(m, x) * F(b, x);
            fv_fb += F(v, x) * F(b, x);
          }
          Poly minus_p4 = s.d * ff * delta(a, b) * delta(m, v);
          minus_p4 += s.e * fk_m_fk_v * delta(a, b);
          minus_p4 += s.f * ff * delta(m, a) * delta(v, b);
          minus_p4 += s.g * fa_fb * delta(m, v);
          minus_p4 += s.h * F(a, m) * F(b, v);
          minus_p4 += s.kk * fm_fb * delta(v, a);
          minus_p4 += s.l * fv_fb * delta(m, a);
          minus_p4 += s.m * delta(m, v) * delta(a, b);
          t.at(m, v, {a, b}) = -minus_p4;
        }
  return t;
}

SlotTensor k3_collapse(const K3P4Spec& s) {
  SlotTensor t(kDim, 0);
  const Poly ff = f_squared();
  const Poly first = s.d * Rat(4) + s.f + s.g;
  const Poly second = s.e * Rat(4) + s.h + s.kk + s.l;
  for (int m = 0; m < kDim; ++m)
    for (int v = 0; v < kDim; ++v) {
      Poly fk_m_fk_v;
      for (int x = 0; x < kDim; ++x) fk_m_fk_v += F(x, m) * F(x, v);
      t.at(m, v) = first * ff * delta(m, v) + second * fk_m_fk_v + s.m * Rat(4) * delta(m, v);
    }
  return t;
}

// ---------------------------------------------------------------------------

HeatCoefficient a0(const HigherLaplacian& P, const Poly& fiber) {
  HeatCoefficient h;
  h.warnings = standard_warnings(P);
  // Gamma(2/k)/Gamma(2); Gamma(2) = 1 and Gamma(2/k) = 1 for k = 1, 2.
  if (P.k > 2) h.gamma_arg = Rat(2, P.k);
  const Poly tr_identity = fiber * Rat(P.fiber_rank());
  h.value = InvariantPolynomial::single(
      Basis::Vol, Rat(1, P.k) * kFourPiSquaredInv * PiPoly(tr_identity, 0));
  return h;
}

HeatCoefficient a2(const HigherLaplacian& P, const Poly& fiber) {
  HeatCoefficient h;
  h.warnings = standard_warnings(P);
  if (P.k > 1) h.gamma_arg = Rat(1, P.k);  // Gamma(1/k)/Gamma(1)
  Poly trace;
  for (int m = 0; m < P.fiber_rank(); ++m)
    for (int a = 0; a < kDim; ++a) trace += P.p2.at(m, m, {a, a});
  const PiScaled scale = Rat(1, P.k) * (Rat(1, 4 * P.k) * kFourPiSquaredInv);
  h.value = scale * fiber_trace(trace, fiber);
  return h;
}

HeatCoefficient a4_flat(const HigherLaplacian& P, const Poly& fiber) {
  if (P.k < 2) throw MalformedInput("a4 is implemented for k >= 2");
  HeatCoefficient h;
  h.warnings = standard_warnings(P);

  // (1/12) tr Omega^2 with Omega = adF on every slot of the field
  const InvariantPolynomial omega =
      P.curved_connection ? fiber_trace(f_squared() * Rat(P.fiber_rank()), fiber)
                          : InvariantPolynomial();
  const InvariantPolynomial p2 = p2_square_trace(P, fiber);
  const InvariantPolynomial p4 = fiber_trace(symmetric_contraction(P.p4), fiber);
  const Rat s_norm = symmetric_delta_norm(P.k);

  InvariantPolynomial total = PiScaled(Rat(1, 12), 0) * omega;
  total += PiScaled(Rat(1, 48 * P.k), 0) * p2;
  total += PiScaled(Rat(-1) / (Rat(P.k) * s_norm), 0) * p4;
  h.value = kFourPiSquaredInv * total;
  return h;
}

HeatCoefficient a4_k3(const P2Spec& p2, const K3P4Spec& p4, const Poly& fiber) {
  HeatCoefficient h;
  const Poly& a = p2.a;
  const Poly& b = p2.b;
  const Poly& c = p2.c;
  Poly bracket = ((a + b) * (c - a) + b * c) * Rat(2);
  bracket += p4.d * Rat(16) + p4.e * Rat(4) + p4.f * Rat(4) + p4.g * Rat(4) + p4.h + p4.kk + p4.l;
  h.value.add(Basis::Vol, kFourPiSquaredInv * PiPoly(fiber * p4.m * Rat(4, 3), 0));
  h.value.add(Basis::B1, kFourPiSquaredInv * PiPoly(bracket * Rat(1, 12), 0));
  return h;
}

}  // namespace specact
