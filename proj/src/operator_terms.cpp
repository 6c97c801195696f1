#include "specact/operator_terms.hpp"

#include "specact/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace specact {

int OperatorTerm::nabla_count() const {
  return static_cast<int>(std::count_if(letters.begin(), letters.end(),
                                        [](const Letter& l) { return l.kind == Letter::Kind::Nabla; }));
}

namespace {

template <class F>
void for_each_index(const OperatorTerm& t, F&& f) {
  for (int o : t.outer)
    if (o != kScalarSlot) f(o);
  for (const auto& l : t.letters) {
    f(l.i);
    if (l.kind == Letter::Kind::AdF) f(l.j);
  }
}

}  // namespace

std::vector<int> OperatorTerm::indices() const {
  std::vector<int> out;
  for_each_index(*this, [&](int i) {
    if (std::find(out.begin(), out.end(), i) == out.end()) out.push_back(i);
  });
  return out;
}

void check_contraction(const OperatorTerm& t, const std::vector<int>& free) {
  std::map<int, int> count;
  for_each_index(t, [&](int i) { ++count[i]; });
  for (const auto& [i, c] : count) {
    const bool is_free = std::find(free.begin(), free.end(), i) != free.end();
    if (c != (is_free ? 1 : 2))
      throw MalformedInput("index " + std::to_string(i) + " occurs " + std::to_string(c) +
                           " times in " + to_string(t));
  }
}

OperatorTerm relabel_canonical(const OperatorTerm& t) {
  std::map<int, int> rename;
  for_each_index(t, [&](int i) { rename.emplace(i, static_cast<int>(rename.size())); });
  OperatorTerm r = t;
  for (int& o : r.outer)
    if (o != kScalarSlot) o = rename.at(o);
  for (auto& l : r.letters) {
    l.i = rename.at(l.i);
    if (l.kind == Letter::Kind::AdF) l.j = rename.at(l.j);
  }
  return r;
}

OperatorTerm transpose(const OperatorTerm& t) {
  if (t.outer.size() != 2) throw std::invalid_argument("transpose needs two outer slots");
  OperatorTerm r;
  r.outer = {t.outer[1], t.outer[0]};
  r.letters.assign(t.letters.rbegin(), t.letters.rend());
  r.coeff = (t.letters.size() % 2) ? -t.coeff : t.coeff;
  return r;
}

std::string to_string(const OperatorTerm& t) {
  std::ostringstream os;
  os << "(" << t.coeff.str() << ")";
  os << " [";
  for (std::size_t i = 0; i < t.outer.size(); ++i) os << (i ? "," : "") << t.outer[i];
  os << "]";
  for (const auto& l : t.letters) {
    if (l.kind == Letter::Kind::Nabla)
      os << " D" << l.i;
    else
      os << " adF" << l.i << l.j;
  }
  return os.str();
}

QuadraticForm& QuadraticForm::operator+=(const QuadraticForm& o) {
  if (!o.terms.empty() && !terms.empty() && o.pi_power != pi_power)
    throw std::domain_error("adding quadratic forms with different powers of pi");
  if (terms.empty()) pi_power = o.pi_power;
  terms.insert(terms.end(), o.terms.begin(), o.terms.end());
  return *this;
}

QuadraticForm QuadraticForm::scaled(const Poly& s) const {
  QuadraticForm r = *this;
  r.terms.clear();
  for (const auto& t : terms) {
    OperatorTerm u = t;
    u.coeff = t.coeff * s;
    if (!u.coeff.is_zero()) r.terms.push_back(std::move(u));
  }
  return r;
}

QuadraticForm canonical_terms(const QuadraticForm& q) {
  std::map<std::pair<std::vector<int>, Word>, Poly> merged;
  for (const auto& t : q.terms) {
    OperatorTerm c = relabel_canonical(t);
    merged[{c.outer, c.letters}] += c.coeff;
  }
  QuadraticForm r = q;
  r.terms.clear();
  for (auto& [key, coeff] : merged) {
    if (coeff.is_zero()) continue;
    r.terms.push_back({coeff, key.first, key.second});
  }
  return r;
}

}  // namespace specact
