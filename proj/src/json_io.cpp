#include "specact/json_io.hpp"

#include "specact/errors.hpp"

#include <fstream>
#include <sstream>

namespace specact::io {

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw MalformedInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

Rat rat_from(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  throw MalformedInput("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

json exact(const Rat& r) { return {{"rat", r.str()}, {"pi_power", 0}}; }

json exact(const PiScaled& v) { return {{"rat", v.coeff.str()}, {"pi_power", v.pi_power}}; }

json exact(const PiPoly& v) {
  if (auto c = v.coeff.as_constant()) return exact(PiScaled(*c, v.pi_power));
  return {{"poly", to_json(v.coeff)}, {"pi_power", v.pi_power}};
}

json approx(double v) { return {{"value", v}, {"approx", true}}; }

namespace {

std::string monomial_key(const Monomial& m) {
  std::string key;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (!m[i]) continue;
    if (!key.empty()) key += "*";
    key += var_name(static_cast<Var>(i));
    if (m[i] > 1) key += "^" + std::to_string(int(m[i]));
  }
  return key.empty() ? "1" : key;
}

Monomial monomial_from(const std::string& key) {
  Monomial m{};
  if (key == "1") return m;
  std::stringstream ss(key);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    int power = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      try {
        power = std::stoi(factor.substr(caret + 1));
      } catch (const std::exception&) {
        throw MalformedInput("bad exponent in monomial '" + key + "'");
      }
      factor.resize(caret);
    }
    auto v = var_from_name(factor);
    if (!v || power < 1 || power > 255) throw MalformedInput("bad monomial '" + key + "'");
    m[static_cast<std::size_t>(*v)] += static_cast<std::uint8_t>(power);
  }
  return m;
}

}  // namespace

json to_json(const Poly& p) {
  json out = json::object();
  for (const auto& [m, c] : p.terms()) out[monomial_key(m)] = c.str();
  return out;
}

Poly poly_from(const json& j) {
  if (j.is_string() || j.is_number_integer()) return Poly(rat_from(j));
  if (!j.is_object()) throw MalformedInput("expected a polynomial object, got " + j.dump());
  Poly p;
  for (const auto& [key, value] : j.items()) p.add_term(monomial_from(key), rat_from(value));
  return p;
}

json to_json(const InvariantPolynomial& p) {
  json out = json::object();
  for (const auto& [b, c] : p.coeffs()) out[basis_name(b)] = exact(c);
  return out;
}

json to_json(const SpectralFunction& f) {
  if (f.is_mixture()) {
    json terms = json::array();
    for (const auto& a : f.mixture().atoms)
      terms.push_back({{"weight", a.weight.str()}, {"scale", a.scale.str()}});
    return {{"type", "gaussian_mixture"}, {"terms", terms}};
  }
  json table = json::object();
  for (const auto& [k, v] : f.table().f) table[std::to_string(k)] = v.str();
  return {{"type", "coefficients"}, {"f", table}};
}

SpectralFunction spectral_from(const json& j) {
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "gaussian_mixture") {
      GaussianMixture m;
      for (const auto& t : j.at("terms"))
        m.atoms.push_back({rat_from(t.at("weight")), rat_from(t.at("scale"))});
      return SpectralFunction(std::move(m));
    }
    if (type == "coefficients") {
      CoefficientTable t;
      for (const auto& [key, value] : j.at("f").items()) {
        std::size_t used = 0;
        const int k = std::stoi(key, &used);
        if (used != key.size()) throw MalformedInput("bad coefficient index '" + key + "'");
        t.f[k] = rat_from(value);
      }
      return SpectralFunction(std::move(t));
    }
    throw MalformedInput("unknown spectral function type '" + type + "'");
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("spectral function JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw MalformedInput("spectral function JSON: non-numeric coefficient index");
  }
}

json to_json(const GraphSpec& g) {
  json v = json::object();
  for (const auto& [valence, count] : g.v) v[std::to_string(valence)] = count;
  return {{"n", g.n}, {"I", g.I}, {"Itilde", g.Itilde}, {"E", g.E},
          {"Etilde", g.Etilde}, {"v", v}, {"vtilde", g.vtilde}};
}

GraphSpec graph_from(const json& j) {
  try {
    GraphSpec g;
    g.n = j.at("n").get<int>();
    g.I = j.at("I").get<int>();
    g.Itilde = j.value("Itilde", 0);
    g.E = j.at("E").get<int>();
    g.Etilde = j.value("Etilde", 0);
    g.vtilde = j.value("vtilde", 0);
    for (const auto& [key, count] : j.at("v").items()) {
      std::size_t used = 0;
      const int valence = std::stoi(key, &used);
      if (used != key.size()) throw MalformedInput("bad vertex valence '" + key + "'");
      g.v[valence] = count.get<int>();
    }
    validate(g);
    return g;
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("graph JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw MalformedInput("graph JSON: non-numeric vertex valence");
  }
}

namespace {

const char* kind_name(FormKind k) {
  switch (k) {
    case FormKind::Gauge: return "gauge";
    case FormKind::Ghost: return "ghost";
    case FormKind::Operator: return "operator";
  }
  return "";
}

FormKind kind_from(const std::string& s) {
  if (s == "gauge") return FormKind::Gauge;
  if (s == "ghost") return FormKind::Ghost;
  if (s == "operator") return FormKind::Operator;
  throw MalformedInput("unknown form kind '" + s + "'");
}

}  // namespace

json to_json(const QuadraticForm& q) {
  json terms = json::array();
  for (const auto& t : q.terms) {
    json letters = json::array();
    for (const auto& l : t.letters) {
      if (l.kind == Letter::Kind::Nabla)
        letters.push_back({{"nabla", l.i}});
      else
        letters.push_back({{"adf", {l.i, l.j}}});
    }
    terms.push_back({{"coeff", to_json(t.coeff)}, {"outer", t.outer}, {"letters", letters}});
  }
  return {{"kind", kind_name(q.kind)}, {"k", q.k}, {"pi_power", q.pi_power}, {"terms", terms}};
}

QuadraticForm quadratic_from(const json& j) {
  try {
    QuadraticForm q;
    q.kind = kind_from(j.at("kind").get<std::string>());
    q.k = j.at("k").get<int>();
    q.pi_power = j.value("pi_power", 0);
    for (const auto& tj : j.at("terms")) {
      OperatorTerm t;
      t.coeff = poly_from(tj.at("coeff"));
      t.outer = tj.at("outer").get<std::vector<int>>();
      for (const auto& lj : tj.at("letters")) {
        if (lj.contains("nabla")) {
          t.letters.push_back(Letter::nabla(lj.at("nabla").get<int>()));
        } else {
          auto ij = lj.at("adf").get<std::vector<int>>();
          if (ij.size() != 2) throw MalformedInput("adf letters need an index pair");
          t.letters.push_back(Letter::adf(ij[0], ij[1]));
        }
      }
      check_contraction(t);
      q.terms.push_back(std::move(t));
    }
    return q;
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("term-list JSON: ") + e.what());
  }
}

}  // namespace specact::io
