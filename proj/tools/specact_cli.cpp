// Command-line front end. Every subcommand builds a JSON report and a table;
// --format picks which one is printed.

#include "CLI11.hpp"
#include "specact/counterterm.hpp"
#include "specact/errors.hpp"
#include "specact/gammatrace.hpp"
#include "specact/gilkey.hpp"
#include "specact/json_io.hpp"
#include "specact/lie_expansion.hpp"
#include "specact/normal_form.hpp"
#include "specact/powercount.hpp"
#include "specact/spectral.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>

using namespace specact;
using io::json;

namespace {

constexpr int kExitMalformed = 2;
constexpr int kExitDomain = 3;

struct Report {
  json data = json::object();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void row(std::vector<std::string> r) { rows.push_back(std::move(r)); }
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit(const Report& r, const std::string& format) {
  if (format == "json") {
    std::cout << r.data.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    auto line = [](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "," : "") << csv_cell(cells[i]);
      std::cout << "\n";
    };
    line(r.header);
    for (const auto& row : r.rows) line(row);
    return;
  }
  std::vector<std::size_t> width(r.header.size(), 0);
  for (std::size_t i = 0; i < r.header.size(); ++i) width[i] = r.header[i].size();
  for (const auto& row : r.rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::cout << std::left << std::setw(static_cast<int>(width[i])) << cells[i];
      if (i + 1 < cells.size()) std::cout << "  ";
    }
    std::cout << "\n";
  };
  line(r.header);
  for (const auto& row : r.rows) line(row);
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

// "a=4,b=0" -> {a: 4, b: 0}
std::map<std::string, Rat> parse_assignments(const std::string& s,
                                             const std::vector<std::string>& allowed) {
  std::map<std::string, Rat> out;
  for (const auto& item : split(s, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw MalformedInput("expected name=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    if (std::find(allowed.begin(), allowed.end(), name) == allowed.end())
      throw MalformedInput("unknown coefficient '" + name + "'");
    out[name] = Rat::parse(item.substr(eq + 1));
  }
  return out;
}

Rat get_or_zero(const std::map<std::string, Rat>& m, const std::string& key) {
  auto it = m.find(key);
  return it == m.end() ? Rat(0) : it->second;
}

void add_invariant_rows(Report& r, const std::string& label, const InvariantPolynomial& p) {
  for (const auto& [b, c] : p.coeffs()) r.row({label, basis_name(b), to_string(c)});
}

// ---------------------------------------------------------------------------

Report run_coeffs(const std::string& path, int max_k) {
  if (max_k < 0) throw MalformedInput("--max-k must be non-negative");
  const SpectralFunction f = io::spectral_from(io::read_file(path));
  Report r;
  r.header = {"k", "f_-2k", "c_k", "a_k"};
  json rows = json::array();
  for (int k = 0; k <= max_k; ++k) {
    const Rat fk = coeff_f_minus2k(k, f);
    const PiScaled c = ck(k);
    const PiScaled a = Rat(k % 2 ? -1 : 1) * (fk * c);
    rows.push_back({{"k", k}, {"f_minus2k", io::exact(fk)}, {"c_k", io::exact(c)}, {"a_k", io::exact(a)}});
    r.row({std::to_string(k), fk.str(), to_string(c), to_string(a)});
  }
  r.data = {{"spectral", io::to_json(f)}, {"coefficients", rows}};
  return r;
}

Report run_phi(const std::string& path, int truncate, const std::string& lambda, const std::string& at) {
  const SpectralFunction f = io::spectral_from(io::read_file(path));
  const Rat lam = Rat::parse(lambda);
  const Rat x = Rat::parse(at);
  if (lam.sign() <= 0) throw DomainError("Lambda must be positive");
  const PiScaled series = phi_lambda(x, f, truncate, lam * lam);
  Report r;
  r.header = {"quantity", "value"};
  r.data = {{"x", x.str()}, {"lambda", lam.str()}, {"truncation", truncate},
            {"phi_truncated", io::exact(series)}};
  r.row({"phi_truncated", to_string(series)});
  if (f.is_mixture() && x.sign() > 0) {
    const double closed = phi_closed(x.to_double(), f, lam.to_double());
    r.data["phi_closed"] = io::approx(closed);
    r.row({"phi_closed (approx)", fmt(closed)});
  }
  return r;
}

Report run_propagator(const std::string& path, const std::string& p, double xi, int truncate,
                      double lambda) {
  const SpectralFunction f = io::spectral_from(io::read_file(path));
  const auto parts = split(p, ',');
  if (parts.size() != 4) throw MalformedInput("--p needs four comma-separated components");
  Vec4 mom{};
  for (int i = 0; i < 4; ++i) {
    try {
      mom[i] = std::stod(parts[i]);
    } catch (const std::exception&) {
      throw MalformedInput("bad momentum component '" + parts[i] + "'");
    }
  }
  const PropagatorValue v = gauge_propagator(mom, xi, f, truncate, lambda);
  const double ghost = ghost_propagator(mom, f, truncate, lambda);
  Report r;
  r.header = {"mu", "nu", "D_mu_nu"};
  json matrix = json::array();
  for (int m = 0; m < 4; ++m) {
    json row = json::array();
    for (int n = 0; n < 4; ++n) {
      row.push_back(io::approx(v.matrix[m][n]));
      r.row({std::to_string(m), std::to_string(n), fmt(v.matrix[m][n])});
    }
    matrix.push_back(row);
  }
  r.row({"ghost", "", fmt(ghost)});
  r.data = {{"xi", xi}, {"phi", io::approx(v.phi)}, {"gauge", matrix}, {"ghost", io::approx(ghost)}};
  return r;
}

Report run_powercount(const std::string& graph, bool classify, int n, int loop_cap) {
  Report r;
  if (classify) {
    const auto c = classify_divergences(n, loop_cap);
    r.header = {"L", "E+Etilde"};
    json sectors = json::array();
    for (const auto& [L, m] : c.sectors) {
      sectors.push_back({L, m});
      r.row({std::to_string(L), std::to_string(m)});
    }
    r.data = {{"n", n}, {"sectors", sectors}, {"superrenormalizable", c.superrenormalizable},
              {"loop_independent", c.loop_independent}};
    if (c.loop_independent) r.data["loop_cap"] = c.loop_cap;
    return r;
  }
  if (graph.empty()) throw MalformedInput("powercount needs --graph FILE or --classify --n N");
  const GraphSpec g = io::graph_from(io::read_file(graph));
  const auto rep = analyze(g);
  r.header = {"quantity", "value"};
  r.row({"L", std::to_string(rep.L)});
  r.row({"omega", std::to_string(rep.omega_bound)});
  r.row({"omega_closed", std::to_string(rep.omega_closed)});
  r.row({"divergent", rep.divergent ? "true" : "false"});
  r.row({"vacuum", rep.vacuum ? "true" : "false"});
  r.data = {{"graph", io::to_json(g)}, {"L", rep.L}, {"omega", rep.omega_bound},
            {"omega_closed", rep.omega_closed}, {"divergent", rep.divergent}, {"vacuum", rep.vacuum}};
  return r;
}

// "F(m,n),BoxF(r,s)" -> curvature slots in colour order.
std::vector<FSlot> parse_slots(const std::string& text) {
  std::vector<FSlot> slots;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ',' || text[pos] == ' ') {
      ++pos;
      continue;
    }
    const auto open = text.find('(', pos), close = text.find(')', pos);
    if (open == std::string::npos || close == std::string::npos || close < open)
      throw MalformedInput("expected F(a,b) or BoxF(a,b) in '" + text + "'");
    const std::string head = text.substr(pos, open - pos);
    if (head != "F" && head != "BoxF") throw MalformedInput("unknown curvature factor '" + head + "'");
    const auto args = split(text.substr(open + 1, close - open - 1), ',');
    if (args.size() != 2) throw MalformedInput("curvature factors take two indices");
    slots.push_back({static_cast<int>(slots.size()), args[0], args[1], head == "BoxF"});
    pos = close + 1;
  }
  if (slots.empty()) throw MalformedInput("--contract-F needs at least one factor");
  return slots;
}

std::string metric_name(const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::string name;
  for (const auto& [a, b] : pairs) name += "g(" + a + "," + b + ")";
  return name.empty() ? "1" : name;
}

Report run_gammatrace(const std::string& indices, const std::string& contract) {
  Report r;
  if (!contract.empty()) {
    const auto slots = parse_slots(contract);
    std::vector<std::string> labels = split(indices, ',');
    if (labels.empty())
      for (const auto& s : slots) {
        labels.push_back(s.a);
        labels.push_back(s.b);
      }
    const auto value = cycles_to_invariants(contract_slots(trace_gammas(labels), slots), slots);
    r.header = {"trace", "basis", "coefficient"};
    add_invariant_rows(r, "tr", value);
    r.data = {{"labels", labels}, {"factors", contract}, {"value", io::to_json(value)}};
    return r;
  }
  const auto labels = split(indices, ',');
  if (labels.empty()) throw MalformedInput("gammatrace needs --indices or --contract-F");
  const auto t = trace_gammas(labels);
  r.header = {"metric product", "coefficient"};
  json terms = json::array();
  for (const auto& [pairs, c] : t.by_labels()) {
    json pj = json::array();
    for (const auto& [a, b] : pairs) pj.push_back({a, b});
    terms.push_back({{"pairs", pj}, {"coeff", c.str()}});
    r.row({metric_name(pairs), c.str()});
  }
  json contracted = json::array();
  for (const auto& [pairs, c] : t.contract_repeated()) {
    json pj = json::array();
    for (const auto& [a, b] : pairs) pj.push_back({a, b});
    contracted.push_back({{"pairs", pj}, {"coeff", c.str()}});
  }
  r.data = {{"labels", labels}, {"terms", terms}, {"contracted", contracted}};
  return r;
}

QuadraticForm named_action(const std::string& name, const Rat& xi) {
  if (name == "S1") return action_div_f_squared();
  if (name == "S2") return action_f_box_f();
  if (name == "S3") return action_f_cubed();
  if (name == "gf") {
    if (xi.is_zero()) throw DomainError("xi = 0 gauge fixing is singular");
    return gauge_fixing_box().scaled(Poly(Rat(1) / xi));
  }
  if (name == "ghost") return ghost_action();
  if (name == "hdym") return action_higher_derivative_ym();
  throw MalformedInput("unknown action '" + name + "' (S1, S2, S3, gf, ghost, hdym)");
}

Report run_quadratic(const std::string& action, const std::string& terms_file, int k,
                     const std::string& xi, bool emit_terms) {
  if (k != 2) throw DomainError("only k = 2 quadratic actions are implemented");
  const QuadraticForm q =
      terms_file.empty() ? named_action(action, Rat::parse(xi)) : io::quadratic_from(io::read_file(terms_file));
  Report r;
  if (emit_terms) {
    const QuadraticForm c = canonical_terms(q);
    r.header = {"term"};
    for (const auto& t : c.terms) r.row({to_string(t)});
    r.data = io::to_json(c);
    return r;
  }
  const LaplacianLayers layers = extract_p2_p4(q);
  r.header = {"layer", "structure", "coefficient"};
  r.data = {{"action", terms_file.empty() ? action : terms_file},
            {"leading_matches", layers.leading_matches},
            {"other_layers_empty", layers.other.empty()}};
  const auto s = readable_structures(layers);
  if (!s) {
    r.data["readable"] = false;
    r.row({"-", "outside the standard structures", "-"});
    return r;
  }
  static const std::vector<std::string> vec_p2 = {"adF^{mn} g_ab", "adF^m_(b g^n_a)", "adF^n_(b g^m_a)", "g_ab g^mn"};
  static const std::vector<std::string> vec_p4 = {"adF_kl adF^kl g^mn", "adF^mk adF^n_k", "adF^mn", "g^mn"};
  static const std::vector<std::string> sc_p2 = {"g_ab"};
  static const std::vector<std::string> sc_p4 = {"adF_kl adF^kl", "1"};
  const auto& n2 = layers.scalar ? sc_p2 : vec_p2;
  const auto& n4 = layers.scalar ? sc_p4 : vec_p4;
  json p2 = json::object(), p4 = json::object();
  for (std::size_t i = 0; i < s->p2.size(); ++i) {
    p2[n2[i]] = io::exact(PiPoly(s->p2[i], 0));
    r.row({"p2", n2[i], s->p2[i].str()});
  }
  for (std::size_t i = 0; i < s->p4.size(); ++i) {
    p4[n4[i]] = io::exact(PiPoly(s->p4[i], 0));
    r.row({"p4", n4[i], s->p4[i].str()});
  }
  r.data["readable"] = true;
  r.data["p2"] = p2;
  r.data["p4"] = p4;
  return r;
}

Report run_gilkey(int k, const std::string& p2s, const std::string& p4s, const std::string& lambda2,
                  bool scalar) {
  const auto p2 = parse_assignments(p2s, {"a", "b", "c", "lambda"});
  P2Spec spec{get_or_zero(p2, "a"), get_or_zero(p2, "b"), get_or_zero(p2, "c"), get_or_zero(p2, "lambda")};
  if (!lambda2.empty()) spec.lambda = spec.lambda - Rat::parse(lambda2);  // lambda g g = -Lambda^2 g g
  HeatCoefficient h;
  HigherLaplacian P = HigherLaplacian::from_structures(k, spec, scalar);
  if (k == 2) {
    const std::string preset = p4s.rfind("preset:", 0) == 0 ? p4s.substr(7) : (p4s.empty() ? "none" : p4s);
    P.with_p4_terms(scalar ? std::vector<OperatorTerm>{} : p4_preset(preset));
    h = a4_flat(P);
  } else if (k == 3) {
    const auto p4 = parse_assignments(p4s, {"d", "e", "f", "g", "h", "kk", "l", "m"});
    K3P4Spec s{get_or_zero(p4, "d"), get_or_zero(p4, "e"), get_or_zero(p4, "f"), get_or_zero(p4, "g"),
               get_or_zero(p4, "h"), get_or_zero(p4, "kk"), get_or_zero(p4, "l"), get_or_zero(p4, "m")};
    h = a4_k3(spec, s);
  } else {
    throw DomainError("gilkey-a4 supports k = 2 and k = 3");
  }
  Report r;
  r.header = {"coefficient", "basis", "value"};
  add_invariant_rows(r, "a4", h.value);
  r.data = {{"k", k}, {"a4", io::to_json(h.value)}, {"warnings", h.warnings}};
  for (const auto& w : h.warnings) std::cerr << "warning: " << w << "\n";
  return r;
}

InvariantPolynomial with_colour(const InvariantPolynomial& p, int n_color) {
  return n_color > 0 ? p.substitute(Var::N2, Rat(n_color) * Rat(n_color)) : p;
}

Report counterterm_report(const CountertermResult& res, int n_color) {
  Report r;
  r.header = {"quantity", "basis", "value"};
  add_invariant_rows(r, "a4 gauge", with_colour(res.gauge_a4, n_color));
  add_invariant_rows(r, "a4 ghost", with_colour(res.ghost_a4, n_color));
  r.row({"pole (1/z)", "B1", to_string(res.pole_coefficient)});
  json pole = io::exact(res.pole_coefficient);
  if (auto c = res.pole_coefficient.coeff.as_constant(); c && res.pole_coefficient.pi_power == -2) {
    pole["per_four_pi_squared"] = (*c * Rat(16)).str();
    r.row({"pole (1/z)", "B1 per (4pi)^-2", (*c * Rat(16)).str()});
  }
  r.data = {{"a4_gauge", io::to_json(with_colour(res.gauge_a4, n_color))},
            {"a4_ghost", io::to_json(with_colour(res.ghost_a4, n_color))},
            {"divergence", io::to_json(res.divergence)},
            {"pole_coefficient", pole},
            {"c", io::exact(res.gauge_part)},
            {"ctilde", io::exact(res.ghost_part)}};
  if (res.theory) {
    const TheoryK2& t = *res.theory;
    r.data["theory"] = {{"f0", t.f0.str()}, {"f_minus2", t.f_minus2.str()},
                        {"gamma_eff", t.gamma_eff.str()}, {"lambda2_eff", t.lambda2_eff.str()},
                        {"kappa", io::exact(t.kappa)}};
    r.row({"gamma_eff", "", t.gamma_eff.str()});
    r.row({"lambda2_eff", "", t.lambda2_eff.str()});
    const F0Shift s = f0_shift(as_pi_scaled(res.gauge_part), as_pi_scaled(res.ghost_part), 2);
    r.data["f0_shift"] = s.str();
    r.row({"f0 shift", "", s.str()});
  }
  return r;
}

Report run_beta(bool from_k2, const std::string& f0, const std::string& fm2, const std::string& c,
                const std::string& ctilde, int k) {
  PiScaled cv, ctv;
  if (from_k2) {
    const CountertermResult res = k2_pipeline(Rat::parse(f0), Rat::parse(fm2));
    cv = as_pi_scaled(res.gauge_part);
    ctv = as_pi_scaled(res.ghost_part);
    k = 2;
  } else {
    // c and ctilde are read as multiples of pi^-2
    cv = PiScaled(Rat::parse(c), -2);
    ctv = PiScaled(Rat::parse(ctilde), -2);
  }
  const PiScaled beta = beta_f0(cv, ctv, k);
  Report r;
  r.header = {"quantity", "value"};
  r.row({"c + ctilde", to_string(cv + ctv)});
  r.row({"beta_f0", to_string(beta)});
  r.data = {{"c", io::exact(cv)}, {"ctilde", io::exact(ctv)}, {"k", k}, {"beta_f0", io::exact(beta)},
            {"f0_shift", f0_shift(cv, ctv, k).str()}};
  return r;
}

Report run_selftest(bool& all_pass) {
  Report r;
  r.header = {"status", "check"};
  json checks = json::array();
  auto check = [&](const std::string& name, bool ok) {
    all_pass = all_pass && ok;
    r.row({ok ? "PASS" : "FAIL", name});
    checks.push_back({{"check", name}, {"pass", ok}});
  };
  check("c0 = 1/(24 pi^2)", ck(0) == PiScaled(Rat(1, 24), -2));
  check("c1 = 1/(120 pi^2)", ck(1) == PiScaled(Rat(1, 120), -2));
  {
    const auto h = spectral_heat_coeffs();
    check("a4(D^2) = -1/(24 pi^2) B1", h.a4 == InvariantPolynomial::single(Basis::B1, PiScaled(Rat(-1, 24), -2)));
    InvariantPolynomial a6 = InvariantPolynomial::single(Basis::B2, PiScaled(Rat(2, 15 * 8), -2));
    a6.add(Basis::B5, to_pipoly(PiScaled(Rat(23, 45 * 8), -2)));
    check("a6(D^2) = 1/(8 pi^2) (2/15 B2 + 23/45 B5)", h.a6 == a6);
  }
  {
    QuadraticForm q = action_div_f_squared();
    q += action_f_box_f().scaled(Poly(Rat(-1)));
    q += action_f_cubed().scaled(Poly(Rat(-3)));
    check("S1 - S2 - 3 S3 = 0", operator_normal_form(q).empty());
  }
  check("pole at gamma = 23/4 is 5603/768 (4 pi)^-2",
        hdym_counterterm(Rat(23, 4)).pole_coefficient == to_pipoly(PiScaled(Rat(5603, 768 * 16), -2)));
  r.data = {{"checks", checks}, {"all_pass", all_pass}};
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral-action heat coefficients, counterterms and power counting"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  Report report;
  int status = 0;

  std::string spectral_path, lambda_s = "1", at_s, p_s, graph_s, indices_s, action_s = "S1",
                             terms_s, xi_s = "1", p2_s, p4_s, lambda2_s, gamma_s, f0_s = "1",
                             fm2_s = "1", c_s = "0", ct_s = "0", contract_s;
  int max_k = 6, truncate = 4, n_order = 8, loop_cap = 3, k_order = 2, n_color = 0;
  double xi = 1.0, lambda_d = 1.0;
  bool classify = false, emit_terms = false, scalar = false, k2 = false,
       from_k2 = false;

  auto* coeffs = app.add_subcommand("coeffs", "f_{-2k}, c_k and the form-factor coefficients");
  coeffs->add_option("--spectral", spectral_path, "spectral function JSON")->required();
  coeffs->add_option("--max-k", max_k, "largest k");

  auto* phi = app.add_subcommand("phi", "form factor at a point");
  phi->add_option("--spectral", spectral_path)->required();
  phi->add_option("--truncate", truncate, "series truncation K");
  phi->add_option("--lambda", lambda_s, "cutoff Lambda (rational)");
  phi->add_option("--at", at_s, "x = p^2 (rational)")->required();

  auto* prop = app.add_subcommand("propagator", "gauge and ghost propagators");
  prop->add_option("--spectral", spectral_path)->required();
  prop->add_option("--p", p_s, "px,py,pz,pw")->required();
  prop->add_option("--xi", xi, "gauge parameter");
  prop->add_option("--truncate", truncate);
  prop->add_option("--lambda", lambda_d);

  auto* pc = app.add_subcommand("powercount", "superficial degree of divergence");
  pc->add_option("--graph", graph_s, "graph JSON");
  pc->add_flag("--classify", classify, "list divergent sectors");
  pc->add_option("--n", n_order, "derivative order of the kinetic term");
  pc->add_option("--loop-cap", loop_cap, "loop cap when the bound is loop independent");

  auto* gt = app.add_subcommand("gammatrace", "Dirac matrix traces");
  gt->add_option("--indices", indices_s, "comma-separated labels");
  gt->add_option("--contract-F", contract_s, "curvature factors, e.g. \"F(m,n),F(r,s)\"");

  auto* quad = app.add_subcommand("quadratic", "p2 and p4 of a quadratic action");
  quad->add_option("--action", action_s, "S1, S2, S3, gf, ghost or hdym");
  quad->add_option("--terms", terms_s, "term-list JSON instead of a named action");
  quad->add_option("--k", k_order);
  quad->add_option("--xi", xi_s, "gauge parameter for gf (rational)");
  quad->add_flag("--emit-terms", emit_terms, "print the canonical term list instead");

  auto* gk = app.add_subcommand("gilkey-a4", "a4 of a higher-order Laplacian");
  gk->add_option("--k", k_order);
  gk->add_option("--p2", p2_s, "a=..,b=..,c=..,lambda=..");
  gk->add_option("--p4", p4_s, "preset:S1|S2|S3|none for k=2, d=..,e=..,...,m=.. for k=3");
  gk->add_option("--lambda2", lambda2_s, "adds -Lambda^2 g g to p2");
  gk->add_flag("--scalar", scalar, "scalar (ghost-type) operator");

  auto* ct = app.add_subcommand("counterterm", "one-loop divergence");
  ct->add_option("--gamma", gamma_s, "coupling gamma (rational); symbolic when omitted");
  ct->add_option("--n-color", n_color, "sets N2 = N^2 in volume terms");
  ct->add_flag("--k2", k2, "derive the theory from the k = 2 spectral action");
  ct->add_option("--f0", f0_s);
  ct->add_option("--fm2", fm2_s);

  auto* beta = app.add_subcommand("beta", "running of f0");
  beta->add_flag("--from-k2", from_k2, "take c and ctilde from the k = 2 pipeline");
  beta->add_option("--f0", f0_s);
  beta->add_option("--fm2", fm2_s);
  beta->add_option("--c", c_s, "c in units of pi^-2");
  beta->add_option("--ctilde", ct_s, "ctilde in units of pi^-2");
  beta->add_option("--k", k_order);

  auto* self = app.add_subcommand("selftest", "golden values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitMalformed;
  }

  try {
    if (*coeffs) report = run_coeffs(spectral_path, max_k);
    else if (*phi) report = run_phi(spectral_path, truncate, lambda_s, at_s);
    else if (*prop) report = run_propagator(spectral_path, p_s, xi, truncate, lambda_d);
    else if (*pc) report = run_powercount(graph_s, classify, n_order, loop_cap);
    else if (*gt) report = run_gammatrace(indices_s, contract_s);
    else if (*quad) report = run_quadratic(action_s, terms_s, k_order, xi_s, emit_terms);
    else if (*gk) report = run_gilkey(k_order, p2_s, p4_s, lambda2_s, scalar);
    else if (*ct) {
      const CountertermResult res =
          k2 ? k2_pipeline(Rat::parse(f0_s), Rat::parse(fm2_s))
             : hdym_counterterm(gamma_s.empty() ? std::nullopt : std::optional<Rat>(Rat::parse(gamma_s)));
      report = counterterm_report(res, n_color);
    } else if (*beta) report = run_beta(from_k2, f0_s, fm2_s, c_s, ct_s, k_order);
    else if (*self) {
      bool ok = true;
      report = run_selftest(ok);
      status = ok ? 0 : 1;
    }
  } catch (const MalformedInput& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const UnsupportedExact& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitDomain;
  }
  emit(report, format);
  return status;
}
