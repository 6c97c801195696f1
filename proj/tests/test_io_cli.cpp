#include "doctest.h"
#include "specact/counterterm.hpp"
#include "specact/errors.hpp"
#include "specact/json_io.hpp"
#include "specact/lie_expansion.hpp"
#include "specact/normal_form.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace specact;
using io::json;

namespace {

struct Run {
  int status;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(SPECACT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("specact_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

void check_stable(const std::string& emitted) {
  const json parsed = json::parse(emitted);
  CHECK(parsed.dump(2) + "\n" == emitted);
}

}  // namespace

TEST_CASE("exact values serialise as rational strings") {
  CHECK(io::exact(PiScaled(Rat(5603, 12288), -2)).dump() == R"({"pi_power":-2,"rat":"5603/12288"})");
  CHECK(io::approx(0.5).dump() == R"({"approx":true,"value":0.5})");
  const PiPoly p(Poly::variable(Var::Gamma, 2) * Rat(1, 3) + Poly(2), -2);
  const json j = io::exact(p);
  CHECK(j.at("poly").at("gamma^2") == "1/3");
  CHECK(io::poly_from(j.at("poly")) == p.coeff);
  CHECK(io::poly_from(json("3/4")) == Poly(Rat(3, 4)));
  CHECK_THROWS_AS(io::poly_from(json::parse(R"({"delta":"1"})")), MalformedInput);
  CHECK_THROWS_AS(io::rat_from(json(0.5)), MalformedInput);
}

TEST_CASE("input formats round-trip") {
  const auto f = io::spectral_from(json::parse(R"({"type":"gaussian_mixture","terms":[{"weight":"1","scale":"3/2"}]})"));
  CHECK(io::to_json(io::spectral_from(io::to_json(f))) == io::to_json(f));
  const auto t = io::spectral_from(json::parse(R"({"type":"coefficients","f":{"0":"1","-2":"1"}})"));
  CHECK(coeff_f_minus2k(1, t) == Rat(1));
  CHECK_THROWS_AS(io::spectral_from(json::parse(R"({"type":"other"})")), MalformedInput);
  CHECK_THROWS_AS(io::spectral_from(json::parse(R"({"type":"coefficients","f":{"x":"1"}})")), MalformedInput);

  const auto g = io::graph_from(json::parse(R"({"n":8,"I":2,"Itilde":0,"E":2,"Etilde":0,"v":{"3":2},"vtilde":0})"));
  CHECK(io::to_json(io::graph_from(io::to_json(g))).dump() == io::to_json(g).dump());
  CHECK_THROWS_AS(io::graph_from(json::parse(R"({"n":8,"I":3,"E":2,"v":{"3":2}})")), MalformedInput);

  for (const QuadraticForm& q : {action_div_f_squared(), action_f_cubed(), ghost_action(), action_higher_derivative_ym()}) {
    const std::string once = io::to_json(canonical_terms(q)).dump();
    const QuadraticForm back = io::quadratic_from(json::parse(once));
    CHECK(io::to_json(back).dump() == once);
    CHECK(operator_normal_form(back) == operator_normal_form(q));
  }
}

TEST_CASE("command line: outputs") {
  const std::string gauss = temp_file("gauss.json", R"({"type":"gaussian_mixture","terms":[{"weight":"1","scale":"1"}]})");

  const auto coeffs = cli("coeffs --spectral " + gauss + " --max-k 6 --format csv");
  CHECK(coeffs.status == 0);
  CHECK(coeffs.out.rfind("k,f_-2k,c_k,a_k\n0,1,1/24*pi^-2,1/24*pi^-2\n1,1,1/120*pi^-2,-1/120*pi^-2\n", 0) == 0);

  const auto self = cli("selftest");
  CHECK(self.status == 0);
  CHECK(self.out.find("FAIL") == std::string::npos);
  CHECK(self.out.find("5603/768") != std::string::npos);

  const auto ct = cli("counterterm --gamma 23/4 --format json");
  CHECK(ct.status == 0);
  CHECK(json::parse(ct.out).at("pole_coefficient").at("per_four_pi_squared") == "5603/768");

  for (const std::string& args : std::vector<std::string>
       {"coeffs --spectral " + gauss + " --format json", "phi --spectral " + gauss + " --at 1/3 --format json",
        "propagator --spectral " + gauss + " --p 0.3,0.1,0,0.2 --xi 0 --format json",
        "powercount --classify --n 8 --format json", "gammatrace --indices m,n,r,s --format json",
        "gammatrace --contract-F 'F(m,n),F(r,s)' --format json", "quadratic --action S2 --format json",
        "gilkey-a4 --k 2 --p2 a=4,b=0,c=0 --p4 preset:S1 --format json",
        "gilkey-a4 --k 3 --p4 d=1 --format json", "counterterm --k2 --f0 1 --fm2 1 --format json",
        "beta --from-k2 --format json", "selftest --format json"}) {
    const auto r = cli(args);
    CHECK_MESSAGE(r.status == 0, args);
    check_stable(r.out);
  }

  const auto terms = cli("quadratic --action S3 --emit-terms --format json");
  const std::string terms_path = temp_file("s3_terms.json", terms.out);
  const auto via_file = cli("quadratic --terms " + terms_path + " --format json");
  const auto direct = cli("quadratic --action S3 --format json");
  CHECK(json::parse(via_file.out).at("p4") == json::parse(direct.out).at("p4"));
  CHECK(json::parse(via_file.out).at("p2") == json::parse(direct.out).at("p2"));
}

TEST_CASE("command line: exit codes") {
  const std::string gauss = temp_file("gauss.json", R"({"type":"gaussian_mixture","terms":[{"weight":"1","scale":"1"}]})");
  const std::string bad = temp_file("bad_graph.json", R"({"n":8,"I":3,"E":2,"v":{"3":2}})");
  const std::string garbage = temp_file("garbage.json", "{not json");
  CHECK(cli("powercount --graph /nonexistent/missing.json").status == 2);
  CHECK(cli("powercount --graph " + bad).status == 2);
  CHECK(cli("coeffs --spectral " + garbage).status == 2);
  CHECK(cli("coeffs --spectral " + gauss + " --no-such-flag").status == 2);
  CHECK(cli("no-such-command").status == 2);
  CHECK(cli("").status == 2);
  CHECK(cli("coeffs --spectral " + gauss + " --format xml").status == 2);
  CHECK(cli("gilkey-a4 --k 2 --p2 z=1").status == 2);
  CHECK(cli("quadratic --action S9").status == 2);
  CHECK(cli("propagator --spectral " + gauss + " --p 0,0,0,0").status == 3);
  CHECK(cli("phi --spectral " + gauss + " --at 1 --lambda 0").status == 3);
  CHECK(cli("counterterm --k2 --f0 1 --fm2 0").status == 3);
  CHECK(cli("gilkey-a4 --k 5").status == 3);
  CHECK(cli("--help").status == 0);
}
