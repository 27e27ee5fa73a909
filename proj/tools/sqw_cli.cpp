#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sqw/errors.hpp"
#include "sqw/functions.hpp"
#include "sqw/identities.hpp"
#include "sqw/integral.hpp"
#include "sqw/multipoly.hpp"
#include "sqw/params.hpp"
#include "sqw/yang_baxter.hpp"

using json = nlohmann::ordered_json;
using namespace sqw;

namespace {

using VQ = View<Rational>;

// computational failure that is not a usage error
struct Failed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(Rational::parse(item));
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size()) throw ParseError("bad integer '" + item + "'");
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad integer '" + item + "'");
    }
  }
  return out;
}

json poly_json(const MultiPoly& p) {
  json j;
  j["vars"] = p.nvars();
  j["terms"] = json::array();
  for (const auto& [e, c] : p.terms()) j["terms"].push_back({{"exp", e}, {"coef", c.str()}});
  return j;
}

json complex_json(const Complex& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

ParameterBase<Rational> load_base(const std::string& path) {
  return path.empty() ? fixture_p0(16) : load_params_json(path);
}

void emit(const json& j, const std::string& out) {
  std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw ParseError("cannot open output file " + out);
  f << text;
}

struct ComputeArgs {
  std::string kind, lambda, mu, params, mode = "exact", at, out;
  int vars = 1;
};

int cmd_compute(const ComputeArgs& a) {
  if (a.kind != "f" && a.kind != "f-star" && a.kind != "hl" && a.kind != "hl-star")
    throw ParseError("kind must be f, f-star, hl or hl-star");
  if (a.mode != "exact" && a.mode != "numeric") throw ParseError("mode must be exact or numeric");
  Partition lam = Partition::parse(a.lambda), mu = Partition::parse(a.mu);
  auto base = load_base(a.params);
  base.validate();
  auto values = parse_list(a.at);
  const bool symbolic = a.at.empty();
  const int n = symbolic ? a.vars : static_cast<int>(values.size());
  if (n < 0) throw ParseError("--vars must be nonnegative");
  bool hl = a.kind == "hl" || a.kind == "hl-star";
  bool star = a.kind == "f-star" || a.kind == "hl-star";
  if (symbolic && (hl || a.mode == "numeric"))
    throw ParseError("this kind/mode needs variable values via --at");

  json cfg;
  cfg["subcommand"] = "compute";
  cfg["kind"] = a.kind;
  cfg["lambda"] = lam.str();
  cfg["mu"] = mu.str();
  cfg["vars"] = n;
  cfg["at"] = a.at;
  cfg["mode"] = a.mode;
  cfg["params"] = a.params.empty() ? "P0" : a.params;
  cfg["horizon"] = base.horizon;
  cfg["out"] = a.out;
  json j;
  j["config"] = cfg;

  if (symbolic) {
    VQ v = make_view(base);
    std::vector<MultiPoly> kappa;
    for (int i = 0; i < n; ++i) kappa.push_back(MultiPoly::variable(n, i));
    MultiPoly f = spin_F(lam, mu, kappa, v);
    if (star) f *= checked_div(c_S(lam, v), c_S(mu, v.mixed_shift(n)), "F* normalization");
    if (f.nvars() < n) f = f.promote(n);
    j["result"] = poly_json(f);
    j["text"] = f.str();
  } else if (a.mode == "exact") {
    VQ v = make_view(base);
    Rational r = hl ? (star ? FHL_star(lam, mu, values, v) : FHL(lam, mu, values, v))
                    : (star ? spin_F_star(lam, mu, values, v) : spin_F(lam, mu, values, v));
    j["result"] = r.str();
  } else {
    auto cb = to_complex(base);
    View<Complex> v = make_view(cb);
    std::vector<Complex> x;
    for (const auto& r : values) x.push_back(to_complex(r));
    Complex r = hl ? (star ? FHL_star(lam, mu, x, v) : FHL(lam, mu, x, v))
                   : (star ? spin_F_star(lam, mu, x, v) : spin_F(lam, mu, x, v));
    j["result"] = complex_json(r);
  }
  emit(j, a.out);
  return 0;
}


struct VerifyArgs {
  std::string name, J, params, out;
  int n = 0, m = 0, cap = 0, trials = 20, L_trunc = 40, nodes = 256;
  std::uint64_t seed = 1;
  bool perturb = false;
};

int cmd_verify(const VerifyArgs& a) {
  json cfg;
  cfg["subcommand"] = "verify";
  cfg["name"] = a.name;
  cfg["seed"] = a.seed;
  cfg["trials"] = a.trials;
  cfg["perturb"] = a.perturb;
  VerificationReport rep;
  if (a.name.rfind("ybe:", 0) == 0) {
    std::string inst = a.name.substr(4);
    if (inst == "colored-dictionary") {
      int cap = a.cap > 0 ? a.cap : 3;
      cfg["cap"] = cap;
      rep = ybe::check_colored_dictionary(cap, a.trials, a.seed);
    } else if (inst == "eta-one") {
      int cap = a.cap > 0 ? a.cap : 3;
      cfg["cap"] = cap;
      rep = ybe::check_eta_one(cap, a.trials, a.seed);
    } else {
      const ybe::Instance* found = nullptr;
      for (const auto& i : ybe::instances())
        if (i.name == inst) found = &i;
      if (!found) throw ParseError("unknown Yang-Baxter instance '" + inst + "'");
      int cap = a.cap > 0 ? a.cap : found->default_cap;
      cfg["cap"] = cap;
      rep = ybe::check_instance(*found, cap, a.trials, a.seed, a.perturb);
    }
  } else {
    const SuiteInfo* s = find_suite(a.name);
    if (!s) throw ParseError("unknown suite '" + a.name + "'");
    SuiteConfig sc;
    sc.seed = a.seed;
    sc.trials = a.trials;
    sc.perturb = a.perturb;
    sc.n = a.n;
    sc.m = a.m;
    sc.cap = a.cap;
    sc.J = parse_ints(a.J);
    sc.L_trunc = a.L_trunc;
    sc.nodes = a.nodes;
    if (!a.params.empty()) sc.base = load_params_json(a.params);
    cfg["n"] = a.n;
    cfg["m"] = a.m;
    cfg["cap"] = a.cap;
    cfg["J"] = sc.J;
    cfg["L_trunc"] = a.L_trunc;
    cfg["nodes"] = a.nodes;
    cfg["params"] = a.params.empty() ? "P0" : a.params;
    rep = s->run(sc);
  }
  cfg["out"] = a.out;
  json j;
  j["config"] = cfg;
  j["report"] = json::parse(rep.to_json());
  emit(j, a.out);
  return rep.passed() ? 0 : 1;
}

struct IntegralArgs {
  std::string mu, vars = "1/4", params, radius = "auto", out;
  int nodes = 256;
};

int cmd_integral(const IntegralArgs& a) {
  Partition mu = Partition::parse(a.mu);
  auto kq = parse_list(a.vars);
  auto base = load_base(a.params);
  base.validate();
  auto cb = to_complex(base);
  if (a.nodes < 1) throw ParseError("--nodes must be positive");
  std::optional<double> radius;
  if (a.radius != "auto") {
    try {
      std::size_t pos = 0;
      radius = std::stod(a.radius, &pos);
      if (pos != a.radius.size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw ParseError("--radius must be auto or a number");
    }
  }
  json cfg;
  cfg["subcommand"] = "integral";
  cfg["mu"] = mu.str();
  cfg["vars"] = a.vars;
  cfg["params"] = a.params.empty() ? "P0" : a.params;
  cfg["nodes"] = a.nodes;
  cfg["radius"] = a.radius;
  cfg["out"] = a.out;
  Contour c;
  try {
    c = build_contour(cb, 1e-3, a.nodes);
  } catch (const PreconditionError& e) {
    throw Failed(e.what());
  }
  std::vector<Complex> kc;
  for (const auto& r : kq) kc.push_back(to_complex(r));
  Complex quad = integral_F(mu, kc, cb, a.nodes, radius);
  Rational exact = spin_F(mu, Partition{}, kq, make_view(base));
  json j;
  j["config"] = cfg;
  j["contour"] = {{"radius", radius ? *radius : c.radius}, {"inner", c.inner}, {"outer", c.outer}};
  j["quadrature"] = complex_json(quad);
  j["exact"] = exact.str();
  j["difference"] = std::abs(quad - to_complex(exact));
  emit(j, a.out);
  return 0;
}

int cmd_list() {
  json j;
  j["config"] = {{"subcommand", "list"}};
  j["suites"] = json::array();
  for (const auto& s : suites()) j["suites"].push_back({{"name", s.name}, {"summary", s.summary}});
  j["ybe"] = json::array();
  for (const auto& i : ybe::instances()) j["ybe"].push_back({{"name", "ybe:" + i.name}, {"summary", i.summary}});
  j["ybe"].push_back({{"name", "ybe:colored-dictionary"}, {"summary", "n = 1 colored equation vs the deformed Cauchy-type one"}});
  j["ybe"].push_back({{"name", "ybe:eta-one"}, {"summary", "deformed instances at eta = 1"}});
  emit(j, "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sqw: spin q-Whittaker polynomials, spin Hall-Littlewood functions, identity checks"};
  app.require_subcommand(1, 1);

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "compute F, F*, F~ or F~* for a skew shape");
  compute->add_option("kind", ca.kind, "f | f-star | hl | hl-star")->required();
  compute->add_option("--lambda", ca.lambda, "outer partition, e.g. \"3,1\"")->required();
  compute->add_option("--mu", ca.mu, "inner partition")->capture_default_str();
  compute->add_option("--vars", ca.vars, "number of symbolic variables")->capture_default_str();
  compute->add_option("--at", ca.at, "comma separated variable values instead of symbols");
  compute->add_option("--params", ca.params, "parameter file (JSON); default P0");
  compute->add_option("--mode", ca.mode, "exact | numeric")->capture_default_str();
  compute->add_option("--out", ca.out, "output path; default stdout");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run an identity suite or a Yang-Baxter instance");
  verify->add_option("name", va.name, "suite name or ybe:<instance>")->required();
  verify->add_option("--n", va.n, "number of kappa variables (0 = suite range)");
  verify->add_option("--m", va.m, "number of u / chi variables (0 = suite range)");
  verify->add_option("--cap", va.cap, "box or label cap (0 = suite default)");
  verify->add_option("--trials", va.trials, "random rational points")->capture_default_str();
  verify->add_option("--seed", va.seed, "random seed")->capture_default_str();
  verify->add_option("--J", va.J, "cauchy-qJ exponents, e.g. \"1,2\"");
  verify->add_option("--L-trunc", va.L_trunc, "cauchy-numeric truncation")->capture_default_str();
  verify->add_option("--nodes", va.nodes, "quadrature nodes")->capture_default_str();
  verify->add_option("--params", va.params, "parameter file replacing P0 in exact suites");
  verify->add_flag("--perturb", va.perturb, "run the negative-control instance");
  verify->add_option("--out", va.out, "output path; default stdout");

  IntegralArgs ia;
  auto* integral = app.add_subcommand("integral", "quadrature of the integral representation of F_mu");
  integral->add_option("--mu", ia.mu, "partition")->required();
  integral->add_option("--vars", ia.vars, "comma separated kappa values")->capture_default_str();
  integral->add_option("--params", ia.params, "parameter file (JSON); default P0");
  integral->add_option("--nodes", ia.nodes, "nodes per variable")->capture_default_str();
  integral->add_option("--radius", ia.radius, "auto or a number")->capture_default_str();
  integral->add_option("--out", ia.out, "output path; default stdout");

  auto* list = app.add_subcommand("list", "list suites and Yang-Baxter instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (compute->parsed()) return cmd_compute(ca);
    if (verify->parsed()) return cmd_verify(va);
    if (integral->parsed()) return cmd_integral(ia);
    if (list->parsed()) return cmd_list();
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
