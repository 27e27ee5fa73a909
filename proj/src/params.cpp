#include "sqw/params.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sqw {

ParameterBase<Complex> to_complex(const ParameterBase<Rational>& b) {
  ParameterBase<Complex> c;
  c.q = to_complex(b.q);
  for (const auto& x : b.rs) c.rs.push_back(to_complex(x));
  for (const auto& x : b.rx) c.rx.push_back(to_complex(x));
  c.horizon = b.horizon;
  return c;
}

ParameterBase<Rational> fixture_p0(int horizon) {
  ParameterBase<Rational> b;
  b.q = Rational(1, 3);
  for (int i = 0; i <= horizon; ++i) {
    b.rs.emplace_back(1, i + 2);
    b.rx.emplace_back(1, i + 3);
  }
  b.horizon = horizon;
  return b;
}

namespace {

Rational rational_field(const nlohmann::json& v, const std::string& what) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ParseError(what + " must be a rational string or an integer");
}

}  // namespace

ParameterBase<Rational> params_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("parameter file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("q") || !j.contains("sqrt_s") || !j.contains("sqrt_xi"))
    throw ParseError("parameter file needs q, sqrt_s, sqrt_xi");
  ParameterBase<Rational> b;
  b.q = rational_field(j["q"], "q");
  for (const auto& v : j["sqrt_s"]) b.rs.push_back(rational_field(v, "sqrt_s entry"));
  for (const auto& v : j["sqrt_xi"]) b.rx.push_back(rational_field(v, "sqrt_xi entry"));
  b.horizon = j.contains("horizon") ? j["horizon"].get<int>() : static_cast<int>(b.rs.size()) - 1;
  b.validate();
  return b;
}

ParameterBase<Rational> load_params_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open parameter file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return params_from_json_text(ss.str());
}

std::string params_to_json_text(const ParameterBase<Rational>& b) {
  nlohmann::json j;
  j["q"] = b.q.str();
  j["sqrt_s"] = nlohmann::json::array();
  j["sqrt_xi"] = nlohmann::json::array();
  for (const auto& x : b.rs) j["sqrt_s"].push_back(x.str());
  for (const auto& x : b.rx) j["sqrt_xi"].push_back(x.str());
  j["horizon"] = b.horizon;
  return j.dump();
}

Rational random_rational(std::mt19937_64& rng, int bound, bool allow_negative) {
  std::uniform_int_distribution<int> num(1, bound), den(1, bound), sgn(0, 1);
  long n = num(rng), d = den(rng);
  if (allow_negative && sgn(rng)) n = -n;
  return Rational(n, d);
}

ParameterBase<Rational> random_base(std::mt19937_64& rng, int horizon, int bound) {
  ParameterBase<Rational> b;
  do {
    b.q = random_rational(rng, bound);
  } while (b.q == Rational(1) || b.q == Rational(-1));
  for (int i = 0; i <= horizon; ++i) {
    b.rs.push_back(random_rational(rng, bound));
    b.rx.push_back(random_rational(rng, bound));
  }
  b.horizon = horizon;
  return b;
}

}  // namespace sqw
