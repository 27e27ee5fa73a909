#include "sqw/yang_baxter.hpp"

#include <memory>
#include <sstream>
#include <unordered_map>

#include "sqw/params.hpp"
#include "sqw/rowops.hpp"
#include "sqw/weights.hpp"

namespace sqw::ybe {

namespace {

using Fn4 = std::function<Rational(int, int, int, int)>;

// memoized four-label weight; negative labels give 0
class Memo4 {
 public:
  explicit Memo4(Fn4 f) : f_(std::move(f)) {}
  const Rational& operator()(int i, int j, int k, int l) {
    if (i < 0 || j < 0 || k < 0 || l < 0) return zero_;
    auto key = pack4(i, j, k, l);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(key, f_(i, j, k, l)).first->second;
  }

 private:
  Fn4 f_;
  std::unordered_map<std::uint64_t, Rational> memo_;
  Rational zero_{0};
};

Rational draw_q(std::mt19937_64& rng) {
  Rational q;
  do {
    q = random_rational(rng);
  } while (q == Rational(1) || q == Rational(-1));
  return q;
}

std::vector<Boundary> thick_thin_boundaries(int cap, const std::vector<bool>& thick) {
  std::vector<Boundary> out;
  Boundary b(thick.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == b.size()) {
      out.push_back(b);
      return;
    }
    int top = thick[pos] ? cap : 1;
    for (int v = 0; v <= top; ++v) {
      b[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

std::string describe_plain(const Boundary& b) {
  std::ostringstream os;
  os << "(a1,a2,a3;b1,b2,b3)=(";
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? (i == 3 ? ";" : ",") : "") << b[i];
  os << ")";
  return os.str();
}

Rational perturbed(const Rational& v) { return v * Rational(3, 2) + Rational(1, 5); }

// ---------------------------------------------------------------- higher spin
Instance make_hs() {
  Instance in;
  in.name = "hs";
  in.summary = "higher spin weights w^s with the six-vertex R-matrix R_{x/y}";
  in.free_params = {"q", "x", "y", "s"};
  in.draw = [](std::mt19937_64& rng) {
    Params p;
    p["q"] = draw_q(rng);
    for (auto k : {"x", "y", "s"}) p[k] = random_rational(rng);
    return p;
  };
  in.check_constraint = [](const Params&) {};
  in.boundaries = [](int cap) { return thick_thin_boundaries(cap, {true, false, false, true, false, false}); };
  in.describe = describe_plain;
  in.bind = [](const Params& p, bool perturb) -> SideFn {
    Rational q = p.at("q"), x = p.at("x"), y = p.at("y"), s = p.at("s");
    Rational zr = x / y;
    if (perturb) zr = perturbed(zr);
    auto wx = std::make_shared<Memo4>([=](int i, int j, int k, int l) { return w_s(q, x, s, i, j, k, l); });
    auto wy = std::make_shared<Memo4>([=](int i, int j, int k, int l) { return w_s(q, y, s, i, j, k, l); });
    auto R = [=](Rational z) {
      return std::make_shared<Memo4>([=](int i, int j, int k, int l) { return R_mat(q, z, i, j, k, l); });
    };
    auto RL = R(x / y), RR = R(zr);
    return [=](bool left, const Boundary& b) {
      int a1 = b[0], a2 = b[1], a3 = b[2], b1 = b[3], b2 = b[4], b3 = b[5];
      Rational sum(0);
      if (left) {
        for (int l2 = 0; l2 <= 1; ++l2) {
          int l1 = a1 + a2 - l2, l3 = l1 + a3 - b1;
          sum += (*wx)(a1, a2, l1, l2) * (*wy)(l1, a3, b1, l3) * (*RL)(l2, l3, b2, b3);
        }
      } else {
        for (int l3 = 0; l3 <= 1; ++l3) {
          int l2 = a2 + a3 - l3, l1 = a1 + l3 - b3;
          sum += (*RR)(a2, a3, l2, l3) * (*wy)(a1, l3, l1, b3) * (*wx)(l1, l2, b1, b2);
        }
      }
      return sum;
    };
  };
  return in;
}

// ---------------------------------------------------------------- q-Hahn, optionally deformed
Instance make_W(bool deformed) {
  Instance in;
  in.name = deformed ? "defW" : "W";
  in.summary = deformed ? "deformed q-Hahn equation, eta^2 = E enters the left side only"
                        : "q-Hahn weights W^s with three thick lines";
  in.free_params = deformed ? std::vector<std::string>{"q", "T1", "T2", "T3", "E"}
                            : std::vector<std::string>{"q", "T1", "T2", "T3"};
  in.draw = [deformed](std::mt19937_64& rng) {
    Params p;
    p["q"] = draw_q(rng);
    for (auto k : {"T1", "T2", "T3"}) p[k] = random_rational(rng);
    p["E"] = deformed ? random_rational(rng) : Rational(1);
    return p;
  };
  in.check_constraint = [deformed](const Params& p) {
    if (!deformed && p.at("E") != Rational(1)) throw PreconditionError("W instance needs E = 1");
  };
  in.boundaries = [](int cap) { return thick_thin_boundaries(cap, {true, true, true, true, true, true}); };
  in.describe = describe_plain;
  in.bind = [](const Params& p, bool perturb) -> SideFn {
    Rational q = p.at("q"), T1 = p.at("T1"), T2 = p.at("T2"), T3 = p.at("T3"), E = p.at("E");
    auto W = [=](Rational t2, Rational s2) {
      return std::make_shared<Memo4>([=](int i, int j, int k, int l) { return W_s(q, t2, s2, i, j, k, l); });
    };
    auto L1 = W(E * T2, E * T3), L2 = W(T1, T3), L3 = W(E * T1, E * T2);
    Rational T1r = perturb ? perturbed(T1) : T1;
    auto R1 = W(T1r, T2), R2 = W(E * T1r, E * T3), R3 = W(T2, T3);
    return [=](bool left, const Boundary& b) {
      int a1 = b[0], a2 = b[1], a3 = b[2], b1 = b[3], b2 = b[4], b3 = b[5];
      Rational sum(0);
      if (left) {
        for (int l2 = 0; l2 <= a3 + a2; ++l2) {
          int l3 = a3 + a2 - l2, l1 = l3 + a1 - b3;
          if (l2 + l1 != b2 + b1) continue;
          sum += (*L1)(a3, a2, l3, l2) * (*L2)(l3, a1, b3, l1) * (*L3)(l2, l1, b2, b1);
        }
      } else {
        for (int l1 = 0; l1 <= a2 + a1; ++l1) {
          int l2 = a2 + a1 - l1, l3 = a3 + l1 - b1;
          if (l3 + l2 != b3 + b2) continue;
          sum += (*R1)(a2, a1, l2, l1) * (*R2)(a3, l1, l3, b1) * (*R3)(l3, l2, b3, b2);
        }
      }
      return sum;
    };
  };
  return in;
}

// ---------------------------------------------------------------- dual weights
Instance make_dual() {
  Instance in;
  in.name = "dual";
  in.summary = "dual weights w^{s*} with the R-matrix R_{y/x}";
  in.free_params = {"q", "x", "y", "s"};
  in.draw = [](std::mt19937_64& rng) {
    Params p;
    p["q"] = draw_q(rng);
    for (auto k : {"x", "y", "s"}) p[k] = random_rational(rng);
    return p;
  };
  in.check_constraint = [](const Params&) {};
  in.boundaries = [](int cap) { return thick_thin_boundaries(cap, {true, false, false, true, false, false}); };
  in.describe = describe_plain;
  in.bind = [](const Params& p, bool perturb) -> SideFn {
    Rational q = p.at("q"), x = p.at("x"), y = p.at("y"), s = p.at("s");
    auto wx = std::make_shared<Memo4>([=](int i, int l, int k, int j) { return w_s_star(q, x, s, i, l, k, j); });
    auto wy = std::make_shared<Memo4>([=](int i, int l, int k, int j) { return w_s_star(q, y, s, i, l, k, j); });
    auto R = [=](Rational z) {
      return std::make_shared<Memo4>([=](int i, int j, int k, int l) { return R_mat(q, z, i, j, k, l); });
    };
    auto RL = R(y / x), RR = R(perturb ? perturbed(y / x) : y / x);
    return [=](bool left, const Boundary& b) {
      int a1 = b[0], a2 = b[1], a3 = b[2], b1 = b[3], b2 = b[4], b3 = b[5];
      Rational sum(0);
      if (left) {
        for (int l2 = 0; l2 <= 1; ++l2) {
          int l1 = a1 + l2 - a2, l3 = b1 + a3 - l1;
          sum += (*wx)(a1, l2, l1, a2) * (*wy)(l1, l3, b1, a3) * (*RL)(l3, l2, b3, b2);
        }
      } else {
        for (int l3 = 0; l3 <= 1; ++l3) {
          int l2 = a3 + a2 - l3, l1 = a1 + b3 - l3;
          sum += (*RR)(a3, a2, l3, l2) * (*wy)(a1, b3, l1, l3) * (*wx)(l1, b2, b1, l2);
        }
      }
      return sum;
    };
  };
  return in;
}

// ---------------------------------------------------------------- Cauchy-type, optionally deformed
Instance make_cauchy(bool deformed) {
  Instance in;
  in.name = deformed ? "defCauchy" : "cauchy";
  in.summary = deformed ? "deformed Cauchy-type equation, xs = yt, eta on one dual vertex per side"
                        : "Cauchy-type equation mixing W^s and w^{s*}, xs = yt";
  in.free_params = deformed ? std::vector<std::string>{"q", "x", "s", "t", "eta"}
                            : std::vector<std::string>{"q", "x", "s", "t"};
  in.draw = [deformed](std::mt19937_64& rng) {
    Params p;
    p["q"] = draw_q(rng);
    for (auto k : {"x", "s", "t"}) p[k] = random_rational(rng);
    p["eta"] = deformed ? random_rational(rng) : Rational(1);
    p["y"] = p["x"] * p["s"] / p["t"];
    return p;
  };
  in.check_constraint = [deformed](const Params& p) {
    if (p.at("x") * p.at("s") != p.at("y") * p.at("t")) throw PreconditionError("Cauchy-type instance needs xs = yt");
    if (!deformed && p.at("eta") != Rational(1)) throw PreconditionError("undeformed instance needs eta = 1");
  };
  in.boundaries = [](int cap) { return thick_thin_boundaries(cap, {false, true, true, false, true, true}); };
  in.describe = describe_plain;
  in.bind = [](const Params& p, bool perturb) -> SideFn {
    Rational q = p.at("q"), x = p.at("x"), y = p.at("y"), s = p.at("s"), t = p.at("t"), eta = p.at("eta");
    auto ws = [=](Rational u, Rational sp) {
      return std::make_shared<Memo4>([=](int i, int l, int k, int j) { return w_s_star(q, u, sp, i, l, k, j); });
    };
    auto W = [=](Rational t2, Rational s2) {
      return std::make_shared<Memo4>([=](int i, int j, int k, int l) { return W_s(q, t2, s2, i, j, k, l); });
    };
    auto WL = W(t * t, s * s);
    auto wexL = ws(eta * x, eta * s), wyL = ws(y, t);
    Rational xr = perturb ? perturbed(x) : x;
    auto weyR = ws(eta * y, eta * t), wxR = ws(xr, s);
    auto WR = W(t * t, s * s);
    return [=](bool left, const Boundary& b) {
      int a1 = b[0], a2 = b[1], a3 = b[2], b1 = b[3], b2 = b[4], b3 = b[5];
      Rational sum(0);
      for (int l1 = 0; l1 <= 1; ++l1) {
        if (left) {
          int l3 = b3 + a1 - l1, l2 = a3 + a2 - l3;
          sum += (*WL)(a3, a2, l3, l2) * (*wexL)(l3, l1, b3, a1) * (*wyL)(l2, b1, b2, l1);
        } else {
          int l2 = a2 + l1 - a1, l3 = a3 + b1 - l1;
          sum += (*weyR)(a2, l1, l2, a1) * (*wxR)(a3, b1, l3, l1) * (*WR)(l3, l2, b3, b2);
        }
      }
      return sum;
    };
  };
  return in;
}

// ---------------------------------------------------------------- colored, n = 2
constexpr int kColors = 2;

int code(const Composition& I) {
  int c = 0;
  for (int i = kColors - 1; i >= 0; --i) {
    if (I[i] < 0 || I[i] > 15) return -1;
    c = c * 16 + I[i];
  }
  return c;
}

Composition decode(int c) {
  Composition I(kColors);
  for (int i = 0; i < kColors; ++i) {
    I[i] = c % 16;
    c /= 16;
  }
  return I;
}

Composition unit(int color) {
  Composition e(kColors, 0);
  if (color > 0) e[color - 1] = 1;
  return e;
}

Composition add(const Composition& a, const Composition& b, int sign = 1) {
  Composition r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + sign * b[i];
  return r;
}

std::vector<Composition> compositions_upto(int total) {
  std::vector<Composition> out;
  for (int a = 0; a <= total; ++a)
    for (int b = 0; a + b <= total; ++b) out.push_back({a, b});
  return out;
}

int abs_size(const Composition& I) { return comp_sum(I, 1, static_cast<int>(I.size())); }

// flat boundary: A1(2) A2(2) a b B1(2) B2(2)
Instance make_col_def() {
  Instance in;
  in.name = "colDef";
  in.summary = "colored deformed equation with W^col and w^col, n = 2, x/s = y/t";
  in.free_params = {"q", "x", "s", "t", "eta"};
  in.default_cap = 3;
  in.draw = [](std::mt19937_64& rng) {
    Params p;
    p["q"] = draw_q(rng);
    for (auto k : {"x", "s", "t", "eta"}) p[k] = random_rational(rng);
    p["y"] = p["x"] * p["t"] / p["s"];
    return p;
  };
  in.check_constraint = [](const Params& p) {
    if (p.at("x") * p.at("t") != p.at("y") * p.at("s")) throw PreconditionError("colored instance needs x/s = y/t");
  };
  in.boundaries = [](int cap) {
    std::vector<Boundary> out;
    auto comps = compositions_upto(cap);
    for (const auto& A1 : comps)
      for (const auto& A2 : comps)
        for (int a = 0; a <= kColors; ++a)
          for (int b = 0; b <= kColors; ++b)
            for (const auto& B2 : comps) {
              Composition B1 = add(add(add(A1, A2), unit(a)), add(unit(b), B2), -1);
              bool ok = true;
              for (int x : B1) ok = ok && x >= 0;
              if (!ok || abs_size(B1) > cap) continue;
              out.push_back({A1[0], A1[1], A2[0], A2[1], a, b, B1[0], B1[1], B2[0], B2[1]});
            }
    return out;
  };
  in.describe = [](const Boundary& b) {
    std::ostringstream os;
    os << "A1=(" << b[0] << "," << b[1] << ") A2=(" << b[2] << "," << b[3] << ") a=" << b[4] << " b=" << b[5]
       << " B1=(" << b[6] << "," << b[7] << ") B2=(" << b[8] << "," << b[9] << ")";
    return os.str();
  };
  in.bind = [](const Params& p, bool perturb) -> SideFn {
    Rational q = p.at("q"), x = p.at("x"), y = p.at("y"), s = p.at("s"), t = p.at("t"), eta = p.at("eta");
    // thin colored weight keyed by (code I, a, code K, b)
    auto wc = [=](Rational u, Rational sp) {
      return std::make_shared<Memo4>([=](int I, int a, int K, int b) {
        return w_col(q, u, sp, decode(I), a, decode(K), b);
      });
    };
    struct WcolMemo {
      Rational q, t2, s2;
      std::unordered_map<std::uint64_t, Rational> memo;
      Rational operator()(const Composition& I, const Composition& J, const Composition& K, const Composition& L) {
        int ci = code(I), cj = code(J), ck = code(K), cl = code(L);
        if (ci < 0 || cj < 0 || ck < 0 || cl < 0) return Rational(0);
        auto key = pack4(ci, cj, ck, cl);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        return memo.emplace(key, W_col(q, t2, s2, I, J, K, L)).first->second;
      }
    };
    auto WL = std::make_shared<WcolMemo>(WcolMemo{q, t * t, s * s, {}});
    auto WR = std::make_shared<WcolMemo>(WcolMemo{q, t * t, s * s, {}});
    auto wxL = wc(x / eta, eta * s), wyL = wc(y, t);
    Rational xr = perturb ? perturbed(x) : x;
    auto wyR = wc(y / eta, eta * t), wxR = wc(xr, s);
    return [=](bool left, const Boundary& bd) {
      Composition A1{bd[0], bd[1]}, A2{bd[2], bd[3]}, B1{bd[6], bd[7]}, B2{bd[8], bd[9]};
      int a = bd[4], b = bd[5];
      Rational sum(0);
      for (int l1 = 0; l1 <= kColors; ++l1) {
        if (left) {
          Composition l3 = add(add(B2, unit(l1)), unit(a), -1);
          Composition l2 = add(add(A2, A1), l3, -1);
          int c3 = code(l3), c2 = code(l2);
          if (c3 < 0 || c2 < 0) continue;
          sum += (*WL)(A2, A1, l3, l2) * (*wxL)(c3, a, code(B2), l1) * (*wyL)(c2, l1, code(B1), b);
        } else {
          Composition l2 = add(add(A1, unit(a)), unit(l1), -1);
          Composition l3 = add(add(A2, unit(l1)), unit(b), -1);
          int c3 = code(l3), c2 = code(l2);
          if (c3 < 0 || c2 < 0) continue;
          sum += (*wyR)(code(A1), a, c2, l1) * (*wxR)(code(A2), l1, c3, b) * (*WR)(l3, l2, B2, B1);
        }
      }
      return sum;
    };
  };
  return in;
}

// ---------------------------------------------------------------- continued labels, 6 alpha values
constexpr int kAlphas = 6;

Instance make_cont_cauchy() {
  Instance in;
  in.name = "contCauchy";
  in.summary = "Cauchy-type equation with a continued vertical label alpha, checked at 6 alpha values";
  in.free_params = {"q", "x", "s", "t", "alpha0..alpha5"};
  in.draw = [](std::mt19937_64& rng) {
    Params p;
    p["q"] = draw_q(rng);
    for (auto k : {"x", "s", "t"}) p[k] = random_rational(rng);
    p["y"] = p["x"] * p["s"] / p["t"];
    for (int i = 0; i < kAlphas; ++i) {
      Rational a;
      bool fresh;
      do {
        a = random_rational(rng);
        fresh = true;
        for (int j = 0; j < i; ++j) fresh = fresh && p["alpha" + std::to_string(j)] != a;
      } while (!fresh);
      p["alpha" + std::to_string(i)] = a;
    }
    return p;
  };
  in.check_constraint = [](const Params& p) {
    if (p.at("x") * p.at("s") != p.at("y") * p.at("t")) throw PreconditionError("contCauchy needs xs = yt");
  };
  // (a1, a3, b1, b2, Delta, alpha index)
  in.boundaries = [](int cap) {
    std::vector<Boundary> out;
    for (int a1 = 0; a1 <= 1; ++a1)
      for (int a3 = 0; a3 <= cap; ++a3)
        for (int b1 = 0; b1 <= 1; ++b1)
          for (int b2 = 0; b2 <= cap; ++b2)
            for (int d = -2; d <= cap + 2; ++d)
              for (int k = 0; k < kAlphas; ++k) out.push_back({a1, a3, b1, b2, d, k});
    return out;
  };
  in.describe = [](const Boundary& b) {
    std::ostringstream os;
    os << "(a1,a3,b1,b2,Delta)=(" << b[0] << "," << b[1] << "," << b[2] << "," << b[3] << "," << b[4]
       << ") alpha" << b[5];
    return os.str();
  };
  in.bind = [](const Params& p, bool perturb) -> SideFn {
    Rational q = p.at("q"), x = p.at("x"), y = p.at("y"), s = p.at("s"), t = p.at("t");
    std::vector<Rational> alpha;
    for (int i = 0; i < kAlphas; ++i) alpha.push_back(p.at("alpha" + std::to_string(i)));
    Rational xr = perturb ? perturbed(x) : x;
    return [=](bool left, const Boundary& b) {
      int a1 = b[0], a3 = b[1], b1 = b[2], b2 = b[3], D = b[4];
      const Rational& al = alpha[b[5]];
      Rational sum(0);
      if (left) {
        for (int l2 = 0; l2 <= a3; ++l2)
          for (int l1 = 0; l1 <= 1; ++l1) {
            int d1 = a3 - l2;
            if (d1 + l1 - a1 != D) continue;
            Rational w1 = W_tilde(q, t * t, s * s, a3, d1, l2);
            if (w1.is_zero()) continue;
            Rational beta = ipow(q, d1) * al;
            sum += w1 * w_tilde_star(q, x, s, beta, l1, a1) * w_s_star(q, y, t, l2, b1, b2, l1);
          }
      } else {
        for (int l1 = 0; l1 <= 1; ++l1) {
          int l3 = a3 + b1 - l1;
          if (l3 < 0) continue;
          int d2 = l3 - b2;
          if (l1 - a1 + d2 != D) continue;
          sum += w_s_star(q, xr, s, a3, b1, l3, l1) * w_tilde_star(q, y, t, al, l1, a1) *
                 W_tilde(q, t * t, s * s, l3, d2, b2);
        }
      }
      return sum;
    };
  };
  return in;
}

}  // namespace

std::string params_str(const Params& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : p) {
    os << (first ? "" : " ") << k << "=" << v.str();
    first = false;
  }
  return os.str();
}

const std::vector<Instance>& instances() {
  static const std::vector<Instance> all = {make_hs(),          make_W(false),     make_dual(),
                                            make_cauchy(false), make_W(true),      make_cauchy(true),
                                            make_col_def(),     make_cont_cauchy()};
  return all;
}

const Instance& find_instance(const std::string& name) {
  for (const auto& in : instances())
    if (in.name == name) return in;
  throw PreconditionError("unknown Yang-Baxter instance '" + name + "'");
}

Rational ybe_side(const Instance& inst, bool left, const Boundary& boundary, const Params& params) {
  inst.check_constraint(params);
  return inst.bind(params, false)(left, boundary);
}

namespace {

constexpr int kMaxRedraws = 50;

// draws a point, retrying on poles hit while evaluating every boundary
template <class Body>
Params run_with_redraw(const Instance& inst, std::mt19937_64& rng, Body body) {
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    Params p = inst.draw(rng);
    inst.check_constraint(p);
    try {
      body(p);
      return p;
    } catch (const PoleError&) {
    }
  }
  throw PoleError("no pole-free parameter point after repeated draws");
}

}  // namespace

VerificationReport check_instance(const Instance& inst, int cap, int trials, std::uint64_t seed, bool perturb) {
  if (cap < 1) throw PreconditionError("cap must be at least 1");
  VerificationReport rep;
  rep.name = "ybe:" + inst.name + (perturb ? " (perturbed)" : "");
  rep.seed = seed;
  rep.extra["cap"] = std::to_string(cap);
  std::mt19937_64 rng(seed);
  auto bds = inst.boundaries(cap);
  for (int tr = 0; tr < trials; ++tr) {
    VerificationReport local;
    Params used = run_with_redraw(inst, rng, [&](const Params& p) {
      local = VerificationReport{};
      SideFn side = inst.bind(p, perturb);
      for (const auto& b : bds) {
        Rational l = side(true, b), r = side(false, b);
        local.record(l == r, inst.describe(b) + " @ " + params_str(p), l.str(), r.str());
      }
    });
    if (tr == 0) rep.point = params_str(used);
    local.trials = 1;
    rep.merge(local);
  }
  return rep;
}

VerificationReport check_eta_one(int cap, int trials, std::uint64_t seed) {
  VerificationReport rep;
  rep.name = "ybe:eta-one";
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  const auto& defc = find_instance("defCauchy");
  const auto& cauchy = find_instance("cauchy");
  const auto& defw = find_instance("defW");
  const auto& w = find_instance("W");
  for (int tr = 0; tr < trials; ++tr) {
    for (auto [d, u] : {std::pair{&defc, &cauchy}, std::pair{&defw, &w}}) {
      auto bds = d->boundaries(cap);
      run_with_redraw(*u, rng, [&](const Params& p) {
        VerificationReport local;
        SideFn a = d->bind(p, false), b = u->bind(p, false);
        for (const auto& bd : bds)
          for (bool left : {true, false}) {
            Rational x = a(left, bd), y = b(left, bd);
            local.record(x == y, d->name + " vs " + u->name + " " + u->describe(bd), x.str(), y.str());
          }
        local.trials = 1;
        rep.merge(local);
      });
    }
  }
  return rep;
}

VerificationReport check_colored_dictionary(int cap, int trials, std::uint64_t seed) {
  VerificationReport rep;
  rep.name = "ybe:colored-dictionary";
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  const auto& cauchy = find_instance("defCauchy");
  for (int tr = 0; tr < trials; ++tr) {
    run_with_redraw(cauchy, rng, [&](const Params& p) {
      VerificationReport local;
      Rational q = p.at("q"), x = p.at("x"), y = p.at("y"), s = p.at("s"), t = p.at("t"), eta = p.at("eta");
      SideFn dy = cauchy.bind(p, false);
      // n = 1 colored sides evaluated directly with x' = 1/x, y' = 1/y
      Rational xc = inv(x), yc = inv(y);
      auto c = [](const Rational& u, const Rational& sp) { return (sp - u) / (sp * (Rational(1) - u * sp)); };
      Rational scale = c(eta * x, eta * s) * c(y, t);
      auto C = [](int v) { return Composition{v}; };
      auto e = [](int col) { return col ? 1 : 0; };
      for (int a1 = 0; a1 <= 1; ++a1)
        for (int b1 = 0; b1 <= 1; ++b1)
          for (int a2 = 0; a2 <= cap; ++a2)
            for (int a3 = 0; a3 <= cap; ++a3)
              for (int b2 = 0; b2 <= cap; ++b2)
                for (int b3 = 0; b3 <= cap; ++b3) {
                  Boundary bd{a1, a2, a3, b1, b2, b3};
                  int a = 1 - a1, b = 1 - b1;
                  for (bool left : {true, false}) {
                    Rational col(0);
                    for (int l1 = 0; l1 <= 1; ++l1) {
                      if (left) {
                        int l3 = b3 + e(l1) - e(a), l2 = a3 + a2 - l3;
                        if (l3 < 0 || l2 < 0) continue;
                        col += W_col(q, t * t, s * s, C(a3), C(a2), C(l3), C(l2)) *
                               w_col(q, xc / eta, eta * s, C(l3), a, C(b3), l1) *
                               w_col(q, yc, t, C(l2), l1, C(b2), b);
                      } else {
                        int l2 = a2 + e(a) - e(l1), l3 = a3 + e(l1) - e(b);
                        if (l3 < 0 || l2 < 0) continue;
                        col += w_col(q, yc / eta, eta * t, C(a2), a, C(l2), l1) *
                               w_col(q, xc, s, C(a3), l1, C(l3), b) *
                               W_col(q, t * t, s * s, C(l3), C(l2), C(b3), C(b2));
                      }
                    }
                    Rational lhs = col * scale, rhs = dy(left, bd);
                    local.record(lhs == rhs, std::string(left ? "L " : "R ") + cauchy.describe(bd), lhs.str(), rhs.str());
                  }
                }
      local.trials = 1;
      rep.merge(local);
    });
  }
  return rep;
}

}  // namespace sqw::ybe
