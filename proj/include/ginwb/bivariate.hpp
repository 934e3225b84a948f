#pragma once

#include "ginwb/polynomial.hpp"

namespace ginwb {

/// Dense homogeneous form in two variables t, u over a prime field:
/// c[j] is the coefficient of t^(deg-j) u^j. The zero form has deg = -1.
struct Form2 {
  int deg = -1;
  std::vector<std::uint32_t> c;

  bool zero() const { return deg < 0; }
  static Form2 of_degree(int d) {
    Form2 f;
    f.deg = d;
    f.c.assign(d + 1, 0);
    return f;
  }
  void normalize() {
    for (auto x : c)
      if (x) return;
    deg = -1;
    c.clear();
  }
  friend bool operator==(const Form2& a, const Form2& b) {
    return a.deg == b.deg && a.c == b.c;
  }
};

inline Form2 form_mul(const Form2& a, const Form2& b, const PrimeField& F) {
  if (a.zero() || b.zero()) return Form2();
  Form2 r = Form2::of_degree(a.deg + b.deg);
  for (int i = 0; i <= a.deg; ++i) {
    if (!a.c[i]) continue;
    for (int j = 0; j <= b.deg; ++j)
      r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
  }
  r.normalize();
  return r;
}

inline Form2 form_add(const Form2& a, const Form2& b, const PrimeField& F) {
  if (a.zero()) return b;
  if (b.zero()) return a;
  if (a.deg != b.deg) throw ginwb_error("adding forms of different degrees");
  Form2 r = a;
  for (int j = 0; j <= b.deg; ++j) r.c[j] = F.add(r.c[j], b.c[j]);
  r.normalize();
  return r;
}

inline Form2 form_scale(const Form2& a, std::uint32_t s, const PrimeField& F) {
  if (a.zero() || s == 0) return Form2();
  Form2 r = a;
  for (auto& x : r.c) x = F.mul(x, s);
  r.normalize();
  return r;
}

/// Parse a "t^10+t^9*u+..." literal into a dense form of the stated degree.
inline Form2 parse_form(const std::string& s, int degree, const PrimeField& F) {
  Ring R2 = Ring::grevlex({"t", "u"}, F.modulus());
  Poly p = parse_poly(s, R2);
  Form2 f = Form2::of_degree(degree);
  for (const auto& tm : p.t) {
    if (tm.m.e[0] + tm.m.e[1] != degree)
      throw ginwb_error("form literal is not homogeneous of the stated degree");
    f.c[tm.m.e[1]] = F.add(f.c[tm.m.e[1]], tm.c);
  }
  f.normalize();
  return f;
}

inline std::string form_str(const Form2& f, const PrimeField& F) {
  if (f.zero()) return "0";
  std::string s;
  for (int j = 0; j <= f.deg; ++j) {
    if (!f.c[j]) continue;
    long long c = F.lift(f.c[j]);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += (c < 0) ? " - " : " + ";
    }
    long long a = c < 0 ? -c : c;
    int et = f.deg - j, eu = j;
    std::string mono;
    if (et) mono += "t" + (et > 1 ? "^" + std::to_string(et) : std::string());
    if (eu) {
      if (!mono.empty()) mono += "*";
      mono += "u" + (eu > 1 ? "^" + std::to_string(eu) : std::string());
    }
    if (a != 1 || mono.empty()) s += std::to_string(a);
    if (!mono.empty()) {
      if (a != 1) s += "*";
      s += mono;
    }
  }
  return s;
}

/// gcd of two homogeneous forms (monic): the common u-power times the
/// homogenized gcd of the dehomogenizations f(t,1).
inline Form2 form_gcd(const Form2& a, const Form2& b, const PrimeField& F) {
  if (a.zero()) return b;
  if (b.zero()) return a;
  auto upow = [](const Form2& f) {
    int k = 0;
    while (k <= f.deg && f.c[k] == 0) ++k;
    return k;
  };
  auto dehom = [](const Form2& f) {
    // univariate in t: coefficient of t^k is c[deg-k]
    std::vector<std::uint32_t> p(f.deg + 1, 0);
    for (int j = 0; j <= f.deg; ++j) p[f.deg - j] = f.c[j];
    return p;
  };
  auto deg_of = [](const std::vector<std::uint32_t>& v) {
    for (int d = static_cast<int>(v.size()) - 1; d >= 0; --d)
      if (v[d]) return d;
    return -1;
  };
  std::vector<std::uint32_t> x = dehom(a), y = dehom(b);
  while (true) {
    int dy = deg_of(y);
    if (dy < 0) break;
    int dx = deg_of(x);
    if (dx < dy) {
      std::swap(x, y);
      continue;
    }
    std::uint32_t f = F.div(x[dx], y[dy]);
    for (int k = 0; k <= dy; ++k) x[dx - dy + k] = F.sub(x[dx - dy + k], F.mul(f, y[k]));
  }
  int dg = deg_of(x);
  int uc = std::min(upow(a), upow(b));
  Form2 r = Form2::of_degree(dg + uc);
  std::uint32_t lead = x[dg];
  for (int k = 0; k <= dg; ++k)
    r.c[(dg - k) + uc] = F.div(x[k], lead);  // t^k coeff lands at u-index deg-k
  r.normalize();
  return r;
}

/// Degree of the common factor of a family of forms (0 = base-point-free,
/// -1 when all forms vanish).
inline int common_factor_degree(const std::vector<Form2>& fs, const PrimeField& F) {
  Form2 g;  // zero
  for (const auto& f : fs) {
    g = form_gcd(g, f, F);
    if (!g.zero() && g.deg == 0) return 0;
  }
  return g.zero() ? -1 : g.deg;
}

}  // namespace ginwb
