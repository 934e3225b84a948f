#pragma once

#include <set>

#include "ginwb/monomial_ideal.hpp"
#include "ginwb/rational.hpp"

namespace ginwb {

enum class SurfaceKind { F0, F1, F2, F3, Bl6P2 };

/// Integer divisor class in the model basis: (e, f) on a Hirzebruch surface,
/// (l; E1..E6) on the six-point blow-up of the plane.
struct DivisorClass {
  std::vector<long long> c;

  DivisorClass() = default;
  DivisorClass(std::initializer_list<long long> v) : c(v) {}
  explicit DivisorClass(std::vector<long long> v) : c(std::move(v)) {}

  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    DivisorClass r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
  }
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    DivisorClass r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
  }
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.c == b.c; }
  friend bool operator<(const DivisorClass& a, const DivisorClass& b) { return a.c < b.c; }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) s += i == 1 && c.size() > 2 ? ";" : ",";
      s += std::to_string(c[i]);
    }
    return s + ")";
  }
};

/// Intersection pairing and canonical class for the surfaces in play:
/// F_n with e^2 = -n, e.f = 1, f^2 = 0, K = -2e - (n+2)f; the blown-up
/// plane with l^2 = 1, E_i^2 = -1, mixed products 0, K = -3l + sum E_i.
struct SurfaceModel {
  SurfaceKind kind = SurfaceKind::F0;
  int n = 0;  // for F_n

  static SurfaceModel hirzebruch(int n) {
    SurfaceModel S;
    S.n = n;
    switch (n) {
      case 0: S.kind = SurfaceKind::F0; break;
      case 1: S.kind = SurfaceKind::F1; break;
      case 2: S.kind = SurfaceKind::F2; break;
      case 3: S.kind = SurfaceKind::F3; break;
      default: throw ginwb_error("unsupported Hirzebruch index");
    }
    return S;
  }
  static SurfaceModel blowup6() {
    SurfaceModel S;
    S.kind = SurfaceKind::Bl6P2;
    return S;
  }

  int rank() const { return kind == SurfaceKind::Bl6P2 ? 7 : 2; }

  long long pair(const DivisorClass& A, const DivisorClass& B) const {
    if (static_cast<int>(A.c.size()) != rank() || static_cast<int>(B.c.size()) != rank())
      throw ginwb_error("divisor class rank mismatch");
    if (kind == SurfaceKind::Bl6P2) {
      long long s = A.c[0] * B.c[0];
      for (int i = 1; i < 7; ++i) s -= A.c[i] * B.c[i];
      return s;
    }
    // (a1 e + b1 f).(a2 e + b2 f) = -n a1 a2 + a1 b2 + a2 b1
    return -static_cast<long long>(n) * A.c[0] * B.c[0] + A.c[0] * B.c[1] + A.c[1] * B.c[0];
  }

  DivisorClass canonical() const {
    if (kind == SurfaceKind::Bl6P2) return DivisorClass{-3, 1, 1, 1, 1, 1, 1};
    return DivisorClass{-2, -static_cast<long long>(n) - 2};
  }
};

struct DivisorStats {
  long long degree = 0;
  long long self_intersection = 0;
  long long genus = 0;
  bool genus_integral = true;
  Rational chi;
};

/// degree = C.H, self-intersection, adjunction genus from (K+C).C = 2g-2,
/// and chi via Riemann-Roch: chi = 1 + (C^2 - C.K)/2.
inline DivisorStats divisor_stats(const SurfaceModel& S, const DivisorClass& C,
                                  const DivisorClass& H) {
  DivisorStats r;
  r.degree = S.pair(C, H);
  r.self_intersection = S.pair(C, C);
  long long adj = S.pair(S.canonical() + C, C);
  r.genus_integral = ((adj + 2) % 2) == 0;
  r.genus = (adj + 2) / 2;
  r.chi = Rational(1) + Rational(r.self_intersection - S.pair(C, S.canonical()), 2);
  return r;
}

/// Closed form for h^0(O_{F_n}(a e + b f)), valid for a >= 0:
/// sum_{j=0}^{a} max(0, b - j n + 1).
inline long long h0_line_bundle_fn(int n, int a, int b) {
  if (a < 0) throw ginwb_error("h0_line_bundle_fn expects a >= 0");
  long long s = 0;
  for (int j = 0; j <= a; ++j) s += std::max(0LL, static_cast<long long>(b) - j * n + 1);
  return s;
}

/// All integer classes with C.H = degree and adjunction genus in the set,
/// searched over a bounded box. The effectivity filter C.e >= 0, C.f >= 0
/// is on by default (off for the F_3 vertex analysis).
inline std::vector<DivisorClass> solve_classes(const SurfaceModel& S, const DivisorClass& H,
                                               long long degree,
                                               const std::set<long long>& genus_set,
                                               bool effectivity = true,
                                               long long box = 24) {
  if (S.kind == SurfaceKind::Bl6P2)
    throw ginwb_error("solve_classes covers the Hirzebruch models");
  std::vector<DivisorClass> out;
  DivisorClass e{1, 0}, f{0, 1};
  for (long long a = -box; a <= box; ++a)
    for (long long b = -box; b <= box; ++b) {
      DivisorClass C{a, b};
      if (S.pair(C, H) != degree) continue;
      auto st = divisor_stats(S, C, H);
      if (!st.genus_integral || !genus_set.count(st.genus)) continue;
      if (effectivity && (S.pair(C, e) < 0 || S.pair(C, f) < 0)) continue;
      out.push_back(C);
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// Integer solutions of the four conditions on classes a l + sum b_i E_i of
/// smooth rational curves of degree 11 on the blown-up plane:
///   (1) a(a-3) - sum (b_i+1) b_i = -2      (adjunction, g = 0)
///   (2) 3a + sum b_i = 11                  (degree)
///   (3) a >= 4 and b_i <= 0                (effectivity against E_i)
///   (4) b_i >= -1                          (smoothness)
/// Individual conditions can be dropped to probe the system; the full system
/// has no solutions.
inline std::vector<std::vector<long long>> blowup6_solutions(bool use_res1 = true,
                                                             bool use_res2 = true,
                                                             bool use_res3 = true,
                                                             bool use_res4 = true) {
  std::vector<std::vector<long long>> out;
  long long alo = use_res3 ? 4 : -8, ahi = 10;
  long long blo = use_res4 ? -1 : -4;
  long long bhi = use_res3 ? 0 : 4;
  std::vector<long long> b(6, blo);
  std::function<void(int, long long)> rec = [&](int idx, long long a) {
    if (idx == 6) {
      long long sb = 0, qb = 0;
      for (long long bi : b) {
        sb += bi;
        qb += (bi + 1) * bi;
      }
      if (use_res2 && 3 * a + sb != 11) return;
      if (use_res1 && a * (a - 3) - qb != -2) return;
      std::vector<long long> sol = {a};
      sol.insert(sol.end(), b.begin(), b.end());
      out.push_back(sol);
      return;
    }
    for (long long v = blo; v <= bhi; ++v) {
      if (idx > 0 && v > b[idx - 1]) break;  // b nonincreasing: canonical form
      b[idx] = v;
      rec(idx + 1, a);
    }
  };
  for (long long a = alo; a <= ahi; ++a) rec(0, a);
  return out;
}

struct NormalSheafBound {
  long long degree_bound = 0;   // -K.C - 2
  long long section_bound = 0;  // degree bound + 1
};

inline NormalSheafBound normal_sheaf_bound(const SurfaceModel& S, const DivisorClass& C) {
  NormalSheafBound r;
  DivisorClass mK = DivisorClass{0, 0} - S.canonical();
  if (S.kind == SurfaceKind::Bl6P2) mK = DivisorClass{3, -1, -1, -1, -1, -1, -1};
  r.degree_bound = S.pair(mK, C) - 2;
  r.section_bound = r.degree_bound + 1;
  return r;
}

/// Hilbert polynomial of a complete intersection of hypersurfaces of the
/// given degrees in P^N, from the alternating Koszul sum.
inline RationalPoly koszul_chi(const std::vector<int>& degrees, int N) {
  if (degrees.empty() || static_cast<int>(degrees.size()) > N)
    throw ginwb_error("koszul_chi: 1 <= #degrees <= N required");
  RationalPoly chi;
  int k = static_cast<int>(degrees.size());
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    long long shift = N;
    int sgn = 1;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) {
        shift -= degrees[i];
        sgn = -sgn;
      }
    RationalPoly term = binomial_poly(shift, N);
    chi = (sgn > 0) ? chi + term : chi - term;
  }
  return chi;
}

struct LiaisonResidual {
  RationalPoly chi_residual;
  long long sectional_genus = 0;
};

/// chi of the residual surface via the duality substitution
/// chi_res(s) = (chi_X - chi_link)(1 - s); sectional genus
/// 1 - (chi_res(0) - chi_res(-1)).
inline LiaisonResidual liaison_residual_chi(const RationalPoly& chi_X,
                                            const RationalPoly& chi_link) {
  LiaisonResidual r;
  RationalPoly diff = chi_X - chi_link;
  r.chi_residual = diff.substituted_linear(Rational(1), Rational(-1));
  Rational sg = Rational(1) - (r.chi_residual.eval(Rational(0)) -
                               r.chi_residual.eval(Rational(-1)));
  if (!sg.is_integer()) throw ginwb_error("sectional genus is not an integer");
  r.sectional_genus = sg.num;
  return r;
}

enum class CIType { C333_P4, C44_P3 };

struct LiaisonBounds {
  CIType type;
  long long m = 0;  // degree of the nonreduced piece Y
  // (3,3,3) complete intersections of cubics in P^4:
  long long secant_cap = 0;           // deg(C ^ Y') <= 48 - 3m
  long long residual_genus_lower = 0; // g(C~) >= ceil(7m/2) - 1
  long long contact_lower = 0;        // deg(C ^ Y) >= ceil(7m/2 - g - gY)
  // (4,4) complete intersections in P^3:
  long long link_degree = 0;          // deg(C ^ C') = 46 - 2g
  long long quartic_cap = 0;          // deg(C ^ Y') <= 20 - 4m
  long long contact_lower_44 = 0;     // deg(C ^ Y) >= 26 + 4m - 2g
};

inline long long ceil_div(long long a, long long b) {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

inline LiaisonBounds liaison_bounds(CIType type, long long m, long long g, long long gY) {
  LiaisonBounds r;
  r.type = type;
  r.m = m;
  if (type == CIType::C333_P4) {
    r.secant_cap = 48 - 3 * m;
    r.residual_genus_lower = ceil_div(7 * m, 2) - 1;
    r.contact_lower = ceil_div(7 * m - 2 * (g + gY), 2);
  } else {
    r.link_degree = 46 - 2 * g;
    r.quartic_cap = 20 - 4 * m;
    r.contact_lower_44 = 26 + 4 * m - 2 * g;
  }
  return r;
}

/// The family-dimension bookkeeping for quartic scrolls and their curves,
/// reproduced as auditable sums.
struct ScrollFamilyDims {
  long long s22_map_family = 0;        // maps F_0 -> P^5 by 6 sections: 6*6
  long long s22_projected_maps = 0;    // 5 sections: 5*6
  long long f0_automorphisms = 6;
  long long s22_family = 0;            // projected scrolls: 30 - 6
  long long curve_dim_1_9 = 0;         // class (a,b) curves vary in a+b+2
  long long curve_dim_5_1 = 0;
  long long s22_total = 0;             // scrolls + largest curve family
  long long s13_projected_maps = 0;    // 5 sections of e+3f on F_2
  long long f2_automorphisms = 7;
  long long s13_family = 0;            // 30 - 7
  long long s13_curve_sections = 0;    // h^0(O_{F_2}(2e+3f))
  long long s13_total = 0;             // 23 + 6
  bool veronese_even_degree_only = true;  // degree-11 curves cannot arise
};

inline ScrollFamilyDims scroll_family_dims() {
  ScrollFamilyDims r;
  long long h0_f0 = h0_line_bundle_fn(0, 1, 2);  // 6
  r.s22_map_family = 6 * h0_f0;
  r.s22_projected_maps = 5 * h0_f0;
  r.s22_family = r.s22_projected_maps - r.f0_automorphisms;
  r.curve_dim_1_9 = 1 + 9 + 2;
  r.curve_dim_5_1 = 5 + 1 + 2;
  r.s22_total = r.s22_family + std::max(r.curve_dim_1_9, r.curve_dim_5_1);
  long long h0_f2 = h0_line_bundle_fn(2, 1, 3);  // 6
  r.s13_projected_maps = 5 * h0_f2;
  r.s13_family = r.s13_projected_maps - r.f2_automorphisms;
  r.s13_curve_sections = h0_line_bundle_fn(2, 2, 3);  // 6
  r.s13_total = r.s13_family + r.s13_curve_sections;
  return r;
}

/// Surface/class literal parser: "F1:(4,7)" or "Bl6P2:(4;-1,0,0,0,0,0)".
inline std::pair<SurfaceModel, DivisorClass> parse_surface_literal(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw ginwb_error("bad surface literal");
  std::string name = s.substr(0, colon);
  SurfaceModel S;
  if (name == "F0") S = SurfaceModel::hirzebruch(0);
  else if (name == "F1") S = SurfaceModel::hirzebruch(1);
  else if (name == "F2") S = SurfaceModel::hirzebruch(2);
  else if (name == "F3") S = SurfaceModel::hirzebruch(3);
  else if (name == "Bl6P2") S = SurfaceModel::blowup6();
  else throw ginwb_error("unknown surface '" + name + "'");
  std::string rest = s.substr(colon + 1);
  std::vector<long long> vals;
  std::string cur;
  for (char ch : rest) {
    if (ch == '(' || ch == ' ') continue;
    if (ch == ',' || ch == ';' || ch == ')') {
      if (!cur.empty()) vals.push_back(std::stoll(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) vals.push_back(std::stoll(cur));
  if (static_cast<int>(vals.size()) != S.rank())
    throw ginwb_error("class rank mismatch in surface literal");
  return {S, DivisorClass(std::move(vals))};
}

}  // namespace ginwb
