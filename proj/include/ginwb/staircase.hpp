#pragma once

#include "ginwb/monomial_ideal.hpp"

namespace ginwb {

/// Staircase encoding of a zero-dimensional Borel-fixed ideal in two
/// variables (point schemes in the plane). lambda[a] is the number of
/// standard monomials in the column x0^a x1^*; the canonical encoding is
/// strictly decreasing and ends with a single 0 (the column of the pure
/// x0-power generator). The generators are read off as
/// (x0^k, x0^{k-1} x1^{lambda_{k-1}}, ..., x1^{lambda_0}) with redundant
/// entries pruned.
struct StaircaseP3 {
  std::vector<int> lambda;

  long long degree() const {
    long long s = 0;
    for (int v : lambda) s += v;
    return s;
  }

  /// Window condition lambda_i - 1 >= lambda_{i+1} >= lambda_i - 2 for every
  /// consecutive pair, trailing zero included.
  bool gp_admissible() const {
    for (size_t i = 0; i + 1 < lambda.size(); ++i) {
      if (!(lambda[i] - 1 >= lambda[i + 1] && lambda[i + 1] >= lambda[i] - 2)) return false;
    }
    for (int v : lambda)
      if (v < 0) return false;
    return true;
  }

  /// The ideal in two variables x0, x1 whose column heights are lambda.
  MonomialIdeal ideal() const {
    std::vector<Monomial> gens;
    int k = static_cast<int>(lambda.size());
    for (int a = 0; a < k; ++a) {
      Monomial m;
      m.e[0] = static_cast<std::uint16_t>(a);
      m.e[1] = static_cast<std::uint16_t>(lambda[a]);
      gens.push_back(m);
    }
    // x0^k closes off the staircase unless a zero column did already
    Monomial top;
    top.e[0] = static_cast<std::uint16_t>(k);
    gens.push_back(top);
    return MonomialIdeal(2, gens);
  }

  /// Genus of the cone in P^3 over the plane point scheme.
  long long cone_genus() const {
    MonomialIdeal I = cone_extend(ideal(), 2);
    auto [d, g] = one_dim_degree_genus(I);
    (void)d;
    return g;
  }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < lambda.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(lambda[i]);
    }
    return s + ")";
  }

  friend bool operator==(const StaircaseP3& a, const StaircaseP3& b) {
    return a.lambda == b.lambda;
  }
  friend bool operator<(const StaircaseP3& a, const StaircaseP3& b) {
    return a.lambda < b.lambda;
  }
};

/// Canonical staircase of a zero-dimensional ideal in two variables:
/// column heights up to and including the first empty column.
inline StaircaseP3 staircase_of(const MonomialIdeal& I) {
  if (I.nvars() != 2) throw ginwb_error("staircase_of expects an ideal in two variables");
  StaircaseP3 st;
  for (int a = 0;; ++a) {
    int h = 0;
    for (int b = 0;; ++b) {
      Monomial m;
      m.e[0] = static_cast<std::uint16_t>(a);
      m.e[1] = static_cast<std::uint16_t>(b);
      if (I.contains(m)) break;
      ++h;
      if (b > 512) throw ginwb_error("staircase_of: ideal not zero-dimensional");
    }
    st.lambda.push_back(h);
    if (h == 0) break;
    if (a > 512) throw ginwb_error("staircase_of: ideal not zero-dimensional");
  }
  return st;
}

struct StaircaseRecord {
  StaircaseP3 staircase;
  long long degree = 0;
  bool admissible = false;
  int regularity = 0;
  long long cone_genus = 0;
};

/// All window-admissible staircases of the given degree with regularity at
/// most max_reg: depth-first search over column heights decreasing by 1 or 2
/// down to the terminal zero column.
inline std::vector<StaircaseRecord> enumerate_hyperplane_gins_p3(long long degree,
                                                                 int max_reg = 6) {
  std::vector<StaircaseRecord> out;
  std::vector<int> cur;
  std::function<void(long long)> rec = [&](long long rem) {
    int last = cur.back();
    if (last == 0) {
      if (rem != 0) return;
      StaircaseP3 st{cur};
      if (!st.gp_admissible()) return;
      MonomialIdeal I = st.ideal();
      if (I.max_gen_degree() > max_reg) return;
      StaircaseRecord r;
      r.staircase = st;
      r.degree = st.degree();
      r.admissible = true;
      r.regularity = regularity(cone_extend(I, 1));  // saturated in the plane's ring
      r.cone_genus = st.cone_genus();
      out.push_back(r);
      return;
    }
    for (int step = 1; step <= 2; ++step) {
      int nxt = last - step;
      if (nxt < 0) continue;
      if (nxt > rem) continue;
      cur.push_back(nxt);
      rec(rem - nxt);
      cur.pop_back();
    }
  };
  for (int l0 = 1; l0 <= degree; ++l0) {
    if (l0 > max_reg) break;  // x1^{l0} is a generator of degree l0
    cur = {l0};
    rec(degree - l0);
  }
  std::sort(out.begin(), out.end(),
            [](const StaircaseRecord& a, const StaircaseRecord& b) {
              return a.staircase < b.staircase;
            });
  return out;
}

/// degree / admissibility / materialized ideal / cone genus in one record.
inline StaircaseRecord staircase_ops(const StaircaseP3& st) {
  StaircaseRecord r;
  r.staircase = st;
  r.degree = st.degree();
  r.admissible = st.gp_admissible();
  MonomialIdeal I = st.ideal();
  r.regularity = I.max_gen_degree();
  r.cone_genus = st.cone_genus();
  return r;
}

}  // namespace ginwb
