#pragma once

#include "ginwb/groebner.hpp"

namespace ginwb {

/// Dimension of the space of degree-e syzygies sum c_k f_k = 0 among the
/// given forms of degree d in t, u (the c_k of degree e - d).
inline long long syzygy_space_dimension(const std::vector<Form2>& fs, int d, int e,
                                        const PrimeField& F) {
  int k = e - d;
  if (k < 0) return 0;
  std::size_t ncols = fs.size() * (k + 1);
  MatrixFp A(F, e + 1, ncols);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].zero()) continue;
    for (int j = 0; j <= k; ++j)       // multiplier t^(k-j) u^j
      for (int l = 0; l <= fs[i].deg; ++l)
        A.at(j + l, i * (k + 1) + j) = fs[i].c[l];
  }
  return static_cast<long long>(ncols) - static_cast<long long>(A.rank());
}

/// Minimal generator degrees of the first syzygy module of forms of degree d
/// in two variables, with the graded Betti rows they induce. The syzygy
/// module of a base-point-free family in k[t,u] is free, so the degrees are
/// read off greedily from the dimension counts.
struct SyzygyRecord {
  int form_degree = 0;
  int num_forms = 0;
  std::vector<int> syzygy_degrees;  // ascending
  std::vector<long long> space_dims;  // dim at degrees d..d+horizon
};

struct BettiTable {
  // column 1: generators; column 2: first syzygies (degrees as (row, count))
  int gen_degree = 0;
  int num_gens = 0;
  std::vector<std::pair<int, int>> syzygies;  // (degree, count)

  std::string str() const {
    std::string s = "total: 1 " + std::to_string(num_gens) + " ";
    long long tot = 0;
    for (auto& [dg, c] : syzygies) tot += c;
    s += std::to_string(tot) + "\n";
    s += "0: 1 . .\n";
    int max_row = 0;
    for (auto& [dg, c] : syzygies) max_row = std::max(max_row, dg - 2);
    for (int r = 1; r <= max_row; ++r) {
      std::string g = (r == gen_degree - 1) ? std::to_string(num_gens) : ".";
      std::string z = ".";
      for (auto& [dg, c] : syzygies)
        if (dg - 2 == r) z = std::to_string(c);
      s += std::to_string(r) + ": . " + g + " " + z + "\n";
    }
    return s;
  }
};

inline SyzygyRecord syzygy_degrees(const std::vector<Form2>& fs, int d, const PrimeField& F) {
  int nonzero = 0;
  for (const auto& f : fs)
    if (!f.zero()) ++nonzero;
  if (common_factor_degree(fs, F) != 0)
    throw ginwb_error("syzygy_degrees: forms share a common factor (base point)");
  SyzygyRecord R;
  R.form_degree = d;
  R.num_forms = static_cast<int>(fs.size());
  int expected = nonzero - 1;  // free syzygy module of rank (#forms - 1)
  std::vector<int> es;
  for (int e = d; static_cast<int>(es.size()) < expected && e <= 3 * d + 8; ++e) {
    long long dim = syzygy_space_dimension(fs, d, e, F);
    R.space_dims.push_back(dim);
    long long predicted = 0;
    for (int ei : es) predicted += std::max(0, e - ei + 1);
    for (long long k = 0; k < dim - predicted; ++k) es.push_back(e);
  }
  if (static_cast<int>(es.size()) != expected)
    throw ginwb_error("syzygy_degrees: did not find the expected number of syzygies");
  R.syzygy_degrees = es;
  return R;
}

/// Splitting type attached to the syzygies: a_i = e_i - d, nonincreasing.
struct SplittingOfSyzygies {
  SyzygyRecord record;
  std::vector<int> splitting;  // nonincreasing, sums to d
};

inline SplittingOfSyzygies syzygy_splitting_type(const std::vector<Form2>& fs, int d,
                                                 std::uint32_t p = 32003) {
  PrimeField F(p);
  SplittingOfSyzygies out;
  out.record = syzygy_degrees(fs, d, F);
  for (int e : out.record.syzygy_degrees) out.splitting.push_back(e - d);
  std::sort(out.splitting.rbegin(), out.splitting.rend());
  long long s = 0;
  for (int a : out.splitting) s += a;
  if (s != d) throw ginwb_error("syzygy splitting does not sum to the degree");
  return out;
}

inline BettiTable betti_of(const SyzygyRecord& R) {
  BettiTable B;
  B.gen_degree = R.form_degree;
  B.num_gens = R.num_forms;
  std::map<int, int> cnt;
  for (int e : R.syzygy_degrees) cnt[e]++;
  for (auto& [e, c] : cnt) B.syzygies.emplace_back(e, c);  // row e-2 in the display
  return B;
}

// ---------------------------------------------------------------------------
// formal syzygy constraint systems
// ---------------------------------------------------------------------------

/// A formal relation sum_k c_k(t,u) * f_k = 0 on unknown forms f_0..f_4 of
/// degree d: the coefficient forms c_k (empty slot = the term is absent).
struct SyzygyRelation {
  std::vector<Form2> coeff;  // size 5; zero Form2 = absent
};

struct SyzygyConstraintSolution {
  long long rank = 0;
  long long nullity = 0;
  std::vector<std::vector<Form2>> representatives;  // nullspace, each a quintuple
};

/// Assemble the linear system the relations impose on the 5*(d+1) unknown
/// coefficients and solve it: rank, nullity, and canonical nullspace
/// representatives (free coordinate scaled to 1).
inline SyzygyConstraintSolution solve_syzygy_constraints(
    const std::vector<SyzygyRelation>& relations, int d, std::uint32_t p = 32003) {
  if (relations.empty()) {
    SyzygyConstraintSolution triv;
    triv.rank = 0;
    triv.nullity = 5 * (d + 1);
    return triv;
  }
  PrimeField F(p);
  std::size_t ncols = 5 * (d + 1);
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& rel : relations) {
    int cdeg = -1;
    for (const auto& c : rel.coeff)
      if (!c.zero()) {
        if (cdeg >= 0 && c.deg != cdeg)
          throw ginwb_error("relation coefficients of mixed degrees");
        cdeg = c.deg;
      }
    if (cdeg < 0) throw ginwb_error("empty relation");
    int D = d + cdeg;
    std::vector<std::vector<std::uint32_t>> eq(D + 1,
                                               std::vector<std::uint32_t>(ncols, 0));
    for (int i = 0; i < 5; ++i) {
      const Form2& c = rel.coeff[i];
      if (c.zero()) continue;
      for (int l = 0; l <= c.deg; ++l) {
        if (!c.c[l]) continue;
        for (int j = 0; j <= d; ++j) {
          auto& cell = eq[l + j][i * (d + 1) + j];
          cell = F.add(cell, c.c[l]);
        }
      }
    }
    for (auto& e : eq) rows.push_back(std::move(e));
  }
  MatrixFp A(F, rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < ncols; ++c) A.at(r, c) = rows[r][c];
  SyzygyConstraintSolution sol;
  sol.rank = static_cast<long long>(A.rank());
  sol.nullity = static_cast<long long>(ncols) - sol.rank;
  for (const auto& v : A.nullspace()) {
    std::vector<Form2> quint;
    for (int i = 0; i < 5; ++i) {
      Form2 f = Form2::of_degree(d);
      for (int j = 0; j <= d; ++j) f.c[j] = v[i * (d + 1) + j];
      f.normalize();
      quint.push_back(std::move(f));
    }
    sol.representatives.push_back(std::move(quint));
  }
  return sol;
}

/// Do two quintuples of forms agree up to one global scalar?
inline bool proportional(const std::vector<Form2>& a, const std::vector<Form2>& b,
                         const PrimeField& F) {
  if (a.size() != b.size()) return false;
  std::uint32_t lam = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].zero() != b[i].zero()) return false;
    if (a[i].zero()) continue;
    if (a[i].deg != b[i].deg) return false;
    for (int j = 0; j <= a[i].deg; ++j) {
      std::uint32_t x = a[i].c[j], y = b[i].c[j];
      if ((x == 0) != (y == 0)) return false;
      if (x == 0) continue;
      std::uint32_t l = F.div(x, y);
      if (lam == 0)
        lam = l;
      else if (lam != l)
        return false;
    }
  }
  return true;
}

}  // namespace ginwb
