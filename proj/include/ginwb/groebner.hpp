#pragma once


#include "ginwb/bivariate.hpp"
#include "ginwb/linalg.hpp"
#include "ginwb/polynomial.hpp"

namespace ginwb {

struct GBOptions {
  /// Discard S-pairs of weighted degree above this bound (-1 = none). For a
  /// weighted-homogeneous input the truncated output contains exactly the
  /// reduced-basis elements of weighted degree within the bound.
  long long max_wdeg = -1;
};

namespace detail {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  long long wdeg;
};

}  // namespace detail

/// Buchberger's algorithm with the Gebauer-Moeller pair criteria and normal
/// (degree-by-degree) selection. Returns the reduced basis: autoreduced,
/// monic, unique for the order. Zero input polynomials are dropped.
inline std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const Ring& R,
                                        GBOptions opt = {}) {
  std::vector<Poly> B;
  std::vector<detail::Pair> pairs;

  auto push_pairs_for = [&](std::size_t t) {
    const Monomial& lt = B[t].lead().m;
    // candidate new pairs (i, t)
    std::vector<detail::Pair> fresh;
    for (std::size_t i = 0; i < t; ++i) {
      if (B[i].zero()) continue;
      detail::Pair p{i, t, lcm(B[i].lead().m, lt), 0};
      p.wdeg = R.wdeg(p.lcm);
      fresh.push_back(p);
    }
    // Gebauer-Moeller: drop old pairs whose lcm is a proper multiple of lt
    std::vector<detail::Pair> kept;
    for (auto& p : pairs) {
      const Monomial& lij = p.lcm;
      if (lt.divides(lij) && lcm(B[p.i].lead().m, lt) != lij &&
          lcm(B[p.j].lead().m, lt) != lij)
        continue;
      kept.push_back(p);
    }
    pairs = std::move(kept);
    // M criterion: drop (i,t) when another (j,t) has lcm properly dividing
    std::vector<bool> drop(fresh.size(), false);
    for (std::size_t a = 0; a < fresh.size(); ++a)
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || drop[a]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && fresh[b].lcm != fresh[a].lcm && !drop[b])
          drop[a] = true;
      }
    // F criterion: among equal lcms keep one
    for (std::size_t a = 0; a < fresh.size(); ++a)
      for (std::size_t b = a + 1; b < fresh.size(); ++b)
        if (!drop[a] && !drop[b] && fresh[a].lcm == fresh[b].lcm) drop[b] = true;
    // Buchberger's coprimality criterion
    for (std::size_t a = 0; a < fresh.size(); ++a)
      if (!drop[a] && B[fresh[a].i].lead().m.coprime(B[fresh[a].j].lead().m)) drop[a] = true;
    for (std::size_t a = 0; a < fresh.size(); ++a)
      if (!drop[a]) pairs.push_back(fresh[a]);
  };

  for (const auto& g : gens) {
    if (g.zero()) continue;
    Poly r = normal_form(g, B, R);
    if (r.zero()) continue;
    B.push_back(monic(r, R));
    push_pairs_for(B.size() - 1);
  }

  auto pick = [&]() {
    std::size_t best = pairs.size();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (best == pairs.size()) { best = k; continue; }
      const auto& a = pairs[k];
      const auto& b = pairs[best];
      if (a.wdeg != b.wdeg ? a.wdeg < b.wdeg
                           : (!(a.lcm == b.lcm) ? R.greater(b.lcm, a.lcm)
                                                : std::tie(a.i, a.j) < std::tie(b.i, b.j)))
        best = k;
    }
    return best;
  };

  while (!pairs.empty()) {
    std::size_t k = pick();
    detail::Pair p = pairs[k];
    pairs.erase(pairs.begin() + k);
    if (opt.max_wdeg >= 0 && p.wdeg > opt.max_wdeg) continue;
    const Poly &f = B[p.i], &g = B[p.j];
    Poly s = axpy_sub(mul_term(f, p.lcm / f.lead().m, 1, R), 1, p.lcm / g.lead().m, g, R);
    Poly r = normal_form(s, B, R);
    if (r.zero()) continue;
    B.push_back(monic(r, R));
    push_pairs_for(B.size() - 1);
  }

  // autoreduce: drop elements whose lead term another lead term divides,
  // then reduce every tail against the rest
  std::vector<Poly> out;
  for (std::size_t i = 0; i < B.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < B.size(); ++j) {
      if (i == j) continue;
      if (B[j].lead().m.divides(B[i].lead().m) &&
          (B[j].lead().m != B[i].lead().m || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(B[i]);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < out.size(); ++j)
      if (j != i) others.push_back(out[j]);
    out[i] = monic(normal_form(out[i], others, R), R);
  }
  std::sort(out.begin(), out.end(),
            [&](const Poly& a, const Poly& b) { return R.greater(b.lead().m, a.lead().m); });
  return out;
}

// ---------------------------------------------------------------------------
// implicitization of parameterized rational curves
// ---------------------------------------------------------------------------

/// Ring for the graph ideal (x_i - g_i): variables t, u, x0..x4 with the
/// (t,u) block eliminated; x-variables weighted by the parameterization
/// degree so the graph ideal is weighted-homogeneous.
inline Ring elimination_ring(int d, std::uint32_t p) {
  Ring R;
  R.names = {"t", "u", "x0", "x1", "x2", "x3", "x4"};
  R.weights = {1, 1, d, d, d, d, d};
  R.order = TermOrderKind::BlockElim;
  R.elim_block = 2;
  R.F = PrimeField(p);
  return R;
}

struct Implicitization {
  Ring ring;                      // x0..x4, grevlex
  std::vector<Poly> kernel;       // reduced basis of the kernel up to the cap
  MonomialIdeal initial_ideal;    // lead terms, minimal generators
  int degree_cap = 0;
  bool base_point_free = true;
  std::size_t elimination_basis_size = 0;  // truncated block-order basis
};

/// Substitute x_i -> g_i into a polynomial in x0..x4; the result is a
/// homogeneous bivariate form (or zero). Used as the soundness check for
/// every kernel element.
inline Form2 substitute(const Poly& f, const std::vector<Form2>& gs, const PrimeField& F) {
  Form2 acc;
  for (const auto& tm : f.t) {
    Form2 prod = Form2::of_degree(0);
    prod.c[0] = tm.c;
    for (int i = 0; i < 5; ++i)
      for (int k = 0; k < tm.m.e[i]; ++k) prod = form_mul(prod, gs[i], F);
    acc = form_add(acc, prod, F);
  }
  return acc;
}

/// Kernel of the ring map x_i -> g_i for five degree-d forms, computed by
/// eliminating (t, u) from (x0-g0, ..., x4-g4) under the block order, with
/// the Buchberger run truncated at x-degree `degree_cap`. The t,u-free
/// members of the truncated basis form the reduced grevlex basis of the
/// kernel through that degree.
inline Implicitization implicitize(const std::vector<Form2>& gs, int d, std::uint32_t p,
                                   int degree_cap = 6) {
  if (gs.size() != 5) throw ginwb_error("implicitize expects five forms");
  PrimeField F(p);
  for (const auto& g : gs)
    if (!g.zero() && g.deg != d) throw ginwb_error("forms must share one degree");
  Implicitization out;
  out.degree_cap = degree_cap;
  out.ring = Ring::grevlex({"x0", "x1", "x2", "x3", "x4"}, p);
  int cf = common_factor_degree(gs, F);
  if (cf != 0) {
    out.base_point_free = false;
    throw ginwb_error("implicitize: forms share a common factor (base point)");
  }

  Ring RE = elimination_ring(d, p);
  std::vector<Poly> gens;
  for (int i = 0; i < 5; ++i) {
    std::vector<Term> ts;
    Monomial xi;
    xi = xi.times_var(2 + i);
    ts.push_back({xi, 1});
    if (!gs[i].zero())
      for (int j = 0; j <= gs[i].deg; ++j) {
        if (!gs[i].c[j]) continue;
        Monomial m;
        m = m.times_var(0, d - j).times_var(1, j);
        ts.push_back({m, F.neg(gs[i].c[j])});
      }
    gens.push_back(normalize_terms(std::move(ts), RE));
  }
  GBOptions opt;
  opt.max_wdeg = static_cast<long long>(d) * degree_cap;
  auto GB = groebner_basis(gens, RE, opt);
  out.elimination_basis_size = GB.size();

  std::vector<Poly> kernel;
  for (const auto& f : GB) {
    bool tu_free = true;
    for (const auto& tm : f.t)
      if (tm.m.e[0] || tm.m.e[1]) { tu_free = false; break; }
    if (!tu_free) continue;
    // re-express in the 5-variable ring (shift exponents left by two)
    Poly q;
    for (const auto& tm : f.t) {
      Monomial m;
      for (int i = 0; i < 5; ++i) m.e[i] = tm.m.e[2 + i];
      q.t.push_back({m, tm.c});
    }
    std::sort(q.t.begin(), q.t.end(),
              [&](const Term& a, const Term& b) { return out.ring.greater(a.m, b.m); });
    kernel.push_back(std::move(q));
  }
  std::sort(kernel.begin(), kernel.end(), [&](const Poly& a, const Poly& b) {
    return out.ring.greater(b.lead().m, a.lead().m);
  });
  out.kernel = std::move(kernel);

  std::vector<Monomial> lts;
  for (const auto& f : out.kernel) lts.push_back(f.lead().m);
  out.initial_ideal = MonomialIdeal(5, lts);

  // soundness: every basis element vanishes under the substitution
  for (const auto& f : out.kernel)
    if (!substitute(f, gs, F).zero())
      throw ginwb_error("implicitize: a kernel element fails the substitution check");
  return out;
}

/// Degree and arithmetic genus of the parameterized image, read from the
/// initial ideal of the kernel.
inline std::pair<long long, long long> image_degree_genus(const Implicitization& impl) {
  return one_dim_degree_genus(impl.initial_ideal);
}

/// Independent route to dim J_m: the rank of the substitution matrix taking
/// degree-m monomials in x0..x4 to bivariate forms of degree m*d. Used to
/// cross-check the eliminated kernel degree by degree.
inline long long kernel_dimension(const std::vector<Form2>& gs, int d, int m, std::uint32_t p) {
  PrimeField F(p);
  auto mons = monomials_of_degree(5, m);
  // images by stripping one variable at a time, memoized along the grevlex list
  std::unordered_map<Monomial, Form2, MonomialHash> img;
  Form2 one = Form2::of_degree(0);
  one.c[0] = 1;
  img.emplace(Monomial(), one);
  std::function<const Form2&(const Monomial&)> image = [&](const Monomial& mo) -> const Form2& {
    auto it = img.find(mo);
    if (it != img.end()) return it->second;
    int k = mo.max_var();
    const Form2& prev = image(mo.div_var(k));
    auto [it2, ok] = img.emplace(mo, form_mul(prev, gs[k], F));
    (void)ok;
    return it2->second;
  };
  MatrixFp A(F, d * m + 1, mons.size());
  for (std::size_t c = 0; c < mons.size(); ++c) {
    const Form2& f = image(mons[c]);
    if (f.zero()) continue;
    for (int j = 0; j <= f.deg; ++j) A.at(j, c) = f.c[j];
  }
  return static_cast<long long>(mons.size()) - static_cast<long long>(A.rank());
}

}  // namespace ginwb
