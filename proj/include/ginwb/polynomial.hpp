#pragma once

#include <cctype>
#include <map>

#include "ginwb/field.hpp"
#include "ginwb/monomial.hpp"
#include "ginwb/monomial_ideal.hpp"

namespace ginwb {

enum class TermOrderKind { Grevlex, BlockElim };

/// Polynomial ring descriptor: named variables, per-variable weights (used
/// for degree truncation of weighted-homogeneous computations), a term
/// order, and the coefficient field.
struct Ring {
  std::vector<std::string> names;
  std::vector<int> weights;
  TermOrderKind order = TermOrderKind::Grevlex;
  int elim_block = 0;  // for BlockElim: the leading block being eliminated
  PrimeField F{32003};

  int nvars() const { return static_cast<int>(names.size()); }

  static Ring grevlex(std::vector<std::string> vars, std::uint32_t p = 32003) {
    Ring R;
    R.names = std::move(vars);
    R.weights.assign(R.names.size(), 1);
    R.order = TermOrderKind::Grevlex;
    R.F = PrimeField(p);
    return R;
  }

  bool greater(const Monomial& a, const Monomial& b) const {
    if (order == TermOrderKind::Grevlex) return grevlex_greater(a, b, nvars());
    return block_elim_greater(a, b, elim_block, nvars());
  }

  long long wdeg(const Monomial& m) const {
    long long d = 0;
    for (int i = 0; i < nvars(); ++i) d += static_cast<long long>(m.e[i]) * weights[i];
    return d;
  }

  int var_index(const std::string& v) const {
    for (int i = 0; i < nvars(); ++i)
      if (names[i] == v) return i;
    throw ginwb_error("unknown variable '" + v + "'");
  }

  std::string monomial_str(const Monomial& m) const {
    if (m.is_one()) return "1";
    std::string s;
    for (int i = 0; i < nvars(); ++i) {
      if (!m.e[i]) continue;
      if (!s.empty()) s += "*";
      s += names[i];
      if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
  }
};

struct Term {
  Monomial m;
  std::uint32_t c = 0;
};

/// Sparse polynomial: terms with nonzero coefficients, sorted strictly
/// descending under the ring's term order.
struct Poly {
  std::vector<Term> t;

  bool zero() const { return t.empty(); }
  const Term& lead() const {
    if (t.empty()) throw ginwb_error("lead term of zero polynomial");
    return t.front();
  }
  std::size_t size() const { return t.size(); }

  /// Weighted degree of the lead term; for weighted-homogeneous input every
  /// term has the same weighted degree.
  long long wdeg(const Ring& R) const { return zero() ? -1 : R.wdeg(t.front().m); }

  bool homogeneous(const Ring& R) const {
    if (zero()) return true;
    long long d = R.wdeg(t.front().m);
    for (const auto& tm : t)
      if (R.wdeg(tm.m) != d) return false;
    return true;
  }
};

inline Poly normalize_terms(std::vector<Term> terms, const Ring& R) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return R.greater(a.m, b.m); });
  Poly out;
  for (auto& tm : terms) {
    std::uint32_t c = tm.c % R.F.modulus();
    if (!out.t.empty() && out.t.back().m == tm.m)
      out.t.back().c = R.F.add(out.t.back().c, c);
    else
      out.t.push_back({tm.m, c});
    if (!out.t.empty() && out.t.back().c == 0) out.t.pop_back();
  }
  return out;
}

/// r = f - c * m * g  (the merge at the heart of polynomial reduction).
inline Poly axpy_sub(const Poly& f, std::uint32_t c, const Monomial& m, const Poly& g,
                     const Ring& R) {
  Poly r;
  r.t.reserve(f.t.size() + g.t.size());
  std::size_t i = 0, j = 0;
  while (i < f.t.size() || j < g.t.size()) {
    if (j == g.t.size()) {
      r.t.push_back(f.t[i++]);
      continue;
    }
    Monomial gm = g.t[j].m * m;
    std::uint32_t gc = R.F.mul(c, g.t[j].c);
    if (i == f.t.size()) {
      if (gc) r.t.push_back({gm, R.F.neg(gc)});
      ++j;
      continue;
    }
    if (f.t[i].m == gm) {
      std::uint32_t nc = R.F.sub(f.t[i].c, gc);
      if (nc) r.t.push_back({f.t[i].m, nc});
      ++i;
      ++j;
    } else if (R.greater(f.t[i].m, gm)) {
      r.t.push_back(f.t[i++]);
    } else {
      if (gc) r.t.push_back({gm, R.F.neg(gc)});
      ++j;
    }
  }
  return r;
}

inline Poly add(const Poly& f, const Poly& g, const Ring& R) {
  Poly r;
  r.t.reserve(f.t.size() + g.t.size());
  std::size_t i = 0, j = 0;
  while (i < f.t.size() || j < g.t.size()) {
    if (i == f.t.size()) { r.t.push_back(g.t[j++]); continue; }
    if (j == g.t.size()) { r.t.push_back(f.t[i++]); continue; }
    if (f.t[i].m == g.t[j].m) {
      std::uint32_t c = R.F.add(f.t[i].c, g.t[j].c);
      if (c) r.t.push_back({f.t[i].m, c});
      ++i; ++j;
    } else if (R.greater(f.t[i].m, g.t[j].m)) {
      r.t.push_back(f.t[i++]);
    } else {
      r.t.push_back(g.t[j++]);
    }
  }
  return r;
}

inline Poly scale(const Poly& f, std::uint32_t c, const Ring& R) {
  Poly r = f;
  for (auto& tm : r.t) tm.c = R.F.mul(tm.c, c);
  if (c == 0) r.t.clear();
  return r;
}

inline Poly mul_term(const Poly& f, const Monomial& m, std::uint32_t c, const Ring& R) {
  Poly r;
  if (c == 0) return r;
  r.t.reserve(f.t.size());
  for (const auto& tm : f.t) r.t.push_back({tm.m * m, R.F.mul(tm.c, c)});
  return r;
}

inline Poly mul(const Poly& f, const Poly& g, const Ring& R) {
  std::vector<Term> acc;
  acc.reserve(f.t.size() * g.t.size());
  for (const auto& a : f.t)
    for (const auto& b : g.t) acc.push_back({a.m * b.m, R.F.mul(a.c, b.c)});
  return normalize_terms(std::move(acc), R);
}

inline Poly monic(const Poly& f, const Ring& R) {
  if (f.zero()) return f;
  return scale(f, R.F.inv(f.lead().c), R);
}

/// Full division remainder of f by the (not necessarily autoreduced) list G:
/// no term of the result is divisible by any lead term of G. Linear in f
/// over the coefficient field.
inline Poly normal_form(const Poly& f, const std::vector<Poly>& G, const Ring& R) {
  Poly rem;
  Poly h = f;
  while (!h.zero()) {
    bool reduced = false;
    for (const auto& g : G) {
      if (g.zero()) continue;
      if (g.lead().m.divides(h.lead().m)) {
        std::uint32_t c = R.F.div(h.lead().c, g.lead().c);
        h = axpy_sub(h, c, h.lead().m / g.lead().m, g, R);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.t.push_back(h.lead());
      h.t.erase(h.t.begin());
    }
  }
  return rem;
}

// ---------- parsing & printing ----------

/// Parse "3*t^2*u - x0 + 7" style expressions over the ring's variables.
/// Integer coefficients are reduced into the field.
inline Poly parse_poly(const std::string& s, const Ring& R) {
  std::vector<Term> terms;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
  skip_ws();
  bool first = true;
  while (i < s.size()) {
    long long sign = 1;
    skip_ws();
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (!first) {
      throw ginwb_error("expected '+' or '-' in polynomial literal");
    }
    first = false;
    skip_ws();
    long long coeff = 1;
    bool have_coeff = false;
    Monomial m;
    bool expect_factor = true;
    while (i < s.size() && expect_factor) {
      skip_ws();
      if (i < s.size() && std::isdigit((unsigned char)s[i])) {
        long long v = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) v = v * 10 + (s[i++] - '0');
        coeff *= v;
        have_coeff = true;
      } else if (i < s.size() && (std::isalpha((unsigned char)s[i]))) {
        std::string name;
        while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_'))
          name += s[i++];
        int exp = 1;
        skip_ws();
        if (i < s.size() && s[i] == '^') {
          ++i;
          skip_ws();
          exp = 0;
          while (i < s.size() && std::isdigit((unsigned char)s[i])) exp = exp * 10 + (s[i++] - '0');
        }
        m = m.times_var(R.var_index(name), exp);
      } else {
        throw ginwb_error("bad token in polynomial literal");
      }
      skip_ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        expect_factor = true;
      } else {
        expect_factor = false;
      }
    }
    if (!have_coeff && m.is_one()) throw ginwb_error("empty term in polynomial literal");
    terms.push_back({m, R.F.reduce(sign * coeff)});
    skip_ws();
  }
  return normalize_terms(std::move(terms), R);
}

inline std::string poly_str(const Poly& f, const Ring& R) {
  if (f.zero()) return "0";
  std::string s;
  for (const auto& tm : f.t) {
    long long c = R.F.lift(tm.c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += (c < 0) ? " - " : " + ";
    }
    long long a = c < 0 ? -c : c;
    if (a != 1 || tm.m.is_one()) s += std::to_string(a);
    if (!tm.m.is_one()) {
      if (a != 1) s += "*";
      s += R.monomial_str(tm.m);
    }
  }
  return s;
}

}  // namespace ginwb
