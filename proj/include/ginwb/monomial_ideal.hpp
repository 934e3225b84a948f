#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "ginwb/monomial.hpp"
#include "ginwb/rational.hpp"

namespace ginwb {

struct ginwb_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Monomial ideal given by its minimal generating set, kept canonically
/// sorted (degree, then lexicographic on exponent vectors) so that equality
/// is syntactic. The empty generating set represents the zero ideal.
class MonomialIdeal {
public:
  MonomialIdeal() = default;
  MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars) {
    set_generators(std::move(gens));
  }

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }
  bool is_unit_ideal() const { return gens_.size() == 1 && gens_[0].is_one(); }

  bool contains(const Monomial& m) const {
    for (const auto& g : gens_)
      if (g.divides(m)) return true;
    return false;
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }
  friend bool operator<(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
    auto key = [](const MonomialIdeal& I) {
      std::vector<std::pair<int, Monomial>> k;
      for (const auto& g : I.gens_) k.emplace_back(g.deg(), g);
      return k;
    };
    return key(a) < key(b);
  }

  std::size_t hash() const {
    std::size_t h = nvars_;
    for (const auto& g : gens_) h = h * 1000003 + g.hash();
    return h;
  }

  /// Maximum minimal-generator degree; 0 for the zero ideal.
  int max_gen_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.deg());
    return d;
  }

  void set_generators(std::vector<Monomial> gens) {
    // prune to the minimal generating set, then sort canonically
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      if (a.deg() != b.deg()) return a.deg() < b.deg();
      return a < b;
    });
    std::vector<Monomial> min;
    for (const auto& m : gens) {
      bool red = false;
      for (const auto& g : min)
        if (g.divides(m)) { red = true; break; }
      if (!red) min.push_back(m);
    }
    gens_ = std::move(min);
  }

private:
  int nvars_ = 0;
  std::vector<Monomial> gens_;
};

struct MonomialIdealHash {
  std::size_t operator()(const MonomialIdeal& I) const { return I.hash(); }
};

/// Smallest Borel-fixed (strongly stable) ideal containing the given
/// monomials: the closure under all elementary moves x_j -> x_i, i < j.
/// The empty input yields the zero ideal.
inline MonomialIdeal borel_closure(const std::vector<Monomial>& gens, int nvars) {
  std::unordered_set<Monomial, MonomialHash> seen(gens.begin(), gens.end());
  std::vector<Monomial> frontier(gens.begin(), gens.end());
  while (!frontier.empty()) {
    Monomial m = frontier.back();
    frontier.pop_back();
    for (const auto& u : m.borel_ups(nvars))
      if (seen.insert(u).second) frontier.push_back(u);
  }
  return MonomialIdeal(nvars, std::vector<Monomial>(seen.begin(), seen.end()));
}

inline bool is_borel_fixed(const MonomialIdeal& I) {
  for (const auto& g : I.generators())
    for (const auto& u : g.borel_ups(I.nvars()))
      if (!I.contains(u)) return false;
  return true;
}

/// Saturation test for Borel-fixed ideals: no minimal generator may be
/// divisible by the last variable. Rejects non-Borel input, where the
/// criterion is not valid.
inline bool is_saturated(const MonomialIdeal& I) {
  if (!is_borel_fixed(I)) throw ginwb_error("is_saturated requires a Borel-fixed ideal");
  int last = I.nvars() - 1;
  for (const auto& g : I.generators())
    if (g.e[last] > 0) return false;
  return true;
}

/// Per-degree monomials inside/outside the ideal, by exhaustive enumeration.
struct GradedProfile {
  int horizon = 0;
  std::vector<long long> inside;    // inside[t], 0 <= t <= horizon
  std::vector<long long> standard;  // standard[t]
  std::optional<long long> colength;  // set when zero-dimensional within the horizon
};

inline GradedProfile graded_profile(const MonomialIdeal& I, int horizon) {
  if (I.is_unit_ideal()) throw ginwb_error("graded_profile: unit ideal rejected");
  if (horizon < I.max_gen_degree())
    throw ginwb_error("graded_profile: horizon below maximal generator degree");
  GradedProfile P;
  P.horizon = horizon;
  P.inside.resize(horizon + 1);
  P.standard.resize(horizon + 1);
  std::vector<Monomial> mons;
  for (int t = 0; t <= horizon; ++t) {
    monomials_of_degree(I.nvars(), t, mons);
    long long in = 0;
    for (const auto& m : mons)
      if (I.contains(m)) ++in;
    P.inside[t] = in;
    P.standard[t] = static_cast<long long>(mons.size()) - in;
  }
  if (P.standard[horizon] == 0) {
    long long c = 0;
    for (auto s : P.standard) c += s;
    P.colength = c;
  }
  return P;
}

/// Colength of a zero-dimensional ideal (number of standard monomials).
/// For Borel-fixed ideals the standard monomials end strictly below the
/// maximal generator degree; for general monomial ideals the horizon is
/// grown until the counts vanish or are seen to persist.
inline long long colength(const MonomialIdeal& I) {
  if (I.is_zero_ideal()) throw ginwb_error("colength: zero ideal rejected");
  int h = I.max_gen_degree() + 1;
  for (int round = 0; round < 8; ++round) {
    auto P = graded_profile(I, h);
    if (P.standard[h] == 0) return *P.colength;
    if (P.standard[h] >= P.standard[h - 1] && P.standard[h - 1] >= P.standard[h - 2] &&
        P.standard[h] > 0 && h > 3 * I.max_gen_degree())
      break;
    h += I.max_gen_degree() + 1;
  }
  throw ginwb_error("colength: ideal is not zero-dimensional");
}

/// Castelnuovo-Mumford regularity of a saturated Borel-fixed ideal:
/// the maximum degree of a minimal generator.
inline int regularity(const MonomialIdeal& I) {
  if (I.is_zero_ideal() || I.is_unit_ideal())
    throw ginwb_error("regularity: zero/unit ideal rejected");
  if (!is_borel_fixed(I)) throw ginwb_error("regularity requires a Borel-fixed ideal");
  if (!is_saturated(I)) throw ginwb_error("regularity requires a saturated ideal");
  return I.max_gen_degree();
}

/// Same generating set reinterpreted in nvars + extra variables.
inline MonomialIdeal cone_extend(const MonomialIdeal& I, int extra) {
  if (extra < 0 || I.nvars() + extra > Monomial::kMaxVars)
    throw ginwb_error("cone_extend: bad variable count");
  return MonomialIdeal(I.nvars() + extra, I.generators());
}

/// Dimension of the degree-t piece of the quotient by the extension of I
/// (generators in the first k variables) to n >= k variables:
///   sum_j standard_k(j) * binom(t - j + n - k - 1, n - k - 1).
inline long long hilbert_function_of_section(const MonomialIdeal& I, int ambient, int t) {
  if (ambient < I.nvars()) throw ginwb_error("ambient must be >= variable count");
  if (t < 0) return 0;
  auto P = graded_profile(I, std::max(t, I.max_gen_degree()));
  int extra = ambient - I.nvars();
  long long total = 0;
  for (int j = 0; j <= t; ++j) {
    long long std_j = (j <= P.horizon) ? P.standard[j] : 0;
    if (extra == 0) {
      if (j == t) total += std_j;
    } else {
      total += std_j * binom(t - j + extra - 1, extra - 1);
    }
  }
  return total;
}

/// (h0, h1) of the ideal sheaf of the point scheme in P^3 defined by a
/// zero-dimensional saturated ideal with generators in x0..x2, at twist t:
/// h0 counts degree-t monomials inside the extension to 4 variables and
/// h1 = h0 - binom(t+3,3) + colength.
inline std::pair<long long, long long> point_cohomology(const MonomialIdeal& I, int t) {
  long long len = colength(I);
  long long std4 = hilbert_function_of_section(I, 4, t);
  long long h0 = binom(t + 3, 3) - std4;
  long long h1 = h0 - (binom(t + 3, 3) - len);
  if (h1 < 0) throw ginwb_error("point_cohomology: negative h1 (input not saturated?)");
  return {h0, h1};
}

/// Degree and arithmetic genus of the one-dimensional scheme cut out by I:
/// reads the stabilized Hilbert polynomial d*t + 1 - g of the quotient.
/// Stabilization is checked over a window above the generator degrees.
inline std::pair<long long, long long> one_dim_degree_genus(const MonomialIdeal& I) {
  if (I.is_zero_ideal() || I.is_unit_ideal())
    throw ginwb_error("one_dim_degree_genus: zero/unit ideal rejected");
  int reg = I.max_gen_degree();
  int hi = reg + 3;
  // Hilbert function h(t) of the quotient = standard count at degree t
  auto P = graded_profile(I, hi);
  long long d1 = P.standard[hi] - P.standard[hi - 1];
  long long d2 = P.standard[hi - 1] - P.standard[hi - 2];
  long long d3 = P.standard[hi - 2] - P.standard[hi - 3];
  if (d1 != d2 || d2 != d3 || d1 <= 0)
    throw ginwb_error("one_dim_degree_genus: scheme is not one-dimensional");
  long long d = d1;
  long long g = 1 + d * hi - P.standard[hi];
  return {d, g};
}

// ---------- ideal literal grammar ----------
// variables x0..x4; monomial = '*'-separated powers, e.g. "x1*x2^2";
// ideal = comma-separated monomials; optional wrapper Borel(...) requests
// closure on parse.

inline Monomial parse_monomial_literal(const std::string& s, int nvars) {
  Monomial m;
  std::string tok;
  auto flush = [&](const std::string& f) {
    if (f.empty()) throw ginwb_error("empty factor in monomial literal");
    size_t caret = f.find('^');
    std::string var = f.substr(0, caret);
    int exp = 1;
    if (caret != std::string::npos) exp = std::stoi(f.substr(caret + 1));
    if (var.size() < 2 || var[0] != 'x') throw ginwb_error("bad variable '" + var + "'");
    int idx = std::stoi(var.substr(1));
    if (idx < 0 || idx >= nvars) throw ginwb_error("variable index out of range: " + var);
    if (exp < 0) throw ginwb_error("negative exponent");
    m.e[idx] = static_cast<std::uint16_t>(m.e[idx] + exp);
  };
  std::string cur;
  for (char c : s) {
    if (c == ' ' || c == '\t') continue;
    if (c == '*') {
      flush(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  flush(cur);
  return m;
}

inline MonomialIdeal parse_ideal_literal(std::string s, int nvars) {
  auto strip = [](std::string v) {
    size_t a = v.find_first_not_of(" \t\n");
    size_t b = v.find_last_not_of(" \t\n");
    return (a == std::string::npos) ? std::string() : v.substr(a, b - a + 1);
  };
  s = strip(s);
  bool closure = false;
  if (s.rfind("Borel(", 0) == 0 && s.back() == ')') {
    closure = true;
    s = s.substr(6, s.size() - 7);
  }
  std::vector<Monomial> gens;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part = strip(part);
    if (!part.empty()) gens.push_back(parse_monomial_literal(part, nvars));
  }
  if (closure) return borel_closure(gens, nvars);
  return MonomialIdeal(nvars, gens);
}

inline std::string monomial_str(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (int i = 0; i < Monomial::kMaxVars; ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i);
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s;
}

inline std::string ideal_str(const MonomialIdeal& I) {
  std::string s;
  for (const auto& g : I.generators()) {
    if (!s.empty()) s += ", ";
    s += monomial_str(g);
  }
  return s;
}

}  // namespace ginwb
