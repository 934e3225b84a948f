#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ginwb {

/// Exponent vector in up to kMaxVars variables. The number of ambient
/// variables is carried by the containing ideal/ring; a Monomial is just
/// the exponents, compared componentwise.
struct Monomial {
  static constexpr int kMaxVars = 8;
  std::array<std::uint16_t, kMaxVars> e{};

  Monomial() = default;
  explicit Monomial(const std::vector<int>& exps) {
    if (exps.size() > kMaxVars) throw std::invalid_argument("too many variables");
    for (size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0) throw std::invalid_argument("negative exponent");
      e[i] = static_cast<std::uint16_t>(exps[i]);
    }
  }

  int deg() const {
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) d += e[i];
    return d;
  }

  bool is_one() const { return deg() == 0; }

  /// Index of the largest variable dividing the monomial, or -1 for 1.
  int max_var() const {
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (e[i]) return i;
    return -1;
  }

  bool divides(const Monomial& m) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }

  Monomial times_var(int j, int k = 1) const {
    Monomial r = *this;
    r.e[j] = static_cast<std::uint16_t>(r.e[j] + k);
    return r;
  }
  Monomial div_var(int j) const {
    if (e[j] == 0) throw std::domain_error("exponent underflow");
    Monomial r = *this;
    r.e[j] -= 1;
    return r;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i)
      r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    return r;
  }
  /// Exact quotient a / b; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      if (b.e[i] > a.e[i]) throw std::domain_error("non-divisible quotient");
      r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
    }
    return r;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }
  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::min(a.e[i], b.e[i]);
    return r;
  }
  bool coprime(const Monomial& b) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] && b.e[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  /// Componentwise-lexicographic tie order; used only for canonical sorting.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }

  /// Elementary Borel moves x_j -> x_i with i < j, within the first n vars.
  std::vector<Monomial> borel_ups(int nvars) const {
    std::vector<Monomial> out;
    for (int j = 1; j < nvars; ++j) {
      if (!e[j]) continue;
      for (int i = 0; i < j; ++i) out.push_back(div_var(j).times_var(i));
    }
    return out;
  }

  /// Proper prefixes of the sorted variable string x0^a0 x1^a1 ...; these are
  /// the ancestors of the monomial in the generator trie (root included).
  std::vector<Monomial> string_prefixes() const {
    std::vector<Monomial> out;
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i)
      for (int k = 0; k < e[i]; ++k) {
        out.push_back(m);
        m = m.times_var(i);
      }
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (int i = 0; i < kMaxVars; ++i) {
      h ^= e[i];
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Graded reverse lexicographic comparison on the first nvars variables,
/// x0 > x1 > ... > x_{n-1}. Returns true when a > b.
inline bool grevlex_greater(const Monomial& a, const Monomial& b, int nvars) {
  int da = 0, db = 0;
  for (int i = 0; i < nvars; ++i) { da += a.e[i]; db += b.e[i]; }
  if (da != db) return da > db;
  for (int i = nvars - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

/// Elimination (product) order: the first `block` variables dominate,
/// compared by grevlex among themselves; ties fall through to grevlex on
/// the remaining variables. Returns true when a > b.
inline bool block_elim_greater(const Monomial& a, const Monomial& b, int block, int nvars) {
  int da = 0, db = 0;
  for (int i = 0; i < block; ++i) { da += a.e[i]; db += b.e[i]; }
  if (da != db) return da > db;
  for (int i = block - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  int ta = 0, tb = 0;
  for (int i = block; i < nvars; ++i) { ta += a.e[i]; tb += b.e[i]; }
  if (ta != tb) return ta > tb;
  for (int i = nvars - 1; i >= block; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  return false;
}

/// All monomials of the given degree in nvars variables, in grevlex
/// descending order (largest first).
inline void monomials_of_degree(int nvars, int d, std::vector<Monomial>& out) {
  out.clear();
  Monomial m;
  std::function<void(int, int)> rec = [&](int var, int rem) {
    if (var == nvars - 1) {
      m.e[var] = static_cast<std::uint16_t>(rem);
      out.push_back(m);
      m.e[var] = 0;
      return;
    }
    for (int k = rem; k >= 0; --k) {
      m.e[var] = static_cast<std::uint16_t>(k);
      rec(var + 1, rem - k);
    }
    m.e[var] = 0;
  };
  if (d < 0) return;
  rec(0, d);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return grevlex_greater(a, b, nvars); });
}

inline std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  monomials_of_degree(nvars, d, out);
  return out;
}

}  // namespace ginwb
