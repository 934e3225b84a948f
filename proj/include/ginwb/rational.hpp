#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ginwb {

/// Exact rational number on 64-bit parts. The surface/liaison computations
/// only ever need denominators dividing 2, but the class is general.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  friend Rational operator+(Rational a, Rational b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(Rational a, Rational b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(Rational a, Rational b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(Rational a, Rational b) {
    if (b.num == 0) throw std::domain_error("division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }
  Rational operator-() const { return Rational(-num, den); }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  bool is_integer() const { return den == 1; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

/// Polynomial in one variable t with exact rational coefficients,
/// coeff[k] multiplying t^k.
struct RationalPoly {
  std::vector<Rational> coeff;

  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> c) : coeff(std::move(c)) { trim(); }

  static RationalPoly constant(Rational c) { return RationalPoly({c}); }
  /// The polynomial t.
  static RationalPoly t() { return RationalPoly({Rational(0), Rational(1)}); }

  void trim() {
    while (!coeff.empty() && coeff.back() == Rational(0)) coeff.pop_back();
  }
  int degree() const { return static_cast<int>(coeff.size()) - 1; }
  Rational at(int k) const {
    return (k >= 0 && k < static_cast<int>(coeff.size())) ? coeff[k] : Rational(0);
  }

  Rational eval(Rational x) const {
    Rational r(0);
    for (int k = degree(); k >= 0; --k) r = r * x + coeff[k];
    return r;
  }

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> c(std::max(a.coeff.size(), b.coeff.size()), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.at((int)i) + b.at((int)i);
    return RationalPoly(std::move(c));
  }
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> c(std::max(a.coeff.size(), b.coeff.size()), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.at((int)i) - b.at((int)i);
    return RationalPoly(std::move(c));
  }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.coeff.empty() || b.coeff.empty()) return RationalPoly();
    std::vector<Rational> c(a.coeff.size() + b.coeff.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeff.size(); ++i)
      for (size_t j = 0; j < b.coeff.size(); ++j)
        c[i + j] = c[i + j] + a.coeff[i] * b.coeff[j];
    return RationalPoly(std::move(c));
  }
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.coeff == b.coeff;
  }
  friend bool operator!=(const RationalPoly& a, const RationalPoly& b) { return !(a == b); }

  /// Substitute t -> (c0 + c1 t); used for Serre-duality flips chi(1 - s).
  RationalPoly substituted_linear(Rational c0, Rational c1) const {
    RationalPoly lin({c0, c1});
    RationalPoly acc = constant(Rational(0));
    RationalPoly pw = constant(Rational(1));
    for (int k = 0; k <= degree(); ++k) {
      acc = acc + pw * constant(coeff[k]);
      pw = pw * lin;
    }
    return acc;
  }

  /// Rendering "a2*t^2 + a1*t + a0" with exact "p/q" coefficients.
  std::string str() const {
    if (coeff.empty()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      Rational c = coeff[k];
      if (c == Rational(0)) continue;
      if (!s.empty()) {
        s += (c.num < 0) ? " - " : " + ";
        if (c.num < 0) c = -c;
      }
      if (k == 0) {
        s += c.str();
      } else {
        if (c != Rational(1)) s += c.str() + "*";
        s += (k == 1) ? "t" : ("t^" + std::to_string(k));
      }
    }
    return s.empty() ? "0" : s;
  }
};

/// binomial(t + shift, n) as an exact polynomial of degree n in t.
inline RationalPoly binomial_poly(long long shift, int n) {
  RationalPoly r = RationalPoly::constant(Rational(1));
  for (int j = 0; j < n; ++j) {
    // factor (t + shift - j)
    r = r * RationalPoly({Rational(shift - j), Rational(1)});
  }
  long long fact = 1;
  for (int j = 2; j <= n; ++j) fact *= j;
  return r * RationalPoly::constant(Rational(1, fact));
}

inline long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace ginwb
