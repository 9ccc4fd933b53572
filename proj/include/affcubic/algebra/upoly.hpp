#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "affcubic/algebra/poly.hpp"
#include "affcubic/algebra/rational.hpp"

namespace affcubic {

/// Dense univariate polynomial over Q, coefficients stored lowest degree
/// first with no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c) { return UPoly({c}); }
  static UPoly x() { return UPoly({Rational(0), Rational(1)}); }

  /// Converts a polynomial that only involves variable `var`.
  static UPoly from_poly(const Poly& p, std::size_t var);
  Poly to_poly(std::size_t nvars, std::size_t var) const;

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational eval(const Rational& t) const;
  double eval(double t) const;
  std::complex<double> eval(std::complex<double> t) const;
  int sign_at(const Rational& t) const { return sgn(eval(t)); }

  UPoly derivative() const;
  UPoly monic() const;
  /// Integer-coefficient primitive multiple with positive leading coefficient.
  UPoly primitive() const;
  /// p(x + a)
  UPoly taylor_shift(const Rational& a) const;
  /// p(s x)
  UPoly scale(const Rational& s) const;
  /// x^deg p(1/x)
  UPoly reversed() const;
  UPoly compose_neg() const { return scale(Rational(-1)); }

  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  std::vector<std::complex<double>> to_complex() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& s);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

UPoly gcd(UPoly a, UPoly b);
bool is_squarefree(const UPoly& p);
UPoly squarefree_part(const UPoly& p);

/// Yun's square-free factorization: p = lc * prod f_i^i; returned as
/// (f_i, i) pairs with nonconstant monic f_i.
std::vector<std::pair<UPoly, int>> squarefree_factorization(const UPoly& p);

/// Number of sign changes in the coefficient sequence (zeros skipped).
int sign_variations(const UPoly& p);

std::string to_string(const UPoly& p, const std::string& var = "x");

}  // namespace affcubic
