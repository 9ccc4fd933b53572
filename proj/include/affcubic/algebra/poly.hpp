#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "affcubic/algebra/rational.hpp"

namespace affcubic {

/// Multivariate polynomial with exact rational coefficients.
///
/// Variables are positional; names only matter for parsing and printing.
/// Zero coefficients are never stored and every exponent vector has length
/// nvars().
class Poly {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, Rational>;

  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t index);
  static Poly monomial(const Exponent& e, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;

  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  /// Coefficient of var^k, as a polynomial in the same variable set.
  Poly coeff_in(std::size_t var, int k) const;
  Poly derivative(std::size_t var) const;
  /// Replaces every variable i by values[i]; all values share one arity.
  Poly compose(std::span<const Poly> values) const;
  Poly substitute(std::size_t var, const Poly& value) const;
  Poly pow(unsigned n) const;

  /// Lexicographically largest exponent; requires a nonzero polynomial.
  const Exponent& leading_exponent() const { return terms_.rbegin()->first; }
  const Rational& leading_coefficient() const { return terms_.rbegin()->second; }

  /// Quotient if `divisor` divides *this exactly, otherwise nullopt.
  std::optional<Poly> exact_div(const Poly& divisor) const;

  template <class T>
  T eval(std::span<const T> point) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_;
  Terms terms_;
};

namespace detail {
template <class T>
T from_rational(const Rational& r) {
  if constexpr (std::is_same_v<T, Rational>) {
    return r;
  } else {
    return T(r.get_d());
  }
}
}  // namespace detail

template <class T>
T Poly::eval(std::span<const T> point) const {
  T sum = detail::from_rational<T>(Rational(0));
  for (const auto& [e, c] : terms_) {
    T term = detail::from_rational<T>(c);
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    sum += term;
  }
  return sum;
}

/// Default variable names used by the text syntax.
inline const std::vector<std::string>& default_var_names() {
  static const std::vector<std::string> names{"x", "y", "z", "w"};
  return names;
}

/// Parses the text syntax over the given variable names: sums, products,
/// parentheses, `^` with non-negative integer exponents, and integer,
/// decimal or fraction literals. Division is only allowed by constants.
Poly parse_poly(std::string_view text,
                const std::vector<std::string>& names = default_var_names());

/// Canonical printing: terms by descending total degree, then descending
/// lexicographic exponent. parse_poly(to_string(p)) == p.
std::string to_string(const Poly& p,
                      const std::vector<std::string>& names = default_var_names());

/// Homogenizes a polynomial in n variables into n+1 variables, the new
/// variable appended last.
Poly homogenize(const Poly& p);

}  // namespace affcubic
