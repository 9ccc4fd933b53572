#include "affcubic/algebra/upoly.hpp"

#include <algorithm>

#include "affcubic/error.hpp"

namespace affcubic {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& v : c_) v.canonicalize();
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::from_poly(const Poly& p, std::size_t var) {
  std::vector<Rational> c(std::max(p.degree_in(var) + 1, 0));
  for (const auto& [e, v] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0)
        throw Error(ErrorKind::InvalidArgument, "polynomial is not univariate");
    c[e[var]] += v;
  }
  return UPoly(std::move(c));
}

Poly UPoly::to_poly(std::size_t nvars, std::size_t var) const {
  Poly out(nvars);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    Poly::Exponent e(nvars, 0);
    e[var] = static_cast<int>(k);
    out.add_term(e, c_[k]);
  }
  return out;
}

Rational UPoly::eval(const Rational& t) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double UPoly::eval(double t) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

std::complex<double> UPoly::eval(std::complex<double> t) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  UPoly out = *this;
  const Rational lc = c_.back();
  for (auto& v : out.c_) v /= lc;
  return out;
}

UPoly UPoly::primitive() const {
  if (c_.empty()) return *this;
  Integer l = 1;
  for (const auto& v : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  Integer g = 0;
  for (const auto& v : c_) {
    Integer n = v.get_num() * (l / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale(l, g);
  scale.canonicalize();
  if (c_.back() < 0) scale = -scale;
  return *this * scale;
}

UPoly UPoly::taylor_shift(const Rational& a) const {
  std::vector<Rational> c = c_;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += a * c[j];
  return UPoly(std::move(c));
}

UPoly UPoly::scale(const Rational& s) const {
  std::vector<Rational> c = c_;
  Rational pw(1);
  for (auto& v : c) {
    v *= pw;
    pw *= s;
  }
  return UPoly(std::move(c));
}

UPoly UPoly::reversed() const {
  std::vector<Rational> c(c_.rbegin(), c_.rend());
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero polynomial");
  std::vector<Rational> r = c_;
  const int dd = d.degree();
  if (degree() < dd) return {UPoly(), *this};
  std::vector<Rational> q(degree() - dd + 1);
  for (int k = degree() - dd; k >= 0; --k) {
    const Rational f = r[k + dd] / d.c_.back();
    q[k] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dd; ++j) r[k + j] -= f * d.c_[j];
  }
  r.resize(dd);
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

std::vector<std::complex<double>> UPoly::to_complex() const {
  std::vector<std::complex<double>> out;
  for (const auto& v : c_) out.emplace_back(v.get_d(), 0.0);
  return out;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly operator*(UPoly a, const Rational& s) {
  for (auto& v : a.c_) v *= s;
  a.trim();
  return a;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.primitive();
  }
  return a.monic();
}

bool is_squarefree(const UPoly& p) { return gcd(p, p.derivative()).degree() == 0; }

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p;
  UPoly g = gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

std::vector<std::pair<UPoly, int>> squarefree_factorization(const UPoly& p) {
  std::vector<std::pair<UPoly, int>> out;
  if (p.degree() <= 0) return out;
  UPoly f = p.monic();
  UPoly fp = f.derivative();
  UPoly a = gcd(f, fp);
  UPoly b = f.divmod(a).first;
  UPoly c = fp.divmod(a).first;
  UPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
    b = b.divmod(a).first;
    c = d.divmod(a).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

int sign_variations(const UPoly& p) {
  int count = 0, last = 0;
  for (const auto& v : p.coeffs()) {
    const int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

std::string to_string(const UPoly& p, const std::string& var) {
  return to_string(p.to_poly(1, 0), std::vector<std::string>{var});
}

}  // namespace affcubic
