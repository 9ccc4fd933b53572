#include "affcubic/algebra/resultant.hpp"

#include <utility>
#include <vector>

#include "affcubic/error.hpp"

namespace affcubic {

namespace {

Poly bareiss_det(std::vector<std::vector<Poly>> m, std::size_t nvars) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(nvars, Rational(1));
  Poly prev = Poly::constant(nvars, Rational(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Poly(nvars);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = num.exact_div(prev);
        if (!q) throw Error(ErrorKind::InternalInconsistency, "Bareiss division not exact");
        m[i][j] = std::move(*q);
      }
      m[i][k] = Poly(nvars);
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace

Poly resultant(const Poly& p, const Poly& q, std::size_t var) {
  const std::size_t nv = p.nvars();
  const int m = p.degree_in(var);
  const int n = q.degree_in(var);
  if (m < 0 || n < 0) return Poly(nv);
  if (m == 0 && n == 0) return Poly::constant(nv, Rational(1));
  if (m == 0) return p.pow(static_cast<unsigned>(n));
  if (n == 0) return q.pow(static_cast<unsigned>(m));
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Poly>> s(size, std::vector<Poly>(size, Poly(nv)));
  // Rows hold coefficients from the highest power down.
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][r + k] = p.coeff_in(var, m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[n + r][r + k] = q.coeff_in(var, n - k);
  return bareiss_det(std::move(s), nv);
}

Rational resultant(const UPoly& p, const UPoly& q) {
  Poly r = resultant(p.to_poly(1, 0), q.to_poly(1, 0), 0);
  return r.coefficient({0});
}

UPoly eliminate(const Poly& p, const Poly& q, std::size_t var, std::size_t keep) {
  Poly r = resultant(p, q, var);
  return UPoly::from_poly(r, keep);
}

}  // namespace affcubic
