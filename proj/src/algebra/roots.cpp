#include "affcubic/algebra/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "affcubic/error.hpp"

namespace affcubic {

namespace {

// Upper bound on |root|: 1 + max |a_k / a_n|, rounded up to a power of two.
Rational cauchy_bound(const UPoly& p) {
  Rational m(0);
  const Rational lc = abs(p.leading());
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p[k]) / lc));
  Rational b(1);
  while (b < m + 1) b *= 2;
  return b;
}

// Descartes bound for roots of p in the open interval (a, b).
int descartes_bound(const UPoly& p, const Rational& a, const Rational& b) {
  UPoly q = p.taylor_shift(a).scale(b - a).reversed().taylor_shift(Rational(1));
  return sign_variations(q);
}

// Halves an isolating interval of the square-free q, keeping the half that
// holds the root; works even when an endpoint is itself a root of q.
Interval bisect_once(const UPoly& q, const Interval& iv) {
  const Rational m = iv.mid();
  if (q.sign_at(m) == 0) return {m, m};
  if (descartes_bound(q, iv.lo, m) == 1) return {iv.lo, m};
  return {m, iv.hi};
}

}  // namespace

std::vector<Interval> isolate_squarefree(const UPoly& p) {
  std::vector<Interval> out;
  if (p.degree() <= 0) return out;
  const UPoly q = p.primitive();
  const Rational bound = cauchy_bound(q);
  std::vector<Interval> stack{{-bound, bound}};
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    const int v = descartes_bound(q, iv.lo, iv.hi);
    if (v == 0) continue;
    if (v == 1) {
      while (!iv.is_point() && (q.sign_at(iv.lo) == 0 || q.sign_at(iv.hi) == 0))
        iv = bisect_once(q, iv);
      out.push_back(iv);
      continue;
    }
    const Rational m = iv.mid();
    if (q.sign_at(m) == 0) out.push_back({m, m});
    stack.push_back({iv.lo, m});
    stack.push_back({m, iv.hi});
  }
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  return out;
}

Interval refine(const UPoly& p, Interval iv, const Rational& width) {
  if (iv.is_point()) return iv;
  int slo = p.sign_at(iv.lo);
  while (iv.hi - iv.lo >= width) {
    const Rational m = iv.mid();
    const int sm = p.sign_at(m);
    if (sm == 0) return {m, m};
    if (sm == slo) {
      iv.lo = m;
    } else {
      iv.hi = m;
    }
  }
  return iv;
}

std::vector<RealRoot> real_roots(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "real_roots of zero polynomial");
  struct Tagged {
    UPoly factor;
    RealRoot root;
  };
  std::vector<Tagged> all;
  for (const auto& [f, mult] : squarefree_factorization(p))
    for (const auto& iv : isolate_squarefree(f)) all.push_back({f, {iv, mult}});

  auto overlaps = [](const Interval& a, const Interval& b) {
    if (a.is_point() && b.is_point()) return a.lo == b.lo;
    if (a.is_point()) return b.lo < a.lo && a.lo < b.hi;
    if (b.is_point()) return a.lo < b.lo && b.lo < a.hi;
    return a.lo < b.hi && b.lo < a.hi;
  };
  // Roots of distinct factors are distinct, so refining overlapping
  // intervals always separates them.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        auto& a = all[i].root.interval;
        auto& b = all[j].root.interval;
        if (!overlaps(a, b)) continue;
        if (!a.is_point()) a = refine(all[i].factor, a, (a.hi - a.lo) / 2);
        if (!b.is_point()) b = refine(all[j].factor, b, (b.hi - b.lo) / 2);
        changed = true;
      }
  }
  // Keep endpoints off every root of p, not just the root's own factor.
  for (auto& t : all) {
    auto& iv = t.root.interval;
    while (!iv.is_point() && (p.sign_at(iv.lo) == 0 || p.sign_at(iv.hi) == 0))
      iv = bisect_once(t.factor, iv);
  }
  std::vector<RealRoot> out;
  for (auto& t : all) out.push_back(t.root);
  std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) {
    return a.interval.lo < b.interval.lo;
  });
  return out;
}

int count_distinct_real_roots(const UPoly& p) {
  return static_cast<int>(isolate_squarefree(squarefree_part(p)).size());
}

std::vector<std::complex<double>> complex_roots(const UPoly& p, const ComplexRootOptions& opts) {
  const auto c = p.to_complex();
  return complex_roots(std::span<const std::complex<double>>(c), opts);
}

std::vector<std::complex<double>> complex_roots(std::span<const std::complex<double>> coeffs,
                                                const ComplexRootOptions& opts) {
  using cd = std::complex<double>;
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == cd(0)) --n;
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "complex_roots needs degree >= 1");
  const int deg = static_cast<int>(n) - 1;
  std::vector<cd> a(coeffs.begin(), coeffs.begin() + n);
  const cd lead = a.back();
  for (auto& v : a) v /= lead;

  auto eval = [&](cd z, cd& dp) {
    cd p = a[deg];
    dp = 0;
    for (int k = deg - 1; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + a[k];
    }
    return p;
  };
  auto scale_at = [&](cd z) {
    double s = 0, pw = 1;
    const double r = std::abs(z);
    for (int k = 0; k <= deg; ++k) {
      s += std::abs(a[k]) * pw;
      pw *= r;
    }
    return s;
  };

  // Initial guesses on a circle of radius given by the coefficient bound,
  // with an irrational angular offset to break symmetry.
  double radius = 0;
  for (int k = 0; k < deg; ++k)
    radius = std::max(radius, std::pow(std::abs(a[k]), 1.0 / (deg - k)));
  radius = std::max(radius, 1e-3);
  std::vector<cd> z(deg);
  for (int k = 0; k < deg; ++k)
    z[k] = std::polar(radius, 2 * std::numbers::pi * k / deg + 0.4);

  auto converged = [&](const std::vector<cd>& zs) {
    for (const auto& zi : zs) {
      cd dp;
      if (std::abs(eval(zi, dp)) > opts.tol * scale_at(zi)) return false;
    }
    return true;
  };

  for (int it = 0; it < opts.max_iterations; ++it) {
    double max_step = 0;
    for (int i = 0; i < deg; ++i) {
      cd dp;
      const cd p = eval(z[i], dp);
      if (p == cd(0)) continue;
      const cd ratio = p / dp;
      cd sum = 0;
      for (int j = 0; j < deg; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      const cd step = ratio / (1.0 - ratio * sum);
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) {
        z[i] -= step;
        max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[i])));
      }
    }
    if (max_step < 1e-15 || (it % 5 == 4 && converged(z))) break;
  }
  // Newton polishing; harmless at multiple roots since steps are accepted
  // only if they reduce the residual.
  for (auto& zi : z) {
    for (int k = 0; k < 3; ++k) {
      cd dp;
      const cd p = eval(zi, dp);
      if (dp == cd(0)) break;
      const cd cand = zi - p / dp;
      cd dq;
      if (std::abs(eval(cand, dq)) < std::abs(p)) zi = cand;
      else break;
    }
  }
  if (!converged(z))
    throw Error(ErrorKind::NonConvergence,
                "Aberth iteration did not reach tolerance for degree " + std::to_string(deg));
  return z;
}

int sign_at_root(const UPoly& p, const UPoly& q, Interval iv) {
  if (iv.is_point()) return q.sign_at(iv.lo);
  const UPoly g = gcd(p, q);
  if (g.degree() >= 1 && descartes_bound(g, iv.lo, iv.hi) > 0) return 0;
  while (descartes_bound(q, iv.lo, iv.hi) > 0) {
    iv = bisect_once(p, iv);
    if (iv.is_point()) break;
  }
  return q.sign_at(iv.mid());
}

}  // namespace affcubic
