// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <set>

#include "affcubic/algebra/roots.hpp"
#include "affcubic/classify/classify.hpp"
#include "affcubic/combinat/combinat.hpp"
#include "affcubic/curve/curve.hpp"
#include "affcubic/error.hpp"
#include "affcubic/lines/lines.hpp"

using namespace affcubic;
using cd = std::complex<double>;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// ---- 1 ----
Outcome cremona() {
  using combinat::cremona_orbits;
  using Set = std::set<std::set<std::pair<int, int>>>;
  auto as_set = [](int mu) {
    Set s;
    for (const auto& o : cremona_orbits(mu)) {
      std::set<std::pair<int, int>> x;
      for (const auto& l : o) x.insert({l.a, l.b});
      s.insert(x);
    }
    return s;
  };
  const auto t = Clock::now();
  const Set s0 = as_set(0), s1 = as_set(1), s2 = as_set(2), s3 = as_set(3);
  const double ms = 1e3 * seconds_since(t);
  const bool ok = s0 == Set{{{6, 0}}, {{0, 6}, {3, 3}, {4, 2}}, {{1, 5}, {2, 4}, {5, 1}}} &&
                  s1 == Set{{{4, 0}}, {{0, 4}, {1, 3}, {2, 2}, {3, 1}}} &&
                  s2 == Set{{{2, 0}}, {{0, 2}, {1, 1}}} && s3 == Set{{{0, 0}}} && ms < 1;
  return {ok, "orbits 3/2/2/1 in " + fmt(ms) + " ms"};
}

// ---- 2, 3 ----
int oracle_count(const combinat::BlowupLabel& l) {
  int n = 0;
  for (const auto& m : combinat::incidence_model(l)) n += m.is_real && m.meets_oval_image;
  return n;
}

Outcome oval_counts() {
  int checked = 0;
  for (const auto& l : combinat::all_labels()) {
    int want = 0;
    if (l.b > 0 && l.mu == 1) want = 8;
    if (l.b > 0 && l.mu == 2) want = 4;
    if (l.mu == 0 && l.b > 0) {
      const bool twelve = (l.a == 0 && l.b == 6) || (l.a == 3 && l.b == 3) || (l.a == 4 && l.b == 2);
      want = twelve ? 12 : 16;
    }
    // closed form and brute force over the model, then the oval is the image iff b is even
    const int image = oracle_count(l);
    const int from_model = l.b % 2 == 0 ? image : combinat::total_real_lines(l.mu) - image;
    if (image != combinat::oval_image_count(l) || combinat::oval_count(l) != want ||
        from_model != want)
      return {false, "mismatch at " + combinat::to_string(l)};
    ++checked;
  }
  return {checked == 16, std::to_string(checked) + " labels, formula = model"};
}

Outcome real_lines_by_mu() {
  std::vector<int> got;
  for (int mu = 0; mu <= 3; ++mu) {
    int n = 0;
    for (const auto& m : combinat::incidence_model({mu, 6 - 2 * mu, 0})) n += m.is_real;
    got.push_back(n);
  }
  return {got == std::vector<int>{27, 15, 7, 3},
          std::to_string(got[0]) + "/" + std::to_string(got[1]) + "/" + std::to_string(got[2]) +
              "/" + std::to_string(got[3])};
}

// ---- 4 ----
std::vector<lines::Plucker> fermat_closed_form() {
  const cd omega = std::polar(1.0, 2 * std::numbers::pi / 3);
  const cd roots[3] = {1.0, omega, omega * omega};
  const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  std::vector<lines::Plucker> out;
  for (const auto& pr : pairings)
    for (const cd& a : roots)
      for (const cd& b : roots) {
        lines::Vec4 u{}, v{};
        u[pr[0]] = -a;
        u[pr[1]] = 1;
        v[pr[2]] = -b;
        v[pr[3]] = 1;
        out.push_back(lines::normalize(lines::wedge(u, v)));
      }
  return out;
}

bool tritangent_structure(const lines::LineSet& ls) {
  const auto triples = lines::tritangent_triples(ls);
  std::vector<int> per_line(27, 0);
  for (const auto& t : triples)
    for (int i : t.index) ++per_line[i];
  return triples.size() == 45 &&
         std::all_of(per_line.begin(), per_line.end(), [](int n) { return n == 5; });
}

Outcome line_solver() {
  std::string detail;
  bool ok = true;
  for (const char* s : {"x^3+y^3+z^3+w^3", "x^3+y^3+z^3+w^3-(x+y+z+w)^3"}) {
    const auto t = Clock::now();
    const auto ls = lines::solve_lines(parse_poly(s));
    const double sec = seconds_since(t);
    double res = 0;
    for (const auto& l : ls.lines) res = std::max(res, l.residual);
    const bool fermat = std::string(s) == "x^3+y^3+z^3+w^3";
    ok = ok && ls.lines.size() == 27 && res < 1e-10 && sec < 10 && tritangent_structure(ls);
    if (fermat) {
      double worst = 0;
      for (const auto& p : fermat_closed_form()) {
        double best = 2;
        for (const auto& l : ls.lines) best = std::min(best, lines::distance(p, l.p));
        worst = std::max(worst, best);
      }
      ok = ok && ls.real_count == 3 && worst < 1e-9;
      detail += "Fermat 3 real, closed-form gap " + fmt(worst);
    } else {
      ok = ok && ls.real_count == 27;
      detail += "; Clebsch " + std::to_string(ls.real_count) + " real";
    }
    detail += ", residual " + fmt(res) + ", " + fmt(sec) + " s";
  }
  return {ok, detail + ", 45 tritangents, 5 per line"};
}

// ---- 5, 9 ----
struct Witness {
  std::string surface, plane;
  int class_id;
};

std::vector<Witness> witnesses() {
  std::ifstream in(combinat::default_data_dir() / "witnesses.json");
  const nlohmann::json j = nlohmann::json::parse(in);
  std::vector<Witness> out;
  for (const auto& w : j.at("witnesses"))
    out.push_back({w.at("surface"), w.at("plane"), w.at("class_id")});
  return out;
}

Outcome witness_suite() {
  std::set<int> ids;
  std::set<int> exceptional;  // oval line counts seen on classes 13 and 14
  int wrong = 0;
  const auto ws = witnesses();
  for (const auto& w : ws) {
    try {
      const auto r = classify::affine_class(parse_poly(w.surface), parse_poly(w.plane));
      if (r.class_id != w.class_id) ++wrong;
      ids.insert(r.class_id);
      if ((r.class_id == 13 && r.oval_line_count == 16) ||
          (r.class_id == 14 && r.oval_line_count == 12))
        exceptional.insert(*r.oval_line_count);
    } catch (const Error&) {
      ++wrong;
    }
  }
  return {ids.size() == 15 && wrong == 0 && exceptional == std::set<int>{12, 16},
          std::to_string(ws.size()) + " witnesses, " + std::to_string(ids.size()) +
              " distinct class ids, exceptional pair 12 vs 16, " + std::to_string(wrong) +
              " mismatches"};
}

// ---- 6, 7, 8 ----
Outcome graph() {
  const auto g = combinat::wall_graph();
  const auto bad = combinat::validate(g);
  return {bad.empty() && g.vertices.size() == 15,
          std::to_string(g.vertices.size()) + " vertices, " + std::to_string(g.edges.size()) +
              " edges, " + std::to_string(bad.size()) + " violations"};
}

Outcome walls() {
  using combinat::Label;
  const std::vector<std::pair<Label, int>> table = {
      {{0, {}}, 1}, {{2, {}}, 1}, {{4, {}}, 1}, {{6, {}}, 3}, {{0, 0}, 1},
      {{0, 2}, 1},  {{2, 0}, 2},  {{0, 4}, 1},  {{2, 2}, 1},  {{4, 0}, 2},
      {{0, 6}, 1},  {{2, 4}, 2},  {{4, 2}, 1},  {{6, 0}, 3}};
  const auto t = combinat::wall_table();
  bool ok = t.size() == table.size();
  for (std::size_t i = 0; ok && i < t.size(); ++i)
    ok = t[i].label == table[i].first && t[i].ordinary_walls == table[i].second &&
         t[i].extended_walls == (t[i].label == Label{0, 0} ? 2 : 1);
  // each edge of the graph is exactly one extended wall
  std::multiset<Label> edges, extended;
  for (const auto& e : combinat::wall_graph().edges) edges.insert(e.k);
  for (const auto& w : t)
    for (int i = 0; i < w.extended_walls; ++i) extended.insert(w.label);
  ok = ok && edges == extended;
  return {ok, "14 labels, " + std::to_string(combinat::total_ordinary_walls()) +
                  " ordinary walls, edges = extended walls"};
}

Outcome polotovsky() {
  const auto ex = combinat::load_arrangements();
  const auto closure = combinat::polotovsky_closure(ex);
  return {ex.size() == 7 && closure.size() == 25,
          std::to_string(ex.size()) + " extremal -> " + std::to_string(closure.size())};
}

// ---- 9 ----
std::array<cd, 2> add(const std::array<cd, 2>& p, const std::array<cd, 2>& q) {
  // y^2 = x^3 - x
  const cd lambda = std::abs(p[0] - q[0]) < 1e-12 ? (3.0 * p[0] * p[0] - 1.0) / (2.0 * p[1])
                                                  : (q[1] - p[1]) / (q[0] - p[0]);
  const cd x = lambda * lambda - p[0] - q[0];
  return {x, lambda * (p[0] - x) - p[1]};
}

Poly transform(const Poly& f, const std::array<std::array<int, 4>, 4>& m) {
  std::vector<Poly> sub;
  for (int i = 0; i < 4; ++i) {
    Poly row(4);
    for (int j = 0; j < 4; ++j) row += Poly::constant(4, m[i][j]) * Poly::variable(4, j);
    sub.push_back(row);
  }
  return f.compose(sub);
}

long det4(std::array<std::array<int, 4>, 4> m) {
  long d = 0;
  const int p[24][4] = {{0,1,2,3},{0,1,3,2},{0,2,1,3},{0,2,3,1},{0,3,1,2},{0,3,2,1},
                        {1,0,2,3},{1,0,3,2},{1,2,0,3},{1,2,3,0},{1,3,0,2},{1,3,2,0},
                        {2,0,1,3},{2,0,3,1},{2,1,0,3},{2,1,3,0},{2,3,0,1},{2,3,1,0},
                        {3,0,1,2},{3,0,2,1},{3,1,0,2},{3,1,2,0},{3,2,0,1},{3,2,1,0}};
  for (const auto& s : p) {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inv += s[i] > s[j];
    long t = inv % 2 ? -1 : 1;
    for (int i = 0; i < 4; ++i) t *= m[i][s[i]];
    d += t;
  }
  return d;
}

Outcome properties() {
  const Poly cubic = parse_poly("y^2*z - x^3 + x*z^2", {"x", "y", "z"});
  const auto a = curve::analyze_cubic(cubic);
  std::mt19937_64 rng(11);

  // drop-one recovery on random conic sections
  int sections = 0, recovered = 0;
  std::uniform_int_distribution<int> coef(-5, 5);
  while (sections < 100) {
    Poly q(3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        std::vector<int> e(3, 0);
        ++e[i], ++e[j];
        q.add_term(e, coef(rng));
      }
    try {
      const auto conic = curve::make_conic(q);
      if (conic.degenerate) continue;
      const auto s = curve::conic_cubic_intersection(conic, a);
      if (!s.transversal) continue;
      ++sections;
      int ok = 0;
      for (std::size_t drop = 0; drop < 6; ++drop) {
        std::vector<curve::Point3> five;
        for (std::size_t i = 0; i < 6; ++i)
          if (i != drop) five.push_back(s.points[i].point);
        ok += curve::distance(curve::residual_point(a, five), s.points[drop].point) < 1e-9;
      }
      recovered += ok == 6;
    } catch (const Error&) {
    }
  }

  // the six points cut by a conic sum to zero in the group law
  int group_ok = 0;
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::array<cd, 2>> pts;
    std::vector<curve::Point3> five;
    for (int i = 0; i < 5; ++i) {
      const cd x(g(rng), g(rng));
      pts.push_back({x, std::sqrt(x * x * x - x)});
      five.push_back({pts.back()[0], pts.back()[1], 1.0});
    }
    auto sum = pts[0];
    for (int i = 1; i < 5; ++i) sum = add(sum, pts[i]);
    group_ok += curve::distance(curve::residual_point(cubic, five), {sum[0], -sum[1], 1.0}) < 1e-7;
  }

  // exact real roots against numerical complex roots
  int roots_ok = 0;
  std::uniform_int_distribution<int> rc(-20, 20);
  for (int trial = 0; trial < 1000; ++trial) {
    const int deg = 1 + static_cast<int>(rng() % 12);
    std::vector<Rational> c;
    for (int k = 0; k <= deg; ++k) {
      Rational r(rc(rng), 1 + static_cast<int>(rng() % 4));
      r.canonicalize();
      c.push_back(r);
    }
    if (c.back() == 0) c.back() = 1;
    const UPoly p(c);
    int real = 0;
    for (const auto& r : real_roots(p)) real += r.multiplicity;
    int nonreal = 0;
    for (const cd& v : complex_roots(p)) nonreal += std::abs(v.imag()) > 1e-7 * std::max(1.0, std::abs(v));
    roots_ok += real + nonreal == p.degree() && nonreal % 2 == 0;
  }

  // class id under random projective changes of coordinates
  const auto ws = witnesses();
  std::vector<std::array<std::array<int, 4>, 4>> ms;
  std::uniform_int_distribution<int> me(-2, 2);
  while (ms.size() < 5) {
    std::array<std::array<int, 4>, 4> m;
    for (auto& row : m)
      for (auto& x : row) x = me(rng);
    if (det4(m) != 0) ms.push_back(m);
  }
  std::vector<int> invariant(ws.size() * ms.size(), 0);
  classify::ClassifyOptions opts;
  opts.lines.parallel = false;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < invariant.size(); ++k) {
    const auto& w = ws[k / ms.size()];
    const auto& m = ms[k % ms.size()];
    try {
      const auto r = classify::affine_class(transform(parse_poly(w.surface), m),
                                            transform(parse_poly(w.plane), m), opts);
      invariant[k] = r.class_id == w.class_id;
    } catch (const Error&) {
    }
  }
  const int inv = static_cast<int>(std::count(invariant.begin(), invariant.end(), 1));
  const bool ok = recovered == 100 && group_ok == 50 && roots_ok == 1000 &&
                  inv == static_cast<int>(invariant.size()) && ws.size() >= 20;
  return {ok, "drop-one " + std::to_string(recovered) + "/100, group law " +
                  std::to_string(group_ok) + "/50, root counts " + std::to_string(roots_ok) +
                  "/1000, class id invariant " + std::to_string(inv) + "/" +
                  std::to_string(invariant.size())};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Cremona orbit partition", cremona},
      {"oval line counts, formula and model", oval_counts},
      {"real lines per mu", real_lines_by_mu},
      {"27 lines of Fermat and Clebsch", line_solver},
      {"witness suite covers 15 classes", witness_suite},
      {"wall graph validators", graph},
      {"ordinary walls per extended wall", walls},
      {"arrangement closure", polotovsky},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("criterion %zu %s: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
