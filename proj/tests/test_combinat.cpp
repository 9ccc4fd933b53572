#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "affcubic/combinat/combinat.hpp"
#include "affcubic/error.hpp"

using namespace affcubic;
using namespace affcubic::combinat;

namespace {

bool contains(const std::vector<BlowupLabel>& v, BlowupLabel l) {
  return std::find(v.begin(), v.end(), l) != v.end();
}

using Orbit = std::vector<std::pair<int, int>>;

std::vector<Orbit> orbits(int mu) {
  std::vector<Orbit> out;
  for (const auto& o : cremona_orbits(mu)) {
    Orbit s;
    for (const auto& l : o) s.push_back({l.a, l.b});
    std::sort(s.begin(), s.end());
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("labels") {
  CHECK(all_labels().size() == 16);
  for (const auto& l : all_labels()) CHECK(l.valid());
  CHECK_FALSE(BlowupLabel{0, 3, 2}.valid());
  CHECK_FALSE(BlowupLabel{4, 0, 0}.valid());
}

TEST_CASE("Cremona moves and orbits") {
  CHECK(contains(cremona_moves({0, 0, 6}), {0, 3, 3}));
  CHECK(contains(cremona_moves({0, 5, 1}), {0, 2, 4}));
  CHECK(contains(cremona_moves({1, 3, 1}), {1, 0, 4}));
  CHECK(cremona_moves({0, 6, 0}).empty());
  for (const auto& l : all_labels())
    for (const auto& m : cremona_moves(l)) {
      CHECK(m.valid());
      CHECK(m.mu == l.mu);
    }
  CHECK(orbits(0) == std::vector<Orbit>{{{0, 6}, {3, 3}, {4, 2}}, {{1, 5}, {2, 4}, {5, 1}}, {{6, 0}}});
  CHECK(orbits(1) == std::vector<Orbit>{{{0, 4}, {1, 3}, {2, 2}, {3, 1}}, {{4, 0}}});
  CHECK(orbits(2) == std::vector<Orbit>{{{0, 2}, {1, 1}}, {{2, 0}}});
  CHECK(orbits(3) == std::vector<Orbit>{{{0, 0}}});
}

TEST_CASE("line counts: formula against the incidence model") {
  CHECK(total_real_lines(0) == 27);
  CHECK(total_real_lines(1) == 15);
  CHECK(total_real_lines(2) == 7);
  CHECK(total_real_lines(3) == 3);
  for (const auto& l : all_labels()) {
    CAPTURE(to_string(l));
    const auto model = incidence_model(l);
    REQUIRE(model.size() == 27);
    int real = 0, meets = 0;
    for (const auto& m : model) {
      real += m.is_real;
      meets += m.is_real && m.meets_oval_image;
      CHECK((!m.meets_oval_image || m.is_real));
    }
    CHECK(real == total_real_lines(l.mu));
    CHECK(meets == oval_image_count(l));
  }
  CHECK(oval_image_count({0, 0, 6}) == 12);
  CHECK(oval_image_count({0, 1, 5}) == 11);
}

TEST_CASE("oval counts are Cremona invariant") {
  CHECK(oval_count({0, 0, 6}) == 12);
  CHECK(oval_count({0, 1, 5}) == 16);
  for (auto l : {BlowupLabel{1, 0, 4}, {1, 1, 3}, {1, 2, 2}, {1, 3, 1}}) CHECK(oval_count(l) == 8);
  for (auto l : {BlowupLabel{2, 2, 0}, {1, 4, 0}, {0, 6, 0}}) CHECK(oval_count(l) == 0);
  for (int mu = 0; mu <= 3; ++mu)
    for (const auto& orbit : cremona_orbits(mu))
      for (const auto& l : orbit) CHECK(oval_count(l) == oval_count(orbit.front()));
}

TEST_CASE("shipped wall graph") {
  const GraphSpec g = wall_graph();
  CHECK(g.vertices.size() == 15);
  CHECK(validate(g).empty());
  auto edge = [&](int v1, int v2) {
    for (const auto& e : g.edges)
      if ((e.v1 == v1 && e.v2 == v2) || (e.v1 == v2 && e.v2 == v1)) return e.k;
    FAIL("missing edge");
    return Label{};
  };
  CHECK(edge(12, 9) == Label{6, {}});
  CHECK(edge(9, 6) == Label{4, {}});
  CHECK(edge(6, 4) == Label{2, {}});
  CHECK(graph_from_json(to_json(g)).edges.size() == g.edges.size());
  CHECK(to_dot(g).find("c12 -- c9") != std::string::npos);
}

TEST_CASE("validators catch edited graphs") {
  GraphSpec g = wall_graph();
  GraphSpec bad_k = g;
  bad_k.edges[0].k = Label{5, {}};
  CHECK_FALSE(validate(bad_k).empty());
  GraphSpec bad_label = g;
  for (auto& v : bad_label.vertices)
    if (v.class_id == 13) v.label = Label{15, 12};
  CHECK_FALSE(validate(bad_label).empty());
  GraphSpec missing = g;
  missing.vertices.pop_back();
  CHECK_FALSE(validate(missing).empty());
  GraphSpec black = g;
  for (auto& v : black.vertices)
    if (v.class_id == 15) v.black = false;
  CHECK_FALSE(validate(black).empty());
  CHECK_THROWS_AS(wall_graph("/nonexistent/wall_graph.json"), Error);
}

TEST_CASE("wall table") {
  const auto t = wall_table();
  CHECK(t.size() == 14);
  auto lookup = [&](Label l) {
    for (const auto& e : t)
      if (e.label == l) return e;
    FAIL("missing label");
    return t.front();
  };
  CHECK(lookup({6, 0}).ordinary_walls == 3);
  CHECK(lookup({0, 0}).ordinary_walls == 1);
  CHECK(lookup({0, 0}).extended_walls == 2);
  CHECK(lookup({6, {}}).ordinary_walls == 3);
  CHECK(total_ordinary_walls() == 22);
}

TEST_CASE("arrangement closure") {
  const auto extremal = load_arrangements();
  CHECK(extremal.size() == 7);
  const auto closure = polotovsky_closure(extremal);
  CHECK(closure.size() == 25);
  for (const auto& [key, a] : closure) {
    CHECK(a.word.size() <= 6);
    CHECK(a.count('J') % 2 == 0);
    CHECK(a.count('O') % 2 == 0);
    CHECK(canonical_form(arrangement_from_json(to_json(a))) == key);
  }
  // moves never leave the closure, and the seven are not reachable from each other
  std::set<std::string> reached;
  for (const auto& [key, a] : closure)
    for (const auto& b : move_shift(a)) reached.insert(canonical_form(b));
  for (const auto& a : extremal) CHECK_FALSE(reached.count(canonical_form(a)));
}

TEST_CASE("arrangement moves") {
  Arrangement two;
  two.oval = true;
  two.word = "JJ";
  two.j_order = {0, 1};
  two.inside = {{0, 1}};
  two.essential = {{0, 1}};
  two.nesting = "out";
  check(two);
  const auto shifted = move_shift(two);
  REQUIRE(shifted.size() == 1);
  CHECK(shifted[0].word.empty());
  CHECK(shifted[0].nesting == "apart");

  // erasing is a no-op without free ovals
  Arrangement busy = two;
  busy.oval = false;
  busy.nesting.clear();
  CHECK(move_erase(busy).empty());

  // invariance of the canonical form under relabeling along the conic
  Arrangement r = two;
  r.j_order = {1, 0};
  CHECK(canonical_form(r) == canonical_form(two));

  Arrangement odd = two;
  odd.word = "JJJ";
  CHECK_THROWS_AS(check(odd), Error);
  Arrangement crossing;
  crossing.word = "JJJJ";
  crossing.j_order = {0, 2, 1, 3};
  crossing.inside = {{0, 2}, {1, 3}};
  crossing.essential = {{1, 2}};
  CHECK_THROWS_AS(check(crossing), Error);
}
