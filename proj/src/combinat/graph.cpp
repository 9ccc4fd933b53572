#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "affcubic/combinat/combinat.hpp"
#include "affcubic/error.hpp"

#ifndef AFFCUBIC_DATA_DIR
#define AFFCUBIC_DATA_DIR "data"
#endif

namespace affcubic::combinat {

std::string Label::text() const {
  return b ? std::to_string(a) + "," + std::to_string(*b) : std::to_string(a);
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("AFFCUBIC_DATA_DIR")) return env;
  return AFFCUBIC_DATA_DIR;
}

namespace {

Label label_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return {j.get<int>(), {}};
  if (j.is_array() && j.size() == 2) return {j[0].get<int>(), j[1].get<int>()};
  throw Error(ErrorKind::Parse, "label must be an integer or a pair");
}

nlohmann::json label_to_json(const Label& l) {
  if (l.b) return nlohmann::json::array({l.a, *l.b});
  return l.a;
}

// Projective data per class id: real lines and Euler characteristic.
struct Kind {
  const char* name;
  int lines;
  int chi;
};

Kind kind_of(int id) {
  if (id <= 3) return {"C3b", 3, 3};
  if (id <= 5) return {"C3a", 3, 1};
  if (id <= 8) return {"C7", 7, -1};
  if (id <= 11) return {"C15", 15, -3};
  return {"C27", 27, -5};
}

int mu_of_lines(int lines) {
  for (int mu = 0; mu <= 3; ++mu)
    if (total_real_lines(mu) == lines) return mu;
  return -1;
}

}  // namespace

GraphSpec graph_from_json(const nlohmann::json& j) {
  GraphSpec g;
  try {
    for (const auto& v : j.at("vertices"))
      g.vertices.push_back({v.at("class_id").get<int>(), label_from_json(v.at("label")),
                            v.value("black", false)});
    for (const auto& e : j.at("edges"))
      g.edges.push_back({e.at("v1").get<int>(), e.at("v2").get<int>(), label_from_json(e.at("k"))});
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("graph: ") + e.what());
  }
  return g;
}

GraphSpec wall_graph(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorKind::ConfigMissing, "cannot open " + file.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, file.string() + ": " + e.what());
  }
  return graph_from_json(j);
}

nlohmann::json to_json(const GraphSpec& g) {
  nlohmann::json j = {{"vertices", nlohmann::json::array()}, {"edges", nlohmann::json::array()}};
  for (const auto& v : g.vertices)
    j["vertices"].push_back(
        {{"class_id", v.class_id}, {"label", label_to_json(v.label)}, {"black", v.black}});
  for (const auto& e : g.edges)
    j["edges"].push_back({{"v1", e.v1}, {"v2", e.v2}, {"k", label_to_json(e.k)}});
  return j;
}

std::string to_dot(const GraphSpec& g) {
  std::string s = "graph walls {\n  node [shape=circle];\n";
  for (const auto& v : g.vertices) {
    s += "  c" + std::to_string(v.class_id) + " [label=\"" + v.label.text() + "\"";
    if (v.black) s += " style=filled fillcolor=black fontcolor=white";
    s += " tooltip=\"class " + std::to_string(v.class_id) + "\"];\n";
  }
  for (const auto& e : g.edges)
    s += "  c" + std::to_string(e.v1) + " -- c" + std::to_string(e.v2) + " [label=\"" +
         e.k.text() + "\"];\n";
  return s + "}\n";
}

std::vector<WallTableEntry> wall_table() {
  return {
      {{0, {}}, 1, 1},  {{2, {}}, 1, 1},  {{4, {}}, 1, 1},  {{6, {}}, 3, 1},  {{0, 0}, 1, 2},
      {{0, 2}, 1, 1},   {{2, 0}, 2, 1},   {{0, 4}, 1, 1},   {{2, 2}, 1, 1},   {{4, 0}, 2, 1},
      {{0, 6}, 1, 1},   {{2, 4}, 2, 1},   {{4, 2}, 1, 1},   {{6, 0}, 3, 1},
  };
}

int total_ordinary_walls() {
  int n = 0;
  for (const auto& e : wall_table()) n += e.ordinary_walls * e.extended_walls;
  return n;
}

std::vector<std::string> validate(const GraphSpec& g) {
  std::vector<std::string> bad;
  std::map<int, const GraphVertex*> by_id;
  for (const auto& v : g.vertices) {
    if (v.class_id < 1 || v.class_id > 15 || by_id.count(v.class_id))
      bad.push_back("vertex " + std::to_string(v.class_id) + ": bad or repeated class id");
    by_id[v.class_id] = &v;
  }
  if (g.vertices.size() != 15) bad.push_back("expected 15 vertices");

  for (const auto& e : g.edges) {
    const std::string name =
        "edge " + std::to_string(e.v1) + "-" + std::to_string(e.v2) + " [" + e.k.text() + "]";
    if (!by_id.count(e.v1) || !by_id.count(e.v2)) {
      bad.push_back(name + ": unknown vertex");
      continue;
    }
    const Label& l1 = by_id[e.v1]->label;
    const Label& l2 = by_id[e.v2]->label;
    if (l1.is_pair() != e.k.is_pair() || l2.is_pair() != e.k.is_pair()) {
      bad.push_back(name + ": label shapes differ");
      continue;
    }
    // (i) line counts drop by twice the lines through the node
    const int k_total = e.k.a + e.k.b.value_or(0);
    if (e.k.a < 0 || e.k.b.value_or(0) < 0 || 2 * k_total > 12)
      bad.push_back(name + ": k out of range");
    if (std::abs(l1.a - l2.a) != 2 * e.k.a ||
        (e.k.b && std::abs(*l1.b - *l2.b) != 2 * *e.k.b))
      bad.push_back(name + ": line counts differ by other than 2k");
    // (ii) labels decrease toward higher chi
    const Kind k1 = kind_of(e.v1), k2 = kind_of(e.v2);
    if (k1.chi == k2.chi) {
      bad.push_back(name + ": joins classes with equal Euler characteristic");
    } else {
      const Label& lo = k1.chi < k2.chi ? l1 : l2;
      const Label& hi = k1.chi < k2.chi ? l2 : l1;
      if (hi.a > lo.a || (hi.b && *hi.b > *lo.b))
        bad.push_back(name + ": label grows toward higher Euler characteristic");
    }
  }

  // (iii) connected-curve part equals the projective graph
  std::set<std::tuple<std::string, std::string, int>> want = {
      {"C15", "C27", 6}, {"C15", "C7", 4}, {"C3a", "C7", 2}, {"C3a", "C3b", 0}};
  std::set<std::tuple<std::string, std::string, int>> have;
  std::multiset<std::string> connected_kinds;
  for (const auto& v : g.vertices)
    if (!v.label.is_pair()) connected_kinds.insert(kind_of(v.class_id).name);
  for (const auto& e : g.edges) {
    if (e.k.is_pair()) continue;
    std::string a = kind_of(e.v1).name, b = kind_of(e.v2).name;
    if (a > b) std::swap(a, b);
    have.insert({a, b, e.k.a});
  }
  const std::multiset<std::string> all_kinds = {"C27", "C15", "C7", "C3a", "C3b"};
  if (connected_kinds != all_kinds || have != want)
    bad.push_back("connected-curve subgraph differs from the projective graph");

  // (iv) vertex labels against the blow-up model
  std::map<int, std::multiset<int>> model, shipped;
  for (int mu = 0; mu <= 3; ++mu)
    for (const auto& orbit : cremona_orbits(mu)) model[mu].insert(oval_count(orbit.front()));
  for (const auto& v : g.vertices) {
    const Kind k = kind_of(v.class_id);
    const std::string name = "vertex " + std::to_string(v.class_id);
    if (!v.label.is_pair()) {
      if (v.label.a != k.lines) bad.push_back(name + ": label is not the real line count");
      if (v.black) bad.push_back(name + ": black vertex with connected curve");
      continue;
    }
    if (v.label.a + *v.label.b != k.lines)
      bad.push_back(name + ": label does not split the real line count");
    if (v.black && *v.label.b != 0) bad.push_back(name + ": black vertex whose oval meets lines");
    if (std::string(k.name) == "C3b") continue;  // no blow-up model
    if (*v.label.b == 0 && !v.black) bad.push_back(name + ": null-homologous oval not black");
    shipped[mu_of_lines(k.lines)].insert(*v.label.b);
  }
  if (shipped != model) bad.push_back("two-component vertices differ from the Cremona orbits");

  // each edge is one extended wall
  std::multiset<Label> walls, edges;
  for (const auto& w : wall_table())
    for (int i = 0; i < w.extended_walls; ++i) walls.insert(w.label);
  for (const auto& e : g.edges) edges.insert(e.k);
  if (walls != edges) bad.push_back("edge labels differ from the extended walls");
  return bad;
}

}  // namespace affcubic::combinat
