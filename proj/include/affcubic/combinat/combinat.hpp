#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace affcubic::combinat {

// ---- blow-up model ------------------------------------------------------

/// Six blown-up points: a real ones on the one-sided component, b real ones
/// on the oval, mu complex-conjugate pairs.
struct BlowupLabel {
  int mu = 0, a = 0, b = 0;
  bool valid() const;
  auto operator<=>(const BlowupLabel&) const = default;
};

std::string to_string(const BlowupLabel& l);

/// All 16 valid labels, ordered by mu then a.
std::vector<BlowupLabel> all_labels();

std::vector<BlowupLabel> cremona_moves(const BlowupLabel& l);
std::vector<std::vector<BlowupLabel>> cremona_orbits(int mu);

enum class LineKind { E, L, Q };

struct ModelLine {
  LineKind kind;
  int i = 0, j = -1;  // point indices; j only for L
  bool is_real = false;
  bool meets_oval_image = false;
};

std::string to_string(const ModelLine& m);

/// The 27 lines of the blow-up with realness and incidence to the image of
/// the two-sided component.
std::vector<ModelLine> incidence_model(const BlowupLabel& l);

int total_real_lines(int mu);
/// Closed-form count of real lines meeting the image of the oval component.
int oval_image_count(const BlowupLabel& l);
/// Real lines meeting the oval of the plane section.
int oval_count(const BlowupLabel& l);

// ---- wall-crossing graph ------------------------------------------------

/// Either a single count (connected curve) or a pair (one-sided, oval).
struct Label {
  int a = 0;
  std::optional<int> b;
  bool is_pair() const { return b.has_value(); }
  std::string text() const;
  auto operator<=>(const Label&) const = default;
};

struct GraphVertex {
  int class_id;
  Label label;
  bool black = false;
};

struct GraphEdge {
  int v1, v2;  // class ids
  Label k;
};

struct GraphSpec {
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;
};

std::filesystem::path default_data_dir();

/// Loads the shipped graph; ConfigMissing if the file is absent.
GraphSpec wall_graph(const std::filesystem::path& file = default_data_dir() / "wall_graph.json");
GraphSpec graph_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GraphSpec& g);
std::string to_dot(const GraphSpec& g);

/// Arithmetic validators; returns human-readable violations.
std::vector<std::string> validate(const GraphSpec& g);

struct WallTableEntry {
  Label label;
  int ordinary_walls;
  /// How many extended walls carry this label.
  int extended_walls;
};

std::vector<WallTableEntry> wall_table();
int total_ordinary_walls();

// ---- conic / cubic arrangements -----------------------------------------

/// Mutual position of a nonsingular real cubic (pseudoline J, optional oval
/// O) and a real conic B in RP^2. Intersection points are numbered by their
/// order along B. Arcs of the cubic inside the disk of B are `inside`
/// chords; the arcs outside alternate with them along each component, and
/// `essential` lists the outside arcs of J crossing the crosscap.
struct Arrangement {
  bool oval = false;
  bool conic = true;
  std::string word;                 // component of each point along B: 'J' or 'O'
  std::vector<int> j_order, o_order;  // points along each component
  std::vector<std::pair<int, int>> inside;
  std::vector<std::pair<int, int>> essential;
  /// Position of intersection-free ovals: "apart", "O_in_B", "B_in_O" when
  /// both are free; "out" or "in:<gap>" for a free O when B meets J (gap g
  /// is the arc of B from point g to g+1); empty otherwise.
  std::string nesting;

  int count(char component) const;
};

/// Throws InvalidArrangement on malformed data.
void check(const Arrangement& a);
std::string canonical_form(const Arrangement& a);
std::string summary(const Arrangement& a);

/// Erasing an intersection-free oval of the cubic or of the conic.
std::vector<Arrangement> move_erase(const Arrangement& a);
/// Removing a pair of points consecutive on both curves.
std::vector<Arrangement> move_shift(const Arrangement& a);

Arrangement arrangement_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Arrangement& a);
std::vector<Arrangement> load_arrangements(
    const std::filesystem::path& file = default_data_dir() / "polotovsky_extremal.json");

/// Closure under both moves, deduplicated by canonical form.
std::map<std::string, Arrangement> polotovsky_closure(const std::vector<Arrangement>& extremal);

}  // namespace affcubic::combinat
