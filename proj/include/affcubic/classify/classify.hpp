#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "affcubic/algebra/poly.hpp"
#include "affcubic/curve/curve.hpp"
#include "affcubic/lines/lines.hpp"

namespace affcubic::classify {

enum class ProjectiveKind { C27, C15, C7, C3a, C3b };

std::string to_string(ProjectiveKind k);
int euler_characteristic(ProjectiveKind k);
bool is_connected(ProjectiveKind k);

struct DisambiguationRecord {
  int real_tritangents = 0;
  std::string tritangent_verdict;  // "C3a", "C3b" or "uncalibrated"
  bool hyperbolic_point_found = false;
  std::optional<std::array<double, 4>> hyperbolic_point;
  int euler_characteristic = 0;
};

struct ProjectiveClass {
  ProjectiveKind kind;
  int real_line_count;
  bool connected;
  int euler_characteristic;
  /// Present when three real lines forced the C3a/C3b tests.
  std::optional<DisambiguationRecord> disambiguation;
};

/// Restriction of a quaternary form to the plane h = 0: a ternary form in
/// the coordinates left after eliminating the pivot (first nonzero)
/// coordinate of h.
struct PlaneSection {
  std::array<Rational, 4> plane;
  int pivot;
  std::array<int, 3> free_vars;
  Poly restricted;

  /// Plane coordinates of a point of P^3 lying on the plane.
  std::array<double, 3> coordinates(const std::array<double, 4>& p) const;
  /// The point of P^3 with the given plane coordinates.
  std::array<double, 4> embed(const std::array<double, 3>& s) const;
};

PlaneSection restrict_to_plane(const Poly& f, const Poly& plane);

bool transversal_at_infinity(const Poly& f, const Poly& plane);

/// Euler characteristic of the real locus of a nonsingular cubic surface,
/// from the nodal sections of a generic pencil of planes.
int surface_euler_characteristic(const Poly& f, std::uint64_t seed = 3);

struct EulerData {
  int chi = 0;
  /// Tangency points of the pencil: local extrema (acnodes) and saddles.
  std::vector<std::array<double, 4>> acnodes, crunodes;
};
EulerData surface_euler_data(const Poly& f, std::uint64_t seed = 3);

/// Frozen real tritangent counts for the two three-line classes.
inline constexpr int kTritangentsC3a = 7;
inline constexpr int kTritangentsC3b = 13;

/// Search for a point through which every sampled real line meets the
/// surface in three real points; verify_directions random lines are tried
/// on each surviving candidate.
std::optional<std::array<double, 4>> find_hyperbolic_point(
    const Poly& f, const std::vector<std::array<double, 4>>& hints = {},
    const std::vector<std::array<double, 4>>& focus = {}, std::uint64_t seed = 4,
    int verify_directions = 1024);

/// True when all `directions` random real lines through q meet the surface
/// in three real points.
bool is_hyperbolic_point(const Poly& f, const std::array<double, 4>& q, int directions,
                         std::uint64_t seed);

/// seed = 0 keeps the built-in seeds; any other value reseeds every
/// randomized stage.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t seed);

ProjectiveClass projective_class(const Poly& f, const lines::LineSet& ls,
                                 std::uint64_t seed = 0);
ProjectiveClass projective_class(const Poly& f);

int oval_line_count(const PlaneSection& section, const curve::PlaneCubicAnalysis& a,
                    const lines::LineSet& ls);

/// b0 of X_R minus A_R, derived from connectivity and the homology class of
/// the oval.
int complement_components(ProjectiveKind kind, int curve_components,
                          std::optional<int> oval_lines, std::optional<bool> oval_in_sphere);

/// For three-line disconnected surfaces with a two-component section: is the
/// oval on the spherical component? q is a hyperbolic point (inside the
/// sphere).
bool oval_in_sphere(const Poly& f, const PlaneSection& section,
                    const curve::PlaneCubicAnalysis& a, const std::array<double, 4>& q);

struct ClassificationReport {
  std::string surface;
  std::string plane;
  bool nonsingular = false;
  bool transversal = false;
  int real_lines = 0;
  std::string projective_class;
  int euler_characteristic = 0;
  int curve_components = 0;
  std::optional<int> oval_line_count;
  int b0_complement = 0;
  std::optional<bool> oval_in_sphere;
  std::optional<std::string> q_oval;
  int class_id = 0;
  std::string description;
  double max_line_residual = 0;
  std::vector<std::string> warnings;
};

/// Class id 1..15 from the invariant tuple; InternalInconsistency outside
/// the table's support.
int class_id(ProjectiveKind kind, int curve_components, std::optional<int> oval_lines,
             std::optional<bool> oval_in_sphere);
std::string class_description(int id);

struct ClassifyOptions {
  std::uint64_t seed = 0;
  lines::SolveOptions lines;
};

ClassificationReport affine_class(const Poly& f, const Poly& plane,
                                  const ClassifyOptions& opts = {});

nlohmann::json to_json(const ClassificationReport& r);
ClassificationReport report_from_json(const nlohmann::json& j);

/// Label of the wall represented by f2 + f3: the count a of real
/// intersection points for connected C_R, or (a, b) = (one-sided, oval).
struct WallLabel {
  bool connected;
  int a;
  int b;
  std::string text() const;
};

struct WallRepresentative {
  WallLabel label;
  /// Homogenized f2 + f3: a cubic surface with a node at the origin.
  Poly surface;
};

WallRepresentative wall_label(const Poly& f2, const Poly& f3);

}  // namespace affcubic::classify
