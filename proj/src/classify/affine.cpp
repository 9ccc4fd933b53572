#include <algorithm>

#include "affcubic/classify/classify.hpp"
#include "affcubic/error.hpp"

namespace affcubic::classify {

namespace {

std::string topology(ProjectiveKind k) {
  switch (k) {
    case ProjectiveKind::C27: return "RP2 # 3T2";
    case ProjectiveKind::C15: return "RP2 # 2T2";
    case ProjectiveKind::C7: return "RP2 # T2";
    case ProjectiveKind::C3a: return "RP2";
    case ProjectiveKind::C3b: return "RP2 + S2";
  }
  return "";
}

struct Row {
  int id;
  ProjectiveKind kind;
  int components;
  std::optional<int> oval_lines;
  std::optional<bool> in_sphere;
  const char* note;
};

const std::vector<Row>& table() {
  using K = ProjectiveKind;
  static const std::vector<Row> rows = {
      {1, K::C3b, 1, {}, {}, ""},
      {2, K::C3b, 2, {}, false, "oval on the RP2 component"},
      {3, K::C3b, 2, {}, true, "oval on the sphere"},
      {4, K::C3a, 1, {}, {}, ""},
      {5, K::C3a, 2, 0, {}, "null-homologous oval"},
      {6, K::C7, 1, {}, {}, ""},
      {7, K::C7, 2, 4, {}, "oval meets 4 real lines"},
      {8, K::C7, 2, 0, {}, "null-homologous oval"},
      {9, K::C15, 1, {}, {}, ""},
      {10, K::C15, 2, 8, {}, "oval meets 8 real lines"},
      {11, K::C15, 2, 0, {}, "null-homologous oval"},
      {12, K::C27, 1, {}, {}, ""},
      {13, K::C27, 2, 16, {}, "oval meets 16 real lines"},
      {14, K::C27, 2, 12, {}, "oval meets 12 real lines"},
      {15, K::C27, 2, 0, {}, "null-homologous oval"},
  };
  return rows;
}

}  // namespace

int class_id(ProjectiveKind kind, int curve_components, std::optional<int> oval_lines,
             std::optional<bool> in_sphere) {
  for (const Row& r : table()) {
    if (r.kind != kind || r.components != curve_components) continue;
    if (curve_components == 1) return r.id;
    if (kind == ProjectiveKind::C3b) {
      if (in_sphere && r.in_sphere == in_sphere) return r.id;
    } else if (oval_lines && r.oval_lines == oval_lines) {
      return r.id;
    }
  }
  throw Error(ErrorKind::InternalInconsistency,
              "invariants outside the table: " + to_string(kind) + ", " +
                  std::to_string(curve_components) + " components, oval lines " +
                  (oval_lines ? std::to_string(*oval_lines) : "n/a"));
}

std::string class_description(int id) {
  for (const Row& r : table()) {
    if (r.id != id) continue;
    std::string s = to_string(r.kind) + ": X_R = " + topology(r.kind) + ", A_R ";
    s += r.components == 1 ? "connected" : std::string("two components, ") + r.note;
    return s;
  }
  throw Error(ErrorKind::InvalidArgument, "class id outside 1..15");
}

ClassificationReport affine_class(const Poly& f, const Poly& plane,
                                  const ClassifyOptions& opts) {
  ClassificationReport r;
  r.surface = to_string(f);
  r.plane = to_string(plane);
  if (f.nvars() != 4 || !f.is_homogeneous() || f.degree() != 3)
    throw Error(ErrorKind::InvalidArgument, "surface must be a cubic form in x, y, z, w");

  const auto stage = [](const char* name, auto&& fn) {
    try {
      return fn();
    } catch (const Error& e) {
      throw Error(e.kind(), std::string(name) + ": " + e.detail());
    }
  };

  const lines::LineSet ls = stage("lines", [&] { return lines::solve_lines(f, opts.lines); });
  r.nonsingular = true;
  r.real_lines = ls.real_count;
  for (const auto& l : ls.lines) r.max_line_residual = std::max(r.max_line_residual, l.residual);

  const PlaneSection section = stage("section", [&] { return restrict_to_plane(f, plane); });
  if (section.restricted.is_zero() || section.restricted.degree() != 3)
    throw Error(ErrorKind::NotTransversal, "section: the plane is a component of the surface");
  const curve::PlaneCubicAnalysis a = stage("section", [&] {
    try {
      return curve::analyze_cubic(section.restricted, mix_seed(1, opts.seed));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SingularCurve)
        throw Error(ErrorKind::NotTransversal, "the section at infinity is singular");
      throw;
    }
  });
  r.transversal = true;
  r.curve_components = a.component_count;

  const ProjectiveClass pc = stage("projective", [&] { return projective_class(f, ls, opts.seed); });
  r.projective_class = to_string(pc.kind);
  r.euler_characteristic = pc.euler_characteristic;
  if (pc.disambiguation)
    r.warnings.push_back("three real lines: class decided by the tritangent count (" +
                         std::to_string(pc.disambiguation->real_tritangents) +
                         ") and a sampled hyperbolic-point probe");

  if (a.component_count == 2) {
    if (pc.kind == ProjectiveKind::C3b) {
      const auto& q = pc.disambiguation->hyperbolic_point;
      if (!q) throw Error(ErrorKind::InternalInconsistency, "no hyperbolic point for C3b");
      r.oval_in_sphere = stage("oval", [&] { return oval_in_sphere(f, section, a, *q); });
      if (!*r.oval_in_sphere)
        r.warnings.push_back(
            "b0 computed as 3 for an oval on the RP2 component; the tabulated value is 2");
    } else {
      r.oval_line_count = stage("oval", [&] { return oval_line_count(section, a, ls); });
      if (pc.kind == ProjectiveKind::C27 && r.oval_line_count == 16) r.q_oval = "0";
      if (pc.kind == ProjectiveKind::C27 && r.oval_line_count == 12) r.q_oval = "2";
    }
  }
  r.b0_complement = complement_components(pc.kind, r.curve_components, r.oval_line_count,
                                          r.oval_in_sphere);
  r.class_id = stage("decision", [&] {
    return class_id(pc.kind, r.curve_components, r.oval_line_count, r.oval_in_sphere);
  });
  r.description = class_description(r.class_id);
  return r;
}

nlohmann::json to_json(const ClassificationReport& r) {
  nlohmann::json j = {
      {"surface", r.surface},
      {"plane", r.plane},
      {"nonsingular", r.nonsingular},
      {"transversal", r.transversal},
      {"real_lines", r.real_lines},
      {"projective_class", r.projective_class},
      {"euler_characteristic", r.euler_characteristic},
      {"curve_components", r.curve_components},
      {"oval_line_count", nullptr},
      {"b0_complement", r.b0_complement},
      {"oval_in_sphere", nullptr},
      {"q_oval", nullptr},
      {"class_id", r.class_id},
      {"description", r.description},
      {"max_line_residual", r.max_line_residual},
      {"warnings", r.warnings},
  };
  if (r.oval_line_count) j["oval_line_count"] = *r.oval_line_count;
  if (r.oval_in_sphere) j["oval_in_sphere"] = *r.oval_in_sphere;
  if (r.q_oval) j["q_oval"] = *r.q_oval;
  return j;
}

ClassificationReport report_from_json(const nlohmann::json& j) {
  ClassificationReport r;
  try {
    r.surface = j.value("surface", "");
    r.plane = j.value("plane", "");
    r.nonsingular = j.at("nonsingular").get<bool>();
    r.transversal = j.at("transversal").get<bool>();
    r.real_lines = j.at("real_lines").get<int>();
    r.projective_class = j.at("projective_class").get<std::string>();
    r.euler_characteristic = j.value("euler_characteristic", 0);
    r.curve_components = j.at("curve_components").get<int>();
    if (!j.at("oval_line_count").is_null()) r.oval_line_count = j["oval_line_count"].get<int>();
    r.b0_complement = j.at("b0_complement").get<int>();
    if (!j.at("oval_in_sphere").is_null()) r.oval_in_sphere = j["oval_in_sphere"].get<bool>();
    if (j.contains("q_oval") && !j["q_oval"].is_null()) r.q_oval = j["q_oval"].get<std::string>();
    r.class_id = j.at("class_id").get<int>();
    r.description = j.value("description", "");
    r.max_line_residual = j.value("max_line_residual", 0.0);
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("report: ") + e.what());
  }
  return r;
}

}  // namespace affcubic::classify
