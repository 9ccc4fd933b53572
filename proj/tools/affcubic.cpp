#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "affcubic/classify/classify.hpp"
#include "affcubic/combinat/combinat.hpp"
#include "affcubic/error.hpp"

using namespace affcubic;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInternal = 1, kRejected = 2, kUsage = 64 };

struct Config {
  std::uint64_t seed = 0;
  double tol = 1e-10;
  double separation = 1e-6;
  std::string format = "json";
};

// Projective cubic in x,y,z,w, or affine cubic in x,y,z homogenized with w.
Poly read_surface(const std::string& text) {
  const Poly p = parse_poly(text);
  if (p.is_homogeneous()) return p;
  return homogenize(parse_poly(text, {"x", "y", "z"}));
}

classify::ClassifyOptions classify_options(const Config& c) {
  classify::ClassifyOptions o;
  o.seed = c.seed;
  o.lines.seed = classify::mix_seed(o.lines.seed, c.seed);
  o.lines.residual_tol = c.tol;
  o.lines.separation = c.separation;
  return o;
}

json error_json(const Error& e) {
  return {{"kind", std::string(to_string(e.kind()))}, {"message", e.detail()}};
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

std::string report_text(const classify::ClassificationReport& r) {
  std::ostringstream s;
  s << "class " << r.class_id << ": " << r.description << "\n"
    << "real lines " << r.real_lines << ", euler characteristic " << r.euler_characteristic
    << ", curve components " << r.curve_components << ", b0 " << r.b0_complement << "\n";
  if (r.oval_line_count) s << "oval meets " << *r.oval_line_count << " real lines\n";
  if (r.oval_in_sphere) s << "oval on the sphere: " << (*r.oval_in_sphere ? "yes" : "no") << "\n";
  for (const auto& w : r.warnings) s << "warning: " << w << "\n";
  return s.str();
}

void emit(const json& j, const Config& c) {
  if (c.format == "text" && j.is_object() && j.contains("class_id")) {
    std::cout << report_text(classify::report_from_json(j));
    return;
  }
  std::cout << j.dump(2) << "\n";
}

int run_classify(const std::string& surface, const std::string& plane, const Config& c) {
  const auto r = classify::affine_class(read_surface(surface), parse_poly(plane),
                                        classify_options(c));
  emit(classify::to_json(r), c);
  return kOk;
}

int run_batch(const std::string& file, const Config& c) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorKind::ConfigMissing, "cannot open " + file);
  std::vector<std::string> inputs;
  for (std::string line; std::getline(in, line);)
    if (line.find_first_not_of(" \t") != std::string::npos && line[0] != '#') inputs.push_back(line);
  std::vector<json> out(inputs.size());
  std::vector<int> codes(inputs.size(), kOk);
  classify::ClassifyOptions opts = classify_options(c);
  opts.lines.parallel = false;  // parallelism is across inputs
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const std::string& line = inputs[i];
    const auto sep = line.find(';');
    const std::string surface = line.substr(0, sep);
    const std::string plane = sep == std::string::npos ? "w" : line.substr(sep + 1);
    json j = {{"surface", surface}, {"plane", plane}};
    try {
      j["report"] = classify::to_json(classify::affine_class(read_surface(surface),
                                                             parse_poly(plane), opts));
    } catch (const Error& e) {
      j["error"] = error_json(e);
      codes[i] = is_rejection(e.kind()) ? kRejected : kInternal;
    } catch (const std::exception& e) {
      j["error"] = {{"kind", "Internal"}, {"message", e.what()}};
      codes[i] = kInternal;
    }
    out[i] = j;
  }
  std::cout << json(out).dump(2) << "\n";
  int code = kOk;
  for (int k : codes)
    if (k == kInternal || (k == kRejected && code == kOk)) code = k;
  return code;
}

int run_lines(const std::string& surface, const Config& c) {
  const Poly f = read_surface(surface);
  const auto opts = classify_options(c).lines;
  const lines::LineSet ls = lines::solve_lines(f, opts);
  json j = {{"surface", to_string(f)}, {"real_count", ls.real_count}, {"lines", json::array()}};
  for (std::size_t i = 0; i < ls.lines.size(); ++i) {
    json p = json::array();
    for (auto z : ls.lines[i].p) p.push_back(complex_json(z));
    j["lines"].push_back({{"plucker", p},
                          {"real", ls.lines[i].is_real},
                          {"conjugate", ls.conj_pairing[i]},
                          {"residual", ls.lines[i].residual}});
  }
  int real_tritangents = 0;
  const auto triples = lines::tritangent_triples(ls);
  for (const auto& t : triples) real_tritangents += t.real;
  j["tritangent_planes"] = triples.size();
  j["real_tritangent_planes"] = real_tritangents;
  emit(j, c);
  return kOk;
}

int run_curve(const std::string& cubic, const std::string& surface, const std::string& plane,
              const Config& c) {
  Poly f;
  if (!cubic.empty()) {
    f = parse_poly(cubic, {"x", "y", "z"});
  } else {
    if (surface.empty()) throw Error(ErrorKind::InvalidArgument, "need --cubic or --surface");
    f = classify::restrict_to_plane(read_surface(surface), parse_poly(plane)).restricted;
  }
  const auto a = curve::analyze_cubic(f, classify::mix_seed(1, c.seed));
  json j = {{"cubic", to_string(f, {"x", "y", "z"})},
            {"components", a.component_count},
            {"chart_cubic", to_string(a.chart_cubic, {"x", "y", "z"})},
            {"critical_values", a.critical_approx},
            {"cells", json::array()}};
  for (const auto& cell : a.sweep)
    j["cells"].push_back({{"sample", cell.sample.get_d()}, {"branches", cell.branch_component}});
  emit(j, c);
  return kOk;
}

int run_wall_label(const std::string& conic, const std::string& cubic, const Config& c) {
  const auto w = classify::wall_label(parse_poly(conic, {"x", "y", "z"}),
                                      parse_poly(cubic, {"x", "y", "z"}));
  json j = {{"label", w.label.text()},
            {"connected", w.label.connected},
            {"a", w.label.a},
            {"b", w.label.connected ? json(nullptr) : json(w.label.b)},
            {"surface", to_string(w.surface)}};
  emit(j, c);
  return kOk;
}

json label_json(const combinat::BlowupLabel& l) {
  return {{"mu", l.mu}, {"a", l.a}, {"b", l.b}};
}

int run_orbits(int mu, const Config& c) {
  json j = json::array();
  for (int m = 0; m <= 3; ++m) {
    if (mu >= 0 && m != mu) continue;
    json orbits = json::array();
    for (const auto& orbit : combinat::cremona_orbits(m)) {
      json o = json::array();
      for (const auto& l : orbit) o.push_back(json::array({l.a, l.b}));
      orbits.push_back({{"labels", o}, {"oval_count", combinat::oval_count(orbit.front())}});
    }
    j.push_back({{"mu", m}, {"orbits", orbits}});
  }
  emit(j, c);
  return kOk;
}

int run_counts(const Config& c) {
  json j = json::array();
  for (const auto& l : combinat::all_labels()) {
    int oracle = 0;
    for (const auto& m : combinat::incidence_model(l)) oracle += m.is_real && m.meets_oval_image;
    json row = label_json(l);
    row["total_real"] = combinat::total_real_lines(l.mu);
    row["oval_image_lines"] = combinat::oval_image_count(l);
    row["oval_image_lines_model"] = oracle;
    row["oval_lines"] = combinat::oval_count(l);
    j.push_back(row);
  }
  emit(j, c);
  return kOk;
}

int run_walls(const Config& c) {
  json rows = json::array();
  for (const auto& w : combinat::wall_table())
    rows.push_back({{"label", w.label.text()},
                    {"ordinary_walls", w.ordinary_walls},
                    {"extended_walls", w.extended_walls}});
  emit({{"walls", rows}, {"total_ordinary_walls", combinat::total_ordinary_walls()}}, c);
  return kOk;
}

int run_graph(const std::string& file, const Config& c) {
  const auto g = file.empty() ? combinat::wall_graph() : combinat::wall_graph(file);
  const auto bad = combinat::validate(g);
  for (const auto& v : bad) std::cerr << "violation: " << v << "\n";
  if (c.format == "dot") {
    std::cout << combinat::to_dot(g);
  } else {
    json j = combinat::to_json(g);
    j["violations"] = bad;
    emit(j, c);
  }
  return bad.empty() ? kOk : kInternal;
}

int run_polotovsky(const std::string& file, const Config& c) {
  const auto ex = file.empty() ? combinat::load_arrangements() : combinat::load_arrangements(file);
  const auto closure = combinat::polotovsky_closure(ex);
  json list = json::array();
  for (const auto& [key, a] : closure) {
    json x = combinat::to_json(a);
    x["summary"] = combinat::summary(a);
    x["canonical"] = key;
    list.push_back(x);
  }
  emit({{"extremal", ex.size()}, {"count", closure.size()}, {"arrangements", list}}, c);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformation classes of real affine cubic surfaces"};
  app.require_subcommand(1);
  Config cfg;
  std::string surface, plane = "w", batch, cubic, conic, file;
  int mu = -1;
  auto common = [&](CLI::App* s) {
    s->add_option("--seed", cfg.seed, "random seed (0: built-in seeds)");
    s->add_option("--tol", cfg.tol, "line residual tolerance")->check(CLI::PositiveNumber);
    s->add_option("--separation", cfg.separation, "root separation for line deduplication")
        ->check(CLI::PositiveNumber);
    s->add_option("--format", cfg.format, "json, text or dot")
        ->check(CLI::IsMember({"json", "text", "dot"}));
  };
  auto* classify = app.add_subcommand("classify", "classify a surface with a plane at infinity");
  classify->add_option("--surface", surface, "cubic form in x,y,z,w or affine cubic in x,y,z");
  classify->add_option("--plane", plane, "linear form defining the plane at infinity");
  classify->add_option("--batch", batch, "file with one 'surface ; plane' per line");
  auto* lines_cmd = app.add_subcommand("lines", "the 27 lines of a surface");
  lines_cmd->add_option("--surface", surface)->required();
  auto* curve = app.add_subcommand("curve", "topology of a plane cubic");
  curve->add_option("--cubic", cubic, "ternary cubic in x,y,z");
  curve->add_option("--surface", surface);
  curve->add_option("--plane", plane);
  auto* graph = app.add_subcommand("graph", "wall-crossing graph");
  graph->add_option("--file", file, "graph data file");
  auto* orbits = app.add_subcommand("orbits", "Cremona orbits of blow-up labels");
  orbits->add_option("--mu", mu, "number of conjugate pairs")->check(CLI::Range(0, 3));
  auto* counts = app.add_subcommand("counts", "line counts of the blow-up model");
  auto* walls = app.add_subcommand("walls", "ordinary walls per extended wall");
  auto* polotovsky = app.add_subcommand("polotovsky", "conic/cubic arrangement closure");
  polotovsky->add_option("--file", file, "extremal arrangements file");
  auto* wall_label = app.add_subcommand("wall-label", "label of the wall of f2 + f3");
  wall_label->add_option("--conic", conic, "ternary quadratic form f2")->required();
  wall_label->add_option("--cubic", cubic, "ternary cubic form f3")->required();
  for (auto* s : {classify, lines_cmd, curve, graph, orbits, counts, walls, polotovsky, wall_label})
    common(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (cfg.format == "dot" && !graph->parsed()) {
    std::cerr << "--format dot is only available for graph\n";
    return kUsage;
  }
  try {
    if (classify->parsed()) {
      if (!batch.empty()) return run_batch(batch, cfg);
      if (surface.empty()) {
        std::cerr << "classify needs --surface or --batch\n";
        return kUsage;
      }
      return run_classify(surface, plane, cfg);
    }
    if (lines_cmd->parsed()) return run_lines(surface, cfg);
    if (curve->parsed()) return run_curve(cubic, surface, plane, cfg);
    if (graph->parsed()) return run_graph(file, cfg);
    if (orbits->parsed()) return run_orbits(mu, cfg);
    if (counts->parsed()) return run_counts(cfg);
    if (walls->parsed()) return run_walls(cfg);
    if (polotovsky->parsed()) return run_polotovsky(file, cfg);
    if (wall_label->parsed()) return run_wall_label(conic, cubic, cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::InvalidArgument) return kUsage;
    return is_rejection(e.kind()) ? kRejected : kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
