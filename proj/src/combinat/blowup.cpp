#include <algorithm>
#include <numeric>

#include "affcubic/combinat/combinat.hpp"

namespace affcubic::combinat {

bool BlowupLabel::valid() const {
  return mu >= 0 && mu <= 3 && a >= 0 && b >= 0 && a + b == 6 - 2 * mu;
}

std::string to_string(const BlowupLabel& l) {
  return "mu=" + std::to_string(l.mu) + " (" + std::to_string(l.a) + "," + std::to_string(l.b) +
         ")";
}

std::vector<BlowupLabel> all_labels() {
  std::vector<BlowupLabel> out;
  for (int mu = 0; mu <= 3; ++mu)
    for (int a = 0; a <= 6 - 2 * mu; ++a) out.push_back({mu, a, 6 - 2 * mu - a});
  return out;
}

std::vector<BlowupLabel> cremona_moves(const BlowupLabel& l) {
  std::vector<BlowupLabel> out;
  if (l.b >= 3) out.push_back({l.mu, l.b - 3, l.a + 3});
  if (l.a >= 2 && l.b >= 1) out.push_back({l.mu, l.b + 1, l.a - 1});
  if (l.b >= 1 && l.mu >= 1) out.push_back({l.mu, l.b - 1, l.a + 1});
  return out;
}

std::vector<std::vector<BlowupLabel>> cremona_orbits(int mu) {
  std::vector<BlowupLabel> labels;
  for (const auto& l : all_labels())
    if (l.mu == mu) labels.push_back(l);
  std::vector<int> parent(labels.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto index = [&](const BlowupLabel& l) {
    return static_cast<int>(std::find(labels.begin(), labels.end(), l) - labels.begin());
  };
  for (const auto& l : labels)
    for (const auto& m : cremona_moves(l)) parent[find(index(l))] = find(index(m));
  std::map<int, std::vector<BlowupLabel>> groups;
  for (std::size_t i = 0; i < labels.size(); ++i) groups[find(static_cast<int>(i))].push_back(labels[i]);
  std::vector<std::vector<BlowupLabel>> out;
  for (auto& [root, g] : groups) out.push_back(g);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const ModelLine& m) {
  switch (m.kind) {
    case LineKind::E: return "E" + std::to_string(m.i + 1);
    case LineKind::Q: return "Q" + std::to_string(m.i + 1);
    case LineKind::L: return "L" + std::to_string(m.i + 1) + std::to_string(m.j + 1);
  }
  return "";
}

std::vector<ModelLine> incidence_model(const BlowupLabel& l) {
  // points 0..a-1 on the one-sided component, a..a+b-1 on the oval, then
  // conjugate pairs (r + 2t, r + 2t + 1)
  const int r = l.a + l.b;
  auto real = [&](int i) { return i < r; };
  auto on_oval = [&](int i) { return i >= l.a && i < r; };
  auto one_sided = [&](int i) { return i < l.a; };
  auto conjugate = [&](int i, int j) { return i >= r && j == i + 1 && (i - r) % 2 == 0; };
  std::vector<ModelLine> out;
  for (int i = 0; i < 6; ++i) out.push_back({LineKind::E, i, -1, real(i), on_oval(i)});
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      const bool re = (real(i) && real(j)) || conjugate(i, j);
      const bool meets = (on_oval(i) && one_sided(j)) || (on_oval(j) && one_sided(i));
      out.push_back({LineKind::L, i, j, re, meets});
    }
  for (int i = 0; i < 6; ++i) {
    const bool meets = l.b % 2 == 0 ? on_oval(i) : one_sided(i);
    out.push_back({LineKind::Q, i, -1, real(i), meets});
  }
  return out;
}

int total_real_lines(int mu) {
  const int r = 6 - 2 * mu;
  return 2 * r + r * (r - 1) / 2 + mu;
}

int oval_image_count(const BlowupLabel& l) {
  return l.b % 2 == 0 ? 2 * l.b + l.a * l.b : 6 - 2 * l.mu + l.a * l.b;
}

int oval_count(const BlowupLabel& l) {
  // the image of the two-sided component is the oval iff b is even
  const int c = oval_image_count(l);
  return l.b % 2 == 0 ? c : total_real_lines(l.mu) - c;
}

}  // namespace affcubic::combinat
