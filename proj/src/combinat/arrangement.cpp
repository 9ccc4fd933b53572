#include <algorithm>
#include <deque>
#include <fstream>

#include "affcubic/combinat/combinat.hpp"
#include "affcubic/error.hpp"

namespace affcubic::combinat {

namespace {

using Chord = std::pair<int, int>;

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorKind::InvalidArrangement, what);
}

Chord sorted(Chord c) {
  if (c.first > c.second) std::swap(c.first, c.second);
  return c;
}

// Chords (a,b) and (c,d) between points of an n-cycle cross.
bool cross(Chord x, Chord y) {
  auto [a, b] = sorted(x);
  auto [c, d] = sorted(y);
  if (a == c || a == d || b == c || b == d) return false;
  return (a < c && c < b) != (a < d && d < b);
}

const std::vector<int>& order_of(const Arrangement& a, char c) {
  return c == 'J' ? a.j_order : a.o_order;
}

bool adjacent_in(const std::vector<int>& order, int p, int q) {
  const int m = static_cast<int>(order.size());
  for (int i = 0; i < m; ++i) {
    const int u = order[i], v = order[(i + 1) % m];
    if ((u == p && v == q) || (u == q && v == p)) return true;
  }
  return false;
}

bool has(const std::vector<Chord>& v, Chord c) {
  return std::find(v.begin(), v.end(), sorted(c)) != v.end();
}

std::vector<Chord> outside_arcs(const Arrangement& a, char c) {
  const auto& order = order_of(a, c);
  const int m = static_cast<int>(order.size());
  std::vector<Chord> out;
  if (m == 2) return {sorted({order[0], order[1]})};
  for (int i = 0; i < m; ++i) {
    const Chord e = sorted({order[i], order[(i + 1) % m]});
    if (!has(a.inside, e)) out.push_back(e);
  }
  return out;
}

int partner(const Arrangement& a, int p) {
  for (auto [u, v] : a.inside) {
    if (u == p) return v;
    if (v == p) return u;
  }
  return -1;
}

// Gaps (arc of B from g to g+1) of the region of the disk of B containing g.
std::vector<int> region(const Arrangement& a, int g) {
  const int n = static_cast<int>(a.word.size());
  std::vector<int> out;
  int cur = g;
  do {
    out.push_back(cur);
    cur = partner(a, (cur + 1) % n);
  } while (cur != g && static_cast<int>(out.size()) <= n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> canonical_cycle(std::vector<int> v) {
  if (v.empty()) return v;
  std::vector<int> best = v;
  for (int flip = 0; flip < 2; ++flip) {
    for (std::size_t r = 0; r < v.size(); ++r) {
      std::rotate(v.begin(), v.begin() + 1, v.end());
      best = std::min(best, v);
    }
    std::reverse(v.begin(), v.end());
  }
  return best;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += std::to_string(x) + ".";
  return s;
}

std::string join(const std::vector<Chord>& v) {
  std::string s;
  for (auto [x, y] : v) s += std::to_string(x) + "-" + std::to_string(y) + ".";
  return s;
}

int free_gap(const std::string& nesting) { return std::stoi(nesting.substr(3)); }

}  // namespace

int Arrangement::count(char c) const {
  return static_cast<int>(std::count(word.begin(), word.end(), c));
}

void check(const Arrangement& a) {
  const int n = static_cast<int>(a.word.size());
  if (n > 6 || n % 2) invalid("more than 6 or an odd number of intersection points");
  for (char c : a.word)
    if (c != 'J' && c != 'O') invalid("intersection labels must be J or O");
  if (!a.conic && n) invalid("points on an empty conic");
  if (!a.oval && a.count('O')) invalid("points on a missing oval");
  for (char c : {'J', 'O'}) {
    if (a.count(c) % 2) invalid(std::string("odd number of points on ") + c);
    std::vector<int> want, got = order_of(a, c);
    for (int p = 0; p < n; ++p)
      if (a.word[p] == c) want.push_back(p);
    std::sort(got.begin(), got.end());
    if (got != want) invalid(std::string("order along ") + c + " does not match the conic word");
  }
  std::vector<int> seen(n, 0);
  for (auto [u, v] : a.inside) {
    if (u < 0 || v < 0 || u >= n || v >= n || a.word[u] != a.word[v] ||
        !adjacent_in(order_of(a, a.word[u]), u, v))
      invalid("inside chord joins points not consecutive on one component");
    ++seen[u], ++seen[v];
  }
  for (int p = 0; p < n; ++p)
    if (seen[p] != 1) invalid("every point ends exactly one inside chord");
  for (std::size_t i = 0; i < a.inside.size(); ++i)
    for (std::size_t j = i + 1; j < a.inside.size(); ++j)
      if (cross(a.inside[i], a.inside[j])) invalid("inside chords cross");
  const auto j_out = outside_arcs(a, 'J');
  for (auto e : a.essential)
    if (!has(j_out, e)) invalid("essential arc is not an outside arc of J");
  if (a.count('J') && a.essential.size() % 2 == 0)
    invalid("J must cross the crosscap an odd number of times");
  std::vector<Chord> trivial = outside_arcs(a, 'O');
  for (auto e : j_out)
    if (!has(a.essential, e)) trivial.push_back(e);
  for (std::size_t i = 0; i < a.essential.size(); ++i)
    for (std::size_t j = i + 1; j < a.essential.size(); ++j)
      if (!cross(a.essential[i], a.essential[j])) invalid("disjoint essential arcs must interleave");
  for (auto t : trivial) {
    for (auto e : a.essential)
      if (cross(t, e)) invalid("trivial outside arc crosses an essential one");
    for (auto u : trivial)
      if (cross(t, u)) invalid("outside arcs cross");
  }
  const bool o_free = a.oval && a.count('O') == 0 && a.conic;
  if (!o_free) {
    if (!a.nesting.empty()) invalid("nesting given without a free oval");
  } else if (n == 0) {
    if (a.nesting != "apart" && a.nesting != "O_in_B" && a.nesting != "B_in_O")
      invalid("free ovals need nesting apart, O_in_B or B_in_O");
  } else if (a.nesting != "out") {
    if (a.nesting.rfind("in:", 0) != 0) invalid("free oval needs nesting out or in:<gap>");
    const int g = free_gap(a.nesting);
    if (g < 0 || g >= n) invalid("nesting gap out of range");
  }
}

std::string canonical_form(const Arrangement& a) {
  const int n = static_cast<int>(a.word.size());
  std::string head = std::string(a.oval ? "O" : "-") + (a.conic ? "B" : "-") + "|";
  if (n == 0) return head + a.nesting;
  std::string best;
  for (int flip = 0; flip < 2; ++flip)
    for (int r = 0; r < n; ++r) {
      auto s = [&](int p) { return flip ? ((r - p) % n + n) % n : (p + r) % n; };
      auto sg = [&](int g) { return flip ? ((r - g - 1) % n + n) % n : (g + r) % n; };
      std::string word(n, ' ');
      for (int p = 0; p < n; ++p) word[s(p)] = a.word[p];
      auto map_order = [&](const std::vector<int>& o) {
        std::vector<int> m;
        for (int p : o) m.push_back(s(p));
        return canonical_cycle(m);
      };
      auto map_chords = [&](const std::vector<Chord>& cs) {
        std::vector<Chord> m;
        for (auto [u, v] : cs) m.push_back(sorted({s(u), s(v)}));
        std::sort(m.begin(), m.end());
        return m;
      };
      std::string nest = a.nesting;
      if (nest.rfind("in:", 0) == 0) {
        std::vector<int> gs;
        for (int g : region(a, free_gap(nest))) gs.push_back(sg(g));
        std::sort(gs.begin(), gs.end());
        nest = "in:" + join(gs);
      }
      std::string key = head + word + "|J:" + join(map_order(a.j_order)) +
                        "|O:" + join(map_order(a.o_order)) + "|I:" + join(map_chords(a.inside)) +
                        "|E:" + join(map_chords(a.essential)) + "|N:" + nest;
      if (best.empty() || key < best) best = key;
    }
  return best;
}

std::string summary(const Arrangement& a) {
  std::string s = a.oval ? "(" + std::to_string(a.count('J')) + "," +
                               std::to_string(a.count('O')) + ")"
                         : std::to_string(a.count('J'));
  if (!a.conic) return s + " empty conic";
  if (!a.word.empty()) s += " " + a.word;
  if (!a.nesting.empty()) s += " " + a.nesting;
  return s;
}

std::vector<Arrangement> move_erase(const Arrangement& a) {
  std::vector<Arrangement> out;
  if (a.oval && a.count('O') == 0) {
    Arrangement b = a;
    b.oval = false;
    b.nesting.clear();
    out.push_back(b);
  }
  if (a.conic && a.word.empty()) {
    Arrangement b = a;
    b.conic = false;
    b.nesting.clear();
    out.push_back(b);
  }
  return out;
}

namespace {

// Removes points p and q = p+1 after the arcs between them were collapsed;
// `chords` and `essential` are given in old numbering.
Arrangement remove_pair(const Arrangement& a, int p, int q, std::vector<Chord> chords,
                        std::vector<Chord> essential, std::optional<int> gap) {
  const int n = static_cast<int>(a.word.size());
  auto idx = [&](int t) { return t - (t > p) - (t > q); };
  Arrangement b = a;
  b.word.clear();
  for (int t = 0; t < n; ++t)
    if (t != p && t != q) b.word += a.word[t];
  for (auto* order : {&b.j_order, &b.o_order}) {
    std::vector<int> m;
    for (int t : *order)
      if (t != p && t != q) m.push_back(idx(t));
    *order = m;
  }
  b.inside.clear();
  for (auto [u, v] : chords) b.inside.push_back(sorted({idx(u), idx(v)}));
  std::sort(b.inside.begin(), b.inside.end());
  b.essential.clear();
  for (auto [u, v] : essential) b.essential.push_back(sorted({idx(u), idx(v)}));
  std::sort(b.essential.begin(), b.essential.end());
  const int m = n - 2;
  if (gap && m > 0) {
    const int before = (p + n - 1) % n;
    const int g = (*gap == before || *gap == p || *gap == q) ? idx(before) : idx(*gap);
    b.nesting = "in:" + std::to_string(g);
  }
  return b;
}

// Nesting of a free oval once B stops meeting J.
void settle(Arrangement& b) {
  if (!(b.oval && b.conic && b.count('O') == 0)) {
    if (b.count('O')) b.nesting.clear();
    return;
  }
  if (b.word.empty()) {
    if (b.nesting == "out") b.nesting = "apart";
    else if (b.nesting.rfind("in:", 0) == 0) b.nesting = "O_in_B";
  }
}

}  // namespace

std::vector<Arrangement> move_shift(const Arrangement& a) {
  std::vector<Arrangement> out;
  const int n = static_cast<int>(a.word.size());
  const bool o_in = a.nesting.rfind("in:", 0) == 0;
  for (int p = 0; p < n && n >= 2; ++p) {
    const int q = (p + 1) % n;
    if (n == 2 && p == 1) break;
    const char c = a.word[p];
    if (a.word[q] != c || !adjacent_in(order_of(a, c), p, q)) continue;
    const bool only_pair = a.count(c) == 2;
    const int lo = p;  // the B-arc from p to q carries no other point
    std::optional<int> gap;
    if (o_in) gap = free_gap(a.nesting);

    // the arc of c inside the disk of B
    if (has(a.inside, {p, q})) {
      if (!(gap && region(a, *gap) == std::vector<int>{lo})) {
        std::vector<Chord> chords, ess;
        for (auto ch : a.inside)
          if (sorted(ch) != sorted({p, q})) chords.push_back(ch);
        if (c == 'J') {
          // the outside arcs at p and q merge; parity of crosscap crossings adds
          const auto& order = a.j_order;
          const int m = static_cast<int>(order.size());
          int x = -1, y = -1;
          for (int i = 0; i < m; ++i) {
            if (order[i] == p && order[(i + m - 1) % m] != q) x = order[(i + m - 1) % m];
            if (order[i] == p && order[(i + 1) % m] != q) x = order[(i + 1) % m];
            if (order[i] == q && order[(i + m - 1) % m] != p) y = order[(i + m - 1) % m];
            if (order[i] == q && order[(i + 1) % m] != p) y = order[(i + 1) % m];
          }
          int parity = 0;
          for (auto e : a.essential) {
            const bool touches = e.first == p || e.first == q || e.second == p || e.second == q;
            if (touches) ++parity;
            else ess.push_back(e);
          }
          if (x >= 0 && parity % 2) ess.push_back(sorted({x, y}));
        } else {
          ess = a.essential;
        }
        Arrangement b = remove_pair(a, p, q, chords, ess, gap);
        if (c == 'O' && only_pair) b.nesting = b.word.empty() ? "apart" : "out";
        settle(b);
        out.push_back(b);
      }
    }
    // an outside arc of c, when it cuts off a disk
    const bool outside = only_pair || !has(a.inside, {p, q});
    if (outside && !has(a.essential, {p, q}) && !(c == 'J' && only_pair)) {
      if (only_pair) {
        // c = O: the oval is pushed into the disk of B, or B into the oval
        std::vector<Chord> chords;
        for (auto ch : a.inside)
          if (sorted(ch) != sorted({p, q})) chords.push_back(ch);
        Arrangement b = remove_pair(a, p, q, chords, a.essential, lo);
        if (b.word.empty()) b.nesting = "O_in_B";
        out.push_back(b);
        if (b.word.empty()) {
          b.nesting = "B_in_O";
          out.push_back(b);
        }
      } else {
        if (gap && *gap == lo) {
          for (int g : region(a, *gap))
            if (g != lo) gap = g;
        }
        const int x = partner(a, p), y = partner(a, q);
        std::vector<Chord> chords;
        for (auto ch : a.inside)
          if (sorted(ch) != sorted({x, p}) && sorted(ch) != sorted({q, y})) chords.push_back(ch);
        chords.push_back(sorted({x, y}));
        Arrangement b = remove_pair(a, p, q, chords, a.essential, gap);
        settle(b);
        out.push_back(b);
      }
    }
  }
  for (auto& b : out) check(b);
  return out;
}

Arrangement arrangement_from_json(const nlohmann::json& j) {
  Arrangement a;
  try {
    const auto& comp = j.at("components");
    a.oval = comp.at("oval").get<bool>();
    a.conic = comp.at("conic").get<bool>();
    const auto& w = j.at("cyclic_words");
    a.word = w.at("conic").get<std::string>();
    a.j_order = w.value("J", std::vector<int>{});
    a.o_order = w.value("O", std::vector<int>{});
    for (const auto& c : j.value("inside", nlohmann::json::array()))
      a.inside.push_back(sorted({c.at(0).get<int>(), c.at(1).get<int>()}));
    for (const auto& c : j.value("essential", nlohmann::json::array()))
      a.essential.push_back(sorted({c.at(0).get<int>(), c.at(1).get<int>()}));
    a.nesting = j.value("nesting", "");
  } catch (const nlohmann::json::exception& e) {
    invalid(std::string("arrangement: ") + e.what());
  }
  std::sort(a.inside.begin(), a.inside.end());
  std::sort(a.essential.begin(), a.essential.end());
  check(a);
  return a;
}

nlohmann::json to_json(const Arrangement& a) {
  auto chords = [](const std::vector<Chord>& cs) {
    nlohmann::json j = nlohmann::json::array();
    for (auto [u, v] : cs) j.push_back({u, v});
    return j;
  };
  return {{"components", {{"oval", a.oval}, {"conic", a.conic}}},
          {"cyclic_words", {{"conic", a.word}, {"J", a.j_order}, {"O", a.o_order}}},
          {"inside", chords(a.inside)},
          {"essential", chords(a.essential)},
          {"nesting", a.nesting}};
}

std::vector<Arrangement> load_arrangements(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorKind::ConfigMissing, "cannot open " + file.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    invalid(file.string() + ": " + e.what());
  }
  std::vector<Arrangement> out;
  for (const auto& x : j.at("arrangements")) out.push_back(arrangement_from_json(x));
  return out;
}

std::map<std::string, Arrangement> polotovsky_closure(const std::vector<Arrangement>& extremal) {
  std::map<std::string, Arrangement> seen;
  std::deque<Arrangement> queue;
  for (const auto& a : extremal) {
    check(a);
    if (seen.emplace(canonical_form(a), a).second) queue.push_back(a);
  }
  while (!queue.empty()) {
    const Arrangement a = queue.front();
    queue.pop_front();
    auto next = move_erase(a);
    for (auto& b : move_shift(a)) next.push_back(std::move(b));
    for (auto& b : next)
      if (seen.emplace(canonical_form(b), b).second) queue.push_back(b);
  }
  return seen;
}

}  // namespace affcubic::combinat
