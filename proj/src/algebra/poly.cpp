#include "affcubic/algebra/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "affcubic/error.hpp"

namespace affcubic {

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  Exponent e(nvars, 0);
  e.at(index) = 1;
  return monomial(e, Rational(1));
}

Poly Poly::monomial(const Exponent& e, const Rational& c) {
  Poly p(e.size());
  p.add_term(e, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(),
                                            terms_.begin()->first.end(),
                                            [](int k) { return k == 0; }));
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

int Poly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

bool Poly::is_homogeneous() const {
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) {
    return std::accumulate(t.first.begin(), t.first.end(), 0) == d;
  });
}

Rational Poly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_)
    throw Error(ErrorKind::InvalidArgument, "exponent arity mismatch");
  if (c == 0) return;
  Rational v = c;
  v.canonicalize();
  auto [it, inserted] = terms_.try_emplace(e, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::coeff_in(std::size_t var, int k) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    Exponent f = e;
    f[var] = 0;
    out.add_term(f, c);
  }
  return out;
}

Poly Poly::derivative(std::size_t var) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    out.add_term(f, c * e[var]);
  }
  return out;
}

Poly Poly::pow(unsigned n) const {
  Poly result = constant(nvars_, Rational(1));
  Poly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Poly Poly::compose(std::span<const Poly> values) const {
  if (values.size() != nvars_)
    throw Error(ErrorKind::InvalidArgument, "compose: arity mismatch");
  const std::size_t m = values.empty() ? 0 : values[0].nvars();
  // Cache powers of each substituted value.
  std::vector<std::vector<Poly>> powers(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    powers[i].push_back(constant(m, Rational(1)));
    const int d = degree_in(i);
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * values[i]);
  }
  Poly out(m);
  for (const auto& [e, c] : terms_) {
    Poly term = constant(m, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] > 0) term = term * powers[i][e[i]];
    out += term;
  }
  return out;
}

Poly Poly::substitute(std::size_t var, const Poly& value) const {
  std::vector<Poly> values;
  for (std::size_t i = 0; i < nvars_; ++i)
    values.push_back(i == var ? value : variable(nvars_, i));
  return compose(values);
}

std::optional<Poly> Poly::exact_div(const Poly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  Poly rem = *this;
  Poly quot(nvars_);
  const Exponent& ld = divisor.leading_exponent();
  const Rational& lc = divisor.leading_coefficient();
  while (!rem.is_zero()) {
    Exponent e = rem.leading_exponent();
    for (std::size_t i = 0; i < nvars_; ++i) {
      e[i] -= ld[i];
      if (e[i] < 0) return std::nullopt;
    }
    Poly t = monomial(e, rem.leading_coefficient() / lc);
    quot += t;
    rem -= t * divisor;
  }
  return quot;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.nvars_ != nvars_) throw Error(ErrorKind::InvalidArgument, "arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.nvars_ != nvars_) throw Error(ErrorKind::InvalidArgument, "arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorKind::InvalidArgument, "arity mismatch");
  Poly out(a.nvars_);
  Poly::Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly homogenize(const Poly& p) {
  const int d = std::max(p.degree(), 0);
  Poly out(p.nvars() + 1);
  for (const auto& [e, c] : p.terms()) {
    Poly::Exponent f = e;
    f.push_back(d - std::accumulate(e.begin(), e.end(), 0));
    out.add_term(f, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text syntax.

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& names)
      : text_(text), names_(names) {}

  Poly parse() {
    Poly p = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse,
                why + " at position " + std::to_string(pos_) + " in \"" +
                    std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Poly parse_sum() {
    Poly acc(names_.size());
    bool first = true;
    for (;;) {
      char c = peek();
      bool negate = false;
      if (c == '+' || c == '-') {
        negate = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Poly t = parse_product();
      acc += negate ? -t : t;
      first = false;
    }
    return acc;
  }

  bool starts_factor(char c) const {
    return c == '(' || c == '.' || std::isdigit(static_cast<unsigned char>(c)) ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  Poly parse_product() {
    Poly acc = parse_power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * parse_power();
      } else if (c == '/') {
        ++pos_;
        Poly d = parse_power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= Rational(1) / d.coefficient(Poly::Exponent(names_.size(), 0));
      } else if (starts_factor(c)) {
        acc = acc * parse_power();  // implicit multiplication
      } else {
        return acc;
      }
    }
  }

  Poly parse_power() {
    Poly base = parse_atom();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (start == pos_) fail("expected exponent");
      const unsigned long n = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (n > 64) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(n));
    }
    return base;
  }

  Poly parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = parse_sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -parse_power();
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
        ++pos_;
      return Poly::constant(names_.size(),
                            parse_rational(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      std::string_view ident = text_.substr(start, pos_ - start);
      // Identifiers like "xy" are read as products of single-letter variables.
      Poly acc = Poly::constant(names_.size(), Rational(1));
      std::size_t i = 0;
      while (i < ident.size()) {
        bool matched = false;
        for (std::size_t v = 0; v < names_.size(); ++v) {
          const std::string& n = names_[v];
          if (ident.substr(i, n.size()) == n) {
            acc = acc * Poly::variable(names_.size(), v);
            i += n.size();
            matched = true;
            break;
          }
        }
        if (!matched) {
          pos_ = start + i;
          fail("unknown variable");
        }
      }
      return acc;
    }
    fail("unexpected token");
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const std::vector<std::string>& names) {
  return Parser(text, names).parse();
}

std::string to_string(const Poly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  if (names.size() < p.nvars())
    throw Error(ErrorKind::InvalidArgument, "not enough variable names");
  std::vector<std::pair<Poly::Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace affcubic
