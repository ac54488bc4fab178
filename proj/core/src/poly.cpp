#include "homflytop/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace homflytop {

namespace {

// Constants adopt the variable of the other operand; any other mismatch is an
// error.
std::string merged_var(const Laurent1& a, const Laurent1& b) {
  if (a.var() == b.var()) return a.var();
  if (b.is_constant()) return a.var();
  if (a.is_constant()) return b.var();
  throw std::invalid_argument("Laurent1: variable mismatch '" + a.var() + "' vs '" + b.var() + "'");
}

void check_vars(const Laurent2& a, const Laurent2& b) {
  if (a.var1() == b.var1() && a.var2() == b.var2()) return;
  if (a.is_constant() || b.is_constant()) return;
  throw std::invalid_argument("Laurent2: variable mismatch");
}

void append_factor(std::ostringstream& os, const std::string& var, int exponent) {
  if (exponent != 0) os << '*' << var << '^' << exponent;
}

// Minimal recursive-descent reader shared by both polynomial parsers.
class TermReader {
 public:
  explicit TermReader(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
  }

  bool done() const { return pos_ >= text_.size(); }

  // Returns the coefficient and (variable, exponent) factors of the next term.
  std::pair<Integer, std::vector<std::pair<std::string, int>>> next_term() {
    int sign = 1;
    bool saw_sign = false;
    while (!done() && (peek() == '+' || peek() == '-')) {
      if (peek() == '-') sign = -sign;
      saw_sign = true;
      ++pos_;
    }
    if (done()) fail(saw_sign ? "dangling sign" : "empty term");
    Integer coeff = 1;
    bool have_something = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Integer(read_digits());
      have_something = true;
    }
    std::vector<std::pair<std::string, int>> factors;
    while (!done() && peek() != '+' && peek() != '-') {
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("unexpected character");
      std::string name;
      while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
        name.push_back(text_[pos_++]);
      }
      int exponent = 1;
      if (!done() && peek() == '^') {
        ++pos_;
        int esign = 1;
        if (!done() && (peek() == '-' || peek() == '+')) {
          if (peek() == '-') esign = -1;
          ++pos_;
        }
        if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("bad exponent");
        exponent = esign * std::stoi(read_digits());
      }
      factors.emplace_back(std::move(name), exponent);
      have_something = true;
    }
    if (!have_something) fail("empty term");
    if (sign < 0) coeff = -coeff;
    return {coeff, factors};
  }

 private:
  char peek() const { return text_[pos_]; }
  std::string read_digits() {
    std::string digits;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(text_[pos_++]);
    return digits;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error: " + what + " at offset " +
                                std::to_string(pos_) + " in '" + text_ + "'");
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

// ---------------------------------------------------------------- Laurent1

Laurent1 Laurent1::constant(std::string var, const Integer& c) {
  return monomial(std::move(var), c, 0);
}

Laurent1 Laurent1::monomial(std::string var, const Integer& c, int exponent) {
  Laurent1 p(std::move(var));
  p.add_term(exponent, c);
  return p;
}

bool Laurent1::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

std::optional<int> Laurent1::min_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> Laurent1::max_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

Integer Laurent1::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer Laurent1::sum_of_coefficients() const {
  Integer total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

void Laurent1::add_term(int exponent, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent1 Laurent1::renamed(std::string var) const {
  Laurent1 out(std::move(var));
  out.terms_ = terms_;
  return out;
}

Laurent1& Laurent1::operator+=(const Laurent1& other) {
  var_ = merged_var(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Laurent1& Laurent1::operator-=(const Laurent1& other) {
  var_ = merged_var(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Laurent1& Laurent1::operator*=(const Laurent1& other) {
  *this = *this * other;
  return *this;
}

Laurent1 Laurent1::operator-() const {
  Laurent1 out(var_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Laurent1 operator*(const Laurent1& a, const Laurent1& b) {
  Laurent1 out(merged_var(a, b));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

bool operator==(const Laurent1& a, const Laurent1& b) {
  if (a.terms_ != b.terms_) return false;
  return a.var_ == b.var_ || a.is_constant();
}

std::string Laurent1::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    append_factor(os, var_, e);
  }
  return os.str();
}

Laurent1 Laurent1::parse(std::string_view text, std::string var) {
  Laurent1 out(var);
  TermReader reader(text);
  if (reader.done()) throw std::invalid_argument("polynomial parse error: empty input");
  while (!reader.done()) {
    auto [coeff, factors] = reader.next_term();
    int exponent = 0;
    for (const auto& [name, e] : factors) {
      if (name != var) throw std::invalid_argument("polynomial parse error: unknown variable '" + name + "'");
      exponent += e;
    }
    out.add_term(exponent, coeff);
  }
  return out;
}

// ---------------------------------------------------------------- Laurent2

Laurent2 Laurent2::constant(const Integer& c, std::string var1, std::string var2) {
  return monomial(c, 0, 0, std::move(var1), std::move(var2));
}

Laurent2 Laurent2::monomial(const Integer& c, int e1, int e2, std::string var1, std::string var2) {
  Laurent2 p(std::move(var1), std::move(var2));
  p.add_term(e1, e2, c);
  return p;
}

bool Laurent2::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

Integer Laurent2::coeff(int e1, int e2) const {
  auto it = terms_.find({e1, e2});
  return it == terms_.end() ? Integer(0) : it->second;
}

void Laurent2::add_term(int e1, int e2, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({e1, e2}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> Laurent2::max_degree2() const {
  std::optional<int> best;
  for (const auto& [e, c] : terms_) {
    if (!best || e.second > *best) best = e.second;
  }
  return best;
}

std::optional<int> Laurent2::min_degree2() const {
  std::optional<int> best;
  for (const auto& [e, c] : terms_) {
    if (!best || e.second < *best) best = e.second;
  }
  return best;
}

Laurent1 Laurent2::slice2(int e) const {
  Laurent1 out(var1_);
  for (const auto& [exps, c] : terms_) {
    if (exps.second == e) out.add_term(exps.first, c);
  }
  return out;
}

Laurent1 Laurent2::at_var1_one() const {
  Laurent1 out(var2_);
  for (const auto& [exps, c] : terms_) out.add_term(exps.second, c);
  return out;
}

Laurent2 Laurent2::mirrored() const {
  Laurent2 out(var1_, var2_);
  for (const auto& [exps, c] : terms_) {
    out.add_term(-exps.first, exps.second, (exps.first % 2 == 0) ? c : Integer(-c));
  }
  return out;
}

Laurent2& Laurent2::operator+=(const Laurent2& other) {
  check_vars(*this, other);
  if (is_constant() && !other.is_constant()) {
    var1_ = other.var1_;
    var2_ = other.var2_;
  }
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
  return *this;
}

Laurent2& Laurent2::operator-=(const Laurent2& other) {
  check_vars(*this, other);
  if (is_constant() && !other.is_constant()) {
    var1_ = other.var1_;
    var2_ = other.var2_;
  }
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, -c);
  return *this;
}

Laurent2& Laurent2::operator*=(const Laurent2& other) {
  *this = *this * other;
  return *this;
}

Laurent2 Laurent2::operator-() const {
  Laurent2 out(var1_, var2_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Laurent2 operator*(const Laurent2& a, const Laurent2& b) {
  check_vars(a, b);
  const Laurent2& named = a.is_constant() ? b : a;
  Laurent2 out(named.var1_, named.var2_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    }
  }
  return out;
}

bool operator==(const Laurent2& a, const Laurent2& b) {
  if (a.terms_ != b.terms_) return false;
  return (a.var1_ == b.var1_ && a.var2_ == b.var2_) || a.is_constant();
}

std::string Laurent2::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, const Integer*>> ordered;
  ordered.reserve(terms_.size());
  for (const auto& [e, c] : terms_) ordered.emplace_back(Exponents{e.second, e.first}, &c);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : ordered) {
    if (!first) os << " + ";
    first = false;
    os << c->get_str();
    append_factor(os, var1_, key.second);
    append_factor(os, var2_, key.first);
  }
  return os.str();
}

Laurent2 Laurent2::parse(std::string_view text, std::string var1, std::string var2) {
  Laurent2 out(var1, var2);
  TermReader reader(text);
  if (reader.done()) throw std::invalid_argument("polynomial parse error: empty input");
  while (!reader.done()) {
    auto [coeff, factors] = reader.next_term();
    int e1 = 0;
    int e2 = 0;
    for (const auto& [name, e] : factors) {
      if (name == var1) {
        e1 += e;
      } else if (name == var2) {
        e2 += e;
      } else {
        throw std::invalid_argument("polynomial parse error: unknown variable '" + name + "'");
      }
    }
    out.add_term(e1, e2, coeff);
  }
  return out;
}

// ---------------------------------------------------------- substitutions

Laurent1 substitute_power(const Laurent1& p, const std::string& target_var, int exponent) {
  if (exponent == 0) throw std::invalid_argument("substitute_power: exponent must be nonzero");
  Laurent1 out(target_var);
  for (const auto& [e, c] : p.terms()) out.add_term(e * exponent, c);
  return out;
}

Laurent1 shift_compose(const Laurent1& f) {
  if (auto lo = f.min_degree(); lo && *lo < 0) {
    throw std::invalid_argument("shift_compose: negative exponent in " + f.to_string());
  }
  // Horner evaluation at (x - 1).
  const Laurent1 x_minus_one = Laurent1::monomial(f.var(), 1, 1) - Laurent1::constant(f.var(), 1);
  Laurent1 acc(f.var());
  const int top = f.max_degree().value_or(0);
  for (int e = top; e >= 0; --e) {
    acc = acc * x_minus_one;
    acc.add_term(0, f.coeff(e));
  }
  return acc;
}

ConwayAlexander conway_alexander(const Laurent2& homfly) {
  ConwayAlexander out;
  out.conway = homfly.at_var1_one().renamed("z");
  if (auto lo = out.conway.min_degree(); lo && *lo < 0) {
    throw std::invalid_argument("conway_alexander: negative power of z in P(1, z)");
  }
  std::optional<int> parity;
  for (const auto& [e, c] : out.conway.terms()) {
    if (parity && *parity != e % 2) {
      throw std::invalid_argument("conway_alexander: mixed z-parity in P(1, z)");
    }
    parity = e % 2;
  }
  // z = s - s^{-1} with s = t^{1/2}.
  const Laurent1 z_image = Laurent1::monomial("s", 1, 1) - Laurent1::monomial("s", 1, -1);
  Laurent1 power = Laurent1::constant("s", 1);
  int reached = 0;
  Laurent1 delta("s");
  for (const auto& [e, c] : out.conway.terms()) {
    while (reached < e) {
      power = power * z_image;
      ++reached;
    }
    delta += power * Laurent1::constant("s", c);
  }
  out.alexander_half = delta.renamed("s");
  out.half_integer = parity.value_or(0) != 0;
  if (!out.half_integer) {
    Laurent1 in_t("t");
    for (const auto& [e, c] : delta.terms()) in_t.add_term(e / 2, c);
    out.alexander = in_t;
  }
  return out;
}

std::string half_integer_to_string(const Laurent1& in_s, const std::string& var) {
  if (in_s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : in_s.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    if (e == 0) continue;
    if (e % 2 == 0) {
      os << '*' << var << '^' << e / 2;
    } else {
      os << '*' << var << "^(" << e << "/2)";
    }
  }
  return os.str();
}

}  // namespace homflytop
