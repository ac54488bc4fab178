#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace homflytop {

using Integer = mpz_class;

/// Sparse Laurent polynomial in one named variable with exact integer
/// coefficients. Zero coefficients are never stored, so two values are equal
/// exactly when their coefficient maps are equal.
class Laurent1 {
 public:
  using Terms = std::map<int, Integer>;

  explicit Laurent1(std::string var = "x") : var_(std::move(var)) {}

  static Laurent1 constant(std::string var, const Integer& c);
  static Laurent1 monomial(std::string var, const Integer& c, int exponent);

  const std::string& var() const { return var_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when every stored exponent is zero (this includes the zero polynomial).
  bool is_constant() const;

  std::optional<int> min_degree() const;
  std::optional<int> max_degree() const;
  Integer coeff(int exponent) const;
  /// Sum of all coefficients, i.e. the value at 1.
  Integer sum_of_coefficients() const;

  void add_term(int exponent, const Integer& c);
  Laurent1 renamed(std::string var) const;

  Laurent1& operator+=(const Laurent1& other);
  Laurent1& operator-=(const Laurent1& other);
  Laurent1& operator*=(const Laurent1& other);
  Laurent1 operator-() const;

  friend Laurent1 operator+(Laurent1 a, const Laurent1& b) { return a += b; }
  friend Laurent1 operator-(Laurent1 a, const Laurent1& b) { return a -= b; }
  friend Laurent1 operator*(const Laurent1& a, const Laurent1& b);
  friend bool operator==(const Laurent1& a, const Laurent1& b);

  /// Terms in increasing exponent order, e.g. `1 + 2*u^1`.
  std::string to_string() const;
  static Laurent1 parse(std::string_view text, std::string var);

 private:
  std::string var_;
  Terms terms_;
};

/// Sparse Laurent polynomial in two named variables; keys are
/// (first exponent, second exponent).
class Laurent2 {
 public:
  using Exponents = std::pair<int, int>;
  using Terms = std::map<Exponents, Integer>;

  explicit Laurent2(std::string var1 = "v", std::string var2 = "z")
      : var1_(std::move(var1)), var2_(std::move(var2)) {}

  static Laurent2 constant(const Integer& c, std::string var1 = "v", std::string var2 = "z");
  static Laurent2 monomial(const Integer& c, int e1, int e2, std::string var1 = "v",
                           std::string var2 = "z");

  const std::string& var1() const { return var1_; }
  const std::string& var2() const { return var2_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  Integer coeff(int e1, int e2) const;
  void add_term(int e1, int e2, const Integer& c);

  /// Largest exponent of the second variable; empty for the zero polynomial.
  std::optional<int> max_degree2() const;
  std::optional<int> min_degree2() const;
  /// Coefficient of var2^e as a polynomial in var1.
  Laurent1 slice2(int e) const;
  /// Value at var1 = 1, as a polynomial in var2.
  Laurent1 at_var1_one() const;
  /// var1 -> -var1^{-1}; sends P_L to P of the mirror image.
  Laurent2 mirrored() const;

  Laurent2& operator+=(const Laurent2& other);
  Laurent2& operator-=(const Laurent2& other);
  Laurent2& operator*=(const Laurent2& other);
  Laurent2 operator-() const;

  friend Laurent2 operator+(Laurent2 a, const Laurent2& b) { return a += b; }
  friend Laurent2 operator-(Laurent2 a, const Laurent2& b) { return a -= b; }
  friend Laurent2 operator*(const Laurent2& a, const Laurent2& b);
  friend bool operator==(const Laurent2& a, const Laurent2& b);

  /// Terms ordered by (var2 exponent, var1 exponent), e.g.
  /// `-1*v^6*z^-2 + 2*v^4*z^2`.
  std::string to_string() const;
  static Laurent2 parse(std::string_view text, std::string var1 = "v", std::string var2 = "z");

 private:
  std::string var1_;
  std::string var2_;
  Terms terms_;
};

/// Each term c*x^k becomes c*y^(k*exponent), y named `target_var`.
Laurent1 substitute_power(const Laurent1& p, const std::string& target_var, int exponent);

/// f(x - 1), expanded exactly. Throws std::invalid_argument when f has
/// negative exponents.
Laurent1 shift_compose(const Laurent1& f);

/// Conway and Alexander specialisations of a HOMFLY value.
struct ConwayAlexander {
  Laurent1 conway{"z"};
  /// Alexander polynomial in the variable s = t^{1/2}; always populated.
  Laurent1 alexander_half{"s"};
  /// Alexander polynomial in t when every exponent of s is even.
  std::optional<Laurent1> alexander;
  bool half_integer = false;
};

/// nabla(z) = P(1, z) and Delta(t) = nabla(t^{1/2} - t^{-1/2}). Links with an
/// even number of components give half-integer powers of t; these are exposed
/// through `alexander_half` rather than normalised away. Throws
/// std::invalid_argument when nabla has negative powers or mixed parity.
ConwayAlexander conway_alexander(const Laurent2& homfly);

/// Renders a polynomial in s = t^{1/2} using t^(k/2) for odd k.
std::string half_integer_to_string(const Laurent1& in_s, const std::string& var = "t");

}  // namespace homflytop
