#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients. Only ring operations are provided.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "aqc/nat.hpp"

namespace aqc {

/// A variable belongs to a family (one per tracked cycle length) and has an
/// index inside it: index t >= 1 marks the adjacent cycle starting at t,
/// index 0 is the family's collective variable.
struct Variable {
  std::uint16_t family = 0;
  std::uint16_t index = 0;

  friend auto operator<=>(const Variable&, const Variable&) = default;
};

struct VariableFamily {
  std::string name;
  unsigned length = 1;
};

using FamilyTable = std::vector<VariableFamily>;

/// Product of variable powers, stored sorted by variable with no zero exponents.
class Monomial {
 public:
  using Power = std::pair<Variable, unsigned>;

  Monomial() = default;
  explicit Monomial(std::vector<Power> powers);  // canonicalizes

  static Monomial of(Variable v, unsigned exponent = 1);

  const std::vector<Power>& powers() const { return powers_; }
  unsigned degree() const { return degree_; }
  unsigned exponent(Variable v) const;
  bool is_one() const { return powers_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Power> powers_;
  unsigned degree_ = 0;
};

/// Graded lexicographic: lower total degree first; within a degree, the
/// monomial with the larger exponent on the earliest variable comes first.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class MPoly {
 public:
  using Terms = std::map<Monomial, Int, GradedLex>;

  MPoly() = default;
  MPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit MPoly(const Int& c);
  static MPoly variable(Variable v);
  static MPoly term(const Int& c, Monomial m);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Int coefficient(const Monomial& m) const;
  unsigned degree() const;

  // Value with every variable set to 1.
  Int evaluate_at_ones() const;

  // Adds c*m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Int& c);

  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

inline MPoly poly_add(const MPoly& a, const MPoly& b) { return a + b; }
inline MPoly poly_mul(const MPoly& a, const MPoly& b) { return a * b; }

/// Coefficients c_0..c_d of a polynomial in the single variable v. Throws
/// InvalidArgument if any other variable occurs.
std::vector<Int> univariate_coefficients(const MPoly& p, Variable v);

std::string variable_name(Variable v, const FamilyTable& families);

/// Terms in graded-lex order, e.g. "697 + 22x + x^2" or "x_1^3*x_2 + 1".
std::string to_string(const MPoly& p, const FamilyTable& families);

}  // namespace aqc
