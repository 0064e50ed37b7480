#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "comdet/sign_vector.hpp"

namespace comdet {

enum class VarKind : std::int8_t { Plus = 0, Minus = 1, Plain = 2 };

// A variable x_{e+}, x_{e-} or (unsigned) x_e, element referenced by index.
struct Variable {
  std::int32_t element = 0;
  VarKind kind = VarKind::Plain;

  std::int32_t id() const { return element * 3 + static_cast<std::int32_t>(kind); }
  static Variable fromId(std::int32_t id) {
    return Variable{id / 3, static_cast<VarKind>(id % 3)};
  }
  auto operator<=>(const Variable&) const = default;
};

// Exponent vector, sorted by variable id, exponents > 0.
using Monomial = std::vector<std::pair<std::int32_t, std::int32_t>>;

int monomialDegree(const Monomial& m);
// Graded-lexicographic order (total degree, then variable-wise).
bool monomialLess(const Monomial& a, const Monomial& b);

struct MonomialCmp {
  bool operator()(const Monomial& a, const Monomial& b) const { return monomialLess(a, b); }
};

// Sparse multivariate polynomial over arbitrary-precision integers.
// Terms are kept sorted by the graded-lexicographic monomial order.
class Poly {
 public:
  using TermList = std::vector<std::pair<Monomial, mpz_class>>;

  Poly() = default;
  explicit Poly(const mpz_class& c);
  explicit Poly(long c);
  static Poly variable(Variable v, std::int32_t exp = 1);
  static Poly term(const mpz_class& c, const Monomial& m);

  const TermList& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isOne() const;
  std::size_t termCount() const { return terms_.size(); }
  int degree() const;  // -1 for the zero polynomial

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(std::int64_t exp) const;

  // Exact quotient; throws when the division leaves a remainder.
  Poly exactDiv(const Poly& divisor) const;

  // Drops every term involving any variable of the given element.
  Poly setZero(std::int32_t element) const;

  // Substitutes x_{e+} and x_{e-} by the unsigned x_e for every element.
  Poly unsignedSpecialize() const;

  mpz_class evalInt(const std::function<mpz_class(Variable)>& assignment) const;

  std::string str(const GroundSet& ground) const;

 private:
  void insertTerm(const Monomial& m, const mpz_class& c);
  TermList terms_;
};

// Parses the canonical string form, e.g. "1 - x[a]+*x[a]-" or "1 - x[a]^2".
Poly parsePoly(const std::string& text, const GroundSet& ground);

std::string variableName(Variable v, const GroundSet& ground);

}  // namespace comdet
