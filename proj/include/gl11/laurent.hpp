#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gl11/cyclotomic.hpp"

namespace gl11 {

using Exponents = std::vector<long long>;

// Multivariate Laurent polynomial with coefficients in Q or Q(xi_l).
// Terms are kept in a map ordered lexicographically by exponent vector
// (variable 0 most significant); zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<Exponents, Cyclotomic>;

  LaurentPoly() = default;
  LaurentPoly(int nvars, int order);

  static LaurentPoly constant(int nvars, const Cyclotomic& c);
  static LaurentPoly monomial(const Exponents& exps, const Cyclotomic& c);

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  Cyclotomic constant_term() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Cyclotomic& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  // this += c * x^exps * p
  void add_scaled(const LaurentPoly& p, const Exponents& exps, const Cyclotomic& c);

  // Multiply by the monomial x^shift.
  LaurentPoly shifted(const Exponents& shift) const;

  // Componentwise minimum exponent over all terms (zeros for the zero poly).
  Exponents min_exponents() const;

  // Exact quotient by b, for polynomials with nonnegative exponents.
  // Returns nullopt if b does not divide *this.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& b) const;

  bool operator==(const LaurentPoly& rhs) const {
    return nvars_ == rhs.nvars_ && order_ == rhs.order_ && terms_ == rhs.terms_;
  }
  bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

  // Deterministic text form; terms in descending lexicographic order.
  std::string to_string(const std::vector<std::string>& names, const std::string& root_name = "xi") const;

 private:
  void check_same_ring(const LaurentPoly& rhs) const;

  int nvars_ = 0;
  int order_ = 0;
  Terms terms_;
};

// Greatest common divisor of two polynomials with nonnegative exponents,
// computed over the coefficient field and normalized so that the
// lexicographically leading coefficient is 1.
LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace gl11
