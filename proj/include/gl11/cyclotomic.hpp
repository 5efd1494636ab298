#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gl11 {

using Rational = mpq_class;

// Element of Q[x]/Phi_l(x) for a prime l, or of Q itself when l == 0.
// Stored as the l-1 coefficients of the reduced representative, written as
// integers over one positive common denominator in lowest terms, so equal
// elements always compare structurally equal.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  explicit Cyclotomic(int order);
  Cyclotomic(int order, const Rational& value);

  static Cyclotomic root_power(int order, long long k);

  int order() const { return order_; }
  // Number of stored coefficients: 1 over Q, l-1 over Q(xi_l).
  std::size_t dimension() const { return num_.size(); }
  Rational operator[](std::size_t i) const;

  bool is_zero() const;
  bool is_one() const;
  // True when the element is a rational number (no xi terms).
  bool is_rational() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Rational& rhs);
  // *this += a * b without temporaries.
  void add_product(const Cyclotomic& a, const Cyclotomic& b);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

  // Throws std::domain_error on zero.
  Cyclotomic inverse() const;

  bool operator==(const Cyclotomic& rhs) const;
  bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }

  // Total order on representatives (used for deterministic sorting only).
  bool operator<(const Cyclotomic& rhs) const;

  std::string to_string(const std::string& root_name = "xi") const;

 private:
  void check_same_ring(const Cyclotomic& rhs) const;
  void normalize();
  // Product of the numerators reduced into out (size l-1); order > 0.
  static void multiply_numerators(const Cyclotomic& a, const Cyclotomic& b, std::vector<mpz_class>& out);

  int order_ = 0;
  std::vector<mpz_class> num_{mpz_class(0)};
  mpz_class den_{1};
};

}  // namespace gl11
