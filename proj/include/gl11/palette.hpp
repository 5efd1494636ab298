#pragma once

#include <string>
#include <vector>

#include "gl11/laurent.hpp"

namespace gl11 {

// Description of the multiplicity group G = Z^k x Z/l and the scalar field.
// Free generators are named (t, pi, u, v, ...); the torsion generator, when
// present, is named xi and doubles as a primitive l-th root of unity.
class Palette {
 public:
  Palette() : Palette({"t"}, 0) {}
  Palette(std::vector<std::string> free_names, int torsion_order);

  // Accepts "qt", "xi<l>" (free generator pi plus torsion xi of order l),
  // and "vars(a,b,...)" optionally followed by ";xi<l>".
  static Palette parse(const std::string& spec);

  int free_rank() const { return static_cast<int>(free_names_.size()); }
  int torsion_order() const { return torsion_order_; }
  bool has_torsion() const { return torsion_order_ != 0; }
  const std::vector<std::string>& free_names() const { return free_names_; }
  const std::string& torsion_name() const { return torsion_name_; }
  std::string spec() const;

  bool operator==(const Palette& rhs) const {
    return free_names_ == rhs.free_names_ && torsion_order_ == rhs.torsion_order_;
  }
  bool operator!=(const Palette& rhs) const { return !(*this == rhs); }

 private:
  std::vector<std::string> free_names_;
  int torsion_order_ = 0;
  std::string torsion_name_ = "xi";
};

class GroupElement {
 public:
  GroupElement() = default;
  // Identity of the given palette.
  explicit GroupElement(const Palette& p);
  GroupElement(std::vector<long long> free_exponents, long long torsion_exponent, int torsion_order);

  // The i-th free generator, or the torsion generator.
  static GroupElement generator(const Palette& p, int i);
  static GroupElement torsion_generator(const Palette& p);

  // Parses products such as "pi^2*xi^3", "t^-1", "u*v^-2" or "1".
  static GroupElement parse(const Palette& p, const std::string& text);

  const std::vector<long long>& free_exponents() const { return free_; }
  long long torsion_exponent() const { return torsion_; }
  int torsion_order() const { return torsion_order_; }

  bool is_identity() const;
  GroupElement inverse() const { return pow(-1); }
  GroupElement pow(long long n) const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  bool operator==(const GroupElement& rhs) const {
    return free_ == rhs.free_ && torsion_ == rhs.torsion_ && torsion_order_ == rhs.torsion_order_;
  }
  bool operator!=(const GroupElement& rhs) const { return !(*this == rhs); }
  bool operator<(const GroupElement& rhs) const;

  std::string to_string(const Palette& p) const;

 private:
  std::vector<long long> free_;
  long long torsion_ = 0;
  int torsion_order_ = 0;
};

GroupElement group_mul(const GroupElement& a, const GroupElement& b);
GroupElement group_pow(const GroupElement& a, long long n);
// g^4 != 1; with odd torsion this is the same as g != 1.
bool is_color_admissible(const GroupElement& g);

// Element of the fraction field, kept in canonical form: numerator and
// denominator coprime, the denominator an ordinary polynomial with no
// monomial factor whose lexicographically largest term has coefficient 1.
class Scalar {
 public:
  Scalar() : Scalar(0, 0) {}
  Scalar(int nvars, int order);  // zero
  explicit Scalar(const LaurentPoly& p);
  Scalar(const LaurentPoly& num, const LaurentPoly& den);

  static Scalar zero(const Palette& p);
  static Scalar one(const Palette& p);
  static Scalar from_integer(const Palette& p, long long n);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  int nvars() const { return num_.nvars(); }
  int order() const { return num_.order(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;

  bool operator==(const Scalar& rhs) const { return num_ == rhs.num_ && den_ == rhs.den_; }
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

  std::string to_string(const Palette& p) const;

 private:
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);
Scalar scalar_neg(const Scalar& a);
Scalar scalar_div(const Scalar& a, const Scalar& b);

// Laurent monomial with the free exponents of g and coefficient xi^k.
LaurentPoly monomial_poly(const Palette& p, const GroupElement& g);
Scalar monomial(const Palette& p, const GroupElement& g);

// 1/(t^2 - t^-2); throws std::domain_error when t^4 = 1.
Scalar d(const Palette& p, const GroupElement& t);

}  // namespace gl11
