#include "gl11/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace gl11 {

namespace {

using QPoly = std::vector<Rational>;  // dense, index = degree

void trim(QPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

bool is_zero_poly(const QPoly& p) { return p.size() == 1 && p[0] == 0; }

// Quotient and remainder over Q.
void divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() - 1 < db) {
    q = QPoly{Rational(0)};
    r = a;
    return;
  }
  q.assign(a.size() - db, Rational(0));
  const Rational lead = b.back();
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    Rational f = a[i] / lead;
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= f * b[j];
  }
  a.resize(db == 0 ? 1 : db);
  trim(a);
  trim(q);
  r = a;
}

QPoly sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  // a - q*b
  QPoly out(std::max(a.size(), q.size() + b.size() - 1), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  trim(out);
  return out;
}

}  // namespace

Cyclotomic::Cyclotomic(int order) : order_(order) {
  if (order != 0 && order < 3) throw std::invalid_argument("cyclotomic order must be 0 or >= 3");
  num_.assign(order == 0 ? 1 : static_cast<std::size_t>(order - 1), mpz_class(0));
}

Cyclotomic::Cyclotomic(int order, const Rational& value) : Cyclotomic(order) {
  num_[0] = value.get_num();
  den_ = value.get_den();
}

Cyclotomic Cyclotomic::root_power(int order, long long k) {
  Cyclotomic out(order);
  if (order == 0) {
    out.num_[0] = 1;
    return out;
  }
  long long e = k % order;
  if (e < 0) e += order;
  if (e == order - 1) {
    // xi^{l-1} = -(1 + xi + ... + xi^{l-2})
    for (auto& c : out.num_) c = -1;
  } else {
    out.num_[static_cast<std::size_t>(e)] = 1;
  }
  return out;
}

Rational Cyclotomic::operator[](std::size_t i) const {
  Rational r(num_[i], den_);
  r.canonicalize();
  return r;
}

void Cyclotomic::normalize() {
  if (den_ == 1) return;
  mpz_class g = den_;
  bool any = false;
  for (const auto& c : num_) {
    if (c == 0) continue;
    any = true;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (!any) {
    den_ = 1;
    return;
  }
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && den_ == 1 && num_[0] == 1; }

void Cyclotomic::check_same_ring(const Cyclotomic& rhs) const {
  if (order_ != rhs.order_) throw std::invalid_argument("cyclotomic ring mismatch");
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  check_same_ring(rhs);
  if (den_ == rhs.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += rhs.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * rhs.den_ + rhs.num_[i] * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Rational& rhs) {
  for (auto& c : num_) c *= rhs.get_num();
  den_ *= rhs.get_den();
  if (rhs == 0) den_ = 1;
  normalize();
  return *this;
}

void Cyclotomic::multiply_numerators(const Cyclotomic& a, const Cyclotomic& b, std::vector<mpz_class>& out) {
  const std::size_t l = static_cast<std::size_t>(a.order_);
  thread_local std::vector<mpz_class> acc;
  acc.resize(l);
  for (auto& x : acc) x = 0;
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < b.num_.size(); ++j) {
      if (b.num_[j] == 0) continue;
      std::size_t k = i + j;
      if (k >= l) k -= l;
      mpz_addmul(acc[k].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  out.resize(l - 1);
  for (std::size_t i = 0; i + 1 < l; ++i) out[i] = acc[i] - acc[l - 1];
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  check_same_ring(rhs);
  if (order_ == 0) {
    num_[0] *= rhs.num_[0];
  } else {
    thread_local std::vector<mpz_class> prod;
    multiply_numerators(*this, rhs, prod);
    num_.swap(prod);
  }
  den_ *= rhs.den_;
  normalize();
  return *this;
}

void Cyclotomic::add_product(const Cyclotomic& a, const Cyclotomic& b) {
  check_same_ring(a);
  check_same_ring(b);
  if (den_ != 1 || a.den_ != 1 || b.den_ != 1) {
    *this += a * b;
    return;
  }
  if (order_ == 0) {
    mpz_addmul(num_[0].get_mpz_t(), a.num_[0].get_mpz_t(), b.num_[0].get_mpz_t());
    return;
  }
  thread_local std::vector<mpz_class> prod;
  multiply_numerators(a, b, prod);
  for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += prod[i];
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  if (order_ == 0) {
    Rational r(den_, num_[0]);
    r.canonicalize();
    return Cyclotomic(0, r);
  }
  // Extended Euclid on (a, Phi_l): s*a + t*Phi = 1.
  QPoly phi(static_cast<std::size_t>(order_), Rational(1));
  QPoly a(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) a[i] = (*this)[i];
  trim(a);
  QPoly r0 = phi, r1 = a;
  QPoly s0{Rational(0)}, s1{Rational(1)};
  while (!is_zero_poly(r1)) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s2 = sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_l is irreducible.
  if (r0.size() != 1) throw std::domain_error("cyclotomic inverse: non-unit (order not prime?)");
  QPoly q, rem;
  divmod(s0, phi, q, rem);
  mpz_class den = 1;
  for (auto& c : rem) {
    c /= r0[0];
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  Cyclotomic out(order_);
  for (std::size_t i = 0; i < rem.size() && i < out.num_.size(); ++i) out.num_[i] = rem[i].get_num() * (den / rem[i].get_den());
  out.den_ = den;
  out.normalize();
  return out;
}

bool Cyclotomic::operator==(const Cyclotomic& rhs) const {
  return order_ == rhs.order_ && den_ == rhs.den_ && num_ == rhs.num_;
}

bool Cyclotomic::operator<(const Cyclotomic& rhs) const {
  if (order_ != rhs.order_) return order_ < rhs.order_;
  for (std::size_t i = num_.size(); i-- > 0;) {
    const mpz_class a = num_[i] * rhs.den_, b = rhs.num_[i] * den_;
    if (a != b) return a < b;
  }
  return false;
}

std::string Cyclotomic::to_string(const std::string& root_name) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = num_.size(); i-- > 0;) {
    const Rational c = (*this)[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << root_name;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace gl11
