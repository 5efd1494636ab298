#include "gl11/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gl11 {

LaurentPoly::LaurentPoly(int nvars, int order) : nvars_(nvars), order_(order) {
  if (nvars < 0) throw std::invalid_argument("negative variable count");
}

LaurentPoly LaurentPoly::constant(int nvars, const Cyclotomic& c) {
  LaurentPoly p(nvars, c.order());
  if (!c.is_zero()) p.terms_.emplace(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponents& exps, const Cyclotomic& c) {
  LaurentPoly p(static_cast<int>(exps.size()), c.order());
  if (!c.is_zero()) p.terms_.emplace(exps, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](long long x) { return x == 0; });
}

Cyclotomic LaurentPoly::constant_term() const {
  auto it = terms_.find(Exponents(static_cast<std::size_t>(nvars_), 0));
  return it == terms_.end() ? Cyclotomic(order_) : it->second;
}

void LaurentPoly::check_same_ring(const LaurentPoly& rhs) const {
  if (nvars_ != rhs.nvars_ || order_ != rhs.order_) throw std::invalid_argument("Laurent polynomial ring mismatch");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  check_same_ring(rhs);
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  check_same_ring(rhs);
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

void LaurentPoly::add_scaled(const LaurentPoly& p, const Exponents& exps, const Cyclotomic& c) {
  check_same_ring(p);
  if (c.is_zero()) return;
  Exponents e(static_cast<std::size_t>(nvars_));
  for (const auto& [pe, pc] : p.terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = pe[i] + exps[i];
    auto it = terms_.lower_bound(e);
    if (it == terms_.end() || it->first != e) {
      terms_.emplace_hint(it, e, pc * c);
    } else {
      it->second.add_product(pc, c);
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_ring(b);
  LaurentPoly out(a.nvars_, a.order_);
  for (const auto& [e, c] : b.terms_) out.add_scaled(a, e, c);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Cyclotomic& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::shifted(const Exponents& shift) const {
  LaurentPoly out(nvars_, order_);
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += shift[i];
    out.terms_.emplace_hint(out.terms_.end(), std::move(ne), c);
  }
  return out;
}

Exponents LaurentPoly::min_exponents() const {
  Exponents m(static_cast<std::size_t>(nvars_), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& b) const {
  check_same_ring(b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  LaurentPoly q(nvars_, order_);
  LaurentPoly r = *this;
  const auto& [be, bc] = *b.terms_.rbegin();
  const Cyclotomic binv = bc.inverse();
  Exponents diff(static_cast<std::size_t>(nvars_));
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms_.rbegin();
    for (std::size_t i = 0; i < diff.size(); ++i) {
      diff[i] = re[i] - be[i];
      if (diff[i] < 0) return std::nullopt;
    }
    Cyclotomic f = rc * binv;
    q.terms_.emplace(diff, f);
    r.add_scaled(b, diff, -f);
  }
  return q;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names, const std::string& root_name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coeff;
    bool negative = false;
    if (c.is_rational()) {
      Rational v = c[0];
      negative = v < 0;
      Rational mag = abs(v);
      if (mag != 1 || mono.empty()) coeff = mag.get_str();
    } else {
      coeff = "(" + c.to_string(root_name) + ")";
    }
    if (negative)
      os << "-";
    else if (!first)
      os << "+";
    os << coeff;
    if (!coeff.empty() && !mono.empty()) os << "*";
    os << mono;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// GCD over the coefficient field, recursive in the variables.

namespace {

long long degree_in(const LaurentPoly& p, int var) {
  long long d = -1;
  for (const auto& [e, c] : p.terms()) d = std::max(d, e[static_cast<std::size_t>(var)]);
  return d;
}

// Coefficient of x_var^k, as a polynomial in the remaining variables.
LaurentPoly coefficient_in(const LaurentPoly& p, int var, long long k) {
  LaurentPoly out(p.nvars(), p.order());
  for (const auto& [e, c] : p.terms()) {
    if (e[static_cast<std::size_t>(var)] != k) continue;
    Exponents ne = e;
    ne[static_cast<std::size_t>(var)] = 0;
    out += LaurentPoly::monomial(ne, c);
  }
  return out;
}

std::vector<LaurentPoly> coefficients_in(const LaurentPoly& p, int var) {
  std::map<long long, LaurentPoly> by;
  for (const auto& [e, c] : p.terms()) {
    Exponents ne = e;
    long long k = ne[static_cast<std::size_t>(var)];
    ne[static_cast<std::size_t>(var)] = 0;
    auto [it, ins] = by.emplace(k, LaurentPoly(p.nvars(), p.order()));
    it->second += LaurentPoly::monomial(ne, c);
  }
  std::vector<LaurentPoly> out;
  for (auto& [k, v] : by) out.push_back(std::move(v));
  return out;
}

Exponents unit_exponent(int nvars, int var, long long k) {
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(var)] = k;
  return e;
}

LaurentPoly make_monic(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly out = p;
  out *= p.terms().rbegin()->second.inverse();
  return out;
}

LaurentPoly one_like(const LaurentPoly& p) {
  return LaurentPoly::constant(p.nvars(), Cyclotomic(p.order(), 1));
}

LaurentPoly exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("gcd: expected exact division");
  return *q;
}

// Only variables 0..var may occur in a and b.
LaurentPoly gcd_rec(const LaurentPoly& a, const LaurentPoly& b, int var);

LaurentPoly content_in(const LaurentPoly& p, int var) {
  LaurentPoly g(p.nvars(), p.order());
  for (const auto& c : coefficients_in(p, var)) {
    g = gcd_rec(g, c, var - 1);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

LaurentPoly gcd_rec(const LaurentPoly& a, const LaurentPoly& b, int var) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (var < 0 || a.is_constant() || b.is_constant()) return one_like(a);

  if (var == 0) {
    // Univariate Euclid over the coefficient field.
    LaurentPoly r0 = a, r1 = b;
    if (degree_in(r0, 0) < degree_in(r1, 0)) std::swap(r0, r1);
    while (!r1.is_zero()) {
      const long long d1 = degree_in(r1, 0);
      const Cyclotomic inv = r1.terms().rbegin()->second.inverse();
      while (!r0.is_zero() && degree_in(r0, 0) >= d1) {
        const long long d0 = degree_in(r0, 0);
        Cyclotomic f = r0.terms().rbegin()->second * inv;
        r0.add_scaled(r1, unit_exponent(a.nvars(), 0, d0 - d1), -f);
      }
      std::swap(r0, r1);
    }
    return make_monic(r0);
  }

  if (degree_in(a, var) == 0 && degree_in(b, var) == 0) return gcd_rec(a, b, var - 1);

  const LaurentPoly ca = content_in(a, var);
  const LaurentPoly cb = content_in(b, var);
  const LaurentPoly c = gcd_rec(ca, cb, var - 1);
  LaurentPoly p = exact(a, ca);
  LaurentPoly q = exact(b, cb);
  if (degree_in(p, var) < degree_in(q, var)) std::swap(p, q);

  // Primitive polynomial remainder sequence in x_var.
  while (!q.is_zero()) {
    if (degree_in(q, var) == 0) {
      p = one_like(a);
      break;
    }
    const long long dq = degree_in(q, var);
    const LaurentPoly lq = coefficient_in(q, var, dq);
    LaurentPoly r = p;
    while (!r.is_zero() && degree_in(r, var) >= dq) {
      const long long dr = degree_in(r, var);
      const LaurentPoly lr = coefficient_in(r, var, dr);
      LaurentPoly next = r * lq;
      next -= (lr * q).shifted(unit_exponent(a.nvars(), var, dr - dq));
      r = std::move(next);
    }
    if (!r.is_zero()) r = exact(r, content_in(r, var));
    p = std::move(q);
    q = std::move(r);
  }
  return make_monic(c * p);
}

}  // namespace

LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars() || a.order() != b.order()) throw std::invalid_argument("gcd ring mismatch");
  for (const auto* p : {&a, &b}) {
    for (long long e : p->min_exponents())
      if (e < 0) throw std::invalid_argument("gcd requires nonnegative exponents");
  }
  if (!a.is_zero() && !b.is_zero()) {
    if (auto q = a.divide_exact(b)) return make_monic(b);
    if (auto q = b.divide_exact(a)) return make_monic(a);
  }
  return gcd_rec(a, b, a.nvars() - 1);
}

}  // namespace gl11
