#include "gl11/palette.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace gl11 {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

long long reduce_mod(long long v, int l) {
  if (l == 0) return 0;
  long long r = v % l;
  return r < 0 ? r + l : r;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

int parse_torsion_spec(const std::string& s) {
  if (s.size() < 3 || s.compare(0, 2, "xi") != 0) throw std::invalid_argument("bad torsion spec '" + s + "'");
  int l = 0;
  try {
    std::size_t used = 0;
    l = std::stoi(s.substr(2), &used);
    if (used != s.size() - 2) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad torsion order in '" + s + "'");
  }
  return l;
}

long long parse_integer(const std::string& s, const std::string& context) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer '" + s + "' in '" + context + "'");
  }
}

}  // namespace

Palette::Palette(std::vector<std::string> free_names, int torsion_order)
    : free_names_(std::move(free_names)), torsion_order_(torsion_order) {
  if (torsion_order != 0 && (torsion_order < 3 || !is_prime(torsion_order)))
    throw std::invalid_argument("torsion order must be an odd prime, got " + std::to_string(torsion_order));
  for (const auto& n : free_names_) {
    if (n.empty() || n == torsion_name_) throw std::invalid_argument("invalid generator name '" + n + "'");
    if (!std::all_of(n.begin(), n.end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("invalid generator name '" + n + "'");
  }
  auto sorted = free_names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate generator name");
}

Palette Palette::parse(const std::string& raw) {
  const std::string spec = trim(raw);
  if (spec == "qt") return Palette({"t"}, 0);
  if (spec.compare(0, 2, "xi") == 0) return Palette({"pi"}, parse_torsion_spec(spec));
  if (spec.compare(0, 5, "vars(") == 0) {
    const auto close = spec.find(')');
    if (close == std::string::npos) throw std::invalid_argument("unterminated vars( in palette spec");
    std::vector<std::string> names;
    std::string inner = spec.substr(5, close - 5);
    std::size_t start = 0;
    while (start <= inner.size()) {
      auto comma = inner.find(',', start);
      if (comma == std::string::npos) comma = inner.size();
      std::string name = trim(inner.substr(start, comma - start));
      if (!name.empty()) names.push_back(name);
      start = comma + 1;
    }
    int l = 0;
    std::string rest = trim(spec.substr(close + 1));
    if (!rest.empty()) {
      if (rest[0] != ';') throw std::invalid_argument("unexpected '" + rest + "' in palette spec");
      l = parse_torsion_spec(trim(rest.substr(1)));
    }
    return Palette(std::move(names), l);
  }
  throw std::invalid_argument("unknown palette '" + spec + "' (expected qt, xi<l> or vars(...))");
}

std::string Palette::spec() const {
  if (free_names_ == std::vector<std::string>{"t"} && torsion_order_ == 0) return "qt";
  if (free_names_ == std::vector<std::string>{"pi"} && torsion_order_ != 0) return "xi" + std::to_string(torsion_order_);
  std::string s = "vars(";
  for (std::size_t i = 0; i < free_names_.size(); ++i) s += (i ? "," : "") + free_names_[i];
  s += ")";
  if (torsion_order_ != 0) s += ";xi" + std::to_string(torsion_order_);
  return s;
}

// ---------------------------------------------------------------------------

GroupElement::GroupElement(const Palette& p)
    : free_(static_cast<std::size_t>(p.free_rank()), 0), torsion_order_(p.torsion_order()) {}

GroupElement::GroupElement(std::vector<long long> free_exponents, long long torsion_exponent, int torsion_order)
    : free_(std::move(free_exponents)), torsion_(reduce_mod(torsion_exponent, torsion_order)), torsion_order_(torsion_order) {}

GroupElement GroupElement::generator(const Palette& p, int i) {
  GroupElement g(p);
  g.free_.at(static_cast<std::size_t>(i)) = 1;
  return g;
}

GroupElement GroupElement::torsion_generator(const Palette& p) {
  if (!p.has_torsion()) throw std::invalid_argument("palette has no torsion generator");
  GroupElement g(p);
  g.torsion_ = 1;
  return g;
}

GroupElement GroupElement::parse(const Palette& p, const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw std::invalid_argument("empty group element");
  GroupElement g(p);
  std::size_t start = 0;
  while (start <= text.size()) {
    auto star = text.find('*', start);
    if (star == std::string::npos) star = text.size();
    const std::string factor = trim(text.substr(start, star - start));
    start = star + 1;
    if (factor.empty()) throw std::invalid_argument("empty factor in group element '" + text + "'");
    if (factor == "1") continue;
    std::string name = factor;
    long long e = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      name = trim(factor.substr(0, caret));
      std::string exp = trim(factor.substr(caret + 1));
      if (exp.size() > 2 && exp.front() == '(' && exp.back() == ')') exp = exp.substr(1, exp.size() - 2);
      e = parse_integer(exp, text);
    }
    if (p.has_torsion() && name == p.torsion_name()) {
      g.torsion_ = reduce_mod(g.torsion_ + e, p.torsion_order());
      continue;
    }
    const auto& names = p.free_names();
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
      throw std::invalid_argument("unknown generator '" + name + "' for palette " + p.spec());
    g.free_[static_cast<std::size_t>(it - names.begin())] += e;
  }
  return g;
}

bool GroupElement::is_identity() const {
  return torsion_ == 0 && std::all_of(free_.begin(), free_.end(), [](long long e) { return e == 0; });
}

GroupElement GroupElement::pow(long long n) const {
  GroupElement g = *this;
  for (auto& e : g.free_) e *= n;
  g.torsion_ = reduce_mod(torsion_ * reduce_mod(n, torsion_order_ ? torsion_order_ : 1), torsion_order_);
  return g;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.free_.size() != b.free_.size() || a.torsion_order_ != b.torsion_order_)
    throw std::invalid_argument("group elements from different palettes");
  GroupElement g = a;
  for (std::size_t i = 0; i < g.free_.size(); ++i) g.free_[i] += b.free_[i];
  g.torsion_ = reduce_mod(a.torsion_ + b.torsion_, a.torsion_order_);
  return g;
}

bool GroupElement::operator<(const GroupElement& rhs) const {
  if (free_ != rhs.free_) return free_ < rhs.free_;
  return torsion_ < rhs.torsion_;
}

std::string GroupElement::to_string(const Palette& p) const {
  std::string s;
  auto add = [&s](const std::string& name, long long e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (e != 1) s += "^" + std::to_string(e);
  };
  for (std::size_t i = 0; i < free_.size(); ++i) add(p.free_names().at(i), free_[i]);
  add(p.torsion_name(), torsion_);
  return s.empty() ? "1" : s;
}

GroupElement group_mul(const GroupElement& a, const GroupElement& b) { return a * b; }
GroupElement group_pow(const GroupElement& a, long long n) { return a.pow(n); }
bool is_color_admissible(const GroupElement& g) { return !g.pow(4).is_identity(); }

// ---------------------------------------------------------------------------

Scalar::Scalar(int nvars, int order)
    : num_(nvars, order), den_(LaurentPoly::constant(nvars, Cyclotomic(order, 1))) {}

Scalar::Scalar(const LaurentPoly& p) : num_(p), den_(LaurentPoly::constant(p.nvars(), Cyclotomic(p.order(), 1))) {
  canonicalize();
}

Scalar::Scalar(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (num.nvars() != den.nvars() || num.order() != den.order())
    throw std::invalid_argument("numerator and denominator from different rings");
  canonicalize();
}

Scalar Scalar::zero(const Palette& p) { return Scalar(p.free_rank(), p.torsion_order()); }

Scalar Scalar::one(const Palette& p) { return from_integer(p, 1); }

Scalar Scalar::from_integer(const Palette& p, long long n) {
  return Scalar(LaurentPoly::constant(p.free_rank(), Cyclotomic(p.torsion_order(), Rational(static_cast<long>(n)))));
}

bool Scalar::is_one() const { return num_.is_constant() && den_.is_constant() && num_ == den_; }

void Scalar::canonicalize() {
  const int nv = num_.nvars();
  const int ord = num_.order();
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(nv, Cyclotomic(ord, 1));
    return;
  }
  Exponents mn = num_.min_exponents();
  Exponents md = den_.min_exponents();
  Exponents neg_mn(mn.size()), neg_md(md.size()), net(mn.size());
  for (std::size_t i = 0; i < mn.size(); ++i) {
    neg_mn[i] = -mn[i];
    neg_md[i] = -md[i];
    net[i] = mn[i] - md[i];
  }
  LaurentPoly n = num_.shifted(neg_mn);
  LaurentPoly dd = den_.shifted(neg_md);
  if (!dd.is_constant() && !n.is_constant()) {
    LaurentPoly g = polynomial_gcd(n, dd);
    if (!g.is_constant()) {
      n = *n.divide_exact(g);
      dd = *dd.divide_exact(g);
    }
  }
  const Cyclotomic scale = dd.terms().rbegin()->second.inverse();
  n *= scale;
  dd *= scale;
  num_ = n.shifted(net);
  den_ = std::move(dd);
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = -s.num_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  Scalar s = *this;
  std::swap(s.num_, s.den_);
  s.canonicalize();
  return s;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

std::string Scalar::to_string(const Palette& p) const {
  const std::string n = num_.to_string(p.free_names(), p.torsion_name());
  if (den_.is_constant() && den_.constant_term().is_one()) return n;
  const std::string dstr = den_.to_string(p.free_names(), p.torsion_name());
  const std::string nwrap = num_.size() > 1 || !num_.terms().begin()->second.is_rational() ? "(" + n + ")" : n;
  const std::string dwrap = den_.size() > 1 || !den_.terms().begin()->second.is_rational() ? "(" + dstr + ")" : dstr;
  return nwrap + "/" + dwrap;
}

Scalar scalar_add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }
Scalar scalar_neg(const Scalar& a) { return -a; }
Scalar scalar_div(const Scalar& a, const Scalar& b) { return a / b; }

LaurentPoly monomial_poly(const Palette& p, const GroupElement& g) {
  if (static_cast<int>(g.free_exponents().size()) != p.free_rank() || g.torsion_order() != p.torsion_order())
    throw std::invalid_argument("group element does not belong to palette " + p.spec());
  return LaurentPoly::monomial(g.free_exponents(), Cyclotomic::root_power(p.torsion_order(), g.torsion_exponent()));
}

Scalar monomial(const Palette& p, const GroupElement& g) { return Scalar(monomial_poly(p, g)); }

Scalar d(const Palette& p, const GroupElement& t) {
  if (!is_color_admissible(t)) throw std::domain_error("inadmissible multiplicity " + t.to_string(p) + " (t^4 = 1)");
  LaurentPoly den = monomial_poly(p, t.pow(2)) - monomial_poly(p, t.pow(-2));
  return Scalar(LaurentPoly::constant(p.free_rank(), Cyclotomic(p.torsion_order(), 1)), den);
}

}  // namespace gl11
