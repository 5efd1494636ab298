#include "support/oracles.hpp"

#include <stdexcept>

namespace gl11::oracle {

namespace {

using Vec = std::vector<LaurentPoly>;
// local[in][out] with the local state read as left + 2 * right.
using Local = std::vector<std::vector<LaurentPoly>>;

LaurentPoly zero(const Palette& p) { return LaurentPoly(p.free_rank(), p.torsion_order()); }

LaurentPoly mono(const Palette& p, const GroupElement& g, int coeff = 1) {
  LaurentPoly m = monomial_poly(p, g);
  return coeff < 0 ? -m : m;
}

const ComponentColor& color(const Coloring& c, const std::string& label) {
  auto it = c.find(label);
  if (it == c.end()) throw std::runtime_error("oracle: no color for " + label);
  return it->second;
}

Local empty_local(const Palette& p, int ins, int outs) {
  return Local(std::size_t{1} << ins, std::vector<LaurentPoly>(std::size_t{1} << outs, zero(p)));
}

// Weight table in the (u,U), (v,V) notation: v is the bottom-left strand,
// u the bottom-right one.
Local crossing(const Palette& p, bool positive, const ComponentColor& left, const ComponentColor& right) {
  const GroupElement& v = left.mul;
  const GroupElement& u = right.mul;
  const long long V = left.weight, U = right.weight;
  auto vu = [&](long long ev, long long eu, int c = 1) { return mono(p, v.pow(ev) * u.pow(eu), c); };
  Local m = empty_local(p, 2, 2);
  const int e00 = 0, e10 = 1, e01 = 2, e11 = 3;
  if (positive) {
    m[e00][e00] = vu(1 - U, 1 - V);
    m[e01][e10] = vu(-1 - U, 1 - V);
    m[e10][e01] = vu(1 - U, -1 - V);
    m[e01][e01] = vu(3 - U, -1 - V) - vu(-1 - U, -1 - V);
    m[e11][e11] = vu(-1 - U, -1 - V, -1);
  } else {
    m[e00][e00] = vu(U - 1, V - 1);
    m[e01][e10] = vu(U + 1, V - 1);
    m[e10][e01] = vu(U - 1, V + 1);
    m[e10][e10] = vu(U - 1, V - 1) - vu(U - 1, V + 3);
    m[e11][e11] = vu(U + 1, V + 1, -1);
  }
  return m;
}

Local cup(const Palette& p, bool right_up, const GroupElement& u) {
  Local m = empty_local(p, 0, 2);
  const GroupElement one(p);
  if (right_up) {
    m[0][0] = mono(p, u.pow(-2));
    m[0][3] = mono(p, one);
  } else {
    m[0][0] = mono(p, one);
    m[0][3] = mono(p, u.pow(2), -1);
  }
  return m;
}

Local cap(const Palette& p, bool right_up, const GroupElement& u) {
  Local m = empty_local(p, 2, 0);
  const GroupElement one(p);
  if (right_up) {
    m[0][0] = mono(p, one);
    m[3][0] = mono(p, u.pow(-2), -1);
  } else {
    m[0][0] = mono(p, u.pow(2));
    m[3][0] = mono(p, one);
  }
  return m;
}

Vec apply(const Palette& p, const Vec& in, int width, int pos, int ins, int outs, const Local& local) {
  const int new_width = width - ins + outs;
  Vec out(std::size_t{1} << new_width, zero(p));
  const std::size_t low_count = std::size_t{1} << pos;
  const std::size_t high_count = std::size_t{1} << (width - pos - ins);
  for (std::size_t high = 0; high < high_count; ++high)
    for (std::size_t i = 0; i < (std::size_t{1} << ins); ++i)
      for (std::size_t low = 0; low < low_count; ++low) {
        const LaurentPoly& a = in[low + (i << pos) + (high << (pos + ins))];
        if (a.is_zero()) continue;
        for (std::size_t o = 0; o < (std::size_t{1} << outs); ++o) {
          const LaurentPoly& w = local[i][o];
          if (!w.is_zero()) out[low + (o << pos) + (high << (pos + outs))] += a * w;
        }
      }
  return out;
}

Vec run(const Palette& p, const Diagram& d, const Coloring& colors, Vec state) {
  int width = static_cast<int>(d.bottom().size());
  for (std::size_t k = 0; k < d.slices().size(); ++k) {
    const Slice& s = d.slices()[k];
    const Level& below = d.levels()[k];
    switch (s.kind) {
      case SliceKind::Cup:
        state = apply(p, state, width, s.position, 0, 2, cup(p, s.right_up, color(colors, s.label).mul));
        width += 2;
        break;
      case SliceKind::Cap:
        state = apply(p, state, width, s.position, 2, 0,
                      cap(p, s.right_up, color(colors, below[static_cast<std::size_t>(s.position)].component).mul));
        width -= 2;
        break;
      default: {
        const Strand& l = below[static_cast<std::size_t>(s.position)];
        const Strand& r = below[static_cast<std::size_t>(s.position) + 1];
        if (!l.up || !r.up) throw std::runtime_error("oracle: crossing is not upward");
        state = apply(p, state, width, s.position, 2, 2,
                      crossing(p, s.kind == SliceKind::CrossPos, color(colors, l.component), color(colors, r.component)));
      }
    }
  }
  return state;
}

}  // namespace

std::string bottom_component(const Diagram& d) {
  if (d.slices().empty() || d.slices().front().kind != SliceKind::Cup) throw std::runtime_error("oracle: no bottom cup");
  return d.slices().front().label;
}

std::vector<std::vector<LaurentPoly>> dense_matrix(const Palette& p, const Diagram& d, const Coloring& colors) {
  const std::size_t n = std::size_t{1} << d.bottom().size();
  std::vector<std::vector<LaurentPoly>> cols;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, zero(p));
    e[i] = mono(p, GroupElement(p));
    cols.push_back(run(p, d, colors, e));
  }
  return cols;
}

Scalar dense_alexander(const Palette& p, const Diagram& closed, const Coloring& colors) {
  const Diagram nd = normalize_crossings(closed);
  const std::string comp = bottom_component(nd);
  const Slice& first = nd.slices().front();
  // The first cup creates strands 0 and 1. Keep strand 0 as the incoming end
  // and regrow strand 1 from a cup placed to its right; the new right leg runs
  // up past everything and becomes the outgoing end.
  const bool left_up = !first.right_up;
  std::vector<Slice> slices{Slice::cup(1, left_up, comp)};
  slices.insert(slices.end(), nd.slices().begin() + 1, nd.slices().end());
  const Diagram tangle(Level{Strand{comp, left_up}}, slices);
  if (!tangle.is_one_one_tangle()) throw std::runtime_error("oracle: bottom cut did not give a 1-1 tangle");
  const auto m = dense_matrix(p, tangle, colors);
  if (!m[0][1].is_zero() || !m[1][0].is_zero() || m[0][0] != m[1][1])
    throw std::runtime_error("oracle: tangle is not scalar");
  return Scalar(m[0][0]) * gl11::d(p, color(colors, comp).mul);
}

std::vector<mpq_class> characteristic_polynomial(const IntMatrix& a) {
  const std::size_t n = a.size();
  using Mat = std::vector<std::vector<mpq_class>>;
  Mat A(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = static_cast<long>(a[i][j]);
  std::vector<mpq_class> c(n + 1);
  c[n] = 1;
  Mat M(n, std::vector<mpq_class>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    Mat next(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) next[i][j] += A[i][l] * M[l][j];
      next[i][i] += c[n - k + 1];
    }
    M = std::move(next);
    mpq_class tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += A[i][l] * M[l][i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

namespace {

using Poly = std::vector<mpq_class>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly derivative(const Poly& f) {
  Poly g;
  for (std::size_t i = 1; i < f.size(); ++i) g.push_back(f[i] * static_cast<long>(i));
  trim(g);
  return g;
}

Poly remainder(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const mpq_class q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
    trim(a);
  }
  return a;
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

int sign(const mpq_class& q) { return sgn(q); }

long long variations(const std::vector<int>& signs) {
  long long v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Distinct roots in (0, inf) of f with f(0) != 0.
long long distinct_positive(const Poly& f) {
  if (f.size() <= 1) return 0;
  std::vector<Poly> chain{f, derivative(f)};
  while (chain.back().size() > 1) {
    Poly r = remainder(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  std::vector<int> at_zero, at_inf;
  for (const Poly& g : chain) {
    at_zero.push_back(sign(g.front()));
    at_inf.push_back(sign(g.back()));
  }
  return variations(at_zero) - variations(at_inf);
}

}  // namespace

long long sturm_positive_roots(Poly f) {
  trim(f);
  while (!f.empty() && f.front() == 0) f.erase(f.begin());
  long long total = 0;
  while (f.size() > 1) {
    total += distinct_positive(f);
    f = gcd(f, derivative(f));
  }
  return total;
}

long long descartes_sign_changes(const Poly& f) {
  std::vector<int> s;
  for (const auto& c : f) s.push_back(sign(c));
  return variations(s);
}

std::vector<std::vector<long long>> brute_force_classes(const IntMatrix& lk, int l) {
  const std::size_t r = lk.size();
  std::vector<std::vector<long long>> out;
  std::vector<long long> e(r, 0);
  long long total = 1;
  for (std::size_t i = 0; i < r; ++i) total *= l;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (std::size_t i = r; i-- > 0;) {
      e[i] = c % l;
      c /= l;
    }
    bool nonzero = false, solves = true;
    for (auto x : e) nonzero = nonzero || x != 0;
    for (std::size_t i = 0; i < r && solves; ++i) {
      long long s = 0;
      for (std::size_t j = 0; j < r; ++j) s += lk[i][j] * e[j];
      solves = ((s % l) + l) % l == 0;
    }
    if (nonzero && solves) out.push_back(e);
  }
  return out;
}

Scalar lens_formula(const Palette& p, long long sigma, const GroupElement& u, const GroupElement& v) {
  const Scalar du = monomial(p, u.pow(2)) - monomial(p, u.pow(-2));
  const Scalar dv = monomial(p, v.pow(2)) - monomial(p, v.pow(-2));
  const Scalar sign = Scalar::from_integer(p, sigma % 2 == 0 ? -1 : 1);
  return sign / (du * dv);
}

}  // namespace gl11::oracle
