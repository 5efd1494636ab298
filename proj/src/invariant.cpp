#include "gl11/invariant.hpp"

#include <algorithm>
#include <sstream>

namespace gl11 {

long long sigma_plus(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("sigma_plus: matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i]) throw std::invalid_argument("sigma_plus: matrix is not symmetric");

  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(static_cast<long>(m[i][j]));

  long long positive = 0;
  while (!a.empty()) {
    const std::size_t k = a.size();
    std::size_t piv = k;
    for (std::size_t i = 0; i < k; ++i)
      if (a[i][i] != 0) {
        piv = i;
        break;
      }
    if (piv < k) {
      const Rational p = a[piv][piv];
      if (p > 0) ++positive;
      std::vector<std::vector<Rational>> b;
      for (std::size_t i = 0; i < k; ++i) {
        if (i == piv) continue;
        std::vector<Rational> row;
        for (std::size_t j = 0; j < k; ++j) {
          if (j == piv) continue;
          row.push_back(a[i][j] - a[i][piv] * a[piv][j] / p);
        }
        b.push_back(std::move(row));
      }
      a = std::move(b);
      continue;
    }
    // Zero diagonal: pivot on a 2x2 block [[0,c],[c,0]], which contributes
    // one positive and one negative eigenvalue.
    std::size_t r = k, s = k;
    for (std::size_t i = 0; i < k && r == k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (a[i][j] != 0) {
          r = i;
          s = j;
          break;
        }
    if (r == k) break;  // the rest is the zero matrix
    ++positive;
    const Rational c = a[r][s];
    std::vector<std::vector<Rational>> b;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == r || i == s) continue;
      std::vector<Rational> row;
      for (std::size_t j = 0; j < k; ++j) {
        if (j == r || j == s) continue;
        // Schur complement with inverse block [[0,1/c],[1/c,0]].
        row.push_back(a[i][j] - (a[i][r] * a[s][j] + a[i][s] * a[r][j]) / c);
      }
      b.push_back(std::move(row));
    }
    a = std::move(b);
  }
  return positive;
}

// ---------------------------------------------------------------------------

Role Presentation::role(const std::string& label) const {
  auto it = roles.find(label);
  return it == roles.end() ? Role::Surgery : it->second;
}

std::vector<std::string> Presentation::surgery_components() const {
  std::vector<std::string> out;
  for (const auto& c : diagram.components())
    if (role(c) == Role::Surgery) out.push_back(c);
  return out;
}

std::vector<std::string> Presentation::graph_components() const {
  std::vector<std::string> out;
  for (const auto& c : diagram.components())
    if (role(c) == Role::Graph) out.push_back(c);
  return out;
}

Presentation presentation_from_file(const DiagramFile& f) {
  return Presentation{f.palette, f.diagram, f.roles, f.omega};
}

Presentation lens_presentation(const Palette& p, long long m, long long n) {
  return Presentation{p, lens_chain(m, n), {}, {}};
}

std::string CompatibilityReport::summary() const {
  if (ok()) return "compatible";
  std::string s;
  for (const auto& p : problems) s += (s.empty() ? "" : "; ") + p;
  return s;
}

IncompatibleError::IncompatibleError(CompatibilityReport r)
    : std::runtime_error("incompatible presentation: " + r.summary()), report_(std::move(r)) {}

CompatibilityReport check_compatible(const Presentation& pres, const CohomologyClass& omega) {
  CompatibilityReport rep;
  const auto& p = pres.palette;
  if (pres.diagram.components().empty()) {
    rep.computable = false;
    rep.problems.push_back("presentation not computable: the link is empty");
    return rep;
  }
  const LinkingData lk = linking_data(pres.diagram, pres.roles);
  for (const auto& c : lk.surgery) {
    if (!omega.count(c)) {
      rep.relations_hold = false;
      rep.problems.push_back("no cohomology value for surgery component '" + c + "'");
    }
  }
  if (!rep.relations_hold) return rep;

  for (std::size_t i = 0; i < lk.surgery.size(); ++i) {
    GroupElement value(p);
    std::string rel;
    for (std::size_t j = 0; j < lk.surgery.size(); ++j) {
      const long long e = lk.matrix[i][j];
      if (e == 0) continue;
      value = value * omega.at(lk.surgery[j]).pow(e);
      if (!rel.empty()) rel += "*";
      rel += "w(" + lk.surgery[j] + ")";
      if (e != 1) rel += "^" + std::to_string(e);
    }
    if (!value.is_identity()) {
      rep.relations_hold = false;
      rep.problems.push_back("relation " + (rel.empty() ? std::string("1") : rel) + " = 1 violated for component '" +
                             lk.surgery[i] + "' (value " + value.to_string(p) + ")");
    }
  }
  for (const auto& c : lk.surgery) {
    if (omega.at(c).is_identity()) {
      rep.computable = false;
      rep.problems.push_back("presentation not computable: meridian of '" + c + "' maps to the identity");
    } else if (!is_color_admissible(omega.at(c))) {
      rep.computable = false;
      rep.problems.push_back("presentation not computable: meridian image of '" + c + "' has order dividing 4");
    }
  }
  return rep;
}

InvariantResult invariant(const Presentation& pres, const CohomologyClass& omega) {
  const auto graph = pres.graph_components();
  if (!graph.empty())
    throw UnsupportedError("graph component '" + graph.front() +
                           "' present: evaluating embedded graphs needs trivalent vertex weights, which are not available");
  CompatibilityReport rep = check_compatible(pres, omega);
  if (!rep.ok()) throw IncompatibleError(std::move(rep));

  const auto& p = pres.palette;
  Coloring colors;
  for (const auto& c : pres.surgery_components()) colors[c] = ComponentColor{omega.at(c), 1, true};
  InvariantResult res;
  res.unnormalized = alexander_kirby(p, pres.diagram, colors, std::nullopt, &res.terms);
  const LinkingData lk = linking_data(pres.diagram, pres.roles);
  res.r = static_cast<int>(lk.surgery.size());
  res.sigma_plus = sigma_plus(lk.matrix);
  long long norm = 1LL << res.r;
  if (res.sigma_plus % 2 != 0) norm = -norm;
  res.value = res.unnormalized / Scalar::from_integer(p, norm);
  return res;
}

Scalar lens_closed_form(const Palette& p, long long m, long long n, const GroupElement& u, const GroupElement& v) {
  CompatibilityReport rep;
  if (!(u.pow(m) * v.inverse()).is_identity()) {
    rep.relations_hold = false;
    rep.problems.push_back("relation u^" + std::to_string(m) + "*v^-1 = 1 violated (value " +
                           (u.pow(m) * v.inverse()).to_string(p) + ")");
  }
  if (!(u.inverse() * v.pow(n)).is_identity()) {
    rep.relations_hold = false;
    rep.problems.push_back("relation u^-1*v^" + std::to_string(n) + " = 1 violated (value " +
                           (u.inverse() * v.pow(n)).to_string(p) + ")");
  }
  if (!rep.ok()) throw IncompatibleError(std::move(rep));
  const long long s = sigma_plus({{m, -1}, {-1, n}});
  const Scalar dd = d(p, u) * d(p, v);
  return s % 2 == 0 ? -dd : dd;
}

namespace {

long long mod(long long a, long long l) {
  long long r = a % l;
  return r < 0 ? r + l : r;
}

long long inverse_mod(long long a, long long l) {
  long long r = 1, b = mod(a, l), e = l - 2;
  while (e > 0) {
    if (e & 1) r = r * b % l;
    b = b * b % l;
    e >>= 1;
  }
  return r;
}

bool singular_over_q(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(static_cast<long>(m[i][j]));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return true;
    std::swap(a[piv], a[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return false;
}

}  // namespace

std::vector<CohomologyClass> enumerate_cohomology(const Presentation& pres, const Palette& p) {
  if (!p.has_torsion()) throw UnsupportedError("enumeration needs a palette with a torsion generator");
  const LinkingData lk = linking_data(pres.diagram, pres.roles);
  if (singular_over_q(lk.matrix))
    throw UnsupportedError("linking matrix is singular: H1 has a free part, classes cannot be enumerated over torsion");
  const long long l = p.torsion_order();
  const std::size_t n = lk.surgery.size();

  // Row-reduce the linking matrix over Z/l.
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = mod(lk.matrix[i][j], l);
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < n; ++c) {
    std::size_t piv = row;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[row]);
    const long long inv = inverse_mod(a[row][c], l);
    for (auto& x : a[row]) x = x * inv % l;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][c] == 0) continue;
      const long long f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) a[r][k] = mod(a[r][k] - f * a[row][k], l);
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(c)) == pivot_col.end()) free_cols.push_back(c);

  std::vector<std::vector<long long>> solutions;
  std::vector<long long> params(free_cols.size(), 0);
  while (true) {
    std::vector<long long> x(n, 0);
    for (std::size_t i = 0; i < free_cols.size(); ++i) x[free_cols[i]] = params[i];
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
      long long v = 0;
      for (std::size_t f : free_cols) v -= a[r][f] * x[f];
      x[static_cast<std::size_t>(pivot_col[r])] = mod(v, l);
    }
    if (std::any_of(x.begin(), x.end(), [](long long e) { return e != 0; })) solutions.push_back(x);
    std::size_t i = 0;
    while (i < params.size() && ++params[i] == l) params[i++] = 0;
    if (i == params.size()) break;
  }
  std::sort(solutions.begin(), solutions.end());

  std::vector<CohomologyClass> out;
  for (const auto& x : solutions) {
    CohomologyClass w;
    for (std::size_t i = 0; i < n; ++i)
      w.emplace(lk.surgery[i], GroupElement(std::vector<long long>(static_cast<std::size_t>(p.free_rank()), 0), x[i], p.torsion_order()));
    out.push_back(std::move(w));
  }
  return out;
}

GroupElement clk(const Diagram& d, const Coloring& colors, const std::string& k) {
  if (!d.has_component(k)) throw DiagramError("unknown component '" + k + "'");
  std::optional<GroupElement> acc;
  for (const auto& e : d.components()) {
    auto it = colors.find(e);
    if (it == colors.end()) throw DiagramError("component '" + e + "' has no color");
    const GroupElement term = it->second.mul.pow(linking_number(d, k, e));
    acc = acc ? *acc * term : term;
  }
  return *acc;
}

std::string render_class(const Palette& p, const CohomologyClass& omega) {
  std::string s = "(";
  bool first = true;
  std::vector<std::string> labels;
  for (const auto& [label, g] : omega) labels.push_back(label);
  std::sort(labels.begin(), labels.end(), label_less);
  for (const auto& label : labels) {
    s += (first ? "" : ", ") + omega.at(label).to_string(p);
    first = false;
  }
  return s + ")";
}

}  // namespace gl11
