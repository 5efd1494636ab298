#include "gl11/evaluator.hpp"

#include <sstream>

namespace gl11 {

StateVector::StateVector(const Palette& p, int width)
    : nvars_(p.free_rank()), order_(p.torsion_order()), width_(width) {
  if (width < 0 || width > 63) throw EvaluationError("state width " + std::to_string(width) + " unsupported");
}

StateVector StateVector::basis(const Palette& p, int width, std::uint64_t bits) {
  StateVector v(p, width);
  v.add(bits, LaurentPoly::constant(p.free_rank(), Cyclotomic(p.torsion_order(), 1)));
  return v;
}

LaurentPoly StateVector::amplitude(std::uint64_t bits) const {
  auto it = amps_.find(bits);
  return it == amps_.end() ? LaurentPoly(nvars_, order_) : it->second;
}

void StateVector::add(std::uint64_t bits, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = amps_.emplace(bits, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) amps_.erase(it);
  }
}

std::string StateVector::to_string(const Palette& p) const {
  if (amps_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [bits, c] : amps_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string(p.free_names(), p.torsion_name()) << ")|";
    for (int i = 0; i < width_; ++i) os << ((bits >> i) & 1U);
    os << ">";
  }
  return os.str();
}

namespace {

const ComponentColor& color_of(const Coloring& colors, const std::string& label) {
  auto it = colors.find(label);
  if (it == colors.end()) throw EvaluationError("component '" + label + "' has no color");
  return it->second;
}

LaurentPoly signed_monomial(const Palette& p, const GroupElement& g, int sign) {
  LaurentPoly m = monomial_poly(p, g);
  if (sign < 0) m = -m;
  return m;
}

std::uint64_t insert_pair(std::uint64_t bits, int p, std::uint64_t pair) {
  const std::uint64_t low = bits & ((std::uint64_t{1} << p) - 1);
  const std::uint64_t high = bits >> p;
  return low | (pair << p) | (high << (p + 2));
}

std::uint64_t remove_pair(std::uint64_t bits, int p) {
  const std::uint64_t low = bits & ((std::uint64_t{1} << p) - 1);
  return low | ((bits >> (p + 2)) << p);
}

// Weights of one crossing: out[in][out_pair] for pair = left + 2*right.
struct CrossingMatrix {
  std::optional<LaurentPoly> entry[4][4];
};

CrossingMatrix crossing_matrix(const Palette& p, bool positive, const ComponentColor& left, const ComponentColor& right) {
  const GroupElement& a = left.mul;
  const GroupElement& b = right.mul;
  const long long A = left.weight, B = right.weight;
  auto m = [&](long long ea, long long eb, int sign = 1) { return signed_monomial(p, a.pow(ea) * b.pow(eb), sign); };
  CrossingMatrix c;
  // pair encoding: 0 = (0,0), 1 = (1,0), 2 = (0,1), 3 = (1,1) as (left,right).
  if (positive) {
    c.entry[0][0] = m(1 - B, 1 - A);
    c.entry[2][1] = m(-1 - B, 1 - A);
    c.entry[2][2] = m(3 - B, -1 - A) - m(-1 - B, -1 - A);
    c.entry[1][2] = m(1 - B, -1 - A);
    c.entry[3][3] = m(-1 - B, -1 - A, -1);
  } else {
    c.entry[0][0] = m(B - 1, A - 1);
    c.entry[2][1] = m(B + 1, A - 1);
    c.entry[1][2] = m(B - 1, A + 1);
    c.entry[1][1] = m(B - 1, A - 1) - m(B - 1, A + 3);
    c.entry[3][3] = m(B + 1, A + 1, -1);
  }
  return c;
}

}  // namespace

StateVector transfer(const Palette& p, const Slice& s, const Level& below, const Coloring& colors, const StateVector& v) {
  if (v.width() != static_cast<int>(below.size()))
    throw EvaluationError("state width does not match the strands below the slice");
  const int pos = s.position;
  const auto up = static_cast<std::size_t>(pos);
  const int nv = p.free_rank();
  const int ord = p.torsion_order();
  switch (s.kind) {
    case SliceKind::Cup: {
      const GroupElement& u = color_of(colors, s.label).mul;
      LaurentPoly w00, w11;
      if (s.right_up) {
        w00 = monomial_poly(p, u.pow(-2));
        w11 = LaurentPoly::constant(nv, Cyclotomic(ord, 1));
      } else {
        w00 = LaurentPoly::constant(nv, Cyclotomic(ord, 1));
        w11 = -monomial_poly(p, u.pow(2));
      }
      StateVector out(p, v.width() + 2);
      for (const auto& [bits, c] : v.amplitudes()) {
        out.add(insert_pair(bits, pos, 0), c * w00);
        out.add(insert_pair(bits, pos, 3), c * w11);
      }
      return out;
    }
    case SliceKind::Cap: {
      const GroupElement& u = color_of(colors, below.at(up).component).mul;
      LaurentPoly w00, w11;
      if (s.right_up) {
        w00 = LaurentPoly::constant(nv, Cyclotomic(ord, 1));
        w11 = -monomial_poly(p, u.pow(-2));
      } else {
        w00 = monomial_poly(p, u.pow(2));
        w11 = LaurentPoly::constant(nv, Cyclotomic(ord, 1));
      }
      StateVector out(p, v.width() - 2);
      for (const auto& [bits, c] : v.amplitudes()) {
        const std::uint64_t pair = (bits >> pos) & 3U;
        if (pair == 0)
          out.add(remove_pair(bits, pos), c * w00);
        else if (pair == 3)
          out.add(remove_pair(bits, pos), c * w11);
      }
      return out;
    }
    default: {
      const Strand& l = below.at(up);
      const Strand& r = below.at(up + 1);
      if (!l.up || !r.up) throw EvaluationError("crossing with a downward strand; normalize crossings first");
      const CrossingMatrix m =
          crossing_matrix(p, s.kind == SliceKind::CrossPos, color_of(colors, l.component), color_of(colors, r.component));
      StateVector out(p, v.width());
      const std::uint64_t mask = ~(std::uint64_t{3} << pos);
      for (const auto& [bits, c] : v.amplitudes()) {
        const std::uint64_t in = (bits >> pos) & 3U;
        for (std::uint64_t o = 0; o < 4; ++o) {
          const auto& w = m.entry[in][o];
          if (w) out.add((bits & mask) | (o << pos), c * *w);
        }
      }
      return out;
    }
  }
}

std::vector<StateVector> trace(const Palette& p, const Diagram& d, const Coloring& colors, const StateVector& input) {
  std::vector<StateVector> out;
  out.reserve(d.slices().size());
  StateVector cur = input;
  for (std::size_t i = 0; i < d.slices().size(); ++i) {
    cur = transfer(p, d.slices()[i], d.levels()[i], colors, cur);
    out.push_back(cur);
  }
  return out;
}

namespace {

LaurentPoly run(const Palette& p, const Diagram& d, const Coloring& colors, std::uint64_t state) {
  StateVector cur = StateVector::basis(p, 1, state);
  for (std::size_t i = 0; i < d.slices().size(); ++i) cur = transfer(p, d.slices()[i], d.levels()[i], colors, cur);
  for (const auto& [bits, c] : cur.amplitudes())
    if (bits != state)
      throw EvaluationError("tangle morphism is not scalar: e" + std::to_string(state) + " maps onto e" +
                            std::to_string(bits));
  return cur.amplitude(state);
}

}  // namespace

Scalar evaluate_tangle(const Palette& p, const Diagram& d, const Coloring& colors) {
  if (!d.is_one_one_tangle()) throw EvaluationError("evaluate_tangle needs a 1-1 tangle");
  for (const auto& [label, c] : colors)
    if (c.kirby) throw EvaluationError("component '" + label + "' carries a Kirby color; expand it first");
  const Diagram nd = normalize_crossings(d);
  if (nd.max_width() > 63) throw EvaluationError("diagram too wide");
  const LaurentPoly e0 = run(p, nd, colors, 0);
  const LaurentPoly e1 = run(p, nd, colors, 1);
  if (e0 != e1) throw EvaluationError("tangle morphism is not scalar: e0 and e1 channels differ");
  return Scalar(e0);
}

Scalar alexander(const Palette& p, const Diagram& d, const Coloring& colors, const std::string& cut) {
  if (d.slices().empty()) throw EvaluationError("empty diagram");
  if (!d.is_closed()) throw EvaluationError("alexander needs a closed diagram");
  const Scalar lambda = evaluate_tangle(p, cut_open(d, cut), colors);
  return lambda * gl11::d(p, color_of(colors, cut).mul);
}

Scalar alexander_kirby(const Palette& p, const Diagram& d, const Coloring& colors, const std::optional<std::string>& cut,
                       std::size_t* terms) {
  if (d.slices().empty()) throw EvaluationError("empty diagram");
  const auto comps = d.components();
  std::vector<std::string> kirby;
  std::optional<std::string> plain_cut = cut;
  for (const auto& c : comps) {
    const ComponentColor& col = color_of(colors, c);
    if (!is_color_admissible(col.mul)) throw EvaluationError("inadmissible multiplicity on '" + c + "'");
    if (col.kirby)
      kirby.push_back(c);
    else if (!plain_cut)
      plain_cut = c;
  }
  if (cut && color_of(colors, *cut).kirby && kirby.size() != comps.size())
    throw EvaluationError("cut component '" + *cut + "' is Kirby-colored while plain components exist");
  if (kirby.size() > 20) throw EvaluationError("too many Kirby-colored components");

  const std::size_t n = std::size_t{1} << kirby.size();
  if (terms) *terms = n;
  Scalar total = Scalar::zero(p);
  for (std::size_t mask = 0; mask < n; ++mask) {
    Diagram term = d;
    Coloring tc = colors;
    Scalar coeff = Scalar::one(p);
    for (std::size_t i = 0; i < kirby.size(); ++i) {
      ComponentColor& c = tc[kirby[i]];
      const Scalar dt = gl11::d(p, c.mul);
      if (mask >> i & 1U) {
        term = reverse_component(term, kirby[i]);
        c = ComponentColor{c.mul.inverse(), 2 - c.weight, false};
        coeff *= -dt;
      } else {
        c.kirby = false;
        coeff *= dt;
      }
    }
    const std::string cut_here = plain_cut ? *plain_cut : comps.front();
    total += coeff * alexander(p, term, tc, cut_here);
  }
  return total;
}

}  // namespace gl11
