#include <doctest.h>

#include "gl11/invariant.hpp"
#include "support/generators.hpp"

using namespace gl11;

namespace {

Strand up(const std::string& c) { return {c, true}; }

// Images of every basis state under the library's transfer maps.
std::vector<StateVector> images(const Palette& p, const Diagram& d, const Coloring& colors) {
  std::vector<StateVector> out;
  const int w = static_cast<int>(d.bottom().size());
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << w); ++bits) {
    const auto states = trace(p, d, colors, StateVector::basis(p, w, bits));
    out.push_back(states.empty() ? StateVector::basis(p, w, bits) : states.back());
  }
  return out;
}

bool is_identity(const Palette& p, const std::vector<StateVector>& imgs) {
  const int w = imgs.empty() ? 0 : imgs.front().width();
  for (std::uint64_t bits = 0; bits < imgs.size(); ++bits)
    if (imgs[bits] != StateVector::basis(p, w, bits)) return false;
  return true;
}

Scalar power(const Palette& p, const GroupElement& g, long long e) { return monomial(p, g.pow(e)); }

Diagram random_multi_component(gen::Rng& rng) {
  for (;;) {
    Diagram d = rng.coin() ? gen::random_closed_diagram(rng) : rng.pick(gen::corpus()).diagram;
    if (d.components().size() >= 2) return d;
  }
}

}  // namespace

TEST_CASE("Yang-Baxter relation for random colors") {
  gen::Rng rng(21);
  const Level bottom{up("1"), up("2"), up("3")};
  for (int i = 0; i < 100; ++i) {
    const Palette& p = rng.pick(gen::palettes());
    Coloring colors;
    for (const char* l : {"1", "2", "3"}) colors[l] = gen::plain_color(rng, p);
    for (int sign : {1, -1}) {
      const Diagram lhs(bottom, {Slice::cross(0, sign), Slice::cross(1, sign), Slice::cross(0, sign)});
      const Diagram rhs(bottom, {Slice::cross(1, sign), Slice::cross(0, sign), Slice::cross(1, sign)});
      CHECK(images(p, lhs, colors) == images(p, rhs, colors));
    }
  }
}

TEST_CASE("positive and negative crossings are inverse") {
  gen::Rng rng(22);
  const Level bottom{up("1"), up("2")};
  for (int i = 0; i < 100; ++i) {
    const Palette& p = rng.pick(gen::palettes());
    const Coloring colors{{"1", gen::plain_color(rng, p)}, {"2", gen::plain_color(rng, p)}};
    CHECK(is_identity(p, images(p, Diagram(bottom, {Slice::cross(0, 1), Slice::cross(0, -1)}), colors)));
    CHECK(is_identity(p, images(p, Diagram(bottom, {Slice::cross(0, -1), Slice::cross(0, 1)}), colors)));
  }
}

TEST_CASE("zig-zags straighten to the identity") {
  gen::Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const Palette& p = rng.pick(gen::palettes());
    const Coloring colors{{"1", gen::plain_color(rng, p)}};
    const bool u = rng.coin();
    const Level bottom{{"1", u}};
    // Bending to the right and to the left of the strand.
    const Diagram right(bottom, {Slice::cup(1, u, "1"), Slice::cap(0, !u)});
    const Diagram left(bottom, {Slice::cup(0, !u, "1"), Slice::cap(1, u)});
    REQUIRE(right.top() == bottom);
    REQUIRE(left.top() == bottom);
    CHECK(is_identity(p, images(p, right, colors)));
    CHECK(is_identity(p, images(p, left, colors)));
  }
}

TEST_CASE("cut tangles act by the same scalar on both basis states") {
  gen::Rng rng(24);
  for (int i = 0; i < 100; ++i) {
    const Diagram d = rng.coin() ? gen::random_closed_diagram(rng) : rng.pick(gen::corpus()).diagram;
    const Palette& p = rng.pick(gen::palettes());
    const Coloring colors = gen::plain_coloring(rng, p, d);
    const Diagram t = normalize_crossings(cut_open(d, rng.pick(d.components())));
    const auto imgs = images(p, t, colors);
    REQUIRE(imgs.size() == 2);
    const LaurentPoly lambda = imgs[0].amplitude(0);
    StateVector e0(p, 1), e1(p, 1);
    e0.add(0, lambda);
    e1.add(1, lambda);
    CHECK(imgs[0] == e0);
    CHECK(imgs[1] == e1);
  }
}

TEST_CASE("the invariant does not depend on the cut component") {
  gen::Rng rng(25);
  for (int i = 0; i < 100; ++i) {
    const Diagram d = random_multi_component(rng);
    const Palette& p = rng.pick(gen::palettes());
    const Coloring colors = gen::plain_coloring(rng, p, d);
    const auto comps = d.components();
    const Scalar first = alexander(p, d, colors, comps.front());
    for (std::size_t k = 1; k < comps.size(); ++k) CHECK(alexander(p, d, colors, comps[k]) == first);
  }
}

TEST_CASE("shifting a weight multiplies by the colored linking factor") {
  gen::Rng rng(26);
  for (int i = 0; i < 100; ++i) {
    const Diagram d = rng.coin() ? gen::random_closed_diagram(rng) : rng.pick(gen::corpus()).diagram;
    const Palette& p = rng.pick(gen::palettes());
    Coloring colors = gen::plain_coloring(rng, p, d);
    const LinkingData ld = linking_data(d);
    const auto k = static_cast<std::size_t>(rng.range(0, static_cast<long long>(ld.surgery.size()) - 1));
    const long long J = rng.range(-3, 3);
    const std::string cut = rng.pick(ld.surgery);
    const Scalar before = alexander(p, d, colors, cut);
    Scalar factor = Scalar::one(p);
    for (std::size_t e = 0; e < ld.surgery.size(); ++e)
      factor *= power(p, colors.at(ld.surgery[e]).mul, -2 * ld.matrix[k][e] * J);
    colors[ld.surgery[k]].weight += J;
    CHECK(alexander(p, d, colors, cut) == before * factor);
  }
}

TEST_CASE("weights are irrelevant on components with trivial colored linking") {
  gen::Rng rng(27);
  const std::vector<Palette> torsion{Palette::parse("xi5"), Palette::parse("xi7")};
  int done = 0;
  for (int attempt = 0; attempt < 2000 && done < 100; ++attempt) {
    const Diagram d = rng.coin() ? gen::random_closed_diagram(rng) : rng.pick(gen::corpus()).diagram;
    const Palette& p = rng.pick(torsion);
    const int l = p.torsion_order();
    Coloring colors;
    for (const auto& c : d.components()) colors[c] = {GroupElement({0}, rng.range(1, l - 1), l), rng.range(-2, 2), false};
    const std::string k = rng.pick(d.components());
    // Search the color of k that makes its colored linking number trivial.
    bool found = false;
    for (long long e = 1; e < l && !found; ++e) {
      colors[k].mul = GroupElement({0}, e, l);
      found = clk(d, colors, k).is_identity();
    }
    if (!found) continue;
    const std::string cut = rng.pick(d.components());
    const Scalar before = alexander(p, d, colors, cut);
    colors[k].weight += rng.range(1, 4) * (rng.coin() ? 1 : -1);
    CHECK(alexander(p, d, colors, cut) == before);
    ++done;
  }
  CHECK(done >= 100);
}

TEST_CASE("a positive full twist contributes t^-2N") {
  gen::Rng rng(28);
  for (int i = 0; i < 100; ++i) {
    const Diagram d = rng.coin() ? gen::random_closed_diagram(rng) : rng.pick(gen::corpus()).diagram;
    const Palette& p = rng.pick(gen::palettes());
    const Coloring colors = gen::plain_coloring(rng, p, d);
    const gen::Site s = gen::random_site(rng, d);
    const int sign = rng.coin() ? 1 : -1;
    const Diagram twisted = insert_slices(d, s.level, curl_slices(d.levels()[s.level], s.position, sign));
    const ComponentColor& c = colors.at(d.levels()[s.level][static_cast<std::size_t>(s.position)].component);
    const std::string cut = rng.pick(d.components());
    CHECK(alexander(p, twisted, colors, cut) == alexander(p, d, colors, cut) * power(p, c.mul, -2 * c.weight * sign));
  }
}

TEST_CASE("Kirby colors are symmetric under reversal") {
  gen::Rng rng(29);
  for (int i = 0; i < 100; ++i) {
    const Diagram d = rng.coin() ? gen::random_closed_diagram(rng) : rng.pick(gen::corpus()).diagram;
    const Palette& p = rng.pick(gen::palettes());
    Coloring colors = gen::plain_coloring(rng, p, d);
    const std::string k = rng.pick(d.components());
    colors[k].kirby = true;
    const Scalar forward = alexander_kirby(p, d, colors);
    const ComponentColor c = colors[k];
    colors[k] = {c.mul.inverse(), 2 - c.weight, true};
    CHECK(alexander_kirby(p, reverse_component(d, k), colors) == forward);
  }
}

TEST_CASE("reversing a surgery component with its class leaves the invariant unchanged") {
  struct Lens {
    long long m, n;
    const char* palette;
  };
  const std::vector<Lens> lenses{{8, 1, "xi7"}, {4, 2, "xi7"}, {3, 2, "xi5"}, {2, 3, "xi5"}, {4, 1, "xi3"}, {2, 2, "xi3"}};
  gen::Rng rng(30);
  for (int i = 0; i < 100; ++i) {
    const Lens& lens = rng.pick(lenses);
    const Palette p = Palette::parse(lens.palette);
    const Presentation pres = lens_presentation(p, lens.m, lens.n);
    const auto classes = enumerate_cohomology(pres, p);
    CohomologyClass omega = rng.pick(classes);
    REQUIRE(check_compatible(pres, omega).ok());
    const Scalar value = invariant(pres, omega).value;
    const std::string k = rng.coin() ? "1" : "2";
    omega[k] = omega[k].inverse();
    const Presentation reversed{p, reverse_component(pres.diagram, k), {}, omega};
    CHECK(invariant(reversed).value == value);
  }
}

TEST_CASE("crossing normalization and double reversal preserve the data") {
  gen::Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const Diagram d = gen::random_closed_diagram(rng);
    const Diagram n = normalize_crossings(d);
    CHECK(all_crossings_upward(n));
    const LinkingData a = linking_data(d), b = linking_data(n);
    CHECK(a.surgery == b.surgery);
    CHECK(a.matrix == b.matrix);
    const std::string k = rng.pick(d.components());
    const Palette& p = rng.pick(gen::palettes());
    const Coloring colors = gen::plain_coloring(rng, p, d);
    CHECK(alexander(p, reverse_component(reverse_component(d, k), k), colors, k) == alexander(p, d, colors, k));
  }
}
