#include <doctest.h>

#include "gl11/invariant.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gl11;

namespace {

IntMatrix random_symmetric(gen::Rng& rng, std::size_t n) {
  IntMatrix m(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m[i][j] = m[j][i] = rng.range(-6, 6);
  return m;
}

long long det2(const IntMatrix& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

}  // namespace

TEST_CASE("dense oracle agrees with the state sum on the corpus") {
  gen::Rng rng(11);
  int checked = 0;
  for (int round = 0; round < 10; ++round)
    for (const auto& entry : gen::corpus()) {
      const Palette& p = rng.pick(gen::palettes());
      const Coloring colors = gen::plain_coloring(rng, p, entry.diagram);
      const std::string cut = oracle::bottom_component(normalize_crossings(entry.diagram));
      INFO(entry.name << " over " << p.spec());
      CHECK(alexander(p, entry.diagram, colors, cut) == oracle::dense_alexander(p, entry.diagram, colors));
      ++checked;
    }
  CHECK(checked >= 100);
}

TEST_CASE("dense oracle agrees with the state sum on random diagrams") {
  gen::Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const Diagram d = gen::random_closed_diagram(rng);
    const Palette& p = rng.pick(gen::palettes());
    const Coloring colors = gen::plain_coloring(rng, p, d);
    const std::string cut = oracle::bottom_component(normalize_crossings(d));
    CHECK(alexander(p, d, colors, cut) == oracle::dense_alexander(p, d, colors));
  }
}

TEST_CASE("sturm and descartes oracles on known spectra") {
  // Eigenvalues 3, -1, 0, 2.
  CHECK(oracle::sturm_positive_roots(oracle::characteristic_polynomial({{3, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 2}})) == 2);
  // Repeated eigenvalue 2 of multiplicity three.
  CHECK(oracle::sturm_positive_roots(oracle::characteristic_polynomial({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}})) == 3);
  CHECK(oracle::sturm_positive_roots(oracle::characteristic_polynomial({{8, -1}, {-1, 1}})) == 2);
  CHECK(oracle::sturm_positive_roots(oracle::characteristic_polynomial({{0, 1}, {1, 0}})) == 1);
}

TEST_CASE("sigma_plus matches the characteristic polynomial sign counts") {
  gen::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<std::size_t>(rng.range(1, 5));
    IntMatrix m = random_symmetric(rng, n);
    if (rng.range(0, 3) == 0) {
      // Force rank deficiency by duplicating a row and column.
      const std::size_t a = 0, b = n - 1;
      for (std::size_t j = 0; j < n; ++j) m[b][j] = m[a][j];
      for (std::size_t j = 0; j < n; ++j) m[j][b] = m[b][j];
      m[b][b] = m[a][a];
    }
    const auto chi = oracle::characteristic_polynomial(m);
    const long long sturm = oracle::sturm_positive_roots(chi);
    CHECK(sturm == oracle::descartes_sign_changes(chi));
    CHECK(sigma_plus(m) == sturm);
  }
}

TEST_CASE("cohomology enumeration matches brute force") {
  gen::Rng rng(14);
  const std::vector<Palette> torsion{Palette::parse("xi3"), Palette::parse("xi5"), Palette::parse("xi7")};
  int compared = 0;
  for (int i = 0; i < 400 && compared < 100; ++i) {
    const Palette& p = rng.pick(torsion);
    Diagram d = rng.coin() ? twisted_chain(rng.range(-9, 9), rng.range(-9, 9), rng.range(-3, 3))
                           : gen::random_closed_diagram(rng);
    const Presentation pres{p, d, {}, {}};
    const LinkingData ld = linking_data(d);
    if (oracle::characteristic_polynomial(ld.matrix).front() == 0) {
      CHECK_THROWS_AS(enumerate_cohomology(pres, p), UnsupportedError);
      continue;
    }
    const auto expected = oracle::brute_force_classes(ld.matrix, p.torsion_order());
    std::vector<std::vector<long long>> got;
    for (const auto& omega : enumerate_cohomology(pres, p)) {
      std::vector<long long> e;
      for (const auto& label : ld.surgery) e.push_back(omega.at(label).torsion_exponent());
      got.push_back(e);
    }
    CHECK(got == expected);
    ++compared;
  }
  CHECK(compared >= 100);
}

TEST_CASE("lens closed form matches the independent formula") {
  for (const auto& [m, n] : std::vector<std::pair<long long, long long>>{{8, 1}, {4, 2}, {3, 2}, {2, 3}, {2, 4}, {-2, 3}}) {
    const long long order = m * n - 1 < 0 ? 1 - m * n : m * n - 1;
    for (int l : {3, 5, 7}) {
      if (order % l != 0) continue;
      const Palette p = Palette::parse("xi" + std::to_string(l));
      const IntMatrix lk{{m, -1}, {-1, n}};
      REQUIRE(det2(lk) == m * n - 1);
      const long long sigma = oracle::sturm_positive_roots(oracle::characteristic_polynomial(lk));
      for (const auto& e : oracle::brute_force_classes(lk, l)) {
        const GroupElement u({0}, e[0], l), v({0}, e[1], l);
        if (u.is_identity() || v.is_identity()) continue;
        CHECK(lens_closed_form(p, m, n, u, v) == oracle::lens_formula(p, sigma, u, v));
      }
    }
  }
}

TEST_CASE("dense oracle reproduces the worked Hopf example") {
  const Palette p = Palette::parse("vars(u,v)");
  gen::Rng rng(15);
  for (int i = 0; i < 20; ++i) {
    const long long U = rng.range(-4, 4), V = rng.range(-4, 4);
    Coloring colors;
    colors["u"] = {GroupElement::parse(p, "u"), U, false};
    colors["v"] = {GroupElement::parse(p, "v"), V, false};
    const Scalar neg = -monomial(p, GroupElement({2 * V, 2 * U}, 0, 0));
    const Scalar pos = monomial(p, GroupElement({-2 * V, -2 * U}, 0, 0));
    CHECK(oracle::dense_alexander(p, hopf_with_twists(HopfVariant::Negative, 0, 0, "u", "v"), colors) == neg);
    CHECK(oracle::dense_alexander(p, hopf_with_twists(HopfVariant::Negative, 0, 0, "v", "u"), colors) == neg);
    CHECK(oracle::dense_alexander(p, hopf_with_twists(HopfVariant::Positive, 0, 0, "u", "v"), colors) == pos);
  }
}
