// Acceptance runner: one PASS/FAIL line per criterion, with wall time.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <chrono>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>

#include "gl11/kirby_suite.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace gl11;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

// Runs the doctest cases matching `filter` quietly; fails if none ran.
Outcome run_cases(const std::string& filter) {
  std::ostringstream log;
  doctest::Context ctx;
  ctx.setOption("test-case", filter.c_str());
  ctx.setCout(&log);
  const int rc = ctx.run();
  std::smatch m;
  const std::string text = log.str();
  const std::regex summary(R"(test cases:\s*(\d+) \|\s*(\d+) passed)");
  Outcome out;
  if (!std::regex_search(text, m, summary) || m[1] == "0") {
    out.ok = false;
    out.note = "no test cases matched " + filter;
  } else {
    out.ok = rc == 0 && m[1] == m[2];
    out.note = std::string(m[2]) + "/" + std::string(m[1]) + " suites";
  }
  if (!out.ok) std::cerr << text;
  return out;
}

Outcome hopf_golden() {
  const Palette p = Palette::parse("vars(u,v)");
  gen::Rng rng(101);
  for (int i = 0; i < 10; ++i) {
    const long long U = rng.range(-5, 5), V = rng.range(-5, 5);
    const Coloring colors{{"u", {GroupElement::parse(p, "u"), U, false}}, {"v", {GroupElement::parse(p, "v"), V, false}}};
    const Scalar neg = -monomial(p, GroupElement({2 * V, 2 * U}, 0, 0));
    const Scalar pos = monomial(p, GroupElement({-2 * V, -2 * U}, 0, 0));
    for (const char* cut : {"u", "v"}) {
      if (alexander(p, hopf_with_twists(HopfVariant::Negative, 0, 0, "u", "v"), colors, cut) != neg)
        return {false, "first row differs"};
      if (alexander(p, hopf_with_twists(HopfVariant::Positive, 0, 0, "u", "v"), colors, cut) != pos)
        return {false, "second row differs"};
    }
  }
  Outcome lines = run_cases("worked Hopf example*");
  lines.note = "golden values on 10 weight pairs, intermediate lines " + lines.note;
  return lines;
}

Outcome blow_up_factors() {
  gen::Rng rng(102);
  const std::vector<Palette> palettes{Palette::parse("qt"), Palette::parse("xi7")};
  int checked = 0;
  for (int i = 0; i < 20; ++i) {
    const Palette& p = palettes[static_cast<std::size_t>(i % 2)];
    const Diagram d = rng.pick(gen::corpus()).diagram;
    Coloring colors = gen::plain_coloring(rng, p, d);
    const gen::Site site = gen::random_site(rng, d);
    const std::string strand = d.levels()[site.level][static_cast<std::size_t>(site.position)].component;
    const GroupElement t = gen::admissible_element(rng, p);
    colors[strand] = {t, rng.range(-3, 3), false};
    const long long J = rng.range(-3, 3);
    const Scalar before = alexander(p, d, colors, strand);
    if (before.is_zero()) {
      --i;
      continue;
    }
    for (int sign : {1, -1}) {
      const BlowUp b = blow_up(d, site.level, site.position, sign, "meridian");
      Coloring after = colors;
      after["meridian"] = {t.pow(-static_cast<long long>(b.linking) * sign), J, true};
      const Scalar factor = alexander_kirby(p, b.diagram, after, strand) / before;
      if (factor != Scalar::from_integer(p, sign > 0 ? -2 : 2))
        return {false, "factor " + factor.to_string(p) + " for sign " + std::to_string(sign)};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " blow-ups, factor -2 for +1 and +2 for -1"};
}

Outcome lens_sweep() {
  struct Case {
    long long m, n;
  };
  int classes = 0;
  std::ostringstream note;
  for (const Case c : {Case{2, 1}, Case{3, 2}, Case{2, 3}, Case{4, 2}, Case{8, 1}}) {
    const long long order = c.m * c.n - 1;
    const IntMatrix lk{{c.m, -1}, {-1, c.n}};
    const long long sigma = oracle::sturm_positive_roots(oracle::characteristic_polynomial(lk));
    int here = 0;
    for (int l : {3, 5, 7}) {
      const Palette p = Palette::parse("xi" + std::to_string(l));
      const Presentation pres = lens_presentation(p, c.m, c.n);
      const auto omegas = enumerate_cohomology(pres, p);
      if (omegas.size() != oracle::brute_force_classes(lk, l).size()) return {false, "enumeration mismatch"};
      if (order % l != 0 && !omegas.empty()) return {false, "classes found for a coprime order"};
      for (const auto& omega : omegas) {
        const Scalar value = invariant(pres, omega).value;
        if (value != oracle::lens_formula(p, sigma, omega.at("1"), omega.at("2")))
          return {false, "mismatch at (" + std::to_string(c.m) + "," + std::to_string(c.n) + ") " + render_class(p, omega)};
        ++here;
      }
    }
    if (order == 1) {
      // S^3: the trivial class is the only one and lies outside the domain.
      const Palette q = Palette::parse("qt");
      const GroupElement one(q);
      if (check_compatible(lens_presentation(q, c.m, c.n), {{"1", one}, {"2", one}}).computable)
        return {false, "trivial class on S^3 reported computable"};
    }
    note << "(" << c.m << "," << c.n << "):" << here << " ";
    classes += here;
  }
  return {true, std::to_string(classes) + " classes " + note.str() + "(S^3 has none)"};
}

Outcome lens_distinction() {
  const Palette p = Palette::parse("xi7");
  const auto xi = [&](long long k) { return GroupElement({0}, k, 7); };
  const Presentation l71 = lens_presentation(p, 8, 1);
  const Presentation l72 = lens_presentation(p, 4, 2);
  const Scalar v71 = invariant(l71, {{"1", xi(1)}, {"2", xi(1)}}).value;
  if (v71 != -(d(p, xi(1)) * d(p, xi(1)))) return {false, "L(7,1) value"};
  const std::vector<std::pair<int, int>> listed{{2, 1}, {4, 2}, {6, 3}, {1, 4}, {3, 5}, {5, 6}};
  for (const auto& [a, b] : listed) {
    const Scalar v = invariant(l72, {{"1", xi(a)}, {"2", xi(b)}}).value;
    if (v != -(d(p, xi(a)) * d(p, xi(b)))) return {false, "L(7,2) value at (" + std::to_string(a) + "," + std::to_string(b) + ")"};
    if (v == v71) return {false, "L(7,2) value coincides with L(7,1)"};
  }
  return {true, "-d(xi)^2 differs from all six -d(u_i)d(v_i)"};
}

Outcome property_suites() {
  return run_cases(
      "Yang-Baxter*,positive and negative crossings*,zig-zags*,cut tangles act*,the invariant does not depend*,"
      "shifting a weight*,weights are irrelevant*,a positive full twist*,Kirby colors are symmetric*,"
      "reversing a surgery component*,dense oracle*");
}

Outcome kirby_suite() {
  const SuiteReport rep = run_kirby_suite(default_suite_dir());
  std::size_t slides = 0, blowups = 0;
  for (const auto& c : rep.cases) (c.name.find('@') == std::string::npos ? slides : blowups)++;
  if (rep.cases.empty()) return {false, "no cases found"};
  if (!rep.ok()) {
    for (const auto& c : rep.cases)
      if (!c.passed) return {false, c.name + ": " + c.detail};
  }
  return {true, std::to_string(slides) + " handle-slide pairs, " + std::to_string(blowups) + " blow-ups"};
}

Outcome sigma_oracle() {
  if (sigma_plus({{8, -1}, {-1, 1}}) != 2 || sigma_plus({{4, -1}, {-1, 2}}) != 2) return {false, "lens matrices"};
  gen::Rng rng(107);
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<std::size_t>(rng.range(1, 5));
    IntMatrix m(n, std::vector<long long>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) m[a][b] = m[b][a] = rng.range(-9, 9);
    if (sigma_plus(m) != oracle::sturm_positive_roots(oracle::characteristic_polynomial(m)))
      return {false, "random matrix " + std::to_string(i)};
  }
  return {true, "200 random matrices up to 5x5"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "worked Hopf example", 1, hopf_golden},
      {2, "blow-up factors", 5, blow_up_factors},
      {3, "lens closed-form sweep", 30, lens_sweep},
      {4, "L(7,1) vs L(7,2)", 10, lens_distinction},
      {5, "property suites", 0, property_suites},
      {6, "Kirby invariance suite", 60, kirby_suite},
      {7, "sigma_plus vs Sturm oracle", 0, sigma_oracle},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.ok = false;
      o.note += "; over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    }
    all = all && o.ok;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << t.str() << " s): " << o.note
              << "\n";
  }
  return all ? 0 : 1;
}
