// Writes the golden Kirby-move suite: surgery presentations (*.pres) and
// case manifests (*.case) for handle slides and blow-ups.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "gl11/invariant.hpp"

using namespace gl11;
namespace fs = std::filesystem;

namespace {

fs::path out_dir;

void write(const std::string& name, const std::string& text) {
  std::ofstream(out_dir / name, std::ios::binary) << text;
}

void write_presentation(const std::string& name, const std::string& comment, const Presentation& p) {
  DiagramFile f = make_file(p.palette, p.diagram, {});
  for (const auto& c : p.diagram.components()) f.roles[c] = Role::Surgery;
  f.omega = p.omega;
  write(name + ".pres", "# " + comment + "\n" + render(f));
  write("blowup_" + name + ".case", "kind blowup\npresentation " + name + ".pres\nsign both\nsites 3\n");
}

void write_slide(const std::string& name, const std::string& left, const std::string& right) {
  write("slide_" + name + ".case", "kind slide\nleft " + left + ".pres\nright " + right + ".pres\n");
}

bool computable(const CohomologyClass& w) {
  return std::none_of(w.begin(), w.end(), [](const auto& kv) { return kv.second.is_identity(); });
}

// Handle slides of the lens chain [[m,-1],[-1,n]] and their cohomology
// transforms w' = P^-1 w.
void lens_family(const std::string& name, const Palette& pal, long long m, long long n, const CohomologyClass& w) {
  Presentation base{pal, lens_chain(m, n), {}, w};
  write_presentation(name, "chain with linking matrix [[" + std::to_string(m) + ",-1],[-1," + std::to_string(n) + "]]", base);
  const GroupElement u = w.at("1"), v = w.at("2");
  struct Slide {
    std::string tag;
    Diagram d;
    CohomologyClass w;
  };
  std::vector<Slide> slides{
      {"k2_over_k1_plus", twisted_chain(m, m + n - 2, m - 1), {{"1", u * v.inverse()}, {"2", v}}},
      {"k2_over_k1_minus", reverse_component(twisted_chain(m, m + n + 2, m + 1), "2"), {{"1", u * v}, {"2", v}}},
      {"k1_over_k2_plus", twisted_chain(m + n - 2, n, n - 1), {{"1", u}, {"2", v * u.inverse()}}},
      {"k1_over_k2_minus", reverse_component(twisted_chain(m + n + 2, n, n + 1), "1"), {{"1", u}, {"2", v * u}}},
  };
  for (const auto& s : slides) {
    if (!computable(s.w)) continue;
    const std::string right = name + "_" + s.tag;
    write_presentation(right, "handle slide " + s.tag + " of " + name, Presentation{pal, s.d, {}, s.w});
    write_slide(right, name, right);
  }
}

CohomologyClass first_computable(const Presentation& p) {
  for (const auto& w : enumerate_cohomology(p, p.palette))
    if (computable(w)) return w;
  throw std::runtime_error("no computable class");
}

Diagram with_curls(Diagram d, const std::string& comp, int count) {
  for (int i = 0; i < count; ++i) {
    const auto& lv = d.levels()[1];
    int pos = 0;
    while (lv[static_cast<std::size_t>(pos)].component != comp) ++pos;
    d = insert_slices(d, 1, curl_slices(lv, pos, 1));
  }
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_kirby_suite <output-dir>\n";
    return 2;
  }
  out_dir = argv[1];
  fs::create_directories(out_dir);

  const Palette x3 = Palette::parse("xi3"), x5 = Palette::parse("xi5"), x7 = Palette::parse("xi7");
  const Palette qt = Palette::parse("qt");
  auto xi = [](const Palette& p, long long k) { return GroupElement({0}, k, p.torsion_order()); };

  lens_family("l71", x7, 8, 1, {{"1", xi(x7, 1)}, {"2", xi(x7, 1)}});
  lens_family("l72", x7, 4, 2, {{"1", xi(x7, 2)}, {"2", xi(x7, 1)}});
  lens_family("l52", x5, 3, 2, first_computable(lens_presentation(x5, 3, 2)));
  lens_family("l53", x5, 2, 3, first_computable(lens_presentation(x5, 2, 3)));
  lens_family("l31", x3, 4, 1, first_computable(lens_presentation(x3, 4, 1)));
  const GroupElement t = GroupElement::parse(qt, "t");
  lens_family("s1s2", qt, 1, 1, {{"1", t}, {"2", t}});

  write_presentation("trefoil3", "trefoil (closed 2-braid s1^3), framing 3",
                     Presentation{x3, braid_closure(2, {1, 1, 1}), {}, {{"1", xi(x3, 1)}}});
  write_presentation("figure_eight5", "figure-eight knot with framing 5",
                     Presentation{x5, with_curls(braid_closure(3, {1, -2, 1, -2}), "1", 5), {}, {{"1", xi(x5, 2)}}});
  write_presentation("unknot5", "unknot with framing 5",
                     Presentation{x5, with_curls(MorseBuilder().cup(0, "1", true).cap(0).build(), "1", 5), {}, {{"1", xi(x5, 1)}}});
  return 0;
}
