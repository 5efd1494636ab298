#include "gl11/kirby_suite.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#ifndef GL11_SOURCE_SUITE_DIR
#define GL11_SOURCE_SUITE_DIR "data/kirby"
#endif

namespace gl11 {

namespace fs = std::filesystem;

std::vector<BlowUpSite> blow_up_sites(const Presentation& pres, std::size_t max_sites) {
  const auto surgery = pres.surgery_components();
  const std::set<std::string> allowed(surgery.begin(), surgery.end());
  std::vector<BlowUpSite> all;
  std::vector<bool> orientation;
  const auto& levels = pres.diagram.levels();
  for (std::size_t i = 0; i < levels.size(); ++i)
    for (std::size_t p = 0; p < levels[i].size(); ++p)
      if (allowed.count(levels[i][p].component)) {
        all.push_back({i, static_cast<int>(p)});
        orientation.push_back(levels[i][p].up);
      }
  if (all.size() <= max_sites) return all;
  // Evenly spaced picks, then make sure both orientations appear.
  std::vector<BlowUpSite> out;
  std::vector<std::size_t> picked;
  for (std::size_t k = 0; k < max_sites; ++k) picked.push_back(k * (all.size() - 1) / std::max<std::size_t>(1, max_sites - 1));
  picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
  const bool has_up = std::any_of(picked.begin(), picked.end(), [&](std::size_t k) { return orientation[k]; });
  const bool has_down = std::any_of(picked.begin(), picked.end(), [&](std::size_t k) { return !orientation[k]; });
  if (!has_up || !has_down) {
    for (std::size_t k = 0; k < all.size(); ++k)
      if (orientation[k] != has_up) {
        picked.back() = k;
        break;
      }
    std::sort(picked.begin(), picked.end());
  }
  for (std::size_t k : picked) out.push_back(all[k]);
  return out;
}

namespace {

std::string fresh_label(const Diagram& d) {
  long long best = 0;
  for (const auto& c : d.components()) {
    if (!c.empty() && std::all_of(c.begin(), c.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) &&
        c.size() < 15)
      best = std::max(best, std::stoll(c));
  }
  return std::to_string(best + 1);
}

}  // namespace

BlowUpCheck check_blow_up(const Presentation& pres, const BlowUpSite& site, int sign) {
  const auto& lv = pres.diagram.levels().at(site.level);
  const std::string comp = lv.at(static_cast<std::size_t>(site.position)).component;
  if (pres.role(comp) != Role::Surgery) throw DiagramError("blow-up site is not on a surgery component");
  BlowUpCheck out;
  out.new_label = fresh_label(pres.diagram);
  const InvariantResult before = invariant(pres);
  const BlowUp b = blow_up(pres.diagram, site.level, site.position, sign, out.new_label);
  Presentation after = pres;
  after.diagram = b.diagram;
  // The new meridian satisfies w(K)^linking * w(new)^sign = 1.
  after.omega[out.new_label] = pres.omega.at(comp).pow(-static_cast<long long>(b.linking) * sign);
  const InvariantResult res = invariant(after);
  out.before = before.value;
  out.after = res.value;
  out.factor = res.unnormalized / before.unnormalized;
  return out;
}

bool SuiteReport::ok() const {
  return std::all_of(cases.begin(), cases.end(), [](const SuiteCase& c) { return c.passed; });
}

namespace {

std::map<std::string, std::vector<std::string>> read_manifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw DiagramError("cannot read " + path.string());
  std::map<std::string, std::vector<std::string>> kv;
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::vector<std::string> vals;
    for (std::string v; ls >> v;) vals.push_back(v);
    kv[key] = vals;
  }
  return kv;
}

const std::string& single(const std::map<std::string, std::vector<std::string>>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end() || it->second.size() != 1) throw DiagramError("manifest needs exactly one value for '" + key + "'");
  return it->second.front();
}

Presentation load(const fs::path& base, const std::string& file) {
  return presentation_from_file(read_morse_file((base / file).string()));
}

void run_slide(const fs::path& path, const std::map<std::string, std::vector<std::string>>& kv, SuiteReport& rep) {
  const std::string name = path.stem().string();
  const Presentation left = load(path.parent_path(), single(kv, "left"));
  const Presentation right = load(path.parent_path(), single(kv, "right"));
  const InvariantResult a = invariant(left);
  const InvariantResult b = invariant(right);
  SuiteCase c{name, a.value == b.value, {}};
  if (!c.passed) c.detail = "left " + a.value.to_string(left.palette) + " != right " + b.value.to_string(right.palette);
  rep.cases.push_back(std::move(c));
}

void run_blowup(const fs::path& path, const std::map<std::string, std::vector<std::string>>& kv, SuiteReport& rep) {
  const std::string name = path.stem().string();
  const Presentation pres = load(path.parent_path(), single(kv, "presentation"));
  std::vector<int> signs;
  const std::string sign = kv.count("sign") ? single(kv, "sign") : "both";
  if (sign == "+1" || sign == "both") signs.push_back(1);
  if (sign == "-1" || sign == "both") signs.push_back(-1);
  if (signs.empty()) throw DiagramError("sign must be +1, -1 or both");
  std::vector<BlowUpSite> sites;
  if (auto it = kv.find("site"); it != kv.end()) {
    if (it->second.size() != 2) throw DiagramError("site needs <level> <position>");
    sites.push_back({static_cast<std::size_t>(std::stoul(it->second[0])), std::stoi(it->second[1])});
  } else {
    sites = blow_up_sites(pres, kv.count("sites") ? static_cast<std::size_t>(std::stoul(single(kv, "sites"))) : 3);
  }
  for (const auto& site : sites) {
    for (int s : signs) {
      const BlowUpCheck chk = check_blow_up(pres, site, s);
      const Scalar expected_factor = Scalar::from_integer(pres.palette, s > 0 ? -2 : 2);
      SuiteCase c{name + "@" + std::to_string(site.level) + ":" + std::to_string(site.position) + (s > 0 ? "+" : "-"),
                  chk.equal() && chk.factor == expected_factor, {}};
      if (!c.passed)
        c.detail = "before " + chk.before.to_string(pres.palette) + ", after " + chk.after.to_string(pres.palette) +
                   ", factor " + chk.factor.to_string(pres.palette);
      rep.cases.push_back(std::move(c));
    }
  }
}

}  // namespace

SuiteReport run_kirby_suite(const std::string& dir) {
  if (!fs::is_directory(dir)) throw DiagramError("suite directory '" + dir + "' does not exist");
  std::vector<fs::path> manifests;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".case") manifests.push_back(e.path());
  std::sort(manifests.begin(), manifests.end());
  SuiteReport rep;
  for (const auto& m : manifests) {
    try {
      const auto kv = read_manifest(m);
      const std::string kind = single(kv, "kind");
      if (kind == "slide")
        run_slide(m, kv, rep);
      else if (kind == "blowup")
        run_blowup(m, kv, rep);
      else
        throw DiagramError("unknown kind '" + kind + "'");
    } catch (const std::exception& e) {
      rep.cases.push_back({m.stem().string(), false, e.what()});
    }
  }
  return rep;
}

std::string default_suite_dir() {
  if (const char* env = std::getenv("GL11_SUITE_DIR"); env != nullptr && *env != '\0') return env;
  return GL11_SOURCE_SUITE_DIR;
}

}  // namespace gl11
