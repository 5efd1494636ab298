#include "gl11/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "gl11/invariant.hpp"
#include "gl11/kirby_suite.hpp"

namespace gl11::cli {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return os.str();
}

namespace {

// Errors in the user's input (exit 2) as opposed to failed checks (exit 1).
struct InputProblem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  std::string digest;
  DiagramFile file;
};

Loaded load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputProblem("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return {sha256_hex(text), parse_morse(text)};
  } catch (const ParseError& e) {
    throw InputProblem(path + ": " + e.what());
  }
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
  return s;
}

// "-d(xi^2) d(xi)" when value = +-prod d(g_i); empty otherwise.
std::string d_product_form(const Palette& p, const Scalar& value, const std::vector<GroupElement>& gs) {
  if (gs.empty()) return {};
  Scalar prod = Scalar::one(p);
  for (const auto& g : gs) {
    if (!is_color_admissible(g)) return {};
    prod *= d(p, g);
  }
  std::string sign;
  if (value == -prod)
    sign = "-";
  else if (value != prod)
    return {};
  std::string body;
  if (gs.size() == 2 && gs[0] == gs[1]) {
    body = "d(" + gs[0].to_string(p) + ")^2";
  } else {
    for (const auto& g : gs) body += (body.empty() ? "" : " ") + std::string("d(") + g.to_string(p) + ")";
  }
  return sign + body;
}

std::string matrix_text(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? "," : "") + std::to_string(m[i][j]);
    s += "]";
  }
  return s + "]";
}

int cmd_eval(const std::string& path, const std::optional<std::string>& cut, std::ostream& out) {
  const Loaded in = load(path);
  const DiagramFile& f = in.file;
  const Palette& p = f.palette;
  const Diagram& dg = f.diagram;
  Coloring colors;
  try {
    colors = f.coloring();
  } catch (const DiagramError& e) {
    throw InputProblem(path + ": " + e.what());
  }
  const auto comps = dg.components();
  out << "input: " << path << "\n";
  out << "sha256: " << in.digest << "\n";
  out << "palette: " << p.spec() << "\n";
  out << "components: " << join(comps, " ") << "\n";
  if (cut && !dg.has_component(*cut)) throw InputProblem("no component '" + *cut + "' to cut");

  if (!dg.is_closed()) {
    if (!dg.is_one_one_tangle()) throw InputProblem("eval needs a closed diagram or a 1-1 tangle");
    out << "tangle scalar: " << evaluate_tangle(p, dg, colors).to_string(p) << "\n";
    return Ok;
  }
  bool any_kirby = false;
  for (const auto& [label, c] : colors) any_kirby = any_kirby || c.kirby;
  if (any_kirby) {
    std::size_t terms = 0;
    const Scalar v = alexander_kirby(p, dg, colors, cut, &terms);
    out << "kirby terms: " << terms << "\n";
    out << "value: " << v.to_string(p) << "\n";
    return Ok;
  }
  const std::string where = cut ? *cut : comps.front();
  out << "cut: " << where << "\n";
  out << "value: " << alexander(p, dg, colors, where).to_string(p) << "\n";
  return Ok;
}

int cmd_invariant(const std::string& path, std::ostream& out, std::ostream& err) {
  const Loaded in = load(path);
  const Presentation pres = presentation_from_file(in.file);
  const Palette& p = pres.palette;
  out << "input: " << path << "\n";
  out << "sha256: " << in.digest << "\n";
  out << "palette: " << p.spec() << "\n";
  out << "surgery: " << join(pres.surgery_components(), " ") << "\n";
  out << "omega: " << render_class(p, pres.omega) << "\n";
  const CompatibilityReport rep = check_compatible(pres, pres.omega);
  if (!rep.ok()) {
    out << "compatible: no\n";
    err << "error: " << rep.summary() << "\n";
    return CheckFailed;
  }
  const InvariantResult r = invariant(pres);
  out << "linking matrix: " << matrix_text(linking_data(pres.diagram, pres.roles).matrix) << "\n";
  out << "r: " << r.r << "\n";
  out << "sigma_plus: " << r.sigma_plus << "\n";
  out << "terms: " << r.terms << "\n";
  out << "value: " << r.value.to_string(p) << "\n";
  std::vector<GroupElement> gs;
  for (const auto& label : pres.surgery_components()) gs.push_back(pres.omega.at(label));
  if (const std::string form = d_product_form(p, r.value, gs); !form.empty()) out << "form: " << form << "\n";
  return Ok;
}

// Smallest odd prime dividing |m n - 1|, if any.
std::optional<int> lens_torsion(long long m, long long n) {
  long long order = m * n - 1;
  if (order < 0) order = -order;
  for (long long q = 3; q <= order; q += 2) {
    bool prime = true;
    for (long long k = 3; k * k <= q; k += 2) prime = prime && q % k != 0;
    if (prime && order % q == 0) return static_cast<int>(q);
  }
  return std::nullopt;
}

int cmd_lens(long long m, long long n, const std::optional<std::string>& palette_flag, bool enumerate,
             const std::optional<std::string>& omega_text, std::ostream& out) {
  Palette p;
  if (palette_flag) {
    try {
      p = Palette::parse(*palette_flag);
    } catch (const std::exception& e) {
      throw InputProblem(e.what());
    }
  } else if (enumerate || (omega_text && omega_text->find("xi") != std::string::npos)) {
    const auto l = lens_torsion(m, n);
    if (!l) throw InputProblem("|mn-1| = " + std::to_string(std::llabs(m * n - 1)) + " has no odd prime factor; pass --palette");
    p = Palette::parse("xi" + std::to_string(*l));
  } else {
    p = Palette::parse("qt");
  }
  const Presentation pres = lens_presentation(p, m, n);
  std::vector<CohomologyClass> rows;
  if (enumerate) {
    if (!p.has_torsion()) throw InputProblem("--enumerate needs a torsion palette xi<l>");
    try {
      rows = enumerate_cohomology(pres, p);
    } catch (const UnsupportedError& e) {
      throw InputProblem(e.what());
    }
  } else {
    const auto comma = omega_text->find(',');
    if (comma == std::string::npos) throw InputProblem("--omega expects u,v");
    try {
      rows.push_back({{"1", GroupElement::parse(p, omega_text->substr(0, comma))},
                      {"2", GroupElement::parse(p, omega_text->substr(comma + 1))}});
    } catch (const std::exception& e) {
      throw InputProblem(std::string("--omega: ") + e.what());
    }
  }
  const IntMatrix lk{{m, -1}, {-1, n}};
  out << "lens chain: m=" << m << " n=" << n << "\n";
  out << "palette: " << p.spec() << "\n";
  out << "linking matrix: " << matrix_text(lk) << "\n";
  out << "sigma_plus: " << sigma_plus(lk) << "\n";
  out << "rows: " << rows.size() << "\n";
  bool all = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const CohomologyClass& omega = rows[i];
    out << "[" << i + 1 << "] omega " << render_class(p, omega) << "\n";
    const CompatibilityReport rep = check_compatible(pres, omega);
    if (!rep.ok()) {
      out << "    error: " << rep.summary() << "\n";
      all = false;
      continue;
    }
    const Scalar value = invariant(pres, omega).value;
    const Scalar closed = lens_closed_form(p, m, n, omega.at("1"), omega.at("2"));
    const bool agree = value == closed;
    all = all && agree;
    out << "    state sum:   " << value.to_string(p) << "\n";
    out << "    closed form: " << d_product_form(p, closed, {omega.at("1"), omega.at("2")}) << " = "
        << closed.to_string(p) << "\n";
    out << "    agree: " << (agree ? "yes" : "no") << "\n";
  }
  return all ? Ok : CheckFailed;
}

int cmd_verify_kirby(const std::optional<std::string>& dir_flag, std::ostream& out, std::ostream& err) {
  const std::string dir = dir_flag ? *dir_flag : default_suite_dir();
  SuiteReport rep;
  try {
    rep = run_kirby_suite(dir);
  } catch (const DiagramError& e) {
    throw InputProblem(e.what());
  }
  out << "suite: " << dir << "\n";
  std::size_t failed = 0;
  for (const auto& c : rep.cases) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) {
      ++failed;
      out << ": " << c.detail;
    }
    out << "\n";
  }
  if (rep.cases.empty()) err << "warning: 0 cases found in " << dir << "\n";
  out << "cases: " << rep.cases.size() << ", failed: " << failed << "\n";
  return failed == 0 ? Ok : CheckFailed;
}

int cmd_distinguish(std::ostream& out) {
  const Palette p = Palette::parse("xi7");
  const auto xi = [&](long long k) { return GroupElement({0}, k, 7); };
  const Scalar l71 = invariant(lens_presentation(p, 8, 1), {{"1", xi(1)}, {"2", xi(1)}}).value;
  out << "L(7,1): chain m=8 n=1, omega0 = " << render_class(p, {{"1", xi(1)}, {"2", xi(1)}}) << "\n";
  out << "    value: " << d_product_form(p, l71, {xi(1), xi(1)}) << " = " << l71.to_string(p) << "\n";
  out << "L(7,2): chain m=4 n=2\n";
  const Presentation l72 = lens_presentation(p, 4, 2);
  bool distinct = true;
  for (long long i = 1; i <= 6; ++i) {
    const GroupElement u = xi(2 * i), v = xi(i);
    const Scalar value = invariant(l72, {{"1", u}, {"2", v}}).value;
    const bool same = value == l71;
    distinct = distinct && !same;
    out << "    omega" << i << " = " << render_class(p, {{"1", u}, {"2", v}}) << ": " << d_product_form(p, value, {u, v})
        << " = " << value.to_string(p) << "  equals L(7,1): " << (same ? "yes" : "no") << "\n";
  }
  out << "verdict: " << (distinct ? "distinct" : "not distinguished") << "\n";
  return distinct ? Ok : CheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact gl(1|1)-Alexander invariants of links and 3-manifolds", "gl11"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Print the elapsed time to stderr");

  std::string path;
  std::optional<std::string> cut;
  auto* eval = app.add_subcommand("eval", "Evaluate a diagram file");
  eval->add_option("file", path, "Diagram file")->required();
  eval->add_option("--cut", cut, "Component to cut open");

  auto* inv = app.add_subcommand("invariant", "Normalized invariant of a presentation file with an omega block");
  inv->add_option("file", path, "Presentation file")->required();

  long long m = 0, n = 0;
  std::optional<std::string> palette, omega;
  bool enumerate = false;
  auto* lens = app.add_subcommand("lens", "Lens-space chain: state sum against the closed form");
  lens->add_option("m", m)->required();
  lens->add_option("n", n)->required();
  lens->add_option("--palette", palette, "qt or xi<l>");
  auto* en = lens->add_flag("--enumerate", enumerate, "All torsion cohomology classes");
  auto* om = lens->add_option("--omega", omega, "Meridian images u,v");
  en->excludes(om);

  std::optional<std::string> suite;
  auto* verify = app.add_subcommand("verify-kirby", "Run the Kirby-move golden suite");
  verify->add_option("dir", suite, "Suite directory (default: $GL11_SUITE_DIR or the shipped suite)");

  auto* distinguish = app.add_subcommand("distinguish", "Compare L(7,1) and L(7,2)");

  std::vector<std::string> argv_storage{"gl11"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return InputError;
  }
  if (lens->parsed() && !enumerate && !omega) {
    err << "error: lens needs --enumerate or --omega u,v\n";
    return InputError;
  }

  const auto start = std::chrono::steady_clock::now();
  int rc = Ok;
  try {
    if (eval->parsed())
      rc = cmd_eval(path, cut, out);
    else if (inv->parsed())
      rc = cmd_invariant(path, out, err);
    else if (lens->parsed())
      rc = cmd_lens(m, n, palette, enumerate, omega, out);
    else if (verify->parsed())
      rc = cmd_verify_kirby(suite, out, err);
    else if (distinguish->parsed())
      rc = cmd_distinguish(out);
  } catch (const InputProblem& e) {
    err << "error: " << e.what() << "\n";
    rc = InputError;
  } catch (const IncompatibleError& e) {
    err << "error: " << e.report().summary() << "\n";
    rc = CheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    rc = InputError;
  }
  if (timing) {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << "time: " << std::fixed << std::setprecision(3) << secs << " s\n";
  }
  return rc;
}

}  // namespace gl11::cli
