#include "gl11/morse_format.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace gl11 {

ParseError::ParseError(int line, int column, const std::string& message)
    : DiagramError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

const ComponentDecl* DiagramFile::find(const std::string& label) const {
  for (const auto& d : declared)
    if (d.label == label) return &d;
  return nullptr;
}

Coloring DiagramFile::coloring() const {
  Coloring c;
  for (const auto& label : diagram.components()) {
    const ComponentDecl* d = find(label);
    if (d == nullptr || !d->mul) throw DiagramError("component '" + label + "' has no color (mul=...)");
    c[label] = ComponentColor{*d->mul, d->weight, d->kirby};
  }
  return c;
}

Role DiagramFile::role(const std::string& label) const {
  auto it = roles.find(label);
  return it == roles.end() ? Role::Surgery : it->second;
}

namespace {

struct Token {
  std::string text;
  int column;
};

struct Statement {
  int line;
  std::vector<Token> tokens;
  int end_column;
};

bool valid_label(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
  });
}

std::vector<Statement> split_statements(const std::string& text) {
  std::vector<Statement> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    Statement cur{lineno, {}, 1};
    std::size_t i = 0;
    auto flush = [&](int col) {
      cur.end_column = col;
      if (!cur.tokens.empty()) out.push_back(cur);
      cur.tokens.clear();
    };
    // A `palette` statement may itself contain ';' (vars(...);xi<l>).
    bool palette_line = false;
    while (i < line.size()) {
      const char c = line[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (c == ';' && !palette_line) {
        flush(static_cast<int>(i) + 1);
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
             (palette_line || line[j] != ';'))
        ++j;
      cur.tokens.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
      if (cur.tokens.size() == 1 && cur.tokens[0].text == "palette") palette_line = true;
      i = j;
    }
    flush(static_cast<int>(line.size()) + 1);
  }
  return out;
}

long long parse_int(const Token& t, int line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(t.text, &used);
    if (used == t.text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(line, t.column, "expected an integer, found '" + t.text + "'");
}

struct RawSlice {
  Slice slice;
  int line;
  int column;
};

class Parser {
 public:
  DiagramFile run(const std::string& text) {
    const auto statements = split_statements(text);
    for (const auto& st : statements)
      if (st.tokens[0].text == "palette") parse_palette(st);
    for (const auto& st : statements) dispatch(st);
    resolve();
    return std::move(file_);
  }

 private:
  [[noreturn]] void fail(int line, int col, const std::string& msg) { throw ParseError(line, col, msg); }

  void expect_count(const Statement& st, std::size_t lo, std::size_t hi) {
    if (st.tokens.size() < lo) fail(st.line, st.end_column, "missing argument for '" + st.tokens[0].text + "'");
    if (st.tokens.size() > hi) fail(st.line, st.tokens[hi].column, "unexpected '" + st.tokens[hi].text + "'");
  }

  void parse_palette(const Statement& st) {
    if (palette_seen_) fail(st.line, st.tokens[0].column, "palette declared twice");
    palette_seen_ = true;
    std::string spec;
    for (std::size_t i = 1; i < st.tokens.size(); ++i) spec += st.tokens[i].text;
    if (spec.empty()) fail(st.line, st.end_column, "missing palette specification");
    try {
      file_.palette = Palette::parse(spec);
    } catch (const std::invalid_argument& e) {
      fail(st.line, st.tokens[1].column, e.what());
    }
  }

  GroupElement group(const std::string& text, int line, int col) {
    try {
      return GroupElement::parse(file_.palette, text);
    } catch (const std::invalid_argument& e) {
      fail(line, col, e.what());
    }
  }

  void dispatch(const Statement& st) {
    const std::string& kw = st.tokens[0].text;
    if (kw == "palette") return;
    if (kw == "component") return parse_component(st);
    if (kw == "role") return parse_role(st);
    if (kw == "omega") return parse_omega(st);
    if (kw == "boundary") return parse_boundary(st);
    if (kw == "cup>" || kw == "cup<" || kw == "cap>" || kw == "cap<" || kw == "x+" || kw == "x-")
      return parse_slice(st);
    fail(st.line, st.tokens[0].column, "unknown statement '" + kw + "'");
  }

  void parse_component(const Statement& st) {
    expect_count(st, 2, 5);
    ComponentDecl d;
    d.label = st.tokens[1].text;
    if (!valid_label(d.label)) fail(st.line, st.tokens[1].column, "invalid component label '" + d.label + "'");
    if (file_.find(d.label) != nullptr)
      fail(st.line, st.tokens[1].column, "component '" + d.label + "' declared twice");
    bool weight_given = false;
    for (std::size_t i = 2; i < st.tokens.size(); ++i) {
      const Token& t = st.tokens[i];
      if (t.text == "kirby") {
        d.kirby = true;
      } else if (t.text.rfind("mul=", 0) == 0) {
        d.mul = group(t.text.substr(4), st.line, t.column + 4);
        if (!is_color_admissible(*d.mul))
          fail(st.line, t.column + 4, "inadmissible multiplicity '" + t.text.substr(4) + "' (t^4 = 1)");
      } else if (t.text.rfind("weight=", 0) == 0) {
        d.weight = parse_int(Token{t.text.substr(7), t.column + 7}, st.line);
        weight_given = true;
      } else {
        fail(st.line, t.column, "unexpected '" + t.text + "' (expected mul=, weight= or kirby)");
      }
    }
    if (d.kirby && !weight_given) d.weight = 1;
    file_.declared.push_back(std::move(d));
  }

  void parse_role(const Statement& st) {
    expect_count(st, 3, 3);
    const std::string& label = st.tokens[1].text;
    const std::string& r = st.tokens[2].text;
    if (r != "surgery" && r != "graph") fail(st.line, st.tokens[2].column, "role must be surgery or graph");
    if (!file_.roles.emplace(label, r == "surgery" ? Role::Surgery : Role::Graph).second)
      fail(st.line, st.tokens[1].column, "role of '" + label + "' given twice");
    role_lines_[label] = {st.line, st.tokens[1].column};
  }

  void parse_omega(const Statement& st) {
    if (st.tokens.size() < 2) fail(st.line, st.end_column, "missing argument for 'omega'");
    std::string rest;
    for (std::size_t i = 1; i < st.tokens.size(); ++i) rest += st.tokens[i].text;
    const auto eq = rest.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == rest.size())
      fail(st.line, st.tokens[1].column, "expected 'omega <label> = <group element>'");
    const std::string label = rest.substr(0, eq);
    if (file_.omega.count(label)) fail(st.line, st.tokens[1].column, "omega of '" + label + "' given twice");
    file_.omega.emplace(label, group(rest.substr(eq + 1), st.line, st.tokens[1].column));
    role_lines_.emplace(label, std::pair<int, int>{st.line, st.tokens[1].column});
  }

  void parse_boundary(const Statement& st) {
    expect_count(st, 2, 2);
    if (boundary_seen_) fail(st.line, st.tokens[0].column, "boundary declared twice");
    boundary_seen_ = true;
    const Token& t = st.tokens[1];
    if (t.text == "closed") return;
    if (t.text.rfind("tangle(", 0) == 0 && t.text.back() == ')') {
      std::string inner = t.text.substr(7, t.text.size() - 8);
      bool up = true;
      if (auto comma = inner.find(','); comma != std::string::npos) {
        const std::string dir = inner.substr(comma + 1);
        if (dir != "down" && dir != "up") fail(st.line, t.column, "tangle direction must be up or down");
        up = dir == "up";
        inner.resize(comma);
      }
      if (!valid_label(inner)) fail(st.line, t.column, "invalid tangle component '" + inner + "'");
      bottom_ = Level{Strand{inner, up}};
      boundary_line_ = st.line;
      return;
    }
    fail(st.line, t.column, "boundary must be 'closed' or 'tangle(<label>)'");
  }

  void parse_slice(const Statement& st) {
    const std::string& kw = st.tokens[0].text;
    const bool is_cup = kw.rfind("cup", 0) == 0;
    expect_count(st, 2, is_cup ? 3 : 2);
    const long long p = parse_int(st.tokens[1], st.line);
    if (p < 0 || p > 1'000'000) fail(st.line, st.tokens[1].column, "position out of range");
    Slice s;
    if (kw == "x+" || kw == "x-") {
      s = Slice::cross(static_cast<int>(p), kw == "x+" ? 1 : -1);
    } else if (is_cup) {
      std::string label;
      if (st.tokens.size() == 3) {
        label = st.tokens[2].text;
        if (!valid_label(label)) fail(st.line, st.tokens[2].column, "invalid component label '" + label + "'");
      }
      s = Slice::cup(static_cast<int>(p), kw.back() == '>', label);
    } else {
      s = Slice::cap(static_cast<int>(p), kw.back() == '>');
    }
    raw_.push_back({s, st.line, st.tokens[0].column});
  }

  // Simulates the word with arc identities to validate it and to assign
  // labels to unlabeled cups.
  void resolve() {
    struct Arc {
      int parent;
      std::string label;
      int first;
    };
    std::vector<Arc> arcs;
    auto find = [&](int x) {
      while (arcs[static_cast<std::size_t>(x)].parent != x) x = arcs[static_cast<std::size_t>(x)].parent;
      return x;
    };
    struct Live {
      int arc;
      bool up;
    };
    std::vector<Live> cur;
    for (const auto& s : bottom_) {
      arcs.push_back({static_cast<int>(arcs.size()), s.component, -1});
      cur.push_back({static_cast<int>(arcs.size()) - 1, s.up});
    }
    std::vector<int> cup_arc(raw_.size(), -1);
    for (std::size_t i = 0; i < raw_.size(); ++i) {
      const RawSlice& r = raw_[i];
      const Slice& s = r.slice;
      const auto p = static_cast<std::size_t>(s.position);
      const std::size_t w = cur.size();
      if (s.kind == SliceKind::Cup) {
        if (p > w) fail(r.line, r.column, "cup at position " + std::to_string(p) + " but level has " + std::to_string(w) + " strands");
        const int id = static_cast<int>(arcs.size());
        arcs.push_back({id, s.label, static_cast<int>(i)});
        cup_arc[i] = id;
        cur.insert(cur.begin() + s.position, {Live{id, !s.right_up}, Live{id, s.right_up}});
      } else if (s.kind == SliceKind::Cap) {
        if (p + 1 >= w)
          fail(r.line, r.column, "cap at position " + std::to_string(p) + " needs two strands, level has " + std::to_string(w));
        const Live a = cur[p], b = cur[p + 1];
        if (a.up == b.up) fail(r.line, r.column, "orientation mismatch: cap joins two strands oriented the same way");
        if (b.up != s.right_up)
          fail(r.line, r.column, std::string("orientation mismatch: right leg points ") + (b.up ? "up" : "down") +
                                     ", use " + (b.up ? "cap>" : "cap<"));
        int ra = find(a.arc), rb = find(b.arc);
        if (ra != rb) {
          auto& A = arcs[static_cast<std::size_t>(ra)];
          auto& B = arcs[static_cast<std::size_t>(rb)];
          if (!A.label.empty() && !B.label.empty() && A.label != B.label)
            fail(r.line, r.column, "cap joins components '" + A.label + "' and '" + B.label + "'");
          if (A.label.empty()) A.label = B.label;
          A.first = std::min(A.first, B.first);
          B.parent = ra;
        }
        cur.erase(cur.begin() + s.position, cur.begin() + s.position + 2);
      } else {
        if (p + 1 >= w)
          fail(r.line, r.column, "crossing at position " + std::to_string(p) + " needs two strands, level has " + std::to_string(w));
        std::swap(cur[p], cur[p + 1]);
      }
    }

    const int last_line = raw_.empty() ? std::max(1, boundary_line_) : raw_.back().line;
    if (bottom_.empty() && !cur.empty())
      fail(last_line, 1, "top boundary has " + std::to_string(cur.size()) + " strands but declared closed");
    if (!bottom_.empty()) {
      if (cur.size() != 1)
        fail(last_line, 1, "tangle must end with exactly one strand, top has " + std::to_string(cur.size()));
      if (find(cur[0].arc) != find(0) || cur[0].up != bottom_[0].up)
        fail(last_line, 1, "top strand of the tangle is not the continuation of the bottom strand");
    }

    // Assign labels: labeled classes keep theirs, the rest take unused
    // declared labels in order of first appearance.
    std::vector<int> roots;
    for (std::size_t i = 0; i < arcs.size(); ++i)
      if (find(static_cast<int>(i)) == static_cast<int>(i)) roots.push_back(static_cast<int>(i));
    std::sort(roots.begin(), roots.end(), [&](int a, int b) {
      return arcs[static_cast<std::size_t>(a)].first < arcs[static_cast<std::size_t>(b)].first;
    });
    std::set<std::string> used;
    for (int r : roots) {
      const auto& label = arcs[static_cast<std::size_t>(r)].label;
      if (label.empty()) continue;
      if (!used.insert(label).second) {
        const int first = arcs[static_cast<std::size_t>(r)].first;
        if (first < 0) fail(boundary_line_, 1, "label '" + label + "' is used by two separate components");
        const RawSlice& at = raw_[static_cast<std::size_t>(first)];
        fail(at.line, at.column, "label '" + label + "' is used by two separate components");
      }
    }
    std::vector<std::string> free_labels;
    for (const auto& d : file_.declared)
      if (!used.count(d.label)) free_labels.push_back(d.label);
    std::size_t next = 0;
    for (int r : roots) {
      auto& A = arcs[static_cast<std::size_t>(r)];
      if (!A.label.empty()) continue;
      const RawSlice& at = raw_[static_cast<std::size_t>(A.first)];
      if (next >= free_labels.size())
        fail(at.line, at.column, "uncolored component: no declared component left for this cup");
      A.label = free_labels[next++];
    }

    std::vector<Slice> slices;
    for (std::size_t i = 0; i < raw_.size(); ++i) {
      Slice s = raw_[i].slice;
      if (s.kind == SliceKind::Cup) s.label = arcs[static_cast<std::size_t>(find(cup_arc[i]))].label;
      slices.push_back(s);
    }
    try {
      file_.diagram = Diagram(bottom_, std::move(slices));
    } catch (const DiagramError& e) {
      fail(last_line, 1, e.what());
    }

    const auto comps = file_.diagram.components();
    for (const auto& c : comps)
      if (file_.find(c) == nullptr) fail(last_line, 1, "uncolored component '" + c + "' (no component declaration)");
    for (const auto& d : file_.declared)
      if (std::find(comps.begin(), comps.end(), d.label) == comps.end())
        fail(last_line, 1, "declared component '" + d.label + "' does not occur in the diagram");
    for (const auto& [label, pos] : role_lines_)
      if (std::find(comps.begin(), comps.end(), label) == comps.end())
        fail(pos.first, pos.second, "unknown component '" + label + "'");
  }

  DiagramFile file_;
  std::vector<RawSlice> raw_;
  Level bottom_;
  bool palette_seen_ = false;
  bool boundary_seen_ = false;
  int boundary_line_ = 0;
  std::map<std::string, std::pair<int, int>> role_lines_;
};

}  // namespace

DiagramFile parse_morse(const std::string& text) { return Parser().run(text); }

DiagramFile read_morse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DiagramError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_morse(ss.str());
}

std::string slice_token(const Slice& s) {
  switch (s.kind) {
    case SliceKind::Cup:
      return s.right_up ? "cup>" : "cup<";
    case SliceKind::Cap:
      return s.right_up ? "cap>" : "cap<";
    case SliceKind::CrossPos:
      return "x+";
    case SliceKind::CrossNeg:
      return "x-";
  }
  return "?";
}

std::string render(const DiagramFile& f) {
  std::ostringstream os;
  os << "palette " << f.palette.spec() << "\n";
  for (const auto& d : f.declared) {
    os << "component " << d.label;
    if (d.mul) os << " mul=" << d.mul->to_string(f.palette);
    if (d.mul || d.weight != 0) os << " weight=" << d.weight;
    if (d.kirby) os << " kirby";
    os << "\n";
  }
  for (const auto& [label, role] : f.roles) os << "role " << label << (role == Role::Surgery ? " surgery" : " graph") << "\n";
  for (const auto& [label, g] : f.omega) os << "omega " << label << " = " << g.to_string(f.palette) << "\n";
  const Diagram& dg = f.diagram;
  if (dg.bottom().empty())
    os << "boundary closed\n";
  else
    os << "boundary tangle(" << dg.bottom()[0].component << (dg.bottom()[0].up ? "" : ",down") << ")\n";
  for (const auto& s : dg.slices()) {
    os << slice_token(s) << " " << s.position;
    if (s.kind == SliceKind::Cup) os << " " << s.label;
    os << "\n";
  }
  return os.str();
}

DiagramFile make_file(const Palette& p, const Diagram& d, const Coloring& colors) {
  DiagramFile f;
  f.palette = p;
  for (const auto& label : d.components()) {
    ComponentDecl decl{label, std::nullopt, 0, false};
    if (auto it = colors.find(label); it != colors.end()) {
      decl.mul = it->second.mul;
      decl.weight = it->second.weight;
      decl.kirby = it->second.kirby;
    }
    f.declared.push_back(std::move(decl));
  }
  f.diagram = d;
  return f;
}

}  // namespace gl11
