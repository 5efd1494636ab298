#include "gl11/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace gl11 {

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

class UnionFind {
 public:
  int add() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

std::string describe(const Slice& s, std::size_t index) {
  return "slice " + std::to_string(index) + " at position " + std::to_string(s.position);
}

}  // namespace

bool label_less(const std::string& a, const std::string& b) {
  const bool da = all_digits(a), db = all_digits(b);
  if (da && db) {
    const auto trim_zeros = [](const std::string& s) {
      auto i = s.find_first_not_of('0');
      return i == std::string::npos ? std::string("0") : s.substr(i);
    };
    const std::string ta = trim_zeros(a), tb = trim_zeros(b);
    if (ta.size() != tb.size()) return ta.size() < tb.size();
    if (ta != tb) return ta < tb;
    return a < b;
  }
  if (da != db) return da;
  return a < b;
}

Diagram::Diagram(Level bottom, std::vector<Slice> slices) : bottom_(std::move(bottom)), slices_(std::move(slices)) {
  levels_.clear();
  levels_.reserve(slices_.size() + 1);
  levels_.push_back(bottom_);

  UnionFind uf;
  std::vector<int> arcs;
  std::map<int, std::string> arc_label;
  for (const auto& s : bottom_) {
    if (s.component.empty()) throw DiagramError("boundary strand without component label");
    arcs.push_back(uf.add());
    arc_label[arcs.back()] = s.component;
  }

  Level cur = bottom_;
  for (std::size_t i = 0; i < slices_.size(); ++i) {
    const Slice& s = slices_[i];
    const int width = static_cast<int>(cur.size());
    const int p = s.position;
    switch (s.kind) {
      case SliceKind::Cup: {
        if (p < 0 || p > width)
          throw DiagramError(describe(s, i) + ": cup position out of range for " + std::to_string(width) + " strands");
        if (s.label.empty()) throw DiagramError(describe(s, i) + ": cup without component label");
        cur.insert(cur.begin() + p, {Strand{s.label, !s.right_up}, Strand{s.label, s.right_up}});
        const int arc = uf.add();
        arc_label[arc] = s.label;
        arcs.insert(arcs.begin() + p, {arc, arc});
        break;
      }
      case SliceKind::Cap: {
        if (p < 0 || p + 1 >= width)
          throw DiagramError(describe(s, i) + ": cap needs two strands, level has " + std::to_string(width));
        const Strand& l = cur[static_cast<std::size_t>(p)];
        const Strand& r = cur[static_cast<std::size_t>(p) + 1];
        if (l.component != r.component)
          throw DiagramError(describe(s, i) + ": cap joins different components '" + l.component + "' and '" +
                             r.component + "'");
        if (l.up == r.up) throw DiagramError(describe(s, i) + ": cap joins strands with the same orientation");
        if (r.up != s.right_up) throw DiagramError(describe(s, i) + ": cap marker disagrees with strand orientation");
        uf.unite(arcs[static_cast<std::size_t>(p)], arcs[static_cast<std::size_t>(p) + 1]);
        cur.erase(cur.begin() + p, cur.begin() + p + 2);
        arcs.erase(arcs.begin() + p, arcs.begin() + p + 2);
        break;
      }
      case SliceKind::CrossPos:
      case SliceKind::CrossNeg: {
        if (p < 0 || p + 1 >= width)
          throw DiagramError(describe(s, i) + ": crossing needs two strands, level has " + std::to_string(width));
        std::swap(cur[static_cast<std::size_t>(p)], cur[static_cast<std::size_t>(p) + 1]);
        std::swap(arcs[static_cast<std::size_t>(p)], arcs[static_cast<std::size_t>(p) + 1]);
        break;
      }
    }
    levels_.push_back(cur);
  }

  std::map<std::string, std::set<int>> classes;
  for (const auto& [arc, label] : arc_label) classes[label].insert(uf.find(arc));
  for (const auto& [label, roots] : classes) {
    if (roots.size() > 1 && is_closed())
      throw DiagramError("component '" + label + "' consists of " + std::to_string(roots.size()) +
                         " separate closed curves");
  }
}

std::size_t Diagram::max_width() const {
  std::size_t w = 0;
  for (const auto& l : levels_) w = std::max(w, l.size());
  return w;
}

std::vector<std::string> Diagram::components() const {
  std::set<std::string> seen;
  for (const auto& s : bottom_) seen.insert(s.component);
  for (const auto& s : slices_)
    if (s.kind == SliceKind::Cup) seen.insert(s.label);
  std::vector<std::string> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), label_less);
  return out;
}

bool Diagram::has_component(const std::string& label) const {
  const auto c = components();
  return std::find(c.begin(), c.end(), label) != c.end();
}

// ---------------------------------------------------------------------------

std::vector<ComponentWrithe> components(const Diagram& d) {
  std::map<std::string, long long> w;
  for (const auto& c : d.components()) w[c] = 0;
  for (std::size_t i = 0; i < d.slices().size(); ++i) {
    const Slice& s = d.slices()[i];
    if (!s.is_crossing()) continue;
    const auto& lv = d.levels()[i];
    const auto& a = lv[static_cast<std::size_t>(s.position)];
    const auto& b = lv[static_cast<std::size_t>(s.position) + 1];
    if (a.component == b.component) w[a.component] += s.sign();
  }
  std::vector<ComponentWrithe> out;
  for (const auto& c : d.components()) out.push_back({c, w[c]});
  return out;
}

long long linking_number(const Diagram& d, const std::string& a, const std::string& b) {
  long long total = 0;
  for (std::size_t i = 0; i < d.slices().size(); ++i) {
    const Slice& s = d.slices()[i];
    if (!s.is_crossing()) continue;
    const auto& lv = d.levels()[i];
    const auto& x = lv[static_cast<std::size_t>(s.position)].component;
    const auto& y = lv[static_cast<std::size_t>(s.position) + 1].component;
    if ((x == a && y == b) || (x == b && y == a)) total += s.sign();
  }
  if (a == b) return total;
  if (total % 2 != 0 && d.is_closed())
    throw DiagramError("odd crossing count between '" + a + "' and '" + b + "'");
  return total / 2;
}

LinkingData linking_data(const Diagram& d, const std::map<std::string, Role>& roles) {
  LinkingData out;
  for (const auto& c : d.components()) {
    auto it = roles.find(c);
    (it != roles.end() && it->second == Role::Graph ? out.graph : out.surgery).push_back(c);
  }
  const auto writhes = components(d);
  std::map<std::string, long long> w;
  for (const auto& cw : writhes) w[cw.label] = cw.writhe;
  const std::size_t n = out.surgery.size();
  out.matrix.assign(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    out.matrix[i][i] = w[out.surgery[i]];
    for (std::size_t j = i + 1; j < n; ++j)
      out.matrix[i][j] = out.matrix[j][i] = linking_number(d, out.surgery[i], out.surgery[j]);
  }

  out.graph_links.assign(n, std::vector<long long>(out.graph.size(), 0));
  if (!out.graph.empty()) {
    const Diagram nd = normalize_crossings(d);
    auto index_of = [](const std::vector<std::string>& v, const std::string& x) -> int {
      auto it = std::find(v.begin(), v.end(), x);
      return it == v.end() ? -1 : static_cast<int>(it - v.begin());
    };
    for (std::size_t k = 0; k < nd.slices().size(); ++k) {
      const Slice& s = nd.slices()[k];
      if (!s.is_crossing()) continue;
      const auto& lv = nd.levels()[k];
      const auto& left = lv[static_cast<std::size_t>(s.position)].component;
      const auto& right = lv[static_cast<std::size_t>(s.position) + 1].component;
      if (s.kind == SliceKind::CrossPos) {
        const int j = index_of(out.graph, left), i = index_of(out.surgery, right);
        if (i >= 0 && j >= 0) out.graph_links[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += 1;
      } else {
        const int i = index_of(out.surgery, left), j = index_of(out.graph, right);
        if (i >= 0 && j >= 0) out.graph_links[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= 1;
      }
    }
  }
  return out;
}

Diagram reverse_component(const Diagram& d, const std::string& comp) {
  if (!d.has_component(comp)) throw DiagramError("unknown component '" + comp + "'");
  Level bottom = d.bottom();
  for (auto& s : bottom)
    if (s.component == comp) s.up = !s.up;
  std::vector<Slice> slices = d.slices();
  for (std::size_t i = 0; i < slices.size(); ++i) {
    Slice& s = slices[i];
    const auto& lv = d.levels()[i];
    if (s.is_crossing()) {
      const bool a = lv[static_cast<std::size_t>(s.position)].component == comp;
      const bool b = lv[static_cast<std::size_t>(s.position) + 1].component == comp;
      if (a != b) s.kind = s.kind == SliceKind::CrossPos ? SliceKind::CrossNeg : SliceKind::CrossPos;
    } else if (s.kind == SliceKind::Cup ? s.label == comp : lv[static_cast<std::size_t>(s.position)].component == comp) {
      s.right_up = !s.right_up;
    }
  }
  return Diagram(std::move(bottom), std::move(slices));
}

namespace {

class Normalizer {
 public:
  explicit Normalizer(const Level& bottom) : cur_(bottom) {}

  void emit(const Slice& s) {
    const auto p = static_cast<std::size_t>(s.position);
    if (s.is_crossing()) {
      const Strand l = cur_[p], r = cur_[p + 1];
      if (!r.up) {
        emit(Slice::cup(s.position, true, r.component));
        emit(Slice::cross(s.position + 1, s.sign()));
        emit(Slice::cap(s.position + 2, false));
        return;
      }
      if (!l.up) {
        emit(Slice::cup(s.position + 2, false, l.component));
        emit(Slice::cross(s.position + 1, s.sign()));
        emit(Slice::cap(s.position, true));
        return;
      }
      std::swap(cur_[p], cur_[p + 1]);
    } else if (s.kind == SliceKind::Cup) {
      cur_.insert(cur_.begin() + s.position, {Strand{s.label, !s.right_up}, Strand{s.label, s.right_up}});
    } else {
      cur_.erase(cur_.begin() + s.position, cur_.begin() + s.position + 2);
    }
    out_.push_back(s);
  }

  std::vector<Slice> take() { return std::move(out_); }

 private:
  Level cur_;
  std::vector<Slice> out_;
};

}  // namespace

Diagram normalize_crossings(const Diagram& d) {
  if (all_crossings_upward(d)) return d;
  Normalizer n(d.bottom());
  for (const auto& s : d.slices()) n.emit(s);
  return Diagram(d.bottom(), n.take());
}

bool all_crossings_upward(const Diagram& d) {
  for (std::size_t i = 0; i < d.slices().size(); ++i) {
    const Slice& s = d.slices()[i];
    if (!s.is_crossing()) continue;
    const auto& lv = d.levels()[i];
    if (!lv[static_cast<std::size_t>(s.position)].up || !lv[static_cast<std::size_t>(s.position) + 1].up) return false;
  }
  return true;
}

Diagram insert_slices(const Diagram& d, std::size_t level, const std::vector<Slice>& extra) {
  if (level > d.slices().size()) throw DiagramError("insertion level out of range");
  std::vector<Slice> slices(d.slices().begin(), d.slices().begin() + static_cast<std::ptrdiff_t>(level));
  slices.insert(slices.end(), extra.begin(), extra.end());
  slices.insert(slices.end(), d.slices().begin() + static_cast<std::ptrdiff_t>(level), d.slices().end());
  Diagram out(d.bottom(), std::move(slices));
  if (out.levels()[level + extra.size()] != d.levels()[level])
    throw DiagramError("inserted slices do not restore the strands they act on");
  return out;
}

std::vector<Slice> curl_slices(const Level& strands, int position, int sign) {
  if (position < 0 || static_cast<std::size_t>(position) >= strands.size())
    throw DiagramError("curl position out of range");
  const Strand& y = strands[static_cast<std::size_t>(position)];
  return {Slice::cup(position, y.up, y.component), Slice::cross(position + 1, sign), Slice::cap(position, y.up)};
}

Diagram cut_open(const Diagram& d, const std::string& comp) {
  if (!d.is_closed()) throw DiagramError("only closed diagrams can be cut open");
  if (!d.has_component(comp)) throw DiagramError("unknown component '" + comp + "'");
  std::size_t k = d.slices().size();
  for (std::size_t i = d.slices().size(); i-- > 0;) {
    const Slice& s = d.slices()[i];
    if (s.kind == SliceKind::Cap && d.levels()[i][static_cast<std::size_t>(s.position)].component == comp) {
      k = i;
      break;
    }
  }
  if (k == d.slices().size()) throw DiagramError("component '" + comp + "' has no cap");

  const int p = d.slices()[k].position;
  const Level& lv = d.levels()[k];
  const Strand l = lv[static_cast<std::size_t>(p)];
  const Strand r = lv[static_cast<std::size_t>(p) + 1];

  std::vector<Slice> out;
  out.reserve(d.slices().size() + 2 * static_cast<std::size_t>(p) + 1);
  for (std::size_t i = 0; i < k; ++i) {
    Slice s = d.slices()[i];
    s.position += 1;
    out.push_back(s);
  }
  for (int j = p; j >= 1; --j) {
    const Strand& x = lv[static_cast<std::size_t>(j) - 1];
    out.push_back(Slice::cross(j, x.up == l.up ? 1 : -1));
    out.push_back(Slice::cross(j + 1, x.up == r.up ? 1 : -1));
  }
  for (std::size_t i = k + 1; i < d.slices().size(); ++i) {
    Slice s = d.slices()[i];
    s.position += 3;
    out.push_back(s);
  }
  out.push_back(Slice::cap(0, l.up));
  Diagram t(Level{Strand{comp, r.up}}, std::move(out));
  if (!t.is_one_one_tangle()) throw DiagramError("internal error: cut did not produce a 1-1 tangle");
  return t;
}

BlowUp blow_up(const Diagram& d, std::size_t level, int position, int sign, const std::string& new_label) {
  if (sign != 1 && sign != -1) throw DiagramError("blow-up sign must be +1 or -1");
  if (level >= d.levels().size()) throw DiagramError("blow-up level out of range");
  const Level& lv = d.levels()[level];
  if (position < 0 || static_cast<std::size_t>(position) >= lv.size())
    throw DiagramError("blow-up position out of range at level " + std::to_string(level));
  if (new_label.empty() || d.has_component(new_label))
    throw DiagramError("blow-up label '" + new_label + "' is empty or already in use");

  const int linking = -sign;
  std::vector<Slice> extra = curl_slices(lv, position, sign);
  extra.push_back(Slice::cup(position + 1, false, new_label));
  extra.push_back(Slice::cross(position, linking));
  extra.push_back(Slice::cross(position, linking));
  Level with_meridian = lv;
  with_meridian.insert(with_meridian.begin() + position + 1, {Strand{new_label, true}, Strand{new_label, false}});
  for (const auto& s : curl_slices(with_meridian, position + 2, sign)) extra.push_back(s);
  extra.push_back(Slice::cap(position + 1, false));
  return BlowUp{insert_slices(d, level, extra), new_label, sign, linking};
}

// ---------------------------------------------------------------------------

MorseBuilder::MorseBuilder(Level bottom) : bottom_(bottom), strands_(std::move(bottom)) {}

void MorseBuilder::apply(const Slice& s) {
  const auto p = static_cast<std::size_t>(s.position);
  switch (s.kind) {
    case SliceKind::Cup:
      if (p > strands_.size()) throw DiagramError("builder: cup out of range");
      strands_.insert(strands_.begin() + s.position, {Strand{s.label, !s.right_up}, Strand{s.label, s.right_up}});
      break;
    case SliceKind::Cap:
      if (p + 1 >= strands_.size()) throw DiagramError("builder: cap out of range");
      strands_.erase(strands_.begin() + s.position, strands_.begin() + s.position + 2);
      break;
    default:
      if (p + 1 >= strands_.size()) throw DiagramError("builder: crossing out of range");
      std::swap(strands_[p], strands_[p + 1]);
  }
  slices_.push_back(s);
}

MorseBuilder& MorseBuilder::cup(int p, const std::string& label, bool right_up) {
  apply(Slice::cup(p, right_up, label));
  return *this;
}

MorseBuilder& MorseBuilder::cap(int p) {
  if (p < 0 || static_cast<std::size_t>(p) + 1 >= strands_.size()) throw DiagramError("builder: cap out of range");
  apply(Slice::cap(p, strands_[static_cast<std::size_t>(p) + 1].up));
  return *this;
}

MorseBuilder& MorseBuilder::cross(int p, int sign) {
  apply(Slice::cross(p, sign));
  return *this;
}

MorseBuilder& MorseBuilder::curl(int p, int sign) {
  for (const auto& s : curl_slices(strands_, p, sign)) apply(s);
  return *this;
}

MorseBuilder& MorseBuilder::twist(int p, int count, int sign) {
  for (int i = 0; i < count; ++i) cross(p, sign);
  return *this;
}

Diagram MorseBuilder::build() const { return Diagram(bottom_, slices_); }

namespace {

int sgn(long long x) { return x > 0 ? 1 : -1; }

void curls(MorseBuilder& b, int position, long long framing) {
  for (long long i = 0; i < std::llabs(framing); ++i) b.curl(position, sgn(framing));
}

}  // namespace

Diagram hopf_with_twists(HopfVariant v, long long f1, long long f2, const std::string& l1, const std::string& l2) {
  const int s = v == HopfVariant::Negative ? -1 : 1;
  MorseBuilder b;
  b.cup(0, l1, true).cup(2, l2, false);
  curls(b, 1, f1);
  curls(b, 2, f2);
  b.cross(1, s).cross(1, s).cap(2).cap(0);
  return b.build();
}

Diagram lens_chain(long long m, long long n) { return hopf_with_twists(HopfVariant::Negative, m, n); }

Diagram twist_region(long long k, const std::string& l1, const std::string& l2) {
  MorseBuilder b({Strand{l1, true}, Strand{l2, true}});
  b.twist(0, static_cast<int>(2 * std::llabs(k)), sgn(k));
  return b.build();
}

Diagram twisted_chain(long long f1, long long f2, long long lk) {
  MorseBuilder b;
  b.cup(0, "1", false).cup(1, "2", false);
  curls(b, 0, f1);
  curls(b, 1, f2);
  b.twist(0, static_cast<int>(2 * std::llabs(lk)), sgn(lk));
  b.cap(1).cap(0);
  return b.build();
}

Diagram braid_closure(int n, const std::vector<int>& word) {
  if (n < 1) throw DiagramError("braid needs at least one strand");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);  // perm[position] = starting strand
  for (int g : word) {
    const int i = std::abs(g);
    if (g == 0 || i >= n) throw DiagramError("braid generator " + std::to_string(g) + " out of range");
    std::swap(perm[static_cast<std::size_t>(i) - 1], perm[static_cast<std::size_t>(i)]);
  }
  // Strand starting at bottom position s ends at top position e and returns to s = e.
  std::vector<int> end_of(static_cast<std::size_t>(n));
  for (int pos = 0; pos < n; ++pos) end_of[static_cast<std::size_t>(perm[static_cast<std::size_t>(pos)])] = pos;
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] != 0) continue;
    ++next;
    for (int x = s; label[static_cast<std::size_t>(x)] == 0; x = end_of[static_cast<std::size_t>(x)])
      label[static_cast<std::size_t>(x)] = next;
  }
  MorseBuilder b;
  for (int i = 0; i < n; ++i) b.cup(i, std::to_string(label[static_cast<std::size_t>(i)]), false);
  for (int g : word) b.cross(std::abs(g) - 1, g > 0 ? 1 : -1);
  for (int i = n - 1; i >= 0; --i) b.cap(i);
  return b.build();
}

Diagram hopf_cut_tangle(HopfVariant v, const std::string& loop, const std::string& through) {
  const int s = v == HopfVariant::Negative ? -1 : 1;
  MorseBuilder b({Strand{through, true}});
  b.cup(0, loop, true).cross(1, s).cross(1, s).cap(0);
  return b.build();
}

}  // namespace gl11
