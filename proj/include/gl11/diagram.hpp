#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gl11/palette.hpp"

namespace gl11 {

// Raised for structurally invalid diagrams and presentations.
class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SliceKind { Cup, Cap, CrossPos, CrossNeg };

// One elementary fragment of a Morse word.
//   Cup/Cap:   `right_up` tells whether the right leg of the arc is oriented
//              upward (written `>` in files) or downward (`<`).
//   Crossings: the oriented sign of the crossing; strands p and p+1 swap.
//   label:     component created by a cup (empty for other kinds).
struct Slice {
  SliceKind kind = SliceKind::Cup;
  int position = 0;
  bool right_up = true;
  std::string label;

  static Slice cup(int p, bool right_up, std::string label) { return {SliceKind::Cup, p, right_up, std::move(label)}; }
  static Slice cap(int p, bool right_up) { return {SliceKind::Cap, p, right_up, {}}; }
  static Slice cross(int p, int sign) { return {sign > 0 ? SliceKind::CrossPos : SliceKind::CrossNeg, p, true, {}}; }

  bool is_crossing() const { return kind == SliceKind::CrossPos || kind == SliceKind::CrossNeg; }
  int sign() const { return kind == SliceKind::CrossPos ? 1 : kind == SliceKind::CrossNeg ? -1 : 0; }

  bool operator==(const Slice& o) const {
    return kind == o.kind && position == o.position && label == o.label &&
           (is_crossing() || right_up == o.right_up);
  }
  bool operator!=(const Slice& o) const { return !(*this == o); }
};

struct Strand {
  std::string component;
  bool up = true;
  bool operator==(const Strand& o) const { return component == o.component && up == o.up; }
  bool operator!=(const Strand& o) const { return !(*this == o); }
};

using Level = std::vector<Strand>;

// Natural ordering on component labels: integers numerically, before names.
bool label_less(const std::string& a, const std::string& b);

// A validated Morse word read bottom to top. Every cup carries the label of
// its component; labels must coincide exactly with connected components.
class Diagram {
 public:
  Diagram() = default;
  // Throws DiagramError if the word is inconsistent.
  Diagram(Level bottom, std::vector<Slice> slices);

  const Level& bottom() const { return bottom_; }
  const Level& top() const { return levels_.back(); }
  const std::vector<Slice>& slices() const { return slices_; }
  // levels()[i] are the strands just below slice i; levels().back() is the top.
  const std::vector<Level>& levels() const { return levels_; }

  bool is_closed() const { return bottom_.empty() && top().empty(); }
  bool is_one_one_tangle() const { return bottom_.size() == 1 && top().size() == 1 && bottom_[0] == top()[0]; }
  std::size_t max_width() const;

  // Component labels in natural order.
  std::vector<std::string> components() const;
  bool has_component(const std::string& label) const;

  bool operator==(const Diagram& o) const { return bottom_ == o.bottom_ && slices_ == o.slices_; }
  bool operator!=(const Diagram& o) const { return !(*this == o); }

 private:
  Level bottom_;
  std::vector<Slice> slices_;
  std::vector<Level> levels_{Level{}};
};

struct ComponentColor {
  GroupElement mul;
  long long weight = 0;
  bool kirby = false;

  bool operator==(const ComponentColor& o) const { return mul == o.mul && weight == o.weight && kirby == o.kirby; }
};

using Coloring = std::map<std::string, ComponentColor>;

enum class Role { Surgery, Graph };

struct ComponentWrithe {
  std::string label;
  long long writhe = 0;
};

// Framing (signed self-crossing count) of every component, in label order.
std::vector<ComponentWrithe> components(const Diagram& d);

struct LinkingData {
  std::vector<std::string> surgery;  // row/column labels of `matrix`
  std::vector<std::vector<long long>> matrix;
  std::vector<std::string> graph;
  // graph_links[i][j]: surgery component i against graph edge j.
  std::vector<std::vector<long long>> graph_links;
};

// Components missing from `roles` are treated as surgery components.
LinkingData linking_data(const Diagram& d, const std::map<std::string, Role>& roles = {});
// Linking number between two distinct components (half the signed count of
// their mutual crossings).
long long linking_number(const Diagram& d, const std::string& a, const std::string& b);

Diagram reverse_component(const Diagram& d, const std::string& comp);

// Rewrites every crossing that is not upward-upward by conjugating it with
// cups and caps, so that all crossings have both strands oriented upward.
Diagram normalize_crossings(const Diagram& d);
bool all_crossings_upward(const Diagram& d);

// Inserts width-preserving slices just below slice `level` (level ==
// slices().size() appends at the top).
Diagram insert_slices(const Diagram& d, std::size_t level, const std::vector<Slice>& extra);

// Slices of a curl with writhe `sign` on the strand at `position` of `strands`.
std::vector<Slice> curl_slices(const Level& strands, int position, int sign);

// Cuts component `comp` of a closed diagram at its topmost cap, producing a
// 1-1 tangle whose closure is the original diagram.
Diagram cut_open(const Diagram& d, const std::string& comp);

struct BlowUp {
  Diagram diagram;
  std::string meridian;      // label of the new component
  int meridian_framing = 0;  // equals the sign argument
  int linking = 0;           // linking number of meridian with the strand
};

// Adds a curl of writhe `sign` to the strand at (level, position) and
// encircles it with a new unknot of framing `sign` linking it once.
BlowUp blow_up(const Diagram& d, std::size_t level, int position, int sign, const std::string& new_label);

// Incremental construction of Morse words with automatic cap markers.
class MorseBuilder {
 public:
  explicit MorseBuilder(Level bottom = {});
  MorseBuilder& cup(int p, const std::string& label, bool right_up);
  MorseBuilder& cap(int p);
  MorseBuilder& cross(int p, int sign);
  MorseBuilder& curl(int p, int sign);
  // `count` crossings of the given sign at p.
  MorseBuilder& twist(int p, int count, int sign);
  const Level& strands() const { return strands_; }
  Diagram build() const;

 private:
  void apply(const Slice& s);
  Level bottom_;
  Level strands_;
  std::vector<Slice> slices_;
};

enum class HopfVariant { Negative, Positive };

// Two-component Hopf link, components `l1` and `l2`, clasped by two crossings
// of the variant's sign, with f1 and f2 curls adding framing to each.
Diagram hopf_with_twists(HopfVariant v, long long f1 = 0, long long f2 = 0, const std::string& l1 = "1",
                         const std::string& l2 = "2");
// The chain whose linking matrix is [[m,-1],[-1,n]].
Diagram lens_chain(long long m, long long n);
// Two upward strands (components 1 and 2) twisted by 2|k| crossings of sign k.
Diagram twist_region(long long k, const std::string& l1 = "1", const std::string& l2 = "2");
// Two unknots with framings f1, f2 and linking number lk.
Diagram twisted_chain(long long f1, long long f2, long long lk);
// Closure of a braid on n strands; generator +i / -i crosses strands i-1
// and i positively / negatively. Components are labeled 1, 2, ... by the
// cycles of the braid permutation, ordered by their smallest strand.
Diagram braid_closure(int n, const std::vector<int>& word);
// The 1-1 tangle obtained by cutting a Hopf link of the given variant open
// along component `through`, with `loop` the closed component.
Diagram hopf_cut_tangle(HopfVariant v, const std::string& loop, const std::string& through);

}  // namespace gl11
