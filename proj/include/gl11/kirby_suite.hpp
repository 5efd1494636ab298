#pragma once

#include <string>
#include <vector>

#include "gl11/invariant.hpp"

namespace gl11 {

struct BlowUpSite {
  std::size_t level = 0;
  int position = 0;
};

// A few arcs of surgery components spread over the diagram, covering both
// strand orientations where possible.
std::vector<BlowUpSite> blow_up_sites(const Presentation& pres, std::size_t max_sites);

struct BlowUpCheck {
  Scalar before;
  Scalar after;
  Scalar factor;  // unnormalized(after) / unnormalized(before)
  std::string new_label;
  bool equal() const { return before == after; }
};

// Blows up the strand at `site` with the given sign, extends omega to the
// new component and compares the invariants.
BlowUpCheck check_blow_up(const Presentation& pres, const BlowUpSite& site, int sign);

struct SuiteCase {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<SuiteCase> cases;
  bool ok() const;
};

// Runs every `*.case` manifest in `dir` (sorted by file name). Manifest lines:
//   kind slide | blowup
//   left <file> / right <file>                 (slide)
//   presentation <file> / sign +1|-1|both /
//   sites <n> | site <level> <position>         (blowup)
SuiteReport run_kirby_suite(const std::string& dir);

// GL11_SUITE_DIR if set, else the suite shipped with the sources.
std::string default_suite_dir();

}  // namespace gl11
