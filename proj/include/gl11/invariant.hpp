#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gl11/evaluator.hpp"
#include "gl11/morse_format.hpp"

namespace gl11 {

using IntMatrix = std::vector<std::vector<long long>>;

// Number of strictly positive eigenvalues of a symmetric integer matrix,
// computed exactly by congruence diagonalization over Q.
long long sigma_plus(const IntMatrix& m);

// Image of the meridian of each surgery component.
using CohomologyClass = std::map<std::string, GroupElement>;

struct Presentation {
  Palette palette;
  Diagram diagram;
  std::map<std::string, Role> roles;  // components not listed are surgery components
  CohomologyClass omega;

  Role role(const std::string& label) const;
  std::vector<std::string> surgery_components() const;
  std::vector<std::string> graph_components() const;
};

Presentation presentation_from_file(const DiagramFile& f);
// The lens-space chain with components 1 and 2 and no cohomology class.
Presentation lens_presentation(const Palette& p, long long m, long long n);

struct CompatibilityReport {
  bool relations_hold = true;
  bool computable = true;
  std::vector<std::string> problems;

  bool ok() const { return relations_hold && computable; }
  std::string summary() const;
};

CompatibilityReport check_compatible(const Presentation& pres, const CohomologyClass& omega);

class IncompatibleError : public std::runtime_error {
 public:
  explicit IncompatibleError(CompatibilityReport r);
  const CompatibilityReport& report() const { return report_; }

 private:
  CompatibilityReport report_;
};

class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InvariantResult {
  Scalar value;
  Scalar unnormalized;  // the Kirby-colored evaluation before dividing by 2^r (-1)^sigma+
  int r = 0;
  long long sigma_plus = 0;
  std::size_t terms = 0;
};

// Throws IncompatibleError when check_compatible fails and UnsupportedError
// for presentations with graph components.
InvariantResult invariant(const Presentation& pres, const CohomologyClass& omega);
inline InvariantResult invariant(const Presentation& pres) { return invariant(pres, pres.omega); }

// (-1)^(sigma+ + 1) d(u) d(v) for the chain with linking matrix [[m,-1],[-1,n]].
// Throws IncompatibleError if u^m v^-1 != 1 or u^-1 v^n != 1.
Scalar lens_closed_form(const Palette& p, long long m, long long n, const GroupElement& u, const GroupElement& v);

// All nontrivial classes with values in the torsion subgroup, ordered
// lexicographically by the exponent vector over the surgery components.
// Throws UnsupportedError if the linking matrix is singular (free H1).
std::vector<CohomologyClass> enumerate_cohomology(const Presentation& pres, const Palette& p);

// prod_e mul(e)^lk(K, e), including K itself through its framing.
GroupElement clk(const Diagram& d, const Coloring& colors, const std::string& k);

std::string render_class(const Palette& p, const CohomologyClass& omega);

}  // namespace gl11
