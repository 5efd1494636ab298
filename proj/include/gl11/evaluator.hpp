#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gl11/diagram.hpp"

namespace gl11 {

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sparse vector over the basis of strand states; bit i is the state of
// strand i (0 = boson e0, 1 = fermion e1).
class StateVector {
 public:
  using Amplitudes = std::map<std::uint64_t, LaurentPoly>;

  StateVector() = default;
  StateVector(const Palette& p, int width);
  static StateVector basis(const Palette& p, int width, std::uint64_t bits);

  int width() const { return width_; }
  const Amplitudes& amplitudes() const { return amps_; }
  LaurentPoly amplitude(std::uint64_t bits) const;
  // Adds c to the amplitude of `bits`, pruning zeros.
  void add(std::uint64_t bits, const LaurentPoly& c);

  bool operator==(const StateVector& o) const { return width_ == o.width_ && amps_ == o.amps_; }
  bool operator!=(const StateVector& o) const { return !(*this == o); }

  std::string to_string(const Palette& p) const;

 private:
  int nvars_ = 0;
  int order_ = 0;
  int width_ = 0;
  Amplitudes amps_;
};

// Applies one slice. `below` are the strands the slice acts on. Crossings
// must have both strands oriented upward.
StateVector transfer(const Palette& p, const Slice& s, const Level& below, const Coloring& colors,
                     const StateVector& v);

// States after each slice of the diagram, starting from `input`.
std::vector<StateVector> trace(const Palette& p, const Diagram& d, const Coloring& colors, const StateVector& input);

// Scalar of a 1-1 tangle (after crossing normalization), checked on both
// basis states. Throws EvaluationError if the morphism is not scalar.
Scalar evaluate_tangle(const Palette& p, const Diagram& d, const Coloring& colors);

// Invariant of a closed diagram with plain colors, cut along `cut`.
Scalar alexander(const Palette& p, const Diagram& d, const Coloring& colors, const std::string& cut);

// Expands every Kirby-colored component and sums the 2^r evaluations. The
// cut is `cut` if given, else the first plain component, else the first
// component of each expansion term.
Scalar alexander_kirby(const Palette& p, const Diagram& d, const Coloring& colors,
                       const std::optional<std::string>& cut = std::nullopt, std::size_t* terms = nullptr);

}  // namespace gl11
