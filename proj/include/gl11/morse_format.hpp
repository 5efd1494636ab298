#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gl11/diagram.hpp"

namespace gl11 {

class ParseError : public DiagramError {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct ComponentDecl {
  std::string label;
  std::optional<GroupElement> mul;
  long long weight = 0;
  bool kirby = false;

  bool operator==(const ComponentDecl& o) const {
    return label == o.label && mul == o.mul && weight == o.weight && kirby == o.kirby;
  }
};

// Contents of a diagram or presentation file.
struct DiagramFile {
  Palette palette;
  std::vector<ComponentDecl> declared;  // in file order
  std::map<std::string, Role> roles;
  std::map<std::string, GroupElement> omega;
  Diagram diagram;

  const ComponentDecl* find(const std::string& label) const;
  // Colors of all components; throws DiagramError if one has no multiplicity.
  Coloring coloring() const;
  Role role(const std::string& label) const;

  bool operator==(const DiagramFile& o) const {
    return palette == o.palette && declared == o.declared && roles == o.roles && omega == o.omega &&
           diagram == o.diagram;
  }
};

// Grammar, one statement per line (or several separated by ';'):
//   palette qt | xi<l> | vars(a,b,...)[;xi<l>]
//   component <label> [mul=<g>] [weight=<n>] [kirby]
//   role <label> surgery|graph
//   omega <label> = <g>
//   boundary closed | tangle(<label>[,down])
//   cup> p [label] | cup< p [label] | cap> p | cap< p | x+ p | x- p
// `>` means the right leg of the arc points up. Unlabeled cups are matched
// with declared components in order of first appearance. '#' starts a comment.
DiagramFile parse_morse(const std::string& text);
DiagramFile read_morse_file(const std::string& path);

std::string render(const DiagramFile& f);
// Minimal file for a bare diagram with the given colors.
DiagramFile make_file(const Palette& p, const Diagram& d, const Coloring& colors);

std::string slice_token(const Slice& s);

}  // namespace gl11
