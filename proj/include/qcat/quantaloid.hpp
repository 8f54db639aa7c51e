#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qcat/lattice.hpp"

namespace qcat {

// A 1-cell f: src -> dst together with the id of its element in hom(src, dst).
struct OneCell {
  std::string src, dst, elt;
  bool operator==(const OneCell&) const = default;
  bool operator<(const OneCell& o) const {
    return std::tie(src, dst, elt) < std::tie(o.src, o.dst, o.elt);
  }
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Finite quantaloid: finitely many objects, each hom a finite lattice
// (complete because finite), composition join-preserving in each argument
// separately, with identity 1-cells.
//
// Storage follows the ordinary arrow direction throughout:
//   homs[{X,Y}]          lattice of 1-cells X -> Y
//   comp[{X,Y,Z}][g][f]  index of g.f in hom(X,Z), for g: Y -> Z, f: X -> Y
//   unit[X]              element id of the identity in hom(X,X)
class Quantaloid {
 public:
  std::vector<std::string> objects;
  std::map<std::pair<std::string, std::string>, FiniteLattice> homs;
  std::map<std::array<std::string, 3>, std::vector<std::vector<int>>> comp;
  std::map<std::string, std::string> unit;

  bool has_object(const std::string& x) const;
  const FiniteLattice& hom(const std::string& x, const std::string& y) const;

  // Checked constructors for cells; throw InputError on unknown data.
  OneCell cell(const std::string& x, const std::string& y, const std::string& e) const;
  OneCell id_cell(const std::string& x) const;
  OneCell bottom(const std::string& x, const std::string& y) const;
  OneCell top(const std::string& x, const std::string& y) const;

  bool leq(const OneCell& a, const OneCell& b) const;
  OneCell join(const std::string& x, const std::string& y, const std::vector<OneCell>& cs) const;
  OneCell meet(const std::string& x, const std::string& y, const std::vector<OneCell>& cs) const;

  OneCell compose(const OneCell& g, const OneCell& f) const;  // g: Y->Z after f: X->Y

  // Residuals of composition. Both always exist in a quantaloid; each is the
  // join of the cells satisfying its inequality.
  //   right_lift(h, g):      largest r: X -> Y with g.r <= h, for h: X -> Z, g: Y -> Z
  //   right_extension(h, f): largest r: Y -> Z with r.f <= h, for h: X -> Z, f: X -> Y
  OneCell right_lift(const OneCell& h, const OneCell& g) const;
  OneCell right_extension(const OneCell& h, const OneCell& f) const;

  bool operator==(const Quantaloid&) const = default;
};

// Every axiom instance that fails is reported with the offending cells.
ValidationReport validate_quantaloid(const Quantaloid& q);

// Reverses 1-cells: hom_op(X,Y) = hom(Y,X) with identical element ids and
// order; composition transposed. Involutive bit-exactly.
Quantaloid op_quantaloid(const Quantaloid& q);

}  // namespace qcat
