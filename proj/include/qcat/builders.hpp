#pragma once

#include <utility>

#include "qcat/enriched.hpp"
#include "qcat/quantaloid.hpp"

namespace qcat {

// Plain finite categories. They serve two roles: as bases for free
// quantaloids and as the carriers of sites.
struct FiniteArrow {
  std::string name, src, dst;
  bool operator==(const FiniteArrow&) const = default;
};

class FiniteCategory {
 public:
  std::vector<std::string> objects;
  std::vector<FiniteArrow> arrows;  // identities included
  std::map<std::string, std::string> id;  // object -> identity arrow name
  // comp[{g,f}] = g.f for composable f: X -> Y, g: Y -> Z; keys exist
  // exactly for the composable pairs.
  std::map<std::pair<std::string, std::string>, std::string> comp;

  bool has_object(const std::string& x) const;
  const FiniteArrow& arrow(const std::string& name) const;
  const std::string& compose(const std::string& g, const std::string& f) const;
  std::vector<std::string> hom(const std::string& x, const std::string& y) const;  // x -> y

  bool operator==(const FiniteCategory&) const = default;
};

ValidationReport validate_category(const FiniteCategory& b);
FiniteCategory op_category(const FiniteCategory& b);
FiniteCategory terminal_category();

// Paths list arrows in application order: {"f","g"} stands for the
// composite g.f. One side of a relation may be empty when the other side
// is an endo-path; it then means the identity.
using ArrowPath = std::vector<std::string>;

// The finite category presented by generators and relations. Composable
// generator paths are enumerated up to path_cap and quotiented by the
// congruence the relations generate; composite arrows are named from their
// shortest path right-to-left, e.g. "g.f". Throws ResourceError when the
// cap is too small to certify that the presentation closes.
FiniteCategory category_from_presentation(
    const std::vector<std::string>& objects, const std::vector<FiniteArrow>& generators,
    const std::vector<std::pair<ArrowPath, ArrowPath>>& relations, size_t path_cap = 12);

enum class ChainLaw { frame, lukasiewicz };

// One-object quantaloid on the chain 0 < ... < 1 with n points, named as
// reduced fractions. frame composes by meet; lukasiewicz by truncated
// addition max(0, x + y - 1) on the grades. Unit is the top in both.
Quantaloid chain_quantale(int n, ChainLaw law = ChainLaw::frame);
Quantaloid two_quantale();

// Canonical subset element names: "{}", "{f}", "{f,g}", members sorted.
std::string subset_name(std::vector<std::string> members);
std::vector<std::string> subset_members(const std::string& name);

// hom(X,Y) = the powerset of B(X,Y) ordered by inclusion, composition
// elementwise, unit the singleton of the identity. Lattice elements are
// ordered by bitmask over the sorted arrow list, so ops on two free
// quantaloids agree index-for-index. Throws ResourceError when a hom
// would exceed 1024 elements.
Quantaloid free_quantaloid(const FiniteCategory& b);

struct FiniteFunctor {
  FiniteCategory dom, cod;
  std::map<std::string, std::string> obj_map;
  std::map<std::string, std::string> arr_map;
  bool operator==(const FiniteFunctor&) const = default;
};

ValidationReport validate_functor(const FiniteFunctor& f);
bool is_faithful(const FiniteFunctor& f);

// A faithful functor F into B corresponds to a category enriched in
// free_quantaloid(B) with extents F(x) and hom[x][y] = {F(a) : a an arrow
// y -> x of the domain}. These converters realize both directions; the
// enriched side round-trips exactly, the functor side up to arrow naming
// (lifted arrows keep their image's name when that is unambiguous and are
// qualified as "name@y>x" otherwise).
VCategory faithful_to_vcat(const FiniteFunctor& f);
VCategory faithful_to_vcat(const FiniteFunctor& f, std::shared_ptr<const Quantaloid> base);
FiniteFunctor vcat_to_faithful(const VCategory& a, const FiniteCategory& b);

}  // namespace qcat
