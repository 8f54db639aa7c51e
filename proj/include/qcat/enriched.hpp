#pragma once

#include <memory>
#include <optional>
#include <tuple>

#include "qcat/quantaloid.hpp"

namespace qcat {

// Direction conventions
// ---------------------
// The base quantaloid stores 1-cells in ordinary arrow direction X -> Y.
// Every enriched structure reads through this table:
//
//   category hom            hom[{x,y}] : ext(y) -> ext(x)
//   distributor p: B -+-> A (src=B, dst=A), entry mat[{a,b}] : ext(b) -> ext(a)
//   presheaf p of extent V on A      column col[a] = p(a) : V -> ext(a)
//   copresheaf q of extent V on A    column col[a] = q(a) : ext(a) -> V
//   conjoint of f: A -> X    X(f,1): X -+-> A, entry (a,x) = X.hom[{f a, x}]
//   companion of f: A -> X   X(1,f): A -+-> X, entry (x,a) = X.hom[{x, f a}]
//
// Distributors compose by (p.q)(a,c) = join_b p(a,b).q(b,c) for p: B -+-> A,
// q: C -+-> B. A weight is a chain [p1, ..., pn] with p_{i+1}.dst = p_i.src;
// its near end is p1.dst (where diagrams attach), its far end is pn.src
// (where colimits land). The empty chain carries an anchoring category.

class VCategory {
 public:
  std::shared_ptr<const Quantaloid> base;
  std::vector<std::string> objects;
  std::map<std::string, std::string> extent;
  std::map<std::pair<std::string, std::string>, std::string> hom;

  bool has_object(const std::string& x) const { return extent.count(x) != 0; }
  const std::string& ext(const std::string& x) const;
  OneCell hom_cell(const std::string& x, const std::string& y) const;

  bool operator==(const VCategory& o) const;
};

bool same_base(const VCategory& a, const VCategory& b);

class VFunctor {
 public:
  VCategory dom, cod;
  std::map<std::string, std::string> map;

  const std::string& apply(const std::string& x) const;
  bool operator==(const VFunctor& o) const = default;
};

class VDistributor {
 public:
  VCategory src, dst;
  std::map<std::pair<std::string, std::string>, std::string> mat;

  OneCell at(const std::string& a, const std::string& b) const;  // a in dst, b in src
  bool operator==(const VDistributor& o) const = default;
};

class Weight {
 public:
  std::vector<VDistributor> chain;

  static Weight unary(VDistributor p);
  static Weight of(std::vector<VDistributor> chain);
  static Weight empty(VCategory anchor);

  size_t arity() const { return chain.size(); }
  const VCategory& near() const;
  const VCategory& far() const;

  bool operator==(const Weight& o) const;

 private:
  std::optional<VCategory> anchor_;
};

// A presheaf of extent V on a carrier category, stored as its columns. The
// carrier is implied by context; presheaves compare by value, which is what
// repleteness means here.
struct Presheaf {
  std::string extent;
  std::map<std::string, std::string> col;

  bool operator==(const Presheaf&) const = default;
  bool operator<(const Presheaf& o) const {
    return std::tie(extent, col) < std::tie(o.extent, o.col);
  }
};

struct Copresheaf {
  std::string extent;
  std::map<std::string, std::string> col;
  bool operator==(const Copresheaf&) const = default;
};

ValidationReport validate_vcategory(const VCategory& a);
ValidationReport validate_vfunctor(const VFunctor& f);
ValidationReport validate_vdistributor(const VDistributor& p);
ValidationReport validate_weight(const Weight& w);
ValidationReport validate_presheaf(const Presheaf& p, const VCategory& a);

// One object "*" of the given extent, hom the identity 1-cell.
VCategory star_category(std::shared_ptr<const Quantaloid> base, const std::string& v);

VFunctor identity_functor(const VCategory& a);
VFunctor compose_functor(const VFunctor& g, const VFunctor& f);  // g after f
// The functor star(ext a) -> A naming the object a.
VFunctor object_functor(const VCategory& a_cat, const std::string& a);

VDistributor identity_dist(const VCategory& a);
VDistributor compose_dist(const VDistributor& p, const VDistributor& q);
VDistributor compose_weight(const Weight& w);  // identity of the anchor when empty
// Restriction p(f,g): dst reindexed along f, src along g.
VDistributor restrict_dist(const VDistributor& p, const VFunctor& f, const VFunctor& g);
VDistributor conjoint(const VFunctor& f);
VDistributor companion(const VFunctor& f);

bool dist_leq(const VDistributor& p, const VDistributor& q);
// Whether the chain's composite lies below q entrywise: the poset reading of
// a 2-cell from the chain to q.
bool two_cell_holds(const Weight& w, const VDistributor& q);

// Right lift q <| w of q: C -+-> A0 through a chain A_n -+-> ... -+-> A0,
// computed directly as a meet over intermediate object tuples of unary
// lifts against path composites. Result: C -+-> A_n.
VDistributor lift_dist(const VDistributor& q, const Weight& w);
// Right extension of q: A_n -+-> D along the chain. Result: A0 -+-> D.
VDistributor ext_dist(const VDistributor& q, const Weight& w);

struct ColimitResult {
  // far-end (for limits: near-end) object -> every witness object in the
  // target; an empty vector means NotFound for that object.
  std::map<std::string, std::vector<std::string>> witnesses;
  // Assembled from the first witness per object when all are present.
  std::optional<VFunctor> functor;
  bool total() const { return functor.has_value(); }
};

// Colimit of f: near(w) -> X weighted by w. A witness for far-end object y
// is any object of X whose hom row equals the corresponding row of the lift
// of the conjoint of f through w; ties are never broken, every witness is
// returned.
ColimitResult weighted_colimit(const Weight& w, const VFunctor& f);
// Limit of f: far(w) -> X weighted by w, by dualizing, computing the
// colimit in the op, and mapping back.
ColimitResult weighted_limit(const Weight& w, const VFunctor& f);

VDistributor presheaf_dist(const Presheaf& p, const VCategory& a);
Presheaf dist_presheaf(const VDistributor& d);
Presheaf representable(const VCategory& a, const std::string& obj);
Presheaf restrict_presheaf(const Presheaf& p, const VFunctor& f);  // columns at f(-)

std::shared_ptr<const Quantaloid> op_base(const VCategory& a);
VCategory op_vcategory(const VCategory& a, std::shared_ptr<const Quantaloid> ob);
VCategory op_vcategory(const VCategory& a);
VFunctor op_vfunctor(const VFunctor& f, std::shared_ptr<const Quantaloid> ob);
VDistributor op_vdistributor(const VDistributor& p, std::shared_ptr<const Quantaloid> ob);
Weight op_weight(const Weight& w, std::shared_ptr<const Quantaloid> ob);

}  // namespace qcat
