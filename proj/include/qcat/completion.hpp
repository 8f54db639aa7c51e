#pragma once

#include "qcat/enriched.hpp"

namespace qcat {

// A class of weights: an explicit list, or a named family elaborated
// against whatever carrier it meets. "all" stands for every weight there
// is, "cauchy" for the weights given by left adjoint presheaves,
// "representables" for the representable ones (which generate nothing
// beyond the representables themselves).
enum class WeightFamily { explicit_list, all, cauchy, representables };

struct WeightClass {
  WeightFamily family = WeightFamily::explicit_list;
  std::vector<Weight> weights;  // explicit_list only

  static WeightClass all();
  static WeightClass cauchy();
  static WeightClass representables();
  static WeightClass of(std::vector<Weight> ws);
  bool operator==(const WeightClass&) const = default;
};

WeightClass op_weight_class(const WeightClass& phi, std::shared_ptr<const Quantaloid> ob);

// A class of presheaves on a fixed carrier: explicit members or a symbolic
// family elaborated on demand. Distributor membership is decided column by
// column, so the member set is all the data needed.
enum class PresheafFamily { explicit_list, all, representables, left_adjoints, closure };

struct PresheafClass {
  VCategory carrier;
  PresheafFamily family = PresheafFamily::explicit_list;
  std::vector<Presheaf> members;  // explicit_list only
  WeightClass phi;                // closure only
  size_t cap = 10000;             // closure only

  static PresheafClass explicit_on(VCategory carrier, std::vector<Presheaf> members);
  static PresheafClass tagged(VCategory carrier, PresheafFamily family);
  static PresheafClass closure_of(VCategory carrier, WeightClass phi, size_t cap = 10000);
};

// Every presheaf on the category: all column assignments satisfying the
// action inequality, deduplicated, in a deterministic order (extent, then
// column entries along the object list). Throws ResourceError past cap.
std::vector<Presheaf> enumerate_presheaves(const VCategory& a,
                                           const std::optional<std::string>& extent = std::nullopt,
                                           size_t cap = 20000);

// The explicit, deduplicated, canonically ordered member list of a class.
std::vector<Presheaf> elaborate(const PresheafClass& cls);

// "<extent|c1,c2,...>" with columns in carrier object order; doubles as the
// synthetic object name inside presheaf objects.
std::string presheaf_label(const Presheaf& p, const VCategory& a);

struct PresheafObjectResult {
  VCategory psh;        // objects are the class members
  VDistributor pi;      // psh -+-> carrier, entry (a, p) = p(a)
  std::vector<Presheaf> members;  // aligned with psh.objects
  std::map<Presheaf, std::string> classify;
  std::optional<VFunctor> yoneda;  // carrier -> psh when every representable is a member

  const std::string& name_of(const Presheaf& p) const;
  const Presheaf& member_of(const std::string& object) const;
  bool operator==(const PresheafObjectResult&) const = default;
};

// The category of class members with homs the right lifts
// psh.hom[p][q] = q <| p, together with the evaluation distributor pi.
PresheafObjectResult presheaf_object(const VCategory& a, const PresheafClass& cls);

// Least class of presheaves containing the representables and closed under
// phi-weighted colimits of diagrams whose columns already lie in the class.
// Throws ResourceError past cap, naming the weight being applied.
PresheafClass colimit_closure(const VCategory& a, const WeightClass& phi, size_t cap = 10000);

// The largest copresheaf q with p(a).q(a') <= hom[a][a'] everywhere, if it
// also satisfies the unit id <= join_a q(a).p(a); absent otherwise.
std::optional<Copresheaf> is_left_adjoint_presheaf(const Presheaf& p, const VCategory& a);

struct CocompletionResult {
  PresheafObjectResult object;
  VFunctor embedding;
  bool operator==(const CocompletionResult&) const = default;
};

// Presheaf object on the colimit closure of phi, with its embedding.
CocompletionResult cocompletion(const VCategory& a, const WeightClass& phi, size_t cap = 10000);

// Presheaf object on the left adjoint presheaves; its yoneda functor is the
// (always present) embedding.
PresheafObjectResult cauchy_completion(const VCategory& a);

// Free completion under psi-weighted limits: the cocompletion of the dual
// instance, dualized back component by component.
CocompletionResult completion(const VCategory& a, const WeightClass& psi, size_t cap = 10000);

}  // namespace qcat
