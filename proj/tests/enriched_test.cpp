#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcat/builders.hpp"
#include "qcat/enriched.hpp"

using namespace qcat;

namespace {

std::shared_ptr<const Quantaloid> two() {
  static auto p = std::make_shared<const Quantaloid>(two_quantale());
  return p;
}

std::shared_ptr<const Quantaloid> chain3() {
  static auto p = std::make_shared<const Quantaloid>(chain_quantale(3));
  return p;
}

// Two objects, no arrows between them.
VCategory discrete_pair() {
  VCategory a;
  a.base = two();
  a.objects = {"a", "b"};
  a.extent = {{"a", "*"}, {"b", "*"}};
  a.hom[{"a", "a"}] = "1";
  a.hom[{"b", "b"}] = "1";
  a.hom[{"a", "b"}] = "0";
  a.hom[{"b", "a"}] = "0";
  return a;
}

// All four subsets of {a,b} ordered by inclusion: the category of
// presheaves on the discrete pair over the two-element chain.
VCategory subset_cat() {
  VCategory x;
  x.base = two();
  x.objects = {"{}", "{a}", "{b}", "{a,b}"};
  for (const auto& o : x.objects) x.extent[o] = "*";
  auto contains = [](const std::string& s, const std::string& m) {
    for (const auto& e : subset_members(s))
      if (e == m) return true;
    return false;
  };
  for (const auto& p : x.objects)
    for (const auto& q : x.objects) {
      bool sub = true;
      for (const auto& m : subset_members(p))
        if (!contains(q, m)) sub = false;
      x.hom[{p, q}] = sub ? "1" : "0";
    }
  return x;
}

VFunctor yoneda_pair() {
  VFunctor f;
  f.dom = discrete_pair();
  f.cod = subset_cat();
  f.map = {{"a", "{a}"}, {"b", "{b}"}};
  return f;
}

VDistributor pair_dist(const std::string& at_a, const std::string& at_b) {
  Presheaf p;
  p.extent = "*";
  p.col = {{"a", at_a}, {"b", at_b}};
  return presheaf_dist(p, discrete_pair());
}

}  // namespace

TEST_CASE("star categories, their functors and distributors") {
  VCategory s = star_category(two(), "*");
  CHECK(validate_vcategory(s).ok());
  CHECK(s.hom.at({"*", "*"}) == "1");
  CHECK_THROWS_AS(star_category(two(), "nope"), InputError);

  // functors out of a star pick out exactly the objects of that extent
  VCategory a = discrete_pair();
  int functors = 0;
  for (const auto& o : a.objects) {
    VFunctor f;
    f.dom = s;
    f.cod = a;
    f.map = {{"*", o}};
    if (validate_vfunctor(f).ok()) ++functors;
  }
  CHECK(functors == 2);
  CHECK(validate_vfunctor(object_functor(a, "b")).ok());

  // distributors between stars are exactly the hom elements
  VCategory s3 = star_category(chain3(), "*");
  int dists = 0;
  for (const auto& e : chain3()->hom("*", "*").elements()) {
    VDistributor p;
    p.src = s3;
    p.dst = s3;
    p.mat[{"*", "*"}] = e;
    if (validate_vdistributor(p).ok()) ++dists;
  }
  CHECK(dists == 3);
}

TEST_CASE("identity distributor validity tracks category validity") {
  VCategory a = discrete_pair();
  CHECK(validate_vcategory(a).ok());
  CHECK(validate_vdistributor(identity_dist(a)).ok());

  VCategory bad = a;
  bad.hom[{"a", "a"}] = "0";  // kills the identity law, actions still hold
  CHECK(!validate_vcategory(bad).ok());
  CHECK(!validate_vdistributor(identity_dist(bad)).ok());
}

TEST_CASE("restriction is strictly functorial") {
  VCategory x = subset_cat();
  VDistributor id_x = identity_dist(x);
  VFunctor y = yoneda_pair();

  CHECK(restrict_dist(id_x, identity_functor(x), identity_functor(x)) == id_x);

  // restricting the identity along (f, id) is the conjoint, along (id, f)
  // the companion
  VDistributor cj = restrict_dist(id_x, y, identity_functor(x));
  CHECK(cj == conjoint(y));
  CHECK(cj.mat.at({"a", "{a,b}"}) == "1");  // {a} is inside {a,b}
  CHECK(cj.mat.at({"a", "{}"}) == "0");
  CHECK(restrict_dist(id_x, identity_functor(x), y) == companion(y));

  // double restriction composes the reindexings
  VFunctor at_a = object_functor(discrete_pair(), "a");
  CHECK(restrict_dist(restrict_dist(id_x, y, y), at_a, at_a) ==
        restrict_dist(id_x, compose_functor(y, at_a), compose_functor(y, at_a)));

  CHECK_THROWS_AS(restrict_dist(id_x, at_a, identity_functor(x)), InputError);
}

TEST_CASE("distributor composition: units and associativity") {
  VFunctor y = yoneda_pair();
  VCategory a = y.dom, x = y.cod;
  VDistributor cj = conjoint(y), cp = companion(y);

  CHECK(compose_dist(cj, identity_dist(x)) == cj);
  CHECK(compose_dist(identity_dist(a), cj) == cj);

  VDistributor lhs = compose_dist(compose_dist(cj, cp), cj);
  VDistributor rhs = compose_dist(cj, compose_dist(cp, cj));
  CHECK(lhs == rhs);

  // the adjunction inequalities between companion and conjoint
  CHECK(dist_leq(compose_dist(cp, cj), identity_dist(x)));
  CHECK(dist_leq(identity_dist(a), compose_dist(cj, cp)));
  CHECK(compose_dist(cp, cj) == compose_dist(cp, cj));  // matrices are plain data

  CHECK(companion(identity_functor(x)) == identity_dist(x));
  CHECK(conjoint(identity_functor(x)) == identity_dist(x));

  CHECK_THROWS_AS(compose_dist(cj, cj), InputError);
}

TEST_CASE("lifts through weights") {
  VCategory a = discrete_pair();
  VDistributor ya = pair_dist("1", "0"), yb = pair_dist("0", "1");

  // over the discrete pair a lift of one-column distributors is the meet of
  // pointwise implications
  CHECK(lift_dist(yb, Weight::unary(ya)).mat.at({"*", "*"}) == "0");
  CHECK(lift_dist(ya, Weight::unary(ya)).mat.at({"*", "*"}) == "1");
  CHECK(lift_dist(ya, Weight::unary(yb)).mat.at({"*", "*"}) == "0");

  CHECK(lift_dist(ya, Weight::empty(a)) == ya);
  CHECK_THROWS_AS(lift_dist(ya, Weight::empty(star_category(two(), "*"))), InputError);

  // exhaustive residual law over the two-element chain: p.r <= q iff
  // r <= q <| p, for every matrix in sight
  const char* bits[] = {"0", "1"};
  VCategory s = star_category(two(), "*");
  for (const char* paa : bits)
    for (const char* pab : bits)
      for (const char* pba : bits)
        for (const char* pbb : bits) {
          VDistributor p;  // a -+-> a on the discrete pair: any matrix works
          p.src = a;
          p.dst = a;
          p.mat = {{{"a", "a"}, paa}, {{"a", "b"}, pab}, {{"b", "a"}, pba}, {{"b", "b"}, pbb}};
          for (const char* qa : bits)
            for (const char* qb : bits) {
              VDistributor q = pair_dist(qa, qb);
              std::swap(q.src, q.dst);
              std::swap(q.src, q.dst);  // keep shape: star -+-> pair
              VDistributor lift = lift_dist(q, Weight::unary(p));
              for (const char* ra : bits)
                for (const char* rb : bits) {
                  VDistributor r;
                  r.src = s;
                  r.dst = a;
                  r.mat = {{{"a", "*"}, ra}, {{"b", "*"}, rb}};
                  CHECK(dist_leq(compose_dist(p, r), q) == dist_leq(r, lift));
                }
            }
        }
}

TEST_CASE("binary chains of weights") {
  VCategory x = subset_cat(), a = discrete_pair();
  VFunctor y = yoneda_pair();
  VDistributor q = identity_dist(x);
  VDistributor p1 = companion(y);       // a -+-> x
  VDistributor p2 = identity_dist(a);   // a -+-> a
  Weight w = Weight::of({p1, p2});
  CHECK(w.near() == x);
  CHECK(w.far() == a);

  VDistributor full = lift_dist(q, w);
  // iterated unary lifts agree with the chain lift
  CHECK(full == lift_dist(lift_dist(q, Weight::unary(p1)), Weight::unary(p2)));
  // so does lifting through the composed weight
  CHECK(full == lift_dist(q, Weight::unary(compose_dist(p1, p2))));
  CHECK(compose_weight(w) == compose_dist(p1, p2));

  // restriction of the lift: each entry is the lift of the restricted data
  for (const auto& yo : a.objects)
    for (const auto& xo : x.objects) {
      VDistributor qx = restrict_dist(q, identity_functor(x), object_functor(x, xo));
      VDistributor p2y = restrict_dist(p2, identity_functor(a), object_functor(a, yo));
      VDistributor entry = lift_dist(qx, Weight::of({p1, p2y}));
      CHECK(entry.mat.at({"*", "*"}) == full.mat.at({yo, xo}));
    }

  // a two-cell from the chain to a loose-cell is containment of composites
  CHECK(two_cell_holds(w, compose_dist(p1, p2)));
  CHECK(two_cell_holds(Weight::empty(x), identity_dist(x)));
  VDistributor bottom = compose_dist(p1, p2);
  for (auto& [k, v] : bottom.mat) v = "0";
  CHECK(!two_cell_holds(w, bottom));
}

TEST_CASE("extensions are the other residual") {
  VCategory a = discrete_pair();
  VCategory s = star_category(two(), "*");
  const char* bits[] = {"0", "1"};

  // exhaustive: r.p <= q iff r <= ext(q, p)
  for (const char* paa : bits)
    for (const char* pab : bits)
      for (const char* pba : bits)
        for (const char* pbb : bits) {
          VDistributor p;
          p.src = a;
          p.dst = a;
          p.mat = {{{"a", "a"}, paa}, {{"a", "b"}, pab}, {{"b", "a"}, pba}, {{"b", "b"}, pbb}};
          for (const char* qa : bits)
            for (const char* qb : bits) {
              VDistributor q;  // a -+-> star
              q.src = a;
              q.dst = s;
              q.mat = {{{"*", "a"}, qa}, {{"*", "b"}, qb}};
              VDistributor ext = ext_dist(q, Weight::unary(p));
              for (const char* ra : bits)
                for (const char* rb : bits) {
                  VDistributor r;
                  r.src = a;
                  r.dst = s;
                  r.mat = {{{"*", "a"}, ra}, {{"*", "b"}, rb}};
                  CHECK(dist_leq(compose_dist(r, p), q) == dist_leq(r, ext));
                }
            }
        }

  VDistributor q;
  q.src = a;
  q.dst = s;
  q.mat = {{{"*", "a"}, "1"}, {{"*", "b"}, "0"}};
  CHECK(ext_dist(q, Weight::empty(a)) == q);
}

TEST_CASE("extension equals lift computed in the op") {
  VCategory x = subset_cat(), a = discrete_pair();
  VFunctor y = yoneda_pair();
  VDistributor p1 = companion(y), p2 = identity_dist(a);
  Weight w = Weight::of({p1, p2});

  VDistributor q;  // far end of w into a star
  q.src = a;
  q.dst = star_category(two(), "*");
  q.mat = {{{"*", "a"}, "1"}, {{"*", "b"}, "0"}};

  // iterated extensions peel links from the near end
  CHECK(ext_dist(q, w) == ext_dist(ext_dist(q, Weight::unary(p2)), Weight::unary(p1)));

  auto ob = op_base(a);
  auto ob2 = std::make_shared<const Quantaloid>(op_quantaloid(*ob));
  VDistributor dual = op_vdistributor(lift_dist(op_vdistributor(q, ob), op_weight(w, ob)), ob2);
  CHECK(dual == ext_dist(q, w));
}

TEST_CASE("op round trips") {
  VCategory x = subset_cat();
  auto ob = op_base(x);
  auto ob2 = std::make_shared<const Quantaloid>(op_quantaloid(*ob));
  VCategory xop = op_vcategory(x, ob);
  CHECK(validate_vcategory(xop).ok());
  CHECK(op_vcategory(xop, ob2) == x);
  CHECK(xop.hom.at({"{a}", "{a,b}"}) == "0");
  CHECK(xop.hom.at({"{a,b}", "{a}"}) == "1");

  VDistributor cj = conjoint(yoneda_pair());
  CHECK(op_vdistributor(op_vdistributor(cj, ob), ob2) == cj);
  Weight w = Weight::of({companion(yoneda_pair()), identity_dist(discrete_pair())});
  CHECK(op_weight(op_weight(w, ob), ob2) == w);
  Weight e = Weight::empty(x);
  CHECK(op_weight(op_weight(e, ob), ob2) == e);
}

TEST_CASE("weighted colimits") {
  VCategory x = subset_cat(), a = discrete_pair();
  VFunctor y = yoneda_pair();

  // empty weight: the colimit is the diagram itself
  ColimitResult base = weighted_colimit(Weight::empty(a), y);
  REQUIRE(base.total());
  CHECK(*base.functor == y);
  CHECK(base.witnesses.at("a") == std::vector<std::string>{"{a}"});

  // the two-point weight picks out the union
  VDistributor top = pair_dist("1", "1");
  ColimitResult un = weighted_colimit(Weight::unary(top), y);
  REQUIRE(un.total());
  CHECK(un.witnesses.at("*") == std::vector<std::string>{"{a,b}"});

  // a representable weight lands on the image
  VFunctor at_a = object_functor(a, "a");
  ColimitResult rep = weighted_colimit(Weight::unary(companion(at_a)), y);
  REQUIRE(rep.total());
  CHECK(rep.functor->apply("*") == "{a}");

  // remove the union: the colimit is missing, which is an answer, not an
  // error
  VCategory x3 = x;
  x3.objects = {"{}", "{a}", "{b}"};
  x3.extent.erase("{a,b}");
  for (const auto& o : x.objects) {
    x3.hom.erase({o, "{a,b}"});
    x3.hom.erase({"{a,b}", o});
  }
  VFunctor y3 = y;
  y3.cod = x3;
  ColimitResult missing = weighted_colimit(Weight::unary(top), y3);
  CHECK(!missing.total());
  CHECK(missing.witnesses.at("*").empty());

  CHECK_THROWS_AS(weighted_colimit(Weight::empty(x), y), InputError);
}

TEST_CASE("weighted limits") {
  VCategory x = subset_cat(), a = discrete_pair();
  VFunctor y = yoneda_pair();

  ColimitResult base = weighted_limit(Weight::empty(a), y);
  REQUIRE(base.total());
  CHECK(*base.functor == y);

  // the two-point weight computes the intersection
  VDistributor cotop;  // a -+-> star, both entries full
  cotop.src = a;
  cotop.dst = star_category(two(), "*");
  cotop.mat = {{{"*", "a"}, "1"}, {{"*", "b"}, "1"}};
  ColimitResult meet = weighted_limit(Weight::unary(cotop), y);
  REQUIRE(meet.total());
  CHECK(meet.witnesses.at("*") == std::vector<std::string>{"{}"});

  // the limit is the colimit of the dualized instance
  auto ob = op_base(x);
  ColimitResult dual = weighted_colimit(op_weight(Weight::unary(cotop), ob), op_vfunctor(y, ob));
  CHECK(dual.witnesses == meet.witnesses);
}

TEST_CASE("presheaf helpers") {
  VCategory a = discrete_pair();
  Presheaf ya = representable(a, "a");
  CHECK(ya.extent == "*");
  CHECK(ya.col.at("a") == "1");
  CHECK(ya.col.at("b") == "0");
  CHECK(validate_presheaf(ya, a).ok());

  VDistributor d = presheaf_dist(ya, a);
  CHECK(validate_vdistributor(d).ok());
  CHECK(dist_presheaf(d) == ya);

  VCategory x = subset_cat();
  Presheaf on_x = representable(x, "{a}");
  Presheaf pulled = restrict_presheaf(on_x, yoneda_pair());
  CHECK(pulled.col.at("a") == "1");
  CHECK(pulled.col.at("b") == "0");

  VCategory chain = a;  // order the pair: a below b
  chain.hom[{"b", "a"}] = "1";
  CHECK(validate_vcategory(chain).ok());
  // presheaves over the ordered pair are its up-sets
  Presheaf up_a = representable(chain, "a");
  CHECK(up_a.col.at("b") == "1");
  CHECK(validate_presheaf(up_a, chain).ok());
  Presheaf up_b;
  up_b.extent = "*";
  up_b.col = {{"a", "0"}, {"b", "1"}};
  CHECK(validate_presheaf(up_b, chain).ok());
  Presheaf not_closed;
  not_closed.extent = "*";
  not_closed.col = {{"a", "1"}, {"b", "0"}};
  // hom[b][a] = 1 forces the column at b once a holds
  CHECK(!validate_presheaf(not_closed, chain).ok());
}

TEST_CASE("validation failures surface with coordinates") {
  VCategory a = discrete_pair();
  VCategory bad = a;
  bad.hom[{"a", "b"}] = "2";  // not an element
  auto rep = validate_vcategory(bad);
  REQUIRE(!rep.ok());
  CHECK(rep.violations.front().find("(a,b)") != std::string::npos);

  VFunctor f;
  f.dom = a;
  f.cod = subset_cat();
  f.map = {{"a", "{a}"}, {"b", "{a}"}};
  CHECK(validate_vfunctor(f).ok());
  f.map["b"] = "nope";
  CHECK(!validate_vfunctor(f).ok());

  VDistributor p = conjoint(yoneda_pair());
  p.mat.erase({"a", "{}"});
  auto drep = validate_vdistributor(p);
  REQUIRE(!drep.ok());
  CHECK(drep.violations.front().find("missing entry") != std::string::npos);

  Weight broken = Weight::of({identity_dist(a), identity_dist(subset_cat())});
  CHECK(!validate_weight(broken).ok());
  CHECK(validate_weight(Weight::of({companion(yoneda_pair()), identity_dist(a)})).ok());
}
