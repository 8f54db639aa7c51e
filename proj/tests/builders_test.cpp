#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcat/builders.hpp"

using namespace qcat;

namespace {

// Path category a --f--> b --g--> c, fully materialized.
FiniteCategory path3() {
  return category_from_presentation({"a", "b", "c"}, {{"f", "a", "b"}, {"g", "b", "c"}}, {});
}

}  // namespace

TEST_CASE("chain quantales") {
  CHECK(two_quantale() == chain_quantale(2, ChainLaw::frame));
  CHECK(two_quantale().hom("*", "*").elements() == std::vector<std::string>{"0", "1"});
  CHECK_THROWS_AS(chain_quantale(1), InputError);

  Quantaloid c4 = chain_quantale(4);
  CHECK(c4.hom("*", "*").elements() == std::vector<std::string>{"0", "1/3", "2/3", "1"});
  CHECK(validate_quantaloid(c4).ok());
  Quantaloid c5 = chain_quantale(5);
  CHECK(c5.hom("*", "*").elements() == std::vector<std::string>{"0", "1/4", "1/2", "3/4", "1"});

  // frame law composes by meet
  for (const auto& x : c4.hom("*", "*").elements())
    for (const auto& y : c4.hom("*", "*").elements()) {
      OneCell cx = c4.cell("*", "*", x), cy = c4.cell("*", "*", y);
      CHECK(c4.compose(cx, cy) == c4.meet("*", "*", {cx, cy}));
    }

  Quantaloid luk = chain_quantale(3, ChainLaw::lukasiewicz);
  CHECK(validate_quantaloid(luk).ok());
  auto mul = [&](const std::string& x, const std::string& y) {
    return luk.compose(luk.cell("*", "*", x), luk.cell("*", "*", y)).elt;
  };
  // truncated addition max(0, x + y - 1) on the grades 0, 1/2, 1
  CHECK(mul("1/2", "1/2") == "0");
  CHECK(mul("1", "1/2") == "1/2");
  CHECK(mul("1/2", "1") == "1/2");
  CHECK(mul("1", "1") == "1");
  CHECK(mul("0", "1") == "0");
  CHECK(mul("1/2", "0") == "0");
}

TEST_CASE("subset element names") {
  CHECK(subset_name({}) == "{}");
  CHECK(subset_name({"g", "f"}) == "{f,g}");
  CHECK(subset_members("{f,g}") == std::vector<std::string>{"f", "g"});
  CHECK(subset_members("{}").empty());
  CHECK_THROWS_AS(subset_members("junk"), InputError);
}

TEST_CASE("presented categories") {
  FiniteCategory b = path3();
  CHECK(validate_category(b).ok());
  CHECK(b.arrows.size() == 6);
  CHECK(b.hom("a", "c") == std::vector<std::string>{"g.f"});
  CHECK(b.compose("g", "f") == "g.f");
  CHECK(b.compose("g.f", "id_a") == "g.f");
  CHECK(validate_category(op_category(b)).ok());
  CHECK(op_category(b).hom("c", "a") == std::vector<std::string>{"g.f"});

  // split idempotent: e.e = e
  FiniteCategory split = category_from_presentation({"*"}, {{"e", "*", "*"}}, {{{"e", "e"}, {"e"}}});
  CHECK(validate_category(split).ok());
  CHECK(split.arrows.size() == 2);
  CHECK(split.compose("e", "e") == "e");

  // section/retraction: s.r = id_x leaves the idempotent r.s
  FiniteCategory sec = category_from_presentation(
      {"x", "y"}, {{"r", "x", "y"}, {"s", "y", "x"}}, {{{"r", "s"}, {}}});
  CHECK(validate_category(sec).ok());
  CHECK(sec.arrows.size() == 5);
  CHECK(sec.compose("s", "r") == "id_x");
  CHECK(sec.compose("r", "s") == "r.s");
  CHECK(sec.compose("r.s", "r.s") == "r.s");
  CHECK(sec.compose("s", "r.s") == "s");

  // a free endo-arrow never closes
  CHECK_THROWS_AS(category_from_presentation({"*"}, {{"e", "*", "*"}}, {}), ResourceError);
  // relation sides must be parallel
  CHECK_THROWS_AS(
      category_from_presentation({"a", "b"}, {{"f", "a", "b"}}, {{{"f"}, {}}}),
      InputError);
}

TEST_CASE("free quantaloid on the terminal category is the two-element chain") {
  Quantaloid q = free_quantaloid(terminal_category());
  CHECK(validate_quantaloid(q).ok());
  const FiniteLattice& h = q.hom("*", "*");
  CHECK(h.elements() == std::vector<std::string>{"{}", "{id_*}"});
  CHECK(q.unit.at("*") == "{id_*}");
  // same order and composition table as the 2-chain, element names apart
  Quantaloid two = two_quantale();
  CHECK(q.comp.at({"*", "*", "*"}) == two.comp.at({"*", "*", "*"}));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(h.leq(i, j) == two.hom("*", "*").leq(i, j));
}

TEST_CASE("free quantaloid on the arrow category") {
  FiniteCategory arrow = category_from_presentation({"a", "b"}, {{"s", "a", "b"}}, {});
  Quantaloid q = free_quantaloid(arrow);
  CHECK(validate_quantaloid(q).ok());
  CHECK(q.hom("a", "a").size() == 2);
  CHECK(q.hom("b", "b").size() == 2);
  CHECK(q.hom("a", "b").size() == 2);
  CHECK(q.hom("b", "a").size() == 1);
  CHECK(q.compose(q.cell("a", "b", "{s}"), q.cell("a", "a", "{id_a}")).elt == "{s}");
  CHECK(q.compose(q.cell("a", "b", "{s}"), q.cell("a", "a", "{}")).elt == "{}");
}

TEST_CASE("free quantaloid commutes with op") {
  FiniteCategory b = path3();
  CHECK(free_quantaloid(op_category(b)) == op_quantaloid(free_quantaloid(b)));
}

TEST_CASE("faithful functor conversions") {
  FiniteCategory b = path3();
  // the subcategory spanned by a --f--> b, included into b
  FiniteCategory sub = category_from_presentation({"a", "b"}, {{"f", "a", "b"}}, {});
  FiniteFunctor inc;
  inc.dom = sub;
  inc.cod = b;
  inc.obj_map = {{"a", "a"}, {"b", "b"}};
  inc.arr_map = {{"id_a", "id_a"}, {"id_b", "id_b"}, {"f", "f"}};
  CHECK(validate_functor(inc).ok());
  CHECK(is_faithful(inc));

  VCategory a = faithful_to_vcat(inc);
  CHECK(validate_vcategory(a).ok());
  CHECK(a.ext("a") == "a");
  CHECK(a.hom.at({"b", "a"}) == "{f}");
  CHECK(a.hom.at({"a", "b"}) == "{}");
  CHECK(a.hom.at({"a", "a"}) == "{id_a}");

  // both round trips land exactly where they started
  CHECK(vcat_to_faithful(a, b) == inc);
  CHECK(faithful_to_vcat(vcat_to_faithful(a, b), a.base) == a);

  // discrete two-point fibre over the terminal category: the 2-enriched
  // discrete pair
  FiniteCategory pair = category_from_presentation({"x1", "x2"}, {}, {});
  FiniteFunctor disc;
  disc.dom = pair;
  disc.cod = terminal_category();
  disc.obj_map = {{"x1", "*"}, {"x2", "*"}};
  disc.arr_map = {{"id_x1", "id_*"}, {"id_x2", "id_*"}};
  VCategory d = faithful_to_vcat(disc);
  CHECK(validate_vcategory(d).ok());
  CHECK(d.hom.at({"x1", "x1"}) == "{id_*}");
  CHECK(d.hom.at({"x1", "x2"}) == "{}");

  // two parallel arrows with one image: not faithful, rejected
  FiniteCategory par = category_from_presentation(
      {"p", "q"}, {{"u", "p", "q"}, {"v", "p", "q"}}, {});
  FiniteFunctor fold;
  fold.dom = par;
  fold.cod = sub;
  fold.obj_map = {{"p", "a"}, {"q", "b"}};
  fold.arr_map = {{"id_p", "id_a"}, {"id_q", "id_b"}, {"u", "f"}, {"v", "f"}};
  CHECK(validate_functor(fold).ok());
  CHECK(!is_faithful(fold));
  CHECK_THROWS_AS(faithful_to_vcat(fold), InputError);
}
