#include <random>

#include "doctest.h"

#include "endslab/ball.hpp"
#include "endslab/dsl.hpp"
#include "endslab/errors.hpp"

using namespace endslab;
using namespace endslab::dsl;

namespace {
  ParseError parse_failure(std::string const& text) {
    try {
      parse_spec(text);
    } catch (ParseError const& e) {
      return e;
    }
    FAIL("expected a parse error for " << text);
    throw;
  }
}  // namespace

TEST_CASE("parse: spec examples") {
  auto z2 = parse_spec("Z^2");
  REQUIRE(z2.group);
  CHECK(z2.group->kind == GroupNode::Kind::Lattice);
  CHECK(z2.group->param == 2);
  CHECK_FALSE(z2.action);
  CHECK_FALSE(z2.gens);

  auto lamp = parse_spec("wreath(C(2), Z, translation)");
  REQUIRE(lamp.group);
  CHECK(lamp.group->kind == GroupNode::Kind::Wreath);
  CHECK((*lamp.group->base)->kind == GroupNode::Kind::Cyclic);
  CHECK((*lamp.group->base)->param == 2);
  CHECK((*lamp.group->top)->kind == GroupNode::Kind::Lattice);
  CHECK((*lamp.group->top)->param == 1);
  CHECK(lamp.group->top_action->kind == ActionNode::Kind::Translation);

  auto e = parse_failure("C(0)");
  CHECK(e.kind() == ParseError::Kind::Arity);
  CHECK(e.line() == 1);
  CHECK(e.column() == 1);
}

TEST_CASE("parse errors carry kind, position and expected tokens") {
  auto e = parse_failure("Z^");
  CHECK(e.kind() == ParseError::Kind::Syntax);
  CHECK(e.column() == 3);
  CHECK_FALSE(e.expected().empty());

  e = parse_failure("Z $");
  CHECK(e.kind() == ParseError::Kind::Lexical);
  CHECK(e.column() == 3);

  e = parse_failure("wreath(C(2),\n  Z,\n  sideways)");
  CHECK(e.kind() == ParseError::Kind::Syntax);
  CHECK(e.line() == 3);
  CHECK(e.column() == 3);

  e = parse_failure("F(0)");
  CHECK(e.kind() == ParseError::Kind::Arity);
  e = parse_failure("Z^65");
  CHECK(e.kind() == ParseError::Kind::Arity);
  e = parse_failure("wreath(C(2), Sym(21), regular)");
  CHECK(e.kind() == ParseError::Kind::Arity);
  CHECK(e.column() == 14);

  CHECK(parse_failure("").kind() == ParseError::Kind::Syntax);
  CHECK(parse_failure("Z Z").kind() == ParseError::Kind::Syntax);
  CHECK(parse_failure("F(2) with gens {x*}").kind() == ParseError::Kind::Syntax);
  CHECK(parse_failure("Z^99999999999999999999999").kind() == ParseError::Kind::Lexical);
}

TEST_CASE("elaborate: spec examples") {
  auto z = load("Z with gens {2,3}");
  CHECK(z.group == Group::integers());
  REQUIRE(z.gens->size() == 4);
  CHECK((*z.gens)[0] == make_vector({2}));
  CHECK((*z.gens)[3] == make_vector({-3}));
  CHECK(z.action->basepoint() == element_point(make_vector({0})));

  auto f2 = load("F(2)");
  CHECK(f2.gens->size() == 4);
  CHECK(f2.action->group() == Group::free(2));

  auto rule = load("rule(f2_four_ends)");
  CHECK(rule.action->description() == rule_action("f2_four_ends").description());
}

TEST_CASE("elaborate: actions and generators") {
  CHECK_THROWS_AS(load("F(2) acting coset(x)"), ElaborationError);
  CHECK_THROWS_AS(load("Z acting head"), ElaborationError);
  CHECK_THROWS_AS(load("rule(zzz)"), UnknownFixture);
  CHECK_THROWS_AS(load("Z with gens {(1,2)}"), ElaborationError);

  auto orbit_size = [](std::string const& text) {
    auto e = load(text);
    return orbit(*e.action, *e.gens, 1000).points.size();
  };
  CHECK(orbit_size("Sym(3) acting coset([1,0,2])") == 3);
  CHECK(orbit_size("Z^2 acting coset((2,0), (0,2))") == 4);
  CHECK(orbit_size("Z acting coset(4)") == 4);
  CHECK(orbit_size("C(6) acting coset(full)") == 1);
  CHECK(orbit_size("wreath(C(3), C(2), regular) acting imprimitive") == 6);
  CHECK(orbit_size("wreath(Z, C(2), regular) acting imprimitive(3)") == 6);
  CHECK(orbit_size("Sym(4) with gens all") == 24);

  auto words = load("F(2) with gens {x*y, y^-2}");
  CHECK(words.gens->size() == 4);
  CHECK((*words.gens)[0] == make_word(2, {1, 2}));
  CHECK((*words.gens)[2] == make_word(2, {-2, -2}));
}

TEST_CASE("nested wreath products") {
  auto e = load("wreath(C(2), wreath(C(2), C(2), regular), regular)");
  REQUIRE(e.wreath);
  REQUIRE(e.group.order());
  CHECK(*e.group.order() == 2048);
  // The orbit rep is the top action's basepoint; the regular action of the
  // inner wreath product on itself reaches all 2048 elements.
  CHECK(orbit(*e.action, *e.gens, 5000).points.size() == 2048);
}

TEST_CASE("print: canonical text") {
  CHECK(print(parse_spec("Z^1")) == "Z");
  CHECK(print(parse_spec("  wreath( C(2),Z ,translation )")) == "wreath(C(2), Z, translation)");
  CHECK(print(parse_spec("Z with gens { 2 , 3 }")) == "Z with gens {2, 3}");
  auto a = parse_spec("Sym(3) acting coset([1, 0, 2])");
  CHECK(parse_spec(print(a)) == a);
}

TEST_CASE("round trip on random specs") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 600; ++i) {
    auto ast  = random_ast(rng);
    auto text = print(ast);
    CAPTURE(text);
    SpecAst back;
    CHECK_NOTHROW(back = parse_spec(text));
    CHECK(back == ast);
    CHECK(print(back) == text);
  }
}

TEST_CASE("literal lists") {
  auto l = parse_literals("(2,0), (0,2)");
  REQUIRE(l.size() == 2);
  CHECK(l[0].kind == Literal::Kind::Tuple);
  CHECK(to_element(Group::lattice(2), l[1]) == make_vector({0, 2}));
  CHECK_THROWS_AS(to_element(Group::lattice(3), l[1]), ElaborationError);
  auto w = parse_literals("x^-1*y");
  REQUIRE(w.size() == 1);
  CHECK(to_element(Group::free(2), w[0]) == make_word(2, {-1, 2}));
  CHECK_THROWS_AS(to_element(Group::free(1), w[0]), ElaborationError);
  CHECK(to_element(Group::cyclic(4), parse_literals("-1")[0]) == make_cyclic(4, 3));
}
