#include <set>

#include "doctest.h"
#include "support.hpp"

#include "endslab/action.hpp"
#include "endslab/ball.hpp"
#include "endslab/errors.hpp"
#include "endslab/wreath.hpp"

using namespace endslab;

namespace {
  Point ep(GroupElement g) {
    return element_point(std::move(g));
  }
}  // namespace

TEST_CASE("translation action: spec examples") {
  auto z = translation_action(Group::integers());
  CHECK(z.act(make_vector({2}), ep(make_vector({5}))) == ep(make_vector({7})));
  CHECK(z.basepoint() == ep(make_vector({0})));

  auto f2 = translation_action(Group::free(2));
  CHECK(f2.act(make_word(2, {1}), ep(make_word(2, {2}))) == ep(make_word(2, {1, 2})));

  auto c4 = translation_action(Group::cyclic(4));
  CHECK(c4.act(make_cyclic(4, 1), ep(make_cyclic(4, 3))) == ep(make_cyclic(4, 0)));
}

TEST_CASE("coset action: Z / 4Z") {
  auto a = coset_action(Group::integers(), subgroup::MultiplesOf{4});
  CHECK(a.act(make_vector({1}), coset_point(make_vector({3}))) == coset_point(make_vector({0})));
  CHECK(a.basepoint() == coset_point(make_vector({0})));
  CHECK(a.act(make_vector({-7}), a.basepoint()) == coset_point(make_vector({1})));
}

TEST_CASE("coset action on the trivial subgroup matches translation") {
  for (auto const& g : {Group::free(2), Group::lattice(2), Group::symmetric(4)}) {
    auto gens = standard_gens(g);
    auto t    = build_ball(translation_action(g), gens, 3);
    auto c    = build_ball(coset_action(g, subgroup::Trivial{}), gens, 3);
    CHECK(t.size() == c.size());
    CHECK(t.edges == c.edges);
    CHECK(t.dist == c.dist);
  }
}

TEST_CASE("coset action: Sym(3) / <(0 1)> against brute-force cosets") {
  auto g  = Group::symmetric(3);
  auto h  = make_permutation({1, 0, 2});
  auto a  = coset_action(g, subgroup::Generated{{h}});
  // Brute force: the left cosets {x, x h} as sets.
  std::set<std::set<GroupElement>> cosets;
  for (auto const& x : g.elements()) {
    cosets.insert({x, multiply(x, h)});
  }
  CHECK(cosets.size() == 3);

  auto orb = orbit(a, standard_gens(g), 100);
  CHECK_FALSE(orb.truncated);
  CHECK(orb.points.size() == 3);
  // Each coset point is a member of its brute-force coset.
  for (auto const& p : orb.points) {
    auto const& rep = p.as_coset_rep();
    CHECK(std::any_of(cosets.begin(), cosets.end(),
                      [&](auto const& c) { return c.count(rep) == 1; }));
  }
}

TEST_CASE("coset action: sublattice cosets against brute-force membership") {
  auto g = Group::lattice(2);
  subgroup::Lattice l{{{2, 1}, {0, 3}}};
  auto canon = coset_canonicalizer(g, l);
  // index |det| = 6
  std::set<GroupElement> reps;
  for (int64_t a = -6; a <= 6; ++a) {
    for (int64_t b = -6; b <= 6; ++b) {
      reps.insert(canon(make_vector({a, b})));
    }
  }
  CHECK(reps.size() == 6);
  // x ~ y iff x - y = i (2,1) + j (0,3) for some integers i, j.
  auto in_lattice = [](int64_t a, int64_t b) {
    if (a % 2 != 0) {
      return false;
    }
    int64_t i = a / 2;
    return (b - i) % 3 == 0;
  };
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    int64_t a1 = static_cast<int64_t>(rng() % 21) - 10, b1 = static_cast<int64_t>(rng() % 21) - 10;
    int64_t a2 = static_cast<int64_t>(rng() % 21) - 10, b2 = static_cast<int64_t>(rng() % 21) - 10;
    bool same = canon(make_vector({a1, b1})) == canon(make_vector({a2, b2}));
    CHECK(same == in_lattice(a1 - a2, b1 - b2));
  }
}

TEST_CASE("Hermite normal form") {
  auto h = hermite_normal_form({{2, 0}, {0, 2}, {2, 2}}, 2);
  CHECK(h == std::vector<std::vector<int64_t>>{{2, 0}, {0, 2}});
  CHECK(reduce_mod_lattice({3, -1}, h) == std::vector<int64_t>{1, 1});
  CHECK(hermite_normal_form({{0, 0}}, 2).empty());
  auto h2 = hermite_normal_form({{4, 6}, {6, 4}}, 2);
  // det = -20, so the product of the pivots is 20
  REQUIRE(h2.size() == 2);
  CHECK(h2[0][0] * h2[1][1] == 20);
}

TEST_CASE("unsupported subgroups name the supported cases") {
  try {
    coset_action(Group::free(2), subgroup::Generated{{make_word(2, {1})}});
    FAIL("expected UnsupportedSubgroup");
  } catch (UnsupportedSubgroup const& e) {
    CHECK(std::string(e.what()).find("supported subgroups") != std::string::npos);
  }
  CHECK_THROWS_AS(coset_action(Group::lattice(2), subgroup::MultiplesOf{3}), UnsupportedSubgroup);
  CHECK_NOTHROW(coset_action(Group::free(2), subgroup::Full{}));
}

TEST_CASE("f2_four_ends: four touching components after deleting B(1)") {
  auto a    = rule_action("f2_four_ends");
  auto gens = standard_gens(a.group());
  auto ball = build_ball(a, gens, 6);

  // Brute force: the same four rays built by hand as (ray, position) pairs.
  std::set<std::pair<int, int>> vertices{{0, 0}};
  for (int ray = 1; ray <= 4; ++ray) {
    for (int pos = 1; pos <= 6; ++pos) {
      vertices.insert({ray, pos});
    }
  }
  CHECK(ball.size() == vertices.size());
  for (auto const& [ray, pos] : vertices) {
    CHECK(ball.find(Point(IntTuple{{ray, pos}})).has_value());
  }

  auto cut = delete_and_split(ball, ball_vertices(ball, 1));
  CHECK(touching_count(cut) == 4);
  CHECK(cut.components.size() == 4);
}

TEST_CASE("f2_four_ends: edge rules") {
  auto a = rule_action("f2_four_ends");
  auto x = make_word(2, {1});
  auto y = make_word(2, {2});
  auto p = [](int64_t r, int64_t s) { return Point(IntTuple{{r, s}}); };
  CHECK(a.act(x, p(0, 0)) == p(2, 1));
  CHECK(a.act(inverse(x), p(0, 0)) == p(1, 1));
  CHECK(a.act(x, p(1, 1)) == p(0, 0));
  CHECK(a.act(x, p(2, 5)) == p(2, 6));
  CHECK(a.act(x, p(3, 2)) == p(3, 2));
  CHECK(a.act(y, p(0, 0)) == p(4, 1));
  CHECK(a.act(y, p(1, 4)) == p(1, 4));
}

TEST_CASE("unknown fixtures are rejected") {
  CHECK_THROWS_AS(rule_action("zzz"), UnknownFixture);
  CHECK_FALSE(fixtures().empty());
}

TEST_CASE("action axioms on samples") {
  auto lamp = lamplighter(2);
  std::vector<PointedAction> actions{
      translation_action(Group::integers()),
      translation_action(Group::lattice(3)),
      translation_action(Group::free(2)),
      translation_action(Group::symmetric(5)),
      coset_action(Group::integers(), subgroup::MultiplesOf{5}),
      coset_action(Group::lattice(2), subgroup::Lattice{{{2, 1}, {0, 3}}}),
      coset_action(Group::symmetric(4), subgroup::Generated{{make_permutation({1, 2, 3, 0})}}),
      coset_action(Group::cyclic(12), subgroup::MultiplesOf{4}),
      rule_action("f2_four_ends"),
      translation_action(lamp.group->as_group()),
      imprimitive_action(lamp.group, lamp.group->orbit_reps().front()),
      head_projection_action(lamp.group),
  };
  for (std::size_t i = 0; i < actions.size(); ++i) {
    CAPTURE(actions[i].description());
    CHECK(testing::action_axiom_failures(actions[i], 100, 17 + i) == 0);
  }
}

TEST_CASE("orbit: spec examples") {
  auto c4 = orbit(translation_action(Group::cyclic(4)), standard_gens(Group::cyclic(4)), 100);
  CHECK(c4.points.size() == 4);
  CHECK_FALSE(c4.truncated);

  auto z = orbit(translation_action(Group::integers()), standard_gens(Group::integers()), 10);
  CHECK(z.points.size() == 10);
  CHECK(z.truncated);

  // A finite orbit that exactly fills the budget is not truncated.
  auto exact = orbit(translation_action(Group::cyclic(4)), standard_gens(Group::cyclic(4)), 4);
  CHECK(exact.points.size() == 4);
  CHECK_FALSE(exact.truncated);
}

TEST_CASE("orbit is independent of generator order") {
  auto g      = Group::symmetric(4);
  auto action = coset_action(g, subgroup::Generated{{make_permutation({1, 0, 2, 3})}});
  auto gens   = standard_gens(g);
  std::vector<GroupElement> reversed(gens.elements().rbegin(), gens.elements().rend());
  auto rgens = SymmetricGenSet::close(g, reversed);
  auto a     = orbit(action, gens, 1000).points;
  auto b     = orbit(action, rgens, 1000).points;
  CHECK(a.size() == 12);
  CHECK(std::set<Point>(a.begin(), a.end()) == std::set<Point>(b.begin(), b.end()));
}
