#include "doctest.h"

#include "endslab/errors.hpp"
#include "endslab/quotient.hpp"

using namespace endslab;

TEST_CASE("Z onto Z/4 with K trivial: two 4-cycles") {
  auto z = Group::integers();
  auto q = quotient_schreier_pair(z, quotient::ModN{4}, {}, standard_gens(z), 4);
  CHECK(q.isomorphic);
  CHECK(q.index == 4);
  CHECK(q.upstairs.size() == 4);
  CHECK(q.downstairs.size() == 4);
  CHECK(q.upstairs.closed);
  CHECK(q.downstairs.closed);
  // A 4-cycle: every vertex has degree 2.
  std::vector<int> degree(4, 0);
  for (auto const& e : q.upstairs.edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  CHECK(degree == std::vector<int>{2, 2, 2, 2});
}

TEST_CASE("Z onto Z/2 with K full: single vertices") {
  auto z = Group::integers();
  auto q = quotient_schreier_pair(z, quotient::ModN{2}, {make_vector({1})}, standard_gens(z), 4);
  CHECK(q.isomorphic);
  CHECK(q.upstairs.size() == 1);
  CHECK(q.downstairs.size() == 1);
  CHECK(q.upstairs.edges.empty());
  CHECK(q.downstairs.edges.empty());
}

TEST_CASE("Z^2 onto (Z/2)^2: 4-vertex torus graphs") {
  auto z2 = Group::lattice(2);
  subgroup::Lattice twice{{{2, 0}, {0, 2}}};
  auto q = quotient_schreier_pair(z2, quotient::ByNormal{twice}, {}, standard_gens(z2), 4);
  CHECK(q.isomorphic);
  CHECK(q.index == 4);
  CHECK(q.upstairs.size() == 4);
  CHECK(q.downstairs.size() == 4);
}

TEST_CASE("Z onto Z/6 with K generated by 2") {
  auto z = Group::integers();
  auto q = quotient_schreier_pair(z, quotient::ModN{6}, {make_vector({2})}, standard_gens(z), 5);
  CHECK(q.isomorphic);
  // L = 2Z, so both sides are a single edge between two cosets.
  CHECK(q.upstairs.size() == 2);
  CHECK(q.downstairs.size() == 2);
}

TEST_CASE("Sym(3) by the alternating subgroup") {
  auto s3 = Group::symmetric(3);
  subgroup::Generated a3{{make_permutation({1, 2, 0})}};
  auto q = quotient_schreier_pair(s3, quotient::ByNormal{a3}, {}, standard_gens(s3), 3);
  CHECK(q.isomorphic);
  CHECK(q.index == 2);
  CHECK(q.upstairs.size() == 2);
  CHECK(q.downstairs.size() == 2);
}

TEST_CASE("generator sets with redundancy survive simplification") {
  auto z    = Group::integers();
  auto gens = SymmetricGenSet::close(z, {make_vector({1}), make_vector({5})});
  // 5 = 1 mod 4: the images of +-1 and +-5 coincide, but labels still differ.
  auto q = quotient_schreier_pair(z, quotient::ModN{4}, {}, gens, 4);
  CHECK(q.isomorphic);
  CHECK(q.upstairs.size() == 4);
}

TEST_CASE("unsupported and invalid quotients") {
  auto s3 = Group::symmetric(3);
  CHECK_THROWS_AS(quotient_schreier_pair(s3, quotient::ByNormal{subgroup::Generated{
                                                 {make_permutation({1, 0, 2})}}},
                                         {}, standard_gens(s3), 3),
                  InvalidParameter);
  auto f2 = Group::free(2);
  CHECK_THROWS_AS(quotient_schreier_pair(f2, quotient::ModN{4}, {}, standard_gens(f2), 3),
                  UnsupportedSubgroup);
  auto z = Group::integers();
  CHECK_THROWS_AS(quotient_schreier_pair(z, quotient::ModN{0}, {}, standard_gens(z), 3),
                  InvalidParameter);
  CHECK_THROWS_AS(quotient_schreier_pair(z, quotient::ModN{4}, {}, standard_gens(f2), 3),
                  FamilyMismatch);
}
