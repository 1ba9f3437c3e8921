#ifndef ENDSLAB_QUOTIENT_HPP_
#define ENDSLAB_QUOTIENT_HPP_

// Paired Schreier graphs Sch(G, L; S) and Sch(H, K; S-bar) for a quotient
// pi: G -> H, K <= H and L = pi^-1(K).

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "action.hpp"
#include "ball.hpp"
#include "element.hpp"
#include "gens.hpp"
#include "group.hpp"

namespace endslab {

  namespace quotient {
    // Z -> Z/n.
    struct ModN {
      int64_t n = 1;
    };
    // G -> G/N for a finite-index normal subgroup N (a sublattice of Z^k, or a
    // subgroup of a finite group). H is realized as the permutation group
    // induced on G/N.
    struct ByNormal {
      SubgroupSpec normal;
    };
  }  // namespace quotient

  using QuotientSpec = std::variant<quotient::ModN, quotient::ByNormal>;

  struct QuotientPair {
    GraphBall    upstairs;    // Sch(G, L; S), simplified
    GraphBall    downstairs;  // Sch(H, K; S-bar), simplified
    bool         isomorphic = false;
    Group        quotient_group;
    SubgroupSpec preimage;  // L
    std::size_t  index = 0;  // |G/N|
  };

  // K is the subgroup of H generated by the images of `k_lifts` (trivial when
  // empty), so L is generated by N together with the lifts. Throws
  // UnsupportedSubgroup for pairs outside the supported cases and
  // InvalidParameter when N is not normal or has index above 20.
  QuotientPair quotient_schreier_pair(Group const&                     g,
                                      QuotientSpec const&              q,
                                      std::vector<GroupElement> const& k_lifts,
                                      SymmetricGenSet const&           gens,
                                      std::size_t                      radius);

}  // namespace endslab

#endif  // ENDSLAB_QUOTIENT_HPP_
