#ifndef ENDSLAB_CHECKS_HPP_
#define ENDSLAB_CHECKS_HPP_

// Ball-scale checks behind the `verify` subcommand.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ball.hpp"
#include "ends.hpp"
#include "wreath.hpp"

namespace endslab {

  struct LeafCheck {
    Point       key;
    uint32_t    deleted = 0;   // the vertex (g, x0)
    std::size_t remainder = 0; // vertices of the leaf left in the ball
    bool        isolated = false;  // remainder has no edges to other leaves
    bool        touching = false;  // some remainder component touches the sphere
    bool        passed   = false;
  };

  struct LeafDisconnectReport {
    bool                   passed = false;
    bool                   finite_orbit = false;
    std::size_t            orbit_size = 0;  // |X'|, or the budget when undetermined
    std::vector<LeafCheck> leaves;          // tested leaves only
    std::string            failure;
  };

  // Deletes (g, x0) from each testable leaf of an imprimitive ball.
  // Finite X': the leaf must lie strictly inside the ball, and the rest of
  // the leaf must split off from the other leaves without touching the
  // sphere, |X'| - 1 vertices in total. Infinite X': some component of the
  // rest of the leaf must touch the sphere.
  LeafDisconnectReport leaf_disconnect(GraphBall const&   ball,
                                       WreathGroup const& w,
                                       std::size_t        orbit_budget = 10000);

  struct PairOutcome {
    uint32_t         x = 0, y = 0;
    ThreeSegmentPath result;
  };

  struct ThreeSegmentReport {
    bool                     passed = false;
    std::size_t              eligible = 0;
    std::vector<PairOutcome> pairs;
    bool                     injective = true;
    std::string              failure;
  };

  // Samples `pairs` pairs (x, y), x != y, from the vertices with
  // cut_radius < dist <= radius / 2 whose H-orbit subgraph misses the cut
  // B(cut_radius), and runs three_segment_path on each.
  ThreeSegmentReport three_segment_check(GraphBall const&       ball,
                                         SemidirectSplit const& split,
                                         std::size_t            cut_radius,
                                         std::size_t            pairs,
                                         uint64_t               seed);

}  // namespace endslab

#endif  // ENDSLAB_CHECKS_HPP_
