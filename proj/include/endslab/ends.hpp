#ifndef ENDSLAB_ENDS_HPP_
#define ENDSLAB_ENDS_HPP_

// Ball-scale estimation of the number of ends, and the machinery that makes
// the semidirect-product argument checkable on finite balls: cut
// augmentation, orbit subgraphs and three-segment paths.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "action.hpp"
#include "ball.hpp"
#include "gens.hpp"

namespace endslab {

  ////////////////////////////////////////////////////////////////////////
  // Ends profile
  ////////////////////////////////////////////////////////////////////////

  // e(k, K') for K' = k+1..K. Row k deletes the vertices at distance < k and
  // counts the components of {k <= dist <= K'} that contain a vertex at
  // distance exactly K'. Rows are non-increasing in K'.
  using EndsMatrix = std::vector<std::vector<std::size_t>>;

  struct Verdict {
    enum class Kind { AtMost, Stable, Growing };
    Kind        kind  = Kind::AtMost;
    std::size_t value = 0;  // m in AT_MOST(m) / STABLE(m); unused for GROWING

    std::string to_string() const;
    friend bool operator==(Verdict const&, Verdict const&) = default;
  };

  struct EndsProfile {
    std::vector<std::size_t> k_values;
    std::size_t              K = 0;
    EndsMatrix               matrix;
    Verdict                  verdict;
    std::vector<std::size_t> stabilized;  // e(k, K) per row
    std::vector<std::string> diagnostics;
    std::size_t              budget    = 0;
    bool                     truncated = false;
    std::size_t              ball_vertices = 0;
  };

  // Parallel over matrix cells (union-find per cell); bit-identical to
  // serial::ends_matrix. Requires max(k_values) < ball.radius.
  EndsMatrix ends_matrix(GraphBall const& ball, std::vector<std::size_t> const& k_values);

  // STABLE(m): e(k, K-1) == e(k, K) on every row and the stabilized values
  // are constantly m over the window. GROWING: stabilized values strictly
  // increase over a window of at least three rows. Otherwise AT_MOST(max).
  // The window is the top max(ceil(n/2), min(n, 3)) rows.
  Verdict classify(EndsMatrix const&         matrix,
                   std::vector<std::size_t>  const& k_values,
                   std::vector<std::string>* diagnostics = nullptr);

  EndsProfile ends_profile(GraphBall const& ball, std::vector<std::size_t> const& k_values);

  // Builds the radius-K ball and profiles it. Throws BudgetExceeded.
  EndsProfile ends_profile(PointedAction const&            action,
                           SymmetricGenSet const&          gens,
                           std::vector<std::size_t> const& k_values,
                           std::size_t                     K,
                           std::size_t                     budget = default_vertex_budget);

  ////////////////////////////////////////////////////////////////////////
  // Semidirect-product apparatus
  ////////////////////////////////////////////////////////////////////////

  // Component of v using only edges whose label pairs with a listed
  // generator. The subset must be closed under pairing.
  std::vector<uint32_t> orbit_subgraph(GraphBall const&                ball,
                                       uint32_t                        v,
                                       std::vector<std::size_t> const& generator_subset);

  struct OrbitStatus {
    uint32_t    vertex;
    bool        finite;          // orbit closed within the budget
    std::size_t orbit_size;      // points found (the budget when undetermined)
    std::size_t outside_ball;    // orbit points not materialized in the ball
  };

  struct AugmentedCut {
    std::vector<uint32_t>    cut;  // sorted, contains the input cut
    std::vector<OrbitStatus> status;
  };

  // For each x in the cut whose orbit under `orbit_gens` is finite within
  // `finiteness_budget`, adds the whole orbit (as far as it lies in the
  // ball). Undetermined orbits are reported and left alone.
  AugmentedCut augment_cut(GraphBall const&                ball,
                           std::vector<uint32_t> const&    cut,
                           std::vector<std::size_t> const& orbit_gens,
                           std::size_t                     finiteness_budget);

  // Splitting of G = N x| H. `head` maps g to the element (1, h) where h is
  // the H-component of g; generators with trivial head are N-generators,
  // generators equal to their head are H-generators.
  struct SemidirectSplit {
    std::function<GroupElement(GroupElement const&)> head;
    std::vector<std::size_t>                         n_gens;
    std::vector<std::size_t>                         h_gens;

    static SemidirectSplit from_head(SymmetricGenSet const& gens,
                                     std::function<GroupElement(GroupElement const&)> head);
  };

  // Z^dim = Z^(n) x Z^(dim-n) with the first n_axes coordinates as N.
  SemidirectSplit lattice_split(SymmetricGenSet const& gens, std::size_t n_axes);

  // G wr_X H = (sum_X G) x| H.
  SemidirectSplit wreath_split(SymmetricGenSet const& gens);

  struct ThreeSegmentPath {
    bool                  found = false;
    std::vector<uint32_t> path;       // x ... z ... z' ... y when found
    uint32_t              z = 0, z_prime = 0;
    std::size_t           candidates = 0;  // z values enumerated
    bool                  injective  = true;  // z -> z' injective on them
    std::string           failure;         // reason when !found
  };

  // Searches for x -> z (H-labels) -> z' (N-labels) -> y (H-labels) avoiding
  // the cut, with z' = (1, h h0^-1).y where (1, h).x = z and (n0, h0).x = y.
  // Throws CutError when x or y lies in the cut.
  ThreeSegmentPath three_segment_path(GraphBall const&             ball,
                                      SemidirectSplit const&       split,
                                      uint32_t                     x,
                                      uint32_t                     y,
                                      std::vector<uint32_t> const& cut);

  namespace serial {
    // Flood fill per cell. Reference for ends_matrix.
    EndsMatrix ends_matrix(GraphBall const& ball, std::vector<std::size_t> const& k_values);
  }  // namespace serial

}  // namespace endslab

#endif  // ENDSLAB_ENDS_HPP_
