#ifndef ENDSLAB_BALL_HPP_
#define ENDSLAB_BALL_HPP_

// Finite balls of orbital graphs and the cut/component machinery used to
// estimate ends.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "action.hpp"
#include "element.hpp"
#include "gens.hpp"

namespace endslab {

  inline constexpr std::size_t default_vertex_budget = 2'000'000;

  // Undirected edge. For a pair {s, s^-1} with labels i < j, the edge u-v
  // with label i means gen(i).u = v. For an involution (i paired with
  // itself) the edge is stored once, from the endpoint with smaller index.
  struct Edge {
    uint32_t u;
    uint32_t v;
    uint32_t gen;

    bool is_loop() const noexcept {
      return u == v;
    }
    friend bool operator==(Edge const&, Edge const&) = default;
  };

  // The radius-R ball around the basepoint of an orbital graph, as a closed
  // subgraph. Vertices are in BFS order, so vertices at distance d occupy the
  // index range [layer_start[d], layer_start[d + 1]).
  struct GraphBall {
    std::vector<Point>        vertices;
    std::size_t               basepoint_index = 0;
    std::size_t               radius          = 0;
    std::vector<uint32_t>     dist;
    std::vector<Edge>         edges;
    std::vector<GroupElement> witness;  // witness[v].basepoint == vertices[v]
    std::vector<std::size_t>  layer_start;
    std::shared_ptr<SymmetricGenSet const> gens;
    std::shared_ptr<PointedAction const>   action;
    std::unordered_map<Point, uint32_t>    index;

    std::size_t size() const noexcept {
      return vertices.size();
    }
    std::optional<uint32_t> find(Point const& p) const;

    // No vertex on the outer sphere has a neighbour outside the ball, i.e.
    // the ball is the whole (finite) orbit.
    bool closed = false;
  };

  struct HalfEdge {
    uint32_t to;
    uint32_t gen;
    bool     forward;  // traversed from u to v of the stored edge
  };

  // Compressed adjacency over the stored edges. Loops appear once.
  struct Adjacency {
    std::vector<std::size_t> offsets;
    std::vector<HalfEdge>    half_edges;

    std::size_t degree(std::size_t v) const {
      return offsets[v + 1] - offsets[v];
    }
    HalfEdge const* begin(std::size_t v) const {
      return half_edges.data() + offsets[v];
    }
    HalfEdge const* end(std::size_t v) const {
      return half_edges.data() + offsets[v + 1];
    }
  };

  Adjacency build_adjacency(GraphBall const& ball);

  // Materializes the radius-R ball. Each BFS layer is expanded in parallel
  // and merged in canonical order, so the result is identical to
  // serial::build_ball. Throws BudgetExceeded when more than max_vertices
  // vertices would be needed.
  GraphBall build_ball(PointedAction const&   action,
                       SymmetricGenSet const& gens,
                       std::size_t            radius,
                       std::size_t            max_vertices = default_vertex_budget);

  struct CutResult {
    std::vector<uint32_t>              removed;     // sorted
    std::vector<std::vector<uint32_t>> components;  // sorted by least vertex
    std::vector<bool>                  touching;    // has a vertex at distance R
  };

  // Components of the ball with `removed` deleted.
  CutResult delete_and_split(GraphBall const& ball, std::vector<uint32_t> const& removed);

  std::size_t touching_count(CutResult const& cut);

  // Vertices at distance <= r (a prefix of the vertex list).
  std::vector<uint32_t> ball_vertices(GraphBall const& ball, std::size_t r);

  // Drops loops and keeps one edge per adjacent pair (the one with the
  // smallest label, then the earliest stored).
  GraphBall simplify(GraphBall const& ball);

  // Pointed labeled isomorphism of the two balls restricted to their common
  // radius, decided by a lock-step BFS from the basepoints that follows
  // half-edges with equal (label, direction). Throws ArityMismatch when the
  // generator lists differ in size or pairing.
  bool pointed_labeled_isomorphic(GraphBall const& a, GraphBall const& b);

  // Complete graph on all vertices of the ball, ignoring loops.
  bool is_complete_graph(GraphBall const& ball);

  struct Leaf {
    Point                 key;  // first coordinate g (or gK)
    std::vector<uint32_t> vertices;
  };

  // Partition of a ball over an imprimitive action into leaves {g} x X',
  // ordered by first appearance. Throws VertexTypeError for non-pair
  // vertices.
  std::vector<Leaf> leaf_decomposition(GraphBall const& ball);

  namespace serial {
    // Single-threaded queue BFS. Reference for build_ball.
    GraphBall build_ball(PointedAction const&   action,
                         SymmetricGenSet const& gens,
                         std::size_t            radius,
                         std::size_t            max_vertices = default_vertex_budget);
  }  // namespace serial

}  // namespace endslab

#endif  // ENDSLAB_BALL_HPP_
