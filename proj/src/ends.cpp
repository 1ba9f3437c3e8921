#include "endslab/ends.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>

#include "endslab/errors.hpp"
#include "endslab/wreath.hpp"
#include "union_find.hpp"

namespace endslab {

  namespace {
    constexpr uint32_t NONE = std::numeric_limits<uint32_t>::max();

    struct Cell {
      std::size_t row;
      std::size_t k;
      std::size_t outer;
    };

    std::vector<Cell> cells_of(GraphBall const& ball, std::vector<std::size_t> const& k_values) {
      std::vector<Cell> cells;
      for (std::size_t r = 0; r < k_values.size(); ++r) {
        if (k_values[r] >= ball.radius) {
          throw InvalidParameter("inner radius " + std::to_string(k_values[r])
                                 + " must be below the ball radius "
                                 + std::to_string(ball.radius));
        }
        for (std::size_t outer = k_values[r] + 1; outer <= ball.radius; ++outer) {
          cells.push_back({r, k_values[r], outer});
        }
      }
      return cells;
    }

    EndsMatrix shape_matrix(GraphBall const& ball, std::vector<std::size_t> const& k_values) {
      EndsMatrix m(k_values.size());
      for (std::size_t r = 0; r < k_values.size(); ++r) {
        m[r].assign(ball.radius - k_values[r], 0);
      }
      return m;
    }

    std::size_t count_cell_union_find(GraphBall const& ball, Cell const& c) {
      std::size_t lo = ball.layer_start[c.k];
      std::size_t hi = ball.layer_start[c.outer + 1];
      detail::UnionFind uf(hi - lo);
      for (auto const& e : ball.edges) {
        if (e.u >= lo && e.u < hi && e.v >= lo && e.v < hi) {
          uf.unite(static_cast<uint32_t>(e.u - lo), static_cast<uint32_t>(e.v - lo));
        }
      }
      std::vector<bool> seen(hi - lo, false);
      std::size_t       count = 0;
      for (std::size_t v = ball.layer_start[c.outer]; v < hi; ++v) {
        auto root = uf.find(static_cast<uint32_t>(v - lo));
        if (!seen[root]) {
          seen[root] = true;
          ++count;
        }
      }
      return count;
    }
  }  // namespace

  std::string Verdict::to_string() const {
    switch (kind) {
      case Kind::Stable: return "STABLE(" + std::to_string(value) + ")";
      case Kind::Growing: return "GROWING";
      case Kind::AtMost: return "AT_MOST(" + std::to_string(value) + ")";
    }
    return "?";
  }

  EndsMatrix ends_matrix(GraphBall const& ball, std::vector<std::size_t> const& k_values) {
    auto       cells = cells_of(ball, k_values);
    EndsMatrix m     = shape_matrix(ball, k_values);
    std::vector<std::size_t> values(cells.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < cells.size(); ++i) {
      values[i] = count_cell_union_find(ball, cells[i]);
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
      m[cells[i].row][cells[i].outer - cells[i].k - 1] = values[i];
    }
    return m;
  }

  namespace serial {
    EndsMatrix ends_matrix(GraphBall const& ball, std::vector<std::size_t> const& k_values) {
      auto       cells = cells_of(ball, k_values);
      EndsMatrix m     = shape_matrix(ball, k_values);
      auto       adj   = build_adjacency(ball);
      for (auto const& c : cells) {
        std::size_t           lo = ball.layer_start[c.k];
        std::size_t           hi = ball.layer_start[c.outer + 1];
        std::vector<bool>     visited(ball.size(), false);
        std::vector<uint32_t> stack;
        std::size_t           count = 0;
        for (std::size_t s = lo; s < hi; ++s) {
          if (visited[s]) {
            continue;
          }
          bool touches = false;
          visited[s]   = true;
          stack.push_back(static_cast<uint32_t>(s));
          while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            touches = touches || ball.dist[v] == c.outer;
            for (auto const* h = adj.begin(v); h != adj.end(v); ++h) {
              if (h->to >= lo && h->to < hi && !visited[h->to]) {
                visited[h->to] = true;
                stack.push_back(h->to);
              }
            }
          }
          count += touches ? 1 : 0;
        }
        m[c.row][c.outer - c.k - 1] = count;
      }
      return m;
    }
  }  // namespace serial

  Verdict classify(EndsMatrix const&               matrix,
                   std::vector<std::size_t> const& k_values,
                   std::vector<std::string>*       diagnostics) {
    auto note = [&](std::string s) {
      if (diagnostics) {
        diagnostics->push_back(std::move(s));
      }
    };
    std::size_t const n = matrix.size();
    if (n == 0) {
      note("no inner radii given");
      return {Verdict::Kind::AtMost, 0};
    }
    std::vector<std::size_t> stab(n);
    bool                     settled = true;
    for (std::size_t r = 0; r < n; ++r) {
      auto const& row = matrix[r];
      stab[r]         = row.back();
      if (row.size() < 2 || row[row.size() - 2] != row.back()) {
        settled = false;
        note("row k=" + std::to_string(k_values[r])
             + " has not settled in its last two columns");
      }
    }
    std::size_t const w     = std::max((n + 1) / 2, std::min<std::size_t>(n, 3));
    std::size_t const first = n - w;
    bool constant   = true;
    bool increasing = w >= 3;
    for (std::size_t r = first + 1; r < n; ++r) {
      constant   = constant && stab[r] == stab[first];
      increasing = increasing && stab[r] > stab[r - 1];
    }
    if (w < 3) {
      note("fewer than 3 rows in the window; GROWING cannot be decided");
    }
    if (settled && constant) {
      return {Verdict::Kind::Stable, stab.back()};
    }
    if (increasing) {
      return {Verdict::Kind::Growing, 0};
    }
    if (!constant) {
      note("stabilized values are neither constant nor strictly increasing over the window");
    }
    return {Verdict::Kind::AtMost, *std::max_element(stab.begin(), stab.end())};
  }

  EndsProfile ends_profile(GraphBall const& ball, std::vector<std::size_t> const& k_values) {
    if (k_values.empty()) {
      throw InvalidParameter("need at least one k");
    }
    EndsProfile p;
    p.k_values = k_values;
    std::sort(p.k_values.begin(), p.k_values.end());
    p.k_values.erase(std::unique(p.k_values.begin(), p.k_values.end()), p.k_values.end());
    p.K             = ball.radius;
    p.matrix        = ends_matrix(ball, p.k_values);
    p.ball_vertices = ball.size();
    for (auto const& row : p.matrix) {
      p.stabilized.push_back(row.back());
    }
    p.verdict = classify(p.matrix, p.k_values, &p.diagnostics);
    return p;
  }

  EndsProfile ends_profile(PointedAction const&            action,
                           SymmetricGenSet const&          gens,
                           std::vector<std::size_t> const& k_values,
                           std::size_t                     K,
                           std::size_t                     budget) {
    if (k_values.empty() || *std::max_element(k_values.begin(), k_values.end()) >= K) {
      throw InvalidParameter("need max(k) < K and at least one k");
    }
    auto p   = ends_profile(build_ball(action, gens, K, budget), k_values);
    p.budget = budget;
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Orbit subgraphs and cut augmentation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<bool> label_mask(GraphBall const& ball, std::vector<std::size_t> const& subset) {
      if (!closed_under_pairing(*ball.gens, subset)) {
        throw InvalidParameter("generator subset is not closed under inverses");
      }
      std::vector<bool> mask(ball.gens->size(), false);
      for (auto i : subset) {
        mask.at(ball.gens->pair_representative(i)) = true;
      }
      return mask;
    }

    // BFS tree from `start` along allowed labels, avoiding `gone`.
    struct Search {
      std::vector<uint32_t> order;
      std::vector<uint32_t> parent;
      std::vector<uint32_t> via;  // generator applied to the parent
    };

    Search search(GraphBall const&         ball,
                  Adjacency const&         adj,
                  uint32_t                 start,
                  std::vector<bool> const& mask,
                  std::vector<bool> const& gone) {
      Search s;
      s.parent.assign(ball.size(), NONE);
      s.via.assign(ball.size(), NONE);
      s.parent[start] = start;
      s.order.push_back(start);
      for (std::size_t head = 0; head < s.order.size(); ++head) {
        auto v = s.order[head];
        for (auto const* h = adj.begin(v); h != adj.end(v); ++h) {
          if (!mask[h->gen] || gone[h->to] || s.parent[h->to] != NONE) {
            continue;
          }
          s.parent[h->to] = v;
          s.via[h->to] = static_cast<uint32_t>(
              h->forward ? h->gen : ball.gens->inverse_index(h->gen));
          s.order.push_back(h->to);
        }
      }
      return s;
    }

    // start ... target along the tree; empty when unreachable.
    std::vector<uint32_t> path_to(Search const& s, uint32_t target) {
      std::vector<uint32_t> path;
      if (s.parent[target] == NONE) {
        return path;
      }
      for (uint32_t v = target;; v = s.parent[v]) {
        path.push_back(v);
        if (s.parent[v] == v) {
          break;
        }
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
  }  // namespace

  std::vector<uint32_t> orbit_subgraph(GraphBall const&                ball,
                                       uint32_t                        v,
                                       std::vector<std::size_t> const& generator_subset) {
    auto mask = label_mask(ball, generator_subset);
    auto adj  = build_adjacency(ball);
    auto s    = search(ball, adj, v, mask, std::vector<bool>(ball.size(), false));
    std::sort(s.order.begin(), s.order.end());
    return s.order;
  }

  AugmentedCut augment_cut(GraphBall const&                ball,
                           std::vector<uint32_t> const&    cut,
                           std::vector<std::size_t> const& orbit_gens,
                           std::size_t                     finiteness_budget) {
    if (!closed_under_pairing(*ball.gens, orbit_gens)) {
      throw InvalidParameter("generator subset is not closed under inverses");
    }
    AugmentedCut out;
    out.cut = cut;
    std::sort(out.cut.begin(), out.cut.end());
    out.cut.erase(std::unique(out.cut.begin(), out.cut.end()), out.cut.end());
    std::vector<uint32_t> added;
    for (auto x : out.cut) {
      auto        o = orbit_from(*ball.action, *ball.gens, orbit_gens, ball.vertices.at(x),
                          finiteness_budget);
      OrbitStatus st{x, !o.truncated, o.points.size(), 0};
      for (auto const& p : o.points) {
        auto idx = ball.find(p);
        if (!idx) {
          ++st.outside_ball;
        } else if (st.finite) {
          added.push_back(*idx);
        }
      }
      out.status.push_back(st);
    }
    out.cut.insert(out.cut.end(), added.begin(), added.end());
    std::sort(out.cut.begin(), out.cut.end());
    out.cut.erase(std::unique(out.cut.begin(), out.cut.end()), out.cut.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Three-segment paths
  ////////////////////////////////////////////////////////////////////////

  SemidirectSplit SemidirectSplit::from_head(
      SymmetricGenSet const&                           gens,
      std::function<GroupElement(GroupElement const&)> head) {
    SemidirectSplit s{std::move(head), {}, {}};
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto h = s.head(gens[i]);
      if (is_identity(h)) {
        s.n_gens.push_back(i);
      } else if (h == gens[i]) {
        s.h_gens.push_back(i);
      } else {
        throw InvalidParameter("generator " + gens.name(i)
                               + " lies in neither factor of the splitting");
      }
    }
    return s;
  }

  SemidirectSplit lattice_split(SymmetricGenSet const& gens, std::size_t n_axes) {
    if (gens.group().family() != Family::Lattice
        || n_axes >= static_cast<std::size_t>(gens.group().parameter())) {
      throw InvalidParameter("lattice split needs Z^dim with n_axes < dim");
    }
    return SemidirectSplit::from_head(gens, [n_axes](GroupElement const& g) {
      auto c = g.as_lattice().coords;
      std::fill(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n_axes), 0);
      return make_vector(std::move(c));
    });
  }

  SemidirectSplit wreath_split(SymmetricGenSet const& gens) {
    auto w = gens.group().wreath_group();
    if (!w) {
      throw InvalidParameter("wreath split needs generators of a wreath product");
    }
    return SemidirectSplit::from_head(gens, [w](GroupElement const& g) {
      return w->top_element(g.as_wreath().head());
    });
  }

  ThreeSegmentPath three_segment_path(GraphBall const&             ball,
                                      SemidirectSplit const&       split,
                                      uint32_t                     x,
                                      uint32_t                     y,
                                      std::vector<uint32_t> const& cut) {
    std::vector<bool> gone(ball.size(), false);
    for (auto v : cut) {
      gone.at(v) = true;
    }
    if (gone.at(x) || gone.at(y)) {
      throw CutError("three-segment path endpoints must survive the cut");
    }
    auto const& gens   = *ball.gens;
    auto        adj    = build_adjacency(ball);
    auto        h_mask = label_mask(ball, split.h_gens);
    auto        n_mask = label_mask(ball, split.n_gens);

    // (n0, h0).x = y
    auto g0     = multiply(ball.witness[y], inverse(ball.witness[x]));
    auto h0_inv = inverse(split.head(g0));

    ThreeSegmentPath out;
    auto from_x = search(ball, adj, x, h_mask, gone);
    auto from_y = search(ball, adj, y, h_mask, gone);

    // h_z with (1, h_z).x = z, accumulated along the BFS tree.
    std::vector<GroupElement> h_of(ball.size());
    std::vector<uint32_t>     z_prime(ball.size(), NONE);
    std::unordered_map<uint32_t, uint32_t> preimage;
    h_of[x] = ball.action->group().identity();
    for (auto z : from_x.order) {
      if (z != x) {
        h_of[z] = multiply(gens[from_x.via[z]], h_of[from_x.parent[z]]);
      }
      ++out.candidates;
      auto zp = ball.find(ball.action->act(multiply(h_of[z], h0_inv), ball.vertices[y]));
      if (!zp) {
        continue;
      }
      auto [it, fresh] = preimage.emplace(*zp, z);
      if (!fresh && it->second != z) {
        out.injective = false;
      }
      z_prime[z] = *zp;
    }

    std::size_t inside = 0;
    for (auto z : from_x.order) {
      auto zp = z_prime[z];
      if (zp == NONE) {
        continue;
      }
      ++inside;
      if (gone[zp] || from_y.parent[zp] == NONE) {
        continue;
      }
      auto middle = search(ball, adj, z, n_mask, gone);
      if (middle.parent[zp] == NONE) {
        continue;
      }
      out.found   = true;
      out.z       = z;
      out.z_prime = zp;
      out.path    = path_to(from_x, z);
      auto mid    = path_to(middle, zp);
      out.path.insert(out.path.end(), mid.begin() + 1, mid.end());
      auto last = path_to(from_y, zp);
      std::reverse(last.begin(), last.end());
      out.path.insert(out.path.end(), last.begin() + 1, last.end());
      return out;
    }
    out.failure = inside == 0 ? "ball too small: no candidate z' lies inside the ball"
                              : "all " + std::to_string(out.candidates)
                                    + " candidates exhausted";
    return out;
  }

}  // namespace endslab
