#include "endslab/ball.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <limits>
#include <unordered_set>

#include "endslab/errors.hpp"
#include "union_find.hpp"

namespace endslab {

  namespace {
    constexpr uint32_t NONE = std::numeric_limits<uint32_t>::max();

    GraphBall start_ball(PointedAction const&   action,
                         SymmetricGenSet const& gens,
                         std::size_t            radius) {
      if (!(action.group() == gens.group())) {
        throw FamilyMismatch("generators of " + gens.group().name()
                             + " cannot drive an action of "
                             + action.group().name());
      }
      GraphBall ball;
      ball.radius = radius;
      ball.gens   = std::make_shared<SymmetricGenSet const>(gens);
      ball.action = std::make_shared<PointedAction const>(action);
      ball.vertices.push_back(action.basepoint());
      ball.dist.push_back(0);
      ball.witness.push_back(action.group().identity());
      ball.index.emplace(action.basepoint(), 0);
      return ball;
    }

    // Edges from the transition table trans[v * n + i] (NONE when the image
    // lies outside the ball).
    void finish_edges(GraphBall& ball, std::vector<uint32_t> const& trans) {
      auto const& gens = *ball.gens;
      std::size_t n    = gens.size();
      for (uint32_t v = 0; v < ball.vertices.size(); ++v) {
        for (uint32_t i = 0; i < n; ++i) {
          std::size_t p = gens.inverse_index(i);
          if (p < i) {
            continue;
          }
          uint32_t t = trans[v * n + i];
          if (t == NONE || (p == i && t < v)) {
            continue;
          }
          ball.edges.push_back({v, t, i});
        }
      }
      std::size_t first_outer = ball.layer_start[ball.radius];
      ball.closed             = std::none_of(trans.begin() + first_outer * n,
                                 trans.end(),
                                 [](uint32_t t) { return t == NONE; });
    }
  }  // namespace

  std::optional<uint32_t> GraphBall::find(Point const& p) const {
    auto it = index.find(p);
    if (it == index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Adjacency build_adjacency(GraphBall const& ball) {
    Adjacency adj;
    adj.offsets.assign(ball.size() + 1, 0);
    for (auto const& e : ball.edges) {
      ++adj.offsets[e.u + 1];
      if (!e.is_loop()) {
        ++adj.offsets[e.v + 1];
      }
    }
    for (std::size_t v = 0; v < ball.size(); ++v) {
      adj.offsets[v + 1] += adj.offsets[v];
    }
    adj.half_edges.resize(adj.offsets.back());
    std::vector<std::size_t> fill(adj.offsets.begin(), adj.offsets.end() - 1);
    for (auto const& e : ball.edges) {
      adj.half_edges[fill[e.u]++] = {e.v, e.gen, true};
      if (!e.is_loop()) {
        adj.half_edges[fill[e.v]++] = {e.u, e.gen, false};
      }
    }
    return adj;
  }

  GraphBall build_ball(PointedAction const&   action,
                       SymmetricGenSet const& gens,
                       std::size_t            radius,
                       std::size_t            max_vertices) {
    GraphBall   ball = start_ball(action, gens, radius);
    std::size_t n    = gens.size();
    std::vector<uint32_t> trans;
    ball.layer_start.push_back(0);

    for (std::size_t d = 0; d <= radius; ++d) {
      std::size_t lo = ball.layer_start[d];
      std::size_t hi = ball.vertices.size();
      ball.layer_start.push_back(hi);

      std::vector<Point> targets((hi - lo) * n);
      std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 64)
      for (std::size_t v = lo; v < hi; ++v) {
        try {
          for (std::size_t i = 0; i < n; ++i) {
            targets[(v - lo) * n + i] = action.act(gens[i], ball.vertices[v]);
          }
        } catch (...) {
#pragma omp critical
          failure = std::current_exception();
        }
      }
      if (failure) {
        std::rethrow_exception(failure);
      }

      // Canonical merge: vertex order, then generator order.
      trans.resize(hi * n, NONE);
      std::vector<std::pair<uint32_t, uint32_t>> parents;  // (vertex, gen)
      for (std::size_t v = lo; v < hi; ++v) {
        for (std::size_t i = 0; i < n; ++i) {
          Point& t  = targets[(v - lo) * n + i];
          auto   it = ball.index.find(t);
          if (it != ball.index.end()) {
            trans[v * n + i] = it->second;
            continue;
          }
          if (d == radius) {
            continue;
          }
          if (ball.vertices.size() >= max_vertices) {
            throw BudgetExceeded(d, max_vertices);
          }
          auto idx = static_cast<uint32_t>(ball.vertices.size());
          ball.index.emplace(t, idx);
          ball.vertices.push_back(std::move(t));
          ball.dist.push_back(static_cast<uint32_t>(d + 1));
          parents.emplace_back(static_cast<uint32_t>(v), static_cast<uint32_t>(i));
          trans[v * n + i] = idx;
        }
      }

      std::size_t first_new = hi;
      ball.witness.resize(ball.vertices.size());
#pragma omp parallel for schedule(static)
      for (std::size_t k = 0; k < parents.size(); ++k) {
        auto [v, i]                = parents[k];
        ball.witness[first_new + k] = multiply(gens[i], ball.witness[v]);
      }
    }
    finish_edges(ball, trans);
    return ball;
  }

  namespace serial {
    GraphBall build_ball(PointedAction const&   action,
                         SymmetricGenSet const& gens,
                         std::size_t            radius,
                         std::size_t            max_vertices) {
      GraphBall   ball = start_ball(action, gens, radius);
      std::size_t n    = gens.size();
      for (std::size_t head = 0; head < ball.vertices.size(); ++head) {
        if (ball.dist[head] >= radius) {
          break;
        }
        for (std::size_t i = 0; i < n; ++i) {
          Point t = action.act(gens[i], ball.vertices[head]);
          if (ball.index.contains(t)) {
            continue;
          }
          if (ball.vertices.size() >= max_vertices) {
            throw BudgetExceeded(ball.dist[head], max_vertices);
          }
          ball.index.emplace(t, static_cast<uint32_t>(ball.vertices.size()));
          ball.vertices.push_back(std::move(t));
          ball.dist.push_back(ball.dist[head] + 1);
          ball.witness.push_back(multiply(gens[i], ball.witness[head]));
        }
      }
      ball.layer_start.assign(radius + 2, ball.vertices.size());
      for (std::size_t d = 0; d <= radius; ++d) {
        auto it = std::lower_bound(ball.dist.begin(), ball.dist.end(), d);
        ball.layer_start[d] = static_cast<std::size_t>(it - ball.dist.begin());
      }
      std::vector<uint32_t> trans(ball.vertices.size() * n, NONE);
      for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
        for (std::size_t i = 0; i < n; ++i) {
          if (auto t = ball.find(action.act(gens[i], ball.vertices[v]))) {
            trans[v * n + i] = *t;
          }
        }
      }
      finish_edges(ball, trans);
      return ball;
    }
  }  // namespace serial

  CutResult delete_and_split(GraphBall const& ball, std::vector<uint32_t> const& removed) {
    CutResult out;
    out.removed = removed;
    std::sort(out.removed.begin(), out.removed.end());
    out.removed.erase(std::unique(out.removed.begin(), out.removed.end()), out.removed.end());

    std::vector<bool> gone(ball.size(), false);
    for (auto v : out.removed) {
      if (v >= ball.size()) {
        throw InvalidParameter("cut vertex " + std::to_string(v) + " is not in the ball");
      }
      gone[v] = true;
    }
    detail::UnionFind uf(ball.size());
    for (auto const& e : ball.edges) {
      if (!gone[e.u] && !gone[e.v]) {
        uf.unite(e.u, e.v);
      }
    }
    std::vector<uint32_t> comp_of_root(ball.size(), NONE);
    for (uint32_t v = 0; v < ball.size(); ++v) {
      if (gone[v]) {
        continue;
      }
      auto r = uf.find(v);
      if (comp_of_root[r] == NONE) {
        comp_of_root[r] = static_cast<uint32_t>(out.components.size());
        out.components.emplace_back();
        out.touching.push_back(false);
      }
      auto c = comp_of_root[r];
      out.components[c].push_back(v);
      if (ball.dist[v] == ball.radius) {
        out.touching[c] = true;
      }
    }
    return out;
  }

  std::size_t touching_count(CutResult const& cut) {
    return static_cast<std::size_t>(std::count(cut.touching.begin(), cut.touching.end(), true));
  }

  std::vector<uint32_t> ball_vertices(GraphBall const& ball, std::size_t r) {
    std::size_t end = r >= ball.radius ? ball.size() : ball.layer_start[r + 1];
    std::vector<uint32_t> out(end);
    for (uint32_t v = 0; v < end; ++v) {
      out[v] = v;
    }
    return out;
  }

  GraphBall simplify(GraphBall const& ball) {
    GraphBall out = ball;
    out.edges.clear();
    std::unordered_map<uint64_t, std::size_t> best;
    auto key = [](Edge const& e) {
      uint64_t a = std::min(e.u, e.v);
      uint64_t b = std::max(e.u, e.v);
      return (a << 32) | b;
    };
    for (std::size_t k = 0; k < ball.edges.size(); ++k) {
      auto const& e = ball.edges[k];
      if (e.is_loop()) {
        continue;
      }
      auto [it, fresh] = best.emplace(key(e), k);
      if (!fresh && e.gen < ball.edges[it->second].gen) {
        it->second = k;
      }
    }
    for (std::size_t k = 0; k < ball.edges.size(); ++k) {
      auto const& e = ball.edges[k];
      if (!e.is_loop() && best.at(key(e)) == k) {
        out.edges.push_back(e);
      }
    }
    return out;
  }

  namespace {
    // Half-edge code: label plus direction. Involutions have no direction.
    uint64_t half_edge_code(SymmetricGenSet const& gens, HalfEdge const& h, bool loop) {
      uint64_t dir = loop ? 3 : gens.inverse_index(h.gen) == h.gen ? 0 : h.forward ? 1 : 2;
      return (static_cast<uint64_t>(h.gen) << 2) | dir;
    }

    std::vector<std::pair<uint64_t, uint32_t>> coded_neighbours(GraphBall const& ball,
                                                                Adjacency const& adj,
                                                                uint32_t         v,
                                                                std::size_t      r) {
      std::vector<std::pair<uint64_t, uint32_t>> out;
      for (auto const* h = adj.begin(v); h != adj.end(v); ++h) {
        if (ball.dist[h->to] <= r) {
          out.emplace_back(half_edge_code(*ball.gens, *h, h->to == v), h->to);
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }  // namespace

  bool pointed_labeled_isomorphic(GraphBall const& a, GraphBall const& b) {
    if (a.gens->size() != b.gens->size() || a.gens->pairing() != b.gens->pairing()) {
      throw ArityMismatch("balls have different generator arity or pairing ("
                          + std::to_string(a.gens->size()) + " vs "
                          + std::to_string(b.gens->size()) + ")");
    }
    std::size_t r       = std::min(a.radius, b.radius);
    auto        count_a = ball_vertices(a, r).size();
    auto        count_b = ball_vertices(b, r).size();
    if (count_a != count_b) {
      return false;
    }
    auto                  adj_a = build_adjacency(a);
    auto                  adj_b = build_adjacency(b);
    std::vector<uint32_t> ab(a.size(), NONE), ba(b.size(), NONE);
    std::deque<std::pair<uint32_t, uint32_t>> queue;
    auto                  pa = static_cast<uint32_t>(a.basepoint_index);
    auto                  pb = static_cast<uint32_t>(b.basepoint_index);
    ab[pa]                   = pb;
    ba[pb]                   = pa;
    queue.emplace_back(pa, pb);
    std::size_t mapped = 1;
    while (!queue.empty()) {
      auto [va, vb] = queue.front();
      queue.pop_front();
      auto na = coded_neighbours(a, adj_a, va, r);
      auto nb = coded_neighbours(b, adj_b, vb, r);
      if (na.size() != nb.size()) {
        return false;
      }
      for (std::size_t k = 0; k < na.size(); ++k) {
        if (na[k].first != nb[k].first) {
          return false;
        }
        auto ta = na[k].second;
        auto tb = nb[k].second;
        if (ab[ta] == NONE && ba[tb] == NONE) {
          ab[ta] = tb;
          ba[tb] = ta;
          ++mapped;
          queue.emplace_back(ta, tb);
        } else if (ab[ta] != tb || ba[tb] != ta) {
          return false;
        }
      }
    }
    return mapped == count_a;
  }

  bool is_complete_graph(GraphBall const& ball) {
    std::unordered_set<uint64_t> pairs;
    for (auto const& e : ball.edges) {
      if (!e.is_loop()) {
        uint64_t a = std::min(e.u, e.v);
        uint64_t b = std::max(e.u, e.v);
        pairs.insert((a << 32) | b);
      }
    }
    std::size_t n = ball.size();
    return pairs.size() == n * (n - 1) / 2;
  }

  std::vector<Leaf> leaf_decomposition(GraphBall const& ball) {
    std::vector<Leaf>                      leaves;
    std::unordered_map<Point, std::size_t> slot;
    for (uint32_t v = 0; v < ball.size(); ++v) {
      auto const& p = ball.vertices[v];
      if (!p.is_pair()) {
        throw VertexTypeError("leaf decomposition needs pair vertices, found "
                              + p.to_string());
      }
      auto [it, fresh] = slot.emplace(p.first(), leaves.size());
      if (fresh) {
        leaves.push_back({p.first(), {}});
      }
      leaves[it->second].vertices.push_back(v);
    }
    return leaves;
  }

}  // namespace endslab
