#ifndef ENDSLAB_TESTS_SUPPORT_HPP_
#define ENDSLAB_TESTS_SUPPORT_HPP_

// Helpers shared by the unit tests and the acceptance binary. The oracles
// here deliberately avoid the library's own graph code.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "endslab/action.hpp"
#include "endslab/ball.hpp"
#include "endslab/gens.hpp"
#include "endslab/group.hpp"
#include "endslab/wreath.hpp"

namespace endslab::testing {

  // Random element: a random payload for the plain families, a random
  // product of standard generators for wreath products.
  inline GroupElement random_element(Group const& g, std::mt19937_64& rng) {
    auto pick = [&](int64_t lo, int64_t hi) {
      return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
    };
    switch (g.family()) {
      case Family::Free: {
        int                  rank = static_cast<int>(g.parameter());
        std::vector<int32_t> w;
        for (int64_t n = pick(0, 8); n > 0; --n) {
          auto l = static_cast<int32_t>(pick(1, rank));
          w.push_back(pick(0, 1) ? l : -l);
        }
        return make_word(rank, std::move(w));
      }
      case Family::Lattice: {
        std::vector<int64_t> v(static_cast<std::size_t>(g.parameter()));
        for (auto& c : v) {
          c = pick(-20, 20);
        }
        return make_vector(std::move(v));
      }
      case Family::Cyclic: return make_cyclic(g.parameter(), pick(0, g.parameter() - 1));
      case Family::Symmetric: {
        std::vector<uint32_t> p(static_cast<std::size_t>(g.parameter()));
        for (uint32_t i = 0; i < p.size(); ++i) {
          p[i] = i;
        }
        std::shuffle(p.begin(), p.end(), rng);
        return make_permutation(std::move(p));
      }
      case Family::Wreath: {
        auto gens = standard_gens(g);
        auto x    = g.identity();
        for (int64_t n = pick(0, 8); n > 0; --n) {
          x = multiply(x, gens[static_cast<std::size_t>(pick(0, gens.size() - 1))]);
        }
        return x;
      }
    }
    return g.identity();
  }

  // Random point of the orbit: a random element applied to the basepoint.
  inline Point random_point(PointedAction const& a, std::mt19937_64& rng) {
    return a.act(random_element(a.group(), rng), a.basepoint());
  }

  // Number of sampled (g, h, x) violating act(1, x) = x or
  // act(g, act(h, x)) = act(gh, x).
  inline int action_axiom_failures(PointedAction const& a, int samples, uint64_t seed) {
    std::mt19937_64 rng(seed);
    int             failures = 0;
    auto const      one      = a.group().identity();
    for (int i = 0; i < samples; ++i) {
      auto x = random_point(a, rng);
      auto g = random_element(a.group(), rng);
      auto h = random_element(a.group(), rng);
      if (a.act(one, x) != x || a.act(g, a.act(h, x)) != a.act(multiply(g, h), x)) {
        ++failures;
      }
    }
    return failures;
  }

  // Reduced words of length exactly n over rank letters, by enumerating all
  // words and discarding those with a cancelling pair.
  inline std::size_t reduced_words_of_length(int rank, int n) {
    std::size_t        count = 0;
    std::vector<int>   w(static_cast<std::size_t>(n), 0);
    int const          alphabet = 2 * rank;
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        ++count;
        return;
      }
      for (int a = 0; a < alphabet; ++a) {
        // letters 2j and 2j+1 are mutually inverse
        if (i > 0 && (w[i - 1] ^ 1) == a) {
          continue;
        }
        w[static_cast<std::size_t>(i)] = a;
        rec(i + 1);
      }
    };
    rec(0);
    return count;
  }

  // Independent ends oracle for graphs given by a neighbour function on
  // integer-tuple vertices: plain BFS for distances, then flood fill per
  // (k, K') cell.
  using Vertex    = std::vector<int64_t>;
  using Neighbors = std::function<std::vector<Vertex>(Vertex const&)>;

  inline std::vector<std::vector<std::size_t>>
  ends_oracle(Vertex const& base, Neighbors const& nb, std::vector<std::size_t> const& ks,
              std::size_t K) {
    std::map<Vertex, std::size_t> dist{{base, 0}};
    std::vector<Vertex>           order{base};
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto d = dist[order[i]];
      if (d == K) {
        continue;
      }
      for (auto const& w : nb(order[i])) {
        if (dist.emplace(w, d + 1).second) {
          order.push_back(w);
        }
      }
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto k : ks) {
      std::vector<std::size_t> row;
      for (std::size_t outer = k + 1; outer <= K; ++outer) {
        auto alive = [&](Vertex const& v) {
          auto it = dist.find(v);
          return it != dist.end() && it->second >= k && it->second <= outer;
        };
        std::set<Vertex> seen;
        std::size_t      count = 0;
        for (auto const& s : order) {
          if (!alive(s) || seen.count(s)) {
            continue;
          }
          bool              touching = false;
          std::vector<Vertex> stack{s};
          seen.insert(s);
          while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            touching = touching || dist[v] == outer;
            for (auto const& w : nb(v)) {
              if (alive(w) && seen.insert(w).second) {
                stack.push_back(w);
              }
            }
          }
          count += touching ? 1 : 0;
        }
        row.push_back(count);
      }
      out.push_back(std::move(row));
    }
    return out;
  }

  // Balls compared field by field.
  inline bool same_ball(GraphBall const& a, GraphBall const& b) {
    return a.vertices == b.vertices && a.dist == b.dist && a.edges == b.edges
           && a.witness == b.witness && a.layer_start == b.layer_start
           && a.basepoint_index == b.basepoint_index && a.closed == b.closed;
  }

}  // namespace endslab::testing

#endif  // ENDSLAB_TESTS_SUPPORT_HPP_
