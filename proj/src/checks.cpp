#include "endslab/checks.hpp"

#include <algorithm>
#include <random>

#include "endslab/errors.hpp"
#include "endslab/gens.hpp"

namespace endslab {

  LeafDisconnectReport leaf_disconnect(GraphBall const&   ball,
                                       WreathGroup const& w,
                                       std::size_t        orbit_budget) {
    LeafDisconnectReport report;
    Point const& x0   = w.orbit_reps().front();
    auto         orb  = orbit(w.top_action().with_basepoint(x0), standard_gens(w.top()), orbit_budget);
    report.finite_orbit = !orb.truncated;
    report.orbit_size   = orb.points.size();

    for (auto const& leaf : leaf_decomposition(ball)) {
      auto it = std::find_if(leaf.vertices.begin(), leaf.vertices.end(), [&](uint32_t v) {
        return ball.vertices[v].second() == x0;
      });
      if (it == leaf.vertices.end() || ball.dist[*it] >= ball.radius) {
        continue;
      }
      bool inside = std::all_of(leaf.vertices.begin(), leaf.vertices.end(),
                                [&](uint32_t v) { return ball.dist[v] < ball.radius; });
      if (report.finite_orbit && (leaf.vertices.size() != report.orbit_size || !inside)) {
        continue;
      }

      LeafCheck c{leaf.key, *it, leaf.vertices.size() - 1};
      auto      cut = delete_and_split(ball, {c.deleted});
      std::vector<uint32_t> rest;
      std::copy_if(leaf.vertices.begin(), leaf.vertices.end(), std::back_inserter(rest),
                   [&](uint32_t v) { return v != c.deleted; });
      std::sort(rest.begin(), rest.end());

      // Union of the components meeting the rest of the leaf.
      std::vector<uint32_t> reached;
      for (std::size_t i = 0; i < cut.components.size(); ++i) {
        auto const& comp = cut.components[i];
        bool meets = std::any_of(comp.begin(), comp.end(), [&](uint32_t v) {
          return std::binary_search(rest.begin(), rest.end(), v);
        });
        if (meets) {
          reached.insert(reached.end(), comp.begin(), comp.end());
          c.touching = c.touching || cut.touching[i];
        }
      }
      std::sort(reached.begin(), reached.end());
      c.isolated = reached == rest;
      c.passed   = report.finite_orbit
                       ? c.isolated && !c.touching && c.remainder + 1 == report.orbit_size
                       : c.touching;
      report.leaves.push_back(std::move(c));
    }

    if (report.leaves.empty()) {
      report.failure = "no leaf is testable at radius " + std::to_string(ball.radius);
      return report;
    }
    report.passed = std::all_of(report.leaves.begin(), report.leaves.end(),
                                [](LeafCheck const& c) { return c.passed; });
    if (!report.passed) {
      report.failure = "a leaf failed the disconnection check";
    }
    return report;
  }

  ThreeSegmentReport three_segment_check(GraphBall const&       ball,
                                         SemidirectSplit const& split,
                                         std::size_t            cut_radius,
                                         std::size_t            pairs,
                                         uint64_t               seed) {
    ThreeSegmentReport report;
    if (cut_radius >= ball.radius) {
      throw InvalidParameter("cut radius must be below the ball radius");
    }
    auto cut = ball_vertices(ball, cut_radius);
    std::vector<bool> in_cut(ball.size(), false);
    for (auto v : cut) {
      in_cut[v] = true;
    }

    std::vector<uint32_t> eligible;
    std::vector<bool>     done(ball.size(), false);
    for (uint32_t v = 0; v < ball.size(); ++v) {
      if (ball.dist[v] <= cut_radius || ball.dist[v] > ball.radius / 2 || done[v]) {
        continue;
      }
      auto orbit = orbit_subgraph(ball, v, split.h_gens);
      bool clear = std::none_of(orbit.begin(), orbit.end(), [&](uint32_t u) { return in_cut[u]; });
      for (auto u : orbit) {
        done[u] = true;
        if (clear && ball.dist[u] > cut_radius && ball.dist[u] <= ball.radius / 2) {
          eligible.push_back(u);
        }
      }
    }
    std::sort(eligible.begin(), eligible.end());
    report.eligible = eligible.size();
    if (eligible.size() < 2) {
      report.failure = "fewer than two eligible vertices";
      return report;
    }

    std::mt19937_64                            rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
    for (std::size_t p = 0; p < pairs; ++p) {
      uint32_t x = eligible[pick(rng)];
      uint32_t y = x;
      while (y == x) {
        y = eligible[pick(rng)];
      }
      PairOutcome o{x, y, three_segment_path(ball, split, x, y, cut)};
      report.injective = report.injective && o.result.injective;
      report.pairs.push_back(std::move(o));
    }
    report.passed = report.injective
                    && std::all_of(report.pairs.begin(), report.pairs.end(),
                                   [](PairOutcome const& o) { return o.result.found; });
    if (!report.passed) {
      report.failure = report.injective ? "some pair has no three-segment path"
                                        : "z -> z' is not injective";
    }
    return report;
  }

}  // namespace endslab
