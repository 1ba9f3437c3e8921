#include "endslab/action.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "endslab/errors.hpp"

namespace endslab {

  PointedAction::PointedAction(Group       group,
                               ActFn       act,
                               Point       basepoint,
                               std::string description)
      : _group(std::move(group)),
        _act(std::move(act)),
        _basepoint(std::move(basepoint)),
        _description(std::move(description)) {}

  PointedAction PointedAction::with_basepoint(Point p) const {
    return PointedAction(_group, _act, std::move(p), _description);
  }

  std::string to_string(SubgroupSpec const& spec) {
    struct V {
      std::string operator()(subgroup::Trivial const&) const {
        return "trivial";
      }
      std::string operator()(subgroup::Full const&) const {
        return "full";
      }
      std::string operator()(subgroup::MultiplesOf const& m) const {
        return std::to_string(m.n);
      }
      std::string operator()(subgroup::Lattice const& l) const {
        std::string s;
        for (auto const& v : l.basis) {
          s += s.empty() ? "(" : ",(";
          for (std::size_t i = 0; i < v.size(); ++i) {
            s += (i ? "," : "") + std::to_string(v[i]);
          }
          s += ")";
        }
        return s;
      }
      std::string operator()(subgroup::Generated const& g) const {
        std::string s;
        for (auto const& x : g.gens) {
          s += (s.empty() ? "" : ",") + x.to_string();
        }
        return s;
      }
    };
    return std::visit(V{}, spec);
  }

  ////////////////////////////////////////////////////////////////////////
  // Lattices
  ////////////////////////////////////////////////////////////////////////

  namespace {
    int64_t floor_div(int64_t a, int64_t b) {
      int64_t q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
      }
      return q;
    }

    void axpy(std::vector<int64_t>& row, int64_t q, std::vector<int64_t> const& by) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        row[i] -= q * by[i];
      }
    }
  }  // namespace

  std::vector<std::vector<int64_t>>
  hermite_normal_form(std::vector<std::vector<int64_t>> rows, std::size_t dim) {
    for (auto const& r : rows) {
      if (r.size() != dim) {
        throw InvalidParameter("lattice vector has dimension "
                               + std::to_string(r.size()) + ", expected "
                               + std::to_string(dim));
      }
    }
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < dim && pivot_row < rows.size(); ++col) {
      // Euclid on column `col` among rows >= pivot_row.
      while (true) {
        std::size_t best = rows.size();
        for (std::size_t r = pivot_row; r < rows.size(); ++r) {
          if (rows[r][col] != 0
              && (best == rows.size()
                  || std::abs(rows[r][col]) < std::abs(rows[best][col]))) {
            best = r;
          }
        }
        if (best == rows.size()) {
          break;
        }
        std::swap(rows[pivot_row], rows[best]);
        bool done = true;
        for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
          if (rows[r][col] != 0) {
            axpy(rows[r], rows[r][col] / rows[pivot_row][col], rows[pivot_row]);
            done = done && rows[r][col] == 0;
          }
        }
        if (done) {
          break;
        }
      }
      if (rows[pivot_row][col] == 0) {
        continue;
      }
      if (rows[pivot_row][col] < 0) {
        for (auto& x : rows[pivot_row]) {
          x = -x;
        }
      }
      for (std::size_t r = 0; r < pivot_row; ++r) {
        axpy(rows[r], floor_div(rows[r][col], rows[pivot_row][col]), rows[pivot_row]);
      }
      pivot_cols.push_back(col);
      ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
  }

  std::vector<int64_t>
  reduce_mod_lattice(std::vector<int64_t>                     v,
                     std::vector<std::vector<int64_t>> const& hnf) {
    for (auto const& row : hnf) {
      auto col = static_cast<std::size_t>(
          std::find_if(row.begin(), row.end(), [](int64_t x) { return x != 0; })
          - row.begin());
      axpy(v, floor_div(v[col], row[col]), row);
    }
    return v;
  }

  std::vector<GroupElement> subgroup_closure(Group const&                     g,
                                             std::vector<GroupElement> const& gens) {
    if (!g.order()) {
      throw UnsupportedSubgroup("generated subgroups are only supported in finite groups, not "
                                + g.name());
    }
    for (auto const& x : gens) {
      if (!g.contains(x)) {
        throw FamilyMismatch("subgroup generator " + x.to_string()
                             + " is not an element of " + g.name());
      }
    }
    std::unordered_set<GroupElement> seen{g.identity()};
    std::deque<GroupElement>         queue{g.identity()};
    while (!queue.empty()) {
      auto x = std::move(queue.front());
      queue.pop_front();
      for (auto const& s : gens) {
        auto y = multiply(s, x);
        if (seen.insert(y).second) {
          queue.push_back(std::move(y));
        }
      }
    }
    std::vector<GroupElement> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  CosetCanonicalizer coset_canonicalizer(Group const& g, SubgroupSpec const& spec) {
    std::string const supported
        = "supported subgroups: trivial or full in any family; nZ in Z; a "
          "sublattice of Z^k given by spanning vectors; a subgroup of a finite "
          "group given by generators";
    auto unsupported = [&]() {
      return UnsupportedSubgroup("subgroup " + to_string(spec) + " of "
                                 + g.name() + " is not supported ("
                                 + supported + ")");
    };

    if (std::holds_alternative<subgroup::Trivial>(spec)) {
      return [](GroupElement const& x) { return x; };
    }
    if (std::holds_alternative<subgroup::Full>(spec)) {
      auto id = g.identity();
      return [id](GroupElement const&) { return id; };
    }
    if (g.family() == Family::Lattice) {
      auto dim = static_cast<std::size_t>(g.parameter());
      std::vector<std::vector<int64_t>> basis;
      if (auto const* m = std::get_if<subgroup::MultiplesOf>(&spec)) {
        if (dim != 1 || m->n < 1) {
          throw unsupported();
        }
        basis.push_back({m->n});
      } else if (auto const* l = std::get_if<subgroup::Lattice>(&spec)) {
        basis = l->basis;
      } else {
        throw unsupported();
      }
      auto hnf = hermite_normal_form(std::move(basis), dim);
      return [hnf = std::move(hnf)](GroupElement const& x) {
        return make_vector(reduce_mod_lattice(x.as_lattice().coords, hnf));
      };
    }
    if (g.order()) {
      std::vector<GroupElement> gens;
      if (auto const* m = std::get_if<subgroup::MultiplesOf>(&spec)) {
        if (g.family() != Family::Cyclic) {
          throw unsupported();
        }
        gens.push_back(make_cyclic(g.parameter(), m->n));
      } else if (auto const* gen = std::get_if<subgroup::Generated>(&spec)) {
        gens = gen->gens;
      } else {
        throw unsupported();
      }
      auto members = subgroup_closure(g, gens);
      return [members = std::move(members)](GroupElement const& x) {
        GroupElement best = multiply(x, members.front());
        for (std::size_t i = 1; i < members.size(); ++i) {
          auto y = multiply(x, members[i]);
          if (y < best) {
            best = std::move(y);
          }
        }
        return best;
      };
    }
    throw unsupported();
  }

  ////////////////////////////////////////////////////////////////////////
  // Actions
  ////////////////////////////////////////////////////////////////////////

  PointedAction translation_action(Group const& g) {
    return PointedAction(
        g,
        [](GroupElement const& s, Point const& x) {
          return element_point(multiply(s, x.as_element()));
        },
        element_point(g.identity()),
        g.name() + " acting on itself by left multiplication");
  }

  PointedAction coset_action(Group const& g, SubgroupSpec const& spec) {
    auto canon = coset_canonicalizer(g, spec);
    auto base  = coset_point(canon(g.identity()));
    return PointedAction(
        g,
        [canon](GroupElement const& s, Point const& x) {
          return coset_point(canon(multiply(s, x.as_coset_rep())));
        },
        std::move(base),
        g.name() + " acting on cosets of " + to_string(spec));
  }

  namespace {
    // Four rays glued at a single core vertex. A point is (ray, position)
    // with ray in 1..4 and position >= 1, or (0, 0) for the core. x shifts
    // along the line ray1 - core - ray2, y along ray3 - core - ray4; each
    // generator fixes the other line pointwise.
    Point four_ends_shift(Point const& p, int axis, int step) {
      auto const& v   = p.as_tuple().values;
      int64_t     ray = v.at(0);
      int64_t     pos = v.at(1);
      int64_t     lo  = axis == 0 ? 1 : 3;  // ray with negative coordinates
      int64_t     hi  = lo + 1;
      int64_t     t;
      if (ray == 0) {
        t = 0;
      } else if (ray == lo) {
        t = -pos;
      } else if (ray == hi) {
        t = pos;
      } else {
        return p;
      }
      t += step;
      if (t == 0) {
        return Point(IntTuple{{0, 0}});
      }
      return Point(IntTuple{{t < 0 ? lo : hi, t < 0 ? -t : t}});
    }

    PointedAction f2_four_ends() {
      auto g = Group::free(2);
      return PointedAction(
          g,
          [](GroupElement const& w, Point const& x) {
            auto const& letters = w.as_free().letters;
            Point       p       = x;
            for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
              p = four_ends_shift(p, std::abs(*it) - 1, *it > 0 ? 1 : -1);
            }
            return p;
          },
          Point(IntTuple{{0, 0}}),
          "f2_four_ends: F(2) acting on four rays glued at a core vertex");
    }
  }  // namespace

  std::vector<FixtureInfo> fixtures() {
    return {{"f2_four_ends",
             "transitive F(2)-action on four rays glued at one core vertex; x "
             "shifts along rays 1-core-2, y along rays 3-core-4, each fixing "
             "the other line (4 ends)"}};
  }

  PointedAction rule_action(std::string const& name) {
    if (name == "f2_four_ends") {
      return f2_four_ends();
    }
    std::string known;
    for (auto const& f : fixtures()) {
      known += (known.empty() ? "" : ", ") + f.name;
    }
    throw UnknownFixture("unknown rule action '" + name + "' (known: " + known + ")");
  }

  Orbit orbit(PointedAction const& action, SymmetricGenSet const& gens, std::size_t budget) {
    std::vector<std::size_t> all(gens.size());
    std::iota(all.begin(), all.end(), 0);
    return orbit_from(action, gens, all, action.basepoint(), budget);
  }

  Orbit orbit_from(PointedAction const&            action,
                   SymmetricGenSet const&          gens,
                   std::vector<std::size_t> const& gen_indices,
                   Point const&                    start,
                   std::size_t                     budget) {
    if (budget < 1) {
      throw InvalidParameter("orbit budget must be >= 1");
    }
    Orbit                     out;
    std::unordered_set<Point> seen{start};
    out.points.push_back(start);
    for (std::size_t head = 0; head < out.points.size(); ++head) {
      for (auto i : gen_indices) {
        auto y = action.act(gens[i], out.points[head]);
        if (seen.contains(y)) {
          continue;
        }
        if (out.points.size() == budget) {
          out.truncated = true;
          return out;
        }
        seen.insert(y);
        out.points.push_back(std::move(y));
      }
    }
    return out;
  }

}  // namespace endslab
