#ifndef ENDSLAB_ACTION_HPP_
#define ENDSLAB_ACTION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "element.hpp"
#include "gens.hpp"
#include "group.hpp"

namespace endslab {

  using ActFn = std::function<Point(GroupElement const&, Point const&)>;

  // A computable left action of a group on a set of points, with a
  // distinguished basepoint. `act` must be a pure function.
  class PointedAction {
   public:
    PointedAction(Group group, ActFn act, Point basepoint, std::string description);

    Group const& group() const noexcept {
      return _group;
    }
    Point act(GroupElement const& g, Point const& x) const {
      return _act(g, x);
    }
    Point const& basepoint() const noexcept {
      return _basepoint;
    }
    std::string const& description() const noexcept {
      return _description;
    }

    PointedAction with_basepoint(Point p) const;

   private:
    Group       _group;
    ActFn       _act;
    Point       _basepoint;
    std::string _description;
  };

  ////////////////////////////////////////////////////////////////////////
  // Subgroups with computable cosets
  ////////////////////////////////////////////////////////////////////////

  namespace subgroup {
    struct Trivial {
      bool operator==(Trivial const&) const = default;
    };
    struct Full {
      bool operator==(Full const&) const = default;
    };
    // nZ inside Z (n >= 1), or <n> inside Z/m.
    struct MultiplesOf {
      int64_t n = 1;
      bool    operator==(MultiplesOf const&) const = default;
    };
    // Sublattice of Z^k spanned by the given vectors (any generating set).
    struct Lattice {
      std::vector<std::vector<int64_t>> basis;
      bool operator==(Lattice const&) const = default;
    };
    // Subgroup of a finite group generated by the listed elements.
    struct Generated {
      std::vector<GroupElement> gens;
      bool operator==(Generated const&) const = default;
    };
  }  // namespace subgroup

  using SubgroupSpec = std::variant<subgroup::Trivial,
                                    subgroup::Full,
                                    subgroup::MultiplesOf,
                                    subgroup::Lattice,
                                    subgroup::Generated>;

  std::string to_string(SubgroupSpec const& spec);

  // Maps g to the canonical representative of gK.
  using CosetCanonicalizer = std::function<GroupElement(GroupElement const&)>;

  // Throws UnsupportedSubgroup (naming the supported cases) when `spec` has
  // no computable coset representatives in `g`.
  CosetCanonicalizer coset_canonicalizer(Group const& g, SubgroupSpec const& spec);

  // Row-style Hermite normal form of the lattice spanned by `gens` in Z^dim:
  // rows with strictly increasing pivot columns, positive pivots, entries
  // above each pivot reduced into [0, pivot). Zero rows are dropped.
  std::vector<std::vector<int64_t>>
  hermite_normal_form(std::vector<std::vector<int64_t>> gens, std::size_t dim);

  // Canonical representative of v modulo the lattice with the given HNF.
  std::vector<int64_t>
  reduce_mod_lattice(std::vector<int64_t> v,
                     std::vector<std::vector<int64_t>> const& hnf);

  // Elements of the subgroup of a finite group generated by `gens`, sorted.
  std::vector<GroupElement> subgroup_closure(Group const&                     g,
                                             std::vector<GroupElement> const& gens);

  ////////////////////////////////////////////////////////////////////////
  // Actions
  ////////////////////////////////////////////////////////////////////////

  // G acting on itself by left multiplication; basepoint is the identity.
  PointedAction translation_action(Group const& g);

  // G acting on left cosets G/K; basepoint is the trivial coset K.
  PointedAction coset_action(Group const& g, SubgroupSpec const& spec);

  // Built-in edge-rule actions, looked up by name. Throws UnknownFixture.
  PointedAction rule_action(std::string const& name);

  struct FixtureInfo {
    std::string name;
    std::string description;
  };
  std::vector<FixtureInfo> fixtures();

  struct Orbit {
    std::vector<Point> points;  // BFS order from the start point
    bool               truncated = false;
  };

  // BFS orbit of the basepoint. Stops when a point beyond `budget` would be
  // added, in which case `truncated` is set.
  Orbit orbit(PointedAction const& action, SymmetricGenSet const& gens, std::size_t budget);

  // Same, from an arbitrary start point and using only the generators whose
  // indices are listed.
  Orbit orbit_from(PointedAction const&            action,
                   SymmetricGenSet const&          gens,
                   std::vector<std::size_t> const& gen_indices,
                   Point const&                    start,
                   std::size_t                     budget);

}  // namespace endslab

#endif  // ENDSLAB_ACTION_HPP_
