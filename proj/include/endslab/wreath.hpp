#ifndef ENDSLAB_WREATH_HPP_
#define ENDSLAB_WREATH_HPP_

// Restricted wreath products G wr_X H = (finitely supported X -> G) x| H,
// where H permutes coordinates by (h.phi)(x) = phi(h^-1.x).

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "action.hpp"
#include "element.hpp"
#include "gens.hpp"
#include "group.hpp"

namespace endslab {

  // (phi, h). The support is sorted by point and never stores an identity
  // value, so equality of elements is equality of representations.
  class WreathElement {
   public:
    using Support = std::vector<std::pair<Point, GroupElement>>;

    WreathGroup const& group() const noexcept {
      return *_group;
    }
    Support const& support() const noexcept {
      return _support;
    }
    GroupElement const& head() const noexcept {
      return _head;
    }

    // phi(x), the identity of G off the support.
    GroupElement value_at(Point const& x) const;

   private:
    friend class WreathGroup;
    WreathElement(std::shared_ptr<WreathGroup const> g, Support s, GroupElement h)
        : _group(std::move(g)), _support(std::move(s)), _head(std::move(h)) {}

    std::shared_ptr<WreathGroup const> _group;
    Support                            _support;
    GroupElement                       _head;
  };

  class WreathGroup : public std::enable_shared_from_this<WreathGroup> {
   public:
    // `orbit_reps` must lie in pairwise distinct orbits of `top_action` under
    // the standard generators of `top`; this is checked by BFS up to
    // `verify_budget` points per representative.
    static std::shared_ptr<WreathGroup const>
    create(Group              base,
           Group              top,
           PointedAction      top_action,
           std::vector<Point> orbit_reps,
           std::size_t        verify_budget = 10000);

    Group const& base() const noexcept {
      return _base;
    }
    Group const& top() const noexcept {
      return _top;
    }
    PointedAction const& top_action() const noexcept {
      return _top_action;
    }
    std::vector<Point> const& orbit_reps() const noexcept {
      return _orbit_reps;
    }

    Group as_group() const {
      return Group::wreath(shared_from_this());
    }

    // Canonicalizes: sorts by point, multiplies repeated keys in order,
    // erases identity values.
    GroupElement element(WreathElement::Support phi, GroupElement head) const;
    // (delta_x^s, 1_H)
    GroupElement delta(Point x, GroupElement s) const;
    // (1, h)
    GroupElement top_element(GroupElement h) const;
    GroupElement identity() const;

    // |G|^|X| * |H| when G, H and every H-orbit are finite.
    std::optional<uint64_t> order() const;

    std::string name() const;

   private:
    WreathGroup(Group b, Group t, PointedAction a, std::vector<Point> reps)
        : _base(std::move(b)),
          _top(std::move(t)),
          _top_action(std::move(a)),
          _orbit_reps(std::move(reps)) {}

    Group                   _base;
    Group                   _top;
    PointedAction           _top_action;
    std::vector<Point>      _orbit_reps;
    std::optional<uint64_t> _order;
  };

  // h.phi, the support moved by the top action.
  WreathElement::Support shift_support(WreathGroup const&            w,
                                       GroupElement const&           h,
                                       WreathElement::Support const& phi);

  // (phi_a (h_a.phi_b), h_a h_b)
  GroupElement wreath_multiply(WreathGroup const&  w,
                               GroupElement const& a,
                               GroupElement const& b);
  // (h^-1.phi^-1, h^-1)
  GroupElement wreath_inverse(WreathGroup const& w, GroupElement const& a);

  // {(delta_{x_i}^s, 1) : s in S, x_i an orbit representative} followed by
  // {(1, t) : t in T}, with the pairings of S and T carried over.
  SymmetricGenSet standard_wreath_gens(WreathGroup const&     w,
                                       SymmetricGenSet const& base_gens,
                                       SymmetricGenSet const& top_gens);

  // The standard set built from standard_gens of G and H.
  SymmetricGenSet standard_wreath_gens(WreathGroup const& w);

  // (phi,h).(g,x) = (phi(h.x) g, h.x) on G x X', X' the H-orbit of
  // orbit_rep; basepoint (1_G, orbit_rep).
  PointedAction imprimitive_action(std::shared_ptr<WreathGroup const> const& w,
                                   Point const& orbit_rep);

  // (phi,h).(gK,x) = (phi(h.x) gK, h.x) on G/K x X'.
  PointedAction imprimitive_coset_action(std::shared_ptr<WreathGroup const> const& w,
                                         SubgroupSpec const& base_subgroup,
                                         Point const&        orbit_rep);

  // (phi,h).k = h k on H: the coset action on cosets of the base subgroup.
  PointedAction head_projection_action(std::shared_ptr<WreathGroup const> const& w);

  struct Lamplighter {
    std::shared_ptr<WreathGroup const> group;
    SymmetricGenSet                    gens;
  };

  // Z/n wr_Z Z with Z acting on itself by translation, n >= 2.
  Lamplighter lamplighter(int64_t n);

  // True for elements of the form (delta_x^s, 1_H) with s != 1.
  bool is_wreath_delta(GroupElement const& g);

}  // namespace endslab

#endif  // ENDSLAB_WREATH_HPP_
