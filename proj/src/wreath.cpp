#include "endslab/wreath.hpp"

#include <algorithm>

#include "endslab/errors.hpp"

namespace endslab {

  GroupElement WreathElement::value_at(Point const& x) const {
    auto it = std::lower_bound(
        _support.begin(), _support.end(), x, [](auto const& e, Point const& p) {
          return e.first < p;
        });
    if (it != _support.end() && it->first == x) {
      return it->second;
    }
    return _group->base().identity();
  }

  std::shared_ptr<WreathGroup const> WreathGroup::create(Group              base,
                                                         Group              top,
                                                         PointedAction      top_action,
                                                         std::vector<Point> orbit_reps,
                                                         std::size_t verify_budget) {
    if (!(top_action.group() == top)) {
      throw FamilyMismatch("top action is an action of "
                           + top_action.group().name() + ", not of " + top.name());
    }
    if (orbit_reps.empty()) {
      throw InvalidParameter("a wreath product needs at least one orbit representative");
    }
    std::shared_ptr<WreathGroup> w(
        new WreathGroup(std::move(base), std::move(top), std::move(top_action), std::move(orbit_reps)));

    auto const  top_gens = standard_gens(w->_top);
    bool        finite   = w->_base.order() && w->_top.order();
    std::size_t points   = 0;
    for (std::size_t i = 0; i < w->_orbit_reps.size(); ++i) {
      std::vector<std::size_t> all(top_gens.size());
      for (std::size_t k = 0; k < all.size(); ++k) {
        all[k] = k;
      }
      auto o = orbit_from(w->_top_action, top_gens, all, w->_orbit_reps[i], verify_budget);
      for (std::size_t j = 0; j < w->_orbit_reps.size(); ++j) {
        if (j != i
            && std::find(o.points.begin(), o.points.end(), w->_orbit_reps[j])
                   != o.points.end()) {
          throw InvalidParameter("orbit representatives "
                                 + w->_orbit_reps[i].to_string() + " and "
                                 + w->_orbit_reps[j].to_string()
                                 + " lie in the same orbit");
        }
      }
      finite = finite && !o.truncated;
      points += o.points.size();
    }
    if (finite) {
      uint64_t order = *w->_top.order();
      for (std::size_t k = 0; k < points; ++k) {
        order *= *w->_base.order();
      }
      w->_order = order;
    }
    return w;
  }

  GroupElement WreathGroup::element(WreathElement::Support phi, GroupElement head) const {
    if (!_top.contains(head)) {
      throw FamilyMismatch("head " + head.to_string() + " is not in " + _top.name());
    }
    std::stable_sort(phi.begin(), phi.end(), [](auto const& a, auto const& b) {
      return a.first < b.first;
    });
    WreathElement::Support out;
    out.reserve(phi.size());
    for (auto& entry : phi) {
      if (!_base.contains(entry.second)) {
        throw FamilyMismatch("value " + entry.second.to_string()
                             + " is not in " + _base.name());
      }
      if (!out.empty() && out.back().first == entry.first) {
        out.back().second = multiply(out.back().second, entry.second);
      } else {
        out.push_back(std::move(entry));
      }
    }
    std::erase_if(out, [](auto const& e) { return is_identity(e.second); });
    return GroupElement(std::shared_ptr<WreathElement const>(
        new WreathElement(shared_from_this(), std::move(out), std::move(head))));
  }

  GroupElement WreathGroup::delta(Point x, GroupElement s) const {
    return element({{std::move(x), std::move(s)}}, _top.identity());
  }

  GroupElement WreathGroup::top_element(GroupElement h) const {
    return element({}, std::move(h));
  }

  GroupElement WreathGroup::identity() const {
    return element({}, _top.identity());
  }

  std::optional<uint64_t> WreathGroup::order() const {
    return _order;
  }

  std::string WreathGroup::name() const {
    return "wreath(" + _base.name() + ", " + _top.name() + ")";
  }

  WreathElement::Support shift_support(WreathGroup const&            w,
                                       GroupElement const&           h,
                                       WreathElement::Support const& phi) {
    WreathElement::Support out;
    out.reserve(phi.size());
    for (auto const& [x, g] : phi) {
      out.emplace_back(w.top_action().act(h, x), g);
    }
    return out;
  }

  GroupElement wreath_multiply(WreathGroup const&  w,
                               GroupElement const& a,
                               GroupElement const& b) {
    auto const& x = a.as_wreath();
    auto const& y = b.as_wreath();
    if (&x.group() != &w || &y.group() != &w) {
      throw FamilyMismatch("wreath operands belong to a different wreath product");
    }
    WreathElement::Support phi = x.support();
    auto                   moved = shift_support(w, x.head(), y.support());
    phi.insert(phi.end(), moved.begin(), moved.end());
    return w.element(std::move(phi), multiply(x.head(), y.head()));
  }

  GroupElement wreath_inverse(WreathGroup const& w, GroupElement const& a) {
    auto const& x = a.as_wreath();
    if (&x.group() != &w) {
      throw FamilyMismatch("wreath operand belongs to a different wreath product");
    }
    auto                   hinv = inverse(x.head());
    WreathElement::Support phi;
    for (auto const& [p, g] : x.support()) {
      phi.emplace_back(p, inverse(g));
    }
    return w.element(shift_support(w, hinv, phi), hinv);
  }

  SymmetricGenSet standard_wreath_gens(WreathGroup const&     w,
                                       SymmetricGenSet const& base_gens,
                                       SymmetricGenSet const& top_gens) {
    if (!(base_gens.group() == w.base()) || !(top_gens.group() == w.top())) {
      throw FamilyMismatch("generating sets do not match " + w.name());
    }
    std::vector<GroupElement> gens;
    std::vector<std::size_t>  pairing;
    std::vector<std::string>  names;
    for (auto const& rep : w.orbit_reps()) {
      std::size_t offset = gens.size();
      for (std::size_t i = 0; i < base_gens.size(); ++i) {
        gens.push_back(w.delta(rep, base_gens[i]));
        pairing.push_back(offset + base_gens.inverse_index(i));
        names.push_back("d[" + rep.to_string() + "]^" + base_gens.name(i));
      }
    }
    std::size_t offset = gens.size();
    for (std::size_t i = 0; i < top_gens.size(); ++i) {
      gens.push_back(w.top_element(top_gens[i]));
      pairing.push_back(offset + top_gens.inverse_index(i));
      names.push_back("t^" + top_gens.name(i));
    }
    return SymmetricGenSet(w.as_group(),
                           std::move(gens),
                           std::move(pairing),
                           std::move(names),
                           base_gens.has_loops() || top_gens.has_loops());
  }

  SymmetricGenSet standard_wreath_gens(WreathGroup const& w) {
    return standard_wreath_gens(w, standard_gens(w.base()), standard_gens(w.top()));
  }

  namespace {
    PointedAction imprimitive_over(std::shared_ptr<WreathGroup const> const& w,
                                   PointedAction const&                      base_action,
                                   Point const&                              orbit_rep,
                                   std::string                               what) {
      auto const& reps = w->orbit_reps();
      if (std::find(reps.begin(), reps.end(), orbit_rep) == reps.end()) {
        throw InvalidParameter(orbit_rep.to_string()
                               + " is not an orbit representative of " + w->name());
      }
      // Holding `w` keeps the group alive for as long as the action.
      auto act = [w, base_action](GroupElement const& g, Point const& p) {
        auto const& e  = g.as_wreath();
        Point       hx = w->top_action().act(e.head(), p.second());
        Point       z  = base_action.act(e.value_at(hx), p.first());
        return Point(std::move(z), std::move(hx));
      };
      return PointedAction(w->as_group(),
                           std::move(act),
                           Point(base_action.basepoint(), orbit_rep),
                           w->name() + " acting imprimitively on " + what);
    }
  }  // namespace

  PointedAction imprimitive_action(std::shared_ptr<WreathGroup const> const& w,
                                   Point const& orbit_rep) {
    return imprimitive_over(w, translation_action(w->base()), orbit_rep,
                            w->base().name() + " x X'");
  }

  PointedAction imprimitive_coset_action(std::shared_ptr<WreathGroup const> const& w,
                                         SubgroupSpec const& base_subgroup,
                                         Point const&        orbit_rep) {
    return imprimitive_over(w, coset_action(w->base(), base_subgroup), orbit_rep,
                            w->base().name() + "/" + to_string(base_subgroup) + " x X'");
  }

  PointedAction head_projection_action(std::shared_ptr<WreathGroup const> const& w) {
    auto act = [](GroupElement const& g, Point const& k) {
      return element_point(multiply(g.as_wreath().head(), k.as_element()));
    };
    return PointedAction(w->as_group(),
                         std::move(act),
                         element_point(w->top().identity()),
                         w->name() + " acting on " + w->top().name()
                             + " through its head");
  }

  Lamplighter lamplighter(int64_t n) {
    if (n < 2) {
      throw InvalidParameter("lamplighter needs n >= 2, got " + std::to_string(n));
    }
    auto z = Group::integers();
    auto w = WreathGroup::create(Group::cyclic(n), z, translation_action(z),
                                 {element_point(z.identity())});
    auto gens = standard_wreath_gens(*w);
    return {std::move(w), std::move(gens)};
  }

  bool is_wreath_delta(GroupElement const& g) {
    if (g.family() != Family::Wreath) {
      return false;
    }
    auto const& e = g.as_wreath();
    return e.support().size() == 1 && is_identity(e.head());
  }

}  // namespace endslab
