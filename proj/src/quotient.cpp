#include "endslab/quotient.hpp"

#include <numeric>
#include <unordered_map>

#include "endslab/errors.hpp"

namespace endslab {

  namespace {
    constexpr std::size_t max_quotient_index = 20;

    struct Image {
      Group                                        group;
      std::function<GroupElement(GroupElement const&)> project;
      SubgroupSpec                                 preimage;
      std::size_t                                  index = 0;
    };

    Image mod_n(Group const& g, quotient::ModN const& q,
                std::vector<GroupElement> const& lifts) {
      if (g.family() != Family::Lattice || g.parameter() != 1) {
        throw UnsupportedSubgroup("reduction mod n is defined on Z only, not on "
                                  + g.name());
      }
      if (q.n < 1) {
        throw InvalidParameter("modulus must be >= 1, got " + std::to_string(q.n));
      }
      int64_t d = q.n;
      for (auto const& l : lifts) {
        d = std::gcd(d, l.as_lattice().coords.at(0));
      }
      int64_t n = q.n;
      return Image{Group::cyclic(n),
                   [n](GroupElement const& x) {
                     return make_cyclic(n, x.as_lattice().coords.at(0));
                   },
                   subgroup::MultiplesOf{d},
                   static_cast<std::size_t>(n)};
    }

    // Generators of N as a list, for normality checks and for L.
    std::vector<GroupElement> normal_generators(Group const& g, SubgroupSpec const& n) {
      if (auto const* gen = std::get_if<subgroup::Generated>(&n)) {
        return gen->gens;
      }
      if (auto const* m = std::get_if<subgroup::MultiplesOf>(&n)) {
        if (g.family() == Family::Cyclic) {
          return {make_cyclic(g.parameter(), m->n)};
        }
        return {make_vector({m->n})};
      }
      if (auto const* l = std::get_if<subgroup::Lattice>(&n)) {
        std::vector<GroupElement> out;
        for (auto const& v : l->basis) {
          out.push_back(make_vector(v));
        }
        return out;
      }
      return {};
    }

    Image by_normal(Group const& g, quotient::ByNormal const& q,
                    std::vector<GroupElement> const& lifts,
                    SymmetricGenSet const& gens) {
      auto canon = coset_canonicalizer(g, q.normal);
      auto n_gens = normal_generators(g, q.normal);

      bool const abelian = g.family() == Family::Lattice || g.family() == Family::Cyclic;
      if (!abelian && std::holds_alternative<subgroup::Generated>(q.normal)) {
        auto const base = canon(g.identity());
        for (auto const& s : gens.elements()) {
          for (auto const& n : n_gens) {
            if (canon(multiply(multiply(s, n), inverse(s))) != base) {
              throw InvalidParameter("subgroup " + to_string(q.normal)
                                     + " is not normal in " + g.name());
            }
          }
        }
      }

      // Enumerate G/N from the trivial coset.
      std::vector<GroupElement>                    reps{canon(g.identity())};
      std::unordered_map<GroupElement, std::size_t> where{{reps[0], 0}};
      for (std::size_t i = 0; i < reps.size(); ++i) {
        for (auto const& s : gens.elements()) {
          auto c = canon(multiply(s, reps[i]));
          if (where.emplace(c, reps.size()).second) {
            reps.push_back(std::move(c));
            if (reps.size() > max_quotient_index) {
              throw InvalidParameter("quotient by " + to_string(q.normal)
                                     + " has index above "
                                     + std::to_string(max_quotient_index));
            }
          }
        }
      }

      auto const m = reps.size();
      auto project = [canon, reps, where](GroupElement const& x) {
        std::vector<uint32_t> images(reps.size());
        for (std::size_t i = 0; i < reps.size(); ++i) {
          images[i] = static_cast<uint32_t>(where.at(canon(multiply(x, reps[i]))));
        }
        return make_permutation(std::move(images));
      };

      SubgroupSpec preimage;
      if (std::holds_alternative<subgroup::Full>(q.normal)) {
        preimage = subgroup::Full{};
      } else if (g.family() == Family::Lattice) {
        subgroup::Lattice l;
        for (auto const& x : n_gens) {
          l.basis.push_back(x.as_lattice().coords);
        }
        for (auto const& x : lifts) {
          l.basis.push_back(x.as_lattice().coords);
        }
        preimage = std::move(l);
      } else {
        auto all = n_gens;
        all.insert(all.end(), lifts.begin(), lifts.end());
        preimage = all.empty() ? SubgroupSpec{subgroup::Trivial{}}
                               : SubgroupSpec{subgroup::Generated{std::move(all)}};
      }
      return Image{Group::symmetric(static_cast<int>(m)), project, std::move(preimage), m};
    }
  }  // namespace

  QuotientPair quotient_schreier_pair(Group const&                     g,
                                      QuotientSpec const&              q,
                                      std::vector<GroupElement> const& k_lifts,
                                      SymmetricGenSet const&           gens,
                                      std::size_t                      radius) {
    if (gens.group() != g) {
      throw FamilyMismatch("generators belong to " + gens.group().name()
                           + ", not " + g.name());
    }
    for (auto const& l : k_lifts) {
      if (!g.contains(l)) {
        throw FamilyMismatch(l.to_string() + " is not an element of " + g.name());
      }
    }
    Image im = std::visit(
        [&](auto const& spec) -> Image {
          using T = std::decay_t<decltype(spec)>;
          if constexpr (std::is_same_v<T, quotient::ModN>) {
            return mod_n(g, spec, k_lifts);
          } else {
            return by_normal(g, spec, k_lifts, gens);
          }
        },
        q);

    std::vector<GroupElement> bar;
    for (auto const& s : gens.elements()) {
      bar.push_back(im.project(s));
    }
    SymmetricGenSet gens_bar(im.group, std::move(bar), gens.pairing(), gens.names(), true);

    SubgroupSpec k = subgroup::Trivial{};
    if (!k_lifts.empty()) {
      std::vector<GroupElement> kg;
      for (auto const& l : k_lifts) {
        kg.push_back(im.project(l));
      }
      k = subgroup::Generated{std::move(kg)};
    }

    auto up   = build_ball(coset_action(g, im.preimage), gens, radius);
    auto down = build_ball(coset_action(im.group, k), gens_bar, radius);
    QuotientPair out{simplify(up), simplify(down), false, im.group, im.preimage, im.index};
    out.isomorphic = pointed_labeled_isomorphic(out.upstairs, out.downstairs);
    return out;
  }

}  // namespace endslab
