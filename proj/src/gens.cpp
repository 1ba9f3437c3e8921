#include "endslab/gens.hpp"

#include <algorithm>
#include <numeric>

#include "endslab/errors.hpp"
#include "endslab/wreath.hpp"

namespace endslab {

  SymmetricGenSet::SymmetricGenSet(Group                     group,
                                   std::vector<GroupElement> gens,
                                   std::vector<std::size_t>  pairing,
                                   std::vector<std::string>  names,
                                   bool                      allow_identity)
      : _group(std::move(group)),
        _gens(std::move(gens)),
        _pairing(std::move(pairing)),
        _names(std::move(names)) {
    std::size_t const n = _gens.size();
    if (_pairing.size() != n) {
      throw InvalidParameter("pairing has " + std::to_string(_pairing.size())
                             + " entries for " + std::to_string(n)
                             + " generators");
    }
    if (_names.empty()) {
      for (auto const& g : _gens) {
        _names.push_back(g.to_string());
      }
    } else if (_names.size() != n) {
      throw InvalidParameter("generator name count does not match");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!_group.contains(_gens[i])) {
        throw FamilyMismatch("generator " + _gens[i].to_string()
                             + " is not an element of " + _group.name());
      }
      std::size_t j = _pairing[i];
      if (j >= n || _pairing[j] != i) {
        throw InvalidParameter("generator pairing is not an involution at "
                               + std::to_string(i));
      }
      if (_gens[j] != inverse(_gens[i])) {
        throw InvalidParameter("generator " + _names[j]
                               + " is not the inverse of " + _names[i]);
      }
      if (is_identity(_gens[i])) {
        if (!allow_identity) {
          throw InvalidParameter("generator " + _names[i]
                                 + " is the identity (loops not permitted)");
        }
        _loops.push_back(i);
      }
    }
  }

  SymmetricGenSet SymmetricGenSet::close(Group                     group,
                                         std::vector<GroupElement> gens,
                                         bool allow_identity) {
    std::vector<GroupElement> out;
    std::vector<std::size_t>  pairing;
    std::vector<bool>         used(gens.size(), false);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (used[i]) {
        continue;
      }
      used[i]        = true;
      auto        inv = inverse(gens[i]);
      std::size_t me  = out.size();
      out.push_back(gens[i]);
      if (inv == gens[i]) {
        pairing.push_back(me);
        continue;
      }
      // Prefer an unpaired occurrence of the inverse later in the list.
      std::size_t k = i + 1;
      while (k < gens.size() && (used[k] || gens[k] != inv)) {
        ++k;
      }
      if (k < gens.size()) {
        used[k] = true;
      }
      out.push_back(inv);
      pairing.push_back(me + 1);
      pairing.push_back(me);
    }
    return SymmetricGenSet(std::move(group),
                           std::move(out),
                           std::move(pairing),
                           {},
                           allow_identity);
  }

  SymmetricGenSet standard_gens(Group const& g) {
    std::vector<GroupElement> gens;
    std::vector<std::size_t>  pairing;
    std::vector<std::string>  names;
    auto add_pair = [&](GroupElement a, std::string an, std::string bn) {
      std::size_t i = gens.size();
      gens.push_back(a);
      gens.push_back(inverse(a));
      pairing.push_back(i + 1);
      pairing.push_back(i);
      names.push_back(std::move(an));
      names.push_back(std::move(bn));
    };
    auto add_single = [&](GroupElement a, std::string name) {
      pairing.push_back(gens.size());
      gens.push_back(std::move(a));
      names.push_back(std::move(name));
    };

    switch (g.family()) {
      case Family::Free: {
        int rank = static_cast<int>(g.parameter());
        for (int32_t l = 1; l <= rank; ++l) {
          add_pair(make_word(rank, {l}),
                   free_letter_name(rank, l),
                   free_letter_name(rank, -l));
        }
        break;
      }
      case Family::Lattice: {
        auto dim = static_cast<std::size_t>(g.parameter());
        for (std::size_t i = 0; i < dim; ++i) {
          std::vector<int64_t> e(dim, 0);
          e[i] = 1;
          std::string suffix = dim == 1 ? "" : "e" + std::to_string(i + 1);
          add_pair(make_vector(e),
                   dim == 1 ? "+1" : "+" + suffix,
                   dim == 1 ? "-1" : "-" + suffix);
        }
        break;
      }
      case Family::Cyclic: {
        int64_t n = g.parameter();
        if (n == 2) {
          add_single(make_cyclic(2, 1), "+1");
        } else if (n > 2) {
          add_pair(make_cyclic(n, 1), "+1", "-1");
        }
        break;
      }
      case Family::Symmetric: {
        auto n = static_cast<uint32_t>(g.parameter());
        for (uint32_t i = 0; i + 1 < n; ++i) {
          std::vector<uint32_t> p(n);
          std::iota(p.begin(), p.end(), 0u);
          std::swap(p[i], p[i + 1]);
          add_single(make_permutation(std::move(p)),
                     "(" + std::to_string(i) + " " + std::to_string(i + 1)
                         + ")");
        }
        break;
      }
      case Family::Wreath: return standard_wreath_gens(*g.wreath_group());
    }
    return SymmetricGenSet(g, std::move(gens), std::move(pairing), std::move(names));
  }

  SymmetricGenSet all_nonidentity_gens(Group const& g) {
    std::vector<GroupElement> gens;
    for (auto& x : g.elements()) {
      if (!is_identity(x)) {
        gens.push_back(std::move(x));
      }
    }
    std::vector<std::size_t> pairing(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto inv = inverse(gens[i]);
      pairing[i] = static_cast<std::size_t>(
          std::find(gens.begin(), gens.end(), inv) - gens.begin());
    }
    return SymmetricGenSet(g, std::move(gens), std::move(pairing));
  }

  bool closed_under_pairing(SymmetricGenSet const&          gens,
                            std::vector<std::size_t> const& subset) {
    return std::all_of(subset.begin(), subset.end(), [&](std::size_t i) {
      return std::find(subset.begin(), subset.end(), gens.inverse_index(i))
             != subset.end();
    });
  }

}  // namespace endslab
