#ifndef ENDSLAB_GENS_HPP_
#define ENDSLAB_GENS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "element.hpp"
#include "group.hpp"

namespace endslab {

  // Indexed generating list closed under inverses. inverse_index(i) is an
  // involution with gen(inverse_index(i)) == inverse(gen(i)); involutions
  // are paired with themselves. Repeated generators are legal and give
  // multi-edges.
  class SymmetricGenSet {
   public:
    // Validates the pairing. Generators equal to the identity are rejected
    // unless allow_identity is set; when set they are recorded as loops.
    SymmetricGenSet(Group                     group,
                    std::vector<GroupElement> gens,
                    std::vector<std::size_t>  pairing,
                    std::vector<std::string>  names          = {},
                    bool                      allow_identity = false);

    // Closes `gens` under inverses: each generator is followed by its inverse
    // unless the inverse already occurs unpaired in the list or the
    // generator is an involution.
    static SymmetricGenSet close(Group                     group,
                                 std::vector<GroupElement> gens,
                                 bool allow_identity = false);

    Group const& group() const noexcept {
      return _group;
    }
    std::size_t size() const noexcept {
      return _gens.size();
    }
    GroupElement const& operator[](std::size_t i) const {
      return _gens.at(i);
    }
    std::vector<GroupElement> const& elements() const noexcept {
      return _gens;
    }
    std::size_t inverse_index(std::size_t i) const {
      return _pairing.at(i);
    }
    std::vector<std::size_t> const& pairing() const noexcept {
      return _pairing;
    }
    std::string const& name(std::size_t i) const {
      return _names.at(i);
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    // Lowest index of the pair {i, inverse_index(i)}. Graph edges carry this
    // label.
    std::size_t pair_representative(std::size_t i) const {
      return std::min(i, _pairing.at(i));
    }

    bool has_loops() const noexcept {
      return !_loops.empty();
    }
    // Indices of generators equal to the identity.
    std::vector<std::size_t> const& loop_generators() const noexcept {
      return _loops;
    }

    // Indices of the generators satisfying `pred`.
    template <typename Pred>
    std::vector<std::size_t> select(Pred&& pred) const {
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < _gens.size(); ++i) {
        if (pred(_gens[i])) {
          out.push_back(i);
        }
      }
      return out;
    }

   private:
    Group                     _group;
    std::vector<GroupElement> _gens;
    std::vector<std::size_t>  _pairing;
    std::vector<std::string>  _names;
    std::vector<std::size_t>  _loops;
  };

  // Conventional generating sets: letters and their inverses for free
  // groups, +-unit vectors for Z^n, +-1 for Z/n, adjacent transpositions for
  // Sym(n), standard_wreath_gens for wreath products. The trivial groups C(1)
  // and Sym(1) get the empty set.
  SymmetricGenSet standard_gens(Group const& g);

  // G \ {1} for a finite group, each element paired with its inverse.
  SymmetricGenSet all_nonidentity_gens(Group const& g);

  // True if `subset` is closed under the pairing of `gens`.
  bool closed_under_pairing(SymmetricGenSet const&          gens,
                            std::vector<std::size_t> const& subset);

}  // namespace endslab

#endif  // ENDSLAB_GENS_HPP_
