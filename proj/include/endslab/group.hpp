#ifndef ENDSLAB_GROUP_HPP_
#define ENDSLAB_GROUP_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "element.hpp"

namespace endslab {

  // Descriptor of one of the supported group families together with its
  // parameter (rank, dimension, modulus or degree). Wreath products carry a
  // pointer to their WreathGroup.
  class Group {
   public:
    static Group free(int rank);
    static Group lattice(int dim);
    static Group integers() {
      return lattice(1);
    }
    static Group cyclic(int64_t n);
    static Group symmetric(int n);
    static Group wreath(std::shared_ptr<WreathGroup const> w);

    Family  family() const noexcept {
      return _family;
    }
    int64_t parameter() const noexcept {
      return _param;
    }
    std::shared_ptr<WreathGroup const> const& wreath_group() const noexcept {
      return _wreath;
    }

    GroupElement identity() const;

    // True if g is an element of this group (family and parameters match).
    bool contains(GroupElement const& g) const;

    // Group order for finite groups, nullopt when infinite.
    std::optional<uint64_t> order() const;

    // All elements of a finite group, in a fixed deterministic order.
    // Throws InvalidParameter for infinite groups.
    std::vector<GroupElement> elements() const;

    std::string name() const;

    friend bool operator==(Group const& a, Group const& b);

   private:
    Group(Family f, int64_t p, std::shared_ptr<WreathGroup const> w = {})
        : _family(f), _param(p), _wreath(std::move(w)) {}

    Family                             _family;
    int64_t                            _param;
    std::shared_ptr<WreathGroup const> _wreath;
  };

  // Group law on canonical forms. Throws FamilyMismatch when a and b come
  // from different families or parameters.
  GroupElement multiply(GroupElement const& a, GroupElement const& b);
  GroupElement inverse(GroupElement const& a);
  GroupElement identity(Group const& g);
  bool         is_identity(GroupElement const& a);

  // Product of a sequence, left to right.
  GroupElement product(Group const& g, std::vector<GroupElement> const& xs);

  // Reduce a letter sequence (signed letter indices) to normal form.
  std::vector<int32_t> free_reduce(std::vector<int32_t> letters);

  std::string free_letter_name(int rank, int32_t letter);

}  // namespace endslab

#endif  // ENDSLAB_GROUP_HPP_
