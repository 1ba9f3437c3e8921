#ifndef ENDSLAB_ELEMENT_HPP_
#define ENDSLAB_ELEMENT_HPP_

// Value types shared by every module: group elements in canonical form and
// the points that groups act on. Both are immutable, totally ordered and
// hashable, so they can be used as keys and compared across threads.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace endslab {

  enum class Family { Free, Lattice, Cyclic, Symmetric, Wreath };

  std::string family_name(Family f);

  // Reduced word over the alphabet {1..rank}; letter -i is the inverse of i.
  struct FreeWord {
    int                   rank = 1;
    std::vector<int32_t>  letters;
  };

  // Element of Z^dim written additively.
  struct IntVector {
    std::vector<int64_t> coords;
  };

  // Residue in [0, modulus).
  struct CyclicInt {
    int64_t modulus = 1;
    int64_t value   = 0;
  };

  // images[i] is the image of i. Composition applies the right factor first.
  struct Permutation {
    std::vector<uint32_t> images;
  };

  class WreathElement;
  class WreathGroup;

  class GroupElement {
   public:
    using Payload = std::variant<FreeWord,
                                 IntVector,
                                 CyclicInt,
                                 Permutation,
                                 std::shared_ptr<WreathElement const>>;

    GroupElement() : GroupElement(IntVector{}) {}
    explicit GroupElement(FreeWord w);
    explicit GroupElement(IntVector v);
    explicit GroupElement(CyclicInt c);
    explicit GroupElement(Permutation p);
    explicit GroupElement(std::shared_ptr<WreathElement const> w);

    Family         family() const noexcept;
    Payload const& payload() const noexcept {
      return _payload;
    }

    FreeWord const&      as_free() const;
    IntVector const&     as_lattice() const;
    CyclicInt const&     as_cyclic() const;
    Permutation const&   as_permutation() const;
    WreathElement const& as_wreath() const;

    std::size_t hash() const noexcept {
      return _hash;
    }
    std::string to_string() const;

    friend std::strong_ordering compare(GroupElement const& a,
                                        GroupElement const& b);
    friend bool operator==(GroupElement const& a, GroupElement const& b) {
      return a._hash == b._hash && compare(a, b) == 0;
    }
    friend std::strong_ordering operator<=>(GroupElement const& a,
                                            GroupElement const& b) {
      return compare(a, b);
    }

   private:
    void     check_invariants() const;
    Payload  _payload;
    std::size_t _hash = 0;
  };

  GroupElement make_word(int rank, std::vector<int32_t> letters);
  GroupElement make_vector(std::vector<int64_t> coords);
  GroupElement make_cyclic(int64_t modulus, int64_t value);
  GroupElement make_permutation(std::vector<uint32_t> images);

  ////////////////////////////////////////////////////////////////////////
  // Points
  ////////////////////////////////////////////////////////////////////////

  struct IntTuple {
    std::vector<int64_t> values;
  };

  // A group element acted on by translation.
  struct ElementPoint {
    GroupElement element;
  };

  // Left coset gK stored by its canonical representative. The subgroup is
  // implied by the action that produced the point.
  struct CosetPoint {
    GroupElement rep;
  };

  class Point;
  using PairPayload = std::pair<Point, Point>;

  class Point {
   public:
    using Payload = std::variant<int64_t,
                                 IntTuple,
                                 ElementPoint,
                                 CosetPoint,
                                 std::shared_ptr<PairPayload const>>;

    Point() : Point(int64_t{0}) {}
    explicit Point(int64_t v);
    explicit Point(IntTuple t);
    explicit Point(ElementPoint e);
    explicit Point(CosetPoint c);
    Point(Point first, Point second);

    Payload const& payload() const noexcept {
      return _payload;
    }

    bool is_pair() const noexcept;
    // Precondition: is_pair().
    Point const& first() const;
    Point const& second() const;

    int64_t             as_integer() const;
    IntTuple const&     as_tuple() const;
    GroupElement const& as_element() const;
    GroupElement const& as_coset_rep() const;

    std::size_t hash() const noexcept {
      return _hash;
    }
    std::string to_string() const;

    friend std::strong_ordering compare(Point const& a, Point const& b);
    friend bool operator==(Point const& a, Point const& b) {
      return a._hash == b._hash && compare(a, b) == 0;
    }
    friend std::strong_ordering operator<=>(Point const& a, Point const& b) {
      return compare(a, b);
    }

   private:
    Payload     _payload;
    std::size_t _hash = 0;
  };

  inline Point element_point(GroupElement g) {
    return Point(ElementPoint{std::move(g)});
  }
  inline Point coset_point(GroupElement rep) {
    return Point(CosetPoint{std::move(rep)});
  }

  std::size_t hash_combine(std::size_t seed, std::size_t value) noexcept;

}  // namespace endslab

template <>
struct std::hash<endslab::GroupElement> {
  std::size_t operator()(endslab::GroupElement const& g) const noexcept {
    return g.hash();
  }
};

template <>
struct std::hash<endslab::Point> {
  std::size_t operator()(endslab::Point const& p) const noexcept {
    return p.hash();
  }
};

#endif  // ENDSLAB_ELEMENT_HPP_
