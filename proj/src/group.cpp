#include "endslab/group.hpp"

#include <algorithm>
#include <numeric>

#include "endslab/errors.hpp"
#include "endslab/wreath.hpp"

namespace endslab {

  std::vector<int32_t> free_reduce(std::vector<int32_t> letters) {
    std::vector<int32_t> out;
    out.reserve(letters.size());
    for (auto l : letters) {
      if (!out.empty() && out.back() == -l) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return out;
  }

  std::string free_letter_name(int rank, int32_t letter) {
    int32_t     a = std::abs(letter);
    std::string name;
    if (rank <= 3) {
      name = std::string(1, static_cast<char>('x' + a - 1));
    } else {
      name = std::string(1, static_cast<char>('a' + a - 1));
    }
    return letter < 0 ? name + "^-1" : name;
  }

  ////////////////////////////////////////////////////////////////////////
  // Group
  ////////////////////////////////////////////////////////////////////////

  Group Group::free(int rank) {
    if (rank < 1 || rank > 26) {
      throw InvalidParameter("free group rank must lie in [1, 26], got "
                             + std::to_string(rank));
    }
    return Group(Family::Free, rank);
  }

  Group Group::lattice(int dim) {
    if (dim < 1) {
      throw InvalidParameter("lattice dimension must be >= 1, got "
                             + std::to_string(dim));
    }
    return Group(Family::Lattice, dim);
  }

  Group Group::cyclic(int64_t n) {
    if (n < 1) {
      throw InvalidParameter("cyclic order must be >= 1, got "
                             + std::to_string(n));
    }
    return Group(Family::Cyclic, n);
  }

  Group Group::symmetric(int n) {
    if (n < 1 || n > 20) {
      throw InvalidParameter("symmetric degree must lie in [1, 20], got "
                             + std::to_string(n));
    }
    return Group(Family::Symmetric, n);
  }

  Group Group::wreath(std::shared_ptr<WreathGroup const> w) {
    if (!w) {
      throw InvalidParameter("null wreath group");
    }
    return Group(Family::Wreath, 0, std::move(w));
  }

  GroupElement Group::identity() const {
    switch (_family) {
      case Family::Free: return GroupElement(FreeWord{static_cast<int>(_param), {}});
      case Family::Lattice:
        return make_vector(std::vector<int64_t>(_param, 0));
      case Family::Cyclic: return GroupElement(CyclicInt{_param, 0});
      case Family::Symmetric: {
        std::vector<uint32_t> id(_param);
        std::iota(id.begin(), id.end(), 0u);
        return make_permutation(std::move(id));
      }
      case Family::Wreath: return _wreath->identity();
    }
    return {};
  }

  bool Group::contains(GroupElement const& g) const {
    if (g.family() != _family) {
      return false;
    }
    switch (_family) {
      case Family::Free: return g.as_free().rank == _param;
      case Family::Lattice:
        return static_cast<int64_t>(g.as_lattice().coords.size()) == _param;
      case Family::Cyclic: return g.as_cyclic().modulus == _param;
      case Family::Symmetric:
        return static_cast<int64_t>(g.as_permutation().images.size())
               == _param;
      case Family::Wreath: return &g.as_wreath().group() == _wreath.get();
    }
    return false;
  }

  std::optional<uint64_t> Group::order() const {
    switch (_family) {
      case Family::Free:
      case Family::Lattice: return std::nullopt;
      case Family::Cyclic: return static_cast<uint64_t>(_param);
      case Family::Symmetric: {
        uint64_t r = 1;
        for (int64_t i = 2; i <= _param; ++i) {
          r *= static_cast<uint64_t>(i);
        }
        return r;
      }
      case Family::Wreath: return _wreath->order();
    }
    return std::nullopt;
  }

  std::vector<GroupElement> Group::elements() const {
    std::vector<GroupElement> out;
    switch (_family) {
      case Family::Cyclic:
        for (int64_t i = 0; i < _param; ++i) {
          out.push_back(GroupElement(CyclicInt{_param, i}));
        }
        return out;
      case Family::Symmetric: {
        if (_param > 9) {
          throw InvalidParameter("refusing to list the " + std::to_string(*order())
                                 + " elements of " + name());
        }
        std::vector<uint32_t> p(_param);
        std::iota(p.begin(), p.end(), 0u);
        do {
          out.push_back(make_permutation(p));
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
      }
      default:
        throw InvalidParameter("cannot list the elements of " + name());
    }
  }

  std::string Group::name() const {
    switch (_family) {
      case Family::Free: return "F(" + std::to_string(_param) + ")";
      case Family::Lattice:
        return _param == 1 ? "Z" : "Z^" + std::to_string(_param);
      case Family::Cyclic: return "C(" + std::to_string(_param) + ")";
      case Family::Symmetric: return "Sym(" + std::to_string(_param) + ")";
      case Family::Wreath: return _wreath->name();
    }
    return "?";
  }

  bool operator==(Group const& a, Group const& b) {
    return a._family == b._family && a._param == b._param
           && a._wreath == b._wreath;
  }

  ////////////////////////////////////////////////////////////////////////
  // Group law
  ////////////////////////////////////////////////////////////////////////

  namespace {
    [[noreturn]] void mismatch(GroupElement const& a, GroupElement const& b) {
      throw FamilyMismatch("cannot multiply " + a.to_string() + " ("
                           + family_name(a.family()) + ") by " + b.to_string()
                           + " (" + family_name(b.family()) + ")");
    }
  }  // namespace

  GroupElement multiply(GroupElement const& a, GroupElement const& b) {
    if (a.family() != b.family()) {
      mismatch(a, b);
    }
    switch (a.family()) {
      case Family::Free: {
        auto const& x = a.as_free();
        auto const& y = b.as_free();
        if (x.rank != y.rank) {
          mismatch(a, b);
        }
        std::vector<int32_t> w = x.letters;
        std::size_t          j = 0;
        while (!w.empty() && j < y.letters.size() && w.back() == -y.letters[j]) {
          w.pop_back();
          ++j;
        }
        w.insert(w.end(), y.letters.begin() + j, y.letters.end());
        return GroupElement(FreeWord{x.rank, std::move(w)});
      }
      case Family::Lattice: {
        auto const& x = a.as_lattice().coords;
        auto const& y = b.as_lattice().coords;
        if (x.size() != y.size()) {
          mismatch(a, b);
        }
        std::vector<int64_t> r(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
          r[i] = x[i] + y[i];
        }
        return make_vector(std::move(r));
      }
      case Family::Cyclic: {
        auto const& x = a.as_cyclic();
        auto const& y = b.as_cyclic();
        if (x.modulus != y.modulus) {
          mismatch(a, b);
        }
        return GroupElement(CyclicInt{x.modulus, (x.value + y.value) % x.modulus});
      }
      case Family::Symmetric: {
        auto const& x = a.as_permutation().images;
        auto const& y = b.as_permutation().images;
        if (x.size() != y.size()) {
          mismatch(a, b);
        }
        std::vector<uint32_t> r(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
          r[i] = x[y[i]];
        }
        return make_permutation(std::move(r));
      }
      case Family::Wreath: {
        auto const& w = a.as_wreath().group();
        if (&w != &b.as_wreath().group()) {
          mismatch(a, b);
        }
        return wreath_multiply(w, a, b);
      }
    }
    mismatch(a, b);
  }

  GroupElement inverse(GroupElement const& a) {
    switch (a.family()) {
      case Family::Free: {
        auto const&          x = a.as_free();
        std::vector<int32_t> w(x.letters.rbegin(), x.letters.rend());
        for (auto& l : w) {
          l = -l;
        }
        return GroupElement(FreeWord{x.rank, std::move(w)});
      }
      case Family::Lattice: {
        auto r = a.as_lattice().coords;
        for (auto& c : r) {
          c = -c;
        }
        return make_vector(std::move(r));
      }
      case Family::Cyclic: {
        auto const& x = a.as_cyclic();
        return GroupElement(
            CyclicInt{x.modulus, (x.modulus - x.value) % x.modulus});
      }
      case Family::Symmetric: {
        auto const&           x = a.as_permutation().images;
        std::vector<uint32_t> r(x.size());
        for (uint32_t i = 0; i < x.size(); ++i) {
          r[x[i]] = i;
        }
        return make_permutation(std::move(r));
      }
      case Family::Wreath: return wreath_inverse(a.as_wreath().group(), a);
    }
    return a;
  }

  GroupElement identity(Group const& g) {
    return g.identity();
  }

  bool is_identity(GroupElement const& a) {
    switch (a.family()) {
      case Family::Free: return a.as_free().letters.empty();
      case Family::Lattice: {
        auto const& c = a.as_lattice().coords;
        return std::all_of(c.begin(), c.end(), [](int64_t x) { return x == 0; });
      }
      case Family::Cyclic: return a.as_cyclic().value == 0;
      case Family::Symmetric: {
        auto const& p = a.as_permutation().images;
        for (uint32_t i = 0; i < p.size(); ++i) {
          if (p[i] != i) {
            return false;
          }
        }
        return true;
      }
      case Family::Wreath: {
        auto const& w = a.as_wreath();
        return w.support().empty() && is_identity(w.head());
      }
    }
    return false;
  }

  GroupElement product(Group const& g, std::vector<GroupElement> const& xs) {
    GroupElement r = g.identity();
    for (auto const& x : xs) {
      r = multiply(r, x);
    }
    return r;
  }

}  // namespace endslab
