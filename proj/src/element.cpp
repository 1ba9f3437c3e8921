#include "endslab/element.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "endslab/errors.hpp"
#include "endslab/group.hpp"
#include "endslab/wreath.hpp"

namespace endslab {

  std::string family_name(Family f) {
    switch (f) {
      case Family::Free: return "free";
      case Family::Lattice: return "lattice";
      case Family::Cyclic: return "cyclic";
      case Family::Symmetric: return "symmetric";
      case Family::Wreath: return "wreath";
    }
    return "?";
  }

  std::size_t hash_combine(std::size_t seed, std::size_t value) noexcept {
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
  }

  namespace {
    template <typename T>
    std::size_t hash_range(std::size_t seed, std::vector<T> const& xs) {
      for (auto const& x : xs) {
        seed = hash_combine(seed, std::hash<T>{}(x));
      }
      return seed;
    }

    template <typename T>
    std::strong_ordering compare_vec(std::vector<T> const& a,
                                     std::vector<T> const& b) {
      return std::lexicographical_compare_three_way(
          a.begin(), a.end(), b.begin(), b.end());
    }

    std::strong_ordering compare_support(WreathElement const& a,
                                         WreathElement const& b) {
      auto const& sa = a.support();
      auto const& sb = b.support();
      std::size_t n  = std::min(sa.size(), sb.size());
      for (std::size_t i = 0; i < n; ++i) {
        if (auto c = compare(sa[i].first, sb[i].first); c != 0) {
          return c;
        }
        if (auto c = compare(sa[i].second, sb[i].second); c != 0) {
          return c;
        }
      }
      return sa.size() <=> sb.size();
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // GroupElement
  ////////////////////////////////////////////////////////////////////////

  GroupElement::GroupElement(FreeWord w) : _payload(std::move(w)) {
    check_invariants();
    auto const& f = std::get<FreeWord>(_payload);
    _hash = hash_range(hash_combine(0x11, f.rank), f.letters);
  }

  GroupElement::GroupElement(IntVector v) : _payload(std::move(v)) {
    _hash = hash_range(0x22, std::get<IntVector>(_payload).coords);
  }

  GroupElement::GroupElement(CyclicInt c) : _payload(c) {
    check_invariants();
    _hash = hash_combine(hash_combine(0x33, c.modulus), c.value);
  }

  GroupElement::GroupElement(Permutation p) : _payload(std::move(p)) {
    check_invariants();
    _hash = hash_range(0x44, std::get<Permutation>(_payload).images);
  }

  GroupElement::GroupElement(std::shared_ptr<WreathElement const> w)
      : _payload(std::move(w)) {
    auto const& e = *std::get<4>(_payload);
    std::size_t h = 0x55;
    for (auto const& [x, g] : e.support()) {
      h = hash_combine(hash_combine(h, x.hash()), g.hash());
    }
    _hash = hash_combine(h, e.head().hash());
  }

  void GroupElement::check_invariants() const {
    if (auto const* f = std::get_if<FreeWord>(&_payload)) {
      if (f->rank < 1) {
        throw InvalidParameter("free group rank must be >= 1");
      }
      for (std::size_t i = 0; i < f->letters.size(); ++i) {
        int32_t l = f->letters[i];
        if (l == 0 || std::abs(l) > f->rank) {
          throw InvalidParameter("letter out of range for free group of rank "
                                 + std::to_string(f->rank));
        }
        if (i > 0 && f->letters[i - 1] == -l) {
          throw InvalidParameter("free word is not reduced");
        }
      }
    } else if (auto const* c = std::get_if<CyclicInt>(&_payload)) {
      if (c->modulus < 1 || c->value < 0 || c->value >= c->modulus) {
        throw InvalidParameter("cyclic residue out of range");
      }
    } else if (auto const* p = std::get_if<Permutation>(&_payload)) {
      std::vector<bool> seen(p->images.size(), false);
      for (auto i : p->images) {
        if (i >= seen.size() || seen[i]) {
          throw InvalidParameter("permutation images are not a bijection");
        }
        seen[i] = true;
      }
    }
  }

  Family GroupElement::family() const noexcept {
    return static_cast<Family>(_payload.index());
  }

  FreeWord const& GroupElement::as_free() const {
    if (auto const* p = std::get_if<FreeWord>(&_payload)) {
      return *p;
    }
    throw FamilyMismatch("expected a free group element, got "
                         + family_name(family()));
  }

  IntVector const& GroupElement::as_lattice() const {
    if (auto const* p = std::get_if<IntVector>(&_payload)) {
      return *p;
    }
    throw FamilyMismatch("expected a lattice element, got "
                         + family_name(family()));
  }

  CyclicInt const& GroupElement::as_cyclic() const {
    if (auto const* p = std::get_if<CyclicInt>(&_payload)) {
      return *p;
    }
    throw FamilyMismatch("expected a cyclic group element, got "
                         + family_name(family()));
  }

  Permutation const& GroupElement::as_permutation() const {
    if (auto const* p = std::get_if<Permutation>(&_payload)) {
      return *p;
    }
    throw FamilyMismatch("expected a permutation, got "
                         + family_name(family()));
  }

  WreathElement const& GroupElement::as_wreath() const {
    if (auto const* p = std::get_if<4>(&_payload)) {
      return **p;
    }
    throw FamilyMismatch("expected a wreath product element, got "
                         + family_name(family()));
  }

  std::strong_ordering compare(GroupElement const& a, GroupElement const& b) {
    if (auto c = a._payload.index() <=> b._payload.index(); c != 0) {
      return c;
    }
    switch (a.family()) {
      case Family::Free: {
        auto const& x = a.as_free();
        auto const& y = b.as_free();
        if (auto c = x.rank <=> y.rank; c != 0) {
          return c;
        }
        return compare_vec(x.letters, y.letters);
      }
      case Family::Lattice:
        return compare_vec(a.as_lattice().coords, b.as_lattice().coords);
      case Family::Cyclic: {
        auto const& x = a.as_cyclic();
        auto const& y = b.as_cyclic();
        if (auto c = x.modulus <=> y.modulus; c != 0) {
          return c;
        }
        return x.value <=> y.value;
      }
      case Family::Symmetric:
        return compare_vec(a.as_permutation().images,
                           b.as_permutation().images);
      case Family::Wreath: {
        auto const& x = a.as_wreath();
        auto const& y = b.as_wreath();
        if (&x == &y) {
          return std::strong_ordering::equal;
        }
        if (auto c = compare_support(x, y); c != 0) {
          return c;
        }
        if (auto c = compare(x.head(), y.head()); c != 0) {
          return c;
        }
        return std::compare_three_way{}(&x.group(), &y.group());
      }
    }
    return std::strong_ordering::equal;
  }

  std::string GroupElement::to_string() const {
    std::ostringstream os;
    switch (family()) {
      case Family::Free: {
        auto const& w = as_free();
        if (w.letters.empty()) {
          return "1";
        }
        for (std::size_t i = 0; i < w.letters.size(); ++i) {
          os << (i ? "*" : "") << free_letter_name(w.rank, w.letters[i]);
        }
        break;
      }
      case Family::Lattice: {
        auto const& v = as_lattice().coords;
        if (v.size() == 1) {
          return std::to_string(v[0]);
        }
        os << '(';
        for (std::size_t i = 0; i < v.size(); ++i) {
          os << (i ? "," : "") << v[i];
        }
        os << ')';
        break;
      }
      case Family::Cyclic: return std::to_string(as_cyclic().value);
      case Family::Symmetric: {
        auto const& p = as_permutation().images;
        os << '[';
        for (std::size_t i = 0; i < p.size(); ++i) {
          os << (i ? "," : "") << p[i];
        }
        os << ']';
        break;
      }
      case Family::Wreath: {
        auto const& w = as_wreath();
        os << "<{";
        bool first = true;
        for (auto const& [x, g] : w.support()) {
          os << (first ? "" : ",") << x.to_string() << ":" << g.to_string();
          first = false;
        }
        os << "}|" << w.head().to_string() << '>';
        break;
      }
    }
    return os.str();
  }

  GroupElement make_word(int rank, std::vector<int32_t> letters) {
    return GroupElement(FreeWord{rank, free_reduce(std::move(letters))});
  }

  GroupElement make_vector(std::vector<int64_t> coords) {
    return GroupElement(IntVector{std::move(coords)});
  }

  GroupElement make_cyclic(int64_t modulus, int64_t value) {
    if (modulus < 1) {
      throw InvalidParameter("cyclic modulus must be >= 1");
    }
    value %= modulus;
    if (value < 0) {
      value += modulus;
    }
    return GroupElement(CyclicInt{modulus, value});
  }

  GroupElement make_permutation(std::vector<uint32_t> images) {
    return GroupElement(Permutation{std::move(images)});
  }

  ////////////////////////////////////////////////////////////////////////
  // Point
  ////////////////////////////////////////////////////////////////////////

  Point::Point(int64_t v) : _payload(v) {
    _hash = hash_combine(0x101, std::hash<int64_t>{}(v));
  }

  Point::Point(IntTuple t) : _payload(std::move(t)) {
    _hash = hash_range(0x202, std::get<IntTuple>(_payload).values);
  }

  Point::Point(ElementPoint e) : _payload(std::move(e)) {
    _hash = hash_combine(0x303, std::get<ElementPoint>(_payload).element.hash());
  }

  Point::Point(CosetPoint c) : _payload(std::move(c)) {
    _hash = hash_combine(0x404, std::get<CosetPoint>(_payload).rep.hash());
  }

  Point::Point(Point first, Point second)
      : _payload(std::make_shared<PairPayload const>(std::move(first),
                                                     std::move(second))) {
    auto const& p = *std::get<4>(_payload);
    _hash = hash_combine(hash_combine(0x505, p.first.hash()), p.second.hash());
  }

  bool Point::is_pair() const noexcept {
    return _payload.index() == 4;
  }

  Point const& Point::first() const {
    if (!is_pair()) {
      throw VertexTypeError("point " + to_string() + " is not a pair");
    }
    return std::get<4>(_payload)->first;
  }

  Point const& Point::second() const {
    if (!is_pair()) {
      throw VertexTypeError("point " + to_string() + " is not a pair");
    }
    return std::get<4>(_payload)->second;
  }

  int64_t Point::as_integer() const {
    if (auto const* p = std::get_if<int64_t>(&_payload)) {
      return *p;
    }
    throw VertexTypeError("point " + to_string() + " is not an integer");
  }

  IntTuple const& Point::as_tuple() const {
    if (auto const* p = std::get_if<IntTuple>(&_payload)) {
      return *p;
    }
    throw VertexTypeError("point " + to_string() + " is not a tuple");
  }

  GroupElement const& Point::as_element() const {
    if (auto const* p = std::get_if<ElementPoint>(&_payload)) {
      return p->element;
    }
    throw VertexTypeError("point " + to_string() + " is not a group element");
  }

  GroupElement const& Point::as_coset_rep() const {
    if (auto const* p = std::get_if<CosetPoint>(&_payload)) {
      return p->rep;
    }
    throw VertexTypeError("point " + to_string() + " is not a coset");
  }

  std::strong_ordering compare(Point const& a, Point const& b) {
    if (auto c = a._payload.index() <=> b._payload.index(); c != 0) {
      return c;
    }
    switch (a._payload.index()) {
      case 0: return std::get<0>(a._payload) <=> std::get<0>(b._payload);
      case 1:
        return compare_vec(std::get<1>(a._payload).values,
                           std::get<1>(b._payload).values);
      case 2:
        return compare(std::get<2>(a._payload).element,
                       std::get<2>(b._payload).element);
      case 3:
        return compare(std::get<3>(a._payload).rep,
                       std::get<3>(b._payload).rep);
      default: {
        auto const& x = *std::get<4>(a._payload);
        auto const& y = *std::get<4>(b._payload);
        if (auto c = compare(x.first, y.first); c != 0) {
          return c;
        }
        return compare(x.second, y.second);
      }
    }
  }

  std::string Point::to_string() const {
    switch (_payload.index()) {
      case 0: return std::to_string(std::get<0>(_payload));
      case 1: {
        std::string s = "(";
        auto const& v = std::get<1>(_payload).values;
        for (std::size_t i = 0; i < v.size(); ++i) {
          s += (i ? "," : "") + std::to_string(v[i]);
        }
        return s + ")";
      }
      case 2: return std::get<2>(_payload).element.to_string();
      case 3: return std::get<3>(_payload).rep.to_string() + "K";
      default: {
        auto const& p = *std::get<4>(_payload);
        return "(" + p.first.to_string() + ";" + p.second.to_string() + ")";
      }
    }
  }

}  // namespace endslab
