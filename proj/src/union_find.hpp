#ifndef ENDSLAB_SRC_UNION_FIND_HPP_
#define ENDSLAB_SRC_UNION_FIND_HPP_

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace endslab::detail {

  // Disjoint sets with path halving and union by size.
  class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : _parent(n), _size(n, 1) {
      std::iota(_parent.begin(), _parent.end(), 0u);
    }

    uint32_t find(uint32_t x) {
      while (_parent[x] != x) {
        _parent[x] = _parent[_parent[x]];
        x          = _parent[x];
      }
      return x;
    }

    bool unite(uint32_t a, uint32_t b) {
      a = find(a);
      b = find(b);
      if (a == b) {
        return false;
      }
      if (_size[a] < _size[b]) {
        std::swap(a, b);
      }
      _parent[b] = a;
      _size[a] += _size[b];
      return true;
    }

   private:
    std::vector<uint32_t> _parent;
    std::vector<uint32_t> _size;
  };

}  // namespace endslab::detail

#endif  // ENDSLAB_SRC_UNION_FIND_HPP_
