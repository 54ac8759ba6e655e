#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace z4z2 {

using Vertex = int;
using EdgeId = int;

/// A subset of the edges of a fixed graph, addressed by canonical edge index.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t universe) : bits_(universe) {}
  EdgeSet(std::size_t universe, std::span<const EdgeId> members) : bits_(universe) {
    for (EdgeId e : members) insert(e);
  }
  EdgeSet(std::size_t universe, std::initializer_list<EdgeId> members) : bits_(universe) {
    for (EdgeId e : members) insert(e);
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(EdgeId e) const {
    return e >= 0 && static_cast<std::size_t>(e) < bits_.size() && bits_.test(static_cast<std::size_t>(e));
  }
  void insert(EdgeId e) { bits_.set(checked(e)); }
  void erase(EdgeId e) { bits_.reset(checked(e)); }
  void toggle(EdgeId e) { bits_.flip(checked(e)); }

  template <class F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) f(static_cast<EdgeId>(i));
  }

  std::vector<EdgeId> indices() const {
    std::vector<EdgeId> out;
    out.reserve(size());
    for_each([&](EdgeId e) { out.push_back(e); });
    return out;
  }

  bool is_subset_of(const EdgeSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const EdgeSet& other) const { return bits_.intersects(other.bits_); }

  EdgeSet complement() const {
    EdgeSet out(*this);
    out.bits_.flip();
    return out;
  }

  EdgeSet& operator|=(const EdgeSet& o) { bits_ |= o.bits_; return *this; }
  EdgeSet& operator&=(const EdgeSet& o) { bits_ &= o.bits_; return *this; }
  EdgeSet& operator^=(const EdgeSet& o) { bits_ ^= o.bits_; return *this; }
  EdgeSet& operator-=(const EdgeSet& o) { bits_ -= o.bits_; return *this; }

  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) { return a ^= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }
  friend bool operator==(const EdgeSet& a, const EdgeSet& b) { return a.bits_ == b.bits_; }

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  std::size_t checked(EdgeId e) const {
    // dynamic_bitset asserts on out-of-range access; keep the failure loud in release builds too
    if (e < 0 || static_cast<std::size_t>(e) >= bits_.size()) throw std::out_of_range("edge index out of range");
    return static_cast<std::size_t>(e);
  }

  Bits bits_;
};

}  // namespace z4z2
