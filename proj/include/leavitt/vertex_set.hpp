#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "leavitt/errors.hpp"

namespace leavitt {

using VertexId = std::size_t;

/// A subset of the vertices of one graph. Iteration and `members()` follow
/// the graph's declaration order.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, false) {}

  static VertexSet all(std::size_t universe) {
    VertexSet s(universe);
    s.bits_.assign(universe, true);
    return s;
  }

  static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
    VertexSet s(universe);
    for (std::size_t v = 0; v < universe; ++v) s.bits_[v] = ((mask >> v) & 1U) != 0;
    return s;
  }

  static VertexSet of(std::size_t universe, const std::vector<VertexId>& vs) {
    VertexSet s(universe);
    for (VertexId v : vs) s.insert(v);
    return s;
  }

  std::size_t universe() const noexcept { return bits_.size(); }

  bool contains(VertexId v) const { return v < bits_.size() && bits_[v]; }

  void insert(VertexId v) {
    if (v >= bits_.size()) throw ContractError("vertex id out of range");
    bits_[v] = true;
  }

  void erase(VertexId v) {
    if (v < bits_.size()) bits_[v] = false;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (bool b : bits_) n += b ? 1 : 0;
    return n;
  }

  bool empty() const { return size() == 0; }

  std::vector<VertexId> members() const {
    std::vector<VertexId> out;
    for (std::size_t v = 0; v < bits_.size(); ++v)
      if (bits_[v]) out.push_back(v);
    return out;
  }

  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (std::size_t v = 0; v < bits_.size() && v < 64; ++v)
      if (bits_[v]) m |= std::uint64_t{1} << v;
    return m;
  }

  bool is_subset_of(const VertexSet& other) const {
    for (std::size_t v = 0; v < bits_.size(); ++v)
      if (bits_[v] && !other.contains(v)) return false;
    return true;
  }

  VertexSet operator|(const VertexSet& o) const { return combine(o, [](bool a, bool b) { return a || b; }); }
  VertexSet operator&(const VertexSet& o) const { return combine(o, [](bool a, bool b) { return a && b; }); }
  VertexSet operator-(const VertexSet& o) const { return combine(o, [](bool a, bool b) { return a && !b; }); }

  VertexSet complement() const {
    VertexSet s(bits_.size());
    for (std::size_t v = 0; v < bits_.size(); ++v) s.bits_[v] = !bits_[v];
    return s;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  template <class Op>
  VertexSet combine(const VertexSet& o, Op op) const {
    if (o.universe() != universe()) throw ContractError("vertex sets over different graphs");
    VertexSet s(bits_.size());
    for (std::size_t v = 0; v < bits_.size(); ++v) s.bits_[v] = op(bits_[v], o.bits_[v]);
    return s;
  }

  std::vector<bool> bits_;
};

}  // namespace leavitt
