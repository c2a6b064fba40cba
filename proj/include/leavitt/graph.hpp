#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "leavitt/errors.hpp"
#include "leavitt/vertex_set.hpp"

namespace leavitt {

using BundleId = std::size_t;

/// Number of parallel edges in a bundle: a positive integer, or omega for a
/// countably infinite family (an infinite emitter with a finite presentation).
class Multiplicity {
 public:
  constexpr Multiplicity(std::uint64_t n = 1) : n_(n) {  // NOLINT(google-explicit-constructor)
    if (n == 0) throw ContractError("multiplicity must be positive");
  }

  static constexpr Multiplicity omega() {
    Multiplicity m;
    m.n_ = 0;
    return m;
  }

  constexpr bool is_omega() const noexcept { return n_ == 0; }
  constexpr bool is_finite() const noexcept { return n_ != 0; }

  std::uint64_t value() const {
    if (is_omega()) throw ContractError("omega has no finite value");
    return n_;
  }

  std::string to_string() const { return is_omega() ? "omega" : std::to_string(n_); }

  friend constexpr bool operator==(Multiplicity, Multiplicity) = default;

 private:
  std::uint64_t n_;  // 0 encodes omega
};

/// Bundle as written in a graph document: endpoints by name.
struct BundleSpec {
  std::string name;
  std::string source;
  std::string range;
  Multiplicity multiplicity{1};
};

struct Bundle {
  std::string name;
  VertexId source;
  VertexId range;
  Multiplicity multiplicity;

  friend bool operator==(const Bundle&, const Bundle&) = default;
};

/// One concrete edge: the `index`-th parallel edge of a bundle.
struct EdgeRef {
  BundleId bundle = 0;
  std::uint64_t index = 0;

  friend constexpr auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// A finite directed multigraph whose parallel edges are grouped into bundles.
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;

  Graph(std::vector<std::string> vertices, const std::vector<BundleSpec>& bundles)
      : vertex_names_(std::move(vertices)) {
    for (VertexId v = 0; v < vertex_names_.size(); ++v) {
      const auto& name = vertex_names_[v];
      if (name.empty()) throw ContractError("empty vertex name");
      if (!ids_.emplace(name, Id{true, v}).second) throw ContractError("duplicate name '" + name + "'");
    }
    out_.resize(vertex_names_.size());
    in_.resize(vertex_names_.size());
    for (const auto& spec : bundles) {
      if (spec.name.empty()) throw ContractError("empty bundle name");
      VertexId s = vertex(spec.source);
      VertexId r = vertex(spec.range);
      BundleId b = bundles_.size();
      if (!ids_.emplace(spec.name, Id{false, b}).second)
        throw ContractError("duplicate name '" + spec.name + "'");
      bundles_.push_back(Bundle{spec.name, s, r, spec.multiplicity});
      out_[s].push_back(b);
      in_[r].push_back(b);
    }
  }

  std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
  std::size_t bundle_count() const noexcept { return bundles_.size(); }

  const std::vector<std::string>& vertex_names() const noexcept { return vertex_names_; }
  const std::vector<Bundle>& bundles() const noexcept { return bundles_; }

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  const Bundle& bundle(BundleId b) const { return bundles_.at(b); }

  std::optional<VertexId> find_vertex(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end() || !it->second.is_vertex) return std::nullopt;
    return it->second.id;
  }

  std::optional<BundleId> find_bundle(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end() || it->second.is_vertex) return std::nullopt;
    return it->second.id;
  }

  bool has_name(std::string_view name) const { return ids_.count(std::string(name)) != 0; }

  VertexId vertex(std::string_view name) const {
    if (auto v = find_vertex(name)) return *v;
    throw NameError("unknown vertex '" + std::string(name) + "'");
  }

  BundleId bundle_id(std::string_view name) const {
    if (auto b = find_bundle(name)) return *b;
    throw NameError("unknown bundle '" + std::string(name) + "'");
  }

  const std::vector<BundleId>& out_bundles(VertexId v) const { return out_.at(v); }
  const std::vector<BundleId>& in_bundles(VertexId v) const { return in_.at(v); }

  VertexSet empty_set() const { return VertexSet(vertex_count()); }
  VertexSet all_vertices() const { return VertexSet::all(vertex_count()); }

  bool has_omega() const {
    for (const auto& b : bundles_)
      if (b.multiplicity.is_omega()) return true;
    return false;
  }

  bool valid(EdgeRef e) const {
    if (e.bundle >= bundles_.size()) return false;
    const auto& m = bundles_[e.bundle].multiplicity;
    return m.is_omega() || e.index < m.value();
  }

  EdgeRef check(EdgeRef e) const {
    if (!valid(e)) throw NameError("edge index out of range: " + describe(e));
    return e;
  }

  VertexId source(EdgeRef e) const { return bundles_.at(check(e).bundle).source; }
  VertexId range(EdgeRef e) const { return bundles_.at(check(e).bundle).range; }

  /// Every concrete edge leaving `v`, bundle order then index order.
  std::vector<EdgeRef> out_edges(VertexId v) const {
    std::vector<EdgeRef> out;
    for (BundleId b : out_.at(v)) {
      const auto& m = bundles_[b].multiplicity;
      if (m.is_omega()) throw UnsupportedError("vertex '" + vertex_names_[v] + "' emits infinitely many edges");
      for (std::uint64_t i = 0; i < m.value(); ++i) out.push_back({b, i});
    }
    return out;
  }

  /// Every concrete edge of a graph without omega-bundles.
  std::vector<EdgeRef> edges() const {
    std::vector<EdgeRef> out;
    for (VertexId v = 0; v < vertex_count(); ++v) {
      auto es = out_edges(v);
      out.insert(out.end(), es.begin(), es.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// `bundle#index`, with `#0` elided for multiplicity-1 bundles.
  std::string edge_name(EdgeRef e) const {
    const auto& b = bundles_.at(e.bundle);
    if (b.multiplicity == Multiplicity{1} && e.index == 0) return b.name;
    return b.name + "#" + std::to_string(e.index);
  }

  /// Parses the `edge_name` rendering.
  EdgeRef parse_edge(std::string_view text) const {
    auto hash = text.find('#');
    BundleId b = bundle_id(text.substr(0, hash));
    std::uint64_t index = 0;
    if (hash != std::string_view::npos) {
      auto digits = text.substr(hash + 1);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
        throw NameError("malformed edge reference '" + std::string(text) + "'");
      index = std::stoull(std::string(digits));
    }
    return check({b, index});
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_names_ == b.vertex_names_ && a.bundles_ == b.bundles_;
  }

 private:
  std::string describe(EdgeRef e) const {
    std::string name = e.bundle < bundles_.size() ? bundles_[e.bundle].name : "?";
    return name + "#" + std::to_string(e.index);
  }

  struct Id {
    bool is_vertex;
    std::size_t id;
  };

  std::vector<std::string> vertex_names_;
  std::vector<Bundle> bundles_;
  std::unordered_map<std::string, Id> ids_;
  std::vector<std::vector<BundleId>> out_;
  std::vector<std::vector<BundleId>> in_;
};

/// A finite path: a vertex (length 0) or a composable edge sequence.
class Path {
 public:
  Path() = default;

  static Path vertex(VertexId v) {
    Path p;
    p.source_ = p.range_ = v;
    return p;
  }

  static Path edge(const Graph& g, EdgeRef e) { return of_edges(g, {e}); }

  static Path of_edges(const Graph& g, std::vector<EdgeRef> edges) {
    if (edges.empty()) throw ContractError("use Path::vertex for length-0 paths");
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
      if (g.range(edges[i]) != g.source(edges[i + 1]))
        throw ContractError("edges " + g.edge_name(edges[i]) + " and " + g.edge_name(edges[i + 1]) +
                            " do not compose");
    Path p;
    p.source_ = g.source(edges.front());
    p.range_ = g.range(edges.back());
    p.edges_ = std::move(edges);
    return p;
  }

  std::size_t length() const noexcept { return edges_.size(); }
  bool is_vertex() const noexcept { return edges_.empty(); }
  VertexId source() const noexcept { return source_; }
  VertexId range() const noexcept { return range_; }
  const std::vector<EdgeRef>& edges() const noexcept { return edges_; }

  bool is_prefix_of(const Path& other) const {
    if (source_ != other.source_ || edges_.size() > other.edges_.size()) return false;
    return std::equal(edges_.begin(), edges_.end(), other.edges_.begin());
  }

  /// For `other == *this · rest`, returns `rest`.
  Path remainder_of(const Path& other) const {
    if (!is_prefix_of(other)) throw ContractError("not a prefix");
    Path rest;
    rest.source_ = range_;
    rest.range_ = other.range_;
    rest.edges_.assign(other.edges_.begin() + static_cast<std::ptrdiff_t>(edges_.size()), other.edges_.end());
    return rest;
  }

  /// Drops the first edge; a vertex path is returned unchanged.
  Path tail(const Graph& g) const {
    if (edges_.empty()) return *this;
    if (edges_.size() == 1) return vertex(range_);
    return of_edges(g, std::vector<EdgeRef>(edges_.begin() + 1, edges_.end()));
  }

  friend Path concat(const Path& a, const Path& b) {
    if (a.range_ != b.source_) throw ContractError("paths do not compose");
    Path p;
    p.source_ = a.source_;
    p.range_ = b.range_;
    p.edges_ = a.edges_;
    p.edges_.insert(p.edges_.end(), b.edges_.begin(), b.edges_.end());
    return p;
  }

  friend bool operator==(const Path&, const Path&) = default;

  /// Shorter paths first, then lexicographic by edge, then by source vertex.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (auto c = a.edges_.size() <=> b.edges_.size(); c != 0) return c;
    if (auto c = std::lexicographical_compare_three_way(a.edges_.begin(), a.edges_.end(), b.edges_.begin(),
                                                         b.edges_.end());
        c != 0)
      return c;
    return a.source_ <=> b.source_;
  }

 private:
  VertexId source_ = 0;
  VertexId range_ = 0;
  std::vector<EdgeRef> edges_;
};

/// Vertex name for length-0 paths, otherwise edge names joined by '/'.
inline std::string render_path(const Graph& g, const Path& p) {
  if (p.is_vertex()) return g.vertex_name(p.source());
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += '/';
    out += g.edge_name(p.edges()[i]);
  }
  return out;
}

inline Path parse_path(const Graph& g, std::string_view text) {
  if (text.find('/') == std::string_view::npos && text.find('#') == std::string_view::npos) {
    if (auto v = g.find_vertex(text)) return Path::vertex(*v);
  }
  std::vector<EdgeRef> edges;
  std::size_t start = 0;
  while (true) {
    auto slash = text.find('/', start);
    edges.push_back(g.parse_edge(text.substr(start, slash - start)));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return Path::of_edges(g, std::move(edges));
}

}  // namespace leavitt
