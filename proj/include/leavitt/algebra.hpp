#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leavitt/errors.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/graph_ops.hpp"
#include "leavitt/rational.hpp"

namespace leavitt {

/// s_α s_β* with r(α) = r(β). p_v is (v, v), s_e is (e, r(e)), s_e* is (r(e), e).
class Monomial {
 public:
  Monomial(Path alpha, Path beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.range() != beta_.range()) throw ContractError("monomial paths must share their range");
  }

  const Path& alpha() const noexcept { return alpha_; }
  const Path& beta() const noexcept { return beta_; }
  VertexId range() const noexcept { return alpha_.range(); }
  long degree() const noexcept { return static_cast<long>(alpha_.length()) - static_cast<long>(beta_.length()); }

  Monomial star() const { return Monomial(beta_, alpha_); }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// By |α|, then |β|, then α and β edge by edge (declaration order).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.alpha_.length() <=> b.alpha_.length(); c != 0) return c;
    if (auto c = a.beta_.length() <=> b.beta_.length(); c != 0) return c;
    if (auto c = a.alpha_ <=> b.alpha_; c != 0) return c;
    return a.beta_ <=> b.beta_;
  }

 private:
  Path alpha_;
  Path beta_;
};

/// A finite ℚ-linear combination of monomials; zero coefficients are never stored.
class AlgebraElement {
 public:
  using Terms = std::map<Monomial, Rational>;

  AlgebraElement() = default;
  explicit AlgebraElement(Monomial m, Rational c = 1) { add_term(std::move(m), std::move(c)); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(Monomial m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(m), c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  AlgebraElement& operator-=(const AlgebraElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  Terms terms_;
};

inline AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) { return x + y; }

inline AlgebraElement scale(const Rational& q, const AlgebraElement& x) {
  AlgebraElement out;
  if (q == 0) return out;
  for (const auto& [m, c] : x.terms()) out.add_term(m, q * c);
  return out;
}

inline AlgebraElement star(const AlgebraElement& x) {
  AlgebraElement out;
  for (const auto& [m, c] : x.terms()) out.add_term(m.star(), c);
  return out;
}

// Generators.

inline AlgebraElement p(VertexId v) { return AlgebraElement(Monomial(Path::vertex(v), Path::vertex(v))); }
inline AlgebraElement p(const Graph& g, std::string_view v) { return p(g.vertex(v)); }

/// s_α for a path α (p_v for a vertex path).
inline AlgebraElement s(const Path& alpha) { return AlgebraElement(Monomial(alpha, Path::vertex(alpha.range()))); }
inline AlgebraElement s(const Graph& g, EdgeRef e) { return s(Path::edge(g, e)); }
inline AlgebraElement s(const Graph& g, std::string_view path) { return s(parse_path(g, path)); }

inline AlgebraElement s_star(const Path& beta) { return star(s(beta)); }
inline AlgebraElement s_star(const Graph& g, EdgeRef e) { return star(s(g, e)); }
inline AlgebraElement s_star(const Graph& g, std::string_view path) { return star(s(g, path)); }

/// Product of two monomials: s_{αγ'} s_δ* when γ = βγ', s_α s_{δβ'}* when
/// β = γβ', and zero otherwise.
inline std::optional<Monomial> multiply(const Monomial& x, const Monomial& y) {
  const Path& beta = x.beta();
  const Path& gamma = y.alpha();
  if (beta.is_prefix_of(gamma)) return Monomial(concat(x.alpha(), beta.remainder_of(gamma)), y.beta());
  if (gamma.is_prefix_of(beta)) return Monomial(x.alpha(), concat(y.beta(), gamma.remainder_of(beta)));
  return std::nullopt;
}

inline AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms())
      if (auto m = multiply(a, b)) out.add_term(std::move(*m), ca * cb);
  return out;
}

inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) { return multiply(x, y); }

/// Homogeneous components of the ℤ-grading deg(s_α s_β*) = |α| − |β|.
inline std::map<long, AlgebraElement> degree_components(const AlgebraElement& x) {
  std::map<long, AlgebraElement> out;
  for (const auto& [m, c] : x.terms()) out[m.degree()].add_term(m, c);
  return out;
}

/// p_v^H = p_v − Σ s_e s_e* over the edges from v into E⁰ \ H.
inline AlgebraElement gap_projection(const Graph& g, const VertexSet& h, VertexId v) {
  if (!is_saturated_hereditary(g, h)) throw ContractError("gap projection requires a saturated hereditary set");
  if (!breaking_vertices(g, h).contains(v))
    throw ContractError("'" + g.vertex_name(v) + "' is not a breaking vertex of the set");
  AlgebraElement out = p(v);
  for (BundleId b : g.out_bundles(v)) {
    const auto& bundle = g.bundle(b);
    if (h.contains(bundle.range)) continue;
    for (std::uint64_t i = 0; i < bundle.multiplicity.value(); ++i) {
      Path e = Path::edge(g, {b, i});
      out.add_term(Monomial(e, e), -1);
    }
  }
  return out;
}

/// Rewrites monomials into the sink basis {s_α s_β* : r(α) = r(β) a sink} by
/// applying p_v = Σ s_e s_e* at regular ranges. Works on any graph as long as
/// every range that needs rewriting has an acyclic tree without omega-bundles.
class SinkReducer {
 public:
  explicit SinkReducer(const Graph& g) : g_(&g), to_sinks_(g.vertex_count()), ready_(g.vertex_count(), false) {
    const VertexSet on_cycle = cycle_vertices(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      VertexSet t = tree_of(g, v);
      bool ok = (t & on_cycle).empty();
      for (VertexId u : t.members())
        for (BundleId b : g.out_bundles(u))
          if (g.bundle(b).multiplicity.is_omega()) ok = false;
      expandable_.push_back(ok);
    }
  }

  bool expandable(VertexId v) const { return expandable_[v]; }

  /// Every path from `v` to a sink, in path order.
  const std::vector<Path>& paths_to_sinks(VertexId v) {
    if (!expandable_[v])
      throw UnsupportedError("cannot reduce at '" + g_->vertex_name(v) + "': a cycle or omega-bundle is reachable");
    if (ready_[v]) return to_sinks_[v];
    std::vector<Path> out;
    const auto es = g_->out_edges(v);
    if (es.empty()) out.push_back(Path::vertex(v));
    for (EdgeRef e : es)
      for (const Path& rest : paths_to_sinks(g_->range(e))) out.push_back(concat(Path::edge(*g_, e), rest));
    std::sort(out.begin(), out.end());
    to_sinks_[v] = std::move(out);
    ready_[v] = true;
    return to_sinks_[v];
  }

  AlgebraElement reduce(const AlgebraElement& x) {
    AlgebraElement out;
    for (const auto& [m, c] : x.terms()) {
      if (g_->out_bundles(m.range()).empty()) {
        out.add_term(m, c);
        continue;
      }
      for (const Path& tail : paths_to_sinks(m.range()))
        out.add_term(Monomial(concat(m.alpha(), tail), concat(m.beta(), tail)), c);
    }
    return out;
  }

 private:
  const Graph* g_;
  std::vector<bool> expandable_;
  std::vector<std::vector<Path>> to_sinks_;
  std::vector<bool> ready_;
};

inline void require_acyclic_finite(const Graph& g) {
  if (g.has_omega()) throw UnsupportedError("graph has an omega-bundle");
  if (has_cycle(g)) throw UnsupportedError("graph has a cycle");
}

/// Canonical form in the sink basis; requires an acyclic graph without omega-bundles.
inline AlgebraElement normal_form(const Graph& g, const AlgebraElement& x) {
  require_acyclic_finite(g);
  return SinkReducer(g).reduce(x);
}

inline bool equals(const Graph& g, const AlgebraElement& x, const AlgebraElement& y) {
  return normal_form(g, x - y).is_zero();
}

/// Σ over sinks t of |{paths ending at t}|², the size of the sink basis.
inline std::uint64_t dimension(const Graph& g) {
  require_acyclic_finite(g);
  Cardinal total = Cardinal::finite(0);
  for (VertexId t : sinks(g).members()) {
    Cardinal n = paths_ending_at(g, t);
    total = total + n * n;
  }
  return total.value();
}

/// Every sink-basis monomial of an acyclic graph without omega-bundles.
inline std::vector<Monomial> sink_basis(const Graph& g) {
  require_acyclic_finite(g);
  std::vector<std::vector<Path>> ending(g.vertex_count());
  std::function<const std::vector<Path>&(VertexId)> into = [&](VertexId v) -> const std::vector<Path>& {
    if (!ending[v].empty()) return ending[v];
    std::vector<Path> out{Path::vertex(v)};
    for (BundleId b : g.in_bundles(v))
      for (std::uint64_t i = 0; i < g.bundle(b).multiplicity.value(); ++i)
        for (const Path& head : into(g.bundle(b).source))
          out.push_back(concat(head, Path::edge(g, {b, i})));
    std::sort(out.begin(), out.end());
    ending[v] = std::move(out);
    return ending[v];
  };
  std::vector<Monomial> out;
  for (VertexId t : sinks(g).members()) {
    const auto paths = into(t);
    for (const Path& a : paths)
      for (const Path& b : paths) out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Text form.
//
//   element  := '0' | ['-'] term (('+' | '-') term)*
//   term     := [rational '*'] monomial
//   monomial := 'p_' vertex | path | path '*' | path '.' path '*'
//   path     := vertex | edge ('/' edge)*        edge := bundle ['#' index]
//
// `path` alone is s_α, `path*` is s_β*, and `α.β*` is s_α s_β*.

inline std::string render_monomial(const Graph& g, const Monomial& m) {
  const Path& a = m.alpha();
  const Path& b = m.beta();
  if (a.is_vertex() && b.is_vertex()) {
    std::string name = "p_" + g.vertex_name(a.source());
    return g.has_name(name) ? g.vertex_name(a.source()) : name;
  }
  if (b.is_vertex()) return render_path(g, a);
  if (a.is_vertex()) return render_path(g, b) + "*";
  return render_path(g, a) + "." + render_path(g, b) + "*";
}

inline std::string render(const Graph& g, const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += render_monomial(g, m);
    first = false;
  }
  return out;
}

namespace detail {

inline Monomial parse_monomial(const Graph& g, std::string_view text) {
  if (text.empty()) throw ContractError("empty monomial");
  if (text.back() == '*') {
    std::string_view body = text.substr(0, text.size() - 1);
    auto dot = body.find('.');
    if (dot == std::string_view::npos) {
      Path beta = parse_path(g, body);
      return Monomial(Path::vertex(beta.range()), beta);
    }
    return Monomial(parse_path(g, body.substr(0, dot)), parse_path(g, body.substr(dot + 1)));
  }
  if (text.find('.') != std::string_view::npos) throw ContractError("'" + std::string(text) + "': missing '*'");
  if (text.substr(0, 2) == "p_" && !g.has_name(text)) {
    VertexId v = g.vertex(text.substr(2));
    return Monomial(Path::vertex(v), Path::vertex(v));
  }
  Path alpha = parse_path(g, text);
  return Monomial(alpha, Path::vertex(alpha.range()));
}

}  // namespace detail

inline AlgebraElement parse_element(const Graph& g, std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  if (compact == "0") return {};
  if (compact.empty()) throw ContractError("empty element");

  AlgebraElement out;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    int sign = 1;
    if (compact[pos] == '+' || compact[pos] == '-') {
      sign = compact[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw ContractError("expected '+' or '-' at offset " + std::to_string(pos));
    }
    std::size_t end = compact.find_first_of("+-", pos);
    std::string_view term = std::string_view(compact).substr(pos, end == std::string::npos ? end : end - pos);
    if (term.empty()) throw ContractError("empty term at offset " + std::to_string(pos));
    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(term.front()))) {
      auto star = term.find('*');
      if (star == std::string_view::npos) throw ContractError("coefficient without monomial");
      coeff = parse_rational(term.substr(0, star));
      term = term.substr(star + 1);
    }
    out.add_term(detail::parse_monomial(g, term), coeff * sign);
    pos = end == std::string::npos ? compact.size() : end;
  }
  return out;
}

}  // namespace leavitt
