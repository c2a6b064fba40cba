#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

#include "leavitt/errors.hpp"

namespace leavitt {

/// The cardinalities that occur for sets built from a finitely presented
/// graph: finite, countably infinite, or uncountable.
class Cardinal {
 public:
  enum class Kind { Finite, CountablyInfinite, Uncountable };

  constexpr Cardinal() = default;

  static constexpr Cardinal finite(std::uint64_t n) { return Cardinal(Kind::Finite, n); }
  static constexpr Cardinal countably_infinite() { return Cardinal(Kind::CountablyInfinite, 0); }
  static constexpr Cardinal uncountable() { return Cardinal(Kind::Uncountable, 0); }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr bool is_finite() const noexcept { return kind_ == Kind::Finite; }

  std::uint64_t value() const {
    if (!is_finite()) throw ContractError("infinite cardinal has no finite value");
    return n_;
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::Finite: return std::to_string(n_);
      case Kind::CountablyInfinite: return "countably-infinite";
      case Kind::Uncountable: return "uncountable";
    }
    return "?";
  }

  friend Cardinal operator+(Cardinal a, Cardinal b) {
    if (a.kind_ == Kind::Uncountable || b.kind_ == Kind::Uncountable) return uncountable();
    if (a.kind_ == Kind::CountablyInfinite || b.kind_ == Kind::CountablyInfinite) return countably_infinite();
    if (a.n_ > std::numeric_limits<std::uint64_t>::max() - b.n_) throw SizeError("count overflow");
    return finite(a.n_ + b.n_);
  }

  friend Cardinal operator*(Cardinal a, Cardinal b) {
    if (a == finite(0) || b == finite(0)) return finite(0);
    if (a.kind_ == Kind::Uncountable || b.kind_ == Kind::Uncountable) return uncountable();
    if (a.kind_ == Kind::CountablyInfinite || b.kind_ == Kind::CountablyInfinite) return countably_infinite();
    if (a.n_ > std::numeric_limits<std::uint64_t>::max() / b.n_) throw SizeError("count overflow");
    return finite(a.n_ * b.n_);
  }

  friend constexpr bool operator==(const Cardinal&, const Cardinal&) = default;

 private:
  constexpr Cardinal(Kind k, std::uint64_t n) : kind_(k), n_(n) {}

  Kind kind_ = Kind::Finite;
  std::uint64_t n_ = 0;
};

}  // namespace leavitt
