#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "leavitt/graph.hpp"

namespace sweep {

/// Visits every graph on 1..max_vertices vertices whose bundles form a
/// multiset of at most max_bundles ordered vertex pairs (loops allowed), all
/// of multiplicity 1. With `omega_variants`, each such graph is followed by
/// one copy per bundle with that bundle promoted to omega.
inline void for_each_graph(std::size_t max_vertices, std::size_t max_bundles, bool omega_variants,
                           const std::function<void(const leavitt::Graph&)>& visit) {
  using leavitt::BundleSpec;
  using leavitt::Multiplicity;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t r = 0; r < n; ++r) pairs.emplace_back(s, r);

    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
      std::vector<BundleSpec> bundles;
      for (std::size_t i = 0; i < chosen.size(); ++i)
        bundles.push_back({"e" + std::to_string(i), names[pairs[chosen[i]].first], names[pairs[chosen[i]].second]});
      visit(leavitt::Graph(names, bundles));
      if (omega_variants) {
        for (std::size_t k = 0; k < bundles.size(); ++k) {
          auto promoted = bundles;
          promoted[k].multiplicity = Multiplicity::omega();
          visit(leavitt::Graph(names, promoted));
        }
      }
      if (chosen.size() == max_bundles) return;
      for (std::size_t p = from; p < pairs.size(); ++p) {
        chosen.push_back(p);
        extend(p);
        chosen.pop_back();
      }
    };
    extend(0);
  }
}

}  // namespace sweep
