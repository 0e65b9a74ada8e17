#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "invsemi/core.hpp"
#include "invsemi/corpus.hpp"
#include "invsemi/pbij.hpp"

namespace testing_support {

  /// Seed for randomized sampling; INVSEMI_SEED overrides the default.
  inline std::uint64_t seed() {
    if (char const* s = std::getenv("INVSEMI_SEED")) {
      return std::stoull(s);
    }
    return 20240607;
  }

  inline std::string data_file(std::string const& name) {
    char const* dir = std::getenv("INVSEMI_DATA");
    return std::string(dir ? dir : "data") + "/" + name;
  }

  /// The inverse subsemigroup of I_n generated by `gens`, as a semigroup
  /// numbered in increasing order of image vectors, plus the maps.
  struct Generated {
    invsemi::InverseSemigroup              semigroup;
    std::vector<invsemi::PartialBijection> maps;
  };

  inline Generated generated_by(std::vector<invsemi::PartialBijection> gens) {
    using invsemi::PartialBijection;
    std::set<PartialBijection> all;
    for (auto const& g : gens) {
      all.insert(g);
      all.insert(g.inverse());
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<PartialBijection> cur(all.begin(), all.end());
      for (auto const& a : cur) {
        for (auto const& b : cur) {
          grew = all.insert(invsemi::compose(a, b)).second || grew;
        }
      }
    }
    std::vector<PartialBijection> maps(all.begin(), all.end());
    std::size_t const             k = maps.size();
    invsemi::Table                mul(k, std::vector<std::size_t>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        auto const c = invsemi::compose(maps[i], maps[j]);
        mul[i][j]    = static_cast<std::size_t>(
            std::find(maps.begin(), maps.end(), c) - maps.begin());
      }
    }
    return {invsemi::InverseSemigroup::validate(std::move(mul)), std::move(maps)};
  }

  /// A random inverse subsemigroup of I_points with at most `max_size`
  /// elements (retries with fewer generators when it grows too large).
  inline Generated random_inverse_semigroup(std::mt19937_64& rng,
                                            std::size_t points,
                                            std::size_t max_size) {
    auto const all = invsemi::all_partial_bijections(points);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (;;) {
      std::size_t const                      count = 1 + rng() % 2;
      std::vector<invsemi::PartialBijection> gens;
      for (std::size_t i = 0; i < count; ++i) {
        gens.push_back(all[pick(rng)]);
      }
      auto g = generated_by(gens);
      if (g.semigroup.size() <= max_size) {
        return g;
      }
    }
  }

}  // namespace testing_support
