#pragma once

// Small inverse semigroups used as test instances: chains, cyclic groups,
// symmetric inverse monoids, the three-element semilattice {0, e, f} and
// every meet semilattice up to a given size.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "invsemi/core.hpp"
#include "invsemi/error.hpp"
#include "invsemi/pbij.hpp"

namespace invsemi {

  // 0 < 1 < ... < k-1 under min.
  inline InverseSemigroup chain(std::size_t k) {
    Table mul(k, std::vector<std::size_t>(k));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        mul[a][b] = std::min(a, b);
      }
    }
    return InverseSemigroup::validate(std::move(mul));
  }

  inline InverseSemigroup cyclic_group(std::size_t m) {
    Table mul(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        mul[a][b] = (a + b) % m;
      }
    }
    return InverseSemigroup::validate(std::move(mul));
  }

  /// All partial bijections of n points in lexicographic order of their
  /// image vectors (undefined sorts last).
  inline std::vector<PartialBijection> all_partial_bijections(std::size_t n) {
    std::vector<PartialBijection>    out;
    std::vector<std::size_t>         image(n, PartialBijection::undefined);
    std::vector<bool>                used(n, false);
    auto rec = [&](auto&& self, std::size_t x) -> void {
      if (x == n) {
        out.push_back(PartialBijection::from_images(image));
        return;
      }
      for (std::size_t y = 0; y < n; ++y) {
        if (!used[y]) {
          used[y]  = true;
          image[x] = y;
          self(self, x + 1);
          used[y] = false;
        }
      }
      image[x] = PartialBijection::undefined;
      self(self, x + 1);
    };
    rec(rec, 0);
    return out;
  }

  /// I_n with product fg = f o g. Elements are named by their image vector,
  /// "-" marking undefined points ("[0,-]" sends 0 to 0 and leaves 1 out).
  inline InverseSemigroup symmetric_inverse_monoid(std::size_t n) {
    auto const               elems = all_partial_bijections(n);
    std::size_t const        k     = elems.size();
    Table                    mul(k, std::vector<std::size_t>(k));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        auto const c = compose(elems[i], elems[j]);
        mul[i][j]    = static_cast<std::size_t>(
            std::lower_bound(elems.begin(), elems.end(), c,
                             [](auto const& a, auto const& b) {
                               return a.images() < b.images();
                             })
            - elems.begin());
      }
      std::string name = "[";
      for (std::size_t x = 0; x < n; ++x) {
        name += (x ? "," : "");
        name += elems[i].defined(x) ? std::to_string(elems[i](x)) : "-";
      }
      names.push_back(name + "]");
    }
    return InverseSemigroup::validate(std::move(mul), std::move(names));
  }

  /// {0, e, f} with 0 below e and f, and e ^ f = 0.
  inline InverseSemigroup example_semilattice() {
    return InverseSemigroup::validate({{0, 0, 0}, {0, 1, 0}, {0, 0, 2}},
                                      {"0", "e", "f"});
  }

  namespace detail {
    // Lexicographically least relabelled table over all permutations.
    inline std::vector<std::size_t> canonical_table(Table const& mul) {
      std::size_t const        n = mul.size();
      std::vector<std::size_t> perm(n), best;
      std::iota(perm.begin(), perm.end(), std::size_t(0));
      std::vector<std::size_t> inv(n), cur(n * n);
      do {
        for (std::size_t i = 0; i < n; ++i) {
          inv[perm[i]] = i;
        }
        // new label i is old element perm[i]
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            cur[a * n + b] = inv[mul[perm[a]][perm[b]]];
          }
        }
        if (best.empty() || cur < best) {
          best = cur;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return best;
    }
  }  // namespace detail

  /// Every meet semilattice with exactly n elements, one per isomorphism
  /// class, each relabelled to its canonical table. Enumerates naturally
  /// labelled posets (i below j implies i < j) and keeps those with all meets.
  inline std::vector<InverseSemigroup> semilattices_of_size(std::size_t n) {
    if (n == 0) {
      return {};
    }
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        slots.emplace_back(i, j);
      }
    }
    std::set<std::vector<std::size_t>> seen;
    std::vector<InverseSemigroup>      out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << slots.size()); ++mask) {
      BinaryRelation le = BinaryRelation::equality(n);
      for (std::size_t b = 0; b < slots.size(); ++b) {
        if (mask >> b & 1) {
          le.insert(slots[b].first, slots[b].second);
        }
      }
      if (!le.is_transitive()) {
        continue;
      }
      Semilattice E;
      try {
        E = Semilattice::from_order(le);
      } catch (Error const&) {
        continue;
      }
      auto canon = detail::canonical_table(E.semigroup().table());
      if (!seen.insert(canon).second) {
        continue;
      }
      Table mul(n, std::vector<std::size_t>(n));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          mul[a][b] = canon[a * n + b];
        }
      }
      out.push_back(InverseSemigroup::validate(std::move(mul)));
    }
    std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      return x.table() < y.table();
    });
    return out;
  }

  struct CorpusEntry {
    std::string      name;
    InverseSemigroup semigroup;
  };

  /// The standard test corpus, restricted to |S| <= max_n: every semilattice
  /// with at most 6 elements (SL<n>.<i>), chains C2..C8, cyclic groups
  /// Z2..Z8, I1, I2, and V = {0, e, f}.
  inline std::vector<CorpusEntry> standard_corpus(std::size_t max_n = 8) {
    std::vector<CorpusEntry> out;
    for (std::size_t n = 1; n <= std::min<std::size_t>(6, max_n); ++n) {
      auto const all = semilattices_of_size(n);
      for (std::size_t i = 0; i < all.size(); ++i) {
        out.push_back({"SL" + std::to_string(n) + "." + std::to_string(i),
                       all[i]});
      }
    }
    for (std::size_t k = 2; k <= std::min<std::size_t>(8, max_n); ++k) {
      out.push_back({"C" + std::to_string(k), chain(k)});
    }
    for (std::size_t m = 2; m <= std::min<std::size_t>(8, max_n); ++m) {
      out.push_back({"Z" + std::to_string(m), cyclic_group(m)});
    }
    for (std::size_t n = 1; n <= 2; ++n) {
      auto S = symmetric_inverse_monoid(n);
      if (S.size() <= max_n) {
        out.push_back({"I" + std::to_string(n), std::move(S)});
      }
    }
    if (max_n >= 3) {
      out.push_back({"V", example_semilattice()});
    }
    return out;
  }

}  // namespace invsemi
