#pragma once

#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "invsemi/core.hpp"
#include "invsemi/error.hpp"

namespace invsemi {

  /// Checks that `partition` (one class id per element) is compatible with
  /// left and right multiplication. Throws `Error("NotCompatible", ...,
  /// {u, s, t})` for the first related pair (s, t) and multiplier u breaking
  /// it, or `Error("BadPartition")` for a size mismatch.
  inline Congruence validate_congruence(InverseSemigroup const&         S,
                                        std::vector<std::size_t> const& partition) {
    if (partition.size() != S.size()) {
      throw Error("BadPartition",
                  detail::concat("partition covers ", partition.size(),
                                 " elements, semigroup has ", S.size()));
    }
    Congruence rho(partition);
    for (std::size_t s = 0; s < S.size(); ++s) {
      for (std::size_t t = s + 1; t < S.size(); ++t) {
        if (!rho.related(s, t)) {
          continue;
        }
        for (std::size_t u = 0; u < S.size(); ++u) {
          if (!rho.related(S.product(u, s), S.product(u, t))
              || !rho.related(S.product(s, u), S.product(t, u))) {
            throw Error("NotCompatible",
                        detail::concat("(", s, ",", t,
                                       ") related but multiplying by ", u,
                                       " separates them"),
                        {u, s, t});
          }
        }
      }
    }
    return rho;
  }

  /// Idempotent purity of a congruence. When it holds, also confirms the
  /// containments rho in ~ in sigma, which are theorems.
  inline bool is_idempotent_pure(InverseSemigroup const& S,
                                 Congruence const&       rho) {
    if (!rho.is_idempotent_pure(S)) {
      return false;
    }
    auto const r = rho.relation();
    if (!r.is_subset_of(compatibility(S))) {
      detail::internal_error("idempotent pure congruence not inside ~");
    }
    if (!rho.is_finer_than(sigma(S))) {
      detail::internal_error("idempotent pure congruence not inside sigma");
    }
    return true;
  }

  namespace detail {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t(0));
      }

      std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
          parent_[x] = parent_[parent_[x]];
          x          = parent_[x];
        }
        return x;
      }

      bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        if (b < a) {
          std::swap(a, b);
        }
        parent_[b] = a;
        return true;
      }

     private:
      std::vector<std::size_t> parent_;
    };
  }  // namespace detail

  /// The least congruence containing the given pairs, by closing the
  /// generated equivalence under left and right translations until nothing
  /// changes.
  inline Congruence congruence_generated_by(
      InverseSemigroup const&                                S,
      std::vector<std::pair<std::size_t, std::size_t>> const& pairs) {
    std::size_t const n = S.size();
    detail::UnionFind uf(n);
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) {
        throw Error("BadPair",
                    detail::concat("pair (", a, ",", b, ") out of range"),
                    {a, b});
      }
      uf.unite(a, b);
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t x = 0; x < n; ++x) {
        std::size_t const r = uf.find(x);
        if (r == x) {
          continue;
        }
        for (std::size_t u = 0; u < n; ++u) {
          changed |= uf.unite(S.product(u, x), S.product(u, r));
          changed |= uf.unite(S.product(x, u), S.product(r, u));
        }
      }
    }
    std::vector<std::size_t> class_of(n);
    for (std::size_t x = 0; x < n; ++x) {
      class_of[x] = uf.find(x);
    }
    return Congruence(class_of);
  }

  /// S/rho with elements numbered by class id, and the projection s -> [s].
  struct Quotient {
    InverseSemigroup         semigroup;
    std::vector<std::size_t> projection;
  };

  /// Label for a class: its maximum in the natural order if it has one,
  /// otherwise its least element, written as "[x]".
  inline std::string class_label(InverseSemigroup const&         S,
                                 std::vector<std::size_t> const& cls) {
    for (std::size_t m : cls) {
      bool top = true;
      for (std::size_t x : cls) {
        top = top && S.leq(x, m);
      }
      if (top) {
        return "[" + S.name(m) + "]";
      }
    }
    return "[" + S.name(cls.front()) + "]";
  }

  inline Quotient quotient(InverseSemigroup const& S, Congruence const& rho) {
    auto const               classes = rho.classes();
    std::size_t const        k       = classes.size();
    Table                    mul(k, std::vector<std::size_t>(k));
    std::vector<std::string> names;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        mul[a][b] = rho.class_of(S.product(classes[a][0], classes[b][0]));
      }
      names.push_back(class_label(S, classes[a]));
    }
    return {InverseSemigroup::validate(std::move(mul), std::move(names)),
            rho.class_ids()};
  }

  /// Default upper bound on |S| for `enumerate_congruences`.
  inline constexpr std::size_t default_enumeration_bound = 8;

  /// All congruences of S in lexicographic order of their restricted growth
  /// strings (universal first, equality last). Throws `Error("SizeBound")`
  /// when |S| exceeds `bound`.
  inline std::vector<Congruence> enumerate_congruences(
      InverseSemigroup const& S,
      bool                    idempotent_pure_only = false,
      std::size_t             bound                = default_enumeration_bound) {
    std::size_t const n = S.size();
    if (n > bound) {
      throw Error("SizeBound",
                  detail::concat("|S| = ", n, " exceeds the bound ", bound));
    }
    std::vector<Congruence>  out;
    std::vector<std::size_t> rgs(n, 0);

    // All constraints whose elements are among 0..i are decided.
    auto consistent = [&](std::size_t i) {
      for (std::size_t a = 0; a <= i; ++a) {
        for (std::size_t b = a + 1; b <= i; ++b) {
          if (rgs[a] != rgs[b]) {
            continue;
          }
          for (std::size_t u = 0; u < n; ++u) {
            std::size_t l1 = S.product(u, a), l2 = S.product(u, b);
            std::size_t r1 = S.product(a, u), r2 = S.product(b, u);
            if (l1 <= i && l2 <= i && rgs[l1] != rgs[l2]) {
              return false;
            }
            if (r1 <= i && r2 <= i && rgs[r1] != rgs[r2]) {
              return false;
            }
          }
        }
      }
      return true;
    };

    std::function<void(std::size_t, std::size_t)> extend
        = [&](std::size_t i, std::size_t used) {
            if (i == n) {
              Congruence rho(rgs);
              if (!idempotent_pure_only || rho.is_idempotent_pure(S)) {
                out.push_back(std::move(rho));
              }
              return;
            }
            for (std::size_t c = 0; c <= used && c < n; ++c) {
              rgs[i] = c;
              if (consistent(i)) {
                extend(i + 1, c == used ? used + 1 : used);
              }
            }
          };
    rgs[0] = 0;
    extend(1, 1);
    return out;
  }

}  // namespace invsemi
