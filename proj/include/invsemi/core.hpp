#pragma once

// Finite inverse semigroups given by Cayley tables, together with the
// relations that every later construction leans on: the natural partial
// order, the compatibility relation, Green's R relation and the semilattice
// of idempotents.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invsemi/error.hpp"

namespace invsemi {

  using Table = std::vector<std::vector<std::size_t>>;

  /// An n x n boolean table.
  class BinaryRelation {
   public:
    BinaryRelation() = default;
    explicit BinaryRelation(std::size_t n) : n_(n), bits_(n * n, 0) {}

    static BinaryRelation equality(std::size_t n) {
      BinaryRelation r(n);
      for (std::size_t i = 0; i < n; ++i) {
        r.insert(i, i);
      }
      return r;
    }

    static BinaryRelation universal(std::size_t n) {
      BinaryRelation r(n);
      std::fill(r.bits_.begin(), r.bits_.end(), 1);
      return r;
    }

    std::size_t size() const noexcept {
      return n_;
    }

    bool contains(std::size_t a, std::size_t b) const {
      return bits_[a * n_ + b] != 0;
    }

    void insert(std::size_t a, std::size_t b) {
      bits_[a * n_ + b] = 1;
    }

    void erase(std::size_t a, std::size_t b) {
      bits_[a * n_ + b] = 0;
    }

    std::size_t count() const {
      return static_cast<std::size_t>(
          std::count(bits_.begin(), bits_.end(), char(1)));
    }

    bool is_reflexive() const {
      for (std::size_t i = 0; i < n_; ++i) {
        if (!contains(i, i)) {
          return false;
        }
      }
      return true;
    }

    bool is_symmetric() const {
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
          if (contains(i, j) != contains(j, i)) {
            return false;
          }
        }
      }
      return true;
    }

    bool is_antisymmetric() const {
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
          if (i != j && contains(i, j) && contains(j, i)) {
            return false;
          }
        }
      }
      return true;
    }

    bool is_transitive() const {
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
          if (!contains(i, j)) {
            continue;
          }
          for (std::size_t k = 0; k < n_; ++k) {
            if (contains(j, k) && !contains(i, k)) {
              return false;
            }
          }
        }
      }
      return true;
    }

    bool is_partial_order() const {
      return is_reflexive() && is_antisymmetric() && is_transitive();
    }

    bool is_equivalence() const {
      return is_reflexive() && is_symmetric() && is_transitive();
    }

    // this is a subset of that
    bool is_subset_of(BinaryRelation const& that) const {
      for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] && !that.bits_[i]) {
          return false;
        }
      }
      return n_ == that.n_;
    }

    BinaryRelation intersection(BinaryRelation const& that) const {
      BinaryRelation r(n_);
      for (std::size_t i = 0; i < bits_.size(); ++i) {
        r.bits_[i] = bits_[i] && that.bits_[i];
      }
      return r;
    }

    friend bool operator==(BinaryRelation const&, BinaryRelation const&)
        = default;

   private:
    std::size_t       n_ = 0;
    std::vector<char> bits_;
  };

  /// A finite inverse semigroup on the elements 0, ..., n - 1.
  ///
  /// Instances are only produced by `validate`, so every object of this type
  /// satisfies associativity, regularity and commutation of idempotents, and
  /// carries its (unique) inverse map.
  class InverseSemigroup {
   public:
    InverseSemigroup() = default;

    /// Checks the axioms in the order: table shape, associativity,
    /// regularity, commuting idempotents. Throws `Error` with kind
    /// "BadTable", "NotAssociative" (witness a, b, c), "NoInverse"
    /// (witness s) or "IdempotentsDontCommute" (witness e, f); witnesses are
    /// the lexicographically least offending tuple.
    static InverseSemigroup validate(Table mul,
                                     std::vector<std::string> names = {}) {
      std::size_t const n = mul.size();
      if (n == 0) {
        throw Error("BadTable", "a semigroup needs at least one element");
      }
      for (std::size_t a = 0; a < n; ++a) {
        if (mul[a].size() != n) {
          throw Error("BadTable",
                      detail::concat("row ", a, " has ", mul[a].size(),
                                     " entries, expected ", n),
                      {a});
        }
        for (std::size_t b = 0; b < n; ++b) {
          if (mul[a][b] >= n) {
            throw Error("BadTable",
                        detail::concat("entry (", a, ",", b, ") = ",
                                       mul[a][b], " out of range"),
                        {a, b});
          }
        }
      }
      if (!names.empty() && names.size() != n) {
        throw Error("BadTable",
                    detail::concat("expected ", n, " names, got ",
                                   names.size()));
      }
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
              throw Error("NotAssociative",
                          detail::concat("(", a, "*", b, ")*", c, " != ", a,
                                         "*(", b, "*", c, ")"),
                          {a, b, c});
            }
          }
        }
      }
      std::vector<std::size_t> inv(n, n);
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t x = 0; x < n; ++x) {
          if (mul[mul[s][x]][s] == s && mul[mul[x][s]][x] == x) {
            inv[s] = x;
            break;
          }
        }
        if (inv[s] == n) {
          throw Error("NoInverse",
                      detail::concat("element ", s, " has no inverse"), {s});
        }
      }
      for (std::size_t e = 0; e < n; ++e) {
        if (mul[e][e] != e) {
          continue;
        }
        for (std::size_t f = e + 1; f < n; ++f) {
          if (mul[f][f] == f && mul[e][f] != mul[f][e]) {
            throw Error("IdempotentsDontCommute",
                        detail::concat("idempotents ", e, " and ", f,
                                       " do not commute"),
                        {e, f});
          }
        }
      }
      InverseSemigroup S;
      S.mul_   = std::move(mul);
      S.inv_   = std::move(inv);
      S.names_ = std::move(names);
      return S;
    }

    std::size_t size() const noexcept {
      return mul_.size();
    }

    std::size_t product(std::size_t a, std::size_t b) const {
      return mul_[a][b];
    }

    std::size_t product(std::size_t a, std::size_t b, std::size_t c) const {
      return mul_[mul_[a][b]][c];
    }

    std::size_t inverse(std::size_t a) const {
      return inv_[a];
    }

    Table const& table() const noexcept {
      return mul_;
    }

    std::vector<std::size_t> const& inverses() const noexcept {
      return inv_;
    }

    bool has_names() const noexcept {
      return !names_.empty();
    }

    std::vector<std::string> const& names() const noexcept {
      return names_;
    }

    std::string name(std::size_t a) const {
      return names_.empty() ? std::to_string(a) : names_[a];
    }

    bool is_idempotent(std::size_t a) const {
      return mul_[a][a] == a;
    }

    // ss^-1
    std::size_t range_idempotent(std::size_t s) const {
      return mul_[s][inv_[s]];
    }

    // s^-1s
    std::size_t domain_idempotent(std::size_t s) const {
      return mul_[inv_[s]][s];
    }

    std::vector<std::size_t> idempotents() const {
      std::vector<std::size_t> out;
      for (std::size_t a = 0; a < size(); ++a) {
        if (is_idempotent(a)) {
          out.push_back(a);
        }
      }
      return out;
    }

    bool is_group() const {
      return idempotents().size() == 1;
    }

    bool is_semilattice() const {
      for (std::size_t a = 0; a < size(); ++a) {
        if (!is_idempotent(a)) {
          return false;
        }
        for (std::size_t b = 0; b < size(); ++b) {
          if (mul_[a][b] != mul_[b][a]) {
            return false;
          }
        }
      }
      return true;
    }

    // s <= t in the natural partial order, i.e. s = ss^-1t.
    bool leq(std::size_t s, std::size_t t) const {
      return product(range_idempotent(s), t) == s;
    }

    friend bool operator==(InverseSemigroup const& x,
                           InverseSemigroup const& y) {
      return x.mul_ == y.mul_;
    }

   private:
    Table                    mul_;
    std::vector<std::size_t> inv_;
    std::vector<std::string> names_;
  };

  /// A finite meet semilattice on 0, ..., n - 1, with meet as multiplication.
  class Semilattice {
   public:
    Semilattice() = default;

    /// Throws `Error("NotSemilattice")` if some element is not idempotent or
    /// some pair does not commute.
    static Semilattice from_semigroup(InverseSemigroup S) {
      for (std::size_t a = 0; a < S.size(); ++a) {
        if (!S.is_idempotent(a)) {
          throw Error("NotSemilattice",
                      detail::concat("element ", a, " is not idempotent"),
                      {a});
        }
        for (std::size_t b = a + 1; b < S.size(); ++b) {
          if (S.product(a, b) != S.product(b, a)) {
            throw Error("NotSemilattice",
                        detail::concat(a, " and ", b, " do not commute"),
                        {a, b});
          }
        }
      }
      Semilattice E;
      E.S_ = std::move(S);
      return E;
    }

    /// Builds the meet table of a finite partial order. Throws
    /// `Error("NotPartialOrder")` or `Error("NoMeet", ..., {a, b})`.
    static Semilattice from_order(BinaryRelation const&   le,
                                  std::vector<std::string> names = {}) {
      if (!le.is_partial_order()) {
        throw Error("NotPartialOrder", "relation is not a partial order");
      }
      std::size_t const n = le.size();
      Table             mul(n, std::vector<std::size_t>(n));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          std::optional<std::size_t> glb;
          for (std::size_t c = 0; c < n; ++c) {
            if (!le.contains(c, a) || !le.contains(c, b)) {
              continue;
            }
            bool greatest = true;
            for (std::size_t d = 0; d < n && greatest; ++d) {
              if (le.contains(d, a) && le.contains(d, b)
                  && !le.contains(d, c)) {
                greatest = false;
              }
            }
            if (greatest) {
              glb = c;
              break;
            }
          }
          if (!glb) {
            throw Error("NoMeet",
                        detail::concat(a, " and ", b, " have no meet"),
                        {a, b});
          }
          mul[a][b] = *glb;
        }
      }
      return from_semigroup(InverseSemigroup::validate(std::move(mul),
                                                       std::move(names)));
    }

    std::size_t size() const noexcept {
      return S_.size();
    }

    std::size_t meet(std::size_t a, std::size_t b) const {
      return S_.product(a, b);
    }

    bool leq(std::size_t a, std::size_t b) const {
      return S_.product(a, b) == a;
    }

    std::string name(std::size_t a) const {
      return S_.name(a);
    }

    InverseSemigroup const& semigroup() const noexcept {
      return S_;
    }

    BinaryRelation order() const {
      BinaryRelation r(size());
      for (std::size_t a = 0; a < size(); ++a) {
        for (std::size_t b = 0; b < size(); ++b) {
          if (leq(a, b)) {
            r.insert(a, b);
          }
        }
      }
      return r;
    }

    // Down-closed: x in the set and y <= x imply y in the set.
    bool is_order_ideal(std::vector<bool> const& member) const {
      for (std::size_t x = 0; x < size(); ++x) {
        if (!member[x]) {
          continue;
        }
        for (std::size_t y = 0; y < size(); ++y) {
          if (leq(y, x) && !member[y]) {
            return false;
          }
        }
      }
      return true;
    }

    std::vector<std::size_t> principal_ideal(std::size_t e) const {
      std::vector<std::size_t> out;
      for (std::size_t x = 0; x < size(); ++x) {
        if (leq(x, e)) {
          out.push_back(x);
        }
      }
      return out;
    }

    // The least element; every finite semilattice has one.
    std::size_t bottom() const {
      std::size_t z = 0;
      for (std::size_t x = 1; x < size(); ++x) {
        z = meet(z, x);
      }
      return z;
    }

    friend bool operator==(Semilattice const& x, Semilattice const& y) {
      return x.S_ == y.S_;
    }

   private:
    InverseSemigroup S_;
  };

  /// E(S) as a semilattice on 0, ..., |E(S)| - 1, with the translation back
  /// to elements of S. Idempotents are numbered in increasing element order.
  struct IdempotentSemilattice {
    Semilattice                             lattice;
    std::vector<std::size_t>                element;
    std::vector<std::optional<std::size_t>> index;

    std::size_t index_of(std::size_t s) const {
      if (!index[s]) {
        detail::internal_error(detail::concat(s, " is not idempotent"));
      }
      return *index[s];
    }
  };

  inline IdempotentSemilattice idempotent_semilattice(InverseSemigroup const& S) {
    IdempotentSemilattice out;
    out.element = S.idempotents();
    out.index.assign(S.size(), std::nullopt);
    for (std::size_t i = 0; i < out.element.size(); ++i) {
      out.index[out.element[i]] = i;
    }
    std::size_t const        k = out.element.size();
    Table                    mul(k, std::vector<std::size_t>(k));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        mul[i][j] = *out.index[S.product(out.element[i], out.element[j])];
      }
      if (S.has_names()) {
        names.push_back(S.name(out.element[i]));
      }
    }
    out.lattice = Semilattice::from_semigroup(
        InverseSemigroup::validate(std::move(mul), std::move(names)));
    return out;
  }

  inline BinaryRelation natural_partial_order(InverseSemigroup const& S) {
    BinaryRelation r(S.size());
    for (std::size_t s = 0; s < S.size(); ++s) {
      for (std::size_t t = 0; t < S.size(); ++t) {
        if (S.leq(s, t)) {
          r.insert(s, t);
        }
      }
    }
    return r;
  }

  // s ~ t iff s^-1t and st^-1 are both idempotent.
  inline BinaryRelation compatibility(InverseSemigroup const& S) {
    BinaryRelation r(S.size());
    for (std::size_t s = 0; s < S.size(); ++s) {
      for (std::size_t t = 0; t < S.size(); ++t) {
        if (S.is_idempotent(S.product(S.inverse(s), t))
            && S.is_idempotent(S.product(s, S.inverse(t)))) {
          r.insert(s, t);
        }
      }
    }
    return r;
  }

  inline BinaryRelation green_R(InverseSemigroup const& S) {
    BinaryRelation r(S.size());
    for (std::size_t s = 0; s < S.size(); ++s) {
      for (std::size_t t = 0; t < S.size(); ++t) {
        if (S.range_idempotent(s) == S.range_idempotent(t)) {
          r.insert(s, t);
        }
      }
    }
    return r;
  }

  /// A partition of 0, ..., n - 1, stored as class ids numbered in order of
  /// first appearance. Whether it is compatible with a multiplication is
  /// checked by `validate_congruence`; the operations here are purely
  /// combinatorial.
  class Congruence {
   public:
    Congruence() = default;

    explicit Congruence(std::vector<std::size_t> const& class_of) {
      std::vector<std::size_t> relabel;
      std::vector<std::size_t> seen;
      class_of_.reserve(class_of.size());
      for (std::size_t c : class_of) {
        auto it = std::find(seen.begin(), seen.end(), c);
        if (it == seen.end()) {
          seen.push_back(c);
          class_of_.push_back(seen.size() - 1);
        } else {
          class_of_.push_back(static_cast<std::size_t>(it - seen.begin()));
        }
      }
      num_classes_ = seen.size();
    }

    static Congruence equality(std::size_t n) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) {
        c[i] = i;
      }
      return Congruence(c);
    }

    static Congruence universal(std::size_t n) {
      return Congruence(std::vector<std::size_t>(n, 0));
    }

    std::size_t size() const noexcept {
      return class_of_.size();
    }

    std::size_t num_classes() const noexcept {
      return num_classes_;
    }

    std::size_t class_of(std::size_t s) const {
      return class_of_[s];
    }

    std::vector<std::size_t> const& class_ids() const noexcept {
      return class_of_;
    }

    bool related(std::size_t s, std::size_t t) const {
      return class_of_[s] == class_of_[t];
    }

    std::vector<std::vector<std::size_t>> classes() const {
      std::vector<std::vector<std::size_t>> out(num_classes_);
      for (std::size_t s = 0; s < class_of_.size(); ++s) {
        out[class_of_[s]].push_back(s);
      }
      return out;
    }

    BinaryRelation relation() const {
      BinaryRelation r(size());
      for (std::size_t s = 0; s < size(); ++s) {
        for (std::size_t t = 0; t < size(); ++t) {
          if (related(s, t)) {
            r.insert(s, t);
          }
        }
      }
      return r;
    }

    // Every class that contains an idempotent consists of idempotents.
    bool is_idempotent_pure(InverseSemigroup const& S) const {
      for (std::size_t e = 0; e < size(); ++e) {
        if (!S.is_idempotent(e)) {
          continue;
        }
        for (std::size_t s = 0; s < size(); ++s) {
          if (related(e, s) && !S.is_idempotent(s)) {
            return false;
          }
        }
      }
      return true;
    }

    // this is contained in that, as sets of pairs
    bool is_finer_than(Congruence const& that) const {
      for (std::size_t s = 0; s < size(); ++s) {
        for (std::size_t t = s + 1; t < size(); ++t) {
          if (related(s, t) && !that.related(s, t)) {
            return false;
          }
        }
      }
      return true;
    }

    friend bool operator==(Congruence const&, Congruence const&) = default;

   private:
    std::vector<std::size_t> class_of_;
    std::size_t              num_classes_ = 0;
  };

  /// The minimum group congruence: s sigma t iff some u lies below both.
  inline Congruence sigma(InverseSemigroup const& S) {
    std::size_t const        n = S.size();
    std::vector<std::size_t> class_of(n, n);
    std::size_t              next = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (class_of[s] != n) {
        continue;
      }
      class_of[s] = next;
      for (std::size_t t = s + 1; t < n; ++t) {
        for (std::size_t u = 0; u < n; ++u) {
          if (S.leq(u, s) && S.leq(u, t)) {
            class_of[t] = next;
            break;
          }
        }
      }
      ++next;
    }
    return Congruence(class_of);
  }

  inline bool is_E_unitary(InverseSemigroup const& S) {
    return sigma(S).is_idempotent_pure(S);
  }

  /// The maximum element of every sigma-class (indexed by class id), or
  /// nullopt if some class has none.
  inline std::optional<std::vector<std::size_t>> F_inverse_maxima(
      InverseSemigroup const& S) {
    auto const               sig = sigma(S);
    std::vector<std::size_t> maxima;
    for (auto const& cls : sig.classes()) {
      std::optional<std::size_t> top;
      for (std::size_t m : cls) {
        if (std::all_of(cls.begin(), cls.end(),
                        [&](std::size_t x) { return S.leq(x, m); })) {
          top = m;
          break;
        }
      }
      if (!top) {
        return std::nullopt;
      }
      maxima.push_back(*top);
    }
    if (!sig.is_idempotent_pure(S)) {
      detail::internal_error("F-inverse semigroup that is not E-unitary");
    }
    return maxima;
  }

  inline bool is_F_inverse(InverseSemigroup const& S) {
    return F_inverse_maxima(S).has_value();
  }

}  // namespace invsemi
