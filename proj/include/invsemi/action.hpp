#pragma once

// Premorphisms S -> I(X) (partial actions), the Munn representation, the
// lift of a partial action along an idempotent pure congruence, the
// order-preserving test that decides globalizability, and restriction of a
// global action to a subset.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invsemi/congruence.hpp"
#include "invsemi/core.hpp"
#include "invsemi/error.hpp"
#include "invsemi/pbij.hpp"

namespace invsemi {

  /// A premorphism from `source()` into I(X), X = {0, ..., ground() - 1}.
  /// When `semilattice()` is set, X carries that semilattice structure and
  /// every map is an isomorphism between order ideals.
  class PartialAction {
   public:
    PartialAction() = default;

    InverseSemigroup const& source() const noexcept {
      return S_;
    }

    std::size_t ground() const noexcept {
      return ground_;
    }

    std::optional<Semilattice> const& semilattice() const noexcept {
      return E_;
    }

    PartialBijection const& operator[](std::size_t s) const {
      return maps_[s];
    }

    std::vector<PartialBijection> const& maps() const noexcept {
      return maps_;
    }

    // tau_s tau_t = tau_st for all s, t
    bool is_global() const noexcept {
      return global_;
    }

    friend bool operator==(PartialAction const& a, PartialAction const& b) {
      return a.S_ == b.S_ && a.ground_ == b.ground_ && a.maps_ == b.maps_;
    }

   private:
    friend PartialAction validate_premorphism(InverseSemigroup,
                                              std::vector<PartialBijection>,
                                              std::size_t,
                                              std::optional<Semilattice>);

    InverseSemigroup              S_;
    std::size_t                   ground_ = 0;
    std::optional<Semilattice>    E_;
    std::vector<PartialBijection> maps_;
    bool                          global_ = false;
  };

  /// Verifies tau(s^-1) = tau(s)^-1 and tau(s)tau(t) <= tau(st), that
  /// idempotents go to idempotents and, when `E` is given, that every map
  /// lies in Sigma(E). Throws `Error` with kind "BadShape", "AxiomOneFails"
  /// {s}, "AxiomTwoFails" {s, t}, "NotIdempotent" {e} or "NotIdealIso" {s}.
  inline PartialAction validate_premorphism(InverseSemigroup              S,
                                            std::vector<PartialBijection> maps,
                                            std::size_t                   ground,
                                            std::optional<Semilattice>    E
                                            = std::nullopt) {
    if (maps.size() != S.size()) {
      throw Error("BadShape",
                  detail::concat(maps.size(), " maps for a semigroup of size ",
                                 S.size()));
    }
    if (E && E->size() != ground) {
      throw Error("BadShape", "semilattice size differs from the ground set");
    }
    for (std::size_t s = 0; s < S.size(); ++s) {
      if (maps[s].ground() != ground) {
        throw Error("BadShape",
                    detail::concat("map ", s, " acts on ", maps[s].ground(),
                                   " points, expected ", ground),
                    {s});
      }
    }
    for (std::size_t s = 0; s < S.size(); ++s) {
      if (maps[S.inverse(s)] != maps[s].inverse()) {
        throw Error("AxiomOneFails",
                    detail::concat("tau(", S.name(s),
                                   "^-1) is not the inverse of tau(",
                                   S.name(s), ")"),
                    {s});
      }
    }
    bool global = true;
    for (std::size_t s = 0; s < S.size(); ++s) {
      for (std::size_t t = 0; t < S.size(); ++t) {
        auto const st = compose(maps[s], maps[t]);
        auto const& m = maps[S.product(s, t)];
        if (!leq(st, m)) {
          throw Error("AxiomTwoFails",
                      detail::concat("tau(", S.name(s), ")tau(", S.name(t),
                                     ") is not below tau(", S.name(s), S.name(t),
                                     ")"),
                      {s, t});
        }
        global = global && st == m;
      }
    }
    for (std::size_t e = 0; e < S.size(); ++e) {
      if (S.is_idempotent(e) && !maps[e].is_idempotent()) {
        throw Error("NotIdempotent",
                    detail::concat("tau(", S.name(e), ") is not idempotent"),
                    {e});
      }
    }
    if (E) {
      for (std::size_t s = 0; s < S.size(); ++s) {
        if (!is_ideal_iso(maps[s], *E)) {
          throw Error("NotIdealIso",
                      detail::concat("tau(", S.name(s),
                                     ") is not an isomorphism between ideals"),
                      {s});
        }
      }
    }
    PartialAction tau;
    tau.S_      = std::move(S);
    tau.ground_ = ground;
    tau.E_      = std::move(E);
    tau.maps_   = std::move(maps);
    tau.global_ = global;
    return tau;
  }

  inline PartialAction validate_premorphism(InverseSemigroup              S,
                                            std::vector<PartialBijection> maps,
                                            Semilattice                   E) {
    std::size_t const m = E.size();
    return validate_premorphism(std::move(S), std::move(maps), m, std::move(E));
  }

  /// The Munn representation on E(S), whose points are numbered as in
  /// `idempotent_semilattice(S)`: delta_s maps s^-1sE(S) onto ss^-1E(S) by
  /// e -> ses^-1.
  inline PartialAction munn(InverseSemigroup const& S) {
    auto const                    E = idempotent_semilattice(S);
    std::size_t const             k = E.element.size();
    std::vector<PartialBijection> maps;
    maps.reserve(S.size());
    for (std::size_t s = 0; s < S.size(); ++s) {
      std::vector<std::size_t> image(k, PartialBijection::undefined);
      std::size_t const        d = S.domain_idempotent(s);
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t const e = E.element[i];
        if (S.product(e, d) == e) {
          image[i] = E.index_of(S.product(S.product(s, e), S.inverse(s)));
        }
      }
      maps.push_back(PartialBijection::from_images(std::move(image)));
    }
    return validate_premorphism(S, std::move(maps), E.lattice);
  }

  struct LiftFailure {
    std::size_t  class_id;
    JoinConflict conflict;
  };

  struct LiftOutcome {
    Quotient                     quotient;
    std::optional<PartialAction> action;
    std::optional<LiftFailure>   failure;
  };

  /// tau~_[s] = join of tau_t over t in [s], as a partial action of S/rho.
  /// Joins are attempted even when rho is not idempotent pure so that a
  /// failing class can be reported; for idempotent pure rho a failure is an
  /// internal error.
  inline LiftOutcome try_lift(PartialAction const& tau, Congruence const& rho) {
    auto const& S = tau.source();
    if (rho.size() != S.size()) {
      throw Error("BadShape", "congruence and action have different sources");
    }
    bool const    pure = rho.is_idempotent_pure(S);
    LiftOutcome   out{quotient(S, rho), std::nullopt, std::nullopt};
    auto const    classes = rho.classes();
    std::vector<PartialBijection> joined;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      std::vector<PartialBijection> family;
      for (std::size_t t : classes[c]) {
        family.push_back(tau[t]);
      }
      auto j = try_join(family, tau.ground());
      if (!j) {
        if (pure) {
          detail::internal_error("join over a class of an idempotent pure "
                                 "congruence failed");
        }
        out.failure = LiftFailure{c, *j.conflict};
        return out;
      }
      joined.push_back(std::move(*j.value));
    }
    try {
      out.action = validate_premorphism(out.quotient.semigroup,
                                        std::move(joined), tau.ground(),
                                        tau.semilattice());
    } catch (Error const& e) {
      if (pure) {
        detail::internal_error(std::string("lifted action invalid: ")
                               + e.what());
      }
      throw;
    }
    return out;
  }

  /// As `try_lift`, returning the lifted action or throwing
  /// `Error("JoinFails", ..., {class, point, first, second})`.
  inline PartialAction lift(PartialAction const& tau, Congruence const& rho) {
    auto out = try_lift(tau, rho);
    if (out.failure) {
      auto const& f = *out.failure;
      throw Error("JoinFails",
                  detail::concat("congruence is not idempotent pure; join over ",
                                 out.quotient.semigroup.name(f.class_id),
                                 " fails: ", f.conflict.describe()),
                  {f.class_id, f.conflict.point, f.conflict.first,
                   f.conflict.second});
    }
    return std::move(*out.action);
  }

  struct OrderPreservation {
    bool                                             holds = true;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
  };

  /// Whether s <= t implies tau_s <= tau_t; the witness is the
  /// lexicographically least pair (s, t) violating it. This decides
  /// globalizability of tau.
  inline OrderPreservation is_order_preserving(PartialAction const& tau) {
    auto const& S = tau.source();
    for (std::size_t s = 0; s < S.size(); ++s) {
      for (std::size_t t = 0; t < S.size(); ++t) {
        if (S.leq(s, t) && !leq(tau[s], tau[t])) {
          return {false, std::pair{s, t}};
        }
      }
    }
    return {};
  }

  struct Restriction {
    PartialAction            action;  // acts on {0, ..., |Y| - 1}
    std::vector<std::size_t> iota;    // point y of Y sits at iota[y] in X
  };

  /// tau_s = iota^-1 o phi_s o iota for a global phi on X and an injection
  /// iota : Y -> X. Pass `Y` to tag the result as an action on that
  /// semilattice (it is then checked to land in Sigma(Y)).
  inline Restriction restrict(PartialAction const&            phi,
                              std::vector<std::size_t> const& iota,
                              std::optional<Semilattice>      Y = std::nullopt) {
    if (!phi.is_global()) {
      throw Error("NotGlobal", "only global actions can be restricted");
    }
    constexpr auto           undefined = PartialBijection::undefined;
    std::vector<std::size_t> back(phi.ground(), undefined);
    for (std::size_t y = 0; y < iota.size(); ++y) {
      if (iota[y] >= phi.ground() || back[iota[y]] != undefined) {
        throw Error("BadInjection",
                    detail::concat("iota is not an injection into ",
                                   phi.ground(), " points"),
                    {y});
      }
      back[iota[y]] = y;
    }
    std::vector<PartialBijection> maps;
    for (std::size_t s = 0; s < phi.source().size(); ++s) {
      std::vector<std::size_t> image(iota.size(), undefined);
      for (std::size_t y = 0; y < iota.size(); ++y) {
        std::size_t const x = phi[s].image_of(iota[y]);
        if (x != undefined) {
          image[y] = back[x];
        }
      }
      maps.push_back(PartialBijection::from_images(std::move(image)));
    }
    return {validate_premorphism(phi.source(), std::move(maps), iota.size(),
                                 std::move(Y)),
            iota};
  }

  /// Restriction to a subset of the ground set, listed in increasing order.
  inline Restriction restrict_to_subset(PartialAction const&     phi,
                                        std::vector<std::size_t> subset,
                                        std::optional<Semilattice> Y
                                        = std::nullopt) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    return restrict(phi, subset, std::move(Y));
  }

  /// The semilattice that a subset of E inherits (E's order restricted), with
  /// points renumbered in increasing order. Throws `Error("NoMeet")` if the
  /// subset is not closed under the meets that exist in it.
  inline Semilattice induced_semilattice(Semilattice const&              E,
                                         std::vector<std::size_t> const& points) {
    BinaryRelation           le(points.size());
    std::vector<std::string> names;
    for (std::size_t a = 0; a < points.size(); ++a) {
      for (std::size_t b = 0; b < points.size(); ++b) {
        if (E.leq(points[a], points[b])) {
          le.insert(a, b);
        }
      }
      if (E.semigroup().has_names()) {
        names.push_back(E.name(points[a]));
      }
    }
    return Semilattice::from_order(le, std::move(names));
  }

  /// For a partial action on a semilattice E: alpha(e) is the least
  /// idempotent f of the source with e in dom tau_f. Returns alpha as element
  /// indices of the source. Throws `Error("NotStrict", ..., {e})` if some set
  /// {f : e in dom tau_f} has no minimum, or `{e, f}` if alpha(e ^ f) !=
  /// alpha(e)alpha(f).
  inline std::vector<std::size_t> strict_alpha(PartialAction const& tau) {
    if (!tau.semilattice()) {
      throw Error("NotSemilattice", "strictness needs a semilattice action");
    }
    auto const&              S   = tau.source();
    auto const&              E   = *tau.semilattice();
    auto const               idem = S.idempotents();
    std::vector<std::size_t> alpha(E.size());
    for (std::size_t e = 0; e < E.size(); ++e) {
      std::vector<std::size_t> A;
      for (std::size_t f : idem) {
        if (tau[f].defined(e)) {
          A.push_back(f);
        }
      }
      auto it = std::find_if(A.begin(), A.end(), [&](std::size_t m) {
        return std::all_of(A.begin(), A.end(),
                           [&](std::size_t f) { return S.leq(m, f); });
      });
      if (it == A.end()) {
        throw Error("NotStrict",
                    detail::concat("{f : ", E.name(e),
                                   " in dom tau_f} has no minimum"),
                    {e});
      }
      alpha[e] = *it;
    }
    for (std::size_t e = 0; e < E.size(); ++e) {
      for (std::size_t f = 0; f < E.size(); ++f) {
        if (alpha[E.meet(e, f)] != S.product(alpha[e], alpha[f])) {
          throw Error("NotStrict",
                      detail::concat("alpha is not a meet morphism at (",
                                     E.name(e), ",", E.name(f), ")"),
                      {e, f});
        }
      }
    }
    return alpha;
  }

  /// For an F-inverse S and a global tau: the lift along sigma sends each
  /// class to tau at the class maximum. Throws `Error("NotFInverse")` or
  /// `Error("NotGlobal")` when the preconditions fail.
  inline bool check_f_inverse_lift(PartialAction const& tau) {
    auto const& S      = tau.source();
    auto const  maxima = F_inverse_maxima(S);
    if (!maxima) {
      throw Error("NotFInverse", "some sigma-class has no maximum");
    }
    if (!tau.is_global()) {
      throw Error("NotGlobal", "the action is not a homomorphism");
    }
    auto const lifted = lift(tau, sigma(S));
    for (std::size_t c = 0; c < maxima->size(); ++c) {
      if (lifted[c] != tau[(*maxima)[c]]) {
        return false;
      }
    }
    return true;
  }

}  // namespace invsemi
