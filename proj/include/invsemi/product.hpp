#pragma once

// The semidirect product E x_tau S of a semilattice by a partial action, its
// subsemigroup cut out by the strictness map alpha, and a certified run of
// the embedding of S into E(S) x (S/rho) through the lifted Munn action.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invsemi/action.hpp"
#include "invsemi/check.hpp"
#include "invsemi/congruence.hpp"
#include "invsemi/core.hpp"
#include "invsemi/error.hpp"
#include "invsemi/pbij.hpp"

namespace invsemi {

  /// An inverse semigroup whose elements are pairs (point, element), listed
  /// in `pairs` in the order used by the table of `semigroup`.
  struct PairSemigroup {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    InverseSemigroup                                 semigroup;

    std::optional<std::size_t> index_of(std::size_t point,
                                        std::size_t element) const {
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].first == point && pairs[i].second == element) {
          return i;
        }
      }
      return std::nullopt;
    }

    std::size_t size() const noexcept {
      return pairs.size();
    }
  };

  struct SemidirectProduct {
    PartialAction action;  // tagged with the semilattice E
    PairSemigroup product;

    Semilattice const& semilattice() const {
      return *action.semilattice();
    }

    InverseSemigroup const& base() const {
      return action.source();
    }
  };

  namespace detail {
    inline std::string pair_name(Semilattice const&      E,
                                 InverseSemigroup const& S,
                                 std::size_t e, std::size_t s) {
      return "(" + E.name(e) + "," + S.name(s) + ")";
    }
  }  // namespace detail

  /// Membership, idempotents = {(e, f) : f in E(S)}, and
  /// (e, s)^-1 = (tau_s^-1(e), s^-1), checked over every element.
  inline CheckList verify_semidirect(SemidirectProduct const& P) {
    CheckList   out;
    auto const& E   = P.semilattice();
    auto const& S   = P.base();
    auto const& tau = P.action;
    auto const& T   = P.product.semigroup;

    std::string bad;
    std::size_t expected = 0;
    for (std::size_t s = 0; s < S.size(); ++s) {
      for (std::size_t e = 0; e < E.size(); ++e) {
        bool const in_ran = tau[s].in_range(e);
        expected += in_ran;
        if (in_ran != P.product.index_of(e, s).has_value() && bad.empty()) {
          bad = detail::pair_name(E, S, e, s);
        }
      }
    }
    out.add("membership", bad.empty() && expected == P.product.size(), bad);

    bad.clear();
    for (std::size_t i = 0; i < T.size() && bad.empty(); ++i) {
      auto [e, s] = P.product.pairs[i];
      if (T.is_idempotent(i) != S.is_idempotent(s)) {
        bad = detail::pair_name(E, S, e, s);
      }
    }
    out.add("idempotents", bad.empty(), bad);

    bad.clear();
    for (std::size_t i = 0; i < T.size() && bad.empty(); ++i) {
      auto [e, s]       = P.product.pairs[i];
      auto [e2, s2]     = P.product.pairs[T.inverse(i)];
      std::size_t const pre = tau[s].inverse().image_of(e);
      if (e2 != pre || s2 != S.inverse(s)) {
        bad = detail::pair_name(E, S, e, s);
      }
    }
    out.add("inverses", bad.empty(), bad);
    return out;
  }

  /// E x_tau S = {(e, s) : e in ran tau_s} with
  /// (e, s)(f, t) = (tau_s(tau_s^-1(e) ^ f), st), listed with s major.
  /// Throws `Error("EmptyProduct")` when every tau_s is empty.
  inline SemidirectProduct build_semidirect(PartialAction const& tau) {
    if (!tau.semilattice()) {
      throw Error("NotSemilattice",
                  "a semidirect product needs an action on a semilattice");
    }
    auto const& E = *tau.semilattice();
    auto const& S = tau.source();

    SemidirectProduct P;
    P.action = tau;
    std::vector<std::size_t> index(E.size() * S.size(), PartialBijection::undefined);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t s = 0; s < S.size(); ++s) {
      for (std::size_t e = 0; e < E.size(); ++e) {
        if (tau[s].in_range(e)) {
          index[e * S.size() + s] = pairs.size();
          pairs.emplace_back(e, s);
        }
      }
    }
    if (pairs.empty()) {
      throw Error("EmptyProduct", "every tau_s is the empty map");
    }
    std::vector<PartialBijection> inverse;
    for (auto const& m : tau.maps()) {
      inverse.push_back(m.inverse());
    }
    std::size_t const        k = pairs.size();
    Table                    mul(k, std::vector<std::size_t>(k));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) {
      auto [e, s] = pairs[i];
      names.push_back(detail::pair_name(E, S, e, s));
      for (std::size_t j = 0; j < k; ++j) {
        auto [f, t]          = pairs[j];
        std::size_t const m  = E.meet(inverse[s](e), f);
        std::size_t const st = S.product(s, t);
        if (!tau[s].defined(m)) {
          detail::internal_error("product leaves dom tau_s");
        }
        std::size_t const at = index[tau[s](m) * S.size() + st];
        if (at == PartialBijection::undefined) {
          detail::internal_error("product leaves ran tau_st");
        }
        mul[i][j] = at;
      }
    }
    try {
      P.product.semigroup
          = InverseSemigroup::validate(std::move(mul), std::move(names));
    } catch (Error const& err) {
      detail::internal_error(std::string("semidirect product: ") + err.what());
    }
    P.product.pairs = std::move(pairs);
    if (auto checks = verify_semidirect(P); !checks.all_passed()) {
      detail::internal_error("semidirect product:\n" + checks.to_text());
    }
    return P;
  }

  /// The strictness map alpha : E -> E(S) of the product's action, after
  /// confirming alpha(e) <= ss^-1 for every member (e, s). Throws
  /// `Error("NotStrict")` as `strict_alpha` does.
  inline std::vector<std::size_t> strictness(SemidirectProduct const& P) {
    auto       alpha = strict_alpha(P.action);
    auto const& S    = P.base();
    for (auto [e, s] : P.product.pairs) {
      if (!S.leq(alpha[e], S.range_idempotent(s))) {
        detail::internal_error("alpha(e) not below ss^-1");
      }
    }
    return alpha;
  }

  /// A subsemigroup given by member indices into a larger pair semigroup.
  struct MSubsemigroup {
    std::vector<std::size_t> members;    // indices into the parent, increasing
    InverseSemigroup         semigroup;  // renumbered 0..|members|-1

    bool contains(std::size_t i) const {
      for (std::size_t m : members) {
        if (m == i) {
          return true;
        }
      }
      return false;
    }
  };

  namespace detail {
    // Restricts a pair semigroup to the members with alpha(point) = ss^-1,
    // confirming closure under products and inverses.
    inline MSubsemigroup m_subset(PairSemigroup const&            P,
                                  InverseSemigroup const&         S,
                                  std::vector<std::size_t> const& alpha) {
      MSubsemigroup            M;
      std::vector<std::size_t> local(P.size(), PartialBijection::undefined);
      for (std::size_t i = 0; i < P.size(); ++i) {
        auto [e, s] = P.pairs[i];
        if (alpha[e] == S.range_idempotent(s)) {
          local[i] = M.members.size();
          M.members.push_back(i);
        }
      }
      auto const&              T = P.semigroup;
      std::size_t const        k = M.members.size();
      Table                    mul(k, std::vector<std::size_t>(k));
      std::vector<std::string> names;
      for (std::size_t a = 0; a < k; ++a) {
        if (local[T.inverse(M.members[a])] == PartialBijection::undefined) {
          internal_error("m-subset not closed under inverses");
        }
        for (std::size_t b = 0; b < k; ++b) {
          std::size_t const c = local[T.product(M.members[a], M.members[b])];
          if (c == PartialBijection::undefined) {
            internal_error("m-subset not closed under products");
          }
          mul[a][b] = c;
        }
        names.push_back(T.name(M.members[a]));
      }
      if (k == 0) {
        internal_error("empty m-subset");
      }
      M.semigroup = InverseSemigroup::validate(std::move(mul), std::move(names));
      return M;
    }
  }  // namespace detail

  /// {(e, s) : alpha(e) = ss^-1}, after checking
  /// alpha(tau_s(e)) = s alpha(e) s^-1 for all s and e in dom tau_s.
  inline MSubsemigroup build_m_subsemigroup(SemidirectProduct const&        P,
                                            std::vector<std::size_t> const& alpha) {
    auto const& S   = P.base();
    auto const& tau = P.action;
    for (std::size_t s = 0; s < S.size(); ++s) {
      for (std::size_t e = 0; e < tau.ground(); ++e) {
        if (tau[s].defined(e)
            && alpha[tau[s](e)]
                   != S.product(S.product(s, alpha[e]), S.inverse(s))) {
          detail::internal_error("alpha conjugation identity fails");
        }
      }
    }
    return detail::m_subset(P.product, S, alpha);
  }

  // The projection (e, s) -> s of the m-subsemigroup onto the base is onto.
  inline bool is_fully_strict(SemidirectProduct const& P,
                              MSubsemigroup const&     M) {
    std::vector<bool> hit(P.base().size(), false);
    for (std::size_t i : M.members) {
      hit[P.product.pairs[i].second] = true;
    }
    return std::find(hit.begin(), hit.end(), false) == hit.end();
  }

  inline bool is_fully_strict(SemidirectProduct const&        P,
                              std::vector<std::size_t> const& alpha) {
    return is_fully_strict(P, build_m_subsemigroup(P, alpha));
  }

  struct GroupRemark {
    bool m_is_everything = false;
    bool base_is_group   = false;

    bool holds() const noexcept {
      return m_is_everything == base_is_group;
    }
  };

  /// For a fully strict action the m-subsemigroup is the whole product
  /// exactly when the base is a group. Throws `Error("NotFullyStrict")`.
  inline GroupRemark check_group_remark(SemidirectProduct const&        P,
                                        std::vector<std::size_t> const& alpha) {
    auto const M = build_m_subsemigroup(P, alpha);
    if (!is_fully_strict(P, M)) {
      throw Error("NotFullyStrict", "projection of the m-subset is not onto");
    }
    return {M.members.size() == P.product.size(), P.base().is_group()};
  }

  /// Everything computed while certifying the embedding of S into
  /// E(S) x (S/rho) by s -> (ss^-1, [s]).
  struct EmbeddingReport {
    Congruence               rho;
    Quotient                 quotient;
    SemidirectProduct        product;
    std::vector<std::size_t> alpha;  // as elements of S/rho
    MSubsemigroup            m;
    std::vector<std::size_t> phi;  // phi[s] = index of (ss^-1, [s]) in product
    bool                     surjective         = false;
    bool                     unitary_with_sigma = false;
    CheckList                checks;
  };

  /// Runs munn -> lift -> build_semidirect -> strictness -> m-subsemigroup
  /// and checks: phi is a homomorphism, phi is injective, phi(S) equals the
  /// m-subsemigroup, rho is the kernel of pi o phi, and phi is onto exactly
  /// when S is E-unitary with rho = sigma. Throws
  /// `Error("NotIdempotentPure")`.
  inline EmbeddingReport embedding_theorem(InverseSemigroup const& S,
                                           Congruence const&       rho) {
    if (!is_idempotent_pure(S, rho)) {
      throw Error("NotIdempotentPure",
                  "the embedding needs an idempotent pure congruence");
    }
    EmbeddingReport R;
    R.rho      = rho;
    R.quotient = quotient(S, rho);
    auto const  E     = idempotent_semilattice(S);
    auto const  delta = munn(S);
    auto const  lifted = lift(delta, rho);
    auto const& cls   = R.quotient.projection;
    R.product         = build_semidirect(lifted);
    auto const& P     = R.product.product;
    auto&       checks = R.checks;

    R.alpha = strictness(R.product);
    {
      std::string bad;
      for (std::size_t e = 0; e < E.element.size() && bad.empty(); ++e) {
        if (R.alpha[e] != cls[E.element[e]]) {
          bad = "e=" + S.name(E.element[e]);
        }
      }
      checks.add("strict-alpha-is-class", bad.empty(), bad);
    }
    R.m = build_m_subsemigroup(R.product, R.alpha);
    checks.add("fully-strict", is_fully_strict(R.product, R.m));

    R.phi.resize(S.size());
    for (std::size_t s = 0; s < S.size(); ++s) {
      auto at = P.index_of(E.index_of(S.range_idempotent(s)), cls[s]);
      if (!at) {
        detail::internal_error("phi(s) not in the product");
      }
      R.phi[s] = *at;
    }

    std::string bad;
    for (std::size_t s = 0; s < S.size() && bad.empty(); ++s) {
      for (std::size_t t = 0; t < S.size() && bad.empty(); ++t) {
        if (R.phi[S.product(s, t)]
            != P.semigroup.product(R.phi[s], R.phi[t])) {
          bad = "s=" + S.name(s) + " t=" + S.name(t);
        }
      }
    }
    checks.add("homomorphism", bad.empty(), bad);

    bad.clear();
    auto const R_cap_rho = green_R(S).intersection(rho.relation());
    for (std::size_t s = 0; s < S.size() && bad.empty(); ++s) {
      for (std::size_t t = s + 1; t < S.size() && bad.empty(); ++t) {
        if (R.phi[s] == R.phi[t] || R_cap_rho.contains(s, t)) {
          bad = "s=" + S.name(s) + " t=" + S.name(t);
        }
      }
    }
    checks.add("injective", bad.empty(), bad);

    bad.clear();
    std::vector<bool> in_image(P.size(), false);
    for (std::size_t s = 0; s < S.size(); ++s) {
      in_image[R.phi[s]] = true;
    }
    for (std::size_t i = 0; i < P.size() && bad.empty(); ++i) {
      if (in_image[i] != R.m.contains(i)) {
        bad = P.semigroup.name(i);
      }
    }
    checks.add("image-equals-m-subsemigroup", bad.empty(), bad);

    bad.clear();
    for (std::size_t s = 0; s < S.size() && bad.empty(); ++s) {
      for (std::size_t t = 0; t < S.size() && bad.empty(); ++t) {
        bool const same = P.pairs[R.phi[s]].second == P.pairs[R.phi[t]].second;
        if (same != rho.related(s, t)) {
          bad = "s=" + S.name(s) + " t=" + S.name(t);
        }
      }
    }
    checks.add("rho-recovered", bad.empty(), bad);

    R.surjective = std::all_of(in_image.begin(), in_image.end(),
                               [](bool b) { return b; });
    R.unitary_with_sigma = is_E_unitary(S) && rho == sigma(S);
    checks.add("surjective-iff-E-unitary-and-sigma",
               R.surjective == R.unitary_with_sigma,
               std::string("surjective=") + (R.surjective ? "yes" : "no")
                   + " E-unitary-and-sigma="
                   + (R.unitary_with_sigma ? "yes" : "no"));
    return R;
  }

}  // namespace invsemi
