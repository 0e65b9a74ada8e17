#pragma once

// O'Carroll L-triples (T, X, Y) and their translation to and from strict
// partial actions of T on the semilattice Y.
//
// Points of X are numbered 0..|X|-1; Y is a subset of X listed in increasing
// order, and a partial action "on Y" numbers its points by position in that
// list.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invsemi/action.hpp"
#include "invsemi/check.hpp"
#include "invsemi/core.hpp"
#include "invsemi/error.hpp"
#include "invsemi/pbij.hpp"
#include "invsemi/product.hpp"

namespace invsemi {

  class Poset {
   public:
    Poset() = default;

    /// Throws `Error("NotPartialOrder")`.
    static Poset validate(BinaryRelation le) {
      if (!le.is_partial_order()) {
        throw Error("NotPartialOrder", "relation is not a partial order");
      }
      Poset P;
      P.le_ = std::move(le);
      return P;
    }

    std::size_t size() const noexcept {
      return le_.size();
    }

    bool leq(std::size_t a, std::size_t b) const {
      return le_.contains(a, b);
    }

    BinaryRelation const& order() const noexcept {
      return le_;
    }

    // Greatest lower bound, if there is one.
    std::optional<std::size_t> meet(std::size_t a, std::size_t b) const {
      for (std::size_t c = 0; c < size(); ++c) {
        if (!leq(c, a) || !leq(c, b)) {
          continue;
        }
        bool greatest = true;
        for (std::size_t d = 0; d < size() && greatest; ++d) {
          greatest = !(leq(d, a) && leq(d, b) && !leq(d, c));
        }
        if (greatest) {
          return c;
        }
      }
      return std::nullopt;
    }

    // A pair with no common lower bound, if any.
    std::optional<std::pair<std::size_t, std::size_t>> undirected_pair() const {
      for (std::size_t a = 0; a < size(); ++a) {
        for (std::size_t b = a + 1; b < size(); ++b) {
          bool found = false;
          for (std::size_t c = 0; c < size() && !found; ++c) {
            found = leq(c, a) && leq(c, b);
          }
          if (!found) {
            return std::pair{a, b};
          }
        }
      }
      return std::nullopt;
    }

    bool is_down_directed() const {
      return !undirected_pair().has_value();
    }

    bool is_order_ideal(std::vector<bool> const& member) const {
      for (std::size_t x = 0; x < size(); ++x) {
        for (std::size_t y = 0; y < size(); ++y) {
          if (member[x] && leq(y, x) && !member[y]) {
            return false;
          }
        }
      }
      return true;
    }

    friend bool operator==(Poset const&, Poset const&) = default;

   private:
    BinaryRelation le_;
  };

  namespace detail {
    inline std::vector<bool> membership(std::size_t                     n,
                                        std::vector<std::size_t> const& subset) {
      std::vector<bool> out(n, false);
      for (std::size_t x : subset) {
        out[x] = true;
      }
      return out;
    }

    // dom f and ran f are order ideals and f is an order isomorphism.
    inline bool is_ideal_iso(PartialBijection const& f, Poset const& X) {
      std::vector<bool> in_dom(X.size(), false), in_ran(X.size(), false);
      for (std::size_t x = 0; x < X.size(); ++x) {
        if (f.defined(x)) {
          in_dom[x]    = true;
          in_ran[f(x)] = true;
        }
      }
      if (!X.is_order_ideal(in_dom) || !X.is_order_ideal(in_ran)) {
        return false;
      }
      for (std::size_t a = 0; a < X.size(); ++a) {
        for (std::size_t b = 0; b < X.size(); ++b) {
          if (in_dom[a] && in_dom[b] && X.leq(a, b) != X.leq(f(a), f(b))) {
            return false;
          }
        }
      }
      return true;
    }

    // TY = union over t of phi_t(dom phi_t n Y), as a membership vector.
    inline std::vector<bool> orbit_of(PartialAction const&            phi,
                                      std::vector<std::size_t> const& Y) {
      std::vector<bool> hit(phi.ground(), false);
      for (std::size_t t = 0; t < phi.source().size(); ++t) {
        for (std::size_t y : Y) {
          if (phi[t].defined(y)) {
            hit[phi[t](y)] = true;
          }
        }
      }
      return hit;
    }
  }  // namespace detail

  struct LTriple {
    Poset                    X;
    std::vector<std::size_t> Y;    // increasing
    PartialAction            phi;  // global action of T on X

    InverseSemigroup const& T() const {
      return phi.source();
    }
  };

  /// Checks every L-triple axiom. Throws `Error` with kind "BadShape",
  /// "NotGlobal", "NotDownDirected" {a, b}, "IdealViolation" {y, x},
  /// "NotSubsemilattice" {a, b}, "NotOrderIso" {t}, "EmptyIdeal" {t} or
  /// "NotGenerated" {x}.
  inline LTriple validate_ltriple(InverseSemigroup const& T, Poset X,
                                  std::vector<std::size_t> Y,
                                  PartialAction            phi) {
    if (!(phi.source() == T) || phi.ground() != X.size()) {
      throw Error("BadShape", "action does not match T and X");
    }
    std::sort(Y.begin(), Y.end());
    Y.erase(std::unique(Y.begin(), Y.end()), Y.end());
    for (std::size_t y : Y) {
      if (y >= X.size()) {
        throw Error("BadShape", detail::concat("Y point ", y, " not in X"), {y});
      }
    }
    if (!phi.is_global()) {
      throw Error("NotGlobal", "T must act on X by a homomorphism");
    }
    if (auto p = X.undirected_pair()) {
      throw Error("NotDownDirected",
                  detail::concat(p->first, " and ", p->second,
                                 " have no common lower bound"),
                  {p->first, p->second});
    }
    auto const inY = detail::membership(X.size(), Y);
    for (std::size_t y : Y) {
      for (std::size_t x = 0; x < X.size(); ++x) {
        if (X.leq(x, y) && !inY[x]) {
          throw Error("IdealViolation",
                      detail::concat(x, " <= ", y, " but ", x, " is not in Y"),
                      {y, x});
        }
      }
    }
    for (std::size_t a : Y) {
      for (std::size_t b : Y) {
        auto m = X.meet(a, b);
        if (!m || !inY[*m]) {
          throw Error("NotSubsemilattice",
                      detail::concat("meet of ", a, " and ", b,
                                     " missing from Y"),
                      {a, b});
        }
      }
    }
    for (std::size_t t = 0; t < T.size(); ++t) {
      if (phi[t].empty()) {
        throw Error("EmptyIdeal",
                    detail::concat("phi(", T.name(t), ") has empty domain"),
                    {t});
      }
      if (!detail::is_ideal_iso(phi[t], X)) {
        throw Error("NotOrderIso",
                    detail::concat("phi(", T.name(t),
                                   ") is not an isomorphism between ideals"),
                    {t});
      }
    }
    auto const orbit = detail::orbit_of(phi, Y);
    for (std::size_t x = 0; x < X.size(); ++x) {
      if (!orbit[x]) {
        throw Error("NotGenerated",
                    detail::concat(x, " is not in TY"), {x});
      }
    }
    return {std::move(X), std::move(Y), std::move(phi)};
  }

  /// Y with the order of X, as a semilattice on positions in LT.Y.
  inline Semilattice y_semilattice(LTriple const& LT) {
    BinaryRelation le(LT.Y.size());
    for (std::size_t a = 0; a < LT.Y.size(); ++a) {
      for (std::size_t b = 0; b < LT.Y.size(); ++b) {
        if (LT.X.leq(LT.Y[a], LT.Y[b])) {
          le.insert(a, b);
        }
      }
    }
    return Semilattice::from_order(le);
  }

  /// L(T, X, Y) = {(a, t) : a in Y n ran phi_t, phi_t^-1(a) in Y} with
  /// (a, s)(b, t) = (phi_s(phi_s^-1(a) ^ b), st), meets taken in X; pairs
  /// listed with t major and a increasing.
  inline PairSemigroup build_L(LTriple const& LT) {
    auto const& T   = LT.T();
    auto const& phi = LT.phi;
    auto const  inY = detail::membership(LT.X.size(), LT.Y);

    std::vector<PartialBijection> inverse;
    for (auto const& m : phi.maps()) {
      inverse.push_back(m.inverse());
    }
    PairSemigroup L;
    for (std::size_t t = 0; t < T.size(); ++t) {
      for (std::size_t a = 0; a < LT.X.size(); ++a) {
        if (inY[a] && inverse[t].defined(a) && inY[inverse[t](a)]) {
          L.pairs.emplace_back(a, t);
        }
      }
    }
    std::size_t const        k = L.pairs.size();
    Table                    mul(k, std::vector<std::size_t>(k));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) {
      auto [a, s] = L.pairs[i];
      names.push_back("(" + std::to_string(a) + "," + T.name(s) + ")");
      for (std::size_t j = 0; j < k; ++j) {
        auto [b, t] = L.pairs[j];
        auto m      = LT.X.meet(inverse[s](a), b);
        if (!m || !phi[s].defined(*m)) {
          detail::internal_error("L(T,X,Y) product undefined");
        }
        auto at = L.index_of(phi[s](*m), T.product(s, t));
        if (!at) {
          detail::internal_error("L(T,X,Y) not closed");
        }
        mul[i][j] = *at;
      }
    }
    L.semigroup = InverseSemigroup::validate(std::move(mul), std::move(names));
    return L;
  }

  /// e(y) = least f in E(T) with y in dom phi_f, indexed by position in
  /// LT.Y. Throws `Error("NotStrict")` when a minimum is missing or e is not
  /// a meet morphism.
  inline std::vector<std::size_t> ltriple_e_map(LTriple const& LT) {
    auto const&              T    = LT.T();
    auto const               idem = T.idempotents();
    std::vector<std::size_t> e(LT.Y.size());
    for (std::size_t i = 0; i < LT.Y.size(); ++i) {
      std::vector<std::size_t> A;
      for (std::size_t f : idem) {
        if (LT.phi[f].defined(LT.Y[i])) {
          A.push_back(f);
        }
      }
      auto it = std::find_if(A.begin(), A.end(), [&](std::size_t m) {
        return std::all_of(A.begin(), A.end(),
                           [&](std::size_t f) { return T.leq(m, f); });
      });
      if (it == A.end()) {
        throw Error("NotStrict",
                    detail::concat("no least idempotent fixes ", LT.Y[i]),
                    {LT.Y[i]});
      }
      e[i] = *it;
    }
    auto const Ysl = y_semilattice(LT);
    for (std::size_t a = 0; a < LT.Y.size(); ++a) {
      for (std::size_t b = 0; b < LT.Y.size(); ++b) {
        if (e[Ysl.meet(a, b)] != T.product(e[a], e[b])) {
          throw Error("NotStrict",
                      detail::concat("e is not a meet morphism at (", LT.Y[a],
                                     ",", LT.Y[b], ")"),
                      {LT.Y[a], LT.Y[b]});
        }
      }
    }
    return e;
  }

  /// L_m(T, X, Y) = {(a, t) in L : e(a) = tt^-1}.
  inline MSubsemigroup build_Lm(LTriple const&                  LT,
                                PairSemigroup const&            L,
                                std::vector<std::size_t> const& e_map) {
    std::vector<std::size_t> by_point(LT.X.size(), 0);
    for (std::size_t i = 0; i < LT.Y.size(); ++i) {
      by_point[LT.Y[i]] = e_map[i];
    }
    return detail::m_subset(L, LT.T(), by_point);
  }

  inline MSubsemigroup build_Lm(LTriple const& LT) {
    return build_Lm(LT, build_L(LT), ltriple_e_map(LT));
  }

  namespace detail {
    // Checks that (p, t) -> (point_map[p], t) is an isomorphism A -> B.
    inline std::string pair_isomorphism_defect(
        PairSemigroup const& A, PairSemigroup const& B,
        std::vector<std::size_t> const& point_map) {
      if (A.size() != B.size()) {
        return concat("sizes ", A.size(), " and ", B.size());
      }
      std::vector<std::size_t> to(A.size());
      for (std::size_t i = 0; i < A.size(); ++i) {
        auto j = B.index_of(point_map[A.pairs[i].first], A.pairs[i].second);
        if (!j) {
          return "no image for " + A.semigroup.name(i);
        }
        to[i] = *j;
      }
      for (std::size_t i = 0; i < A.size(); ++i) {
        for (std::size_t j = 0; j < A.size(); ++j) {
          if (to[A.semigroup.product(i, j)]
              != B.semigroup.product(to[i], to[j])) {
            return "product " + A.semigroup.name(i) + A.semigroup.name(j);
          }
        }
      }
      return {};
    }

    inline std::string subset_image_defect(PairSemigroup const& A,
                                           MSubsemigroup const& MA,
                                           PairSemigroup const& B,
                                           MSubsemigroup const& MB,
                                           std::vector<std::size_t> const& point_map) {
      if (MA.members.size() != MB.members.size()) {
        return concat("sizes ", MA.members.size(), " and ", MB.members.size());
      }
      for (std::size_t i : MA.members) {
        auto j = B.index_of(point_map[A.pairs[i].first], A.pairs[i].second);
        if (!j || !MB.contains(*j)) {
          return "no image for " + A.semigroup.name(i);
        }
      }
      return {};
    }

    // Identical pair lists (after mapping points) and identical tables.
    inline std::string table_defect(PairSemigroup const& A,
                                    PairSemigroup const& B,
                                    std::vector<std::size_t> const& point_map) {
      if (A.size() != B.size()) {
        return concat("sizes ", A.size(), " and ", B.size());
      }
      for (std::size_t i = 0; i < A.size(); ++i) {
        if (point_map[A.pairs[i].first] != B.pairs[i].first
            || A.pairs[i].second != B.pairs[i].second) {
          return concat("pair ", i, " differs");
        }
      }
      if (A.semigroup.table() != B.semigroup.table()) {
        return "tables differ";
      }
      return {};
    }

    inline bool all_nonempty(PartialAction const& tau) {
      return std::none_of(tau.maps().begin(), tau.maps().end(),
                          [](PartialBijection const& f) { return f.empty(); });
    }
  }  // namespace detail

  /// The partial action of T on Y obtained by restricting phi, with the
  /// checks that tie the triple to it.
  struct TripleAction {
    Restriction tau;  // iota = LT.Y
    CheckList   checks;
  };

  inline TripleAction ltriple_to_action(LTriple const& LT) {
    TripleAction out{restrict(LT.phi, LT.Y, y_semilattice(LT)), {}};
    auto const&  tau    = out.tau.action;
    auto&        checks = out.checks;

    checks.add("domains-nonempty", detail::all_nonempty(tau));

    bool const lhs = LT.X.is_down_directed() && detail::all_nonempty(LT.phi);
    checks.add("down-directed-equivalence", lhs == detail::all_nonempty(tau));

    auto const L = build_L(LT);
    auto const P = build_semidirect(tau);
    auto       d = detail::table_defect(P.product, L, LT.Y);
    checks.add("L-equals-product", d.empty(), d);

    std::optional<std::vector<std::size_t>> e_map, alpha;
    try {
      e_map = ltriple_e_map(LT);
    } catch (Error const&) {
    }
    try {
      alpha = strict_alpha(tau);
    } catch (Error const&) {
    }
    checks.add("strict-transfer", e_map.has_value() == alpha.has_value());
    if (e_map && alpha) {
      checks.add("e-equals-alpha", *e_map == *alpha);
      auto const Lm = build_Lm(LT, L, *e_map);
      auto const M  = build_m_subsemigroup(P, *alpha);
      d             = detail::subset_image_defect(P.product, M, L, Lm, LT.Y);
      checks.add("Lm-equals-m-product", d.empty(), d);
      std::vector<bool> hit(LT.T().size(), false);
      for (std::size_t i : Lm.members) {
        hit[L.pairs[i].second] = true;
      }
      bool const triple_full = std::find(hit.begin(), hit.end(), false) == hit.end();
      checks.add("fully-strict-transfer", triple_full == is_fully_strict(P, M));
    }
    return out;
  }

  /// A global action cut down to X = TY.
  struct ShrunkGlobalization {
    PartialAction            phi;     // on X, renumbered 0..|X|-1
    std::vector<std::size_t> points;  // X as increasing points of X'
    std::vector<std::size_t> iota;    // Y -> X
    CheckList                checks;
  };

  /// Given a global phi' on X' and an injection iota : Y -> X' whose
  /// restriction is strict, cuts X' down to X = TY. Throws
  /// `Error("NotGlobal")` or `Error("NotStrict")`.
  inline ShrunkGlobalization shrink_globalization(
      PartialAction const& phi_prime, std::vector<std::size_t> const& iota,
      Semilattice const& Y) {
    if (!phi_prime.is_global()) {
      throw Error("NotGlobal", "the witness action must be global");
    }
    auto const tau = restrict(phi_prime, iota, Y).action;
    (void) strict_alpha(tau);

    auto const&              T     = phi_prime.source();
    auto const               orbit = detail::orbit_of(phi_prime, iota);
    ShrunkGlobalization      out;
    std::vector<std::size_t> local(phi_prime.ground(), PartialBijection::undefined);
    for (std::size_t x = 0; x < phi_prime.ground(); ++x) {
      if (orbit[x]) {
        local[x] = out.points.size();
        out.points.push_back(x);
      }
    }
    bool y_inside = true;
    for (std::size_t y : iota) {
      y_inside = y_inside && orbit[y];
      out.iota.push_back(local[y]);
    }
    out.checks.add("Y-inside-X", y_inside);

    std::vector<PartialBijection> maps;
    for (std::size_t t = 0; t < T.size(); ++t) {
      std::vector<std::size_t> image(out.points.size(), PartialBijection::undefined);
      for (std::size_t i = 0; i < out.points.size(); ++i) {
        std::size_t const x = out.points[i];
        if (phi_prime[t].defined(x)) {
          if (!orbit[phi_prime[t](x)]) {
            detail::internal_error("TY not invariant under the action");
          }
          image[i] = local[phi_prime[t](x)];
        }
      }
      maps.push_back(PartialBijection::from_images(std::move(image)));
    }
    out.phi = validate_premorphism(T, std::move(maps), out.points.size());
    out.checks.add("global", out.phi.is_global());
    out.checks.add("restriction-agrees",
                   out.phi.is_global()
                       && restrict(out.phi, out.iota, Y).action == tau);
    return out;
  }

  struct InducedOrder {
    Poset     order;
    CheckList checks;
  };

  /// x1 <=' x2 iff x1 = phi_t(y1), x2 = phi_t(y2) for some t and
  /// y1 <= y2 in Y with both in dom phi_t, found by enumerating every
  /// (t, y1, y2). Requires TY = X and a strict restriction.
  inline InducedOrder induce_order(PartialAction const&            phi,
                                   std::vector<std::size_t> const& iota,
                                   Semilattice const&              Y) {
    auto const tau = restrict(phi, iota, Y).action;
    (void) strict_alpha(tau);
    auto const orbit = detail::orbit_of(phi, iota);
    for (std::size_t x = 0; x < phi.ground(); ++x) {
      if (!orbit[x]) {
        throw Error("NotGenerated", detail::concat(x, " is not in TY"), {x});
      }
    }
    BinaryRelation le(phi.ground());
    for (std::size_t t = 0; t < phi.source().size(); ++t) {
      for (std::size_t y1 = 0; y1 < Y.size(); ++y1) {
        for (std::size_t y2 = 0; y2 < Y.size(); ++y2) {
          if (Y.leq(y1, y2) && phi[t].defined(iota[y1])
              && phi[t].defined(iota[y2])) {
            le.insert(phi[t](iota[y1]), phi[t](iota[y2]));
          }
        }
      }
    }
    InducedOrder out;
    out.checks.add("partial-order", le.is_partial_order());
    if (!le.is_partial_order()) {
      detail::internal_error("induced relation is not a partial order");
    }
    out.order = Poset::validate(le);
    auto const& X = out.order;

    std::string bad;
    for (std::size_t t = 0; t < phi.source().size() && bad.empty(); ++t) {
      if (!detail::is_ideal_iso(phi[t], X)) {
        bad = "t=" + phi.source().name(t);
      }
    }
    out.checks.add("maps-are-ideal-isos", bad.empty(), bad);

    auto const inY = detail::membership(X.size(), iota);
    out.checks.add("Y-ideal", X.is_order_ideal(inY));

    bool agrees = true, closed = true;
    for (std::size_t a = 0; a < Y.size(); ++a) {
      for (std::size_t b = 0; b < Y.size(); ++b) {
        agrees = agrees && X.leq(iota[a], iota[b]) == Y.leq(a, b);
        auto m = X.meet(iota[a], iota[b]);
        closed = closed && m && *m == iota[Y.meet(a, b)];
      }
    }
    out.checks.add("order-on-Y-agrees", agrees);
    out.checks.add("Y-subsemilattice", closed);
    return out;
  }

  struct LTripleCertificate {
    LTriple                  triple;
    std::vector<std::size_t> iota;    // Y -> X
    std::vector<std::size_t> points;  // X as points of the witness space
    CheckList                checks;
  };

  /// From a strict, order-preserving partial action tau on a semilattice Y
  /// and a globalization (phi', iota) of it, builds the strict L-triple
  /// (T, TY, iota(Y)) and certifies Y x_tau T = L and Y x^m_tau T = L_m
  /// under (y, t) -> (iota(y), t). Throws `Error` with kind "NotStrict",
  /// "NotOrderPreserving" {s, t}, "BadWitness", or any `validate_ltriple`
  /// kind.
  inline LTripleCertificate build_ltriple(PartialAction const&            tau,
                                          PartialAction const&            phi_prime,
                                          std::vector<std::size_t> const& iota) {
    if (!tau.semilattice()) {
      throw Error("NotSemilattice", "tau must act on a semilattice");
    }
    auto const& Y     = *tau.semilattice();
    auto const  alpha = strict_alpha(tau);
    if (auto op = is_order_preserving(tau); !op.holds) {
      auto [s, t] = *op.witness;
      throw Error("NotOrderPreserving",
                  detail::concat(tau.source().name(s), " <= ",
                                 tau.source().name(t), " but tau_",
                                 tau.source().name(s), " is not below tau_",
                                 tau.source().name(t)),
                  {s, t});
    }
    if (!(phi_prime.source() == tau.source())) {
      throw Error("BadWitness", "witness acts by a different semigroup");
    }
    if (!phi_prime.is_global()) {
      throw Error("BadWitness", "witness action is not global");
    }
    if (iota.size() != Y.size()
        || restrict(phi_prime, iota, Y).action.maps() != tau.maps()) {
      throw Error("BadWitness", "witness does not restrict to tau");
    }

    auto shrunk  = shrink_globalization(phi_prime, iota, Y);
    auto induced = induce_order(shrunk.phi, shrunk.iota, Y);

    LTripleCertificate out;
    out.checks.append(shrunk.checks, "shrink:");
    out.checks.append(induced.checks, "order:");
    out.triple = validate_ltriple(tau.source(), induced.order, shrunk.iota,
                                  shrunk.phi);
    out.iota   = shrunk.iota;
    out.points = shrunk.points;
    auto const& LT = out.triple;

    auto const P = build_semidirect(tau);
    auto const L = build_L(LT);
    auto       d = detail::pair_isomorphism_defect(P.product, L, out.iota);
    out.checks.add("product-iso-L", d.empty(), d);

    auto const e_map = ltriple_e_map(LT);
    bool       same  = true;
    for (std::size_t y = 0; y < Y.size(); ++y) {
      auto pos = std::lower_bound(LT.Y.begin(), LT.Y.end(), out.iota[y]);
      same     = same && e_map[static_cast<std::size_t>(pos - LT.Y.begin())]
                         == alpha[y];
    }
    out.checks.add("e-equals-alpha-after-iota", same);

    auto const M  = build_m_subsemigroup(P, alpha);
    auto const Lm = build_Lm(LT, L, e_map);
    d             = detail::subset_image_defect(P.product, M, L, Lm, out.iota);
    out.checks.add("m-product-iso-Lm", d.empty(), d);

    if (is_fully_strict(P, M)) {
      out.checks.add("fully-strict-domains-nonempty", detail::all_nonempty(tau));
      std::vector<bool> hit(LT.T().size(), false);
      for (std::size_t i : Lm.members) {
        hit[L.pairs[i].second] = true;
      }
      out.checks.add("triple-fully-strict",
                     std::find(hit.begin(), hit.end(), false) == hit.end());
    }
    bool const lhs = LT.X.is_down_directed() && detail::all_nonempty(LT.phi);
    out.checks.add("down-directed-equivalence", lhs == detail::all_nonempty(tau));
    return out;
  }

  struct Globalization {
    PartialAction            phi;
    std::vector<std::size_t> iota;
  };

  /// Exhaustive search for a global action on X = Y plus up to
  /// `max_points - |Y|` extra points restricting to tau (Y sits on the first
  /// |Y| points). Exponential in `max_points`; only meant for very small
  /// instances.
  inline std::optional<Globalization> search_globalization(
      PartialAction const& tau, std::size_t max_points) {
    auto const&       T = tau.source();
    std::size_t const k = tau.ground();
    constexpr auto    undefined = PartialBijection::undefined;

    for (std::size_t m = std::max<std::size_t>(k, 1); m <= max_points; ++m) {
      std::vector<std::optional<PartialBijection>> assigned(T.size());

      auto consistent = [&]() {
        for (std::size_t a = 0; a < T.size(); ++a) {
          for (std::size_t b = 0; b < T.size(); ++b) {
            auto const ab = T.product(a, b);
            if (assigned[a] && assigned[b] && assigned[ab]
                && compose(*assigned[a], *assigned[b]) != *assigned[ab]) {
              return false;
            }
          }
        }
        return true;
      };

      std::function<bool(std::size_t)> place;

      // Enumerate the partial bijections on m points that restrict to tau_t.
      auto candidates = [&](std::size_t t,
                            std::function<bool(PartialBijection const&)> const& visit) {
        std::vector<std::size_t> image(m, undefined);
        std::vector<bool>        used(m, false);
        bool const               idem = T.is_idempotent(t);
        std::function<bool(std::size_t)> go = [&](std::size_t x) -> bool {
          if (x == m) {
            return visit(PartialBijection::from_images(image));
          }
          auto try_image = [&](std::size_t y) -> bool {
            if (y != undefined) {
              if (used[y]) {
                return false;
              }
              used[y] = true;
            }
            image[x]     = y;
            bool const r = go(x + 1);
            if (y != undefined) {
              used[y] = false;
            }
            image[x] = undefined;
            return r;
          };
          if (x < k) {
            std::size_t const want = tau[t].image_of(x);
            if (want != undefined) {
              return try_image(want);
            }
            if (try_image(undefined)) {
              return true;
            }
            for (std::size_t y = k; y < m; ++y) {
              if ((!idem || y == x) && try_image(y)) {
                return true;
              }
            }
            return false;
          }
          if (try_image(undefined)) {
            return true;
          }
          for (std::size_t y = 0; y < m; ++y) {
            if (idem && y != x) {
              continue;
            }
            // a Y-point may only be hit from outside Y when tau_t^-1 allows it
            if (y < k && tau[t].inverse().defined(y)) {
              continue;
            }
            if (try_image(y)) {
              return true;
            }
          }
          return false;
        };
        return go(0);
      };

      place = [&](std::size_t t) -> bool {
        if (t == T.size()) {
          return true;
        }
        if (assigned[t]) {
          return place(t + 1);
        }
        std::size_t const ti = T.inverse(t);
        return candidates(t, [&](PartialBijection const& f) {
          if (ti == t && f.inverse() != f) {
            return false;
          }
          assigned[t]  = f;
          assigned[ti] = f.inverse();
          if (consistent() && place(t + 1)) {
            return true;
          }
          assigned[t].reset();
          assigned[ti].reset();
          return false;
        });
      };

      if (place(0)) {
        std::vector<PartialBijection> maps;
        for (auto& f : assigned) {
          maps.push_back(*f);
        }
        std::vector<std::size_t> iota(k);
        for (std::size_t y = 0; y < k; ++y) {
          iota[y] = y;
        }
        return Globalization{validate_premorphism(T, std::move(maps), m), iota};
      }
    }
    return std::nullopt;
  }

}  // namespace invsemi
