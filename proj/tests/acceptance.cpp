// Acceptance run: one line per criterion, exit status 0 only if all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "invsemi/action.hpp"
#include "invsemi/congruence.hpp"
#include "invsemi/corpus.hpp"
#include "invsemi/instance.hpp"
#include "invsemi/ltriple.hpp"
#include "invsemi/product.hpp"
#include "oracles.hpp"

using namespace invsemi;

namespace {

  struct Outcome {
    bool        passed = true;
    std::string detail;
  };

  // Collects the first few mismatches of a criterion.
  struct Tally {
    Outcome     out;
    std::size_t failures = 0;

    void expect(bool ok, std::string const& what) {
      if (ok) return;
      if (failures++ < 3) out.detail += (out.detail.empty() ? "" : "; ") + what;
      out.passed = false;
    }
  };

  double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  std::string data(std::string const& name) {
    return std::string(INVSEMI_DATA_DIR) + "/" + name;
  }

  std::string class_text(InverseSemigroup const& S, std::vector<std::size_t> const& cls) {
    std::string out = "{";
    for (std::size_t i = 0; i < cls.size(); ++i) out += (i ? "," : "") + S.name(cls[i]);
    return out + "}";
  }

  Outcome example_golden() {
    auto const t0   = std::chrono::steady_clock::now();
    auto const inst = parse_instance_file(data("vexample.inv"));
    auto const V    = semigroup_of(inst);
    auto const rho  = *congruence_of(inst, V);
    auto const lifted = lift(munn(V), rho);
    auto const op     = is_order_preserving(lifted);
    double const secs = seconds_since(t0);

    Tally t;
    auto const classes = rho.classes();
    t.expect(classes.size() == 2 && class_text(V, classes[0]) == "{0,e}"
                 && class_text(V, classes[1]) == "{f}",
             "classes");
    auto const& Q = lifted.source();
    t.expect(Q.name(0) == "[e]" && to_string(lifted[0]) == "id{0,1}", "lift of [e]");
    t.expect(Q.name(1) == "[f]" && to_string(lifted[1]) == "id{0,2}", "lift of [f]");
    t.expect(!op.holds && op.witness
                 && *op.witness == std::pair<std::size_t, std::size_t>{0, 1},
             "order-preserving witness");
    t.expect(secs < 0.1, "runtime " + std::to_string(secs) + " s");
    t.out.detail += (t.out.detail.empty() ? "" : "; ")
                    + ("classes {0,e} {f}, lifts id{0,e} id{0,f}, witness ([e],[f]), "
                       + std::to_string(secs * 1000).substr(0, 5) + " ms");
    return t.out;
  }

  Outcome embedding_certification() {
    auto const  t0 = std::chrono::steady_clock::now();
    Tally       t;
    std::size_t instances = 0, congruences = 0;
    for (auto const& [name, S] : standard_corpus()) {
      ++instances;
      for (auto const& rho : enumerate_congruences(S, true)) {
        ++congruences;
        auto const rep = embedding_theorem(S, rho);
        t.expect(rep.checks.all_passed(), name);
        for (auto const* clause : {"homomorphism", "injective", "image-equals-m-subsemigroup",
                                   "rho-recovered", "surjective-iff-E-unitary-and-sigma"})
          t.expect(rep.checks.passed(clause), name + " " + clause);
      }
    }
    double const secs = seconds_since(t0);
    t.expect(secs < 60, "runtime " + std::to_string(secs) + " s");
    t.out.detail += (t.out.detail.empty() ? "" : "; ") + std::to_string(instances)
                    + " instances, " + std::to_string(congruences) + " congruences, "
                    + std::to_string(t.failures) + " failures, "
                    + std::to_string(secs).substr(0, 5) + " s";
    return t.out;
  }

  Outcome lemma_join() {
    Tally       t;
    std::size_t lifts = 0;
    for (auto const& [name, S] : standard_corpus()) {
      auto const delta = munn(S);
      for (auto const& rho : enumerate_congruences(S, true)) {
        ++lifts;
        t.expect(!try_lift(delta, rho).failure, name);
      }
    }
    auto const swap = parse_instance_file(data("z2_swap.inv"));
    auto const Z2   = semigroup_of(swap);
    auto const tau  = validate_premorphism(Z2, action_maps(swap), swap.action->ground);
    auto const out  = try_lift(tau, *congruence_of(swap, Z2));
    std::string conflict = "none";
    if (out.failure) conflict = out.failure->conflict.describe();
    t.expect(out.failure && out.failure->conflict.point == 0, "Z2 swap: " + conflict);
    t.out.detail += (t.out.detail.empty() ? "" : "; ") + std::to_string(lifts)
                    + " lifts without JoinFails; Z2 swap: " + conflict;
    return t.out;
  }

  Outcome semidirect_structure() {
    Tally       t;
    std::size_t products = 0;
    for (auto const& [name, S] : standard_corpus()) {
      auto const delta = munn(S);
      for (auto const& rho : enumerate_congruences(S, true)) {
        auto const tau = lift(delta, rho);
        auto const P   = build_semidirect(tau);
        ++products;
        auto const& T     = tau.source();
        auto const& pairs = P.product.pairs;
        auto const& m     = P.product.semigroup.table();
        t.expect(oracle::is_inverse_semigroup(m), name + " axioms");
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          auto const [e, s] = pairs[i];
          t.expect(oracle::idem(m, i) == T.is_idempotent(s), name + " idempotents");
          t.expect(pairs[oracle::inv(m, i)] == std::pair{tau[T.inverse(s)](e), T.inverse(s)},
                   name + " inverses");
        }
        t.expect(verify_semidirect(P).all_passed(), name + " validator");
      }
    }
    t.out.detail += (t.out.detail.empty() ? "" : "; ") + std::to_string(products)
                    + " products checked exhaustively";
    return t.out;
  }

  Outcome group_remark() {
    Tally       t;
    std::size_t fully = 0;
    for (auto const& [name, S] : standard_corpus()) {
      auto const delta = munn(S);
      for (auto const& rho : enumerate_congruences(S, true)) {
        auto const P     = build_semidirect(lift(delta, rho));
        auto const alpha = strictness(P);
        if (!is_fully_strict(P, alpha)) continue;
        ++fully;
        t.expect(check_group_remark(P, alpha).holds(), name);
      }
    }
    auto const Z4 = build_semidirect(munn(cyclic_group(4)));
    auto const gz = check_group_remark(Z4, strictness(Z4));
    t.expect(gz.holds() && gz.m_is_everything && gz.base_is_group, "Z4 positive");
    auto const V  = example_semilattice();
    auto const PV = build_semidirect(lift(munn(V), congruence_generated_by(V, {{0, 1}})));
    auto const gv = check_group_remark(PV, strictness(PV));
    t.expect(gv.holds() && !gv.m_is_everything && !gv.base_is_group, "V negative");
    t.out.detail += (t.out.detail.empty() ? "" : "; ") + std::to_string(fully)
                    + " fully strict instances; Z4 positive, V negative";
    return t.out;
  }

  // A strict order-preserving action together with a global witness.
  struct RoundTrip {
    std::string             name;
    PartialAction           tau;
    PartialAction           witness;
    std::vector<std::size_t> iota;
  };

  std::vector<RoundTrip> round_trip_instances() {
    std::vector<RoundTrip> out;
    for (auto const& [name, S] : standard_corpus(6)) {
      auto const delta = munn(S);
      auto const E     = *delta.semilattice();
      // principal ideals of E(S) under the Munn representation
      for (std::size_t e = 0; e < E.size(); ++e) {
        auto const Y = E.principal_ideal(e);
        auto const r = restrict_to_subset(delta, Y, induced_semilattice(E, Y));
        out.push_back({name + " eE e=" + S.name(idempotent_semilattice(S).element[e]),
                       r.action, delta, r.iota});
      }
      // lifts along pure congruences that admit a small globalization
      for (auto const& rho : enumerate_congruences(S, true)) {
        auto const tau = lift(delta, rho);
        if (tau.is_global() || !is_order_preserving(tau).holds) continue;
        if (auto g = search_globalization(tau, tau.ground() + 2)) {
          out.push_back({name + " lifted", tau, g->phi, g->iota});
        }
      }
    }
    return out;
  }

  // Y x_tau T and L(T, X, iota(Y)) have the same table under (y, t) -> (iota(y), t).
  bool tables_match(PairSemigroup const& P, PairSemigroup const& L,
                    std::vector<std::size_t> const& iota) {
    if (P.size() != L.size()) return false;
    std::vector<std::size_t> to_L(P.size());
    for (std::size_t i = 0; i < P.size(); ++i) {
      auto const j = L.index_of(iota[P.pairs[i].first], P.pairs[i].second);
      if (!j) return false;
      to_L[i] = *j;
    }
    for (std::size_t a = 0; a < P.size(); ++a)
      for (std::size_t b = 0; b < P.size(); ++b)
        if (to_L[P.semigroup.product(a, b)] != L.semigroup.product(to_L[a], to_L[b]))
          return false;
    return true;
  }

  bool recovers(PartialAction const& tau, PartialAction const& back,
                std::vector<std::size_t> const& iota, std::vector<std::size_t> const& Y) {
    std::vector<std::size_t> pos(iota.size());
    for (std::size_t y = 0; y < iota.size(); ++y)
      pos[y] = static_cast<std::size_t>(std::lower_bound(Y.begin(), Y.end(), iota[y]) - Y.begin());
    for (std::size_t s = 0; s < tau.source().size(); ++s)
      for (std::size_t y = 0; y < iota.size(); ++y) {
        bool const d = tau[s].defined(y);
        if (d != back[s].defined(pos[y])) return false;
        if (d && pos[tau[s](y)] != back[s](pos[y])) return false;
      }
    return true;
  }

  Outcome ltriple_round_trips(std::vector<RoundTrip> const& cases) {
    Tally t;
    for (auto const& c : cases) {
      auto const cert = build_ltriple(c.tau, c.witness, c.iota);
      auto const back = ltriple_to_action(cert.triple);
      t.expect(cert.checks.all_passed() && back.checks.all_passed(), c.name + " checks");
      t.expect(recovers(c.tau, back.tau.action, cert.iota, cert.triple.Y), c.name + " recovers tau");
      t.expect(tables_match(build_semidirect(c.tau).product, build_L(cert.triple), cert.iota),
               c.name + " L table");
    }
    t.expect(cases.size() >= 10, "only " + std::to_string(cases.size()) + " instances");
    t.out.detail += (t.out.detail.empty() ? "" : "; ") + std::to_string(cases.size())
                    + " round trips with exact table equality";
    return t.out;
  }

  // dom f and ran f are order ideals and f preserves and reflects the order.
  bool ideal_iso_under(PartialBijection const& f, BinaryRelation const& le) {
    std::size_t const n = le.size();
    auto const inv = f.inverse();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (!le.contains(a, b)) continue;
        if (f.defined(b) && !f.defined(a)) return false;
        if (inv.defined(b) && !inv.defined(a)) return false;
      }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (f.defined(a) && f.defined(b) && le.contains(a, b) != le.contains(f(a), f(b)))
          return false;
    return true;
  }

  Outcome induced_order(std::vector<RoundTrip> const& cases) {
    Tally t;
    for (auto const& c : cases) {
      auto const  Y      = *c.tau.semilattice();
      auto const  shrunk = shrink_globalization(c.witness, c.iota, Y);
      auto const  order  = induce_order(shrunk.phi, shrunk.iota, Y);
      auto const& le     = order.order.order();
      for (std::size_t a = 0; a < Y.size(); ++a)
        for (std::size_t b = 0; b < Y.size(); ++b)
          t.expect(le.contains(shrunk.iota[a], shrunk.iota[b]) == Y.leq(a, b),
                   c.name + " order on Y");
      for (auto const& f : shrunk.phi.maps())
        t.expect(ideal_iso_under(f, le), c.name + " ideal iso");
      t.expect(order.checks.all_passed(), c.name + " checks");
    }
    t.out.detail += (t.out.detail.empty() ? "" : "; ") + std::to_string(cases.size())
                    + " instances";
    return t.out;
  }

  bool same(BinaryRelation const& r, oracle::Rel const& o) {
    for (std::size_t a = 0; a < o.size(); ++a)
      for (std::size_t b = 0; b < o.size(); ++b)
        if (r.contains(a, b) != o[a][b]) return false;
    return r.size() == o.size();
  }

  Outcome oracle_cross_check() {
    Tally       t;
    std::size_t count = 0;
    for (auto const& [name, S] : standard_corpus(8)) {
      ++count;
      auto const& m = S.table();
      t.expect(same(natural_partial_order(S), oracle::natural_order(m)), name + " order");
      t.expect(same(sigma(S).relation(), oracle::sigma(m)), name + " sigma");
      t.expect(same(compatibility(S), oracle::compatibility(m)), name + " compatibility");
      t.expect(same(green_R(S), oracle::green_R(m)), name + " R");
    }
    t.out.detail += (t.out.detail.empty() ? "" : "; ") + std::to_string(count)
                    + " instances";
    return t.out;
  }

}  // namespace

int main() {
  std::vector<RoundTrip> cases;
  std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria = {
      {"worked example on V", example_golden},
      {"embedding theorem over the corpus", embedding_certification},
      {"lifts along idempotent-pure congruences", lemma_join},
      {"semidirect product structure", semidirect_structure},
      {"group remark", group_remark},
      {"L-triple round trips",
       [&] {
         cases = round_trip_instances();
         return ltriple_round_trips(cases);
       }},
      {"induced order", [&] { return induced_order(cases); }},
      {"oracle cross-check", oracle_cross_check},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto const t0 = std::chrono::steady_clock::now();
    Outcome    out;
    try {
      out = criteria[i].second();
    } catch (Error const& e) {
      out = {false, std::string("unexpected error: ") + e.what()};
    }
    double const ms = seconds_since(t0) * 1000;
    std::printf("AC%zu %s %s: %s [%.1f ms]\n", i + 1, out.passed ? "PASS" : "FAIL",
                criteria[i].first.c_str(), out.detail.c_str(), ms);
    failed += out.passed ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
