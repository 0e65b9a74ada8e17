#pragma once

// Plain-text reports for the command line front end. Every verb returns the
// full report text and an exit code: 0 when everything verified holds, 1 when
// some verified statement is false, 2 on input errors.

#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "invsemi/action.hpp"
#include "invsemi/congruence.hpp"
#include "invsemi/core.hpp"
#include "invsemi/corpus.hpp"
#include "invsemi/error.hpp"
#include "invsemi/instance.hpp"
#include "invsemi/ltriple.hpp"
#include "invsemi/pbij.hpp"
#include "invsemi/product.hpp"

namespace invsemi {

  struct Report {
    std::string text;
    int         exit_code = 0;
  };

  struct Flags {
    std::size_t max_n = default_enumeration_bound;
  };

  inline std::vector<std::string> const& verbs() {
    static std::vector<std::string> const all = {
        "validate", "orders",  "congruences",  "quotient",
        "munn",     "lift",    "product",      "embed",
        "globalizable", "ltriple", "certify-all"};
    return all;
  }

  namespace detail {
    // Error kinds that report a property of valid input rather than bad input.
    inline bool is_finding(std::string const& kind) {
      static std::set<std::string> const findings = {
          "NotIdempotentPure", "JoinFails", "NotOrderPreserving", "NotStrict",
          "NotFullyStrict"};
      return findings.count(kind) != 0;
    }

    struct ActionContext {
      PartialAction            tau;
      std::vector<std::string> point_names;
    };

    inline std::vector<std::string> idempotent_names(InverseSemigroup const& S) {
      std::vector<std::string> out;
      for (std::size_t e : idempotent_semilattice(S).element) {
        out.push_back(S.name(e));
      }
      return out;
    }

    // The action block of the instance, or the Munn representation when there
    // is none. With `on_idempotents` the block must act on E(S).
    inline ActionContext action_context(InstanceFile const&     inst,
                                        InverseSemigroup const& S,
                                        bool                    on_idempotents) {
      auto const  E     = idempotent_semilattice(S);
      auto const  names = idempotent_names(S);
      if (!inst.action) {
        return {munn(S), names};
      }
      auto              maps   = action_maps(inst);
      std::size_t const ground = inst.action->ground;
      bool const        over_E = ground == E.element.size();
      if (on_idempotents) {
        if (!over_E) {
          throw Error("BadShape",
                      concat("action must act on the ", E.element.size(),
                             " idempotents"));
        }
        return {validate_premorphism(S, std::move(maps), E.lattice), names};
      }
      std::vector<std::string> points;
      for (std::size_t x = 0; x < ground; ++x) {
        points.push_back(over_E ? names[x] : std::to_string(x));
      }
      return {validate_premorphism(S, std::move(maps), ground), points};
    }

    inline std::string show_map(PartialBijection const&         f,
                                std::vector<std::string> const& points) {
      return to_string(f, [&](std::size_t x) { return points[x]; });
    }

    inline std::string show_class(InverseSemigroup const&         S,
                                  std::vector<std::size_t> const& cls) {
      std::string out = "{";
      for (std::size_t i = 0; i < cls.size(); ++i) {
        out += (i ? "," : "") + S.name(cls[i]);
      }
      return out + "}";
    }

    inline std::string show_relation(InverseSemigroup const& S,
                                     BinaryRelation const&   r,
                                     std::string const&      label) {
      std::ostringstream out;
      for (std::size_t a = 0; a < S.size(); ++a) {
        out << label << " " << S.name(a) << ":";
        for (std::size_t b = 0; b < S.size(); ++b) {
          if (r.contains(a, b)) {
            out << " " << S.name(b);
          }
        }
        out << "\n";
      }
      return out.str();
    }

    inline std::string yes_no(bool b) {
      return b ? "YES" : "NO";
    }

    inline Congruence require_congruence(InstanceFile const&     inst,
                                         InverseSemigroup const& S) {
      auto rho = congruence_of(inst, S);
      if (!rho) {
        throw Error("MissingCongruence", "this verb needs a congruence block");
      }
      return *rho;
    }

    inline void header(std::ostringstream& out, InverseSemigroup const& S) {
      out << "semigroup: " << S.size() << " elements, "
          << S.idempotents().size() << " idempotents\n";
    }

    inline Report verb_validate(InstanceFile const& inst) {
      std::ostringstream out;
      InverseSemigroup   S;
      try {
        S = semigroup_of(inst);
      } catch (Error const& e) {
        out << "valid: NO " << e.what() << "\n";
        return {out.str(), 1};
      }
      out << "valid: YES\n";
      header(out, S);
      out << "group: " << yes_no(S.is_group()) << "\n";
      out << "semilattice: " << yes_no(S.is_semilattice()) << "\n";
      out << "E-unitary: " << yes_no(is_E_unitary(S)) << "\n";
      out << "F-inverse: " << yes_no(is_F_inverse(S)) << "\n";
      for (std::size_t s = 0; s < S.size(); ++s) {
        out << "inverse " << S.name(s) << " = " << S.name(S.inverse(s)) << "\n";
      }
      return {out.str(), 0};
    }

    inline Report verb_orders(InstanceFile const& inst) {
      auto const         S = semigroup_of(inst);
      std::ostringstream out;
      header(out, S);
      out << show_relation(S, natural_partial_order(S), "below");
      out << show_relation(S, compatibility(S), "compatible");
      out << show_relation(S, green_R(S), "R");
      auto const sig = sigma(S);
      for (auto const& cls : sig.classes()) {
        out << "sigma-class " << show_class(S, cls) << "\n";
      }
      out << "E-unitary: " << yes_no(is_E_unitary(S)) << "\n";
      out << "F-inverse: " << yes_no(is_F_inverse(S)) << "\n";
      return {out.str(), 0};
    }

    inline Report verb_congruences(InstanceFile const& inst) {
      auto const         S   = semigroup_of(inst);
      auto const         all = enumerate_congruences(S);
      std::ostringstream out;
      header(out, S);
      std::size_t pure = 0;
      for (auto const& rho : all) {
        bool const p = rho.is_idempotent_pure(S);
        pure += p;
        out << "congruence";
        for (auto const& cls : rho.classes()) {
          out << " " << show_class(S, cls);
        }
        out << (p ? " idempotent-pure" : "") << "\n";
      }
      out << "total: " << all.size() << ", idempotent-pure: " << pure << "\n";
      return {out.str(), 0};
    }

    inline Report verb_quotient(InstanceFile const& inst) {
      auto const         S   = semigroup_of(inst);
      auto const         rho = require_congruence(inst, S);
      auto const         Q   = quotient(S, rho);
      std::ostringstream out;
      header(out, S);
      auto const classes = rho.classes();
      for (std::size_t c = 0; c < classes.size(); ++c) {
        out << "class " << Q.semigroup.name(c) << " = "
            << show_class(S, classes[c]) << "\n";
      }
      out << "idempotent-pure: " << yes_no(rho.is_idempotent_pure(S)) << "\n";
      out << "table\n";
      for (std::size_t a = 0; a < Q.semigroup.size(); ++a) {
        for (std::size_t b = 0; b < Q.semigroup.size(); ++b) {
          out << (b ? " " : "") << Q.semigroup.name(Q.semigroup.product(a, b));
        }
        out << "\n";
      }
      return {out.str(), 0};
    }

    inline Report verb_munn(InstanceFile const& inst) {
      auto const         S     = semigroup_of(inst);
      auto const         delta = munn(S);
      auto const         names = idempotent_names(S);
      std::ostringstream out;
      header(out, S);
      for (std::size_t s = 0; s < S.size(); ++s) {
        out << "delta_" << S.name(s) << " = " << show_map(delta[s], names)
            << "\n";
      }
      out << "global: " << yes_no(delta.is_global()) << "\n";
      return {out.str(), 0};
    }

    inline Report verb_lift(InstanceFile const& inst) {
      auto const         S   = semigroup_of(inst);
      auto const         rho = require_congruence(inst, S);
      auto const         ctx = action_context(inst, S, false);
      auto const         out_lift = try_lift(ctx.tau, rho);
      auto const&        Q   = out_lift.quotient.semigroup;
      std::ostringstream out;
      auto const         classes = rho.classes();
      for (std::size_t c = 0; c < classes.size(); ++c) {
        out << "class " << Q.name(c) << " = " << show_class(S, classes[c])
            << "\n";
      }
      out << "idempotent-pure: " << yes_no(rho.is_idempotent_pure(S)) << "\n";
      if (out_lift.failure) {
        auto const& f = *out_lift.failure;
        auto const& pt = ctx.point_names;
        out << "JoinFails at " << Q.name(f.class_id) << ": point "
            << pt[f.conflict.point] << " with "
            << (f.conflict.kind == JoinConflict::Kind::two_images ? "images "
                                                                   : "preimages ")
            << pt[f.conflict.first] << " and " << pt[f.conflict.second] << "\n";
        return {out.str(), 1};
      }
      for (std::size_t c = 0; c < Q.size(); ++c) {
        out << "lift_" << Q.name(c) << " = "
            << show_map((*out_lift.action)[c], ctx.point_names) << "\n";
      }
      return {out.str(), 0};
    }

    inline Report verb_product(InstanceFile const& inst) {
      auto const         S   = semigroup_of(inst);
      auto const         ctx = action_context(inst, S, true);
      auto const         P   = build_semidirect(ctx.tau);
      std::ostringstream out;
      header(out, S);
      out << "product: " << P.product.size() << " elements\n";
      for (std::size_t i = 0; i < P.product.size(); ++i) {
        auto [e, s] = P.product.pairs[i];
        out << "element (" << ctx.point_names[e] << "," << S.name(s)
            << ") inverse " << P.product.semigroup.name(
                                   P.product.semigroup.inverse(i))
            << "\n";
      }
      auto checks = verify_semidirect(P);
      std::optional<std::vector<std::size_t>> alpha;
      try {
        alpha = strictness(P);
      } catch (Error const& e) {
        if (e.kind() != "NotStrict") {
          throw;
        }
        out << "strict: NO " << e.what() << "\n";
      }
      if (alpha) {
        out << "strict: YES\n";
        for (std::size_t e = 0; e < alpha->size(); ++e) {
          out << "alpha " << ctx.point_names[e] << " = " << S.name((*alpha)[e])
              << "\n";
        }
        auto const M = build_m_subsemigroup(P, *alpha);
        out << "m-subsemigroup: " << M.members.size() << " elements\n";
        bool const full = is_fully_strict(P, M);
        out << "fully-strict: " << yes_no(full) << "\n";
        if (full) {
          auto const g = check_group_remark(P, *alpha);
          checks.add("group-remark", g.holds(),
                     concat("m-is-everything=", yes_no(g.m_is_everything),
                            " base-is-group=", yes_no(g.base_is_group)));
        }
      }
      out << checks.to_text();
      return {out.str(), checks.all_passed() ? 0 : 1};
    }

    inline Report verb_embed(InstanceFile const& inst) {
      auto const         S   = semigroup_of(inst);
      auto const         rho = require_congruence(inst, S);
      auto const         rep = embedding_theorem(S, rho);
      std::ostringstream out;
      header(out, S);
      out << "product: " << rep.product.product.size() << " elements, "
          << "m-subsemigroup: " << rep.m.members.size() << " elements\n";
      for (std::size_t s = 0; s < S.size(); ++s) {
        out << "phi " << S.name(s) << " = "
            << rep.product.product.semigroup.name(rep.phi[s]) << "\n";
      }
      out << rep.checks.to_text();
      out << "INFO surjective: " << yes_no(rep.surjective) << "\n";
      return {out.str(), rep.checks.all_passed() ? 0 : 1};
    }

    inline Report verb_globalizable(InstanceFile const& inst) {
      auto const         S   = semigroup_of(inst);
      auto const         ctx = action_context(inst, S, false);
      auto const         rho = congruence_of(inst, S);
      auto const         tau = rho ? lift(ctx.tau, *rho) : ctx.tau;
      auto const&        T   = tau.source();
      auto const         op  = is_order_preserving(tau);
      std::ostringstream out;
      if (op.holds) {
        out << "globalizable: YES\n";
        return {out.str(), 0};
      }
      auto [s, t] = *op.witness;
      out << "globalizable: NO, witness (" << T.name(s) << "," << T.name(t)
          << ")\n";
      out << "tau_" << T.name(s) << " = " << show_map(tau[s], ctx.point_names)
          << "\n";
      out << "tau_" << T.name(t) << " = " << show_map(tau[t], ctx.point_names)
          << "\n";
      return {out.str(), 1};
    }

    inline Report verb_ltriple(InstanceFile const& inst) {
      auto const S       = semigroup_of(inst);
      auto const ctx     = action_context(inst, S, true);
      auto const E       = idempotent_semilattice(S).lattice;
      auto const& phi    = ctx.tau;
      if (!phi.is_global()) {
        throw Error("NotGlobal", "the witness action must be global");
      }
      std::vector<std::size_t> Y;
      if (inst.subset) {
        Y = *inst.subset;
        for (std::size_t y : Y) {
          if (y >= E.size()) {
            throw Error("BadSubset", concat("point ", y, " out of range"), {y});
          }
        }
        std::sort(Y.begin(), Y.end());
        Y.erase(std::unique(Y.begin(), Y.end()), Y.end());
      } else {
        for (std::size_t y = 0; y < E.size(); ++y) {
          Y.push_back(y);
        }
      }
      auto const tau  = restrict_to_subset(phi, Y, induced_semilattice(E, Y));
      auto const cert = build_ltriple(tau.action, phi, tau.iota);
      auto const back = ltriple_to_action(cert.triple);

      std::ostringstream out;
      header(out, S);
      out << "Y:";
      for (std::size_t y : Y) {
        out << " " << ctx.point_names[y];
      }
      out << "\nX:";
      for (std::size_t x : cert.points) {
        out << " " << ctx.point_names[x];
      }
      out << "\n";
      CheckList checks = cert.checks;
      checks.append(back.checks, "round-trip:");
      checks.add("round-trip:recovers-tau",
                 back.tau.action.maps() == tau.action.maps());
      out << checks.to_text();
      return {out.str(), checks.all_passed() ? 0 : 1};
    }

    inline Report verb_certify_all(Flags const& flags) {
      if (flags.max_n > default_enumeration_bound) {
        throw Error("OutOfRange",
                    concat("--max-n must be at most ", default_enumeration_bound),
                    {flags.max_n});
      }
      std::ostringstream out;
      std::size_t        instances = 0, runs = 0, failures = 0;
      for (auto const& entry : standard_corpus(flags.max_n)) {
        auto const& S = entry.semigroup;
        if (S.size() > flags.max_n) {
          continue;
        }
        ++instances;
        for (auto const& rho : enumerate_congruences(S, true)) {
          ++runs;
          auto const rep = embedding_theorem(S, rho);
          bool const ok  = rep.checks.all_passed();
          failures += !ok;
          out << entry.name << " rho=";
          for (std::size_t s = 0; s < S.size(); ++s) {
            out << rho.class_of(s);
          }
          out << ": " << (ok ? "PASS" : "FAIL") << " surjective="
              << yes_no(rep.surjective) << "\n";
          if (!ok) {
            out << rep.checks.to_text();
          }
        }
      }
      out << "instances: " << instances << ", congruences: " << runs
          << ", failures: " << failures << "\n";
      return {out.str(), failures == 0 ? 0 : 1};
    }
  }  // namespace detail

  /// Runs one verb. `inst` is required by every verb except certify-all.
  /// Library errors are caught and reported; exit code 1 for findings about
  /// valid input (a congruence that is not idempotent pure, a failing join,
  /// an action that is not order preserving or not strict), 2 otherwise.
  inline Report run_command(std::string const&                 verb,
                            std::optional<InstanceFile> const& inst,
                            Flags const&                       flags = {}) {
    try {
      if (verb == "certify-all") {
        return detail::verb_certify_all(flags);
      }
      if (std::find(verbs().begin(), verbs().end(), verb) == verbs().end()) {
        throw Error("UnknownVerb", "unknown verb '" + verb + "'");
      }
      if (!inst) {
        throw Error("MissingInput", "verb '" + verb + "' needs --input or --family");
      }
      if (verb == "validate") return detail::verb_validate(*inst);
      if (verb == "orders") return detail::verb_orders(*inst);
      if (verb == "congruences") return detail::verb_congruences(*inst);
      if (verb == "quotient") return detail::verb_quotient(*inst);
      if (verb == "munn") return detail::verb_munn(*inst);
      if (verb == "lift") return detail::verb_lift(*inst);
      if (verb == "product") return detail::verb_product(*inst);
      if (verb == "embed") return detail::verb_embed(*inst);
      if (verb == "globalizable") return detail::verb_globalizable(*inst);
      return detail::verb_ltriple(*inst);
    } catch (Error const& e) {
      bool const finding = detail::is_finding(e.kind());
      return {std::string(finding ? "RESULT " : "ERROR ") + e.what() + "\n",
              finding ? 1 : 2};
    }
  }

}  // namespace invsemi
