#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace invsemi {

  /// One verified clause of a certificate.
  struct Check {
    std::string name;
    bool        passed = false;
    std::string witness;  // empty when there is nothing to show
  };

  /// An ordered list of checks; printed as `CHECK <name>: PASS|FAIL ...`.
  class CheckList {
   public:
    void add(std::string name, bool passed, std::string witness = {}) {
      checks_.push_back({std::move(name), passed, std::move(witness)});
    }

    void append(CheckList const& other, std::string const& prefix = {}) {
      for (auto const& c : other.checks_) {
        checks_.push_back({prefix + c.name, c.passed, c.witness});
      }
    }

    bool all_passed() const {
      return std::all_of(checks_.begin(), checks_.end(),
                         [](Check const& c) { return c.passed; });
    }

    Check const* find(std::string const& name) const {
      for (auto const& c : checks_) {
        if (c.name == name) {
          return &c;
        }
      }
      return nullptr;
    }

    bool passed(std::string const& name) const {
      auto const* c = find(name);
      return c != nullptr && c->passed;
    }

    std::vector<Check> const& checks() const noexcept {
      return checks_;
    }

    std::string to_text() const {
      std::string out;
      for (auto const& c : checks_) {
        out += "CHECK " + c.name + ": " + (c.passed ? "PASS" : "FAIL");
        if (!c.witness.empty()) {
          out += " " + c.witness;
        }
        out += "\n";
      }
      return out;
    }

   private:
    std::vector<Check> checks_;
  };

}  // namespace invsemi
