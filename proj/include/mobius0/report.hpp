#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mobius0 {

  // Outcome of a verification routine. An empty list of violations means the
  // check passed; the first violation doubles as the counterexample.
  struct CheckReport {
    std::string              name;
    std::vector<std::string> violations;

    CheckReport() = default;
    explicit CheckReport(std::string n) : name(std::move(n)) {}

    [[nodiscard]] bool passed() const noexcept {
      return violations.empty();
    }

    [[nodiscard]] std::optional<std::string> counterexample() const {
      if (violations.empty()) {
        return std::nullopt;
      }
      return violations.front();
    }

    void fail(std::string what) {
      violations.push_back(std::move(what));
    }

    // Appends the violations of another report, prefixed by its name.
    void absorb(CheckReport const& other) {
      for (auto const& v : other.violations) {
        violations.push_back(other.name + ": " + v);
      }
    }
  };

}  // namespace mobius0
