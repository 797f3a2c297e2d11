#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "mobius0/series.hpp"

namespace mobius0 {

  // {"truncation":N,"terms":[["-1",["a"]],...]}, terms sorted by (order,
  // lex), coefficients as decimal strings, words as letter-name arrays
  // (commutative words as their sorted letter multiset).
  [[nodiscard]] nlohmann::json series_to_json(Series<Integer> const& f);

  // Parses a series over m. When max_truncation is given, the truncation is
  // lowered to it and any term above it is rejected with TruncationError
  // rather than dropped. Non-elements raise MembershipError and malformed
  // input SpecError.
  [[nodiscard]] Series<Integer>
  series_from_json(nlohmann::json const&       j,
                   MonoidPtr const&            m,
                   std::optional<std::size_t>  max_truncation = std::nullopt);

  // "1 - a - b - c": terms by (order, lex), unit coefficients suppressed, the
  // identity written "1", other coefficients joined to their word by '*'.
  // The zero series is "0".
  [[nodiscard]] std::string to_text(Series<Integer> const& f);

}  // namespace mobius0
