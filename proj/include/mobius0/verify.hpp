#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "mobius0/monoid.hpp"
#include "mobius0/quotient_maps.hpp"
#include "mobius0/report.hpp"

namespace mobius0 {

  struct SuiteOptions {
    std::size_t   truncation = default_truncation;
    std::size_t   samples    = 25;
    std::uint64_t seed       = 20120917;
  };

  // The quotient context of a {"type":"rees",...} description; nullopt for
  // the other monoid types.
  [[nodiscard]] std::optional<QuotientContext>
  quotient_context_from_json(nlohmann::json const& j);

  //! Runs the identity suite over m: local finiteness, the unit-inverse
  //! identity for the characteristic and Möbius series, agreement of the two
  //! convolution routes, the star identities, the inversion roundtrip and
  //! multiplicativity of the augmentation. When ctx is given (m being its
  //! quotient) it also checks the ideal, the morphism laws of phi and its
  //! section, the identities relating inverses and Möbius series of M and M/I,
  //! and, over a free base, the Hilbert relation.
  [[nodiscard]] std::vector<CheckReport>
  run_identity_suite(MonoidPtr const&       m,
                     QuotientContext const* ctx,
                     SuiteOptions const&    options);

}  // namespace mobius0
