#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "mobius0/ideals.hpp"
#include "mobius0/monoid.hpp"
#include "mobius0/report.hpp"

namespace mobius0 {

  // Monoid descriptions:
  //   {"type":"free"|"free-commutative","alphabet":["a","b",...]}
  //   {"type":"adjoin-zero","base":{...}}
  //   {"type":"rees","base":{...},"ideal":{...}}
  // Ideal descriptions:
  //   {"kind":"repeated-letter"} | {"kind":"min-length","n":3}
  //   {"kind":"generated","words":[["c"]]} | {"kind":"degree-at-least","d":2}
  //   {"kind":"ev-preimage","inner":{...}}
  // Every parse failure is reported as SpecError.

  [[nodiscard]] MonoidPtr      monoid_from_json(nlohmann::json const& j);
  [[nodiscard]] nlohmann::json monoid_to_json(ZeroMonoid const& m);

  [[nodiscard]] IdealKind      ideal_kind_from_json(nlohmann::json const& j,
                                                    Alphabet const&       alphabet);
  [[nodiscard]] nlohmann::json ideal_kind_to_json(IdealKind const& kind,
                                                  Alphabet const&  alphabet);

  // Accepts either inline JSON text or the path of a file holding it.
  [[nodiscard]] nlohmann::json load_json_argument(std::string const& arg);

  // {"pass":bool,"counterexample":"..."}; the counterexample is omitted on
  // success.
  [[nodiscard]] nlohmann::json report_to_json(CheckReport const& report);

}  // namespace mobius0
