#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "mobius0/monoid.hpp"
#include "mobius0/report.hpp"
#include "mobius0/word.hpp"

namespace mobius0 {

  struct IdealKind;

  namespace ideal {
    // Words in which some letter occurs at least twice.
    struct RepeatedLetter {};
    // Elements of order at least n (n >= 1).
    struct MinLength {
      std::size_t n = 1;
    };
    // The two-sided ideal generated by a finite set of words: words having one
    // of them as a factor (free base) or as a divisor (commutative base).
    // Generators are given by their spelling.
    struct Generated {
      std::vector<std::vector<letter_type>> words;
    };
    // Exponent vectors of total degree at least d (commutative base only).
    struct DegreeAtLeast {
      std::size_t d = 1;
    };
    // Words whose commutative image lies in the inner ideal (free base only).
    struct EvPreimage {
      std::shared_ptr<IdealKind const> inner;
    };
  }  // namespace ideal

  // Declarative, base-independent description of a two-sided ideal.
  struct IdealKind {
    std::variant<ideal::RepeatedLetter,
                 ideal::MinLength,
                 ideal::Generated,
                 ideal::DegreeAtLeast,
                 ideal::EvPreimage>
        kind;

    [[nodiscard]] std::string name() const;
  };

  [[nodiscard]] IdealKind repeated_letter();
  [[nodiscard]] IdealKind min_length(std::size_t n);
  [[nodiscard]] IdealKind generated(std::vector<std::vector<letter_type>> words);
  [[nodiscard]] IdealKind degree_at_least(std::size_t d);
  [[nodiscard]] IdealKind ev_preimage(IdealKind inner);

  //! An ideal kind bound to the base monoid it lives in.
  //!
  //! Construction checks that the kind makes sense over the base (for example
  //! degree-at-least needs an exponent-shaped base and ev-preimage a
  //! sequence-shaped one) and throws SpecError otherwise. Properness is not
  //! enforced here: validate_ideal reports it, rees_quotient rejects it.
  class IdealSpec {
   public:
    IdealSpec(IdealKind kind, MonoidPtr base);

    [[nodiscard]] IdealKind const& kind() const noexcept {
      return _kind;
    }
    [[nodiscard]] MonoidPtr const& base() const noexcept {
      return _base;
    }

    // Throws MembershipError if w is not an element of the base.
    [[nodiscard]] bool contains(Word const& w) const;
    [[nodiscard]] bool contains_no_checks(Word const& w) const;
    [[nodiscard]] bool is_proper() const;

   private:
    IdealKind _kind;
    MonoidPtr _base;
    // Present for ev-preimage ideals: the inner ideal over the commutative
    // image of the base.
    std::shared_ptr<IdealSpec const> _inner;
  };

  // Checks properness and, for every pair (u, v) of base elements with
  // order(u) + order(v) <= max_order and u in the ideal, that uv and vu are in
  // the ideal whenever they are nonzero.
  [[nodiscard]] CheckReport validate_ideal(IdealSpec const& spec,
                                           std::size_t      max_order);

}  // namespace mobius0
