#pragma once

// Shared fixtures for the unit tests: monoid builders and word parsing from
// single-character letter names.

#include <string>
#include <utility>
#include <vector>

#include "mobius0/ideals.hpp"
#include "mobius0/monoid.hpp"
#include "mobius0/quotient_maps.hpp"
#include "mobius0/series.hpp"

namespace mobius0::test {

  inline Alphabet letters(std::size_t k) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) {
      names.emplace_back(1, static_cast<char>('a' + i));
    }
    return Alphabet(names);
  }

  // Word of m spelled by a string of single-character letters; "" or "1" is
  // the identity.
  inline Word w(ZeroMonoid const& m, std::string const& s) {
    std::vector<std::string> names;
    if (s != "1") {
      for (char c : s) {
        names.emplace_back(1, c);
      }
    }
    return m.from_names(names);
  }

  inline Word w(MonoidPtr const& m, std::string const& s) {
    return w(*m, s);
  }

  // Series from (coefficient, word) pairs.
  inline Series<Integer> series(MonoidPtr const&                              m,
                                std::size_t                                   n,
                                std::vector<std::pair<int, std::string>> const& terms) {
    std::vector<std::pair<Word, Integer>> t;
    for (auto const& [c, s] : terms) {
      t.emplace_back(w(m, s), Integer(c));
    }
    return Series<Integer>(m, n, t);
  }

  inline QuotientContext context(std::size_t k, IdealKind kind) {
    return QuotientContext(IdealSpec(std::move(kind), free_monoid(letters(k))));
  }

  // Standard words over the first k letters: X* modulo the words with a
  // repeated letter.
  inline MonoidPtr standard_words(std::size_t k = 3) {
    return context(k, repeated_letter()).quotient();
  }

  // Every built-in ideal kind over the free monoid on k letters.
  inline std::vector<IdealKind> builtin_free_ideals(std::size_t k) {
    auto const last = static_cast<letter_type>(k - 1);
    return {repeated_letter(),
            min_length(2),
            min_length(4),
            generated({{last}}),
            generated({{0, last}, {last, 0}}),
            ev_preimage(degree_at_least(2)),
            ev_preimage(degree_at_least(3)),
            ev_preimage(repeated_letter())};
  }

  // Every built-in ideal kind over the free commutative monoid on k letters.
  inline std::vector<IdealKind> builtin_commutative_ideals(std::size_t k) {
    auto const last = static_cast<letter_type>(k - 1);
    return {repeated_letter(), min_length(3), degree_at_least(2), generated({{0, last}})};
  }

  inline std::vector<QuotientContext> builtin_contexts(std::size_t k) {
    std::vector<QuotientContext> out;
    for (auto const& kind : builtin_free_ideals(k)) {
      out.emplace_back(IdealSpec(kind, free_monoid(letters(k))));
    }
    for (auto const& kind : builtin_commutative_ideals(k)) {
      out.emplace_back(IdealSpec(kind, free_commutative_monoid(letters(k))));
    }
    return out;
  }

  // The built-in monoids on k letters: free, free commutative, their
  // zero-adjoined versions and every built-in Rees quotient.
  inline std::vector<MonoidPtr> builtin_monoids(std::size_t k) {
    std::vector<MonoidPtr> out{free_monoid(letters(k)),
                               free_commutative_monoid(letters(k)),
                               adjoin_zero(free_monoid(letters(k))),
                               adjoin_zero(free_commutative_monoid(letters(k)))};
    for (auto const& ctx : builtin_contexts(k)) {
      out.push_back(ctx.quotient());
    }
    return out;
  }

  inline std::vector<std::string> render_all(ZeroMonoid const&        m,
                                             std::vector<Word> const& ws) {
    std::vector<std::string> out;
    for (auto const& x : ws) {
      out.push_back(m.render(x));
    }
    return out;
  }

}  // namespace mobius0::test
