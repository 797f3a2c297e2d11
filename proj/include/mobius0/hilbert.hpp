#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mobius0/errors.hpp"
#include "mobius0/monoid.hpp"
#include "mobius0/quotient_maps.hpp"
#include "mobius0/report.hpp"
#include "mobius0/series.hpp"

namespace mobius0 {

  // Leading coefficients c_0, ..., c_T of a Hilbert series, c_n being the
  // number of nonzero elements of order n.
  struct HilbertPrefix {
    std::vector<std::size_t> counts;

    [[nodiscard]] std::size_t terms() const noexcept {
      return counts.empty() ? 0 : counts.size() - 1;
    }

    bool operator==(HilbertPrefix const&) const = default;
  };

  [[nodiscard]] HilbertPrefix hilbert_prefix(ZeroMonoid const& m, std::size_t terms);

  // Whether m is exactly the free monoid over its alphabet.
  [[nodiscard]] bool is_free_monoid(ZeroMonoid const& m);

  // Checks c_n = |X|^n - |I(n)| for n <= terms, where c_n counts the quotient
  // elements of order n and |I(n)| the words of length n in the ideal. The
  // base of the context must be a free monoid (SpecError otherwise).
  [[nodiscard]] CheckReport check_hilbert_relation(QuotientContext const& ctx,
                                                   std::size_t            terms);

  // Image of f under the linear extension of the morphism sending every
  // letter to t: the coefficient of t^n is the sum of the coefficients of
  // the words of length n, for n <= min(terms, truncation). Throws SpecError
  // if f is not a series over a free monoid.
  template <class C>
  [[nodiscard]] std::vector<C> evaluation_map(Series<C> const& f,
                                              std::size_t      terms) {
    if (!is_free_monoid(f.monoid())) {
      throw SpecError("evaluation map needs a series over a free monoid");
    }
    auto const     n = std::min(terms, f.truncation());
    std::vector<C> result(n + 1, C(0));
    for (auto const& [w, c] : f.terms()) {
      if (w.size() <= n) {
        result[w.size()] = result[w.size()] + c;
      }
    }
    return result;
  }

  // "1 + 3t + 6t^2 + 6t^3"; zero coefficients are skipped, "0" if all vanish.
  template <class C>
  [[nodiscard]] std::string render_polynomial(std::vector<C> const& coeffs,
                                              std::string const&    var = "t") {
    std::string out;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
      C c = coeffs[n];
      if (c == C(0)) {
        continue;
      }
      std::string s = coefficient_to_string(c);
      bool const  negative = !s.empty() && s.front() == '-';
      if (negative) {
        s.erase(0, 1);
      }
      if (out.empty()) {
        out = negative ? "-" : "";
      } else {
        out += negative ? " - " : " + ";
      }
      std::string mono = n == 0 ? "" : (n == 1 ? var : var + "^" + std::to_string(n));
      if (mono.empty()) {
        out += s;
      } else {
        out += (s == "1" ? "" : s) + mono;
      }
    }
    return out.empty() ? "0" : out;
  }

  [[nodiscard]] std::string to_text(HilbertPrefix const& h);

}  // namespace mobius0
