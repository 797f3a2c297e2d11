#pragma once

#include <cstddef>
#include <string>

#include "mobius0/ideals.hpp"
#include "mobius0/monoid.hpp"
#include "mobius0/report.hpp"
#include "mobius0/series.hpp"

namespace mobius0 {

  // A base monoid M, a proper two-sided ideal I of M and the Rees quotient
  // M/I. The quotient shares its words with M: an element of M/I is a word of
  // M outside I, of the same order.
  class QuotientContext {
   public:
    // Throws SpecError if the ideal is not proper.
    explicit QuotientContext(IdealSpec ideal)
        : _ideal(std::move(ideal)),
          _base(_ideal.base()),
          _quotient(rees_quotient(_ideal)) {}

    [[nodiscard]] MonoidPtr const& base() const noexcept {
      return _base;
    }
    [[nodiscard]] MonoidPtr const& quotient() const noexcept {
      return _quotient;
    }
    [[nodiscard]] IdealSpec const& ideal() const noexcept {
      return _ideal;
    }

   private:
    IdealSpec _ideal;
    MonoidPtr _base;
    MonoidPtr _quotient;
  };

  // Commutative image of a sequence-shaped word: its letter multiplicities.
  [[nodiscard]] Word ev(Word const& w, std::size_t alphabet_size);

  // The characteristic series of the ideal, truncated at n.
  template <class C = Integer>
  [[nodiscard]] Series<C> ideal_series(QuotientContext const& ctx,
                                       std::size_t            n) {
    Series<C> r(ctx.base(), n);
    for (std::size_t k = 0; k <= n; ++k) {
      ctx.base()->for_each_element_of_order(k, [&](Word const& w) {
        if (ctx.ideal().contains_no_checks(w)) {
          r.accumulate(w, C(1));
        }
      });
    }
    return r;
  }

  // The algebra epimorphism from series over M onto series over M/I: terms
  // on words of I are dropped.
  template <class C>
  [[nodiscard]] Series<C> phi(QuotientContext const& ctx, Series<C> const& f) {
    if (!same_monoid(f.monoid(), *ctx.base())) {
      throw ContextMismatchError("phi expects a series over "
                                 + ctx.base()->description());
    }
    Series<C> r(ctx.quotient(), f.truncation());
    for (auto const& [w, c] : f.terms()) {
      if (!ctx.ideal().contains_no_checks(w)) {
        r.accumulate(w, c);
      }
    }
    return r;
  }

  // Linear section of phi: a series over M/I read as a series over M. Not
  // multiplicative in general.
  template <class C>
  [[nodiscard]] Series<C> section(QuotientContext const& ctx,
                                  Series<C> const&       f) {
    if (!same_monoid(f.monoid(), *ctx.quotient())) {
      throw ContextMismatchError("section expects a series over "
                                 + ctx.quotient()->description());
    }
    Series<C> r(ctx.base(), f.truncation());
    for (auto const& [w, c] : f.terms()) {
      r.accumulate(w, c);
    }
    return r;
  }

  //! For f over M/I with constant term one, compares the inverse of f
  //! computed in M/I with phi applied to the inverse of section(f) computed
  //! in M. Throws ProperError unless the constant term of f is one.
  template <class C>
  [[nodiscard]] CheckReport
  check_lemma_inverse_via_section(QuotientContext const& ctx,
                                  Series<C> const&       f) {
    if (!same_monoid(f.monoid(), *ctx.quotient())) {
      throw ContextMismatchError("inverse-via-section expects a series over "
                                 + ctx.quotient()->description());
    }
    if (!(augmentation(f) == C(1))) {
      throw ProperError("inverse-via-section needs a series with constant term 1");
    }
    CheckReport report("inverse-via-section");
    auto        direct = inverse(f);
    auto        lifted = phi(ctx, inverse(section(ctx, f)));
    if (auto d = first_difference(direct, lifted)) {
      report.fail(*d);
    }
    return report;
  }

  template <class C = Integer>
  struct TransferReport {
    CheckReport report;
    // Möbius series of the base M, computed in R[[M]].
    Series<C> base_mobius;
    // Möbius series of M/I, computed intrinsically in the quotient.
    Series<C> quotient_mobius;
    // Whether no word of I carries a nonzero coefficient in base_mobius.
    bool support_disjoint = false;
    // Whether the two Möbius series have identical terms.
    bool coincides = false;
  };

  //! Computes the Möbius series of M and of M/I independently and checks that
  //! phi maps the former onto the latter. Also records whether the support of
  //! the base Möbius series avoids I, in which case both series must agree
  //! term by term.
  template <class C = Integer>
  [[nodiscard]] TransferReport<C> check_mobius_transfer(QuotientContext const& ctx,
                                                        std::size_t n) {
    auto mu   = mobius_series<C>(ctx.base(), n);
    auto mu0  = mobius_series<C>(ctx.quotient(), n);
    auto imag = phi(ctx, mu);

    TransferReport<C> out{CheckReport("mobius-transfer"), mu, mu0};
    if (auto d = first_difference(imag, mu0)) {
      out.report.fail("phi(mu) != mu0: " + *d);
    }
    out.support_disjoint = true;
    for (auto const& kv : mu.terms()) {
      if (ctx.ideal().contains_no_checks(kv.first)) {
        out.support_disjoint = false;
        break;
      }
    }
    out.coincides = mu.terms() == mu0.terms();
    if (out.support_disjoint && !out.coincides) {
      out.report.fail("support of mu avoids the ideal but mu != mu0");
    }
    return out;
  }

}  // namespace mobius0
