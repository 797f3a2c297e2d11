#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mobius0/errors.hpp"
#include "mobius0/monoid.hpp"
#include "mobius0/ring.hpp"
#include "mobius0/word.hpp"

namespace mobius0 {

  inline constexpr std::size_t default_truncation = 8;

  //! Order-truncated element of the total contracted algebra of a monoid.
  //!
  //! A Series stores the class of a formal sum of nonzero monoid elements
  //! modulo the elements of order greater than its truncation N: only
  //! coefficients of elements of order at most N are determined. The zero of
  //! the monoid is never a key (it is identified with the zero of the ring),
  //! and no key maps to the ring zero, so two series are equal exactly when
  //! their term maps are.
  template <CoefficientRing C = Integer>
  class Series {
   public:
    using coefficient_type = C;
    using term_map         = std::unordered_map<Word, C, WordHash>;

    // The zero series.
    Series(MonoidPtr m, std::size_t truncation)
        : _monoid(std::move(m)), _truncation(truncation) {
      if (!_monoid) {
        throw SpecError("series over a null monoid");
      }
    }

    // Sums the given terms. Throws MembershipError for words that are not
    // elements and TruncationError for words of order above the truncation.
    Series(MonoidPtr                             m,
           std::size_t                           truncation,
           std::vector<std::pair<Word, C>> const& terms)
        : Series(std::move(m), truncation) {
      for (auto const& [w, c] : terms) {
        if (!_monoid->contains(w)) {
          throw MembershipError("series term " + _monoid->render(w)
                                + " is not an element");
        }
        if (_monoid->order_no_checks(w) > _truncation) {
          throw TruncationError("series term " + _monoid->render(w)
                                + " has order above the truncation "
                                + std::to_string(_truncation));
        }
        accumulate(w, c);
      }
      normalize();
    }

    static Series one(MonoidPtr m, std::size_t truncation) {
      Series s(std::move(m), truncation);
      s._terms.emplace(s._monoid->identity(), C(1));
      return s;
    }

    static Series monomial(MonoidPtr m, std::size_t truncation, Word const& w,
                           C const& c = C(1)) {
      return Series(std::move(m), truncation, {{w, c}});
    }

    [[nodiscard]] MonoidPtr const& monoid_ptr() const noexcept {
      return _monoid;
    }
    [[nodiscard]] ZeroMonoid const& monoid() const noexcept {
      return *_monoid;
    }
    [[nodiscard]] std::size_t truncation() const noexcept {
      return _truncation;
    }
    [[nodiscard]] term_map const& terms() const noexcept {
      return _terms;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _terms.size();
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return _terms.empty();
    }

    // Coefficient of x. Throws TruncationError if x has order above the
    // truncation, since it is then not determined.
    [[nodiscard]] C coefficient(Word const& x) const {
      if (!_monoid->contains(x)) {
        throw MembershipError("coefficient of a word that is not an element");
      }
      if (_monoid->order_no_checks(x) > _truncation) {
        throw TruncationError("coefficient of " + _monoid->render(x)
                              + " is not determined at truncation "
                              + std::to_string(_truncation));
      }
      return coefficient_no_checks(x);
    }

    [[nodiscard]] C coefficient_no_checks(Word const& x) const {
      auto it = _terms.find(x);
      return it == _terms.end() ? C(0) : it->second;
    }

    // Terms sorted by (order, lexicographic spelling).
    [[nodiscard]] std::vector<std::pair<Word, C>> sorted_terms() const {
      std::vector<std::pair<Word, C>> result(_terms.begin(), _terms.end());
      std::sort(result.begin(), result.end(), [this](auto const& a, auto const& b) {
        return _monoid->compare(a.first, b.first) < 0;
      });
      return result;
    }

    // Smallest order in the support; nullopt for the zero series.
    [[nodiscard]] std::optional<std::size_t> valuation() const {
      std::optional<std::size_t> result;
      for (auto const& [w, c] : _terms) {
        auto o = _monoid->order_no_checks(w);
        if (!result || o < *result) {
          result = o;
        }
      }
      return result;
    }

    // The same class read modulo a coarser filtration step.
    [[nodiscard]] Series truncated(std::size_t n) const {
      if (n > _truncation) {
        throw TruncationError("cannot raise truncation from "
                              + std::to_string(_truncation) + " to "
                              + std::to_string(n));
      }
      Series r(_monoid, n);
      for (auto const& [w, c] : _terms) {
        if (_monoid->order_no_checks(w) <= n) {
          r._terms.emplace(w, c);
        }
      }
      return r;
    }

    bool operator==(Series const& other) const {
      return same_monoid(*_monoid, *other._monoid)
             && _truncation == other._truncation && _terms == other._terms;
    }

    // Adds c to the coefficient of w. No membership, truncation or
    // normalization is performed; call normalize() afterwards.
    void accumulate(Word const& w, C const& c) {
      auto [it, inserted] = _terms.try_emplace(w, c);
      if (!inserted) {
        it->second = it->second + c;
      }
    }

    void normalize() {
      std::erase_if(_terms, [](auto const& kv) { return kv.second == C(0); });
    }

   private:
    MonoidPtr   _monoid;
    std::size_t _truncation;
    term_map    _terms;
  };

  namespace detail {
    template <class C>
    MonoidPtr const& common_monoid(Series<C> const& f, Series<C> const& g) {
      if (!same_monoid(f.monoid(), g.monoid())) {
        throw MonoidMismatchError("series over different monoids: "
                                  + f.monoid().description() + " and "
                                  + g.monoid().description());
      }
      return f.monoid_ptr();
    }
  }  // namespace detail

  // Equality modulo the coarser of the two truncations.
  template <class C>
  [[nodiscard]] bool equal_modulo(Series<C> const& f, Series<C> const& g) {
    detail::common_monoid(f, g);
    auto n = std::min(f.truncation(), g.truncation());
    return f.truncated(n).terms() == g.truncated(n).terms();
  }

  template <class C>
  [[nodiscard]] std::string coefficient_to_string(C const& c) {
    std::ostringstream os;
    os << c;
    return os.str();
  }

  // Description of the first element, in (order, lex) order, at which two
  // term maps over the same monoid differ; nullopt when they agree.
  template <class C>
  [[nodiscard]] std::optional<std::string>
  first_difference(ZeroMonoid const&                      m,
                   typename Series<C>::term_map const& lhs,
                   typename Series<C>::term_map const& rhs) {
    std::optional<Word> worst;
    auto consider = [&](Word const& w) {
      auto a = lhs.find(w);
      auto b = rhs.find(w);
      C    ca = a == lhs.end() ? C(0) : a->second;
      C    cb = b == rhs.end() ? C(0) : b->second;
      if (!(ca == cb) && (!worst || m.compare(w, *worst) < 0)) {
        worst = w;
      }
    };
    for (auto const& kv : lhs) {
      consider(kv.first);
    }
    for (auto const& kv : rhs) {
      consider(kv.first);
    }
    if (!worst) {
      return std::nullopt;
    }
    auto at = [&](auto const& map) {
      auto it = map.find(*worst);
      return coefficient_to_string(it == map.end() ? C(0) : it->second);
    };
    return "coefficient of " + m.render(*worst) + ": " + at(lhs) + " vs "
           + at(rhs);
  }

  template <class C>
  [[nodiscard]] std::optional<std::string> first_difference(Series<C> const& f,
                                                            Series<C> const& g) {
    if (!same_monoid(f.monoid(), g.monoid())) {
      return "series over different monoids";
    }
    auto n = std::min(f.truncation(), g.truncation());
    return first_difference<C>(
        f.monoid(), f.truncated(n).terms(), g.truncated(n).terms());
  }

  ////////////////////////////////////////////////////////////////////////
  // Module structure
  ////////////////////////////////////////////////////////////////////////

  template <class C>
  [[nodiscard]] Series<C> add(Series<C> const& f, Series<C> const& g) {
    auto const& m = detail::common_monoid(f, g);
    auto const  n = std::min(f.truncation(), g.truncation());
    Series<C>   r = f.truncated(n);
    for (auto const& [w, c] : g.terms()) {
      if (m->order_no_checks(w) <= n) {
        r.accumulate(w, c);
      }
    }
    r.normalize();
    return r;
  }

  template <class C>
  [[nodiscard]] Series<C> scalar_mul(C const& alpha, Series<C> const& f) {
    Series<C> r(f.monoid_ptr(), f.truncation());
    for (auto const& [w, c] : f.terms()) {
      r.accumulate(w, alpha * c);
    }
    r.normalize();
    return r;
  }

  template <class C>
  [[nodiscard]] Series<C> negate(Series<C> const& f) {
    return scalar_mul(C(-1), f);
  }

  template <class C>
  [[nodiscard]] Series<C> subtract(Series<C> const& f, Series<C> const& g) {
    return add(f, negate(g));
  }

  ////////////////////////////////////////////////////////////////////////
  // Products
  ////////////////////////////////////////////////////////////////////////

  //! Cauchy product in the contracted algebra.
  //!
  //! Every pair of terms (y, a), (z, b) contributes a*b at yz, unless yz is
  //! the zero of the monoid (the contribution is dropped) or lies above the
  //! truncation. The result has the smaller of the two truncations.
  template <class C>
  [[nodiscard]] Series<C> cauchy_product(Series<C> const& f, Series<C> const& g) {
    auto const&       mptr = detail::common_monoid(f, g);
    ZeroMonoid const& m    = *mptr;
    auto const        n    = std::min(f.truncation(), g.truncation());

    // Right factors bucketed by order, so each left term only meets the right
    // terms that can land below the truncation.
    std::vector<std::vector<std::pair<Word const*, C const*>>> buckets(n + 1);
    for (auto const& [z, b] : g.terms()) {
      auto o = m.order_no_checks(z);
      if (o <= n) {
        buckets[o].emplace_back(&z, &b);
      }
    }

    Series<C> r(mptr, n);
    for (auto const& [y, a] : f.terms()) {
      auto const oy = m.order_no_checks(y);
      if (oy > n) {
        continue;
      }
      for (std::size_t oz = 0; oy + oz <= n; ++oz) {
        for (auto const& [z, b] : buckets[oz]) {
          auto x = m.product_no_checks(y, *z);
          if (x.is_zero() || m.order_no_checks(x.word()) > n) {
            continue;
          }
          r.accumulate(x.word(), a * *b);
        }
      }
    }
    r.normalize();
    return r;
  }

  //! Cauchy product evaluated the dual way: for every element x of order at
  //! most N, sum f(y) g(z) over the factorizations x = yz. Requires a monoid
  //! that can enumerate its grades. Used as an independent check of
  //! cauchy_product.
  template <class C>
  [[nodiscard]] Series<C> convolve_oracle(Series<C> const& f,
                                          Series<C> const& g) {
    auto const&       mptr = detail::common_monoid(f, g);
    ZeroMonoid const& m    = *mptr;
    auto const        n    = std::min(f.truncation(), g.truncation());
    Series<C>         r(mptr, n);
    for (std::size_t k = 0; k <= n; ++k) {
      m.for_each_element_of_order(k, [&](Word const& x) {
        C sum(0);
        for (auto const& [y, z] : m.factorizations(x)) {
          auto fy = f.terms().find(y);
          if (fy == f.terms().end()) {
            continue;
          }
          auto gz = g.terms().find(z);
          if (gz == g.terms().end()) {
            continue;
          }
          sum = sum + fy->second * gz->second;
        }
        if (!(sum == C(0))) {
          r.accumulate(x, sum);
        }
      });
    }
    return r;
  }

  template <class C>
  [[nodiscard]] Series<C> power(Series<C> const& f, std::size_t k) {
    auto r = Series<C>::one(f.monoid_ptr(), f.truncation());
    for (std::size_t i = 0; i < k; ++i) {
      if (r.is_zero()) {
        break;
      }
      r = cauchy_product(r, f);
    }
    return r;
  }

  template <class C>
  Series<C> operator+(Series<C> const& f, Series<C> const& g) {
    return add(f, g);
  }
  template <class C>
  Series<C> operator-(Series<C> const& f, Series<C> const& g) {
    return subtract(f, g);
  }
  template <class C>
  Series<C> operator-(Series<C> const& f) {
    return negate(f);
  }
  template <class C>
  Series<C> operator*(Series<C> const& f, Series<C> const& g) {
    return cauchy_product(f, g);
  }

  ////////////////////////////////////////////////////////////////////////
  // Augmentation, star and inverses
  ////////////////////////////////////////////////////////////////////////

  // The coefficient of the identity.
  template <class C>
  [[nodiscard]] C augmentation(Series<C> const& f) {
    return f.coefficient_no_checks(f.monoid().identity());
  }

  template <class C>
  struct StarResult {
    Series<C> value;
    // Largest k such that f^k was nonzero and added to the sum.
    std::size_t highest_power = 0;
  };

  //! f* = sum of the powers f^k, for f with zero constant term.
  //!
  //! Since f^k has valuation at least k, only the powers k <= N survive the
  //! truncation; the summation also stops at the first vanishing power, which
  //! happens early when f is nilpotent. Throws ProperError if the constant
  //! term of f is not zero.
  template <class C>
  [[nodiscard]] StarResult<C> star_with_stats(Series<C> const& f) {
    if (!(augmentation(f) == C(0))) {
      throw ProperError("star needs a proper series (zero constant term)");
    }
    auto        p   = Series<C>::one(f.monoid_ptr(), f.truncation());
    auto        sum = p;
    std::size_t k   = 0;
    while (k < f.truncation()) {
      p = cauchy_product(p, f);
      if (p.is_zero()) {
        break;
      }
      sum = add(sum, p);
      ++k;
    }
    return {std::move(sum), k};
  }

  template <class C>
  [[nodiscard]] Series<C> star(Series<C> const& f) {
    return star_with_stats(f).value;
  }

  // Inverse of a series with constant term one, as (1 - f)*.
  template <class C>
  [[nodiscard]] Series<C> inverse(Series<C> const& f) {
    if (!(augmentation(f) == C(1))) {
      throw ProperError("only series with constant term 1 are inverted");
    }
    return star(subtract(Series<C>::one(f.monoid_ptr(), f.truncation()), f));
  }

  ////////////////////////////////////////////////////////////////////////
  // Characteristic and Möbius series
  ////////////////////////////////////////////////////////////////////////

  // Sum of every nonzero element of order at most N.
  template <class C = Integer>
  [[nodiscard]] Series<C> characteristic_series(MonoidPtr m, std::size_t n) {
    Series<C> r(m, n);
    for (std::size_t k = 0; k <= n; ++k) {
      m->for_each_element_of_order(k, [&r](Word const& w) { r.accumulate(w, C(1)); });
    }
    return r;
  }

  // The characteristic series with the identity removed.
  template <class C = Integer>
  [[nodiscard]] Series<C> proper_characteristic_series(MonoidPtr m,
                                                       std::size_t n) {
    auto r = characteristic_series<C>(m, n);
    return subtract(r, Series<C>::one(std::move(m), n));
  }

  // Inverse of the characteristic series, computed as (-zeta^+)*.
  template <class C = Integer>
  [[nodiscard]] Series<C> mobius_series(MonoidPtr m, std::size_t n) {
    return star(negate(proper_characteristic_series<C>(std::move(m), n)));
  }

  template <class C>
  [[nodiscard]] Series<C> zeta_transform_left(Series<C> const& f) {
    return cauchy_product(
        characteristic_series<C>(f.monoid_ptr(), f.truncation()), f);
  }

  template <class C>
  [[nodiscard]] Series<C> zeta_transform_right(Series<C> const& f) {
    return cauchy_product(
        f, characteristic_series<C>(f.monoid_ptr(), f.truncation()));
  }

  template <class C>
  [[nodiscard]] Series<C> mobius_invert_left(Series<C> const& g) {
    return cauchy_product(mobius_series<C>(g.monoid_ptr(), g.truncation()), g);
  }

  template <class C>
  [[nodiscard]] Series<C> mobius_invert_right(Series<C> const& g) {
    return cauchy_product(g, mobius_series<C>(g.monoid_ptr(), g.truncation()));
  }

}  // namespace mobius0
