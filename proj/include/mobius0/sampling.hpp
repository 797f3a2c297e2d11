#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "mobius0/monoid.hpp"
#include "mobius0/series.hpp"

namespace mobius0 {

  // Draws random sparse series whose support lies in the elements of order
  // at most max_support_order, with coefficients in [-bound, bound].
  template <class C = Integer>
  class SeriesSampler {
   public:
    SeriesSampler(MonoidPtr   m,
                  std::size_t truncation,
                  std::size_t max_support_order,
                  int         bound,
                  std::size_t max_terms)
        : _monoid(std::move(m)),
          _truncation(truncation),
          _bound(bound),
          _max_terms(max_terms) {
      auto top = std::min(max_support_order, truncation);
      for (std::size_t n = 0; n <= top; ++n) {
        _monoid->for_each_element_of_order(
            n, [this](Word const& w) { _pool.push_back(w); });
      }
    }

    [[nodiscard]] std::vector<Word> const& pool() const noexcept {
      return _pool;
    }

    // A random series; with proper set, the identity gets no coefficient.
    template <class Rng>
    [[nodiscard]] Series<C> operator()(Rng& rng, bool proper = false) const {
      std::uniform_int_distribution<std::size_t> count(0, _max_terms);
      std::uniform_int_distribution<std::size_t> pick(0, _pool.size() - 1);
      std::uniform_int_distribution<int>         coeff(-_bound, _bound);
      Series<C>                                  r(_monoid, _truncation);
      auto const one = _monoid->identity();
      auto const k   = count(rng);
      for (std::size_t i = 0; i < k; ++i) {
        auto const& w = _pool[pick(rng)];
        if (proper && w == one) {
          continue;
        }
        r.accumulate(w, C(coeff(rng)));
      }
      r.normalize();
      return r;
    }

    // A random series with constant term one.
    template <class Rng>
    [[nodiscard]] Series<C> unit(Rng& rng) const {
      return add(Series<C>::one(_monoid, _truncation), (*this)(rng, true));
    }

   private:
    MonoidPtr         _monoid;
    std::size_t       _truncation;
    int               _bound;
    std::size_t       _max_terms;
    std::vector<Word> _pool;
  };

}  // namespace mobius0
