// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"

#include "mobius0/hilbert.hpp"
#include "mobius0/quotient_maps.hpp"
#include "mobius0/sampling.hpp"
#include "mobius0/series.hpp"
#include "mobius0/series_io.hpp"

using namespace mobius0;
using namespace mobius0::test;

using S = Series<Integer>;

namespace {

  struct Outcome {
    bool        pass = true;
    std::string detail;

    void fail(std::string what) {
      if (pass) {
        detail = std::move(what);
      }
      pass = false;
    }
  };

  using Clock = std::chrono::steady_clock;

  double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  }

  std::string fixed(double s) {
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << s << "s";
    return os.str();
  }

  std::vector<MonoidPtr> all_builtin_monoids() {
    std::vector<MonoidPtr> out;
    for (std::size_t k = 1; k <= 4; ++k) {
      auto ms = builtin_monoids(k);
      out.insert(out.end(), ms.begin(), ms.end());
    }
    return out;
  }

  // 1 - x_1 - ... - x_k over m.
  S one_minus_letters(MonoidPtr const& m, std::size_t n, std::size_t k) {
    auto r = S::one(m, n);
    for (letter_type l = 0; l < k; ++l) {
      r = r - S::monomial(m, n, Word{l}, Integer(1));
    }
    return r;
  }

  Outcome criterion_1() {
    Outcome o;
    auto    t0 = Clock::now();
    auto    m  = standard_words(3);
    for (std::size_t n = 3; n <= 12; ++n) {
      auto mu = mobius_series(m, n);
      if (to_text(mu) != "1 - a - b - c") {
        o.fail("N=" + std::to_string(n) + ": " + to_text(mu));
      }
    }
    auto t = seconds_since(t0);
    if (t >= 1.0) {
      o.fail("took " + fixed(t));
    }
    o.detail = o.pass ? "mu0 = 1 - a - b - c for N = 3..12 in " + fixed(t) : o.detail;
    return o;
  }

  Outcome criterion_2() {
    Outcome o;
    auto    m    = standard_words(3);
    auto    zp   = proper_characteristic_series(m, 8);
    if (!power(zp, 4).is_zero()) {
      o.fail("(zeta0+)^4 != 0");
    }
    if (power(zp, 3).is_zero()) {
      o.fail("(zeta0+)^3 == 0");
    }
    auto res = star_with_stats(negate(zp));
    if (res.highest_power != 3) {
      o.fail("star summed powers up to " + std::to_string(res.highest_power));
    }
    if (to_text(res.value) != "1 - a - b - c") {
      o.fail("star(-zeta0+) = " + to_text(res.value));
    }
    if (o.pass) {
      o.detail = "(zeta0+)^4 = 0, star summed powers 0..3";
    }
    return o;
  }

  Outcome criterion_3() {
    Outcome     o;
    auto        t0    = Clock::now();
    std::size_t count = 0;
    for (auto const& m : all_builtin_monoids()) {
      auto zeta = characteristic_series(m, 8);
      auto mu   = mobius_series(m, 8);
      auto one  = S::one(m, 8);
      if (auto d = first_difference(cauchy_product(zeta, mu), one)) {
        o.fail(m->description() + ": zeta*mu: " + *d);
      }
      if (auto d = first_difference(cauchy_product(mu, zeta), one)) {
        o.fail(m->description() + ": mu*zeta: " + *d);
      }
      ++count;
    }
    auto t = seconds_since(t0);
    if (t >= 30.0) {
      o.fail("took " + fixed(t));
    }
    if (o.pass) {
      o.detail = std::to_string(count) + " monoids at N=8 in " + fixed(t);
    }
    return o;
  }

  Outcome criterion_4() {
    Outcome     o;
    std::size_t count = 0;
    for (std::size_t k = 1; k <= 4; ++k) {
      for (auto const& ctx : builtin_contexts(k)) {
        auto r = check_mobius_transfer(ctx, 8);
        if (!r.report.passed()) {
          o.fail(ctx.quotient()->description() + ": " + *r.report.counterexample());
        }
        ++count;
      }
    }
    for (std::size_t k = 1; k <= 4; ++k) {
      auto ctx = context(k, repeated_letter());
      auto r   = check_mobius_transfer(ctx, 8);
      if (!(r.quotient_mobius == one_minus_letters(ctx.quotient(), 8, k))) {
        o.fail("repeated-letter, k=" + std::to_string(k) + ": " + to_text(r.quotient_mobius));
      }
      if (!r.support_disjoint || !r.coincides) {
        o.fail("repeated-letter, k=" + std::to_string(k) + ": mu0 and mu differ termwise");
      }
    }
    auto ctx = context(3, generated({{2}}));
    auto r   = check_mobius_transfer(ctx, 8);
    if (to_text(r.quotient_mobius) != "1 - a - b") {
      o.fail("generated({c}): " + to_text(r.quotient_mobius));
    }
    auto ab = mobius_series(free_monoid(letters(2)), 8);
    if (to_text(ab) != to_text(r.quotient_mobius)) {
      o.fail("generated({c}) differs from mu({a,b}*) = " + to_text(ab));
    }
    if (o.pass) {
      o.detail = std::to_string(count)
                 + " contexts at N=8; repeated-letter gives 1 - X, generated({c}) gives 1 - a - b";
    }
    return o;
  }

  Outcome criterion_5() {
    Outcome o;
    auto    ctx = context(3, ev_preimage(degree_at_least(2)));
    auto    q   = ctx.quotient();
    for (std::size_t n = 0; n <= 8; ++n) {
      auto got = render_all(*q, q->elements_of_order(n));
      std::vector<std::string> want;
      if (n == 0) {
        want = {"1"};
      } else if (n == 1) {
        want = {"a", "b", "c"};
      }
      if (got != want) {
        o.fail("unexpected carrier at order " + std::to_string(n));
      }
    }
    auto mu = mobius_series(q, 8);
    if (to_text(mu) != "1 - a - b - c") {
      o.fail("mu0 = " + to_text(mu));
    }
    if (o.pass) {
      o.detail = "carrier {1, a, b, c}, mu0 = 1 - a - b - c";
    }
    return o;
  }

  Outcome criterion_6() {
    Outcome     o;
    std::size_t count = 0;
    for (std::size_t k = 1; k <= 4; ++k) {
      for (auto const& kind : builtin_free_ideals(k)) {
        auto ctx = context(k, kind);
        auto r   = check_hilbert_relation(ctx, 10);
        if (!r.passed()) {
          o.fail(ctx.quotient()->description() + ": " + *r.counterexample());
        }
        ++count;
      }
    }
    auto sw = hilbert_prefix(*standard_words(3), 6);
    if (sw.counts != std::vector<std::size_t>{1, 3, 6, 6, 0, 0, 0}) {
      o.fail("standard words prefix " + to_text(sw));
    }
    auto ml = hilbert_prefix(*context(2, min_length(2)).quotient(), 5);
    if (ml.counts != std::vector<std::size_t>{1, 2, 0, 0, 0, 0}) {
      o.fail("min-length(2) prefix " + to_text(ml));
    }
    auto ml3 = hilbert_prefix(*context(2, min_length(3)).quotient(), 5);
    if (ml3.counts != std::vector<std::size_t>{1, 2, 4, 0, 0, 0}) {
      o.fail("min-length(3) prefix " + to_text(ml3));
    }
    if (o.pass) {
      o.detail = std::to_string(count) + " ideals, n <= 10; fixtures [1,3,6,6,0,...], [1,2,4,0,...]";
    }
    return o;
  }

  template <class Check>
  Outcome sampled(std::string const& what,
                  std::size_t        n,
                  std::size_t        pairs,
                  Check              check) {
    Outcome         o;
    std::mt19937_64 rng(20120917);
    std::size_t     monoids = 0;
    for (auto const& m : all_builtin_monoids()) {
      SeriesSampler<Integer> sampler(m, n, 3, 3, 8);
      for (std::size_t i = 0; i < pairs && o.pass; ++i) {
        if (auto d = check(m, sampler, rng)) {
          o.fail(m->description() + ": " + *d);
        }
      }
      ++monoids;
    }
    if (o.pass) {
      o.detail = what + " on " + std::to_string(pairs) + " samples x "
                 + std::to_string(monoids) + " monoids, N=" + std::to_string(n);
    }
    return o;
  }

  using Sampler = SeriesSampler<Integer>;
  using MaybeDiff = std::optional<std::string>;

  Outcome criterion_7() {
    return sampled("(1-f)f* = f*(1-f) = 1, <f*,1> = 1", 8, 100,
                   [](MonoidPtr const& m, Sampler const& s, std::mt19937_64& rng) -> MaybeDiff {
                     auto f   = s(rng, true);
                     auto one = S::one(m, 8);
                     auto fs  = star(f);
                     if (auto d = first_difference((one - f) * fs, one)) {
                       return "(1-f)f*: " + *d;
                     }
                     if (auto d = first_difference(fs * (one - f), one)) {
                       return "f*(1-f): " + *d;
                     }
                     if (augmentation(fs) != 1) {
                       return "augmentation of f* is not 1";
                     }
                     return std::nullopt;
                   });
  }

  Outcome criterion_8() {
    return sampled("term-pair = factorization convolution", 6, 100,
                   [](MonoidPtr const&, Sampler const& s, std::mt19937_64& rng) -> MaybeDiff {
                     auto f = s(rng), g = s(rng);
                     return first_difference(cauchy_product(f, g), convolve_oracle(f, g));
                   });
  }

  Outcome criterion_9() {
    return sampled("zeta transform then mobius inversion, both sides", 6, 100,
                   [](MonoidPtr const&, Sampler const& s, std::mt19937_64& rng) -> MaybeDiff {
                     auto f = s(rng);
                     if (auto d = first_difference(mobius_invert_left(zeta_transform_left(f)), f)) {
                       return "left: " + *d;
                     }
                     if (auto d = first_difference(mobius_invert_right(zeta_transform_right(f)), f)) {
                       return "right: " + *d;
                     }
                     return std::nullopt;
                   });
  }

  // A pair of letters x, y with s(x)s(y) != s(xy), if the ideal holds a word
  // of length two.
  std::optional<std::string> section_witness(QuotientContext const& ctx) {
    auto const k = ctx.base()->alphabet().size();
    for (letter_type x = 0; x < k; ++x) {
      for (letter_type y = 0; y < k; ++y) {
        auto fx = S::monomial(ctx.quotient(), 6, Word{x}, Integer(1));
        auto fy = S::monomial(ctx.quotient(), 6, Word{y}, Integer(1));
        auto lhs = section(ctx, fx * fy);
        auto rhs = section(ctx, fx) * section(ctx, fy);
        if (!(lhs == rhs)) {
          return "s(" + to_text(fx) + " * " + to_text(fy) + ") = " + to_text(lhs)
                 + " but s(" + to_text(fx) + ") s(" + to_text(fy) + ") = " + to_text(rhs);
        }
      }
    }
    return std::nullopt;
  }

  Outcome criterion_10() {
    Outcome         o;
    std::mt19937_64 rng(7);
    std::size_t     contexts = 0;
    for (std::size_t k = 1; k <= 4; ++k) {
      for (auto const& ctx : builtin_contexts(k)) {
        Sampler over_base(ctx.base(), 6, 3, 3, 8);
        Sampler over_quotient(ctx.quotient(), 6, 3, 3, 8);
        for (int i = 0; i < 100 && o.pass; ++i) {
          auto f = over_base(rng), g = over_base(rng);
          if (auto d = first_difference(phi(ctx, f * g), phi(ctx, f) * phi(ctx, g))) {
            o.fail(ctx.quotient()->description() + ": phi(fg): " + *d);
          }
          if (augmentation(f * g) != augmentation(f) * augmentation(g)) {
            o.fail(ctx.base()->description() + ": augmentation not multiplicative");
          }
          auto h = over_quotient(rng);
          if (auto d = first_difference(phi(ctx, section(ctx, h)), h)) {
            o.fail(ctx.quotient()->description() + ": phi(s(h)): " + *d);
          }
        }
        if (!(phi(ctx, S::one(ctx.base(), 6)) == S::one(ctx.quotient(), 6))) {
          o.fail("phi(1) != 1");
        }
        ++contexts;
      }
    }
    auto witness = section_witness(context(3, repeated_letter()));
    if (!witness) {
      o.fail("no non-multiplicativity witness for s over standard words");
    }
    if (o.pass) {
      o.detail = "100 samples x " + std::to_string(contexts) + " contexts; witness " + *witness;
    }
    return o;
  }

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"standard-words mobius series", criterion_1},
      {"finite-case nilpotency", criterion_2},
      {"unit-inverse suite", criterion_3},
      {"mobius transfer", criterion_4},
      {"ev-preimage example", criterion_5},
      {"hilbert relation", criterion_6},
      {"star and group properties", criterion_7},
      {"oracle equivalence", criterion_8},
      {"inversion roundtrip", criterion_9},
      {"morphism laws", criterion_10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto const& [name, run] = criteria[i];
    Outcome     o;
    auto        t0 = Clock::now();
    try {
      o = run();
    } catch (std::exception const& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    auto t = seconds_since(t0);
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << name << ": "
              << o.detail << " (" << fixed(t) << ")" << std::endl;
    failures += o.pass ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
