#include "mobius0/verify.hpp"

#include <algorithm>
#include <random>

#include "mobius0/hilbert.hpp"
#include "mobius0/io.hpp"
#include "mobius0/sampling.hpp"
#include "mobius0/series.hpp"

namespace mobius0 {

  namespace {
    using S = Series<Integer>;

    void expect_equal(CheckReport&       report,
                      S const&           lhs,
                      S const&           rhs,
                      std::string const& what) {
      if (report.passed()) {
        if (auto d = first_difference(lhs, rhs)) {
          report.fail(what + ": " + *d);
        }
      }
    }
  }  // namespace

  std::optional<QuotientContext>
  quotient_context_from_json(nlohmann::json const& j) {
    if (!j.is_object() || j.value("type", "") != "rees") {
      return std::nullopt;
    }
    auto base = monoid_from_json(j.at("base"));
    auto kind = ideal_kind_from_json(j.at("ideal"), base->alphabet());
    return QuotientContext(IdealSpec(std::move(kind), std::move(base)));
  }

  std::vector<CheckReport> run_identity_suite(MonoidPtr const&       m,
                                              QuotientContext const* ctx,
                                              SuiteOptions const&    options) {
    std::vector<CheckReport> out;
    auto const               n = options.truncation;
    std::mt19937_64          rng(options.seed);

    out.push_back(validate_locally_finite(*m, std::min<std::size_t>(n, 6)));

    {
      CheckReport r("unit-inverse");
      auto        zeta = characteristic_series(m, n);
      auto        mu   = mobius_series(m, n);
      auto        one  = S::one(m, n);
      expect_equal(r, cauchy_product(zeta, mu), one, "zeta * mu");
      expect_equal(r, cauchy_product(mu, zeta), one, "mu * zeta");
      out.push_back(std::move(r));
    }

    SeriesSampler<Integer> sampler(m, n, 3, 3, 6);
    {
      CheckReport r("oracle-equivalence");
      for (std::size_t i = 0; i < options.samples && r.passed(); ++i) {
        auto f = sampler(rng), g = sampler(rng);
        expect_equal(r, cauchy_product(f, g), convolve_oracle(f, g), "f * g");
      }
      out.push_back(std::move(r));
    }
    {
      CheckReport r("star");
      auto const  one = S::one(m, n);
      for (std::size_t i = 0; i < options.samples && r.passed(); ++i) {
        auto f  = sampler(rng, true);
        auto fs = star(f);
        expect_equal(r, cauchy_product(one - f, fs), one, "(1 - f) f*");
        expect_equal(r, cauchy_product(fs, one - f), one, "f* (1 - f)");
        if (augmentation(fs) != 1) {
          r.fail("constant term of f* is not 1");
        }
      }
      out.push_back(std::move(r));
    }
    {
      CheckReport r("inversion-roundtrip");
      auto        zeta = characteristic_series(m, n);
      auto        mu   = mobius_series(m, n);
      for (std::size_t i = 0; i < options.samples && r.passed(); ++i) {
        auto f = sampler(rng);
        expect_equal(r, cauchy_product(mu, cauchy_product(zeta, f)), f, "left");
        expect_equal(r, cauchy_product(cauchy_product(f, zeta), mu), f, "right");
      }
      out.push_back(std::move(r));
    }
    {
      CheckReport r("augmentation-morphism");
      for (std::size_t i = 0; i < options.samples && r.passed(); ++i) {
        auto f = sampler(rng), g = sampler(rng);
        if (augmentation(cauchy_product(f, g)) != augmentation(f) * augmentation(g)) {
          r.fail("epsilon(fg) != epsilon(f) epsilon(g)");
        }
      }
      out.push_back(std::move(r));
    }

    if (ctx == nullptr) {
      return out;
    }

    out.push_back(validate_ideal(ctx->ideal(), std::min<std::size_t>(n, 6)));

    SeriesSampler<Integer> base_sampler(ctx->base(), n, 3, 3, 6);
    SeriesSampler<Integer> quotient_sampler(ctx->quotient(), n, 3, 3, 6);
    {
      CheckReport r("phi-morphism");
      expect_equal(r, phi(*ctx, S::one(ctx->base(), n)), S::one(ctx->quotient(), n),
                   "phi(1)");
      for (std::size_t i = 0; i < options.samples && r.passed(); ++i) {
        auto f = base_sampler(rng), g = base_sampler(rng);
        expect_equal(r, phi(*ctx, cauchy_product(f, g)),
                     cauchy_product(phi(*ctx, f), phi(*ctx, g)), "phi(fg)");
      }
      out.push_back(std::move(r));
    }
    {
      CheckReport r("phi-section");
      for (std::size_t i = 0; i < options.samples && r.passed(); ++i) {
        auto f = quotient_sampler(rng);
        expect_equal(r, phi(*ctx, section(*ctx, f)), f, "phi(s(f))");
      }
      out.push_back(std::move(r));
    }
    {
      CheckReport r("inverse-via-section");
      for (std::size_t i = 0; i < options.samples && r.passed(); ++i) {
        r.absorb(check_lemma_inverse_via_section(*ctx, quotient_sampler.unit(rng)));
      }
      r.absorb(check_lemma_inverse_via_section(
          *ctx, characteristic_series(ctx->quotient(), n)));
      out.push_back(std::move(r));
    }
    out.push_back(check_mobius_transfer(*ctx, n).report);
    if (is_free_monoid(*ctx->base())) {
      out.push_back(check_hilbert_relation(*ctx, n));
    }
    return out;
  }

}  // namespace mobius0
