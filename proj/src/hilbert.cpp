#include "mobius0/hilbert.hpp"

namespace mobius0 {

  HilbertPrefix hilbert_prefix(ZeroMonoid const& m, std::size_t terms) {
    HilbertPrefix h;
    h.counts.reserve(terms + 1);
    for (std::size_t n = 0; n <= terms; ++n) {
      h.counts.push_back(m.count_of_order(n));
    }
    return h;
  }

  bool is_free_monoid(ZeroMonoid const& m) {
    return same_monoid(m, *free_monoid(m.alphabet()));
  }

  CheckReport check_hilbert_relation(QuotientContext const& ctx,
                                     std::size_t            terms) {
    if (!is_free_monoid(*ctx.base())) {
      throw SpecError("the Hilbert relation is stated over a free monoid base");
    }
    CheckReport report("hilbert-relation");
    auto const  k        = static_cast<Integer>(ctx.base()->alphabet().size());
    auto const  quotient = hilbert_prefix(*ctx.quotient(), terms);
    Integer     all      = 1;  // |X|^n
    for (std::size_t n = 0; n <= terms; ++n, all *= k) {
      std::size_t in_ideal = 0;
      ctx.base()->for_each_element_of_order(n, [&](Word const& w) {
        if (ctx.ideal().contains_no_checks(w)) {
          ++in_ideal;
        }
      });
      if (n == 0 && in_ideal != 0) {
        report.fail("I(0) is not empty");
      }
      if (Integer(quotient.counts[n]) + in_ideal != all) {
        report.fail("grade " + std::to_string(n) + ": "
                    + std::to_string(quotient.counts[n]) + " + "
                    + std::to_string(in_ideal) + " != " + all.str());
      }
    }
    return report;
  }

  std::string to_text(HilbertPrefix const& h) {
    std::vector<Integer> c(h.counts.begin(), h.counts.end());
    return render_polynomial(c);
  }

}  // namespace mobius0
