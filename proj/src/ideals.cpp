#include "mobius0/ideals.hpp"

#include <algorithm>

#include "mobius0/errors.hpp"
#include "mobius0/quotient_maps.hpp"

namespace mobius0 {

  namespace {
    template <class... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };
    template <class... Ts>
    overloaded(Ts...) -> overloaded<Ts...>;
  }  // namespace

  std::string IdealKind::name() const {
    return std::visit(
        overloaded{
            [](ideal::RepeatedLetter const&) -> std::string {
              return "repeated-letter";
            },
            [](ideal::MinLength const& k) -> std::string {
              return "min-length(" + std::to_string(k.n) + ")";
            },
            [](ideal::Generated const& k) -> std::string {
              return "generated(" + std::to_string(k.words.size())
                     + " words)";
            },
            [](ideal::DegreeAtLeast const& k) -> std::string {
              return "degree-at-least(" + std::to_string(k.d) + ")";
            },
            [](ideal::EvPreimage const& k) -> std::string {
              return "ev-preimage(" + (k.inner ? k.inner->name() : "?") + ")";
            }},
        kind);
  }

  IdealKind repeated_letter() {
    return {ideal::RepeatedLetter{}};
  }

  IdealKind min_length(std::size_t n) {
    return {ideal::MinLength{n}};
  }

  IdealKind generated(std::vector<std::vector<letter_type>> words) {
    return {ideal::Generated{std::move(words)}};
  }

  IdealKind degree_at_least(std::size_t d) {
    return {ideal::DegreeAtLeast{d}};
  }

  IdealKind ev_preimage(IdealKind inner) {
    return {ideal::EvPreimage{std::make_shared<IdealKind const>(std::move(inner))}};
  }

  IdealSpec::IdealSpec(IdealKind kind, MonoidPtr base)
      : _kind(std::move(kind)), _base(std::move(base)) {
    if (!_base) {
      throw SpecError("ideal without a base monoid");
    }
    auto const& alphabet = _base->alphabet();
    std::visit(
        overloaded{
            [](ideal::RepeatedLetter const&) {},
            [](ideal::MinLength const& k) {
              if (k.n == 0) {
                throw SpecError("min-length ideal needs n >= 1");
              }
            },
            [&](ideal::Generated const& k) {
              for (auto const& g : k.words) {
                for (auto l : g) {
                  if (l >= alphabet.size()) {
                    throw SpecError("generator uses a letter outside the "
                                    "alphabet");
                  }
                }
              }
            },
            [&](ideal::DegreeAtLeast const& k) {
              if (k.d == 0) {
                throw SpecError("degree-at-least ideal needs d >= 1");
              }
              if (_base->shape() != WordShape::exponents) {
                throw SpecError("degree-at-least needs a commutative base; "
                                "use ev-preimage over a free base");
              }
            },
            [&](ideal::EvPreimage const& k) {
              if (_base->shape() != WordShape::sequence) {
                throw SpecError("ev-preimage needs a free (noncommutative) base");
              }
              if (!k.inner) {
                throw SpecError("ev-preimage without inner ideal");
              }
              _inner = std::make_shared<IdealSpec const>(
                  *k.inner, free_commutative_monoid(alphabet));
            }},
        _kind.kind);
  }

  bool IdealSpec::contains(Word const& w) const {
    if (!_base->contains(w)) {
      throw MembershipError("ideal membership queried for a word outside "
                            + _base->description());
    }
    return contains_no_checks(w);
  }

  bool IdealSpec::contains_no_checks(Word const& w) const {
    bool const seq = _base->shape() == WordShape::sequence;
    return std::visit(
        overloaded{
            [&](ideal::RepeatedLetter const&) {
              if (!seq) {
                return std::any_of(w.data.begin(), w.data.end(), [](auto e) {
                  return e >= 2;
                });
              }
              std::vector<bool> seen(_base->alphabet().size(), false);
              for (auto l : w.data) {
                if (seen[l]) {
                  return true;
                }
                seen[l] = true;
              }
              return false;
            },
            [&](ideal::MinLength const& k) {
              return _base->order_no_checks(w) >= k.n;
            },
            [&](ideal::Generated const& k) {
              for (auto const& g : k.words) {
                if (g.empty()) {
                  return true;
                }
                if (seq) {
                  if (std::search(w.data.begin(), w.data.end(), g.begin(), g.end())
                      != w.data.end()) {
                    return true;
                  }
                } else {
                  std::vector<letter_type> need(w.size(), 0);
                  for (auto l : g) {
                    ++need[l];
                  }
                  if (std::equal(need.begin(), need.end(), w.data.begin(),
                                 [](auto a, auto b) { return a <= b; })) {
                    return true;
                  }
                }
              }
              return false;
            },
            [&](ideal::DegreeAtLeast const& k) {
              return _base->order_no_checks(w) >= k.d;
            },
            [&](ideal::EvPreimage const&) {
              return _inner->contains_no_checks(ev(w, _base->alphabet().size()));
            }},
        _kind.kind);
  }

  bool IdealSpec::is_proper() const {
    return !contains_no_checks(_base->identity());
  }

  CheckReport validate_ideal(IdealSpec const& spec, std::size_t max_order) {
    CheckReport report("ideal");
    auto const& m = *spec.base();
    if (!spec.is_proper()) {
      report.fail("not proper: the identity lies in " + spec.kind().name());
    }
    std::vector<std::vector<Word>> grades(max_order + 1);
    for (std::size_t n = 0; n <= max_order; ++n) {
      grades[n] = m.elements_of_order(n);
    }
    for (std::size_t p = 0; p <= max_order; ++p) {
      for (auto const& u : grades[p]) {
        if (!spec.contains_no_checks(u)) {
          continue;
        }
        for (std::size_t q = 0; p + q <= max_order; ++q) {
          for (auto const& v : grades[q]) {
            auto uv = m.product_no_checks(u, v);
            if (uv.is_nonzero() && !spec.contains_no_checks(uv.word())) {
              report.fail("right absorption fails: " + m.render(u) + " * "
                          + m.render(v) + " leaves the ideal");
            }
            auto vu = m.product_no_checks(v, u);
            if (vu.is_nonzero() && !spec.contains_no_checks(vu.word())) {
              report.fail("left absorption fails: " + m.render(v) + " * "
                          + m.render(u) + " leaves the ideal");
            }
          }
        }
      }
    }
    return report;
  }

}  // namespace mobius0
