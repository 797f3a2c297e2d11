#include "mobius0/monoid.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "mobius0/errors.hpp"
#include "mobius0/ideals.hpp"
#include "mobius0/io.hpp"

namespace mobius0 {

  ////////////////////////////////////////////////////////////////////////
  // ZeroMonoid
  ////////////////////////////////////////////////////////////////////////

  ZeroMonoid::ZeroMonoid(Alphabet alphabet,
                         WordShape shape,
                         std::string description)
      : _alphabet(std::move(alphabet)),
        _shape(shape),
        _description(std::move(description)) {}

  Word ZeroMonoid::identity() const {
    if (_shape == WordShape::sequence) {
      return Word();
    }
    return Word(std::vector<letter_type>(_alphabet.size(), 0));
  }

  bool ZeroMonoid::contains(Word const& x) const {
    return do_contains(x);
  }

  void ZeroMonoid::check_member(Word const& x, char const* where) const {
    if (!do_contains(x)) {
      throw MembershipError(std::string(where) + ": word is not an element of "
                            + _description);
    }
  }

  MonoidValue ZeroMonoid::product(Word const& x, Word const& y) const {
    check_member(x, "product");
    check_member(y, "product");
    return product_no_checks(x, y);
  }

  std::size_t ZeroMonoid::order(Word const& x) const {
    check_member(x, "order");
    return order_no_checks(x);
  }

  std::size_t ZeroMonoid::order_no_checks(Word const& x) const {
    if (_shape == WordShape::sequence) {
      return x.size();
    }
    return std::accumulate(x.data.begin(), x.data.end(), std::size_t(0));
  }

  std::vector<Word> ZeroMonoid::elements_of_order(std::size_t n) const {
    std::vector<Word> result;
    do_for_each_element_of_order(n,
                                 [&result](Word const& w) { result.push_back(w); });
    return result;
  }

  void ZeroMonoid::for_each_element_of_order(std::size_t            n,
                                             element_visitor const& f) const {
    do_for_each_element_of_order(n, f);
  }

  std::size_t ZeroMonoid::count_of_order(std::size_t n) const {
    std::size_t count = 0;
    do_for_each_element_of_order(n, [&count](Word const&) { ++count; });
    return count;
  }

  std::vector<std::pair<Word, Word>>
  ZeroMonoid::factorizations(Word const& x) const {
    check_member(x, "factorizations");
    auto result = do_factorizations(x);
    std::sort(result.begin(), result.end(), [this](auto const& p, auto const& q) {
      auto c = compare(p.first, q.first);
      if (c != 0) {
        return c < 0;
      }
      return compare(p.second, q.second) < 0;
    });
    return result;
  }

  std::vector<letter_type> ZeroMonoid::spell(Word const& x) const {
    if (_shape == WordShape::sequence) {
      return x.data;
    }
    std::vector<letter_type> letters;
    for (letter_type i = 0; i < x.size(); ++i) {
      letters.insert(letters.end(), x.data[i], i);
    }
    return letters;
  }

  Word ZeroMonoid::from_letters(std::span<letter_type const> letters) const {
    Word w;
    if (_shape == WordShape::sequence) {
      w.data.assign(letters.begin(), letters.end());
    } else {
      w = identity();
      for (auto l : letters) {
        if (l >= w.size()) {
          throw MembershipError("letter index out of range");
        }
        ++w.data[l];
      }
    }
    check_member(w, "from_letters");
    return w;
  }

  Word ZeroMonoid::from_names(std::vector<std::string> const& names) const {
    std::vector<letter_type> letters;
    letters.reserve(names.size());
    for (auto const& n : names) {
      auto i = _alphabet.find(n);
      if (!i) {
        throw MembershipError("unknown letter \"" + n + "\"");
      }
      letters.push_back(*i);
    }
    return from_letters(letters);
  }

  std::string ZeroMonoid::render(Word const& x) const {
    auto letters = spell(x);
    if (letters.empty()) {
      return "1";
    }
    bool const  plain = _alphabet.single_characters();
    std::string out;
    for (auto l : letters) {
      if (!plain && !out.empty()) {
        out += '.';
      }
      out += _alphabet[l];
    }
    return out;
  }

  std::strong_ordering ZeroMonoid::compare(Word const& x, Word const& y) const {
    auto ox = order_no_checks(x), oy = order_no_checks(y);
    if (ox != oy) {
      return ox <=> oy;
    }
    if (_shape == WordShape::sequence) {
      return x.data <=> y.data;
    }
    // For exponent vectors of equal degree, the spelling of x precedes the
    // spelling of y exactly when x is larger in the first differing entry.
    return y.data <=> x.data;
  }

  bool same_monoid(ZeroMonoid const& a, ZeroMonoid const& b) {
    return &a == &b || a.description() == b.description();
  }

  namespace {

    std::string base_description(char const* type, Alphabet const& a) {
      nlohmann::json j;
      j["type"]     = type;
      j["alphabet"] = a.letters();
      return j.dump();
    }

    //////////////////////////////////////////////////////////////////////
    // X*
    //////////////////////////////////////////////////////////////////////

    class FreeMonoid final : public ZeroMonoid {
     public:
      explicit FreeMonoid(Alphabet a)
          : ZeroMonoid(a, WordShape::sequence, base_description("free", a)) {}

      bool has_reachable_zero() const noexcept override {
        return false;
      }

      MonoidValue product_no_checks(Word const& x,
                                    Word const& y) const override {
        Word z;
        z.data.reserve(x.size() + y.size());
        z.data.insert(z.data.end(), x.data.begin(), x.data.end());
        z.data.insert(z.data.end(), y.data.begin(), y.data.end());
        return MonoidValue(std::move(z));
      }

     protected:
      bool do_contains(Word const& x) const override {
        auto const k = alphabet().size();
        return std::all_of(
            x.data.begin(), x.data.end(), [k](letter_type l) { return l < k; });
      }

      void do_for_each_element_of_order(std::size_t            n,
                                        element_visitor const& f) const override {
        auto const k = static_cast<letter_type>(alphabet().size());
        Word       w(std::vector<letter_type>(n, 0));
        if (n > 0 && k == 0) {
          return;
        }
        while (true) {
          f(w);
          // Odometer increment, last position fastest.
          std::size_t i = n;
          while (i > 0 && w.data[i - 1] + 1 == k) {
            w.data[i - 1] = 0;
            --i;
          }
          if (i == 0) {
            return;
          }
          ++w.data[i - 1];
        }
      }

      std::vector<std::pair<Word, Word>>
      do_factorizations(Word const& x) const override {
        std::vector<std::pair<Word, Word>> result;
        result.reserve(x.size() + 1);
        for (std::size_t i = 0; i <= x.size(); ++i) {
          result.emplace_back(
              Word(std::vector<letter_type>(x.data.begin(),
                                            x.data.begin() + i)),
              Word(std::vector<letter_type>(x.data.begin() + i, x.data.end())));
        }
        return result;
      }
    };

    //////////////////////////////////////////////////////////////////////
    // Free commutative monoid
    //////////////////////////////////////////////////////////////////////

    class FreeCommutativeMonoid final : public ZeroMonoid {
     public:
      explicit FreeCommutativeMonoid(Alphabet a)
          : ZeroMonoid(a,
                       WordShape::exponents,
                       base_description("free-commutative", a)) {}

      bool has_reachable_zero() const noexcept override {
        return false;
      }

      MonoidValue product_no_checks(Word const& x,
                                    Word const& y) const override {
        Word z = x;
        for (std::size_t i = 0; i < z.size(); ++i) {
          z.data[i] += y.data[i];
        }
        return MonoidValue(std::move(z));
      }

     protected:
      bool do_contains(Word const& x) const override {
        return x.size() == alphabet().size();
      }

      void do_for_each_element_of_order(std::size_t            n,
                                        element_visitor const& f) const override {
        auto const k = static_cast<letter_type>(alphabet().size());
        if (k == 0) {
          if (n == 0) {
            f(identity());
          }
          return;
        }
        // Nondecreasing letter sequences of length n, in lexicographic order.
        std::vector<letter_type> seq(n, 0);
        while (true) {
          Word w = identity();
          for (auto l : seq) {
            ++w.data[l];
          }
          f(w);
          std::size_t i = n;
          while (i > 0 && seq[i - 1] + 1 == k) {
            --i;
          }
          if (i == 0) {
            return;
          }
          auto const next = seq[i - 1] + 1;
          std::fill(seq.begin() + (i - 1), seq.end(), next);
        }
      }

      std::vector<std::pair<Word, Word>>
      do_factorizations(Word const& x) const override {
        std::vector<std::pair<Word, Word>> result;
        Word y = identity();
        while (true) {
          Word z = x;
          for (std::size_t i = 0; i < z.size(); ++i) {
            z.data[i] -= y.data[i];
          }
          result.emplace_back(y, std::move(z));
          std::size_t i = y.size();
          while (i > 0 && y.data[i - 1] == x.data[i - 1]) {
            y.data[i - 1] = 0;
            --i;
          }
          if (i == 0) {
            return result;
          }
          ++y.data[i - 1];
        }
      }
    };

    //////////////////////////////////////////////////////////////////////
    // M with a zero adjoined
    //////////////////////////////////////////////////////////////////////

    class AdjoinedZero final : public ZeroMonoid {
     public:
      explicit AdjoinedZero(MonoidPtr base)
          : ZeroMonoid(base->alphabet(), base->shape(), describe(*base)),
            _base(std::move(base)) {}

      bool has_reachable_zero() const noexcept override {
        return true;
      }

      MonoidValue product_no_checks(Word const& x,
                                    Word const& y) const override {
        return _base->product_no_checks(x, y);
      }

      std::size_t order_no_checks(Word const& x) const override {
        return _base->order_no_checks(x);
      }

     protected:
      bool do_contains(Word const& x) const override {
        return _base->contains(x);
      }

      void do_for_each_element_of_order(std::size_t            n,
                                        element_visitor const& f) const override {
        _base->for_each_element_of_order(n, f);
      }

      std::vector<std::pair<Word, Word>>
      do_factorizations(Word const& x) const override {
        return _base->factorizations(x);
      }

     private:
      static std::string describe(ZeroMonoid const& base) {
        nlohmann::json j;
        j["type"] = "adjoin-zero";
        j["base"] = nlohmann::json::parse(base.description());
        return j.dump();
      }

      MonoidPtr _base;
    };

    //////////////////////////////////////////////////////////////////////
    // Rees quotient M/I
    //////////////////////////////////////////////////////////////////////

    class ReesQuotient final : public ZeroMonoid {
     public:
      explicit ReesQuotient(IdealSpec ideal)
          : ZeroMonoid(ideal.base()->alphabet(),
                       ideal.base()->shape(),
                       describe(ideal)),
            _ideal(std::move(ideal)),
            _base(_ideal.base()) {}

      bool has_reachable_zero() const noexcept override {
        return true;
      }

      MonoidValue product_no_checks(Word const& x,
                                    Word const& y) const override {
        auto z = _base->product_no_checks(x, y);
        if (z.is_nonzero() && _ideal.contains_no_checks(z.word())) {
          return MonoidValue::zero();
        }
        return z;
      }

      std::size_t order_no_checks(Word const& x) const override {
        return _base->order_no_checks(x);
      }

     protected:
      bool do_contains(Word const& x) const override {
        return _base->contains(x) && !_ideal.contains_no_checks(x);
      }

      void do_for_each_element_of_order(std::size_t            n,
                                        element_visitor const& f) const override {
        _base->for_each_element_of_order(n, [&](Word const& w) {
          if (!_ideal.contains_no_checks(w)) {
            f(w);
          }
        });
      }

      std::vector<std::pair<Word, Word>>
      do_factorizations(Word const& x) const override {
        auto result = _base->factorizations(x);
        std::erase_if(result, [this](auto const& p) {
          return _ideal.contains_no_checks(p.first)
                 || _ideal.contains_no_checks(p.second);
        });
        return result;
      }

     private:
      static std::string describe(IdealSpec const& ideal) {
        nlohmann::json j;
        j["type"]  = "rees";
        j["base"]  = nlohmann::json::parse(ideal.base()->description());
        j["ideal"] = ideal_kind_to_json(ideal.kind(), ideal.base()->alphabet());
        return j.dump();
      }

      IdealSpec _ideal;
      MonoidPtr _base;
    };

  }  // namespace

  MonoidPtr free_monoid(Alphabet alphabet) {
    return std::make_shared<FreeMonoid>(std::move(alphabet));
  }

  MonoidPtr free_commutative_monoid(Alphabet alphabet) {
    return std::make_shared<FreeCommutativeMonoid>(std::move(alphabet));
  }

  MonoidPtr adjoin_zero(MonoidPtr base) {
    if (!base) {
      throw SpecError("adjoin_zero: null base monoid");
    }
    return std::make_shared<AdjoinedZero>(std::move(base));
  }

  MonoidPtr rees_quotient(IdealSpec ideal) {
    if (!ideal.is_proper()) {
      throw SpecError("ideal is not proper: the identity lies in "
                      + ideal.kind().name());
    }
    return std::make_shared<ReesQuotient>(std::move(ideal));
  }

  ////////////////////////////////////////////////////////////////////////
  // validate_locally_finite
  ////////////////////////////////////////////////////////////////////////

  CheckReport validate_locally_finite(ZeroMonoid const& m,
                                      std::size_t       max_order) {
    CheckReport report("locally-finite");
    auto const  one = m.identity();
    if (!m.contains(one)) {
      report.fail("identity is not an element");
      return report;
    }
    if (m.order_no_checks(one) != 0) {
      report.fail("identity has nonzero order");
    }

    std::vector<std::vector<Word>> grades(max_order + 1);
    for (std::size_t n = 0; n <= max_order; ++n) {
      grades[n] = m.elements_of_order(n);
      auto const& g = grades[n];
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (!m.contains(g[i])) {
          report.fail("enumerated word " + m.render(g[i])
                      + " is not an element");
          continue;
        }
        if (m.order_no_checks(g[i]) != n) {
          report.fail("element " + m.render(g[i]) + " listed in grade "
                      + std::to_string(n) + " has another order");
        }
        if (n > 0 && g[i] == one) {
          report.fail("identity listed with positive order");
        }
        if (i > 0 && m.compare(g[i - 1], g[i]) >= 0) {
          report.fail("grade " + std::to_string(n)
                      + " is not strictly sorted at " + m.render(g[i]));
        }
      }
    }
    if (grades[0].size() != 1 || grades[0][0] != one) {
      report.fail("grade 0 must consist of the identity alone");
    }

    for (std::size_t n = 1; n <= max_order; ++n) {
      for (auto const& x : grades[n]) {
        auto xx = m.product_no_checks(x, x);
        if (xx.is_nonzero() && xx.word() == x) {
          report.fail("non-identity idempotent " + m.render(x));
        }
        for (auto const& [y, z] : m.factorizations(x)) {
          if (y == one || z == one) {
            continue;
          }
          if (m.order_no_checks(y) >= n || m.order_no_checks(z) >= n) {
            report.fail("factorization of " + m.render(x) + " into "
                        + m.render(y) + " * " + m.render(z)
                        + " does not shorten");
          }
        }
      }
    }

    for (std::size_t p = 1; p <= max_order; ++p) {
      for (std::size_t q = 1; p + q <= max_order; ++q) {
        for (auto const& x : grades[p]) {
          for (auto const& y : grades[q]) {
            auto z = m.product_no_checks(x, y);
            if (z.is_zero()) {
              continue;
            }
            if (z.word() == one) {
              report.fail("non-identity invertible element " + m.render(x));
            } else if (m.order_no_checks(z.word()) < p + q) {
              report.fail("order drops in product " + m.render(x) + " * "
                          + m.render(y));
            }
          }
        }
      }
    }
    return report;
  }

}  // namespace mobius0
