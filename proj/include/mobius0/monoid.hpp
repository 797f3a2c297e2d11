#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mobius0/report.hpp"
#include "mobius0/word.hpp"

namespace mobius0 {

  class IdealSpec;

  // How the words of a monoid are encoded, see Word.
  enum class WordShape { sequence, exponents };

  //! Abstract locally finite monoid with zero.
  //!
  //! Elements are the nonzero values, encoded canonically as Word; the zero is
  //! never represented as a Word and only appears as the zero MonoidValue
  //! returned by product(). A monoid without zero (free or free commutative)
  //! is served through the same interface: its zero is simply never reached.
  //!
  //! The public member functions check that their arguments are elements and
  //! throw MembershipError otherwise. The `*_no_checks` variants skip that
  //! check and are meant for inner loops over words already known to belong
  //! to the monoid.
  //!
  //! Realizations are immutable after construction and safe to share between
  //! threads.
  class ZeroMonoid {
   public:
    using element_visitor = std::function<void(Word const&)>;

    virtual ~ZeroMonoid() = default;

    ZeroMonoid(ZeroMonoid const&)            = delete;
    ZeroMonoid& operator=(ZeroMonoid const&) = delete;

    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] WordShape shape() const noexcept {
      return _shape;
    }
    // Canonical JSON description; two monoids with the same description are
    // the same monoid.
    [[nodiscard]] std::string const& description() const noexcept {
      return _description;
    }
    // False for monoids whose product never yields the zero.
    [[nodiscard]] virtual bool has_reachable_zero() const noexcept = 0;

    [[nodiscard]] Word identity() const;
    [[nodiscard]] bool contains(Word const& x) const;

    [[nodiscard]] MonoidValue product(Word const& x, Word const& y) const;
    [[nodiscard]] std::size_t order(Word const& x) const;

    // The nonzero elements of order n, sorted by the lexicographic order of
    // their spelling.
    [[nodiscard]] std::vector<Word> elements_of_order(std::size_t n) const;
    // Same elements, same order, without materializing the list.
    void for_each_element_of_order(std::size_t n, element_visitor const& f) const;
    [[nodiscard]] std::size_t count_of_order(std::size_t n) const;

    // All pairs (y, z) with product(y, z) = x, sorted by (y, z).
    [[nodiscard]] std::vector<std::pair<Word, Word>>
    factorizations(Word const& x) const;

    // Letter indices spelling x: the word itself for sequence-shaped monoids,
    // the sorted multiset of letters for exponent-shaped ones.
    [[nodiscard]] std::vector<letter_type> spell(Word const& x) const;
    // Inverse of spell (up to commutation); throws MembershipError if the
    // resulting word is not an element.
    [[nodiscard]] Word from_letters(std::span<letter_type const> letters) const;
    [[nodiscard]] Word from_names(std::vector<std::string> const& names) const;
    // Human readable form, "1" for the identity.
    [[nodiscard]] std::string render(Word const& x) const;

    // Total order on elements: by order, then lexicographically by spelling.
    [[nodiscard]] std::strong_ordering compare(Word const& x,
                                               Word const& y) const;

    [[nodiscard]] virtual MonoidValue
    product_no_checks(Word const& x, Word const& y) const = 0;
    // Length of sequence-shaped words, total degree of exponent vectors.
    [[nodiscard]] virtual std::size_t order_no_checks(Word const& x) const;

   protected:
    ZeroMonoid(Alphabet alphabet, WordShape shape, std::string description);

    // Whether x is a well-formed word of the underlying free (commutative)
    // monoid that is not the zero.
    [[nodiscard]] virtual bool do_contains(Word const& x) const = 0;
    virtual void do_for_each_element_of_order(std::size_t            n,
                                              element_visitor const& f) const
        = 0;
    [[nodiscard]] virtual std::vector<std::pair<Word, Word>>
    do_factorizations(Word const& x) const = 0;

    void check_member(Word const& x, char const* where) const;

   private:
    Alphabet    _alphabet;
    WordShape   _shape;
    std::string _description;
  };

  using MonoidPtr = std::shared_ptr<ZeroMonoid const>;

  // Whether two handles denote the same monoid.
  [[nodiscard]] bool same_monoid(ZeroMonoid const& a, ZeroMonoid const& b);

  // The free monoid X*, product is concatenation, order is length.
  [[nodiscard]] MonoidPtr free_monoid(Alphabet alphabet);
  // The free commutative monoid over X, product is the sum of exponent
  // vectors, order is total degree.
  [[nodiscard]] MonoidPtr free_commutative_monoid(Alphabet alphabet);
  // M with a new absorbing element adjoined.
  [[nodiscard]] MonoidPtr adjoin_zero(MonoidPtr base);
  // The Rees quotient of the ideal's base monoid by the ideal. Throws
  // SpecError unless the ideal is proper.
  [[nodiscard]] MonoidPtr rees_quotient(IdealSpec ideal);

  // Sample-bounded check that m behaves as a locally finite monoid with zero:
  // every element of order at most max_order is inspected for non-identity
  // idempotents, for products whose order drops below the sum of the orders,
  // for non-identity invertible elements, and for factorizations that do not
  // shorten. An empty report means every sampled element passed.
  [[nodiscard]] CheckReport validate_locally_finite(ZeroMonoid const& m,
                                                    std::size_t max_order);

}  // namespace mobius0
