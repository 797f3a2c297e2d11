#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/container_hash/hash.hpp>

namespace mobius0 {

  using letter_type = std::uint32_t;

  // An ordered list of distinct, nonempty letter names. The position of a
  // letter fixes every lexicographic order used by the library.
  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> letters);
    Alphabet(std::initializer_list<std::string> letters)
        : Alphabet(std::vector<std::string>(letters)) {}

    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }
    [[nodiscard]] std::string const& operator[](letter_type i) const {
      return _letters.at(i);
    }
    [[nodiscard]] std::vector<std::string> const& letters() const noexcept {
      return _letters;
    }
    // Index of a letter name; throws SpecError for unknown names.
    [[nodiscard]] letter_type index(std::string const& name) const;
    [[nodiscard]] std::optional<letter_type>
    find(std::string const& name) const;
    // True when every letter is a single character, in which case words are
    // rendered by plain concatenation.
    [[nodiscard]] bool single_characters() const noexcept;

    bool operator==(Alphabet const&) const = default;

   private:
    std::vector<std::string> _letters;
  };

  // Canonical encoding of a nonzero monoid element. Its meaning is fixed by
  // the owning monoid: a sequence of letter indices for monoids built on a
  // free monoid, an exponent vector (one entry per letter) for monoids built
  // on a free commutative monoid. Equal elements have identical encodings.
  struct Word {
    std::vector<letter_type> data;

    Word() = default;
    explicit Word(std::vector<letter_type> d) : data(std::move(d)) {}
    Word(std::initializer_list<letter_type> d) : data(d) {}

    [[nodiscard]] std::size_t size() const noexcept {
      return data.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return data.empty();
    }

    auto operator<=>(Word const&) const = default;
    bool operator==(Word const&) const = default;
  };

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept {
      return boost::hash_range(w.data.begin(), w.data.end());
    }
  };

  // Result of a product in a monoid with zero: either the zero, or a word.
  class MonoidValue {
   public:
    MonoidValue() = default;  // zero
    explicit MonoidValue(Word w) : _word(std::move(w)) {}

    static MonoidValue zero() {
      return MonoidValue();
    }

    [[nodiscard]] bool is_zero() const noexcept {
      return !_word.has_value();
    }
    [[nodiscard]] bool is_nonzero() const noexcept {
      return _word.has_value();
    }
    // Precondition: is_nonzero().
    [[nodiscard]] Word const& word() const& {
      return *_word;
    }
    [[nodiscard]] Word&& word() && {
      return std::move(*_word);
    }

    bool operator==(MonoidValue const&) const = default;

   private:
    std::optional<Word> _word;
  };

}  // namespace mobius0
