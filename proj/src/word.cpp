#include "mobius0/word.hpp"

#include <algorithm>
#include <unordered_set>

#include "mobius0/errors.hpp"

namespace mobius0 {

  Alphabet::Alphabet(std::vector<std::string> letters)
      : _letters(std::move(letters)) {
    std::unordered_set<std::string> seen;
    for (auto const& l : _letters) {
      if (l.empty()) {
        throw SpecError("alphabet letters must be nonempty strings");
      }
      if (!seen.insert(l).second) {
        throw SpecError("duplicate letter in alphabet: \"" + l + "\"");
      }
    }
  }

  std::optional<letter_type> Alphabet::find(std::string const& name) const {
    auto it = std::find(_letters.begin(), _letters.end(), name);
    if (it == _letters.end()) {
      return std::nullopt;
    }
    return static_cast<letter_type>(it - _letters.begin());
  }

  letter_type Alphabet::index(std::string const& name) const {
    if (auto i = find(name)) {
      return *i;
    }
    throw SpecError("unknown letter \"" + name + "\"");
  }

  bool Alphabet::single_characters() const noexcept {
    return std::all_of(_letters.begin(), _letters.end(), [](auto const& l) {
      return l.size() == 1;
    });
  }

}  // namespace mobius0
