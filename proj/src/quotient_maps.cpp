#include "mobius0/quotient_maps.hpp"

namespace mobius0 {

  Word ev(Word const& w, std::size_t alphabet_size) {
    Word r(std::vector<letter_type>(alphabet_size, 0));
    for (auto l : w.data) {
      ++r.data.at(l);
    }
    return r;
  }

}  // namespace mobius0
