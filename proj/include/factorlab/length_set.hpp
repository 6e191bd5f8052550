#ifndef FACTORLAB_LENGTH_SET_HPP_
#define FACTORLAB_LENGTH_SET_HPP_

#include <algorithm>
#include <cstddef>
#include <vector>

namespace factorlab {

  // L_M(a): the lengths of the explored factorizations of a word, sorted and
  // distinct. `exact` mirrors the exactness of the class it came from.
  struct LengthSet {
    std::vector<std::size_t> values;
    bool                     exact = true;

    [[nodiscard]] bool empty() const noexcept {
      return values.empty();
    }
    [[nodiscard]] std::size_t min() const {
      return values.front();
    }
    [[nodiscard]] std::size_t max() const {
      return values.back();
    }
    [[nodiscard]] bool contains(std::size_t n) const {
      return std::binary_search(values.begin(), values.end(), n);
    }

    friend bool operator==(LengthSet const&, LengthSet const&) = default;
  };

}  // namespace factorlab

#endif  // FACTORLAB_LENGTH_SET_HPP_
