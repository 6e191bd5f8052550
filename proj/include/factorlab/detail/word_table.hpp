#ifndef FACTORLAB_DETAIL_WORD_TABLE_HPP_
#define FACTORLAB_DETAIL_WORD_TABLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "factorlab/word.hpp"

namespace factorlab::detail {

  // Hash-consing store for words. Each distinct word is kept once in a flat
  // arena and identified by a dense id (insertion order). Lookups hash the
  // probe once and then compare against stored hashes before touching the
  // arena.
  class WordTable {
   public:
    using id_type = std::uint32_t;

    WordTable() : slots_(64, 0) {}

    // (id, true) if newly inserted, (existing id, false) otherwise.
    std::pair<id_type, bool> insert(std::span<Letter const> w);

    [[nodiscard]] std::optional<id_type> find(std::span<Letter const> w) const;

    [[nodiscard]] std::span<Letter const> operator[](id_type id) const {
      return {arena_.data() + offsets_[id], offsets_[id + 1] - offsets_[id]};
    }
    [[nodiscard]] std::size_t length(id_type id) const {
      return offsets_[id + 1] - offsets_[id];
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return hashes_.size();
    }

   private:
    [[nodiscard]] std::size_t probe(std::span<Letter const> w,
                                    std::size_t             h) const;
    void                      grow();

    std::vector<Letter>      arena_;
    std::vector<std::size_t> offsets_{0};
    std::vector<std::size_t> hashes_;
    std::vector<id_type>     slots_;  // id + 1, or 0 for an empty slot
  };

}  // namespace factorlab::detail

#endif  // FACTORLAB_DETAIL_WORD_TABLE_HPP_
