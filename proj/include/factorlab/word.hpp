#ifndef FACTORLAB_WORD_HPP_
#define FACTORLAB_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace factorlab {

  // Index of a generator inside its presentation.
  using Letter = std::uint16_t;

  // An element of the free monoid over a generator alphabet. The empty word
  // is the identity 1.
  class Word {
   public:
    Word() = default;
    explicit Word(std::vector<Letter> symbols) : symbols_(std::move(symbols)) {}
    Word(std::initializer_list<Letter> symbols) : symbols_(symbols) {}

    [[nodiscard]] std::size_t length() const noexcept {
      return symbols_.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return symbols_.empty();
    }
    [[nodiscard]] std::span<Letter const> symbols() const noexcept {
      return symbols_;
    }
    [[nodiscard]] Letter operator[](std::size_t i) const {
      return symbols_[i];
    }
    [[nodiscard]] Letter front() const {
      return symbols_.front();
    }
    [[nodiscard]] Letter back() const {
      return symbols_.back();
    }

    auto begin() const noexcept {
      return symbols_.begin();
    }
    auto end() const noexcept {
      return symbols_.end();
    }

    // True if `pattern` occurs in this word starting at `pos`.
    [[nodiscard]] bool matches_at(std::span<Letter const> pattern,
                                  std::size_t             pos) const noexcept;

    // Number of occurrences of `x`.
    [[nodiscard]] std::size_t count(Letter x) const noexcept;

    // Copy of the subword [pos, pos + len).
    [[nodiscard]] Word subword(std::size_t pos, std::size_t len) const;

    // Replace [pos, pos + len) by `replacement`.
    [[nodiscard]] Word replaced(std::size_t pos,
                                std::size_t len,
                                Word const& replacement) const;

    Word& operator*=(Word const& rhs);

    friend bool operator==(Word const&, Word const&) = default;
    friend std::strong_ordering operator<=>(Word const& a, Word const& b) {
      return a.symbols_ <=> b.symbols_;
    }

   private:
    std::vector<Letter> symbols_;
  };

  // Concatenation.
  [[nodiscard]] Word operator*(Word lhs, Word const& rhs);

  // w^n; pow(w, 0) is the empty word.
  [[nodiscard]] Word pow(Word const& w, std::size_t n);

  // Smallest index i with pattern occurring at i, or npos.
  [[nodiscard]] std::size_t find(Word const&              w,
                                 std::span<Letter const> pattern,
                                 std::size_t             from = 0);

  inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

  [[nodiscard]] std::size_t hash_letters(std::span<Letter const> s) noexcept;

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept {
      return hash_letters(w.symbols());
    }
  };

}  // namespace factorlab

#endif  // FACTORLAB_WORD_HPP_
