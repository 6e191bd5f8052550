#include "factorlab/word.hpp"

#include <algorithm>

namespace factorlab {

  bool Word::matches_at(std::span<Letter const> pattern,
                        std::size_t             pos) const noexcept {
    if (pos > symbols_.size() || pattern.size() > symbols_.size() - pos) {
      return false;
    }
    return std::equal(pattern.begin(), pattern.end(), symbols_.begin() + pos);
  }

  std::size_t Word::count(Letter x) const noexcept {
    return static_cast<std::size_t>(
        std::count(symbols_.begin(), symbols_.end(), x));
  }

  Word Word::subword(std::size_t pos, std::size_t len) const {
    return Word(std::vector<Letter>(symbols_.begin() + pos,
                                    symbols_.begin() + pos + len));
  }

  Word Word::replaced(std::size_t pos,
                      std::size_t len,
                      Word const& replacement) const {
    std::vector<Letter> out;
    out.reserve(symbols_.size() - len + replacement.length());
    out.insert(out.end(), symbols_.begin(), symbols_.begin() + pos);
    out.insert(out.end(), replacement.begin(), replacement.end());
    out.insert(out.end(), symbols_.begin() + pos + len, symbols_.end());
    return Word(std::move(out));
  }

  Word& Word::operator*=(Word const& rhs) {
    symbols_.insert(symbols_.end(), rhs.begin(), rhs.end());
    return *this;
  }

  Word operator*(Word lhs, Word const& rhs) {
    lhs *= rhs;
    return lhs;
  }

  Word pow(Word const& w, std::size_t n) {
    Word result;
    for (std::size_t i = 0; i < n; ++i) {
      result *= w;
    }
    return result;
  }

  std::size_t find(Word const&              w,
                   std::span<Letter const> pattern,
                   std::size_t             from) {
    if (pattern.size() > w.length()) {
      return npos;
    }
    for (std::size_t i = from; i + pattern.size() <= w.length(); ++i) {
      if (w.matches_at(pattern, i)) {
        return i;
      }
    }
    return npos;
  }

  std::size_t hash_letters(std::span<Letter const> s) noexcept {
    // FNV-1a over 16-bit symbols, then a final avalanche.
    std::uint64_t h = 1469598103934665603ULL;
    for (Letter c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= s.size();
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return static_cast<std::size_t>(h);
  }

}  // namespace factorlab
