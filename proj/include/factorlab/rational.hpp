#ifndef FACTORLAB_RATIONAL_HPP_
#define FACTORLAB_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <string>

namespace factorlab {

  // Exact rational in canonical form: gcd(num, den) = 1 and den > 0.
  class Rational {
   public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    [[nodiscard]] std::int64_t num() const noexcept {
      return num_;
    }
    [[nodiscard]] std::int64_t den() const noexcept {
      return den_;
    }

    // "5/3", or "2" when the denominator is 1.
    [[nodiscard]] std::string to_string() const;

    // Parses "r/s" or "r".
    static Rational parse(std::string const& text);

    friend bool operator==(Rational const&, Rational const&) = default;
    friend std::strong_ordering operator<=>(Rational const& a,
                                            Rational const& b) noexcept;

    friend Rational operator+(Rational const& a, Rational const& b);
    friend Rational operator-(Rational const& a, Rational const& b);
    friend Rational operator*(Rational const& a, Rational const& b);
    friend Rational operator/(Rational const& a, Rational const& b);

   private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
  };

}  // namespace factorlab

#endif  // FACTORLAB_RATIONAL_HPP_
