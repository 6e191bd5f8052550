#include "factorlab/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace factorlab {

  namespace {
    __extension__ using wide = __int128;

    std::int64_t narrow(wide v) {
      if (v > INT64_MAX || v < INT64_MIN) {
        throw std::overflow_error("rational overflow");
      }
      return static_cast<std::int64_t>(v);
    }

    wide gcd128(wide a, wide b) {
      if (a < 0) {
        a = -a;
      }
      while (b != 0) {
        wide t = a % b;
        a          = b;
        b          = t;
      }
      return a == 0 ? 1 : a;
    }
  }  // namespace

  Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
      throw std::domain_error("rational with zero denominator");
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    num_           = num / g;
    den_           = den / g;
  }

  std::string Rational::to_string() const {
    if (den_ == 1) {
      return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational Rational::parse(std::string const& text) {
    auto slash = text.find('/');
    try {
      std::size_t used = 0;
      if (slash == std::string::npos) {
        auto n = std::stoll(text, &used);
        if (used != text.size()) {
          throw std::invalid_argument(text);
        }
        return Rational(n);
      }
      auto num_text = text.substr(0, slash);
      auto den_text = text.substr(slash + 1);
      auto n        = std::stoll(num_text, &used);
      if (used != num_text.size()) {
        throw std::invalid_argument(text);
      }
      auto d = std::stoll(den_text, &used);
      if (used != den_text.size()) {
        throw std::invalid_argument(text);
      }
      return Rational(n, d);
    } catch (std::logic_error const&) {
      throw std::invalid_argument("malformed rational '" + text + "'");
    }
  }

  std::strong_ordering operator<=>(Rational const& a,
                                   Rational const& b) noexcept {
    wide lhs = static_cast<wide>(a.num_) * b.den_;
    wide rhs = static_cast<wide>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  Rational operator+(Rational const& a, Rational const& b) {
    wide n = static_cast<wide>(a.num_) * b.den_
                 + static_cast<wide>(b.num_) * a.den_;
    wide d = static_cast<wide>(a.den_) * b.den_;
    wide g = gcd128(n, d);
    return Rational(narrow(n / g), narrow(d / g));
  }

  Rational operator-(Rational const& a, Rational const& b) {
    return a + Rational(-b.num_, b.den_);
  }

  Rational operator*(Rational const& a, Rational const& b) {
    wide n = static_cast<wide>(a.num_) * b.num_;
    wide d = static_cast<wide>(a.den_) * b.den_;
    wide g = gcd128(n, d);
    return Rational(narrow(n / g), narrow(d / g));
  }

  Rational operator/(Rational const& a, Rational const& b) {
    if (b.num_ == 0) {
      throw std::domain_error("division by zero rational");
    }
    return a * Rational(b.den_, b.num_);
  }

}  // namespace factorlab
