#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pcng {

/// Thrown when an exact result no longer fits the 64-bit numerator/denominator.
class RationalOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Exact rational with 64-bit numerator and denominator.
///
/// Intermediate products are formed in 128 bits and reduced before narrowing,
/// so every operation is either exact or throws RationalOverflow. The value is
/// kept normalized: gcd(num, den) == 1 and den > 0.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);

  /// Parses "p", "p/q" or a plain decimal such as "-0.125" (exactly 1/8).
  static Rational parse(std::string_view text);

  [[nodiscard]] std::int64_t num() const { return num_; }
  [[nodiscard]] std::int64_t den() const { return den_; }
  [[nodiscard]] bool is_integer() const { return den_ == 1; }
  [[nodiscard]] int sign() const { return (num_ > 0) - (num_ < 0); }
  [[nodiscard]] double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

Rational abs(const Rational& value);

/// A rational or +infinity. Costs become infinite when a player is cut off.
class ExtRational {
 public:
  constexpr ExtRational() = default;
  ExtRational(Rational value) : value_(value) {}  // NOLINT(implicit)
  ExtRational(std::int64_t value) : value_(value) {}  // NOLINT(implicit)

  static ExtRational infinity() {
    ExtRational out;
    out.infinite_ = true;
    return out;
  }

  [[nodiscard]] bool is_infinite() const { return infinite_; }
  [[nodiscard]] bool is_finite() const { return !infinite_; }
  /// Precondition: is_finite().
  [[nodiscard]] const Rational& value() const;
  [[nodiscard]] double to_double() const;
  /// Exact string, "inf" when infinite.
  [[nodiscard]] std::string str() const;

  ExtRational& operator+=(const ExtRational& rhs);
  friend ExtRational operator+(ExtRational lhs, const ExtRational& rhs) { return lhs += rhs; }
  /// Scales by a strictly positive rational; infinity stays infinity.
  friend ExtRational operator*(const Rational& scale, const ExtRational& value);

  friend bool operator==(const ExtRational& lhs, const ExtRational& rhs);
  friend std::strong_ordering operator<=>(const ExtRational& lhs, const ExtRational& rhs);

 private:
  Rational value_;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExtRational& value);

}  // namespace pcng
