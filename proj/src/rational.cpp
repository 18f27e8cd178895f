#include "pcng/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

namespace pcng {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 magnitude(i128 value) { return value < 0 ? -static_cast<u128>(value) : static_cast<u128>(value); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 value) {
  return value >= std::numeric_limits<std::int64_t>::min() &&
         value <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const u128 g = gcd128(magnitude(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (num == 0) den = 1;
  if (!fits64(num) || !fits64(den)) throw RationalOverflow("rational arithmetic overflow");
  Rational out;
  out.num_ = static_cast<std::int64_t>(num);
  out.den_ = static_cast<std::int64_t>(den);
  return out;
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return fail();

  // Accumulates into 128 bits; at most 36 significant digits are accepted.
  auto parse_digits = [&](std::string_view digits, i128& out) {
    if (digits.empty() || digits.size() > 36) return false;
    out = 0;
    for (char ch : digits) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
      out = out * 10 + (ch - '0');
    }
    return true;
  };

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  i128 num = 0;
  i128 den = 1;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    if (!parse_digits(text.substr(0, slash), num) || !parse_digits(text.substr(slash + 1), den)) return fail();
    if (den == 0) throw std::domain_error("rational with zero denominator");
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    i128 w = 0;
    i128 f = 0;
    if (!whole.empty() && !parse_digits(whole, w)) return fail();
    if (!frac.empty() && !parse_digits(frac, f)) return fail();
    if (whole.size() + frac.size() > 36) return fail();
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    num = w * den + f;
  } else if (!parse_digits(text, num)) {
    return fail();
  }
  return from_wide(negative ? -num : num, den);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return from_wide(-static_cast<i128>(num_), den_); }

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) return *this = from_wide(static_cast<i128>(num_) + rhs.num_, den_);
  *this = from_wide(static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_,
                    static_cast<i128>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  *this = from_wide(static_cast<i128>(num_) * rhs.num_, static_cast<i128>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("division by zero");
  *this = from_wide(static_cast<i128>(num_) * rhs.den_, static_cast<i128>(den_) * rhs.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  return static_cast<i128>(lhs.num_) * rhs.den_ <=> static_cast<i128>(rhs.num_) * lhs.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

const Rational& ExtRational::value() const {
  if (infinite_) throw std::logic_error("value() on infinite ExtRational");
  return value_;
}

double ExtRational::to_double() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_.to_double();
}

std::string ExtRational::str() const { return infinite_ ? "inf" : value_.str(); }

ExtRational& ExtRational::operator+=(const ExtRational& rhs) {
  if (infinite_ || rhs.infinite_) {
    infinite_ = true;
    value_ = 0;
  } else {
    value_ += rhs.value_;
  }
  return *this;
}

ExtRational operator*(const Rational& scale, const ExtRational& value) {
  if (value.infinite_) return value;
  return ExtRational(scale * value.value_);
}

bool operator==(const ExtRational& lhs, const ExtRational& rhs) {
  if (lhs.infinite_ || rhs.infinite_) return lhs.infinite_ == rhs.infinite_;
  return lhs.value_ == rhs.value_;
}

std::strong_ordering operator<=>(const ExtRational& lhs, const ExtRational& rhs) {
  if (lhs.infinite_ || rhs.infinite_) return lhs.infinite_ <=> rhs.infinite_;
  return lhs.value_ <=> rhs.value_;
}

std::ostream& operator<<(std::ostream& os, const ExtRational& value) { return os << value.str(); }

}  // namespace pcng
