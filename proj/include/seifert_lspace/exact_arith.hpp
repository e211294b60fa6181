#pragma once

// Exact rationals over arbitrary-precision integers, the extended slope
// type with a single point at infinity, and the sorted triple used by the
// horizontal-foliation criterion.

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "seifert_lspace/error.hpp"

namespace seifert_lspace {

using Integer = boost::multiprecision::cpp_int;

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs_value(a), abs_value(b));
}

/// Quotient rounded toward negative infinity. `d` must be nonzero.
inline Integer floor_div(const Integer& n, const Integer& d) {
  Integer q;
  Integer r;
  boost::multiprecision::divide_qr(n, d, q, r);
  if (r != 0 && ((r < 0) != (d < 0))) --q;
  return q;
}

inline Integer ceil_div(const Integer& n, const Integer& d) { return -floor_div(-n, d); }

inline bool fits_int64(const Integer& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  template <std::integral T>
  Rational(T value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(Integer value) : num_(std::move(value)), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw Error(ErrorCode::ZeroDenominator, "rational with zero denominator");
    canonicalize();
  }

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  Integer floor() const { return floor_div(num_, den_); }
  Integer ceil() const { return ceil_div(num_, den_); }

  /// Fractional part, always in [0, 1).
  Rational frac() const { return *this - Rational(floor()); }

  Rational reciprocal() const { return Rational(den_, num_); }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    canonicalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    canonicalize();
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw Error(ErrorCode::ZeroDenominator, "division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    canonicalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return cmp(a.num_, b.num_);
    return cmp(a.num_ * b.den_, b.num_ * a.den_);
  }

  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  double to_double() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static std::strong_ordering cmp(const Integer& x, const Integer& y) {
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  void canonicalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ == 1) return;
    Integer g = gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Integer num_;
  Integer den_;
};

/// Canonical reduced fraction with positive denominator; `den` = 0 is an
/// error (use ExtRational::infinity() for the degenerate slope).
inline Rational make_rational(const Integer& num, const Integer& den) { return Rational(num, den); }

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// A slope: a finite rational or the single degenerate slope 1/0.
class ExtRational {
 public:
  ExtRational() : value_(Rational(0)) {}
  ExtRational(Rational r) : value_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  ExtRational(T v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)

  static ExtRational infinity() {
    ExtRational e;
    e.value_.reset();
    return e;
  }

  /// p/q with q allowed to be zero; both 1/0 and -1/0 give infinity.
  static ExtRational from_pair(const Integer& num, const Integer& den) {
    if (den == 0) {
      if (num == 0) throw Error(ErrorCode::ZeroDenominator, "0/0 is not a slope");
      return infinity();
    }
    return ExtRational(Rational(num, den));
  }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  const Rational& value() const {
    if (!value_) throw Error(ErrorCode::PreconditionFailed, "infinite slope has no finite value");
    return *value_;
  }

  friend bool operator==(const ExtRational& a, const ExtRational& b) { return a.value_ == b.value_; }

  std::string str() const { return value_ ? value_->str() : std::string("inf"); }

  friend std::ostream& operator<<(std::ostream& os, const ExtRational& r) { return os << r.str(); }

 private:
  std::optional<Rational> value_;
};

/// Three rationals held in nondecreasing order.
class SortedTriple {
 public:
  SortedTriple(Rational a, Rational b, Rational c) : v_{std::move(a), std::move(b), std::move(c)} {
    std::sort(v_.begin(), v_.end());
  }

  const Rational& s1() const { return v_[0]; }
  const Rational& s2() const { return v_[1]; }
  const Rational& s3() const { return v_[2]; }
  const Rational& operator[](std::size_t i) const { return v_[i]; }

  friend bool operator==(const SortedTriple&, const SortedTriple&) = default;

  std::string str() const { return "(" + v_[0].str() + ", " + v_[1].str() + ", " + v_[2].str() + ")"; }

 private:
  std::array<Rational, 3> v_;
};

inline SortedTriple sorted_triple(const Rational& a, const Rational& b, const Rational& c) {
  return SortedTriple(a, b, c);
}

/// Strict inequality in every slot.
inline bool triple_lt(const SortedTriple& x, const SortedTriple& y) {
  return x.s1() < y.s1() && x.s2() < y.s2() && x.s3() < y.s3();
}

// ---------------------------------------------------------------------------
// Text grammar: -?\d+/\d+ | -?\d+ ; "inf" (also 1/0, -1/0) for the
// degenerate slope. Positions in errors are offsets into the full input
// string, counted from `base_offset`.

namespace detail {

inline bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

inline std::string_view trim(std::string_view s, std::size_t& lead) {
  lead = 0;
  while (lead < s.size() && std::isspace(static_cast<unsigned char>(s[lead]))) ++lead;
  std::size_t end = s.size();
  while (end > lead && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(lead, end - lead);
}

inline std::pair<Integer, Integer> parse_pair(std::string_view text, std::size_t base_offset) {
  std::size_t lead = 0;
  std::string_view s = trim(text, lead);
  const std::size_t pos = base_offset + lead;
  if (s.empty()) throw ParseError(pos, "expected a rational number");
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '-') {
    negative = true;
    i = 1;
  }
  std::string_view body = s.substr(i);
  std::size_t slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  if (!all_digits(num_text)) throw ParseError(pos + i, "malformed numerator '" + std::string(num_text) + "'");
  Integer num{std::string(num_text)};
  if (negative) num = -num;
  Integer den = 1;
  if (slash != std::string_view::npos) {
    std::string_view den_text = body.substr(slash + 1);
    if (!all_digits(den_text))
      throw ParseError(pos + i + slash + 1, "malformed denominator '" + std::string(den_text) + "'");
    den = Integer(std::string(den_text));
  }
  return {std::move(num), std::move(den)};
}

}  // namespace detail

inline Rational parse_rational(std::string_view text, std::size_t base_offset = 0) {
  auto [num, den] = detail::parse_pair(text, base_offset);
  if (den == 0) {
    std::size_t lead = 0;
    detail::trim(text, lead);
    throw ParseError(base_offset + lead, "zero denominator is only allowed for slopes");
  }
  return Rational(std::move(num), std::move(den));
}

inline ExtRational parse_ext_rational(std::string_view text, std::size_t base_offset = 0) {
  std::size_t lead = 0;
  std::string_view s = detail::trim(text, lead);
  if (s == "inf" || s == "-inf" || s == "+inf") return ExtRational::infinity();
  auto [num, den] = detail::parse_pair(text, base_offset);
  if (den == 0 && num == 0) throw ParseError(base_offset + lead, "0/0 is not a slope");
  return ExtRational::from_pair(num, den);
}

}  // namespace seifert_lspace
