#pragma once

// Seifert invariants over S^2 in normal form S^2(b; r_1, ..., r_k) with
// 0 < r_i < 1, plus a bare marker for spaces over RP^2.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seifert_lspace/exact_arith.hpp"

namespace seifert_lspace {

enum class Base { S2, RP2 };

struct SeifertForm {
  Base base = Base::S2;
  Integer b = 0;
  std::vector<Rational> slopes;  // sorted, each in (0, 1)
  int degenerate_count = 0;

  static SeifertForm rp2() {
    SeifertForm f;
    f.base = Base::RP2;
    return f;
  }

  std::size_t fiber_count() const { return slopes.size(); }

  friend bool operator==(const SeifertForm&, const SeifertForm&) = default;
};

/// |H_1|, with nullopt standing for an infinite group.
class H1Order {
 public:
  H1Order() = default;
  explicit H1Order(Integer v) : value_(std::move(v)) {}
  static H1Order infinite() { return H1Order(); }

  bool is_infinite() const { return !value_.has_value(); }
  const Integer& value() const {
    if (!value_) throw Error(ErrorCode::PreconditionFailed, "H_1 is infinite");
    return *value_;
  }
  std::string str() const { return value_ ? value_->str() : std::string("inf"); }

  friend bool operator==(const H1Order&, const H1Order&) = default;

 private:
  std::optional<Integer> value_;
};

enum class Tag { S3, S2xS1, LensSpace, ConnectedSumOfLensSpaces, SmallSFS, RP2Base };

inline const char* to_string(Tag t) {
  switch (t) {
    case Tag::S3: return "S3";
    case Tag::S2xS1: return "S2xS1";
    case Tag::LensSpace: return "LensSpace";
    case Tag::ConnectedSumOfLensSpaces: return "ConnectedSumOfLensSpaces";
    case Tag::SmallSFS: return "SmallSFS";
    case Tag::RP2Base: return "RP2Base";
  }
  return "Unknown";
}

struct Classification {
  Tag tag = Tag::SmallSFS;
  std::optional<H1Order> h1;          // absent for RP2Base
  std::vector<Integer> summand_orders;  // ConnectedSumOfLensSpaces only
};

/// A Seifert form as written, before normalization: slopes may be any
/// extended rationals.
struct RawSeifert {
  Base base = Base::S2;
  Integer b = 0;
  std::vector<ExtRational> slopes;
};

inline SeifertForm normalize(const Integer& b, const std::vector<ExtRational>& raw) {
  SeifertForm f;
  f.b = b;
  for (const auto& s : raw) {
    if (s.is_infinite()) {
      ++f.degenerate_count;
      continue;
    }
    const Rational& r = s.value();
    const Integer fl = r.floor();
    f.b += fl;
    Rational frac = r - Rational(fl);
    if (!frac.is_zero()) f.slopes.push_back(std::move(frac));
  }
  std::sort(f.slopes.begin(), f.slopes.end());
  return f;
}

inline SeifertForm normalize(const RawSeifert& raw) {
  if (raw.base == Base::RP2) return SeifertForm::rp2();
  return normalize(raw.b, raw.slopes);
}

/// Re-normalizes an existing form; the identity on normal forms.
inline SeifertForm normalize(const SeifertForm& f) {
  if (f.base == Base::RP2) return SeifertForm::rp2();
  std::vector<ExtRational> raw(f.slopes.begin(), f.slopes.end());
  for (int i = 0; i < f.degenerate_count; ++i) raw.push_back(ExtRational::infinity());
  return normalize(f.b, raw);
}

inline Rational euler_number(const SeifertForm& f) {
  if (f.base != Base::S2) throw Error(ErrorCode::DegenerateEuler, "euler number is not defined over RP2 here");
  if (f.degenerate_count != 0)
    throw Error(ErrorCode::DegenerateEuler, "euler number is not defined with a degenerate fiber");
  Rational e(f.b);
  for (const auto& r : f.slopes) e += r;
  return e;
}

inline Integer index_product(const std::vector<Rational>& slopes) {
  Integer p = 1;
  for (const auto& r : slopes) p *= r.den();
  return p;
}

inline H1Order h1_order(const SeifertForm& f) {
  if (f.base != Base::S2) throw Error(ErrorCode::DegenerateH1, "h1_order needs an S2 base");
  if (f.degenerate_count != 0)
    throw Error(ErrorCode::DegenerateH1, "h1_order needs a nondegenerate form; use classify");
  const Rational v = euler_number(f) * Rational(index_product(f.slopes));
  if (v.is_zero()) return H1Order::infinite();
  return H1Order(abs_value(v.num()));
}

inline Classification classify(const SeifertForm& f) {
  Classification c;
  if (f.base == Base::RP2) {
    c.tag = Tag::RP2Base;
    return c;
  }
  const std::size_t k = f.slopes.size();
  if (k > 3) throw Error(ErrorCode::UnsupportedFiberCount, std::to_string(k) + " exceptional fibers");
  if (f.degenerate_count >= 2) {
    if (k != 0)
      throw Error(ErrorCode::UnsupportedFiberCount, "several degenerate fibers alongside exceptional fibers");
    c.tag = Tag::S2xS1;
    c.h1 = H1Order::infinite();
    return c;
  }
  if (f.degenerate_count == 1) {
    // Connected sum of the lens spaces L(alpha_i, beta_i).
    if (k == 3)
      throw Error(ErrorCode::UnsupportedFiberCount, "degenerate fiber with three exceptional fibers");
    if (k == 0) {
      c.tag = Tag::S3;
      c.h1 = H1Order(1);
    } else if (k == 1) {
      c.tag = Tag::LensSpace;
      c.h1 = H1Order(f.slopes[0].den());
    } else {
      c.tag = Tag::ConnectedSumOfLensSpaces;
      c.summand_orders = {f.slopes[0].den(), f.slopes[1].den()};
      c.h1 = H1Order(index_product(f.slopes));
    }
    return c;
  }
  c.h1 = h1_order(f);
  if (k == 3) {
    c.tag = Tag::SmallSFS;
  } else if (c.h1->is_infinite()) {
    c.tag = Tag::S2xS1;
  } else if (c.h1->value() == 1) {
    c.tag = Tag::S3;
  } else {
    c.tag = Tag::LensSpace;
  }
  return c;
}

inline SeifertForm mirror(const SeifertForm& f) {
  if (f.base != Base::S2) throw Error(ErrorCode::PreconditionFailed, "mirror needs an S2 base");
  std::vector<ExtRational> raw;
  raw.reserve(f.slopes.size());
  for (const auto& r : f.slopes) raw.emplace_back(-r);
  SeifertForm m = normalize(-f.b, raw);
  m.degenerate_count = f.degenerate_count;
  return m;
}

// ---------------------------------------------------------------------------
// Text form: SFS[S2; b; r1, r2, ...] or SFS[RP2].

inline std::string to_string(const SeifertForm& f) {
  if (f.base == Base::RP2) return "SFS[RP2]";
  std::string out = "SFS[S2; " + f.b.str();
  if (!f.slopes.empty() || f.degenerate_count > 0) {
    out += ";";
    const char* sep = " ";
    for (const auto& r : f.slopes) {
      out += sep + r.str();
      sep = ", ";
    }
    for (int i = 0; i < f.degenerate_count; ++i) {
      out += sep;
      out += "inf";
      sep = ", ";
    }
  }
  return out + "]";
}

inline std::string to_string(const RawSeifert& f) {
  if (f.base == Base::RP2) return "SFS[RP2]";
  std::string out = "SFS[S2; " + f.b.str();
  if (!f.slopes.empty()) {
    out += ";";
    const char* sep = " ";
    for (const auto& r : f.slopes) {
      out += sep + r.str();
      sep = ", ";
    }
  }
  return out + "]";
}

namespace detail {

inline void skip_space(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline void expect(std::string_view s, std::size_t& i, std::string_view token) {
  skip_space(s, i);
  if (s.substr(i, token.size()) != token) throw ParseError(i, "expected '" + std::string(token) + "'");
  i += token.size();
}

}  // namespace detail

inline RawSeifert parse_raw_seifert(std::string_view s) {
  std::size_t i = 0;
  detail::expect(s, i, "SFS");
  detail::expect(s, i, "[");
  detail::skip_space(s, i);
  RawSeifert raw;
  if (s.substr(i, 3) == "RP2") {
    i += 3;
    raw.base = Base::RP2;
    detail::expect(s, i, "]");
  } else if (s.substr(i, 2) == "S2") {
    i += 2;
    detail::expect(s, i, ";");
    const std::size_t close = s.find(']', i);
    if (close == std::string_view::npos) throw ParseError(s.size(), "missing ']'");
    std::string_view body = s.substr(i, close - i);
    const std::size_t semi = body.find(';');
    std::string_view b_text = body.substr(0, semi);
    Rational b = parse_rational(b_text, i);
    if (!b.is_integer()) {
      std::size_t lead = 0;
      detail::trim(b_text, lead);
      throw ParseError(i + lead, "b must be an integer");
    }
    raw.b = b.num();
    if (semi != std::string_view::npos) {
      std::size_t start = semi + 1;
      std::string_view rest = body.substr(start);
      std::size_t lead = 0;
      if (!detail::trim(rest, lead).empty()) {
        while (true) {
          const std::size_t comma = body.find(',', start);
          std::string_view item = body.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                      : comma - start);
          raw.slopes.push_back(parse_ext_rational(item, i + start));
          if (comma == std::string_view::npos) break;
          start = comma + 1;
        }
      }
    }
    i = close + 1;
  } else {
    throw ParseError(i, "expected base 'S2' or 'RP2'");
  }
  detail::skip_space(s, i);
  if (i != s.size()) throw ParseError(i, "unexpected trailing input");
  return raw;
}

inline SeifertForm parse_seifert(std::string_view s) { return normalize(parse_raw_seifert(s)); }

}  // namespace seifert_lspace
