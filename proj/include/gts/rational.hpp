#ifndef GTS_RATIONAL_HPP
#define GTS_RATIONAL_HPP

#include <compare>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gts {

using Rational = mpq_class;

/// Builds a canonical rational num/den. Throws on a zero denominator.
Rational make_rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (no decimals). Non-reduced input is reduced.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

Rational rat_floor(const Rational& q);
Rational rat_ceil(const Rational& q);

/// Least common multiple of two positive rationals: the smallest positive
/// rational that is an integer multiple of both.
Rational rational_lcm(const Rational& a, const Rational& b);

/// A rational extended by the two symbols -inf and +inf.
class ExtRat {
public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtRat() : kind_(Kind::Finite), value_(0) {}
  ExtRat(const Rational& q) : kind_(Kind::Finite), value_(q) {}  // NOLINT: implicit by intent
  ExtRat(long n) : kind_(Kind::Finite), value_(n) {}             // NOLINT
  template <class T, class U>
  ExtRat(const __gmp_expr<T, U>& e) : kind_(Kind::Finite), value_(e) {}  // NOLINT

  static ExtRat neg_inf() { return ExtRat(Kind::NegInf); }
  static ExtRat pos_inf() { return ExtRat(Kind::PosInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }

  /// Only valid when finite.
  const Rational& value() const;

  friend bool operator==(const ExtRat& a, const ExtRat& b);
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

private:
  explicit ExtRat(Kind k) : kind_(k), value_(0) {}
  Kind kind_;
  Rational value_;
};

ExtRat operator+(const ExtRat& a, const Rational& b);
ExtRat operator-(const ExtRat& a, const Rational& b);
ExtRat operator-(const ExtRat& a);

std::string to_string(const ExtRat& x);

/// Parses a rational, "-inf", "+inf" or "inf".
ExtRat parse_ext(std::string_view text);

}  // namespace gts

#endif  // GTS_RATIONAL_HPP
