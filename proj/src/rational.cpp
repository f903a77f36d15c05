#include "gts/rational.hpp"

#include <cctype>

namespace gts {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string s(text);
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  bool seen_slash = false;
  bool digits_before = false, digits_after = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/') {
      if (seen_slash) throw std::invalid_argument("malformed rational '" + s + "'");
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_slash ? digits_after : digits_before) = true;
    } else {
      throw std::invalid_argument("malformed rational '" + s + "'");
    }
  }
  if (!digits_before || (seen_slash && !digits_after))
    throw std::invalid_argument("malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational rat_floor(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(r);
}

Rational rat_ceil(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(r);
}

Rational rational_lcm(const Rational& a, const Rational& b) {
  if (a <= 0 || b <= 0) throw std::invalid_argument("lcm of non-positive rationals");
  mpz_class num, den;
  mpz_lcm(num.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  mpz_gcd(den.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  Rational q(num, den);
  q.canonicalize();
  return q;
}

const Rational& ExtRat::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("value() of an infinite ExtRat");
  return value_;
}

bool operator==(const ExtRat& a, const ExtRat& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != ExtRat::Kind::Finite || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (a.kind_ != b.kind_) {
    auto rank = [](ExtRat::Kind k) { return static_cast<int>(k); };
    return rank(a.kind_) <=> rank(b.kind_);
  }
  if (a.kind_ != ExtRat::Kind::Finite) return std::strong_ordering::equal;
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

ExtRat operator+(const ExtRat& a, const Rational& b) {
  if (!a.is_finite()) return a;
  return ExtRat(Rational(a.value() + b));
}

ExtRat operator-(const ExtRat& a, const Rational& b) {
  if (!a.is_finite()) return a;
  return ExtRat(Rational(a.value() - b));
}

ExtRat operator-(const ExtRat& a) {
  if (a.is_neg_inf()) return ExtRat::pos_inf();
  if (a.is_pos_inf()) return ExtRat::neg_inf();
  return ExtRat(Rational(-a.value()));
}

std::string to_string(const ExtRat& x) {
  if (x.is_neg_inf()) return "-inf";
  if (x.is_pos_inf()) return "+inf";
  return to_string(x.value());
}

ExtRat parse_ext(std::string_view text) {
  if (text == "-inf") return ExtRat::neg_inf();
  if (text == "+inf" || text == "inf") return ExtRat::pos_inf();
  return ExtRat(parse_rational(text));
}

}  // namespace gts
