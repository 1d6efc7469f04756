#ifndef GERM_CONTACT_RATIONAL_HPP
#define GERM_CONTACT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace germ_contact {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
  if (den == 0)
    throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Accepts "p" or "p/q" with optional leading sign.
inline Rational parse_rational(std::string_view text)
{
  Rational r;
  std::string s(text);
  if (s.empty() || r.set_str(s, 10) != 0)
    throw std::invalid_argument("not a rational literal: '" + s + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("rational literal with zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

inline Rational rational_pow(const Rational& base, unsigned exponent)
{
  Rational num, den;
  mpz_pow_ui(num.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_num_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational r(Integer(num.get_num()), Integer(den.get_num()));
  r.canonicalize();
  return r;
}

/// Rational number or +infinity. Used for contact orders and types, which
/// are non-negative rationals or infinite.
class ExtendedRational {
public:
  ExtendedRational() = default;
  ExtendedRational(const Rational& v) : value_(v) {}
  ExtendedRational(long v) : value_(v) {}

  static ExtendedRational infinity()
  {
    ExtendedRational e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  const Rational& value() const
  {
    if (infinite_)
      throw std::logic_error("value() of an infinite ExtendedRational");
    return value_;
  }

  bool is_integer() const { return !infinite_ && value_.get_den() == 1; }

  std::string to_string() const { return infinite_ ? "inf" : value_.get_str(); }

  static ExtendedRational parse(std::string_view text)
  {
    if (text == "inf" || text == "infinity")
      return infinity();
    return ExtendedRational(parse_rational(text));
  }

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b)
  {
    if (a.infinite_ || b.infinite_)
      return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b)
  {
    if (a.infinite_ || b.infinite_) {
      if (a.infinite_ == b.infinite_)
        return std::strong_ordering::equal;
      return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    int c = cmp(a.value_, b.value_);
    if (c < 0)
      return std::strong_ordering::less;
    if (c > 0)
      return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Multiplication by a positive rational; infinity absorbs.
  friend ExtendedRational operator*(const ExtendedRational& a, const Rational& s)
  {
    if (a.infinite_)
      return a;
    return ExtendedRational(Rational(a.value_ * s));
  }

  friend ExtendedRational operator-(const ExtendedRational& a, const ExtendedRational& b)
  {
    if (b.infinite_)
      throw std::domain_error("subtracting infinity");
    if (a.infinite_)
      return a;
    return ExtendedRational(Rational(a.value_ - b.value_));
  }

private:
  Rational value_ = 0;
  bool infinite_ = false;
};

inline ExtendedRational pow(const ExtendedRational& base, unsigned exponent)
{
  if (base.is_infinite())
    return exponent == 0 ? ExtendedRational(1) : base;
  return ExtendedRational(rational_pow(base.value(), exponent));
}

inline ExtendedRational min(const ExtendedRational& a, const ExtendedRational& b) { return b < a ? b : a; }
inline ExtendedRational max(const ExtendedRational& a, const ExtendedRational& b) { return a < b ? b : a; }

}  // namespace germ_contact

#endif
