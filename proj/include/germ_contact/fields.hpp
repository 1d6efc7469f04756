#ifndef GERM_CONTACT_FIELDS_HPP
#define GERM_CONTACT_FIELDS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace germ_contact {

// Field objects carry whatever context their elements need (a modulus, a
// minimal polynomial). Generic algorithms take a field by value and call its
// member operations; fields are cheap to copy.

struct RationalField {
  using Elem = Rational;

  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem from_rational(const Rational& r) const { return r; }
  Elem from_int(long v) const { return Rational(v); }

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const
  {
    if (sgn(a) == 0)
      throw std::domain_error("division by zero rational");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  std::string to_string(const Elem& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Z/pZ for a prime p < 2^62.
class PrimeField {
public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p)
  {
    if (p < 2)
      throw std::invalid_argument("PrimeField modulus must be prime");
  }

  std::uint64_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long v) const
  {
    long r = v % static_cast<long>(p_);
    return static_cast<Elem>(r < 0 ? r + static_cast<long>(p_) : r);
  }
  Elem from_integer(const Integer& v) const
  {
    Integer r = v % Integer(static_cast<unsigned long>(p_));
    if (r < 0)
      r += static_cast<unsigned long>(p_);
    return static_cast<Elem>(r.get_ui());
  }
  Elem from_rational(const Rational& r) const
  {
    Elem den = from_integer(r.get_den());
    if (den == 0)
      throw std::domain_error("denominator vanishes modulo p");
    return mul(from_integer(r.get_num()), inv(den));
  }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(Elem a, Elem b) const
  {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const
  {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const
  {
    Elem r = 1;
    while (e) {
      if (e & 1)
        r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Elem inv(Elem a) const
  {
    if (a == 0)
      throw std::domain_error("division by zero modulo p");
    return pow(a, p_ - 2);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  std::string to_string(const Elem& a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
  std::uint64_t p_;
};

}  // namespace germ_contact

#endif
