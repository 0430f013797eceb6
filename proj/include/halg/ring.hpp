#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "halg/errors.hpp"

namespace halg {

using Integer = mpz_class;

// Every ring element is held as a GMP rational. Over Z the denominator is 1,
// over F_p the value is an integer residue in [0, p).
using Scalar = mpq_class;

class Ring {
 public:
  enum class Kind { Integers, Rationals, PrimeField };

  Ring() = default;  // the integers

  static Ring integers() { return Ring(); }
  static Ring rationals();
  // Throws InvalidRing unless p is prime.
  static Ring prime_field(const Integer& p);
  // Parses "Z", "Q" or "F<p>".
  static Ring parse(std::string_view tag);

  std::string tag() const;
  Kind kind() const { return kind_; }
  bool is_field() const { return kind_ != Kind::Integers; }
  const Integer& characteristic() const { return p_; }

  bool operator==(const Ring& o) const { return kind_ == o.kind_ && p_ == o.p_; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long v) const { return reduce(Scalar(v)); }

  // Maps an arbitrary rational into the ring. Over F_p the denominator is
  // inverted; over Z a proper fraction raises DomainError.
  Scalar reduce(const Scalar& v) const;
  bool contains(const Scalar& v) const;

  Scalar add(const Scalar& a, const Scalar& b) const {
    if (kind_ != Kind::PrimeField) return a + b;
    Integer s = a.get_num() + b.get_num();
    if (s >= p_) s -= p_;
    return Scalar(s);
  }
  Scalar neg(const Scalar& a) const {
    if (kind_ != Kind::PrimeField || sgn(a) == 0) return -a;
    return Scalar(Integer(p_ - a.get_num()));
  }
  Scalar sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }
  Scalar mul(const Scalar& a, const Scalar& b) const {
    if (kind_ != Kind::PrimeField) return a * b;
    Integer m = a.get_num() * b.get_num();
    mpz_mod(m.get_mpz_t(), m.get_mpz_t(), p_.get_mpz_t());
    return Scalar(m);
  }
  // acc += a * b
  void add_mul(Scalar& acc, const Scalar& a, const Scalar& b) const {
    if (kind_ != Kind::PrimeField) {
      acc += a * b;
      return;
    }
    Integer m = acc.get_num() + a.get_num() * b.get_num();
    mpz_mod(m.get_mpz_t(), m.get_mpz_t(), p_.get_mpz_t());
    acc = Scalar(m);
  }

  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }
  bool is_unit(const Scalar& a) const;
  Scalar inverse(const Scalar& a) const;  // throws DivisibilityError
  // The unique x with b·x = a; DivisibilityError if none exists.
  Scalar divide_exact(const Scalar& a, const Scalar& b) const;

  // Euclidean structure used by the normal-form algorithms. Over fields every
  // nonzero element has size 1 and division is exact.
  Integer size(const Scalar& a) const;
  Scalar quotient(const Scalar& a, const Scalar& b) const;
  // A unit u such that u·a is the canonical associate (|a| over Z, 1 over a field).
  Scalar normalizing_unit(const Scalar& a) const;

  // Exact text form: integers and residues in decimal, rationals as "a/b".
  std::string to_string(const Scalar& a) const;
  // Parses the same forms (and plain decimal integers), then reduces.
  Scalar parse_scalar(std::string_view text) const;

 private:
  Kind kind_ = Kind::Integers;
  Integer p_ = 0;
};

bool is_prime(const Integer& n);

}  // namespace halg
