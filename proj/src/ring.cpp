#include "halg/ring.hpp"

namespace halg {

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  // Trial division is exact for anything a user would reasonably type;
  // larger inputs fall back to GMP's Baillie-PSW test (no known failures).
  if (n < Integer(1) << 40) {
    unsigned long v = n.get_ui();
    if (v < 4) return true;
    if (v % 2 == 0) return false;
    for (unsigned long d = 3; d * d <= v; d += 2)
      if (v % d == 0) return false;
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Ring Ring::rationals() {
  Ring r;
  r.kind_ = Kind::Rationals;
  return r;
}

Ring Ring::prime_field(const Integer& p) {
  if (!is_prime(p)) throw InvalidRing("F" + p.get_str() + ": modulus is not prime");
  Ring r;
  r.kind_ = Kind::PrimeField;
  r.p_ = p;
  return r;
}

Ring Ring::parse(std::string_view tag) {
  if (tag == "Z") return integers();
  if (tag == "Q") return rationals();
  if (tag.size() >= 2 && tag[0] == 'F') {
    std::string digits(tag.substr(1));
    for (char c : digits)
      if (c < '0' || c > '9') throw InvalidRing("unknown ring tag '" + std::string(tag) + "'");
    return prime_field(Integer(digits));
  }
  throw InvalidRing("unknown ring tag '" + std::string(tag) + "'");
}

std::string Ring::tag() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "F" + p_.get_str();
  }
  return "?";
}

Scalar Ring::reduce(const Scalar& v) const {
  switch (kind_) {
    case Kind::Rationals: return v;
    case Kind::Integers:
      if (v.get_den() != 1) throw DomainError(v.get_str() + " is not an integer");
      return v;
    case Kind::PrimeField: {
      Integer num = v.get_num(), den = v.get_den();
      mpz_mod(num.get_mpz_t(), num.get_mpz_t(), p_.get_mpz_t());
      if (den != 1) {
        Integer inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p_.get_mpz_t()) == 0)
          throw DomainError(v.get_str() + " has denominator divisible by " + p_.get_str());
        num *= inv;
        mpz_mod(num.get_mpz_t(), num.get_mpz_t(), p_.get_mpz_t());
      }
      return Scalar(num);
    }
  }
  return v;
}

bool Ring::contains(const Scalar& v) const {
  switch (kind_) {
    case Kind::Rationals: return true;
    case Kind::Integers: return v.get_den() == 1;
    case Kind::PrimeField: return v.get_den() == 1 && sgn(v) >= 0 && v.get_num() < p_;
  }
  return false;
}

bool Ring::is_unit(const Scalar& a) const {
  if (kind_ == Kind::Integers) return a == 1 || a == -1;
  return !is_zero(a);
}

Scalar Ring::inverse(const Scalar& a) const {
  if (!is_unit(a)) throw DivisibilityError(a.get_str() + " is not a unit in " + tag());
  if (kind_ == Kind::PrimeField) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), a.get_num().get_mpz_t(), p_.get_mpz_t());
    return Scalar(inv);
  }
  return 1 / a;
}

Scalar Ring::divide_exact(const Scalar& a, const Scalar& b) const {
  if (is_zero(b)) {
    if (is_zero(a)) return zero();
    throw DivisibilityError("division of " + a.get_str() + " by zero");
  }
  switch (kind_) {
    case Kind::Rationals: return a / b;
    case Kind::PrimeField: return mul(a, inverse(b));
    case Kind::Integers:
      if (!mpz_divisible_p(a.get_num().get_mpz_t(), b.get_num().get_mpz_t()))
        throw DivisibilityError(b.get_str() + " does not divide " + a.get_str());
      return Scalar(Integer(a.get_num() / b.get_num()));
  }
  return a;
}

Integer Ring::size(const Scalar& a) const {
  if (kind_ == Kind::Integers) return abs(a.get_num());
  return is_zero(a) ? 0 : 1;
}

Scalar Ring::quotient(const Scalar& a, const Scalar& b) const {
  if (kind_ != Kind::Integers) return divide_exact(a, b);
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
  return Scalar(q);
}

Scalar Ring::normalizing_unit(const Scalar& a) const {
  if (is_zero(a)) return one();
  if (kind_ == Kind::Integers) return Scalar(sgn(a) < 0 ? -1 : 1);
  return inverse(a);
}

std::string Ring::to_string(const Scalar& a) const { return a.get_str(); }

Scalar Ring::parse_scalar(std::string_view text) const {
  std::string s(text);
  if (s.empty()) throw DomainError("empty scalar");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  std::size_t slash = s.find('/');
  auto digits_only = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  bool ok = slash == std::string::npos ? digits_only(start, s.size())
                                       : digits_only(start, slash) && digits_only(slash + 1, s.size());
  if (!ok) throw DomainError("malformed scalar '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Scalar v;
  if (slash == std::string::npos) {
    v = Scalar(Integer(s));
  } else {
    Integer den(s.substr(s.find('/') + 1));
    if (den == 0) throw DomainError("zero denominator in '" + s + "'");
    v = Scalar(Integer(s.substr(0, s.find('/'))), den);
    v.canonicalize();
  }
  return reduce(v);
}

}  // namespace halg
