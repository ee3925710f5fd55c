// scalar.hpp -- exact coefficient arithmetic: rationals (GMP) or F_p residues.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "bil/common.hpp"

namespace bil {

constexpr long kDefaultPrime = 32003;

// A scalar is interpreted through the Field that owns it.  When the field has
// characteristic p, only `rep` is live (in [0,p)); over the rationals only
// `rat` is live, kept in lowest terms with positive denominator.
struct Scalar {
  mpq_class rat;
  long rep = 0;
};

class Field {
 public:
  // p == 0 selects the rationals; otherwise p must be an odd prime.
  explicit Field(long p = kDefaultPrime) : p_(p) {
    if (p != 0) {
      require(p >= 3 && (p % 2) != 0, "field characteristic must be 0 or an odd prime");
      require(is_prime(p), "field characteristic must be prime");
    }
  }

  long characteristic() const { return p_; }
  bool rational() const { return p_ == 0; }
  bool operator==(const Field& o) const { return p_ == o.p_; }

  Scalar zero() const { return Scalar{}; }
  Scalar one() const { return from_long(1); }

  Scalar from_long(long v) const {
    Scalar s;
    if (p_ == 0) {
      s.rat = v;
    } else {
      s.rep = v % p_;
      if (s.rep < 0) s.rep += p_;
    }
    return s;
  }

  Scalar from_mpq(const mpq_class& q) const {
    Scalar s;
    if (p_ == 0) {
      s.rat = q;
      s.rat.canonicalize();
    } else {
      mpz_class num = q.get_num() % p_;
      mpz_class den = q.get_den() % p_;
      long n = num.get_si(), d = den.get_si();
      if (n < 0) n += p_;
      if (d < 0) d += p_;
      require(d != 0, "denominator divisible by field characteristic");
      s.rep = mul_mod(n, inv_mod(d));
    }
    return s;
  }

  bool is_zero(const Scalar& a) const { return p_ == 0 ? a.rat == 0 : a.rep == 0; }
  bool is_one(const Scalar& a) const { return p_ == 0 ? a.rat == 1 : a.rep == 1; }
  bool eq(const Scalar& a, const Scalar& b) const {
    return p_ == 0 ? a.rat == b.rat : a.rep == b.rep;
  }

  Scalar add(const Scalar& a, const Scalar& b) const {
    Scalar s;
    if (p_ == 0)
      s.rat = a.rat + b.rat;
    else
      s.rep = (a.rep + b.rep) % p_;
    return s;
  }
  Scalar sub(const Scalar& a, const Scalar& b) const {
    Scalar s;
    if (p_ == 0)
      s.rat = a.rat - b.rat;
    else
      s.rep = (a.rep - b.rep + p_) % p_;
    return s;
  }
  Scalar mul(const Scalar& a, const Scalar& b) const {
    Scalar s;
    if (p_ == 0)
      s.rat = a.rat * b.rat;
    else
      s.rep = mul_mod(a.rep, b.rep);
    return s;
  }
  Scalar neg(const Scalar& a) const {
    Scalar s;
    if (p_ == 0)
      s.rat = -a.rat;
    else
      s.rep = a.rep == 0 ? 0 : p_ - a.rep;
    return s;
  }
  Scalar inv(const Scalar& a) const {
    require(!is_zero(a), "division by zero scalar");
    Scalar s;
    if (p_ == 0)
      s.rat = 1 / a.rat;
    else
      s.rep = inv_mod(a.rep);
    return s;
  }
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  std::string to_string(const Scalar& a) const {
    if (p_ == 0) return a.rat.get_str();
    return std::to_string(a.rep);
  }

 private:
  long p_;

  long mul_mod(long a, long b) const {
    return static_cast<long>((static_cast<__int128>(a) * b) % p_);
  }

  long inv_mod(long a) const {
    require(a % p_ != 0, "not invertible mod p");
    long t = 0, nt = 1, r = p_, nr = a % p_;
    while (nr != 0) {
      long q = r / nr;
      long tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += p_;
    return t;
  }

  static bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }
};

}  // namespace bil
