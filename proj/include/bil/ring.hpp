// ring.hpp -- multivariate polynomial rings with graded monomial orders.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bil/scalar.hpp"

namespace bil {

constexpr int kMaxVars = 12;

// Dense exponent vector.  Only the first nvars entries of a ring are live.
struct Mono {
  std::int32_t deg = 0;
  std::array<std::int16_t, kMaxVars> e{};

  bool is_one() const { return deg == 0; }
  bool operator==(const Mono& o) const { return deg == o.deg && e == o.e; }
};

Mono mono_mul(const Mono& a, const Mono& b);
// b must divide a.
Mono mono_div(const Mono& a, const Mono& b);
bool mono_divides(const Mono& a, const Mono& b);  // a | b
Mono mono_lcm(const Mono& a, const Mono& b);
bool mono_coprime(const Mono& a, const Mono& b);

enum class OrderKind { grevlex, block };

// grevlex: graded reverse lexicographic on all variables.
// block:   variables [0, split) are compared first (grevlex within the block),
//          ties broken by grevlex on the rest; eliminates the leading block.
struct MonOrder {
  OrderKind kind = OrderKind::grevlex;
  int split = 0;
};

class PolyRing {
 public:
  PolyRing(std::vector<std::string> vars, Field field,
           MonOrder order = MonOrder{});

  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const Field& field() const { return field_; }
  const MonOrder& order() const { return order_; }
  int var_index(const std::string& name) const;  // -1 if absent

  // three-way comparison in the ring order: <0, 0, >0 as a <,==,> b
  int cmp(const Mono& a, const Mono& b) const;

  bool same_structure(const PolyRing& o) const {
    return vars_ == o.vars_ && field_ == o.field_;
  }

 private:
  std::vector<std::string> vars_;
  Field field_;
  MonOrder order_;
};

struct Term {
  Mono m;
  Scalar c;
};

// Sparse polynomial; terms strictly descending in the ring order, no zeros.
class Polynomial {
 public:
  Polynomial() : ring_(nullptr) {}
  explicit Polynomial(const PolyRing* ring) : ring_(ring) {}
  Polynomial(const PolyRing* ring, std::vector<Term> terms);

  const PolyRing* ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& lead() const;
  const Mono& lead_mono() const { return lead().m; }
  const Scalar& lead_coeff() const { return lead().c; }

  // Total degree of the highest term; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.empty() || terms_[0].m.is_one(); }
  // true iff no live variable from `vars` (indices) appears
  bool avoids_vars(const std::vector<int>& vars) const;

  bool operator==(const Polynomial& o) const;

  static Polynomial zero(const PolyRing* r) { return Polynomial(r); }
  static Polynomial constant(const PolyRing* r, const Scalar& c);
  static Polynomial variable(const PolyRing* r, int idx, int exp = 1);
  static Polynomial monomial(const PolyRing* r, const Mono& m, const Scalar& c);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  Polynomial mul_term(const Mono& m, const Scalar& c) const;
  Polynomial mul_scalar(const Scalar& c) const;
  Polynomial monic() const;
  Polynomial pow(unsigned k) const;

  // a -= c * x^m * b, the Buchberger reduction step
  static void axpy_term(Polynomial& a, const Scalar& c, const Mono& m,
                        const Polynomial& b);

  Polynomial homogeneous_component(int d) const;

  // Exact division: returns the quotient if divisor*q == *this, else nullopt.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  // Re-sorts the term list into `target`'s order (same variables and field).
  Polynomial transplanted(const PolyRing* target) const;

 private:
  const PolyRing* ring_;
  std::vector<Term> terms_;

  void normalize();
};

// Text grammar: identifiers for variables, `^` for powers, `*` optional
// between a coefficient and a monomial; e.g. "x^2*y - 3*z*w^2".
Polynomial parse_polynomial(const PolyRing* ring, const std::string& text);
std::string to_string(const Polynomial& f);

// All monomials of total degree d, sorted descending in the ring order.
std::vector<Mono> monomials_of_degree(const PolyRing& ring, int d);

}  // namespace bil
