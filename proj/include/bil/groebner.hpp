// groebner.hpp -- Buchberger engine and the ideal-theoretic toolbox.
#pragma once

#include <optional>
#include <vector>

#include "bil/ring.hpp"

namespace bil {

class Ideal {
 public:
  Ideal() : ring_(nullptr) {}
  explicit Ideal(const PolyRing* ring) : ring_(ring) {}
  Ideal(const PolyRing* ring, std::vector<Polynomial> gens);

  const PolyRing* ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }

  // Unique reduced Groebner basis for the ring order, monic, sorted by
  // ascending lead monomial.  Cached after the first call.
  const std::vector<Polynomial>& groebner() const;
  bool has_cached_groebner() const { return gb_.has_value(); }

  void mark_saturated() const { saturated_ = true; }
  std::optional<bool> known_saturated() const { return saturated_; }
  std::optional<int> known_codim() const { return codim_; }
  void cache_codim(int c) const { codim_ = c; }

 private:
  const PolyRing* ring_;
  std::vector<Polynomial> gens_;
  mutable std::optional<std::vector<Polynomial>> gb_;
  mutable std::optional<int> codim_;
  mutable std::optional<bool> saturated_;
};

// Reduced Groebner basis of an explicit generator list.
std::vector<Polynomial> buchberger(const PolyRing* ring,
                                   const std::vector<Polynomial>& gens);

// Unique remainder of f modulo the (not necessarily reduced) basis G.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G);
Polynomial normal_form(const Polynomial& f, const Ideal& I);

bool ideal_contains(const Ideal& I, const Polynomial& f);
bool ideal_contains(const Ideal& I, const Ideal& J);  // J subset of I
bool ideal_equal(const Ideal& I, const Ideal& J);
bool is_unit_ideal(const Ideal& I);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_multiply(const Ideal& I, const Polynomial& f);

// (I : J) = {f : fJ in I}, via the intersection route (I:g) = (I cap (g))/g.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);
Ideal ideal_quotient(const Ideal& I, const Polynomial& g);

// (I : J^inf), stabilized iterated quotient.
Ideal saturation(const Ideal& I, const Ideal& J);
// saturation with respect to the irrelevant maximal ideal
Ideal saturate_irrelevant(const Ideal& I);
Ideal irrelevant_ideal(const PolyRing* ring);

// I cap k[remaining vars], via a block elimination order; the result is
// returned in the original ring (its generators avoid the given variables).
Ideal eliminate(const Ideal& I, const std::vector<int>& vars);

// I cap J via the auxiliary-variable trick.
Ideal intersect(const Ideal& I, const Ideal& J);

// true iff (I : f) = I
bool is_nonzerodivisor(const Polynomial& f, const Ideal& I);

// nvars - dim(R/I), from the lead-term ideal by independent-set search.
// Throws on improper ideals (GB contains a unit).
int codimension(const Ideal& I);
// dim(R/I) helper; zero ideal has dimension nvars.
int ring_quotient_dimension(const Ideal& I);

std::string to_string(const Ideal& I);  // "ideal { f1; f2; ... }"

}  // namespace bil
