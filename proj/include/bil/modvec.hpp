// modvec.hpp -- vectors over free modules, module Groebner bases, syzygies.
#pragma once

#include <optional>
#include <vector>

#include "bil/groebner.hpp"

namespace bil {

struct VTerm {
  Mono m;
  std::int32_t comp;
  Scalar c;
};

// Free-module context.  `twists` are the generator degrees of the free
// module, so a homogeneous vector v has deg(v) = deg(v_i) + twists[i].
// Components below `split` dominate components at or above it (position
// over term between the blocks); inside a block the order is term over
// position.  The trailing block carries syzygy tags.
struct ModCtx {
  const PolyRing* ring = nullptr;
  std::vector<int> twists;
  int split = 0;  // == ncomp() when there is no tag block

  int ncomp() const { return static_cast<int>(twists.size()); }
  int cmp(const VTerm& a, const VTerm& b) const;
};

class Vec {
 public:
  std::vector<VTerm> t;  // strictly descending in the module order

  bool is_zero() const { return t.empty(); }
  const VTerm& lead() const {
    require(!t.empty(), "lead of zero vector");
    return t[0];
  }
  // degree of a homogeneous vector; -1 for zero
  int degree(const ModCtx& ctx) const;
  bool is_homogeneous(const ModCtx& ctx) const;
};

Vec vec_unit(const ModCtx& ctx, int comp);
Vec vec_from_poly(const ModCtx& ctx, const Polynomial& f, int comp);
Polynomial vec_component(const ModCtx& ctx, const Vec& v, int comp);

Vec vec_add(const ModCtx& ctx, const Vec& a, const Vec& b);
Vec vec_sub(const ModCtx& ctx, const Vec& a, const Vec& b);
Vec vec_neg(const ModCtx& ctx, const Vec& a);
Vec vec_mul_term(const ModCtx& ctx, const Vec& a, const Mono& m, const Scalar& c);
Vec vec_mul_poly(const ModCtx& ctx, const Vec& a, const Polynomial& f);
Vec vec_monic(const ModCtx& ctx, const Vec& a);

struct ModGB {
  ModCtx ctx;
  std::vector<Vec> g;  // reduced basis, monic, sorted by ascending lead
};

ModGB module_gb(const ModCtx& ctx, std::vector<Vec> gens);
Vec module_nf(const Vec& v, const ModGB& gb);
bool module_member(const Vec& v, const ModGB& gb);

// Column module of a matrix with caches for membership, syzygies and lifts.
// Columns live in a free module with the given twists.
class ColModule {
 public:
  ColModule(const PolyRing* ring, std::vector<int> twists,
            std::vector<Vec> cols);

  const std::vector<Vec>& cols() const { return cols_; }
  const ModCtx& base_ctx() const { return base_; }
  // degrees of the columns as elements of the base module
  const std::vector<int>& col_degrees() const { return col_degs_; }

  // generators of { c : sum c_i * col_i = 0 }, in a free module whose
  // twists are the column degrees
  const std::vector<Vec>& syzygy_gens() const;

  bool member(const Vec& v) const;
  Vec nf(const Vec& v) const;
  // coefficients expressing v in the columns, if v lies in the module
  std::optional<std::vector<Polynomial>> lift(const Vec& v) const;

 private:
  ModCtx base_;
  std::vector<Vec> cols_;
  std::vector<int> col_degs_;
  mutable std::optional<ModGB> aug_;        // tagged GB
  mutable std::optional<ModGB> plain_;      // base GB (no tags)
  mutable std::optional<std::vector<Vec>> syz_;

  const ModGB& aug_gb() const;
  const ModGB& plain_gb() const;
};

}  // namespace bil
