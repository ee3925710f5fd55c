// groebner.cpp -- Buchberger with normal selection and both classical
// criteria, plus colon/saturation/elimination/intersection built on top.
#include "bil/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bil {

Ideal::Ideal(const PolyRing* ring, std::vector<Polynomial> gens) : ring_(ring) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    require(g.ring()->same_structure(*ring), "generator from a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
  const PolyRing* ring = f.ring();
  const Field& F = ring->field();
  Polynomial rem = f;
  std::vector<Term> out_terms;
  while (!rem.is_zero()) {
    const Term& lt = rem.lead();
    bool reduced = false;
    for (const auto& g : G) {
      if (mono_divides(g.lead_mono(), lt.m)) {
        Scalar c = F.div(lt.c, g.lead_coeff());
        Polynomial::axpy_term(rem, c, mono_div(lt.m, g.lead_mono()), g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      out_terms.push_back(lt);
      Polynomial::axpy_term(rem, lt.c, Mono{},
                            Polynomial::monomial(ring, lt.m, F.one()));
    }
  }
  return Polynomial(ring, std::move(out_terms));
}

namespace {

struct SPair {
  int sugar;
  Mono lcm;
  int i, j;
};

struct SPairLess {
  const PolyRing* ring;
  bool operator()(const SPair& a, const SPair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = ring->cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

std::vector<Polynomial> buchberger(const PolyRing* ring,
                                   const std::vector<Polynomial>& gens) {
  const Field& F = ring->field();
  std::vector<Polynomial> G;
  std::vector<int> sugar;
  for (const auto& g : gens) {
    if (!g.is_zero()) {
      G.push_back(g.monic());
      sugar.push_back(g.degree());
    }
  }

  std::set<SPair, SPairLess> queue(SPairLess{ring});
  std::set<std::pair<int, int>> pending;
  auto push_pairs = [&](int k) {
    for (int i = 0; i < k; ++i) {
      Mono l = mono_lcm(G[i].lead_mono(), G[k].lead_mono());
      int s = std::max(sugar[i] + l.deg - G[i].lead_mono().deg,
                       sugar[k] + l.deg - G[k].lead_mono().deg);
      queue.insert(SPair{s, l, i, k});
      pending.insert({i, k});
    }
  };
  for (int k = 0; k < static_cast<int>(G.size()); ++k) push_pairs(k);

  while (!queue.empty()) {
    SPair p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({p.i, p.j});

    // product criterion
    if (mono_coprime(G[p.i].lead_mono(), G[p.j].lead_mono())) continue;
    // chain criterion (both companion pairs must no longer be pending)
    bool skip = false;
    for (int k = 0; k < static_cast<int>(G.size()) && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!mono_divides(G[k].lead_mono(), p.lcm)) continue;
      auto key = [&](int a, int b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) skip = true;
    }
    if (skip) continue;

    const Polynomial& fi = G[p.i];
    const Polynomial& fj = G[p.j];
    Polynomial s = fi.mul_term(mono_div(p.lcm, fi.lead_mono()), F.one()) -
                   fj.mul_term(mono_div(p.lcm, fj.lead_mono()), F.one());
    Polynomial r = normal_form(s, G);
    if (r.is_zero()) continue;
    G.push_back(r.monic());
    sugar.push_back(p.sugar);
    push_pairs(static_cast<int>(G.size()) - 1);
  }

  // minimalize: drop elements whose lead is divisible by another kept lead
  std::vector<bool> keep(G.size(), true);
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (!keep[i]) continue;
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (mono_divides(G[j].lead_mono(), G[i].lead_mono()) &&
          !(G[i].lead_mono() == G[j].lead_mono() && j > i)) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<Polynomial> M;
  for (std::size_t i = 0; i < G.size(); ++i)
    if (keep[i]) M.push_back(G[i]);

  // tail-reduce to the unique reduced basis
  std::vector<Polynomial> R;
  for (std::size_t i = 0; i < M.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < M.size(); ++j)
      if (j != i) others.push_back(M[j]);
    Polynomial r = normal_form(M[i], others);
    if (!r.is_zero()) R.push_back(r.monic());
  }
  std::sort(R.begin(), R.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->cmp(a.lead_mono(), b.lead_mono()) < 0;
  });
  return R;
}

const std::vector<Polynomial>& Ideal::groebner() const {
  if (!gb_) gb_ = buchberger(ring_, gens_);
  return *gb_;
}

Polynomial normal_form(const Polynomial& f, const Ideal& I) {
  return normal_form(f, I.groebner());
}

bool ideal_contains(const Ideal& I, const Polynomial& f) {
  return normal_form(f, I).is_zero();
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
  for (const auto& g : J.gens())
    if (!ideal_contains(I, g)) return false;
  return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  const auto& a = I.groebner();
  const auto& b = J.groebner();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

bool is_unit_ideal(const Ideal& I) {
  const auto& gb = I.groebner();
  return gb.size() == 1 && gb[0].lead_mono().is_one();
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  std::vector<Polynomial> gens = I.gens();
  for (const auto& g : J.gens()) gens.push_back(g);
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  std::vector<Polynomial> gens;
  for (const auto& f : I.gens())
    for (const auto& g : J.gens()) gens.push_back(f * g);
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_multiply(const Ideal& I, const Polynomial& f) {
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(g * f);
  return Ideal(I.ring(), std::move(gens));
}

namespace {

// polynomial with variables mapped through perm (source index -> target index)
Polynomial map_vars(const Polynomial& f, const PolyRing* target,
                    const std::vector<int>& perm) {
  std::vector<Term> ts;
  ts.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Mono m;
    m.deg = t.m.deg;
    for (int i = 0; i < kMaxVars; ++i)
      if (t.m.e[i] != 0) m.e[perm[i]] = t.m.e[i];
    ts.push_back(Term{m, t.c});
  }
  return Polynomial(target, std::move(ts));
}

}  // namespace

Ideal eliminate(const Ideal& I, const std::vector<int>& vars) {
  const PolyRing* R = I.ring();
  const int n = R->nvars();
  std::vector<bool> elim(n, false);
  for (int v : vars) {
    require(v >= 0 && v < n, "eliminate: variable index out of range");
    elim[v] = true;
  }
  // reorder: eliminated variables first, block order splitting them off
  std::vector<int> perm(kMaxVars, 0);
  std::vector<std::string> new_vars;
  for (int i = 0; i < n; ++i)
    if (elim[i]) {
      perm[i] = static_cast<int>(new_vars.size());
      new_vars.push_back(R->vars()[i]);
    }
  int nelim = static_cast<int>(new_vars.size());
  for (int i = 0; i < n; ++i)
    if (!elim[i]) {
      perm[i] = static_cast<int>(new_vars.size());
      new_vars.push_back(R->vars()[i]);
    }
  PolyRing E(new_vars, R->field(), MonOrder{OrderKind::block, nelim});

  std::vector<Polynomial> egens;
  for (const auto& g : I.gens()) egens.push_back(map_vars(g, &E, perm));
  auto gb = buchberger(&E, egens);

  std::vector<int> elim_idx;
  for (int i = 0; i < nelim; ++i) elim_idx.push_back(i);
  std::vector<int> back(kMaxVars, 0);
  for (int i = 0; i < n; ++i) back[perm[i]] = i;
  std::vector<Polynomial> kept;
  for (const auto& g : gb)
    if (g.avoids_vars(elim_idx)) kept.push_back(map_vars(g, R, back));
  return Ideal(R, std::move(kept));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  const PolyRing* R = I.ring();
  require(R->same_structure(*J.ring()), "intersect: ring mismatch");
  if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal(R);

  std::vector<std::string> new_vars = {"@t"};
  for (const auto& v : R->vars()) new_vars.push_back(v);
  PolyRing E(new_vars, R->field(), MonOrder{OrderKind::block, 1});
  std::vector<int> perm(kMaxVars, 0);
  for (int i = 0; i < R->nvars(); ++i) perm[i] = i + 1;

  Polynomial t = Polynomial::variable(&E, 0);
  Polynomial one = Polynomial::constant(&E, E.field().one());
  std::vector<Polynomial> egens;
  for (const auto& g : I.gens()) egens.push_back(t * map_vars(g, &E, perm));
  for (const auto& g : J.gens())
    egens.push_back((one - t) * map_vars(g, &E, perm));

  auto gb = buchberger(&E, egens);
  std::vector<int> tvar = {0};
  std::vector<int> back(kMaxVars, 0);
  for (int i = 0; i < R->nvars(); ++i) back[i + 1] = i;
  std::vector<Polynomial> kept;
  for (const auto& g : gb)
    if (g.avoids_vars(tvar)) kept.push_back(map_vars(g, R, back));
  return Ideal(R, std::move(kept));
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& g) {
  const PolyRing* R = I.ring();
  if (g.is_zero()) {
    // (I : 0) = (1)
    return Ideal(R, {Polynomial::constant(R, R->field().one())});
  }
  Ideal cap = intersect(I, Ideal(R, {g}));
  std::vector<Polynomial> gens;
  for (const auto& h : cap.gens()) {
    auto q = h.divide_exact(g);
    require(q.has_value(), "quotient: exact division failed");
    gens.push_back(*q);
  }
  return Ideal(R, std::move(gens));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  const PolyRing* R = I.ring();
  require(R->same_structure(*J.ring()), "quotient: ring mismatch");
  if (J.is_zero_ideal())
    return Ideal(R, {Polynomial::constant(R, R->field().one())});
  Ideal acc = ideal_quotient(I, J.gens()[0]);
  for (std::size_t k = 1; k < J.gens().size(); ++k)
    acc = intersect(acc, ideal_quotient(I, J.gens()[k]));
  return acc;
}

Ideal saturation(const Ideal& I, const Ideal& J) {
  Ideal cur = I;
  for (int round = 0; round < 256; ++round) {
    Ideal next = ideal_quotient(cur, J);
    if (ideal_equal(next, cur)) return cur;
    cur = next;
  }
  fail("saturation did not stabilize");
}

Ideal irrelevant_ideal(const PolyRing* ring) {
  std::vector<Polynomial> gens;
  for (int i = 0; i < ring->nvars(); ++i)
    gens.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

Ideal saturate_irrelevant(const Ideal& I) {
  Ideal s = saturation(I, irrelevant_ideal(I.ring()));
  s.mark_saturated();
  return s;
}

bool is_nonzerodivisor(const Polynomial& f, const Ideal& I) {
  if (f.is_zero()) return is_unit_ideal(I);
  return ideal_equal(ideal_quotient(I, f), I);
}

int ring_quotient_dimension(const Ideal& I) {
  const PolyRing* R = I.ring();
  const int n = R->nvars();
  const auto& gb = I.groebner();
  if (gb.empty()) return n;
  for (const auto& g : gb)
    require(!g.lead_mono().is_one(), "improper ideal: contains a unit");

  // dim = size of the largest variable set S with no lead monomial
  // supported inside S
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& g : gb) {
      bool inside = true;
      for (int v = 0; v < n && inside; ++v)
        if (g.lead_mono().e[v] > 0 && !(mask & (1u << v))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

int codimension(const Ideal& I) {
  if (I.known_codim()) return *I.known_codim();
  int c = I.ring()->nvars() - ring_quotient_dimension(I);
  I.cache_codim(c);
  return c;
}

std::string to_string(const Ideal& I) {
  std::ostringstream os;
  os << "ideal { ";
  for (std::size_t i = 0; i < I.gens().size(); ++i) {
    if (i) os << "; ";
    os << to_string(I.gens()[i]);
  }
  os << " }";
  return os.str();
}

}  // namespace bil
