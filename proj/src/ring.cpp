// ring.cpp -- polynomial arithmetic, monomial orders, text grammar.
#include "bil/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace bil {

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r;
  r.deg = a.deg + b.deg;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::int16_t>(a.e[i] + b.e[i]);
  return r;
}

Mono mono_div(const Mono& a, const Mono& b) {
  Mono r;
  r.deg = a.deg - b.deg;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::int16_t>(a.e[i] - b.e[i]);
  return r;
}

bool mono_divides(const Mono& a, const Mono& b) {
  if (a.deg > b.deg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r;
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    d += r.e[i];
  }
  r.deg = d;
  return r;
}

bool mono_coprime(const Mono& a, const Mono& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

PolyRing::PolyRing(std::vector<std::string> vars, Field field, MonOrder order)
    : vars_(std::move(vars)), field_(field), order_(order) {
  require(vars_.size() >= 2, "a polynomial ring needs at least 2 variables");
  require(vars_.size() <= kMaxVars, "too many variables");
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      require(vars_[i] != vars_[j], "duplicate variable name: " + vars_[i]);
}

int PolyRing::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

// grevlex within [lo, hi): higher total degree wins; on ties the monomial
// with the smaller exponent at the last differing position is larger.
int cmp_grevlex_range(const Mono& a, const Mono& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int PolyRing::cmp(const Mono& a, const Mono& b) const {
  const int n = nvars();
  if (order_.kind == OrderKind::grevlex) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    for (int i = n - 1; i >= 0; --i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    return 0;
  }
  int c = cmp_grevlex_range(a, b, 0, order_.split);
  if (c != 0) return c;
  return cmp_grevlex_range(a, b, order_.split, n);
}

Polynomial::Polynomial(const PolyRing* ring, std::vector<Term> terms)
    : ring_(ring), terms_(std::move(terms)) {
  normalize();
}

void Polynomial::normalize() {
  const Field& F = ring_->field();
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return ring_->cmp(a.m, b.m) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c = F.add(out.back().c, t.c);
    else
      out.push_back(t);
  }
  std::erase_if(out, [&](const Term& t) { return F.is_zero(t.c); });
  terms_ = std::move(out);
}

const Term& Polynomial::lead() const {
  require(!terms_.empty(), "lead of zero polynomial");
  return terms_[0];
}

int Polynomial::degree() const {
  int d = -1;
  for (auto& t : terms_) d = std::max(d, static_cast<int>(t.m.deg));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  for (auto& t : terms_)
    if (t.m.deg != terms_[0].m.deg) return false;
  return true;
}

bool Polynomial::avoids_vars(const std::vector<int>& vars) const {
  for (auto& t : terms_)
    for (int v : vars)
      if (t.m.e[v] > 0) return false;
  return true;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  const Field& F = ring_->field();
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].m == o.terms_[i].m) || !F.eq(terms_[i].c, o.terms_[i].c))
      return false;
  return true;
}

Polynomial Polynomial::constant(const PolyRing* r, const Scalar& c) {
  if (r->field().is_zero(c)) return Polynomial(r);
  return Polynomial(r, {Term{Mono{}, c}});
}

Polynomial Polynomial::variable(const PolyRing* r, int idx, int exp) {
  require(idx >= 0 && idx < r->nvars(), "variable index out of range");
  Mono m;
  m.deg = exp;
  m.e[idx] = static_cast<std::int16_t>(exp);
  return Polynomial(r, {Term{m, r->field().one()}});
}

Polynomial Polynomial::monomial(const PolyRing* r, const Mono& m, const Scalar& c) {
  if (r->field().is_zero(c)) return Polynomial(r);
  return Polynomial(r, {Term{m, c}});
}

namespace {

std::vector<Term> merge_terms(const PolyRing* ring, const std::vector<Term>& a,
                              const std::vector<Term>& b, bool subtract) {
  const Field& F = ring->field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ring->cmp(a[i].m, b[j].m);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Term t = b[j++];
      if (subtract) t.c = F.neg(t.c);
      out.push_back(t);
    } else {
      Scalar s = subtract ? F.sub(a[i].c, b[j].c) : F.add(a[i].c, b[j].c);
      if (!F.is_zero(s)) out.push_back(Term{a[i].m, s});
      ++i;
      ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) {
    Term t = b[j++];
    if (subtract) t.c = F.neg(t.c);
    out.push_back(t);
  }
  return out;
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require(a.ring_->same_structure(*b.ring_), "ring mismatch");
  Polynomial r(a.ring_);
  r.terms_ = merge_terms(a.ring_, a.terms_, b.terms_, false);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require(a.ring_->same_structure(*b.ring_), "ring mismatch");
  Polynomial r(a.ring_);
  r.terms_ = merge_terms(a.ring_, a.terms_, b.terms_, true);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_ = terms_;
  const Field& F = ring_->field();
  for (auto& t : r.terms_) t.c = F.neg(t.c);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require(a.ring_->same_structure(*b.ring_), "ring mismatch");
  const PolyRing* ring = a.ring_;
  const Field& F = ring->field();
  if (a.is_zero() || b.is_zero()) return Polynomial(ring);
  // accumulate into an order-keyed map; keeps the result canonical
  auto cmp = [ring](const Mono& x, const Mono& y) { return ring->cmp(x, y) > 0; };
  std::map<Mono, Scalar, decltype(cmp)> acc(cmp);
  for (auto& ta : a.terms_) {
    for (auto& tb : b.terms_) {
      Mono m = mono_mul(ta.m, tb.m);
      Scalar c = F.mul(ta.c, tb.c);
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(m, c);
      else
        it->second = F.add(it->second, c);
    }
  }
  Polynomial r(ring);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!F.is_zero(c)) r.terms_.push_back(Term{m, c});
  return r;
}

Polynomial Polynomial::mul_term(const Mono& m, const Scalar& c) const {
  const Field& F = ring_->field();
  if (F.is_zero(c)) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.push_back(Term{mono_mul(t.m, m), F.mul(t.c, c)});
  return r;
}

Polynomial Polynomial::mul_scalar(const Scalar& c) const { return mul_term(Mono{}, c); }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return mul_scalar(ring_->field().inv(lead_coeff()));
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = Polynomial::constant(ring_, ring_->field().one());
  Polynomial base = *this;
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

void Polynomial::axpy_term(Polynomial& a, const Scalar& c, const Mono& m,
                           const Polynomial& b) {
  a = a - b.mul_term(m, c);
}

Polynomial Polynomial::homogeneous_component(int d) const {
  Polynomial r(ring_);
  for (auto& t : terms_)
    if (t.m.deg == d) r.terms_.push_back(t);
  return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  require(!divisor.is_zero(), "division by zero polynomial");
  const Field& F = ring_->field();
  Polynomial rem = *this;
  Polynomial q(ring_);
  while (!rem.is_zero()) {
    const Term& lt = rem.lead();
    if (!mono_divides(divisor.lead_mono(), lt.m)) return std::nullopt;
    Mono m = mono_div(lt.m, divisor.lead_mono());
    Scalar c = F.div(lt.c, divisor.lead_coeff());
    q.terms_.push_back(Term{m, c});
    axpy_term(rem, c, m, divisor);
  }
  q.normalize();
  return q;
}

Polynomial Polynomial::transplanted(const PolyRing* target) const {
  Polynomial r(target);
  r.terms_ = terms_;
  r.normalize();
  return r;
}

// ---------------------------------------------------------------------------
// text grammar

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char get() {
    skip_ws();
    return pos < s.size() ? s[pos++] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }
  std::string number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  }
  [[noreturn]] void fail_at(const std::string& msg) {
    fail(msg + " at position " + std::to_string(pos) + " in \"" + s + "\"");
  }
};

}  // namespace

Polynomial parse_polynomial(const PolyRing* ring, const std::string& text) {
  Lexer lx{text};
  const Field& F = ring->field();
  std::vector<Term> terms;

  bool first = true;
  while (true) {
    lx.skip_ws();
    if (lx.pos >= text.size()) break;
    // sign
    Scalar sign = F.one();
    char c = lx.peek();
    if (c == '+') {
      lx.get();
    } else if (c == '-') {
      lx.get();
      sign = F.neg(sign);
    } else if (!first) {
      lx.fail_at("expected '+' or '-'");
    }
    first = false;

    // term: optional coefficient, then variable powers
    Scalar coeff = sign;
    Mono m;
    bool saw_factor = false;
    bool expect_factor = true;
    while (expect_factor) {
      lx.skip_ws();
      char ch = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::string num = lx.number();
        mpq_class q(num);
        if (lx.peek() == '/') {
          lx.get();
          std::string den = lx.number();
          if (den.empty()) lx.fail_at("expected denominator");
          q /= mpq_class(den);
        }
        coeff = F.mul(coeff, F.from_mpq(q));
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::string name = lx.ident();
        int idx = ring->var_index(name);
        if (idx < 0) lx.fail_at("unknown variable '" + name + "'");
        int exp = 1;
        if (lx.peek() == '^') {
          lx.get();
          std::string num = lx.number();
          if (num.empty()) lx.fail_at("expected exponent");
          exp = std::stoi(num);
          if (exp < 0) lx.fail_at("negative exponent");
        }
        m.e[idx] = static_cast<std::int16_t>(m.e[idx] + exp);
        m.deg += exp;
        saw_factor = true;
      } else {
        lx.fail_at("expected a coefficient or variable");
      }
      // '*' continues the product; juxtaposed variables also continue
      if (lx.eat('*')) {
        expect_factor = true;
      } else {
        char nxt = lx.peek();
        expect_factor =
            (std::isalpha(static_cast<unsigned char>(nxt)) || nxt == '_');
      }
    }
    if (!saw_factor) lx.fail_at("empty term");
    if (!F.is_zero(coeff)) terms.push_back(Term{m, coeff});
  }
  return Polynomial(ring, std::move(terms));
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const PolyRing* ring = f.ring();
  const Field& F = ring->field();
  std::ostringstream os;
  bool first = true;
  for (auto& t : f.terms()) {
    std::string cs = F.to_string(t.c);
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit_coeff = (cs == "1");
    if (!unit_coeff || t.m.is_one()) {
      os << cs;
      if (!t.m.is_one()) os << "*";
    }
    bool first_var = true;
    for (int i = 0; i < ring->nvars(); ++i) {
      if (t.m.e[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << ring->vars()[i];
      if (t.m.e[i] > 1) os << "^" << t.m.e[i];
    }
  }
  return os.str();
}

std::vector<Mono> monomials_of_degree(const PolyRing& ring, int d) {
  require(d >= 0, "monomials_of_degree requires d >= 0");
  std::vector<Mono> out;
  Mono cur;
  const int n = ring.nvars();
  // enumerate all exponent vectors summing to d
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == n - 1) {
      cur.e[var] = static_cast<std::int16_t>(remaining);
      cur.deg = d;
      out.push_back(cur);
      cur.e[var] = 0;
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      cur.e[var] = static_cast<std::int16_t>(k);
      self(self, var + 1, remaining - k);
    }
    cur.e[var] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(),
            [&](const Mono& a, const Mono& b) { return ring.cmp(a, b) > 0; });
  return out;
}

}  // namespace bil
