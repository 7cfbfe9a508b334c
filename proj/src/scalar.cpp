#include "hopf/scalar.hpp"

#include <sstream>

namespace hopf {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::gf(std::uint32_t p) {
  if (!is_prime_u32(p)) throw structure_invalid("GF(" + std::to_string(p) + "): modulus is not prime");
  return Field{FieldKind::prime, p};
}

std::string Field::name() const {
  switch (kind) {
    case FieldKind::rationals: return "Q";
    case FieldKind::prime: return "GF(" + std::to_string(p) + ")";
    case FieldKind::ratfun: return "Q(t)";
  }
  return "?";
}

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(const BigRat& c) {
  if (c != 0) c_.push_back(c);
}

QPoly::QPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::variable() {
  QPoly p;
  p.c_ = {BigRat(0), BigRat(1)};
  return p;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigRat& QPoly::lead() const {
  if (c_.empty()) throw division_by_zero("lead coefficient of zero polynomial");
  return c_.back();
}

BigRat QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return BigRat(0);
  return c_[k];
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<BigRat> r(std::max(c_.size(), o.c_.size()), BigRat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<BigRat> r(std::max(c_.size(), o.c_.size()), BigRat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-() const {
  std::vector<BigRat> r(c_);
  for (auto& x : r) x = -x;
  QPoly p;
  p.c_ = std::move(r);
  return p;
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<BigRat> r(c_.size() + o.c_.size() - 1, BigRat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return QPoly(std::move(r));
}

void QPoly::divmod(const QPoly& d, QPoly& q, QPoly& r) const {
  if (d.is_zero()) throw division_by_zero("polynomial division by zero");
  std::vector<BigRat> rem(c_);
  int dd = d.degree();
  std::vector<BigRat> quot;
  if (static_cast<int>(rem.size()) - 1 >= dd)
    quot.assign(rem.size() - dd, BigRat(0));
  for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
    if (rem[k] == 0) continue;
    BigRat f = rem[k] / d.c_.back();
    quot[k - dd] = f;
    for (int i = 0; i <= dd; ++i) rem[k - dd + i] -= f * d.c_[i];
  }
  q = QPoly(std::move(quot));
  r = QPoly(std::move(rem));
}

QPoly QPoly::divided_by(const QPoly& d) const {
  QPoly q, r;
  divmod(d, q, r);
  if (!r.is_zero()) throw structure_invalid("polynomial division was not exact");
  return q;
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  QPoly r(*this);
  BigRat l = c_.back();
  for (auto& x : r.c_) x /= l;
  return r;
}

BigRat QPoly::eval(const BigRat& x) const {
  BigRat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly gcd_monic(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly q, r;
    x.divmod(y, q, r);
    x = y;
    y = r.monic();  // keeps coefficients small-ish
  }
  if (x.is_zero()) return x;
  return x.monic();
}

static std::string rat_str(const BigRat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    BigRat c = coeff(k);
    if (c == 0) continue;
    bool neg = c < 0;
    BigRat a = neg ? BigRat(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? "-" : "+");
    }
    if (k == 0) {
      os << rat_str(a);
    } else {
      if (a != 1) os << rat_str(a) << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

// --------------------------------------------------------------- Scalar

namespace {

std::uint64_t gf_inv(std::uint64_t a, std::uint32_t p) {
  if (a == 0) throw division_by_zero("inverse of 0 in GF(p)");
  long long t = 0, nt = 1;
  long long r = p, nr = static_cast<long long>(a);
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Scalar Scalar::zero(const Field& f) { return from_int(f, 0); }
Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long long n) {
  switch (f.kind) {
    case FieldKind::rationals: return Scalar(BigRat(n));
    case FieldKind::prime: {
      long long m = n % static_cast<long long>(f.p);
      if (m < 0) m += f.p;
      return Scalar(GFElem{static_cast<std::uint64_t>(m), f.p});
    }
    case FieldKind::ratfun: return Scalar(RatFun{QPoly(BigRat(n)), QPoly(BigRat(1))});
  }
  throw structure_invalid("bad field kind");
}

Scalar Scalar::from_rat(const Field& f, const BigRat& q) {
  switch (f.kind) {
    case FieldKind::rationals: return Scalar(BigRat(q));
    case FieldKind::prime: {
      BigInt num = boost::multiprecision::numerator(q);
      BigInt den = boost::multiprecision::denominator(q);
      BigInt p(f.p);
      BigInt nm = num % p;
      if (nm < 0) nm += p;
      BigInt dm = den % p;
      if (dm == 0) throw division_by_zero("denominator vanishes mod p");
      std::uint64_t nv = nm.convert_to<std::uint64_t>();
      std::uint64_t dv = dm.convert_to<std::uint64_t>();
      return Scalar(GFElem{(nv * gf_inv(dv, f.p)) % f.p, f.p});
    }
    case FieldKind::ratfun: return Scalar(RatFun{QPoly(q), QPoly(BigRat(1))});
  }
  throw structure_invalid("bad field kind");
}

Scalar Scalar::variable(const Field& f) {
  if (f.kind != FieldKind::ratfun) throw field_mismatch("t only lives in Q(t)");
  return Scalar(RatFun{QPoly::variable(), QPoly(BigRat(1))});
}

Scalar Scalar::ratfun(QPoly num, QPoly den) {
  if (den.is_zero()) throw division_by_zero("rational function with zero denominator");
  if (num.is_zero()) return Scalar(RatFun{QPoly(), QPoly(BigRat(1))});
  QPoly g = gcd_monic(num, den);
  if (g.degree() > 0) {
    num = num.divided_by(g);
    den = den.divided_by(g);
  }
  BigRat l = den.lead();
  den = den.monic();
  QPoly scaled = num * QPoly(BigRat(1) / l);
  return Scalar(RatFun{std::move(scaled), std::move(den)});
}

Field Scalar::field() const {
  if (std::holds_alternative<BigRat>(v_)) return Field::rationals();
  if (std::holds_alternative<GFElem>(v_)) return Field{FieldKind::prime, std::get<GFElem>(v_).p};
  return Field::rational_functions();
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<BigRat>(&v_)) return *q == 0;
  if (auto* g = std::get_if<GFElem>(&v_)) return g->v == 0;
  return std::get<RatFun>(v_).num.is_zero();
}

bool Scalar::is_one() const {
  if (auto* q = std::get_if<BigRat>(&v_)) return *q == 1;
  if (auto* g = std::get_if<GFElem>(&v_)) return g->v == 1;
  const auto& r = std::get<RatFun>(v_);
  return r.den == QPoly(BigRat(1)) && r.num == QPoly(BigRat(1));
}

void Scalar::require_same_field(const Scalar& o) const {
  if (v_.index() != o.v_.index()) throw field_mismatch();
  if (auto* g = std::get_if<GFElem>(&v_))
    if (g->p != std::get<GFElem>(o.v_).p) throw field_mismatch();
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  if (auto* q = std::get_if<BigRat>(&v_)) return Scalar(BigRat(*q + std::get<BigRat>(o.v_)));
  if (auto* g = std::get_if<GFElem>(&v_)) {
    const auto& h = std::get<GFElem>(o.v_);
    return Scalar(GFElem{(g->v + h.v) % g->p, g->p});
  }
  const auto& a = std::get<RatFun>(v_);
  const auto& b = std::get<RatFun>(o.v_);
  return ratfun(a.num * b.den + b.num * a.den, a.den * b.den);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  if (auto* q = std::get_if<BigRat>(&v_)) return Scalar(BigRat(-*q));
  if (auto* g = std::get_if<GFElem>(&v_))
    return Scalar(GFElem{g->v == 0 ? 0 : g->p - g->v, g->p});
  const auto& r = std::get<RatFun>(v_);
  return Scalar(RatFun{-r.num, r.den});
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  if (auto* q = std::get_if<BigRat>(&v_)) return Scalar(BigRat(*q * std::get<BigRat>(o.v_)));
  if (auto* g = std::get_if<GFElem>(&v_)) {
    const auto& h = std::get<GFElem>(o.v_);
    return Scalar(GFElem{(g->v * h.v) % g->p, g->p});
  }
  const auto& a = std::get<RatFun>(v_);
  const auto& b = std::get<RatFun>(o.v_);
  return ratfun(a.num * b.num, a.den * b.den);
}

Scalar Scalar::inv() const {
  if (is_zero()) throw division_by_zero();
  if (auto* q = std::get_if<BigRat>(&v_)) return Scalar(BigRat(1 / *q));
  if (auto* g = std::get_if<GFElem>(&v_)) return Scalar(GFElem{gf_inv(g->v, g->p), g->p});
  const auto& r = std::get<RatFun>(v_);
  return ratfun(r.den, r.num);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::pow(long long n) const {
  Scalar base = *this;
  if (n < 0) {
    base = base.inv();
    n = -n;
  }
  Scalar acc = Scalar::one(field());
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  require_same_field(o);
  return v_ == o.v_;
}

Scalar Scalar::eval_at(const BigRat& q) const {
  if (auto* r = std::get_if<RatFun>(&v_)) {
    BigRat d = r->den.eval(q);
    if (d == 0) throw division_by_zero("denominator vanishes at evaluation point");
    return Scalar(BigRat(r->num.eval(q) / d));
  }
  if (std::holds_alternative<BigRat>(v_)) return *this;
  throw field_mismatch("eval_at applies to Q(t) or Q scalars");
}

const BigRat& Scalar::rational() const { return std::get<BigRat>(v_); }
std::uint64_t Scalar::residue() const { return std::get<GFElem>(v_).v; }
const QPoly& Scalar::num() const { return std::get<RatFun>(v_).num; }
const QPoly& Scalar::den() const { return std::get<RatFun>(v_).den; }

std::string Scalar::str() const {
  if (auto* q = std::get_if<BigRat>(&v_)) return rat_str(*q);
  if (auto* g = std::get_if<GFElem>(&v_)) return std::to_string(g->v);
  const auto& r = std::get<RatFun>(v_);
  if (r.den == QPoly(BigRat(1))) return r.num.str();
  return "(" + r.num.str() + ")/(" + r.den.str() + ")";
}

}  // namespace hopf
