#include "hopf/hopf_algebra.hpp"

#include <sstream>

namespace hopf {

FinHopf::FinHopf(Field field, std::vector<std::string> labels, std::vector<Scalar> mult,
                 std::vector<Scalar> comult, Vec unit, Vec counit,
                 std::optional<Matrix> antipode)
    : n_(static_cast<int>(labels.size())),
      field_(field),
      labels_(std::move(labels)),
      mult_(std::move(mult)),
      comult_(std::move(comult)),
      unit_(std::move(unit)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
  if (n_ <= 0) throw dimension_mismatch("FinHopf needs a positive dimension");
  size_t n3 = static_cast<size_t>(n_) * n_ * n_;
  if (mult_.size() != n3 || comult_.size() != n3)
    throw dimension_mismatch("structure tensors must have n^3 entries");
  if (unit_.size() != static_cast<size_t>(n_) || counit_.size() != static_cast<size_t>(n_))
    throw dimension_mismatch("unit/counit must have n entries");
  if (antipode_ && (antipode_->rows() != n_ || antipode_->cols() != n_))
    throw dimension_mismatch("antipode matrix must be n x n");
  for (const auto& s : mult_)
    if (!(s.field() == field_)) throw field_mismatch("mult tensor entry in wrong field");
  for (const auto& s : comult_)
    if (!(s.field() == field_)) throw field_mismatch("comult tensor entry in wrong field");
  if (antipode_) antipode_inv_ = invert_matrix(*antipode_);
  build_sparse();
}

void FinHopf::build_sparse() {
  prod_sparse_.assign(static_cast<size_t>(n_) * n_, {});
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      auto& row = prod_sparse_[static_cast<size_t>(i) * n_ + j];
      for (int k = 0; k < n_; ++k) {
        const Scalar& c = mult(k, i, j);
        if (!c.is_zero()) row.emplace_back(k, c);
      }
    }
  cop_sparse_.assign(n_, {});
  for (int k = 0; k < n_; ++k) {
    auto& row = cop_sparse_[k];
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        const Scalar& c = comult(i, j, k);
        if (!c.is_zero()) row.emplace_back(i, j, c);
      }
  }
}

const Matrix& FinHopf::antipode() const {
  if (!antipode_) throw structure_invalid("no antipode stored");
  return *antipode_;
}

const Matrix& FinHopf::antipode_inv() const {
  if (!antipode_inv_) throw not_invertible("antipode is not invertible");
  return *antipode_inv_;
}

FinHopf FinHopf::with_antipode(Matrix S) const {
  return FinHopf(field_, labels_, mult_, comult_, unit_, counit_, std::move(S));
}

FinHopf FinHopf::without_antipode() const {
  return FinHopf(field_, labels_, mult_, comult_, unit_, counit_, std::nullopt);
}

FinHopf FinHopf::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != static_cast<size_t>(n_)) throw dimension_mismatch("label count");
  return FinHopf(field_, std::move(labels), mult_, comult_, unit_, counit_, antipode_);
}

Vec FinHopf::basis(int i) const {
  Vec v = zero();
  v[i] = Scalar::one(field_);
  return v;
}

Vec FinHopf::product(const Vec& x, const Vec& y) const {
  Vec r = zero();
  for (int i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (const auto& [k, c] : prod_terms(i, j)) r[k] += xy * c;
    }
  }
  return r;
}

Vec FinHopf::coproduct(const Vec& x) const {
  Vec r = zero_vec(n_ * n_, field_);
  for (int k = 0; k < n_; ++k) {
    if (x[k].is_zero()) continue;
    for (const auto& [i, j, c] : cop_terms(k)) r[static_cast<size_t>(i) * n_ + j] += x[k] * c;
  }
  return r;
}

Vec FinHopf::iterated_coproduct(const Vec& x, int k) const {
  if (k < 1) throw dimension_mismatch("iterated_coproduct needs k >= 1");
  Vec cur = x;
  size_t tail = 1;
  for (int m = 1; m < k; ++m) {
    // apply Delta to the first leg: (Delta (x) id^(m-1))
    size_t out_size = cur.size() * n_;
    Vec next = zero_vec(static_cast<int>(out_size), field_);
    for (size_t idx = 0; idx < cur.size(); ++idx) {
      if (cur[idx].is_zero()) continue;
      size_t a = idx / tail, rest = idx % tail;
      for (const auto& [i, j, c] : cop_terms(static_cast<int>(a)))
        next[(static_cast<size_t>(i) * n_ + j) * tail + rest] += cur[idx] * c;
    }
    cur = std::move(next);
    tail *= n_;
  }
  return cur;
}

Scalar FinHopf::counit_of(const Vec& x) const {
  Scalar r = Scalar::zero(field_);
  for (int i = 0; i < n_; ++i)
    if (!x[i].is_zero()) r += x[i] * counit_[i];
  return r;
}

Vec FinHopf::apply_antipode(const Vec& x) const { return antipode().apply(x); }

// ---------------------------------------------------------------- report

bool AxiomReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string AxiomReport::summary(const FinHopf& h) const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "  ok   " : "  FAIL ") << c.name;
    if (!c.pass) {
      os << " (" << c.fail_count << " failing instances)";
      if (c.witness) {
        os << " witness at (";
        for (size_t i = 0; i < c.witness->indices.size(); ++i) {
          if (i) os << ", ";
          os << h.label(c.witness->indices[i]);
        }
        os << "): lhs=" << vec_str(c.witness->lhs) << " rhs=" << vec_str(c.witness->rhs);
      }
    }
    os << "\n";
  }
  return os.str();
}

namespace {

void record(AxiomCheck& chk, std::vector<int> idx, Vec lhs, Vec rhs) {
  chk.pass = false;
  ++chk.fail_count;
  if (!chk.witness) chk.witness = AxiomWitness{std::move(idx), std::move(lhs), std::move(rhs)};
}

AxiomCheck check_associativity(const FinHopf& h) {
  AxiomCheck chk{"associativity"};
  int n = h.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec lhs = h.product(h.product(h.basis(i), h.basis(j)), h.basis(k));
        Vec rhs = h.product(h.basis(i), h.product(h.basis(j), h.basis(k)));
        if (!vec_eq(lhs, rhs)) record(chk, {i, j, k}, std::move(lhs), std::move(rhs));
      }
  return chk;
}

AxiomCheck check_unit(const FinHopf& h) {
  AxiomCheck chk{"unit"};
  for (int i = 0; i < h.dim(); ++i) {
    Vec l = h.product(h.unit(), h.basis(i));
    Vec r = h.product(h.basis(i), h.unit());
    if (!vec_eq(l, h.basis(i))) record(chk, {i}, std::move(l), h.basis(i));
    if (!vec_eq(r, h.basis(i))) record(chk, {i}, std::move(r), h.basis(i));
  }
  return chk;
}

AxiomCheck check_coassociativity(const FinHopf& h) {
  AxiomCheck chk{"coassociativity"};
  int n = h.dim();
  for (int k = 0; k < n; ++k) {
    // (Delta (x) id) Delta e_k
    Vec lhs = zero_vec(n * n * n, h.field());
    Vec rhs = zero_vec(n * n * n, h.field());
    for (const auto& [a, b, c] : h.cop_terms(k)) {
      for (const auto& [a1, a2, c2] : h.cop_terms(a))
        lhs[(static_cast<size_t>(a1) * n + a2) * n + b] += c * c2;
      for (const auto& [b1, b2, c2] : h.cop_terms(b))
        rhs[(static_cast<size_t>(a) * n + b1) * n + b2] += c * c2;
    }
    if (!vec_eq(lhs, rhs)) record(chk, {k}, std::move(lhs), std::move(rhs));
  }
  return chk;
}

AxiomCheck check_counit(const FinHopf& h) {
  AxiomCheck chk{"counit"};
  int n = h.dim();
  for (int k = 0; k < n; ++k) {
    Vec l = h.zero(), r = h.zero();
    for (const auto& [i, j, c] : h.cop_terms(k)) {
      l[j] += c * h.counit()[i];
      r[i] += c * h.counit()[j];
    }
    if (!vec_eq(l, h.basis(k))) record(chk, {k}, std::move(l), h.basis(k));
    if (!vec_eq(r, h.basis(k))) record(chk, {k}, std::move(r), h.basis(k));
  }
  return chk;
}

AxiomCheck check_comult_algebra_map(const FinHopf& h) {
  AxiomCheck chk{"comult-algebra-map"};
  int n = h.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec lhs = h.coproduct(h.product(h.basis(i), h.basis(j)));
      Vec rhs = tensor_mul(h, 2, h.coproduct(h.basis(i)), h.coproduct(h.basis(j)));
      if (!vec_eq(lhs, rhs)) record(chk, {i, j}, std::move(lhs), std::move(rhs));
    }
  Vec du = h.coproduct(h.unit());
  Vec uu = zero_vec(n * n, h.field());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) uu[static_cast<size_t>(i) * n + j] = h.unit()[i] * h.unit()[j];
  if (!vec_eq(du, uu)) record(chk, {}, std::move(du), std::move(uu));
  return chk;
}

AxiomCheck check_counit_algebra_map(const FinHopf& h) {
  AxiomCheck chk{"counit-algebra-map"};
  int n = h.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar lhs = h.counit_of(h.product(h.basis(i), h.basis(j)));
      Scalar rhs = h.counit()[i] * h.counit()[j];
      if (lhs != rhs) record(chk, {i, j}, Vec{lhs}, Vec{rhs});
    }
  Scalar ue = h.counit_of(h.unit());
  if (!ue.is_one()) record(chk, {}, Vec{ue}, Vec{Scalar::one(h.field())});
  return chk;
}

AxiomCheck check_antipode_identity(const FinHopf& h) {
  AxiomCheck chk{"antipode-identity"};
  if (!h.has_antipode()) {
    chk.pass = false;
    chk.fail_count = 1;
    return chk;
  }
  for (int k = 0; k < h.dim(); ++k) {
    Vec l = h.zero(), r = h.zero();
    for (const auto& [i, j, c] : h.cop_terms(k)) {
      Vec sl = h.product(h.apply_antipode(h.basis(i)), h.basis(j));
      Vec sr = h.product(h.basis(i), h.apply_antipode(h.basis(j)));
      for (int m = 0; m < h.dim(); ++m) {
        l[m] += c * sl[m];
        r[m] += c * sr[m];
      }
    }
    Vec target = h.zero();
    for (int m = 0; m < h.dim(); ++m) target[m] = h.counit()[k] * h.unit()[m];
    if (!vec_eq(l, target)) record(chk, {k}, std::move(l), target);
    if (!vec_eq(r, target)) record(chk, {k}, std::move(r), std::move(target));
  }
  return chk;
}

AxiomCheck check_antipode_invertible(const FinHopf& h) {
  AxiomCheck chk{"antipode-invertible"};
  if (!h.has_antipode() || !h.antipode_invertible()) {
    chk.pass = false;
    chk.fail_count = 1;
  }
  return chk;
}

}  // namespace

AxiomReport check_bialgebra_axioms(const FinHopf& h) {
  AxiomReport rep;
  rep.checks.push_back(check_associativity(h));
  rep.checks.push_back(check_unit(h));
  rep.checks.push_back(check_coassociativity(h));
  rep.checks.push_back(check_counit(h));
  rep.checks.push_back(check_comult_algebra_map(h));
  rep.checks.push_back(check_counit_algebra_map(h));
  return rep;
}

AxiomReport check_axioms(const FinHopf& h) {
  AxiomReport rep = check_bialgebra_axioms(h);
  rep.checks.push_back(check_antipode_identity(h));
  rep.checks.push_back(check_antipode_invertible(h));
  return rep;
}

// ----------------------------------------------------------- constructors

namespace {

std::string dual_label(const std::string& s) {
  if (!s.empty() && s.back() == '*') return s.substr(0, s.size() - 1);
  return s + "*";
}

}  // namespace

FinHopf dual(const FinHopf& h, bool validate) {
  if (validate) {
    AxiomReport rep = check_axioms(h);
    if (!rep.all_pass()) throw axiom_failure("dual: input fails Hopf axioms:\n" + rep.summary(h));
  }
  int n = h.dim();
  size_t n3 = static_cast<size_t>(n) * n * n;
  std::vector<Scalar> mult(n3, Scalar::zero(h.field()));
  std::vector<Scalar> comult(n3, Scalar::zero(h.field()));
  auto midx = [n](int i, int j, int k) {
    return (static_cast<size_t>(i) * n + j) * n + k;  // storage of mult(k,i,j)
  };
  auto cidx = [n](int k, int i, int j) {
    return (static_cast<size_t>(k) * n + i) * n + j;  // storage of comult(i,j,k)
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // f_i f_j = sum_k Delta-coefficient; Delta*(f_k) from the product.
        mult[midx(i, j, k)] = h.comult(i, j, k);
        comult[cidx(k, i, j)] = h.mult(k, i, j);
      }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& s : h.labels()) labels.push_back(dual_label(s));
  std::optional<Matrix> S;
  if (h.has_antipode()) S = h.antipode().transpose();
  return FinHopf(h.field(), std::move(labels), std::move(mult), std::move(comult), h.counit(),
                 h.unit(), std::move(S));
}

FinHopf variant(const FinHopf& h, VariantKind kind, bool validate) {
  if (validate) {
    AxiomReport rep = check_axioms(h);
    if (!rep.all_pass())
      throw axiom_failure("variant: input fails Hopf axioms:\n" + rep.summary(h));
  }
  int n = h.dim();
  size_t n3 = static_cast<size_t>(n) * n * n;
  std::vector<Scalar> mult(n3, Scalar::zero(h.field()));
  std::vector<Scalar> comult(n3, Scalar::zero(h.field()));
  auto midx = [n](int i, int j, int k) { return (static_cast<size_t>(i) * n + j) * n + k; };
  auto cidx = [n](int k, int i, int j) { return (static_cast<size_t>(k) * n + i) * n + j; };
  bool swap_m = kind == VariantKind::op || kind == VariantKind::opcop;
  bool swap_c = kind == VariantKind::cop || kind == VariantKind::opcop;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        mult[midx(i, j, k)] = swap_m ? h.mult(k, j, i) : h.mult(k, i, j);
        comult[cidx(k, i, j)] = swap_c ? h.comult(j, i, k) : h.comult(i, j, k);
      }
  std::optional<Matrix> S;
  if (h.has_antipode()) {
    if (kind == VariantKind::opcop)
      S = h.antipode();
    else
      S = h.antipode_inv();  // throws not_invertible when S has no inverse
  }
  return FinHopf(h.field(), h.labels(), std::move(mult), std::move(comult), h.unit(), h.counit(),
                 std::move(S));
}

std::optional<Matrix> derive_antipode(const FinHopf& h) {
  int n = h.dim();
  int unknowns = n * n;  // S[s][t], flat s*n + t
  Matrix A(2 * n * n, unknowns, h.field());
  Matrix b(2 * n * n, 1, h.field());
  // sum S(e_k1) e_k2 = eps(e_k) 1  and  sum e_k1 S(e_k2) = eps(e_k) 1,
  // one equation per (k, output component m).
  for (int k = 0; k < n; ++k) {
    for (const auto& [k1, k2, c] : h.cop_terms(k)) {
      for (int s = 0; s < n; ++s) {
        for (const auto& [m, mc] : h.prod_terms(s, k2))
          A.at(k * n + m, s * n + k1) += c * mc;
        for (const auto& [m, mc] : h.prod_terms(k1, s))
          A.at(n * n + k * n + m, s * n + k2) += c * mc;
      }
    }
    for (int m = 0; m < n; ++m) {
      Scalar t = h.counit()[k] * h.unit()[m];
      b.at(k * n + m, 0) = t;
      b.at(n * n + k * n + m, 0) = t;
    }
  }
  auto x = solve_linear(A, b);
  if (!x) return std::nullopt;
  Matrix S(n, n, h.field());
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) S.at(s, t) = x->at(s * n + t, 0);
  return S;
}

CheckResult is_morphism(const Matrix& f, const FinHopf& A, const FinHopf& B, MorphKind kind) {
  if (f.rows() != B.dim() || f.cols() != A.dim())
    throw dimension_mismatch("is_morphism: map must be dim(B) x dim(A)");
  std::ostringstream w;
  if (kind == MorphKind::algebra || kind == MorphKind::hopf) {
    for (int i = 0; i < A.dim(); ++i)
      for (int j = 0; j < A.dim(); ++j) {
        Vec lhs = f.apply(A.product(A.basis(i), A.basis(j)));
        Vec rhs = B.product(f.column(i), f.column(j));
        if (!vec_eq(lhs, rhs)) {
          w << "f(e_i e_j) != f(e_i) f(e_j) at (" << A.label(i) << ", " << A.label(j)
            << "): " << vec_str(lhs) << " vs " << vec_str(rhs);
          return {false, w.str()};
        }
      }
    if (!vec_eq(f.apply(A.unit()), B.unit())) return {false, "f(1) != 1"};
  }
  if (kind == MorphKind::coalgebra || kind == MorphKind::hopf) {
    Matrix ff = f.kron(f);
    for (int k = 0; k < A.dim(); ++k) {
      Vec lhs = B.coproduct(f.column(k));
      Vec rhs = ff.apply(A.coproduct(A.basis(k)));
      if (!vec_eq(lhs, rhs)) {
        w << "Delta(f(e_k)) != (f(x)f)(Delta e_k) at " << A.label(k);
        return {false, w.str()};
      }
      Scalar le = B.counit_of(f.column(k));
      if (le != A.counit()[k]) {
        w << "eps(f(e_k)) != eps(e_k) at " << A.label(k);
        return {false, w.str()};
      }
    }
  }
  if (kind == MorphKind::hopf) {
    if (!(f * A.antipode() == B.antipode() * f)) return {false, "f S_A != S_B f"};
  }
  return {true, ""};
}

bool same_structure(const FinHopf& a, const FinHopf& b) {
  if (a.dim() != b.dim() || !(a.field() == b.field())) return false;
  int n = a.dim();
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a.mult(k, i, j) != b.mult(k, i, j) || a.comult(i, j, k) != b.comult(i, j, k))
          return false;
  if (!vec_eq(a.unit(), b.unit()) || !vec_eq(a.counit(), b.counit())) return false;
  if (a.has_antipode() != b.has_antipode()) return false;
  if (a.has_antipode() && !(a.antipode() == b.antipode())) return false;
  return true;
}

// ------------------------------------------------- tensor-power algebra

Vec tensor_mul(const FinHopf& h, int k, const Vec& x, const Vec& y) {
  size_t size = 1;
  for (int i = 0; i < k; ++i) size *= h.dim();
  if (x.size() != size || y.size() != size) throw dimension_mismatch("tensor_mul length");
  Vec r = zero_vec(static_cast<int>(size), h.field());
  int n = h.dim();
  std::vector<int> xi(k), yi(k);
  for (size_t I = 0; I < size; ++I) {
    if (x[I].is_zero()) continue;
    size_t t = I;
    for (int d = k - 1; d >= 0; --d) {
      xi[d] = static_cast<int>(t % n);
      t /= n;
    }
    for (size_t J = 0; J < size; ++J) {
      if (y[J].is_zero()) continue;
      t = J;
      for (int d = k - 1; d >= 0; --d) {
        yi[d] = static_cast<int>(t % n);
        t /= n;
      }
      // expand the product leg by leg
      std::vector<std::pair<size_t, Scalar>> acc{{0, x[I] * y[J]}};
      for (int d = 0; d < k; ++d) {
        std::vector<std::pair<size_t, Scalar>> next;
        for (const auto& [idx, coef] : acc)
          for (const auto& [m, c] : h.prod_terms(xi[d], yi[d]))
            next.emplace_back(idx * n + m, coef * c);
        acc = std::move(next);
        if (acc.empty()) break;
      }
      for (const auto& [idx, coef] : acc) r[idx] += coef;
    }
  }
  return r;
}

Vec tensor_unit(const FinHopf& h, int k) {
  size_t size = 1;
  for (int i = 0; i < k; ++i) size *= h.dim();
  Vec r = zero_vec(static_cast<int>(size), h.field());
  int n = h.dim();
  std::vector<int> digits(k, 0);
  for (size_t I = 0; I < size; ++I) {
    size_t t = I;
    Scalar c = Scalar::one(h.field());
    for (int d = k - 1; d >= 0; --d) {
      c = c * h.unit()[t % n];
      if (c.is_zero()) break;
      t /= n;
    }
    if (!c.is_zero() && t == 0) r[I] = c;
  }
  return r;
}

std::optional<Vec> tensor_inverse(const FinHopf& h, int k, const Vec& x) {
  size_t size = x.size();
  int N = static_cast<int>(size);
  // left-multiplication operator L_x, then solve L_x y = 1
  Matrix L(N, N, h.field());
  for (int j = 0; j < N; ++j) {
    Vec ej = zero_vec(N, h.field());
    ej[j] = Scalar::one(h.field());
    Vec col = tensor_mul(h, k, x, ej);
    for (int i = 0; i < N; ++i) L.at(i, j) = col[i];
  }
  Vec one = tensor_unit(h, k);
  Matrix b(N, 1, h.field());
  for (int i = 0; i < N; ++i) b.at(i, 0) = one[i];
  auto y = solve_linear(L, b);
  if (!y) return std::nullopt;
  Vec yv = y->column(0);
  if (!vec_eq(tensor_mul(h, k, yv, x), one)) return std::nullopt;
  return yv;
}

std::optional<int> element_order(const FinHopf& h, int k, const Vec& x, int bound) {
  Vec one = tensor_unit(h, k);
  Vec cur = x;
  for (int m = 1; m <= bound; ++m) {
    if (vec_eq(cur, one)) return m;
    if (m < bound) cur = tensor_mul(h, k, cur, x);
  }
  return std::nullopt;
}

Vec flip_tensor(const Vec& x, int n) {
  Vec r = x;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[static_cast<size_t>(j) * n + i] = x[static_cast<size_t>(i) * n + j];
  return r;
}

std::string tensor_label(const FinHopf& h, int k, size_t flat) {
  int n = h.dim();
  std::vector<int> digits(k);
  for (int d = k - 1; d >= 0; --d) {
    digits[d] = static_cast<int>(flat % n);
    flat /= n;
  }
  std::string s;
  for (int d = 0; d < k; ++d) {
    if (d) s += "(x)";
    s += h.label(digits[d]);
  }
  return s;
}

}  // namespace hopf
