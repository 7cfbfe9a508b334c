#include "hopf/functional.hpp"

#include <sstream>

namespace hopf {

Functional::Functional(HopfPtr h, int k) : host(std::move(h)), arity(k) {
  size_t size = 1;
  for (int i = 0; i < k; ++i) size *= host->dim();
  coef = zero_vec(static_cast<int>(size), host->field());
}

Functional::Functional(HopfPtr h, int k, Vec c) : host(std::move(h)), arity(k), coef(std::move(c)) {
  size_t size = 1;
  for (int i = 0; i < k; ++i) size *= host->dim();
  if (coef.size() != size) throw dimension_mismatch("functional coefficient length");
  for (const auto& s : coef)
    if (!(s.field() == host->field())) throw field_mismatch("functional entry in wrong field");
}

Scalar Functional::value_on(const Vec& x) const {
  if (x.size() != coef.size()) throw dimension_mismatch("functional argument length");
  Scalar r = Scalar::zero(host->field());
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !coef[i].is_zero()) r += coef[i] * x[i];
  return r;
}

bool same_host(const HopfPtr& a, const HopfPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return same_structure(*a, *b);
}

bool functional_eq(const Functional& f, const Functional& g) {
  return f.arity == g.arity && vec_eq(f.coef, g.coef);
}

Functional counit_power(HopfPtr h, int k) {
  Functional f(h, k);
  int n = h->dim();
  size_t size = f.coef.size();
  for (size_t I = 0; I < size; ++I) {
    size_t t = I;
    Scalar c = Scalar::one(h->field());
    for (int d = 0; d < k; ++d) {
      c = c * h->counit()[t % n];
      t /= n;
      if (c.is_zero()) break;
    }
    f.coef[I] = c;
  }
  return f;
}

Functional convolve(const Functional& f, const Functional& g) {
  if (!same_host(f.host, g.host) || f.arity != g.arity)
    throw host_mismatch("convolve: functionals on different hosts or arities");
  const FinHopf& h = *f.host;
  int n = h.dim();
  int k = f.arity;
  Functional r(f.host, k);
  size_t size = r.coef.size();
  std::vector<int> digits(k);
  for (size_t I = 0; I < size; ++I) {
    size_t t = I;
    for (int d = k - 1; d >= 0; --d) {
      digits[d] = static_cast<int>(t % n);
      t /= n;
    }
    // product over legs of Delta(e_{i_d}); accumulate f(first) g(second)
    std::vector<std::tuple<size_t, size_t, Scalar>> acc{{0, 0, Scalar::one(h.field())}};
    for (int d = 0; d < k; ++d) {
      std::vector<std::tuple<size_t, size_t, Scalar>> next;
      for (const auto& [ia, ib, c] : acc)
        for (const auto& [a, b, cc] : h.cop_terms(digits[d]))
          next.emplace_back(ia * n + a, ib * n + b, c * cc);
      acc = std::move(next);
      if (acc.empty()) break;
    }
    Scalar sum = Scalar::zero(h.field());
    for (const auto& [ia, ib, c] : acc) {
      if (f.coef[ia].is_zero() || g.coef[ib].is_zero()) continue;
      sum += c * f.coef[ia] * g.coef[ib];
    }
    r.coef[I] = sum;
  }
  return r;
}

Functional flip_args(const Functional& f) {
  if (f.arity != 2) throw dimension_mismatch("flip_args needs arity 2");
  Functional r(f.host, 2, flip_tensor(f.coef, f.host->dim()));
  return r;
}

std::optional<Functional> conv_inverse(const Functional& f) {
  const FinHopf& h = *f.host;
  int n = h.dim();
  int k = f.arity;
  size_t size = f.coef.size();
  int N = static_cast<int>(size);
  // (f*x)[I] = sum_J L[I][J] x[J]
  Matrix L(N, N, h.field());
  std::vector<int> digits(k);
  for (size_t I = 0; I < size; ++I) {
    size_t t = I;
    for (int d = k - 1; d >= 0; --d) {
      digits[d] = static_cast<int>(t % n);
      t /= n;
    }
    std::vector<std::tuple<size_t, size_t, Scalar>> acc{{0, 0, Scalar::one(h.field())}};
    for (int d = 0; d < k; ++d) {
      std::vector<std::tuple<size_t, size_t, Scalar>> next;
      for (const auto& [ia, ib, c] : acc)
        for (const auto& [a, b, cc] : h.cop_terms(digits[d]))
          next.emplace_back(ia * n + a, ib * n + b, c * cc);
      acc = std::move(next);
    }
    for (const auto& [ia, ib, c] : acc) {
      if (f.coef[ia].is_zero()) continue;
      L.at(static_cast<int>(I), static_cast<int>(ib)) += c * f.coef[ia];
    }
  }
  Functional unit = counit_power(f.host, k);
  Matrix b(N, 1, h.field());
  for (int i = 0; i < N; ++i) b.at(i, 0) = unit.coef[i];
  auto x = solve_linear(L, b);
  if (!x) return std::nullopt;
  Functional inv(f.host, k, x->column(0));
  if (!functional_eq(convolve(inv, f), unit))
    throw one_sided_inverse("conv_inverse: right inverse is not a left inverse");
  return inv;
}

CheckResult check_2cocycle(const Functional& sigma, CocycleSide side) {
  if (sigma.arity != 2) throw dimension_mismatch("2-cocycle must have arity 2");
  const FinHopf& H = *sigma.host;
  int n = H.dim();
  // unitality
  for (int i = 0; i < n; ++i) {
    Scalar left = Scalar::zero(H.field()), right = Scalar::zero(H.field());
    for (int u = 0; u < n; ++u) {
      if (!H.unit()[u].is_zero()) {
        left += H.unit()[u] * sigma.at(i, u);
        right += H.unit()[u] * sigma.at(u, i);
      }
    }
    if (left != H.counit()[i] || right != H.counit()[i])
      return {false, "unitality fails at " + H.label(i)};
  }
  for (int hh = 0; hh < n; ++hh)
    for (int kk = 0; kk < n; ++kk)
      for (int mm = 0; mm < n; ++mm) {
        Scalar lhs = Scalar::zero(H.field());
        Scalar rhs = Scalar::zero(H.field());
        if (side == CocycleSide::left) {
          // sum sigma(k1 (x) m1) sigma(h (x) k2 m2)
          for (const auto& [k1, k2, ck] : H.cop_terms(kk))
            for (const auto& [m1, m2, cm] : H.cop_terms(mm)) {
              Scalar s1 = sigma.at(k1, m1);
              if (s1.is_zero()) continue;
              for (const auto& [p, cp] : H.prod_terms(k2, m2))
                lhs += ck * cm * s1 * cp * sigma.at(hh, p);
            }
          // sum sigma(h1 (x) k1) sigma(h2 k2 (x) m)
          for (const auto& [h1, h2, ch] : H.cop_terms(hh))
            for (const auto& [k1, k2, ck] : H.cop_terms(kk)) {
              Scalar s1 = sigma.at(h1, k1);
              if (s1.is_zero()) continue;
              for (const auto& [p, cp] : H.prod_terms(h2, k2))
                rhs += ch * ck * s1 * cp * sigma.at(p, mm);
            }
        } else {
          // sum sigma(k2 (x) m2) sigma(h (x) k1 m1)
          for (const auto& [k1, k2, ck] : H.cop_terms(kk))
            for (const auto& [m1, m2, cm] : H.cop_terms(mm)) {
              Scalar s1 = sigma.at(k2, m2);
              if (s1.is_zero()) continue;
              for (const auto& [p, cp] : H.prod_terms(k1, m1))
                lhs += ck * cm * s1 * cp * sigma.at(hh, p);
            }
          // sum sigma(h2 (x) k2) sigma(h1 k1 (x) m)
          for (const auto& [h1, h2, ch] : H.cop_terms(hh))
            for (const auto& [k1, k2, ck] : H.cop_terms(kk)) {
              Scalar s1 = sigma.at(h2, k2);
              if (s1.is_zero()) continue;
              for (const auto& [p, cp] : H.prod_terms(h1, k1))
                rhs += ch * ck * s1 * cp * sigma.at(p, mm);
            }
        }
        if (lhs != rhs) {
          std::ostringstream os;
          os << "cocycle condition fails at (" << H.label(hh) << ", " << H.label(kk) << ", "
             << H.label(mm) << "): " << lhs.str() << " vs " << rhs.str();
          return {false, os.str()};
        }
      }
  return {true, ""};
}

Functional cocycle_unit_functional(const FinHopf& h, const Functional& sigma) {
  // u(x) = sum sigma(x1 (x) S(x2))
  Functional u(sigma.host, 1);
  int n = h.dim();
  for (int x = 0; x < n; ++x) {
    Scalar acc = Scalar::zero(h.field());
    for (const auto& [x1, x2, c] : h.cop_terms(x)) {
      Vec sx2 = h.apply_antipode(h.basis(x2));
      for (int s = 0; s < n; ++s)
        if (!sx2[s].is_zero()) acc += c * sx2[s] * sigma.at(x1, s);
    }
    u.coef[x] = acc;
  }
  return u;
}

FinHopf cocycle_twist(const FinHopf& h, const Functional& sigma) {
  if (!same_structure(*sigma.host, h))
    throw host_mismatch("cocycle_twist: sigma lives on a different algebra");
  CheckResult coc = check_2cocycle(sigma, CocycleSide::left);
  if (!coc.ok) throw not_a_cocycle("cocycle_twist: " + coc.witness);
  auto inv = conv_inverse(sigma);
  if (!inv) throw not_invertible("cocycle_twist: sigma is not convolution invertible");

  int n = h.dim();
  size_t n3 = static_cast<size_t>(n) * n * n;
  std::vector<Scalar> mult(n3, Scalar::zero(h.field()));
  auto midx = [n](int i, int j, int k) { return (static_cast<size_t>(i) * n + j) * n + k; };
  // a.b = sum sigma(a1 (x) b1) a2 b2 sigma^{-1}(a3 (x) b3)
  for (int a = 0; a < n; ++a) {
    Vec da = h.iterated_coproduct(h.basis(a), 3);
    for (int b = 0; b < n; ++b) {
      Vec db = h.iterated_coproduct(h.basis(b), 3);
      for (size_t ia = 0; ia < da.size(); ++ia) {
        if (da[ia].is_zero()) continue;
        int a1 = static_cast<int>(ia / (n * n));
        int a2 = static_cast<int>((ia / n) % n);
        int a3 = static_cast<int>(ia % n);
        for (size_t ib = 0; ib < db.size(); ++ib) {
          if (db[ib].is_zero()) continue;
          int b1 = static_cast<int>(ib / (n * n));
          int b2 = static_cast<int>((ib / n) % n);
          int b3 = static_cast<int>(ib % n);
          Scalar c = da[ia] * db[ib] * sigma.at(a1, b1) * inv->at(a3, b3);
          if (c.is_zero()) continue;
          for (const auto& [k, ck] : h.prod_terms(a2, b2)) mult[midx(a, b, k)] += c * ck;
        }
      }
    }
  }
  // twisted antipode (u (x) S (x) u^{-1}) (Delta (x) id) Delta
  Functional u = cocycle_unit_functional(h, sigma);
  auto uinv = conv_inverse(u);
  if (!uinv) throw not_invertible("cocycle_twist: the functional u is not invertible");
  Matrix S(n, n, h.field());
  for (int x = 0; x < n; ++x) {
    Vec dx = h.iterated_coproduct(h.basis(x), 3);
    Vec col = h.zero();
    for (size_t ix = 0; ix < dx.size(); ++ix) {
      if (dx[ix].is_zero()) continue;
      int x1 = static_cast<int>(ix / (n * n));
      int x2 = static_cast<int>((ix / n) % n);
      int x3 = static_cast<int>(ix % n);
      Scalar c = dx[ix] * u.coef[x1] * uinv->coef[x3];
      if (c.is_zero()) continue;
      Vec sx2 = h.apply_antipode(h.basis(x2));
      for (int m = 0; m < n; ++m)
        if (!sx2[m].is_zero()) col[m] += c * sx2[m];
    }
    for (int m = 0; m < n; ++m) S.at(m, x) = col[m];
  }
  FinHopf tw(h.field(), h.labels(), std::move(mult),
             [&] {
               std::vector<Scalar> cm(n3, Scalar::zero(h.field()));
               for (int k = 0; k < n; ++k)
                 for (int i = 0; i < n; ++i)
                   for (int j = 0; j < n; ++j)
                     cm[(static_cast<size_t>(k) * n + i) * n + j] = h.comult(i, j, k);
               return cm;
             }(),
             h.unit(), h.counit(), std::move(S));
  AxiomReport rep = check_axioms(tw);
  if (!rep.all_pass())
    throw axiom_failure("cocycle_twist: output fails Hopf axioms:\n" + rep.summary(tw));
  return tw;
}

bool RFormReport::all_pass() const {
  for (const auto& i : items)
    if (!i.pass) return false;
  return true;
}

std::string RFormReport::summary() const {
  std::ostringstream os;
  for (const auto& i : items) {
    os << (i.pass ? "  ok   " : "  FAIL ") << i.name;
    if (!i.pass && !i.witness.empty()) os << " -- " << i.witness;
    os << "\n";
  }
  return os.str();
}

RFormReport check_rform(const FinHopf& H, const Functional& r, bool cotriangular) {
  if (r.arity != 2) throw dimension_mismatch("R-form must have arity 2");
  int n = H.dim();
  RFormReport rep;

  RFormItem unital{"unitality"};
  for (int a = 0; a < n && unital.pass; ++a) {
    Scalar l = Scalar::zero(H.field()), rr = Scalar::zero(H.field());
    for (int u = 0; u < n; ++u)
      if (!H.unit()[u].is_zero()) {
        l += H.unit()[u] * r.at(a, u);
        rr += H.unit()[u] * r.at(u, a);
      }
    if (l != H.counit()[a] || rr != H.counit()[a]) {
      unital.pass = false;
      unital.witness = "at " + H.label(a);
    }
  }
  rep.items.push_back(unital);

  RFormItem mult_left{"multiplicativity r(ab (x) c)"};
  for (int a = 0; a < n && mult_left.pass; ++a)
    for (int b = 0; b < n && mult_left.pass; ++b)
      for (int c = 0; c < n; ++c) {
        Scalar lhs = Scalar::zero(H.field());
        for (const auto& [k, ck] : H.prod_terms(a, b)) lhs += ck * r.at(k, c);
        Scalar rhs = Scalar::zero(H.field());
        for (const auto& [c1, c2, cc] : H.cop_terms(c)) rhs += cc * r.at(a, c1) * r.at(b, c2);
        if (lhs != rhs) {
          mult_left.pass = false;
          mult_left.witness = "at (" + H.label(a) + ", " + H.label(b) + ", " + H.label(c) +
                              "): " + lhs.str() + " vs " + rhs.str();
          break;
        }
      }
  rep.items.push_back(mult_left);

  RFormItem mult_right{"multiplicativity r(a (x) bc)"};
  for (int a = 0; a < n && mult_right.pass; ++a)
    for (int b = 0; b < n && mult_right.pass; ++b)
      for (int c = 0; c < n; ++c) {
        Scalar lhs = Scalar::zero(H.field());
        for (const auto& [k, ck] : H.prod_terms(b, c)) lhs += ck * r.at(a, k);
        Scalar rhs = Scalar::zero(H.field());
        for (const auto& [a1, a2, ca] : H.cop_terms(a)) rhs += ca * r.at(a2, b) * r.at(a1, c);
        if (lhs != rhs) {
          mult_right.pass = false;
          mult_right.witness = "at (" + H.label(a) + ", " + H.label(b) + ", " + H.label(c) +
                               "): " + lhs.str() + " vs " + rhs.str();
          break;
        }
      }
  rep.items.push_back(mult_right);

  // sum r(a1 (x) b1) a2 b2 = sum b1 a1 r(a2 (x) b2), the law that
  // transposes to R Delta = Delta^cop R on the dual side
  RFormItem inter{"intertwining"};
  for (int a = 0; a < n && inter.pass; ++a)
    for (int b = 0; b < n; ++b) {
      Vec lhs = H.zero(), rhs = H.zero();
      for (const auto& [a1, a2, ca] : H.cop_terms(a))
        for (const auto& [b1, b2, cb] : H.cop_terms(b)) {
          Scalar c = ca * cb;
          Scalar rl = r.at(a1, b1);
          if (!rl.is_zero())
            for (const auto& [k, ck] : H.prod_terms(a2, b2)) lhs[k] += c * rl * ck;
          Scalar rr = r.at(a2, b2);
          if (!rr.is_zero())
            for (const auto& [k, ck] : H.prod_terms(b1, a1)) rhs[k] += c * rr * ck;
        }
      if (!vec_eq(lhs, rhs)) {
        inter.pass = false;
        inter.witness = "at (" + H.label(a) + ", " + H.label(b) + "): " + vec_str(lhs) + " vs " +
                        vec_str(rhs);
        break;
      }
    }
  rep.items.push_back(inter);

  RFormItem invertible{"convolution-invertible"};
  std::optional<Functional> rinv;
  try {
    rinv = conv_inverse(r);
  } catch (const one_sided_inverse&) {
    rinv = std::nullopt;
  }
  if (!rinv) {
    invertible.pass = false;
    invertible.witness = "no two-sided convolution inverse";
  }
  rep.items.push_back(invertible);

  if (cotriangular) {
    RFormItem cot{"cotriangularity"};
    Functional rt = flip_args(r);
    Functional unit = counit_power(r.host, 2);
    if (!functional_eq(convolve(r, rt), unit) || !functional_eq(convolve(rt, r), unit)) {
      cot.pass = false;
      cot.witness = "r * (r tau) != eps (x) eps or (r tau) * r != eps (x) eps";
    }
    rep.items.push_back(cot);
  }
  return rep;
}

Functional twist_rform(const Functional& r, const Functional& sigma, HopfPtr twisted_host) {
  if (!same_host(r.host, sigma.host)) throw host_mismatch("twist_rform");
  CheckResult coc = check_2cocycle(sigma, CocycleSide::left);
  if (!coc.ok) throw not_a_cocycle("twist_rform: " + coc.witness);
  auto sinv = conv_inverse(sigma);
  if (!sinv) throw not_invertible("twist_rform: sigma not invertible");
  Functional out = convolve(convolve(flip_args(sigma), r), *sinv);
  if (twisted_host) out.host = twisted_host;
  return out;
}

}  // namespace hopf
