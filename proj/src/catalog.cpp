#include "hopf/catalog.hpp"

namespace hopf {

HopfPtr make_h4(const Field& f) {
  if (f.characteristic() == 2)
    throw char_two_unsupported("H4 requires a field of characteristic != 2");
  int n = 4;
  const int E1 = 0, G = 1, Hh = 2, GH = 3;
  std::vector<Scalar> mult(n * n * n, Scalar::zero(f));
  std::vector<Scalar> comult(n * n * n, Scalar::zero(f));
  auto M = [&](int k, int i, int j, long long v) {
    mult[(static_cast<size_t>(i) * n + j) * n + k] = Scalar::from_int(f, v);
  };
  auto D = [&](int k, int i, int j, long long v) {
    comult[(static_cast<size_t>(k) * n + i) * n + j] = Scalar::from_int(f, v);
  };
  // products
  M(E1, E1, E1, 1);
  M(G, E1, G, 1);
  M(Hh, E1, Hh, 1);
  M(GH, E1, GH, 1);
  M(G, G, E1, 1);
  M(E1, G, G, 1);
  M(GH, G, Hh, 1);
  M(Hh, G, GH, 1);
  M(Hh, Hh, E1, 1);
  M(GH, Hh, G, -1);
  // h*h = 0, h*gh = 0
  M(GH, GH, E1, 1);
  M(Hh, GH, G, -1);
  // gh*h = 0, gh*gh = 0
  // coproducts
  D(E1, E1, E1, 1);
  D(G, G, G, 1);
  D(Hh, Hh, G, 1);
  D(Hh, E1, Hh, 1);
  D(GH, GH, E1, 1);
  D(GH, G, GH, 1);
  Vec unit = zero_vec(n, f);
  unit[E1] = Scalar::one(f);
  Vec counit = zero_vec(n, f);
  counit[E1] = Scalar::one(f);
  counit[G] = Scalar::one(f);
  Matrix S(n, n, f);
  S.at(E1, E1) = Scalar::one(f);
  S.at(G, G) = Scalar::one(f);
  S.at(GH, Hh) = Scalar::one(f);          // S(h) = gh
  S.at(Hh, GH) = Scalar::from_int(f, -1);  // S(gh) = -h
  return std::make_shared<const FinHopf>(f, std::vector<std::string>{"1", "g", "h", "gh"},
                                         std::move(mult), std::move(comult), std::move(unit),
                                         std::move(counit), std::move(S));
}

HopfPtr make_group_algebra(const Field& f, const std::vector<std::vector<int>>& table,
                           std::vector<std::string> labels) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw not_a_group("empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw not_a_group("table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw not_a_group("table entry out of range");
  }
  int e = -1;
  for (int i = 0; i < n; ++i) {
    bool ident = true;
    for (int j = 0; j < n; ++j)
      if (table[i][j] != j || table[j][i] != j) {
        ident = false;
        break;
      }
    if (ident) {
      e = i;
      break;
    }
  }
  if (e < 0) throw not_a_group("no identity element");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw not_a_group("table is not associative");
  std::vector<int> inv(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (table[i][j] == e && table[j][i] == e) {
        inv[i] = j;
        break;
      }
    if (inv[i] < 0) throw not_a_group("element without inverse");
  }
  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back(i == e ? "1" : "g" + std::to_string(i));
  }
  std::vector<Scalar> mult(static_cast<size_t>(n) * n * n, Scalar::zero(f));
  std::vector<Scalar> comult(static_cast<size_t>(n) * n * n, Scalar::zero(f));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mult[(static_cast<size_t>(i) * n + j) * n + table[i][j]] = Scalar::one(f);
  for (int k = 0; k < n; ++k)
    comult[(static_cast<size_t>(k) * n + k) * n + k] = Scalar::one(f);
  Vec unit = zero_vec(n, f);
  unit[e] = Scalar::one(f);
  Vec counit(static_cast<size_t>(n), Scalar::one(f));
  Matrix S(n, n, f);
  for (int i = 0; i < n; ++i) S.at(inv[i], i) = Scalar::one(f);
  return std::make_shared<const FinHopf>(f, std::move(labels), std::move(mult), std::move(comult),
                                         std::move(unit), std::move(counit), std::move(S));
}

std::vector<std::vector<int>> cyclic_group_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

std::vector<std::vector<int>> klein_four_table() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
  return t;
}

std::vector<std::vector<int>> symmetric3_table() {
  // permutations of {0,1,2} in a fixed order
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  auto compose = [&](int a, int b) {  // (a o b)(x) = a(b(x))
    int c[3];
    for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == c[0] && perms[i][1] == c[1] && perms[i][2] == c[2]) return i;
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) t[i][j] = compose(i, j);
  return t;
}

H4Family h4_family(HopfPtr h4, const Scalar& t) {
  const FinHopf& H = *h4;
  const Field& f = H.field();
  if (f.characteristic() == 2) throw char_two_unsupported("the H4 family needs char != 2");
  if (!(t.field() == f)) throw field_mismatch("parameter t must live in the host field");
  Scalar one = Scalar::one(f);
  Scalar half = Scalar::from_int(f, 2).inv();
  Scalar th = t * half;

  auto at = [&](Vec& v, int a, int b) -> Scalar& { return v[static_cast<size_t>(a) * 4 + b]; };

  Vec rc = zero_vec(16, f);
  at(rc, 0, 0) = one;
  at(rc, 0, 1) = one;
  at(rc, 1, 0) = one;
  at(rc, 1, 1) = -one;
  at(rc, 2, 2) = t;
  at(rc, 2, 3) = -t;
  at(rc, 3, 2) = t;
  at(rc, 3, 3) = t;

  Vec sc = zero_vec(16, f);
  at(sc, 0, 0) = one;
  at(sc, 0, 1) = one;
  at(sc, 1, 0) = one;
  at(sc, 1, 1) = one;
  at(sc, 2, 2) = th;
  at(sc, 2, 3) = -th;
  at(sc, 3, 2) = th;
  at(sc, 3, 3) = -th;

  Vec nc = zero_vec(16, f);
  at(nc, 0, 0) = one;
  at(nc, 0, 1) = one;
  at(nc, 1, 0) = one;
  at(nc, 1, 1) = one;
  at(nc, 2, 2) = -th;
  at(nc, 2, 3) = th;
  at(nc, 3, 2) = -th;
  at(nc, 3, 3) = th;

  Vec Rc = zero_vec(16, f);
  at(Rc, 0, 0) = half;
  at(Rc, 0, 1) = half;
  at(Rc, 1, 0) = half;
  at(Rc, 1, 1) = -half;
  at(Rc, 2, 2) = th;
  at(Rc, 2, 3) = th;
  at(Rc, 3, 3) = th;
  at(Rc, 3, 2) = -th;

  return H4Family{Functional(h4, 2, std::move(rc)), RMatrix(h4, std::move(Rc)),
                  Functional(h4, 2, std::move(sc)), Functional(h4, 2, std::move(nc))};
}

Matrix h4_self_duality(const FinHopf& h4, const FinHopf& h4_dual) {
  const Field& f = h4.field();
  Matrix theta(4, 4, f);
  // theta(1) = unit of H4* = f_1 + f_g, theta(g) = f_1 - f_g,
  // theta(h) = f_h + f_gh, theta(gh) = theta(g) theta(h) computed in H4*.
  Vec t1 = h4_dual.unit();
  Vec tg = zero_vec(4, f);
  tg[0] = Scalar::one(f);
  tg[1] = Scalar::from_int(f, -1);
  Vec th = zero_vec(4, f);
  th[2] = Scalar::one(f);
  th[3] = Scalar::one(f);
  Vec tgh = h4_dual.product(tg, th);
  for (int i = 0; i < 4; ++i) {
    theta.at(i, 0) = t1[i];
    theta.at(i, 1) = tg[i];
    theta.at(i, 2) = th[i];
    theta.at(i, 3) = tgh[i];
  }
  return theta;
}

YDModule adjoint_module(HopfPtr hp) {
  const FinHopf& H = *hp;
  int n = H.dim();
  YDModule M(hp, n, H.labels());
  const Matrix& Sinv = H.antipode_inv();
  for (int a = 0; a < n; ++a)
    for (const auto& [a1, a2, c] : H.cop_terms(a))
      for (int s = 0; s < n; ++s) {
        const Scalar& si = Sinv.at(s, a1);
        if (si.is_zero()) continue;
        Scalar base = c * si;
        for (int i = 0; i < n; ++i) {
          // e_{a2} e_i e_s
          for (const auto& [t, c1] : H.prod_terms(a2, i))
            for (const auto& [j, c2] : H.prod_terms(t, s)) M.act(j, a, i) += base * c1 * c2;
        }
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int b = 0; b < n; ++b) M.coact(j, b, i) = H.comult(j, b, i);
  return M;
}

YDModule graded_comodule_v(HopfPtr h4, const Functional& r) {
  const Field& f = h4->field();
  std::vector<Scalar> coact = zero_vec(2 * 2 * h4->dim(), f);
  // chi(v0) = v0 (x) 1, chi(v1) = v1 (x) g; basis order of H4 is (1,g,h,gh)
  coact[(0 * 2 + 0) * h4->dim() + 0] = Scalar::one(f);
  coact[(1 * 2 + 1) * h4->dim() + 1] = Scalar::one(f);
  return induce_yd_from_comodule(h4, 2, {"v0", "v1"}, std::move(coact), r, false);
}

YDAlgebra kx2_trivial_algebra(HopfPtr h) {
  const Field& f = h->field();
  int n = h->dim();
  YDAlgebra A;
  A.mod = YDModule(h, 2, {"1", "x"});
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < 2; ++i) A.mod.act(i, a, i) = h->counit()[a];
  for (int b = 0; b < n; ++b)
    for (int i = 0; i < 2; ++i) A.mod.coact(i, b, i) = h->unit()[b];
  A.mult_ = zero_vec(8, f);
  A.mult(0, 0, 0) = Scalar::one(f);
  A.mult(1, 0, 1) = Scalar::one(f);
  A.mult(1, 1, 0) = Scalar::one(f);
  // x * x = 0
  A.unit = zero_vec(2, f);
  A.unit[0] = Scalar::one(f);
  return A;
}

Functional transport_rmatrix(const Matrix& f, const RMatrix& R, HopfPtr domain) {
  // (f (x) f)(R) read as a bilinear form on the domain
  int n = domain->dim();
  Functional out(domain, 2);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const Scalar& c = R.at(p, q);
      if (c.is_zero()) continue;
      for (int a = 0; a < n; ++a) {
        if (f.at(a, p).is_zero()) continue;
        for (int b = 0; b < n; ++b) {
          if (f.at(b, q).is_zero()) continue;
          out.at(a, b) += c * f.at(a, p) * f.at(b, q);
        }
      }
    }
  return out;
}

}  // namespace hopf
