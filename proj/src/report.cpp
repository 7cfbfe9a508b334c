#include "hopf/report.hpp"

#include <chrono>
#include <future>
#include <sstream>

#include "json.hpp"

namespace hopf {

bool VerificationReport::all_pass() const {
  for (const auto& i : items)
    if (!i.pass && !i.skipped) return false;
  return true;
}

namespace {

struct Ctx {
  ReportConfig cfg;
  bool char_two;
  // the field for checks that carry the parameter t
  Field pfield() const { return cfg.field; }
  // the field for parameter-free checks: prime fields keep their field,
  // Q(t) and Q both run over Q
  Field zfield() const {
    return cfg.field.kind == FieldKind::prime ? cfg.field : Field::rationals();
  }
  Scalar t_in(const Field& f) const {
    if (f.kind == FieldKind::ratfun) return Scalar::variable(f);
    return Scalar::from_rat(f, cfg.t);
  }
};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << (detail.str().empty() ? "" : "; ") << what;
    }
  }
  void note(const std::string& s) {
    detail << (detail.str().empty() ? "" : "; ") << s;
  }
};

Outcome check_p1(const Ctx& ctx) {
  Outcome o;
  for (Field f : {Field::rationals(), Field::gf(5), Field::gf(7), Field::rational_functions()}) {
    auto H = make_h4(f);
    AxiomReport rep = check_axioms(*H);
    o.require(rep.all_pass(), "axioms fail over " + f.name());
  }
  bool rejected = false;
  try {
    make_h4(Field::gf(2));
  } catch (const char_two_unsupported&) {
    rejected = true;
  }
  o.require(rejected, "GF(2) was not rejected");
  if (!ctx.char_two && ctx.cfg.field.kind == FieldKind::prime && ctx.cfg.field.p != 5 &&
      ctx.cfg.field.p != 7) {
    auto H = make_h4(ctx.cfg.field);
    o.require(check_axioms(*H).all_pass(), "axioms fail over " + ctx.cfg.field.name());
  }
  // the defining relations and antipode values of H4
  {
    Field f = Field::rationals();
    auto H = make_h4(f);
    Vec gh = H->product(H->basis(1), H->basis(2));
    Vec hg = H->product(H->basis(2), H->basis(1));
    Vec sum = gh;
    for (int k = 0; k < 4; ++k) sum[k] += hg[k];
    o.require(vec_eq(gh, H->basis(3)) && vec_is_zero(sum), "gh + hg != 0 or g h != gh");
    o.require(vec_is_zero(H->product(H->basis(2), H->basis(2))), "h^2 != 0");
    o.require(vec_eq(H->apply_antipode(H->basis(1)), H->basis(1)), "S(g) != g");
    o.require(vec_eq(H->apply_antipode(H->basis(2)), H->basis(3)), "S(h) != gh");
    auto S = derive_antipode(H->without_antipode());
    o.require(S.has_value() && *S == H->antipode(),
              "derive_antipode does not recover the stored antipode");
  }
  if (o.pass)
    o.note("all axioms hold over Q, GF(5), GF(7), Q(t); GF(2) rejected; S(g) = g, S(h) = gh "
           "recovered by the convolution-inverse solver");
  return o;
}

Outcome check_p2(const Ctx& ctx) {
  Outcome o;
  Field f = ctx.pfield();
  auto H = make_h4(f);
  Scalar t = ctx.t_in(f);
  H4Family fam = h4_family(H, t);
  RFormReport rep = check_rform(*H, fam.r, true);
  o.require(rep.all_pass(), "r_t R-form/cotriangularity report:\n" + rep.summary());
  // printed table values
  o.require(fam.r.at(1, 1) == -Scalar::one(f), "r_t(g (x) g) != -1");
  o.require(fam.r.at(2, 2) == t && fam.r.at(3, 2) == t && fam.r.at(3, 3) == t &&
                fam.r.at(2, 3) == -t,
            "r_t twisted-primitive block differs from the printed table");
  // R-forms and r^{-1} tau are 2-cocycles
  o.require(check_2cocycle(fam.r, CocycleSide::left).ok, "r_t is not a left 2-cocycle");
  auto rinv = conv_inverse(fam.r);
  o.require(rinv.has_value() && check_2cocycle(flip_args(*rinv), CocycleSide::left).ok,
            "r_t^{-1} tau is not a left 2-cocycle");
  if (o.pass)
    o.note("r_t matches the printed table and is a cotriangular R-form over " + f.name() +
           "; r_t and r_t^{-1} tau are left 2-cocycles");
  return o;
}

Outcome check_p3(const Ctx& ctx) {
  Outcome o;
  Field f = ctx.pfield();
  auto H = make_h4(f);
  H4Family fam = h4_family(H, ctx.t_in(f));
  CheckResult qt = check_quasitriangular(*H, fam.R);
  o.require(qt.ok, "R_t quasitriangularity: " + qt.witness);
  o.require(check_triangular(*H, fam.R), "(tau R_t) R_t != 1 (x) 1");
  // R_0 separately: tau R_0 = R_0 and R_0^2 = 1 (x) 1
  H4Family fam0 = h4_family(H, Scalar::zero(f));
  o.require(vec_eq(flip_tensor(fam0.R.coef, 4), fam0.R.coef), "tau R_0 != R_0");
  o.require(vec_eq(tensor_mul(*H, 2, fam0.R.coef, fam0.R.coef), tensor_unit(*H, 2)),
            "R_0^2 != 1 (x) 1");
  if (o.pass) o.note("R_t is triangular over " + f.name() + "; R_0 is a symmetric involution");
  return o;
}

Outcome check_p4(const Ctx& ctx) {
  Outcome o;
  Field f = ctx.pfield();
  auto H = make_h4(f);
  Scalar t = ctx.t_in(f);
  H4Family fam = h4_family(H, t);
  o.require(check_2cocycle(fam.sigma, CocycleSide::left).ok, "sigma_t is not a left 2-cocycle");
  o.require(check_2cocycle(fam.sigma, CocycleSide::right).ok, "sigma_t is not a right 2-cocycle");
  Scalar half_t = t / Scalar::from_int(f, 2);
  o.require(fam.sigma.at(1, 1).is_one(), "sigma_t(g (x) g) != 1");
  o.require(fam.sigma.at(2, 2) == half_t && fam.sigma.at(3, 3) == -half_t,
            "sigma_t twisted-primitive block differs from the printed table");
  auto inv = conv_inverse(fam.sigma);
  o.require(inv.has_value(), "sigma_t is not convolution invertible");
  if (inv) {
    o.require(functional_eq(*inv, fam.nu), "conv_inverse(sigma_t) != nu_t");
    o.require(inv->at(2, 2) == -half_t, "nu_t(h (x) h) != -t/2");
    Functional unit = counit_power(H, 2);
    o.require(functional_eq(convolve(fam.nu, fam.sigma), unit), "nu_t is not a left inverse");
  }
  if (o.pass) o.note("sigma_t two-sided cocycle, nu_t = sigma_t^{-1}, nu_t(h(x)h) = -t/2");
  return o;
}

Outcome check_p5(const Ctx& ctx) {
  Outcome o;
  Field f = ctx.pfield();
  auto H = make_h4(f);
  H4Family fam = h4_family(H, ctx.t_in(f));
  FinHopf tw = cocycle_twist(*H, fam.sigma);
  o.require(same_structure(tw, *H), "twist by sigma_t changed the structure constants");
  if (o.pass) o.note("sigma_t twist reproduces H4 exactly over " + f.name());
  return o;
}

// P6 is field-independent by design: the grid runs over Q and the symbolic
// passes over Q(t), whatever the configured field.
Outcome check_p6(const Ctx&) {
  Outcome o;
  // rational grid
  {
    Field Q = Field::rationals();
    auto H = make_h4(Q);
    for (long long sv = -2; sv <= 3 && o.pass; ++sv)
      for (long long tv = -2; tv <= 3; ++tv) {
        H4Family fs = h4_family(H, Scalar::from_int(Q, sv));
        H4Family ft = h4_family(H, Scalar::from_int(Q, tv));
        Functional out = twist_rform(fs.r, ft.sigma);
        H4Family target = h4_family(H, Scalar::from_int(Q, sv - tv));
        if (!vec_eq(out.coef, target.r.coef)) {
          o.require(false, "grid point (s,t)=(" + std::to_string(sv) + "," + std::to_string(tv) +
                               ") does not give r_{s-t}");
          break;
        }
      }
  }
  // symbolic passes with s in {0, 1}
  {
    Field K = Field::rational_functions();
    auto H = make_h4(K);
    Scalar t = Scalar::variable(K);
    H4Family ft = h4_family(H, t);
    for (long long sv : {0LL, 1LL}) {
      H4Family fs = h4_family(H, Scalar::from_int(K, sv));
      Functional out = twist_rform(fs.r, ft.sigma);
      H4Family target = h4_family(H, Scalar::from_int(K, sv) - t);
      o.require(vec_eq(out.coef, target.r.coef),
                "symbolic pass s=" + std::to_string(sv) + " does not give r_{s-t}");
    }
    // in particular sigma_s sends r_s to r_0
    Functional self = twist_rform(ft.r, ft.sigma);
    H4Family zero = h4_family(H, Scalar::zero(K));
    o.require(vec_eq(self.coef, zero.r.coef), "twist of r_t by sigma_t is not r_0");
  }
  if (o.pass)
    o.note("twist_rform(r_s, sigma_t) = r_{s-t} on the 36-point grid and symbolically; "
           "sigma_s sends r_s to r_0");
  return o;
}

Outcome check_p7(const Ctx& ctx) {
  Outcome o;
  Field f = ctx.zfield();
  auto H = make_h4(f);
  FinHopf Hd = dual(*H, false);
  Matrix theta = h4_self_duality(*H, Hd);
  CheckResult m = is_morphism(theta, *H, Hd, MorphKind::hopf);
  o.require(m.ok, "self-duality map is not a Hopf morphism: " + m.witness);
  o.require(invert_matrix(theta).has_value(), "self-duality map is not invertible");
  // g |-> f_1 - f_g, h |-> f_h + f_gh, and unitality forces 1 |-> f_1 + f_g
  Scalar one = Scalar::one(f);
  o.require(theta.at(0, 1) == one && theta.at(1, 1) == -one && theta.at(2, 1).is_zero() &&
                theta.at(3, 1).is_zero(),
            "theta(g) != f_1 - f_g");
  o.require(theta.at(2, 2) == one && theta.at(3, 2) == one, "theta(h) != f_h + f_gh");
  o.require(theta.at(0, 0) == one && theta.at(1, 0) == one, "theta(1) != f_1 + f_g");
  H4Family fam0 = h4_family(H, Scalar::zero(f));
  Functional transported = transport_rmatrix(theta, fam0.R, H);
  o.require(vec_eq(transported.coef, fam0.r.coef), "transport of R_0 is not r_0");
  if (o.pass) o.note("H4 ~ H4* as Hopf algebras, R_0 |-> r_0, over " + f.name());
  return o;
}

Outcome check_p8(const Ctx& ctx) {
  Outcome o;
  Field f = ctx.zfield();
  auto H = make_h4(f);
  DoubleResult dr = [&] {
    try {
      return build_double(H, true);
    } catch (const error& e) {
      o.require(false, e.what());
      return build_double(H, false);
    }
  }();
  const FinHopf& D = *dr.double_algebra;
  o.require(D.dim() == 16, "dim D(H4) != 16");
  o.require(!check_triangular(D, dr.R), "D(H4) claims to be triangular");
  ExponentResult er = exponent_element(H, 64);
  o.require(!er.u_equals_unit_part, "u = eps (x) 1");
  Vec rr = tensor_mul(D, 2, flip_tensor(dr.R.coef, D.dim()), dr.R.coef);
  auto ord2 = element_order(D, 2, rr, 64);
  o.require(er.order == ord2, "order(u) != order((tau R) R) under bound 64");
  std::string ordtxt = er.order ? std::to_string(*er.order) : std::string("exceeds bound 64");
  if (o.pass)
    o.note("D(H4) over " + f.name() +
           ": Hopf + quasitriangular, not triangular, u != eps(x)1, common order " + ordtxt);
  return o;
}

Outcome check_p9(const Ctx& ctx) {
  Outcome o;
  Field f = ctx.zfield();
  auto Z2 = make_group_algebra(f, cyclic_group_table(2), {"1", "g"});
  auto H4 = make_h4(f);
  auto H4d = std::make_shared<const FinHopf>(dual(*H4, false));
  const char* names[] = {"kZ2", "H4", "dual(H4)"};
  int k = 0;
  for (auto H : {Z2, H4, H4d}) {
    CheckReport rep = verify_double_isos(H);
    o.require(rep.all_pass(),
              std::string("double isomorphisms fail for ") + names[k] + ":\n" + rep.summary());
    ++k;
  }
  if (o.pass) o.note("flip, S*(x)id and S*^{-1}(x)S isomorphisms verified for kZ2, H4, dual(H4)");
  return o;
}

Outcome check_p10(const Ctx& ctx) {
  Outcome o;
  Field f = ctx.pfield();
  auto H = make_h4(f);
  H4Family fam = h4_family(H, ctx.t_in(f));
  YDModule triv = trivial_module(H);
  YDModule adj = adjoint_module(H);
  YDModule V = graded_comodule_v(H, fam.r);
  o.require(check_yd(triv).ok, "trivial module fails check_yd");
  o.require(check_yd(adj).ok, "conjugation module fails check_yd");
  o.require(check_yd(V).ok, "graded comodule V fails check_yd");
  o.require(yang_baxter_holds(V, V, V), "YBE fails on V");
  o.require(yang_baxter_holds(adj, adj, adj), "YBE fails on the conjugation module");
  o.require(yang_baxter_holds(V, adj, V), "YBE fails on a mixed triple");
  Matrix phi = braiding(V, V);
  o.require(phi * phi == Matrix::identity(V.dim * V.dim, f),
            "phi^2 != id on the comodule-induced pair (V, V)");
  YDModule VV = yd_tensor(V, V);
  o.require(braiding(VV, V) * braiding(V, VV) == Matrix::identity(V.dim * VV.dim, f),
            "phi^2 != id on the comodule-induced pair (V, V(x)V)");
  YDAlgebra E = end_algebra(V, EndSide::standard);
  YDAlgebra Eop = end_algebra(V, EndSide::op);
  o.require(check_yd_algebra(E).ok, "End(V) fails check_yd_algebra");
  o.require(check_yd_algebra(Eop).ok, "End(V)^op fails check_yd_algebra");
  FGMaps fg = map_FG(E);
  o.require(invert_matrix(fg.F).has_value() && invert_matrix(fg.G).has_value(),
            "F or G for End(V) is singular");
  o.require(fg.F_algebra.ok && fg.G_algebra.ok && fg.F_yd.ok && fg.G_yd.ok,
            "F or G is not a YD-algebra morphism");
  YDAlgebra k2 = kx2_trivial_algebra(H);
  FGMaps fg2 = map_FG(k2);
  o.require(rank(fg2.F) < 4, "F for trivial k[x]/(x^2) is not singular");
  if (o.pass)
    o.note("YD suite over " + f.name() + ": catalog modules, YBE, phi^2 = id, End(V) Azumaya, "
           "k[x]/(x^2) singular F");
  return o;
}

Outcome check_p11(const Ctx& ctx) {
  Outcome o;
  Field f = ctx.pfield();
  auto H = make_h4(f);
  H4Family fam = h4_family(H, ctx.t_in(f));
  YDModule triv = trivial_module(H);
  YDModule adj = adjoint_module(H);
  YDModule V = graded_comodule_v(H, fam.r);
  for (const YDModule* M : {&triv, &adj, &V})
    o.require(check_yd(dualize_yd(*M)).ok, "a dualized catalog module fails check_yd");
  o.require(duality_braiding_compatible(V, V) && duality_braiding_compatible(V, adj) &&
                duality_braiding_compatible(adj, adj),
            "tau psi^op != D(phi) tau");
  YDAlgebra E = end_algebra(V, EndSide::standard);
  {
    YDAlgebra lhs = dualize_alg(yd_opposite(E));
    YDAlgebra rhs = yd_opposite(dualize_alg(E));
    o.require(vec_eq(lhs.mult_, rhs.mult_) && vec_eq(lhs.unit, rhs.unit) &&
                  vec_eq(lhs.mod.act_, rhs.mod.act_) && vec_eq(lhs.mod.coact_, rhs.mod.coact_),
              "D(Abar) != bar(D(A)) for A = End(V)");
  }
  {
    const YDAlgebra& A = E;
    const YDAlgebra& B = E;
    YDAlgebra DBA = dualize_alg(smash(B, A));
    YDAlgebra Y = smash(dualize_alg(A), dualize_alg(B));
    int mA = A.mod.dim, mB = B.mod.dim;
    Matrix tau = tau_matrix(mA, mB, f);
    bool ok = vec_eq(tau.apply(Y.unit), DBA.unit);
    for (int x = 0; x < mA * mB && ok; ++x)
      for (int y = 0; y < mA * mB; ++y) {
        Vec prod = zero_vec(mA * mB, f);
        for (int k = 0; k < mA * mB; ++k) prod[k] = Y.mult(k, x, y);
        if (!vec_eq(tau.apply(prod), DBA.product(tau.column(x), tau.column(y)))) {
          ok = false;
          break;
        }
      }
    o.require(ok, "tau: D(A)#*D(B) -> D(B#A) is not an algebra isomorphism");
  }
  if (o.pass)
    o.note("duality functor over " + f.name() +
           ": images are YD over H4*, braiding anti-compatibility, D(Abar) = bar(D(A)), "
           "tau smash isomorphism");
  return o;
}

Outcome check_p12(const Ctx& ctx) {
  Outcome o;
  Field f = ctx.pfield();
  auto H = make_h4(f);
  Scalar t = ctx.t_in(f);
  H4Family famt = h4_family(H, t);
  Scalar s2 = Scalar::from_int(f, 2);
  H4Family fams = h4_family(H, s2);
  YDModule V2 = graded_comodule_v(H, fams.r);
  YDAlgebra E = end_algebra(V2, EndSide::standard);
  try {
    TwistedAlgebra tw = twist_alg(E, fams.r, famt.sigma);
    o.require(same_structure(*tw.twisted_host, *H), "sigma_t twist moved H4");
    H4Family target = h4_family(H, s2 - t);
    o.require(vec_eq(tw.r_sigma.coef, target.r.coef), "twisted form is not r_{s-t}");
    o.require(is_azumaya(tw.algebra), "twisted End(V) is not Azumaya");
  } catch (const error& e) {
    o.require(false, std::string("sigma twist failed: ") + e.what());
  }
  try {
    H4Family fam0 = h4_family(H, Scalar::zero(f));
    YDModule V0 = graded_comodule_v(H, fam0.r);
    YDAlgebra E0 = end_algebra(V0, EndSide::standard);
    TwistedAlgebra tw2 = twist_alg(E0, fam0.r, fam0.r);
    o.require(same_structure(*tw2.twisted_host, variant(*H, VariantKind::op, false)),
              "twist by r_0 does not land on H4^op");
    o.require(vec_eq(tw2.r_sigma.coef, flip_args(fam0.r).coef), "twisted form is not r_0 tau");
    o.require(is_azumaya(tw2.algebra), "r_0-twisted End(V) is not Azumaya");
  } catch (const error& e) {
    o.require(false, std::string("r_0-as-cocycle twist failed: ") + e.what());
  }
  if (o.pass)
    o.note("twist functor over " + f.name() + ": sigma_t sends (H4, r_s) Azumaya algebras to "
           "(H4, r_{s-t}); the r_0 cocycle lands on H4^op");
  return o;
}

}  // namespace

VerificationReport verification_report(const ReportConfig& cfg) {
  Ctx ctx{cfg, cfg.field.characteristic() == 2};
  struct Def {
    const char* id;
    const char* title;
    Outcome (*fn)(const Ctx&);
    bool needs_char_ne_2;
  };
  const Def defs[] = {
      {"P1", "H4 Hopf axioms over Q, GF(5), GF(7), Q(t); GF(2) rejected", check_p1, false},
      {"P2", "r_t cotriangular R-form", check_p2, true},
      {"P3", "R_t quasitriangular and triangular", check_p3, true},
      {"P4", "sigma_t two-sided 2-cocycle with inverse nu_t", check_p4, true},
      {"P5", "cocycle twist by sigma_t reproduces H4", check_p5, true},
      {"P6", "twist_rform(r_s, sigma_t) = r_{s-t}, grid and symbolic", check_p6, true},
      {"P7", "self-duality H4 ~ H4* transporting R_0 to r_0", check_p7, true},
      {"P8", "D(H4): axioms, quasitriangular, not triangular, exponent element", check_p8, true},
      {"P9", "double isomorphisms for kZ2, H4, dual(H4)", check_p9, true},
      {"P10", "Yetter-Drinfeld suite: modules, braiding, End(V), Azumaya", check_p10, true},
      {"P11", "duality functor on modules and algebras", check_p11, true},
      {"P12", "twist functor on Azumaya algebras", check_p12, true},
  };
  VerificationReport rep;
  rep.cfg = cfg;

  auto run_one = [&](const Def& d) {
    ReportItem item;
    item.id = d.id;
    item.title = d.title;
    if (ctx.char_two && d.needs_char_ne_2) {
      item.skipped = true;
      item.pass = false;
      item.detail = "skipped: the H4 family requires characteristic != 2";
      return item;
    }
    auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = d.fn(ctx);
      item.pass = o.pass;
      item.detail = o.detail.str();
    } catch (const std::exception& e) {
      item.pass = false;
      item.detail = std::string("exception: ") + e.what();
    }
    auto end = std::chrono::steady_clock::now();
    item.ms = std::chrono::duration<double, std::milli>(end - start).count();
    return item;
  };

  if (cfg.parallel) {
    std::vector<std::future<ReportItem>> futs;
    for (const Def& d : defs)
      futs.push_back(std::async(std::launch::async, [&, d] { return run_one(d); }));
    for (auto& f : futs) rep.items.push_back(f.get());
  } else {
    for (const Def& d : defs) rep.items.push_back(run_one(d));
  }
  return rep;
}

std::string report_text(const VerificationReport& rep) {
  std::ostringstream os;
  os << "verification report over " << rep.cfg.field.name();
  if (rep.cfg.field.kind != FieldKind::ratfun) {
    std::ostringstream ts;
    ts << rep.cfg.t;
    os << " (t = " << ts.str() << ")";
  }
  os << "\n";
  for (const auto& i : rep.items) {
    os << "  " << i.id << " "
       << (i.skipped ? "SKIP" : (i.pass ? "PASS" : "FAIL")) << "  " << i.title << "\n";
    if (!i.detail.empty()) os << "       " << i.detail << "\n";
  }
  os << (rep.all_pass() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  return os.str();
}

std::string report_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["format"] = "hopf-verification-report";
  j["version"] = 1;
  j["field"] = rep.cfg.field.name();
  if (rep.cfg.field.kind != FieldKind::ratfun) {
    std::ostringstream ts;
    ts << rep.cfg.t;
    j["t"] = ts.str();
  }
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& i : rep.items) {
    nlohmann::ordered_json c;
    c["id"] = i.id;
    c["title"] = i.title;
    c["status"] = i.skipped ? "skipped" : (i.pass ? "pass" : "fail");
    c["detail"] = i.detail;
    c["timing_ms"] = i.ms;
    checks.push_back(c);
  }
  j["checks"] = checks;
  j["all_pass"] = rep.all_pass();
  return j.dump(2) + "\n";
}

}  // namespace hopf
