#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hopf/hopfspec.hpp"
#include "hopf/report.hpp"

using namespace hopf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

HopfSpecDoc load(const std::string& path) { return parse_hopfspec(slurp(path)); }

const HopfSpecDoc::HopfEntry& main_hopf(const HopfSpecDoc& doc) {
  if (doc.hopfs.empty()) throw input_error("document contains no hopf block");
  return doc.hopfs.front();
}

// --cocycle / --form argument: a functional name in the document, one of
// the built-ins sigma:t=<expr> / r:t=<expr> on an H4-shaped host, or a
// path to another HopfSpec file whose first functional is used.
Functional resolve_functional(const HopfSpecDoc& doc, const std::string& spec) {
  if (const auto* f = doc.find_functional(spec)) return f->value;
  const auto& host = main_hopf(doc);
  auto builtin = [&](const std::string& prefix) -> std::optional<Scalar> {
    if (spec.rfind(prefix + ":t=", 0) != 0) return std::nullopt;
    return parse_scalar(spec.substr(prefix.size() + 3), doc.field);
  };
  if (auto t = builtin("sigma")) {
    if (!same_structure(*host.algebra, *make_h4(doc.field)))
      throw input_error("built-in cocycles need the H4 structure constants");
    return h4_family(host.algebra, *t).sigma;
  }
  if (auto t = builtin("r")) {
    if (!same_structure(*host.algebra, *make_h4(doc.field)))
      throw input_error("built-in forms need the H4 structure constants");
    return h4_family(host.algebra, *t).r;
  }
  std::ifstream probe(spec);
  if (probe) {
    HopfSpecDoc other = load(spec);
    if (other.functionals.empty()) throw input_error("'" + spec + "' contains no functional");
    Functional f = other.functionals.front().value;
    if (!same_structure(*f.host, *host.algebra))
      throw input_error("functional host in '" + spec + "' does not match the main algebra");
    f.host = host.algebra;
    return f;
  }
  throw input_error("cannot resolve functional '" + spec + "'");
}

int cmd_check(const std::string& path) {
  HopfSpecDoc doc = load(path);
  if (doc.hopfs.empty()) throw input_error("document contains no hopf block");
  bool all = true;
  for (const auto& h : doc.hopfs) {
    AxiomReport rep = check_axioms(*h.algebra);
    std::cout << "hopf " << h.name << ":\n" << rep.summary(*h.algebra);
    all = all && rep.all_pass();
  }
  return all ? kExitOk : kExitCheckFailed;
}

int cmd_transform(const std::string& path, const std::string& mode) {
  HopfSpecDoc doc = load(path);
  if (doc.hopfs.empty()) throw input_error("document contains no hopf block");
  HopfSpecDoc out;
  out.field = doc.field;
  for (const auto& h : doc.hopfs) {
    FinHopf result = mode == "dual"  ? dual(*h.algebra)
                     : mode == "op"  ? variant(*h.algebra, VariantKind::op)
                     : mode == "cop" ? variant(*h.algebra, VariantKind::cop)
                                     : variant(*h.algebra, VariantKind::opcop);
    out.hopfs.push_back({h.name, std::make_shared<const FinHopf>(std::move(result))});
  }
  std::cout << serialize_hopfspec(out);
  return kExitOk;
}

int cmd_double(const std::string& path) {
  HopfSpecDoc doc = load(path);
  const auto& h = main_hopf(doc);
  DoubleResult dr = build_double(h.algebra);
  HopfSpecDoc out;
  out.field = doc.field;
  std::string dname = "D(" + h.name + ")";
  out.hopfs.push_back({dname, dr.double_algebra});
  out.rmatrices.push_back({"R", dname, dr.R});
  std::cout << serialize_hopfspec(out);
  return kExitOk;
}

int cmd_twist(const std::string& path, const std::string& cocycle) {
  HopfSpecDoc doc = load(path);
  const auto& h = main_hopf(doc);
  Functional sigma = resolve_functional(doc, cocycle);
  sigma.host = h.algebra;
  FinHopf tw = cocycle_twist(*h.algebra, sigma);
  HopfSpecDoc out;
  out.field = doc.field;
  out.hopfs.push_back({h.name + "_twist", std::make_shared<const FinHopf>(std::move(tw))});
  std::cout << serialize_hopfspec(out);
  return kExitOk;
}

int cmd_rform_check(const std::string& path, const std::string& form, bool cotriangular) {
  HopfSpecDoc doc = load(path);
  const auto& h = main_hopf(doc);
  Functional r = resolve_functional(doc, form);
  r.host = h.algebra;
  RFormReport rep = check_rform(*h.algebra, r, cotriangular);
  std::cout << rep.summary();
  return rep.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_yd_check(const std::string& path) {
  HopfSpecDoc doc = load(path);
  if (doc.ydmodules.empty() && doc.ydalgebras.empty())
    throw input_error("document contains no ydmodule or ydalgebra block");
  bool all = true;
  for (const auto& m : doc.ydmodules) {
    CheckResult r = check_yd(m.value);
    std::cout << "ydmodule " << m.name << ": " << (r.ok ? "ok" : "FAIL " + r.witness) << "\n";
    all = all && r.ok;
  }
  for (const auto& a : doc.ydalgebras) {
    CheckResult r = check_yd_algebra(a.value);
    std::cout << "ydalgebra " << a.name << ": " << (r.ok ? "ok" : "FAIL " + r.witness) << "\n";
    all = all && r.ok;
  }
  return all ? kExitOk : kExitCheckFailed;
}

int cmd_azumaya(const std::string& path) {
  HopfSpecDoc doc = load(path);
  if (doc.ydalgebras.empty()) throw input_error("document contains no ydalgebra block");
  for (const auto& a : doc.ydalgebras) {
    CheckResult chk = check_yd_algebra(a.value);
    if (!chk.ok) {
      std::cout << "ydalgebra " << a.name << ": not a YD algebra (" << chk.witness << ")\n";
      continue;
    }
    bool az = is_azumaya(a.value);
    std::cout << "ydalgebra " << a.name << ": " << (az ? "Azumaya" : "not Azumaya")
              << (has_unit_summand(a.value) ? ", k is a direct YD-summand" : "") << "\n";
  }
  return kExitOk;
}

int cmd_report(const std::string& field_spec, const std::string& t_spec, bool json,
               bool parallel) {
  ReportConfig cfg;
  if (field_spec == "ratfun")
    cfg.field = Field::rational_functions();
  else if (field_spec == "q")
    cfg.field = Field::rationals();
  else if (field_spec.rfind("gf:", 0) == 0) {
    try {
      cfg.field = Field::gf(static_cast<std::uint32_t>(std::stoul(field_spec.substr(3))));
    } catch (const std::exception& e) {
      throw input_error(std::string("bad field: ") + e.what());
    }
  } else {
    throw input_error("unknown field '" + field_spec + "' (use q, gf:<p> or ratfun)");
  }
  if (!t_spec.empty()) {
    Scalar t = parse_scalar(t_spec, Field::rationals());
    cfg.t = t.rational();
  }
  cfg.parallel = parallel;
  VerificationReport rep = verification_report(cfg);
  std::cout << (json ? report_json(rep) : report_text(rep));
  return rep.all_pass() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computer algebra for finite-dimensional Hopf algebras"};
  app.require_subcommand(1);

  std::string path, cocycle, form, field_spec = "ratfun", t_spec;
  bool op = false, cop = false, cotriangular = false, json = false, parallel = false;

  auto* c_check = app.add_subcommand("check", "verify the Hopf axioms of a HopfSpec file");
  c_check->add_option("file", path)->required();

  auto* c_dual = app.add_subcommand("dual", "print the dual Hopf algebra");
  c_dual->add_option("file", path)->required();

  auto* c_variant = app.add_subcommand("variant", "print H^op / H^cop");
  c_variant->add_option("file", path)->required();
  c_variant->add_flag("--op", op);
  c_variant->add_flag("--cop", cop);

  auto* c_double = app.add_subcommand("double", "print the Drinfeld double and its R-matrix");
  c_double->add_option("file", path)->required();

  auto* c_twist = app.add_subcommand("twist", "print the cocycle twist of the algebra");
  c_twist->add_option("file", path)->required();
  c_twist->add_option("--cocycle", cocycle, "functional name, sigma:t=<v>, r:t=<v> or a file")
      ->required();

  auto* c_rform = app.add_subcommand("rform-check", "verify the dual-quasitriangularity axioms");
  c_rform->add_option("file", path)->required();
  c_rform->add_option("--form", form, "functional name, r:t=<v> or a file")->required();
  c_rform->add_flag("--cotriangular", cotriangular, "also require r * (r tau) = eps (x) eps");

  auto* c_yd = app.add_subcommand("yd-check", "verify YD modules and algebras in a file");
  c_yd->add_option("file", path)->required();

  auto* c_az = app.add_subcommand("azumaya", "decide the Azumaya property for ydalgebra blocks");
  c_az->add_option("file", path)->required();

  auto* c_report = app.add_subcommand("report", "run the verification checks P1..P12");
  c_report->add_option("--field", field_spec, "q, gf:<p> or ratfun (default ratfun)");
  c_report->add_option("--t", t_spec, "parameter t as a rational (ignored for ratfun)");
  c_report->add_flag("--json", json, "machine-readable output");
  c_report->add_flag("--parallel", parallel, "fan out independent checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_check->parsed()) return cmd_check(path);
    if (c_dual->parsed()) return cmd_transform(path, "dual");
    if (c_variant->parsed()) {
      if (!op && !cop) throw input_error("variant needs --op and/or --cop");
      return cmd_transform(path, op && cop ? "opcop" : op ? "op" : "cop");
    }
    if (c_double->parsed()) return cmd_double(path);
    if (c_twist->parsed()) return cmd_twist(path, cocycle);
    if (c_rform->parsed()) return cmd_rform_check(path, form, cotriangular);
    if (c_yd->parsed()) return cmd_yd_check(path);
    if (c_az->parsed()) return cmd_azumaya(path);
    if (c_report->parsed()) return cmd_report(field_spec, t_spec, json, parallel);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const hopf::error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
