#include "hopf/hopfspec.hpp"

#include <map>
#include <sstream>

namespace hopf {

// ------------------------------------------------------- scalar literals

namespace {

struct ExprParser {
  const std::string& s;
  size_t pos = 0;
  const Field& field;
  int line, col;

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(line, col + static_cast<int>(pos), msg);
  }
  bool eof() const { return pos >= s.size(); }
  char peek() const { return eof() ? '\0' : s[pos]; }

  Scalar expr() {
    Scalar v = term();
    while (!eof() && (peek() == '+' || peek() == '-')) {
      char op = s[pos++];
      Scalar w = term();
      v = op == '+' ? v + w : v - w;
    }
    return v;
  }
  Scalar term() {
    Scalar v = factor();
    while (!eof() && (peek() == '*' || peek() == '/')) {
      char op = s[pos++];
      Scalar w = factor();
      if (op == '*')
        v = v * w;
      else {
        if (w.is_zero()) fail("division by zero in scalar literal");
        v = v / w;
      }
    }
    return v;
  }
  Scalar factor() {
    bool neg = false;
    while (!eof() && (peek() == '-' || peek() == '+')) {
      if (s[pos] == '-') neg = !neg;
      ++pos;
    }
    Scalar v = atom();
    if (!eof() && peek() == '^') {
      ++pos;
      if (eof() || !isdigit(static_cast<unsigned char>(peek()))) fail("exponent expected after ^");
      long long e = 0;
      while (!eof() && isdigit(static_cast<unsigned char>(peek()))) e = e * 10 + (s[pos++] - '0');
      v = v.pow(e);
    }
    return neg ? -v : v;
  }
  Scalar atom() {
    if (eof()) fail("unexpected end of scalar literal");
    if (peek() == '(') {
      ++pos;
      Scalar v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return v;
    }
    if (peek() == 't') {
      ++pos;
      if (field.kind != FieldKind::ratfun) fail("'t' only makes sense over Q(t)");
      return Scalar::variable(field);
    }
    if (isdigit(static_cast<unsigned char>(peek()))) {
      BigInt n = 0;
      while (!eof() && isdigit(static_cast<unsigned char>(peek()))) n = n * 10 + (s[pos++] - '0');
      return Scalar::from_rat(field, BigRat(n));
    }
    fail(std::string("unexpected character '") + peek() + "' in scalar literal");
  }
};

}  // namespace

Scalar parse_scalar(const std::string& token, const Field& f, int line, int col) {
  ExprParser p{token, 0, f, line, col};
  Scalar v = p.expr();
  if (!p.eof()) p.fail("trailing characters in scalar literal");
  return v;
}

// ----------------------------------------------------------------- parse

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
  std::vector<int> cols;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    Line line{number, {}, {}};
    size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == '#') break;
      if (isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      size_t start = i;
      while (i < raw.size() && !isspace(static_cast<unsigned char>(raw[i])) && raw[i] != '#') ++i;
      line.tokens.push_back(raw.substr(start, i - start));
      line.cols.push_back(static_cast<int>(start) + 1);
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const Line& l, size_t idx) {
  try {
    return std::stoi(l.tokens.at(idx));
  } catch (...) {
    throw parse_error(l.number, l.cols[idx], "expected an integer, got '" + l.tokens[idx] + "'");
  }
}

int parse_dim(const Line& l, size_t idx) {
  int n = parse_int(l, idx);
  if (n <= 0) throw parse_error(l.number, l.cols[idx], "dimension must be positive");
  return n;
}

struct LabelIndex {
  std::map<std::string, int> by_name;
  int resolve(const Line& l, size_t idx) const {
    auto it = by_name.find(l.tokens.at(idx));
    if (it == by_name.end())
      throw parse_error(l.number, l.cols[idx], "unknown basis label '" + l.tokens[idx] + "'");
    return it->second;
  }
};

LabelIndex index_of(const std::vector<std::string>& labels, const Line& at) {
  LabelIndex idx;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (!idx.by_name.emplace(labels[i], static_cast<int>(i)).second)
      throw parse_error(at.number, 1, "duplicate basis label '" + labels[i] + "'");
  }
  return idx;
}

}  // namespace

const HopfSpecDoc::HopfEntry* HopfSpecDoc::find_hopf(const std::string& name) const {
  for (const auto& h : hopfs)
    if (h.name == name) return &h;
  return nullptr;
}

const HopfSpecDoc::FunctionalEntry* HopfSpecDoc::find_functional(const std::string& name) const {
  for (const auto& f : functionals)
    if (f.name == name) return &f;
  return nullptr;
}

HopfSpecDoc parse_hopfspec(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw parse_error(1, 1, "empty document");
  size_t li = 0;
  const Line& head = lines[li++];
  if (head.tokens[0] != "hopfspec" || head.tokens.size() != 2)
    throw parse_error(head.number, head.cols[0], "expected 'hopfspec <version>'");
  if (head.tokens[1] != "1")
    throw parse_error(head.number, head.cols[1], "unsupported format version " + head.tokens[1]);

  HopfSpecDoc doc;
  if (li >= lines.size()) throw parse_error(head.number, 1, "missing field declaration");
  {
    const Line& fl = lines[li++];
    if (fl.tokens[0] != "field") throw parse_error(fl.number, fl.cols[0], "expected 'field'");
    const std::string& kind = fl.tokens.at(1);
    if (kind == "rationals")
      doc.field = Field::rationals();
    else if (kind == "ratfun")
      doc.field = Field::rational_functions();
    else if (kind == "gf") {
      int p = parse_int(fl, 2);
      try {
        doc.field = Field::gf(static_cast<std::uint32_t>(p));
      } catch (const structure_invalid& e) {
        throw parse_error(fl.number, fl.cols[2], e.what());
      }
    } else
      throw parse_error(fl.number, fl.cols[1], "unknown field '" + kind + "'");
  }

  auto need_host = [&](const Line& l, size_t idx) -> const HopfSpecDoc::HopfEntry& {
    const auto* h = doc.find_hopf(l.tokens.at(idx));
    if (!h) throw parse_error(l.number, l.cols[idx], "unknown hopf block '" + l.tokens[idx] + "'");
    return *h;
  };

  while (li < lines.size()) {
    const Line& bl = lines[li++];
    const std::string& kind = bl.tokens[0];
    if (bl.tokens.size() < 2)
      throw parse_error(bl.number, bl.cols[0], "block header needs a name");
    std::string name = bl.tokens[1];

    // collect the block body
    std::vector<const Line*> body;
    bool closed = false;
    while (li < lines.size()) {
      const Line& l = lines[li++];
      if (l.tokens[0] == "end") {
        closed = true;
        break;
      }
      body.push_back(&l);
    }
    if (!closed) throw parse_error(bl.number, bl.cols[0], "block '" + name + "' never ends");

    auto get_one = [&](const char* key) -> const Line* {
      const Line* found = nullptr;
      for (const Line* l : body)
        if (l->tokens[0] == key) {
          if (found) throw parse_error(l->number, l->cols[0], std::string("duplicate ") + key);
          found = l;
        }
      return found;
    };

    if (kind == "hopf") {
      const Line* dl = get_one("dim");
      const Line* bsl = get_one("basis");
      if (!dl || !bsl) throw parse_error(bl.number, bl.cols[0], "hopf block needs dim and basis");
      int n = parse_dim(*dl, 1);
      std::vector<std::string> labels(bsl->tokens.begin() + 1, bsl->tokens.end());
      if (static_cast<int>(labels.size()) != n)
        throw parse_error(bsl->number, bsl->cols[0], "basis size does not match dim");
      LabelIndex idx = index_of(labels, *bsl);
      std::vector<Scalar> mult = zero_vec(n * n * n, doc.field);
      std::vector<Scalar> comult = zero_vec(n * n * n, doc.field);
      Vec unit = zero_vec(n, doc.field), counit = zero_vec(n, doc.field);
      bool has_s = false;
      Matrix S(n, n, doc.field);
      for (const Line* l : body) {
        const std::string& k = l->tokens[0];
        if (k == "dim" || k == "basis") continue;
        if (k == "unit" || k == "counit") {
          int i = idx.resolve(*l, 1);
          Scalar v = parse_scalar(l->tokens.at(2), doc.field, l->number, l->cols[2]);
          (k == "unit" ? unit : counit)[i] = v;
        } else if (k == "mult") {
          int i = idx.resolve(*l, 1), j = idx.resolve(*l, 2), kk = idx.resolve(*l, 3);
          mult[(static_cast<size_t>(i) * n + j) * n + kk] =
              parse_scalar(l->tokens.at(4), doc.field, l->number, l->cols[4]);
        } else if (k == "comult") {
          int kk = idx.resolve(*l, 1), i = idx.resolve(*l, 2), j = idx.resolve(*l, 3);
          comult[(static_cast<size_t>(kk) * n + i) * n + j] =
              parse_scalar(l->tokens.at(4), doc.field, l->number, l->cols[4]);
        } else if (k == "antipode") {
          has_s = true;
          int in = idx.resolve(*l, 1), out = idx.resolve(*l, 2);
          S.at(out, in) = parse_scalar(l->tokens.at(3), doc.field, l->number, l->cols[3]);
        } else {
          throw parse_error(l->number, l->cols[0], "unknown hopf entry '" + k + "'");
        }
      }
      auto alg = std::make_shared<const FinHopf>(
          doc.field, labels, std::move(mult), std::move(comult), std::move(unit),
          std::move(counit), has_s ? std::optional<Matrix>(S) : std::nullopt);
      doc.hopfs.push_back({name, alg});
    } else if (kind == "functional") {
      const Line* hl = get_one("host");
      const Line* al = get_one("arity");
      if (!hl || !al)
        throw parse_error(bl.number, bl.cols[0], "functional block needs host and arity");
      const auto& host = need_host(*hl, 1);
      int arity = parse_int(*al, 1);
      if (arity < 1) throw parse_error(al->number, al->cols[1], "arity must be >= 1");
      LabelIndex idx = index_of(host.algebra->labels(), *hl);
      Functional f(host.algebra, arity);
      int n = host.algebra->dim();
      for (const Line* l : body) {
        if (l->tokens[0] != "entry") {
          if (l->tokens[0] == "host" || l->tokens[0] == "arity") continue;
          throw parse_error(l->number, l->cols[0], "unknown functional entry '" + l->tokens[0] + "'");
        }
        if (static_cast<int>(l->tokens.size()) != arity + 2)
          throw parse_error(l->number, l->cols[0], "entry needs one label per tensor leg");
        size_t flat = 0;
        for (int d = 0; d < arity; ++d) flat = flat * n + idx.resolve(*l, 1 + d);
        f.coef[flat] = parse_scalar(l->tokens.back(), doc.field, l->number, l->cols.back());
      }
      doc.functionals.push_back({name, host.name, std::move(f)});
    } else if (kind == "rmatrix") {
      const Line* hl = get_one("host");
      if (!hl) throw parse_error(bl.number, bl.cols[0], "rmatrix block needs a host");
      const auto& host = need_host(*hl, 1);
      LabelIndex idx = index_of(host.algebra->labels(), *hl);
      int n = host.algebra->dim();
      RMatrix R(host.algebra, zero_vec(n * n, doc.field));
      for (const Line* l : body) {
        if (l->tokens[0] != "entry") {
          if (l->tokens[0] == "host") continue;
          throw parse_error(l->number, l->cols[0], "unknown rmatrix entry '" + l->tokens[0] + "'");
        }
        int i = idx.resolve(*l, 1), j = idx.resolve(*l, 2);
        R.at(i, j) = parse_scalar(l->tokens.at(3), doc.field, l->number, l->cols[3]);
      }
      doc.rmatrices.push_back({name, host.name, std::move(R)});
    } else if (kind == "ydmodule" || kind == "ydalgebra") {
      const Line* hl = get_one("host");
      const Line* dl = get_one("dim");
      const Line* bsl = get_one("basis");
      if (!hl || !dl || !bsl)
        throw parse_error(bl.number, bl.cols[0], kind + " block needs host, dim and basis");
      const auto& host = need_host(*hl, 1);
      LabelIndex hidx = index_of(host.algebra->labels(), *hl);
      int m = parse_dim(*dl, 1);
      std::vector<std::string> labels(bsl->tokens.begin() + 1, bsl->tokens.end());
      if (static_cast<int>(labels.size()) != m)
        throw parse_error(bsl->number, bsl->cols[0], "basis size does not match dim");
      LabelIndex idx = index_of(labels, *bsl);
      YDModule M(host.algebra, m, labels);
      std::vector<Scalar> mult = zero_vec(m * m * m, doc.field);
      Vec unit = zero_vec(m, doc.field);
      for (const Line* l : body) {
        const std::string& k = l->tokens[0];
        if (k == "host" || k == "dim" || k == "basis") continue;
        if (k == "action") {
          int a = hidx.resolve(*l, 1), in = idx.resolve(*l, 2), out = idx.resolve(*l, 3);
          M.act(out, a, in) = parse_scalar(l->tokens.at(4), doc.field, l->number, l->cols[4]);
        } else if (k == "coaction") {
          int in = idx.resolve(*l, 1), out = idx.resolve(*l, 2), b = hidx.resolve(*l, 3);
          M.coact(out, b, in) = parse_scalar(l->tokens.at(4), doc.field, l->number, l->cols[4]);
        } else if (kind == "ydalgebra" && k == "mult") {
          int i = idx.resolve(*l, 1), j = idx.resolve(*l, 2), kk = idx.resolve(*l, 3);
          mult[(static_cast<size_t>(i) * m + j) * m + kk] =
              parse_scalar(l->tokens.at(4), doc.field, l->number, l->cols[4]);
        } else if (kind == "ydalgebra" && k == "unit") {
          int i = idx.resolve(*l, 1);
          unit[i] = parse_scalar(l->tokens.at(2), doc.field, l->number, l->cols[2]);
        } else {
          throw parse_error(l->number, l->cols[0], "unknown " + kind + " entry '" + k + "'");
        }
      }
      if (kind == "ydmodule") {
        doc.ydmodules.push_back({name, host.name, std::move(M)});
      } else {
        YDAlgebra A;
        A.mod = std::move(M);
        A.mult_ = std::move(mult);
        A.unit = std::move(unit);
        doc.ydalgebras.push_back({name, host.name, std::move(A)});
      }
    } else {
      throw parse_error(bl.number, bl.cols[0], "unknown block kind '" + kind + "'");
    }
  }
  return doc;
}

// ------------------------------------------------------------- serialize

namespace {

void write_field(std::ostream& os, const Field& f) {
  switch (f.kind) {
    case FieldKind::rationals: os << "field rationals\n"; break;
    case FieldKind::prime: os << "field gf " << f.p << "\n"; break;
    case FieldKind::ratfun: os << "field ratfun\n"; break;
  }
}

void write_hopf(std::ostream& os, const std::string& name, const FinHopf& h) {
  int n = h.dim();
  os << "hopf " << name << "\n  dim " << n << "\n  basis";
  for (const auto& l : h.labels()) os << " " << l;
  os << "\n";
  for (int i = 0; i < n; ++i)
    if (!h.unit()[i].is_zero()) os << "  unit " << h.label(i) << " " << h.unit()[i].str() << "\n";
  for (int i = 0; i < n; ++i)
    if (!h.counit()[i].is_zero())
      os << "  counit " << h.label(i) << " " << h.counit()[i].str() << "\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!h.mult(k, i, j).is_zero())
          os << "  mult " << h.label(i) << " " << h.label(j) << " " << h.label(k) << " "
             << h.mult(k, i, j).str() << "\n";
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!h.comult(i, j, k).is_zero())
          os << "  comult " << h.label(k) << " " << h.label(i) << " " << h.label(j) << " "
             << h.comult(i, j, k).str() << "\n";
  if (h.has_antipode())
    for (int in = 0; in < n; ++in)
      for (int out = 0; out < n; ++out)
        if (!h.antipode().at(out, in).is_zero())
          os << "  antipode " << h.label(in) << " " << h.label(out) << " "
             << h.antipode().at(out, in).str() << "\n";
  os << "end\n";
}

void write_module_lines(std::ostream& os, const YDModule& M) {
  const FinHopf& H = *M.host;
  os << "  dim " << M.dim << "\n  basis";
  for (const auto& l : M.labels) os << " " << l;
  os << "\n";
  for (int a = 0; a < H.dim(); ++a)
    for (int i = 0; i < M.dim; ++i)
      for (int j = 0; j < M.dim; ++j)
        if (!M.act(j, a, i).is_zero())
          os << "  action " << H.label(a) << " " << M.labels[i] << " " << M.labels[j] << " "
             << M.act(j, a, i).str() << "\n";
  for (int i = 0; i < M.dim; ++i)
    for (int j = 0; j < M.dim; ++j)
      for (int b = 0; b < H.dim(); ++b)
        if (!M.coact(j, b, i).is_zero())
          os << "  coaction " << M.labels[i] << " " << M.labels[j] << " " << H.label(b) << " "
             << M.coact(j, b, i).str() << "\n";
}

}  // namespace

std::string serialize_hopfspec(const HopfSpecDoc& doc) {
  std::ostringstream os;
  os << "hopfspec 1\n";
  write_field(os, doc.field);
  for (const auto& h : doc.hopfs) {
    os << "\n";
    write_hopf(os, h.name, *h.algebra);
  }
  for (const auto& f : doc.functionals) {
    os << "\nfunctional " << f.name << "\n  host " << f.host << "\n  arity " << f.value.arity
       << "\n";
    int n = f.value.host->dim();
    for (size_t flat = 0; flat < f.value.coef.size(); ++flat) {
      if (f.value.coef[flat].is_zero()) continue;
      std::vector<int> digits(f.value.arity);
      size_t t = flat;
      for (int d = f.value.arity - 1; d >= 0; --d) {
        digits[d] = static_cast<int>(t % n);
        t /= n;
      }
      os << "  entry";
      for (int d : digits) os << " " << f.value.host->label(d);
      os << " " << f.value.coef[flat].str() << "\n";
    }
    os << "end\n";
  }
  for (const auto& r : doc.rmatrices) {
    os << "\nrmatrix " << r.name << "\n  host " << r.host << "\n";
    int n = r.value.host->dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!r.value.at(i, j).is_zero())
          os << "  entry " << r.value.host->label(i) << " " << r.value.host->label(j) << " "
             << r.value.at(i, j).str() << "\n";
    os << "end\n";
  }
  for (const auto& m : doc.ydmodules) {
    os << "\nydmodule " << m.name << "\n  host " << m.host << "\n";
    write_module_lines(os, m.value);
    os << "end\n";
  }
  for (const auto& a : doc.ydalgebras) {
    os << "\nydalgebra " << a.name << "\n  host " << a.host << "\n";
    write_module_lines(os, a.value.mod);
    int m = a.value.mod.dim;
    for (int i = 0; i < m; ++i)
      if (!a.value.unit[i].is_zero())
        os << "  unit " << a.value.mod.labels[i] << " " << a.value.unit[i].str() << "\n";
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
          if (!a.value.mult(k, i, j).is_zero())
            os << "  mult " << a.value.mod.labels[i] << " " << a.value.mod.labels[j] << " "
               << a.value.mod.labels[k] << " " << a.value.mult(k, i, j).str() << "\n";
    os << "end\n";
  }
  return os.str();
}

}  // namespace hopf
