#include "mfci/io.hpp"

#include <sstream>

#include "mfci/errors.hpp"
#include "mfci/groebner.hpp"
#include "mfci/ideal.hpp"

namespace mfci {

namespace {

// Line and column of byte offset `at` in text.
std::pair<int, int> position(const std::string& text, size_t at) {
  int line = 1, col = 1;
  for (size_t k = 0; k < at && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void fail_at(const std::string& text, const std::string& needle, const std::string& msg, int offset = 0) {
  size_t at = text.find("\"" + needle + "\"");
  auto [line, col] = at == std::string::npos ? std::pair<int, int>{1, 1} : position(text, at + 1 + offset);
  throw ParseError(msg, line, col);
}

// Strips the location suffix that ParseError adds to its message.
std::string bare(const ParseError& e) {
  std::string s = e.what();
  if (s.rfind("ParseError: ", 0) == 0) s = s.substr(12);
  size_t at = s.rfind(" at line ");
  return at == std::string::npos ? s : s.substr(0, at);
}

Poly parse_checked(const std::string& text, const std::string& s, const RingCtx& ctx) {
  try {
    return ctx.parse(s);
  } catch (const ParseError& e) {
    fail_at(text, s, "polynomial '" + s + "': " + bare(e), e.column() - 1);
  }
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s;
}

RingPtr ring_of(const ProblemSpec& p) {
  Field k = p.characteristic == 0 ? Field::rationals() : Field(p.characteristic);
  return std::make_shared<PolyRing>(k, p.variables, p.degrees);
}

template <class T>
T get(const Json& j, const char* key, const T& fallback) {
  auto it = j.find(key);
  return it == j.end() ? fallback : it->template get<T>();
}

}  // namespace

ProblemSpec parse_problem(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    auto [line, col] = position(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    size_t at = msg.find("syntax error");
    throw ParseError(at == std::string::npos ? "malformed JSON" : msg.substr(at), line, col);
  }
  ProblemSpec p;
  try {
    if (!j.is_object()) throw ParseError("problem must be a JSON object", 1, 1);
    int schema = get<int>(j, "schema", kSchemaVersion);
    if (schema != kSchemaVersion) fail_at(text, "schema", "unsupported schema version " + std::to_string(schema));
    if (!j.contains("ring")) throw ParseError("missing \"ring\"", 1, 1);
    const Json& r = j.at("ring");
    p.characteristic = get<uint32_t>(r, "characteristic", 101);
    p.variables = r.at("variables").get<std::vector<std::string>>();
    p.degrees = get<std::vector<int>>(r, "degrees", std::vector<int>(p.variables.size(), 1));
    if (p.degrees.size() != p.variables.size()) fail_at(text, "degrees", "one degree per variable expected");
    p.f = j.at("f").get<std::vector<std::string>>();
    if (j.contains("module")) {
      const Json& m = j.at("module");
      p.cyclic = get<std::vector<std::string>>(m, "cyclic", {});
      p.presentation = get<std::vector<std::vector<std::string>>>(m, "presentation", {});
      p.twists = get<std::vector<int>>(m, "twists", std::vector<int>(p.presentation.size(), 0));
      if (!p.cyclic.empty() && !p.presentation.empty())
        fail_at(text, "module", "module is either cyclic or a presentation");
      if (p.twists.size() != p.presentation.size()) fail_at(text, "twists", "one twist per presentation row expected");
    }
    if (j.contains("options")) {
      const Json& o = j.at("options");
      p.max_degree = get<int>(o, "max_degree", -1);
      auto q = get<std::vector<int>>(o, "q_range", {});
      if (!q.empty()) {
        if (q.size() != 2) fail_at(text, "q_range", "q_range is [lo, hi]");
        p.q_lo = q[0];
        p.q_hi = q[1];
      }
      p.seed = get<uint64_t>(o, "seed", 1);
      p.format = get<std::string>(o, "format", "json");
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad problem field: ") + e.what(), 1, 1);
  }
  // polynomial strings are checked here so errors point into the file
  auto ring = ring_of(p);
  auto Q = make_poly_ctx(ring);
  for (auto& s : p.f) parse_checked(text, s, *Q);
  for (auto& s : p.cyclic) parse_checked(text, s, *Q);
  for (auto& row : p.presentation)
    for (auto& s : row) parse_checked(text, s, *Q);
  return p;
}

Json problem_json(const ProblemSpec& p) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["ring"] = {{"characteristic", p.characteristic}, {"variables", p.variables}, {"degrees", p.degrees}};
  j["f"] = p.f;
  if (!p.cyclic.empty()) j["module"] = {{"cyclic", p.cyclic}};
  if (!p.presentation.empty()) j["module"] = {{"presentation", p.presentation}, {"twists", p.twists}};
  Json o;
  if (p.max_degree >= 0) o["max_degree"] = p.max_degree;
  if (p.q_hi >= p.q_lo) o["q_range"] = {p.q_lo, p.q_hi};
  o["seed"] = p.seed;
  o["format"] = p.format;
  j["options"] = o;
  return j;
}

Fixture problem_fixture(const ProblemSpec& p, const std::string& name) {
  auto Q = make_poly_ctx(ring_of(p));
  std::vector<Poly> f;
  for (auto& s : p.f) f.push_back(Q->parse(s));
  if (!p.presentation.empty()) {
    FreeModule tgt(p.twists);
    int cols = int(p.presentation[0].size());
    std::vector<std::vector<Poly>> colv(cols, std::vector<Poly>(tgt.rank()));
    for (int i = 0; i < tgt.rank(); ++i) {
      if (int(p.presentation[i].size()) != cols) throw ParseError("presentation rows differ in length", 1, 1);
      for (int c = 0; c < cols; ++c) colv[c][i] = Q->parse(p.presentation[i][c]);
    }
    PolyMatrix A(FreeModule::free(cols), tgt, 0);
    for (int c = 0; c < cols; ++c) {
      A.set_column(c, colv[c]);
      A.src.tw[c] = column_twist(*Q, colv[c], tgt);
    }
    if (!A.homogeneous(Q->gw())) throw InhomogeneousInput("module presentation is not homogeneous");
    return make_fixture(name, Q, f, A);
  }
  std::vector<Poly> a;
  if (p.cyclic.empty())
    for (int v = 0; v < Q->ring().nx(); ++v) a.push_back(Q->var(v));
  for (auto& s : p.cyclic) a.push_back(Q->parse(s));
  for (auto& g : f)
    if (!ideal_contains(*Q, a, g)) throw NotAnRModule("f does not kill Q/(" + join(p.cyclic) + ")");
  return make_fixture(name, Q, f, a);
}

ProblemSpec fixture_problem(const Fixture& fx) {
  ProblemSpec p;
  const PolyRing& r = fx.Q->ring();
  p.characteristic = r.field().p();
  for (int v = 0; v < r.nx(); ++v) {
    p.variables.push_back(r.name(v));
    p.degrees.push_back(r.order_weight(v));
  }
  for (auto& g : fx.f) p.f.push_back(fx.Q->str(g));
  if (!fx.a.empty()) {
    for (auto& g : fx.a) p.cyclic.push_back(fx.Q->str(g));
  } else {
    p.presentation = fx.pres_q.grid(r);
    p.twists = fx.pres_q.tgt.tw;
  }
  return p;
}

Json ring_json(const PolyRing& r) {
  Json j;
  j["characteristic"] = r.field().p();
  std::vector<std::string> x, t;
  std::vector<int> deg;
  for (int v = 0; v < r.nvars(); ++v) {
    if (r.kind(v) == VarKind::T) {
      t.push_back(r.name(v));
    } else if (r.kind(v) == VarKind::X) {
      x.push_back(r.name(v));
      deg.push_back(r.order_weight(v));
    }
  }
  j["variables"] = x;
  j["degrees"] = deg;
  if (!t.empty()) j["t_variables"] = t;
  return j;
}

Json free_module_json(const FreeModule& F) {
  Json j;
  j["tw"] = F.tw;
  if (!F.itw.empty()) j["itw"] = F.itw;
  return j;
}

FreeModule free_module_from_json(const Json& j) {
  FreeModule F(j.at("tw").get<std::vector<int>>());
  if (j.contains("itw")) F.itw = j.at("itw").get<std::vector<int>>();
  return F;
}

Json matrix_json(const PolyMatrix& A, const PolyRing& r) {
  Json j;
  j["src"] = free_module_json(A.src);
  j["tgt"] = free_module_json(A.tgt);
  j["deg"] = A.deg;
  j["entries"] = A.grid(r);
  return j;
}

PolyMatrix matrix_from_json(const Json& j, const RingCtx& ctx) {
  PolyMatrix A(free_module_from_json(j.at("src")), free_module_from_json(j.at("tgt")), j.at("deg").get<int>());
  auto grid = j.at("entries").get<std::vector<std::vector<std::string>>>();
  if (int(grid.size()) != A.rows()) throw DimensionMismatch("matrix rows do not match the target rank");
  for (int i = 0; i < A.rows(); ++i) {
    if (int(grid[i].size()) != A.cols()) throw DimensionMismatch("matrix columns do not match the source rank");
    for (int c = 0; c < A.cols(); ++c) A.at(i, c) = parse_poly(grid[i][c], ctx.ring());
  }
  return A;
}

Json complex_json(const ChainComplex& C) {
  Json j;
  j["lo"] = C.lo;
  j["hi"] = C.hi();
  Json terms = Json::array(), d = Json::array();
  for (auto& t : C.terms) terms.push_back(free_module_json(t));
  for (auto& m : C.d) d.push_back(matrix_json(m, C.ctx->ring()));
  j["terms"] = terms;
  j["d"] = d;
  return j;
}

ChainComplex complex_from_json(const Json& j, CtxPtr ctx) {
  std::vector<FreeModule> terms;
  std::vector<PolyMatrix> d;
  for (auto& t : j.at("terms")) terms.push_back(free_module_from_json(t));
  for (auto& m : j.at("d")) d.push_back(matrix_from_json(m, *ctx));
  return ChainComplex(ctx, j.at("lo").get<int>(), terms, d);
}

Json mf_json(const GradedMF& E) {
  const PolyRing& r = E.ctx->ring();
  Json j;
  j["W"] = E.W.str(r);
  j["E1"] = free_module_json(E.E1);
  j["E0"] = free_module_json(E.E0);
  j["g1"] = matrix_json(E.g1, r);
  j["g0"] = matrix_json(E.g0, r);
  return j;
}

GradedMF mf_from_json(const Json& j, CtxPtr S) {
  Poly W = parse_poly(j.at("W").get<std::string>(), S->ring());
  PolyMatrix g1 = matrix_from_json(j.at("g1"), *S), g0 = matrix_from_json(j.at("g0"), *S);
  GradedMF E = make_mf(S, W, g1, g0);
  E.E1 = free_module_from_json(j.at("E1"));
  E.E0 = free_module_from_json(j.at("E0"));
  return E;
}

Json ideal_json(const std::vector<Poly>& I, const PolyRing& r) {
  Json j = Json::array();
  for (auto& g : I) j.push_back(g.str(r));
  return j;
}

std::vector<Poly> ideal_from_json(const Json& j, const RingCtx& ctx) {
  std::vector<Poly> out;
  for (auto& s : j) out.push_back(parse_poly(s.get<std::string>(), ctx.ring()));
  return out;
}

Json hilbert_json(const std::map<int, int>& h) {
  Json j = Json::object();
  for (auto& [d, n] : h) j[std::to_string(d)] = n;
  return j;
}

namespace {

bool scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(std::ostringstream& out, const Json& j, int indent) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto& [k, v] : j.items()) {
      if (!v.is_structured()) {
        out << pad << k << ": " << scalar(v) << "\n";
      } else if (scalar_array(v)) {
        out << pad << k << ": [";
        for (size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
        out << "]\n";
      } else {
        out << pad << k << ":\n";
        render(out, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (auto& v : j) {
      if (scalar_array(v)) {
        out << pad << "[";
        for (size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
        out << "]\n";
      } else if (!v.is_structured()) {
        out << pad << scalar(v) << "\n";
      } else {
        out << pad << "-\n";
        render(out, v, indent + 2);
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(out, report, 0);
  return out.str();
}

}  // namespace mfci
