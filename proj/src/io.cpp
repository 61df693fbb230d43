#include "supercoh/io.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace supercoh::io {

using gflin::Vec;

namespace {

std::string join(const std::vector<Diagnostic>& diags) {
  std::string out;
  for (const auto& d : diags) {
    if (!out.empty()) out += "; ";
    if (d.line) out += "line " + std::to_string(d.line) + ": ";
    out += d.message;
  }
  return out;
}

std::string join(const FileValidation& v) {
  std::string out;
  for (const auto& [part, rep] : v.parts)
    for (const auto& viol : rep.violations) {
      if (!out.empty()) out += "; ";
      out += part + ": " + viol.axiom;
      for (std::size_t i : viol.indices) out += " " + std::to_string(i);
    }
  return out;
}

std::size_t line_at(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

// First line mentioning "key" as a JSON string, 0 if none.
std::size_t line_of(const std::string& text, const std::string& key) {
  auto pos = text.find('"' + key + '"');
  return pos == std::string::npos ? 0 : line_at(text, pos);
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

class Reader {
public:
  explicit Reader(const std::string& text) : text_(text) {}

  [[noreturn]] void fail(const std::string& msg, const std::string& key = "") const {
    throw ParseError({{msg, key.empty() ? 0 : line_of(text_, key)}});
  }

  std::vector<std::string> names(const Json& root, const char* key) const {
    std::vector<std::string> out;
    if (!root.contains(key)) return out;
    const Json& arr = root.at(key);
    if (!arr.is_array()) fail(std::string("\"") + key + "\" must be a list of names", key);
    for (const auto& v : arr) {
      if (!v.is_string()) fail(std::string("\"") + key + "\" must contain strings", key);
      out.push_back(v.get<std::string>());
    }
    return out;
  }

  void check_unique(const std::vector<std::string>& even, const std::vector<std::string>& odd,
                    const std::string& where) const {
    std::set<std::string> seen;
    for (const auto* list : {&even, &odd})
      for (const auto& n : *list) {
        if (n.empty()) fail("empty basis name in " + where);
        if (!seen.insert(n).second) fail("duplicate basis name \"" + n + "\" in " + where, n);
      }
  }

  Vec coefficients(const gflin::Field& f, const super::SuperSpace& s, const Json& obj, const std::string& ctx) const {
    if (!obj.is_object()) fail(ctx + " must be an object name -> coefficient", ctx);
    Vec v(s.dim(), 0);
    for (const auto& [name, c] : obj.items()) {
      std::size_t i = s.index_of(name);
      if (i == static_cast<std::size_t>(-1)) fail("unknown basis name \"" + name + "\" in " + ctx, ctx);
      if (!c.is_number_integer()) fail("coefficient of \"" + name + "\" in " + ctx + " must be an integer", ctx);
      v[i] = f.add(v[i], f.from_int(c.get<long long>()));
    }
    return v;
  }

  std::pair<std::string, std::string> bracket_key(const std::string& key) const {
    std::string t = trim(key);
    if (t.size() < 5 || t.front() != '[' || t.back() != ']') fail("bracket key \"" + key + "\" is not of the form [a,b]", key);
    std::string inner = t.substr(1, t.size() - 2);
    auto comma = inner.find(',');
    if (comma == std::string::npos || inner.find(',', comma + 1) != std::string::npos)
      fail("bracket key \"" + key + "\" is not of the form [a,b]", key);
    return {trim(inner.substr(0, comma)), trim(inner.substr(comma + 1))};
  }

  NamedModule module(const LieSuperAlgebra& g, const std::string& name, const Json& obj) const {
    if (!obj.is_object()) fail("module \"" + name + "\" must be an object", name);
    NamedModule out;
    out.name = name;
    auto even = names(obj, "even");
    auto odd = names(obj, "odd");
    check_unique(even, odd, "module \"" + name + "\"");
    out.rep.target = super::SuperSpace(even, odd);
    const std::size_t d = out.rep.dim();
    const auto& f = g.field;
    out.rep.rho.assign(g.dim(), gflin::Matrix(f, d, d));
    if (obj.contains("action")) {
      const Json& act = obj.at("action");
      if (!act.is_object()) fail("action of module \"" + name + "\" must map algebra names to matrices", name);
      for (const auto& [xname, mat] : act.items()) {
        std::size_t i = g.space.index_of(xname);
        if (i == static_cast<std::size_t>(-1)) fail("unknown algebra element \"" + xname + "\" in module \"" + name + "\"", name);
        if (!mat.is_array() || mat.size() != d)
          fail("action of \"" + xname + "\" on module \"" + name + "\" must have " + std::to_string(d) + " rows", name);
        std::vector<long long> flat;
        for (const auto& row : mat) {
          if (!row.is_array() || row.size() != d)
            fail("action of \"" + xname + "\" on module \"" + name + "\" must have " + std::to_string(d) + " columns", name);
          for (const auto& c : row) {
            if (!c.is_number_integer()) fail("matrix entries must be integers in module \"" + name + "\"", name);
            flat.push_back(c.get<long long>());
          }
        }
        out.rep.rho[i] = gflin::Matrix::from_dense(f, d, d, flat);
      }
    }
    if (obj.contains("pmap")) {
      const Json& pm = obj.at("pmap");
      if (!pm.is_object()) fail("pmap of module \"" + name + "\" must be an object", name);
      for (const auto& [mname, coeffs] : pm.items()) {
        if (out.rep.target.index_of(mname) == static_cast<std::size_t>(-1))
          fail("unknown module element \"" + mname + "\" in pmap of module \"" + name + "\"", name);
        if (!gflin::is_zero(coefficients(f, out.rep.target, coeffs, "pmap of module " + name))) out.has_pmap = true;
      }
    }
    return out;
  }

private:
  const std::string& text_;
};

}  // namespace

ParseError::ParseError(std::vector<Diagnostic> diags) : Error(join(diags)), diags_(std::move(diags)) {}

ValidationError::ValidationError(FileValidation v) : Error("validation failed: " + join(v)), v_(std::move(v)) {}

bool FileValidation::ok() const {
  for (const auto& [part, rep] : parts)
    if (!rep.ok()) return false;
  return true;
}

const NamedModule* AlgebraFile::module(const std::string& name) const {
  for (const auto& m : modules)
    if (m.name == name) return &m;
  return nullptr;
}

AlgebraFile read_algebra(const std::string& text, std::optional<unsigned> p_override) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError({{std::string("JSON syntax error: ") + e.what(), line_at(text, e.byte == 0 ? 0 : e.byte - 1)}});
  }
  Reader rd(text);
  if (!root.is_object()) rd.fail("top level must be a JSON object");
  for (const auto& [key, _] : root.items())
    if (key != "p" && key != "even" && key != "odd" && key != "brackets" && key != "pmap" && key != "modules")
      rd.fail("unknown top-level key \"" + key + "\"", key);

  unsigned p = 3;
  bool pinned = root.contains("p");
  if (pinned) {
    if (p_override) rd.fail("--p-override given but the file pins p", "p");
    const Json& jp = root.at("p");
    if (!jp.is_number_integer() || jp.get<long long>() < 0 || jp.get<long long>() > 32749)
      rd.fail("p must be an odd prime", "p");
    p = static_cast<unsigned>(jp.get<long long>());
  } else if (p_override) {
    p = *p_override;
  }
  if (p == 2 || !gflin::is_prime(p)) rd.fail("p must be an odd prime", pinned ? "p" : "");

  auto even = rd.names(root, "even");
  auto odd = rd.names(root, "odd");
  rd.check_unique(even, odd, "the algebra");
  gflin::Field f(p);
  AlgebraFile out{LieSuperAlgebra(f, super::SuperSpace(even, odd)), {}, pinned};
  LieSuperAlgebra& g = out.g;

  if (root.contains("brackets")) {
    const Json& br = root.at("brackets");
    if (!br.is_object()) rd.fail("\"brackets\" must be an object \"[a,b]\" -> coefficients", "brackets");
    std::set<std::pair<std::size_t, std::size_t>> written;
    for (const auto& [key, val] : br.items()) {
      auto [a, b] = rd.bracket_key(key);
      std::size_t i = g.space.index_of(a), j = g.space.index_of(b);
      if (i == static_cast<std::size_t>(-1) || j == static_cast<std::size_t>(-1))
        rd.fail("bracket key \"" + key + "\" names an unknown basis element", key);
      if (!written.insert({i, j}).second) rd.fail("bracket \"" + key + "\" given twice", key);
      Vec v = rd.coefficients(f, g.space, val, key);
      g.bracket[i][j] = v;
      // the super-skew partner is completed unless the file writes it too
      if (i != j && !written.count({j, i})) g.bracket[j][i] = f.scaled(v, f.neg(f.sign(g.parity(i) * g.parity(j))));
    }
  }

  if (root.contains("pmap")) {
    const Json& pm = root.at("pmap");
    if (!pm.is_object()) rd.fail("\"pmap\" must be an object name -> coefficients", "pmap");
    for (const auto& [name, val] : pm.items()) {
      std::size_t i = g.space.index_of(name);
      if (i == static_cast<std::size_t>(-1)) rd.fail("pmap names unknown element \"" + name + "\"", name);
      if (g.parity(i) != 0) rd.fail("pmap is defined on even elements only, \"" + name + "\" is odd", name);
      g.pmap[i] = rd.coefficients(f, g.space, val, "pmap of " + name);
    }
  }

  if (root.contains("modules")) {
    const Json& mods = root.at("modules");
    std::set<std::string> seen;
    auto add = [&](const std::string& name, const Json& obj) {
      if (!seen.insert(name).second) rd.fail("duplicate module name \"" + name + "\"", name);
      out.modules.push_back(rd.module(g, name, obj));
    };
    if (mods.is_object()) {
      for (const auto& [name, obj] : mods.items()) add(name, obj);
    } else if (mods.is_array()) {
      for (const auto& obj : mods) {
        if (!obj.is_object() || !obj.contains("name") || !obj.at("name").is_string())
          rd.fail("each module in the list needs a \"name\"", "modules");
        add(obj.at("name").get<std::string>(), obj);
      }
    } else {
      rd.fail("\"modules\" must be an object or a list", "modules");
    }
  }
  return out;
}

FileValidation validate_file(const AlgebraFile& file) {
  FileValidation v;
  v.parts.emplace_back("algebra", super::validate_lie_super(file.g));
  v.parts.emplace_back("pmap", super::validate_pmap(file.g));
  for (const auto& m : file.modules) v.parts.emplace_back("module:" + m.name, super::validate_module(file.g, m.rep, true));
  return v;
}

AlgebraFile parse_algebra(const std::string& text, std::optional<unsigned> p_override) {
  AlgebraFile file = read_algebra(text, p_override);
  FileValidation v = validate_file(file);
  if (!v.ok()) throw ValidationError(std::move(v));
  return file;
}

namespace {

Json coeff_map(const gflin::Field& f, const super::SuperSpace& s, const Vec& v) {
  Json out = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out[s.name(i)] = f.to_signed(v[i]);
  return out;
}

}  // namespace

Json algebra_to_json(const LieSuperAlgebra& g, const std::vector<NamedModule>& modules) {
  const auto& f = g.field;
  const auto& s = g.space;
  Json out;
  out["p"] = f.p();
  Json even = Json::array(), odd = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i) (g.parity(i) ? odd : even).push_back(s.name(i));
  out["even"] = even;
  out["odd"] = odd;
  Json br = Json::object();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j)
      if (!gflin::is_zero(g.bracket[i][j])) br["[" + s.name(i) + "," + s.name(j) + "]"] = coeff_map(f, s, g.bracket[i][j]);
  out["brackets"] = br;
  Json pm = Json::object();
  for (std::size_t i = 0; i < g.even_dim(); ++i) pm[s.name(i)] = coeff_map(f, s, g.pmap[i]);
  out["pmap"] = pm;
  Json mods = Json::object();
  for (const auto& m : modules) {
    Json jm;
    Json me = Json::array(), mo = Json::array();
    for (std::size_t a = 0; a < m.rep.dim(); ++a) (m.rep.target.parity(a) ? mo : me).push_back(m.rep.target.name(a));
    jm["even"] = me;
    jm["odd"] = mo;
    Json act = Json::object();
    for (std::size_t i = 0; i < g.dim(); ++i) {
      if (m.rep.rho[i].is_zero()) continue;
      Json rows = Json::array();
      for (std::size_t r = 0; r < m.rep.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.rep.dim(); ++c) row.push_back(f.to_signed(m.rep.rho[i].at(r, c)));
        rows.push_back(row);
      }
      act[s.name(i)] = rows;
    }
    jm["action"] = act;
    mods[m.name] = jm;
  }
  out["modules"] = mods;
  return out;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest(const std::string& bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
  return std::string("fnv1a64:") + buf;
}

std::optional<std::string> size_warning(const LieSuperAlgebra& g, const Representation& m) {
  const double p = g.field.p();
  if (p < 7) return std::nullopt;
  double u = std::pow(p, static_cast<double>(g.even_dim())) * std::pow(2.0, static_cast<double>(g.space.odd_dim()));
  double entries = std::pow(u - 1, 3) * static_cast<double>(m.dim());
  if (entries <= 1e7) return std::nullopt;
  std::ostringstream os;
  os << "bar complex C^3 has about " << static_cast<long long>(entries) << " coordinates (dim u = "
     << static_cast<long long>(u) << "); expect long runtimes";
  return os.str();
}

Json matrix_to_json(const gflin::Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    rows.push_back(row);
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

gflin::Matrix matrix_from_json(const gflin::Field& f, const Json& j) {
  std::size_t rows = j.at("rows").get<std::size_t>(), cols = j.at("cols").get<std::size_t>();
  gflin::Matrix m(f, rows, cols);
  const Json& e = j.at("entries");
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, f.from_int(e.at(r).at(c).get<long long>()));
  return m;
}

Json validation_to_json(const FileValidation& v) {
  Json parts = Json::array();
  for (const auto& [name, rep] : v.parts) {
    Json viols = Json::array();
    for (const auto& x : rep.violations)
      viols.push_back(Json{{"axiom", x.axiom}, {"indices", x.indices}, {"detail", x.detail}});
    parts.push_back(Json{{"part", name}, {"ok", rep.ok()}, {"violations", viols}});
  }
  return Json{{"ok", v.ok()}, {"parts", parts}};
}

Json cohomology_to_json(const cohomology::CohomologyResult& r, std::size_t cochain_dim) {
  Json reps = Json::array();
  for (const auto& v : r.representatives()) reps.push_back(v);
  return Json{{"degree", r.n},
              {"kind", r.kind == cohomology::Kind::lie ? "lie" : "restricted"},
              {"dim", r.dim()},
              {"cocycles_dim", r.z().dim()},
              {"coboundaries_dim", r.b().dim()},
              {"cochain_dim", cochain_dim},
              {"representatives", reps}};
}

namespace {

Json verdict_to_json(const sixterm::Verdict& v) {
  Json w = v.witness ? Json(*v.witness) : Json(nullptr);
  return Json{{"name", v.name}, {"ok", v.ok}, {"witness", w}, {"detail", v.detail}};
}

sixterm::Verdict verdict_from_json(const Json& j) {
  sixterm::Verdict v;
  v.name = j.at("name").get<std::string>();
  v.ok = j.at("ok").get<bool>();
  if (!j.at("witness").is_null()) v.witness = j.at("witness").get<Vec>();
  v.detail = j.at("detail").get<std::string>();
  return v;
}

const char* const dim_names[6] = {"H1_star", "H1", "S_invariants", "H2_star", "H2", "S_H1"};

}  // namespace

Json sixterm_to_json(const sixterm::SixTermReport& r) {
  Json dims;
  for (std::size_t i = 0; i < 6; ++i) dims[dim_names[i]] = r.dims[i];
  Json maps;
  maps["i1"] = matrix_to_json(r.i1);
  maps["psibar"] = matrix_to_json(r.psibar);
  maps["fg"] = matrix_to_json(r.fg);
  maps["pi"] = matrix_to_json(r.pi);
  maps["phi"] = matrix_to_json(r.phi);
  Json ranks{{"i1", gflin::rank(r.i1)},
             {"psibar", gflin::rank(r.psibar)},
             {"fg", gflin::rank(r.fg)},
             {"pi", gflin::rank(r.pi)},
             {"phi", gflin::rank(r.phi)}};
  Json ex = Json::array(), comp = Json::array();
  for (const auto& v : r.exactness) ex.push_back(verdict_to_json(v));
  for (const auto& v : r.composites) comp.push_back(verdict_to_json(v));
  return Json{{"algebra", r.algebra_id}, {"module", r.module_id}, {"p", r.p},
              {"dims", dims},           {"ranks", ranks},         {"maps", maps},
              {"exactness", ex},        {"composites", comp},     {"euler_ok", r.euler_ok},
              {"module_coerced", r.module_coerced},               {"all_exact", r.all_exact()}};
}

sixterm::SixTermReport sixterm_from_json(const Json& j) {
  sixterm::SixTermReport r;
  r.algebra_id = j.at("algebra").get<std::string>();
  r.module_id = j.at("module").get<std::string>();
  r.p = j.at("p").get<unsigned>();
  for (std::size_t i = 0; i < 6; ++i) r.dims[i] = j.at("dims").at(dim_names[i]).get<std::size_t>();
  gflin::Field f(r.p);
  const Json& maps = j.at("maps");
  r.i1 = matrix_from_json(f, maps.at("i1"));
  r.psibar = matrix_from_json(f, maps.at("psibar"));
  r.fg = matrix_from_json(f, maps.at("fg"));
  r.pi = matrix_from_json(f, maps.at("pi"));
  r.phi = matrix_from_json(f, maps.at("phi"));
  for (const auto& v : j.at("exactness")) r.exactness.push_back(verdict_from_json(v));
  for (const auto& v : j.at("composites")) r.composites.push_back(verdict_from_json(v));
  r.euler_ok = j.at("euler_ok").get<bool>();
  r.module_coerced = j.at("module_coerced").get<bool>();
  return r;
}

Json make_report(const std::string& command, const std::string& input_digest, Json payload,
                 const std::map<std::string, std::size_t>& sizes, const std::vector<std::string>& warnings,
                 const std::map<std::string, double>& timings, const ReportOptions& opt) {
  Json out;
  out["schema_version"] = schema_version;
  out["tool"] = "supercoh";
  out["command"] = command;
  out["input_digest"] = input_digest;
  out["payload"] = std::move(payload);
  Json s = Json::object();
  for (const auto& [k, v] : sizes) s[k] = v;
  out["sizes"] = s;
  out["warnings"] = warnings;
  if (opt.timings) {
    Json t = Json::object();
    for (const auto& [k, v] : timings) t[k] = v;
    out["timings_ms"] = t;
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace supercoh::io
