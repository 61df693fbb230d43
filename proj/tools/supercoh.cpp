#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "supercoh/catalog.hpp"
#include "supercoh/io.hpp"
#include "supercoh/selftest.hpp"
#include "supercoh/sixterm.hpp"

namespace {

using namespace supercoh;
using io::Json;

enum Exit { ok = 0, parse_failure = 2, validation_failure = 3, check_failure = 4, internal_failure = 5 };

struct Global {
  std::string json_out;
  std::optional<unsigned> p_override;
  std::uint64_t seed = 1;
  bool timings = false;
  std::ostream* json_stdout = nullptr;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io::ParseError({{"cannot read " + path, 0}});
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Global& g, const Json& report) {
  if (g.json_out.empty()) return;
  if (g.json_out == "-") {
    *g.json_stdout << io::dump(report);
    return;
  }
  std::ofstream out(g.json_out, std::ios::binary);
  if (!out) throw Error("cannot write " + g.json_out);
  out << io::dump(report);
}

void print_validation(const io::FileValidation& v) {
  for (const auto& [part, rep] : v.parts) {
    std::cout << part << ": " << (rep.ok() ? "ok" : "FAILED") << "\n";
    for (const auto& x : rep.violations) {
      std::cout << "  " << x.axiom << " at (";
      for (std::size_t i = 0; i < x.indices.size(); ++i) std::cout << (i ? "," : "") << x.indices[i];
      std::cout << ")";
      if (!x.detail.empty()) std::cout << ": " << x.detail;
      std::cout << "\n";
    }
  }
}

const io::NamedModule& pick_module(const io::AlgebraFile& file, const std::string& name) {
  if (name.empty()) {
    if (file.modules.size() == 1) return file.modules.front();
    throw io::ParseError({{"--module is required when the file defines " + std::to_string(file.modules.size()) +
                               " modules",
                           0}});
  }
  const auto* m = file.module(name);
  if (!m) throw io::ParseError({{"no module named \"" + name + "\"", 0}});
  return *m;
}

std::string dims_text(const sixterm::SixTermReport& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < 6; ++i) s += (i ? "," : "") + std::to_string(r.dims[i]);
  return s + ")";
}

void print_sixterm(const sixterm::SixTermReport& r) {
  std::cout << "dims (H1*, H1, S(g0,M0^g), H2*, H2, S(g0,H1)) = " << dims_text(r) << "\n";
  std::cout << "ranks i1=" << gflin::rank(r.i1) << " psibar=" << gflin::rank(r.psibar) << " fg=" << gflin::rank(r.fg)
            << " pi=" << gflin::rank(r.pi) << " phi=" << gflin::rank(r.phi) << "\n";
  for (const auto* list : {&r.exactness, &r.composites})
    for (const auto& v : *list) {
      std::cout << "  " << v.name << ": " << (v.ok ? "true" : "false");
      if (!v.ok && !v.detail.empty()) std::cout << " (" << v.detail << ")";
      std::cout << "\n";
    }
  std::cout << "  alternating_count: " << (r.euler_ok ? "true" : "false") << "\n";
}

std::vector<std::string> sixterm_warnings(const io::NamedModule& m, const super::LieSuperAlgebra& g) {
  std::vector<std::string> w;
  if (m.has_pmap)
    w.push_back("module \"" + m.name + "\" has a p-map; it is treated as a strongly abelian coefficient (p-map ignored)");
  if (auto s = io::size_warning(g, m.rep)) w.push_back(*s);
  return w;
}

void print_warnings(const std::vector<std::string>& w) {
  for (const auto& s : w) std::cerr << "warning: " << s << "\n";
}

int cmd_validate(const Global& gl, const std::string& path) {
  std::string text = read_file(path);
  io::AlgebraFile file = io::read_algebra(text, gl.p_override);
  io::FileValidation v = io::validate_file(file);
  print_validation(v);
  emit(gl, io::make_report("validate", io::digest(text), io::validation_to_json(v), {}, {}, {}, {gl.timings}));
  return v.ok() ? ok : validation_failure;
}

int cmd_cohomology(const Global& gl, const std::string& path, const std::string& module, unsigned degree,
                   const std::string& kind) {
  std::string text = read_file(path);
  io::AlgebraFile file = io::parse_algebra(text, gl.p_override);
  const auto& m = pick_module(file, module);
  if (auto s = io::size_warning(file.g, m.rep); s && kind == "restricted") print_warnings({*s});
  Json payload;
  std::map<std::string, std::size_t> sizes;
  std::map<std::string, double> timings;
  auto start = std::chrono::steady_clock::now();
  if (kind == "lie") {
    cohomology::LieComplex c(file.g, m.rep);
    auto r = cohomology::lie_cohomology(c, degree);
    payload = io::cohomology_to_json(r, c.dim(degree));
    sizes["lie_C" + std::to_string(degree)] = c.dim(degree);
    std::cout << "dim H^" << degree << "(g, " << m.name << ") = " << r.dim() << "\n";
  } else {
    cohomology::BarComplex c(file.g, m.rep);
    auto r = cohomology::restricted_cohomology(c, degree);
    payload = io::cohomology_to_json(r, c.dim(degree));
    sizes["bar_C" + std::to_string(degree)] = c.dim(degree);
    sizes["u_dim"] = c.algebra().dim();
    std::cout << "dim H^" << degree << "_*(g, " << m.name << ") = " << r.dim() << "\n";
  }
  timings["cohomology"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  payload["module"] = m.name;
  payload["p"] = file.g.field.p();
  emit(gl, io::make_report("cohomology", io::digest(text), payload, sizes, {}, timings, {gl.timings}));
  return ok;
}

int cmd_sixterm(const Global& gl, const std::string& path, const std::string& module) {
  std::string text = read_file(path);
  io::AlgebraFile file = io::parse_algebra(text, gl.p_override);
  const auto& m = pick_module(file, module);
  auto warnings = sixterm_warnings(m, file.g);
  print_warnings(warnings);
  auto r = sixterm::build_six_term(file.g, m.rep, std::filesystem::path(path).stem().string(), m.name);
  print_sixterm(r);
  emit(gl, io::make_report("sixterm", io::digest(text), io::sixterm_to_json(r), r.sizes, warnings, r.timings,
                           {gl.timings}));
  return r.all_exact() ? ok : check_failure;
}

std::string entry_text(const catalog::Entry& e) {
  return io::dump(io::algebra_to_json(e.g, {{e.module_name, e.m, false}}));
}

int cmd_examples(const Global& gl, const std::string& action, const std::string& id) {
  auto all = catalog::entries();
  if (action == "list") {
    Json list = Json::array();
    for (const auto& e : all) {
      std::cout << e.id << "  " << e.description << "\n";
      list.push_back(Json{{"id", e.id}, {"description", e.description}, {"module", e.module_name}});
    }
    emit(gl, io::make_report("examples list", io::digest(""), list, {}, {}, {}, {gl.timings}));
    return ok;
  }
  if (action == "show") {
    const auto* e = catalog::find(all, id);
    if (!e) throw io::ParseError({{"unknown example \"" + id + "\"", 0}});
    std::string text = entry_text(*e);
    std::cout << text;
    emit(gl, io::make_report("examples show", io::digest(text), io::algebra_to_json(e->g, {{e->module_name, e->m, false}}),
                             {}, {}, {}, {gl.timings}));
    return ok;
  }
  Json runs = Json::array();
  std::map<std::string, std::size_t> sizes;
  std::map<std::string, double> timings;
  std::string all_text;
  bool pass = true;
  for (const auto& e : all) {
    all_text += entry_text(e);
    auto r = sixterm::build_six_term(e.g, e.m, e.id, e.module_name);
    bool exact = r.all_exact();
    pass = pass && exact;
    std::cout << (exact ? "[exact] " : "[NOT EXACT] ") << e.id << " p=" << r.p << " dims " << dims_text(r) << "\n";
    for (const auto& [k, v] : r.sizes) sizes[e.id + "." + k] = v;
    for (const auto& [k, v] : r.timings) timings[e.id + "." + k] = v;
    runs.push_back(io::sixterm_to_json(r));
  }
  std::cout << (pass ? "all catalog pairs exact" : "exactness failures present") << "\n";
  emit(gl, io::make_report("examples run-all", io::digest(all_text), Json{{"all_exact", pass}, {"runs", runs}}, sizes,
                           {}, timings, {gl.timings}));
  return pass ? ok : check_failure;
}

int cmd_selftest(const Global& gl) {
  bool pass = true;
  Json suites = Json::array();
  for (const auto& s : selftest::run_all(gl.seed)) {
    pass = pass && s.ok;
    std::cout << (s.ok ? "[ok] " : "[FAILED] ") << s.name << " (" << s.checks << " checks)\n";
    for (const auto& f : s.failures) std::cout << "  " << f << "\n";
    suites.push_back(Json{{"name", s.name}, {"ok", s.ok}, {"checks", s.checks}, {"failures", s.failures}});
  }
  emit(gl, io::make_report("selftest", io::digest(std::to_string(gl.seed)), Json{{"seed", gl.seed}, {"suites", suites}},
                           {}, {}, {}, {gl.timings}));
  return pass ? ok : check_failure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supercoh: cohomology of restricted Lie superalgebras over GF(p)"};
  app.require_subcommand(1);
  app.fallthrough();
  Global gl;
  unsigned p_override = 0;
  app.add_option("--json", gl.json_out, "Write the JSON report to this path (- for stdout)");
  auto* p_opt = app.add_option("--p-override", p_override, "Prime for files that do not pin p");
  app.add_option("--seed", gl.seed, "Seed for the fuzzed suites");
  app.add_flag("--timings", gl.timings, "Include timings in the report");

  std::string file, module, kind = "lie", action, example_id;
  unsigned degree = 1;

  auto* validate = app.add_subcommand("validate", "Check the axioms of an algebra file");
  validate->add_option("file", file)->required();

  auto* coh = app.add_subcommand("cohomology", "Ordinary or restricted cohomology in degree 0, 1 or 2");
  coh->add_option("file", file)->required();
  coh->add_option("--module", module);
  coh->add_option("--degree", degree)->check(CLI::IsMember({0U, 1U, 2U}));
  coh->add_option("--kind", kind)->check(CLI::IsMember({"lie", "restricted"}));

  auto* six = app.add_subcommand("sixterm", "Build and check the six-term exact sequence");
  six->add_option("file", file)->required();
  six->add_option("--module", module);

  auto* ex = app.add_subcommand("examples", "Built-in catalog");
  ex->add_option("action", action)->required()->check(CLI::IsMember({"list", "show", "run-all"}));
  ex->add_option("id", example_id);

  auto* self = app.add_subcommand("selftest", "Run the invariant suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return parse_failure;
  }
  if (p_opt->count()) gl.p_override = p_override;

  // with --json - the report owns stdout and the text output moves to stderr
  std::ostream json_stdout(std::cout.rdbuf());
  gl.json_stdout = &json_stdout;
  struct Restore {
    std::streambuf* buf;
    ~Restore() { std::cout.rdbuf(buf); }
  } restore{std::cout.rdbuf()};
  if (gl.json_out == "-") std::cout.rdbuf(std::cerr.rdbuf());

  try {
    if (validate->parsed()) return cmd_validate(gl, file);
    if (coh->parsed()) return cmd_cohomology(gl, file, module, degree, kind);
    if (six->parsed()) return cmd_sixterm(gl, file, module);
    if (ex->parsed()) {
      if (action == "show" && example_id.empty()) throw io::ParseError({{"examples show needs an id", 0}});
      return cmd_examples(gl, action, example_id);
    }
    if (self->parsed()) return cmd_selftest(gl);
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return parse_failure;
  } catch (const io::ValidationError& e) {
    std::cerr << "validation error\n";
    print_validation(e.validation());
    return validation_failure;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal_failure;
  }
  return internal_failure;
}
