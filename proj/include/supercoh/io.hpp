#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "supercoh/cohomology.hpp"
#include "supercoh/errors.hpp"
#include "supercoh/sixterm.hpp"

namespace supercoh::io {

using Json = nlohmann::ordered_json;
using super::LieSuperAlgebra;
using super::Representation;
using super::ValidationReport;

struct Diagnostic {
  std::string message;
  std::size_t line = 0;  // 1-based, 0 when unknown
};

class ParseError : public Error {
public:
  explicit ParseError(std::vector<Diagnostic> diags);
  const std::vector<Diagnostic>& diagnostics() const { return diags_; }

private:
  std::vector<Diagnostic> diags_;
};

struct NamedModule {
  std::string name;
  Representation rep;
  bool has_pmap = false;  // the file gave a nonzero p-map for the module
};

struct AlgebraFile {
  LieSuperAlgebra g;
  std::vector<NamedModule> modules;
  bool p_pinned = false;

  // nullptr when absent
  const NamedModule* module(const std::string& name) const;
};

// One validation report per part: "algebra", "pmap", "module:<name>".
struct FileValidation {
  std::vector<std::pair<std::string, ValidationReport>> parts;
  bool ok() const;
};

class ValidationError : public Error {
public:
  explicit ValidationError(FileValidation v);
  const FileValidation& validation() const { return v_; }

private:
  FileValidation v_;
};

// Structure only: JSON syntax, names, shapes and p. Throws ParseError.
// p_override sets p for files that omit it; it is rejected if the file pins p.
AlgebraFile read_algebra(const std::string& text, std::optional<unsigned> p_override = std::nullopt);
FileValidation validate_file(const AlgebraFile& file);
// read_algebra followed by validate_file; throws ValidationError on axiom failures.
AlgebraFile parse_algebra(const std::string& text, std::optional<unsigned> p_override = std::nullopt);

// Inverse of read_algebra (modules are written without p-maps).
Json algebra_to_json(const LieSuperAlgebra& g, const std::vector<NamedModule>& modules);

std::uint64_t fnv1a(const std::string& bytes);
std::string digest(const std::string& bytes);

// Warning text when p >= 7 and (dim u - 1)^3 * dim M exceeds 1e7.
std::optional<std::string> size_warning(const LieSuperAlgebra& g, const Representation& m);

Json matrix_to_json(const gflin::Matrix& m);
gflin::Matrix matrix_from_json(const gflin::Field& f, const Json& j);

Json validation_to_json(const FileValidation& v);
Json cohomology_to_json(const cohomology::CohomologyResult& r, std::size_t cochain_dim);
Json sixterm_to_json(const sixterm::SixTermReport& r);
sixterm::SixTermReport sixterm_from_json(const Json& j);

inline constexpr int schema_version = 1;

struct ReportOptions {
  bool timings = false;
};

// {schema_version, command, input_digest, payload, sizes, warnings[, timings]}
Json make_report(const std::string& command, const std::string& input_digest, Json payload,
                 const std::map<std::string, std::size_t>& sizes, const std::vector<std::string>& warnings,
                 const std::map<std::string, double>& timings, const ReportOptions& opt);

std::string dump(const Json& j);

}  // namespace supercoh::io
