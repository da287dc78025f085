#pragma once

#include <string>

#include <json.hpp>

#include "hcohom/cyclic.hpp"

namespace hcohom {

using json = nlohmann::ordered_json;

/// Parses JSON text; InputError carrying line and column on malformed input.
json parse_json_text(const std::string& text, const std::string& source);
/// Reads and parses a file; InputError if unreadable or malformed.
json read_json_file(const std::string& path);

/// Scalars are "p/q" strings, integers, or {"re": ..., "im": ...}.
Scalar scalar_from_json(const json& j, const std::string& where);
json scalar_to_json(const Scalar& s);
SparseVec vector_from_json(const json& j, std::size_t dim, const std::string& where);
json vector_to_json(const SparseVec& v, std::size_t dim);
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& where);
json matrix_to_json(const Matrix& m);

/// {"field", "dim", "structure_constants", "unit"?, "labels"?}; validated.
Algebra algebra_from_json(const json& j);
json algebra_to_json(const Algebra& a);
/// A builtin generator name, inline JSON text, or a path to a JSON file.
Algebra resolve_algebra(const std::string& spec, Field field = Field::Q);
/// Comma-separated algebra specs, e.g. "matrix:2,scalars".
std::vector<Algebra> resolve_parts(const std::string& spec, Field field = Field::Q);

/// {"dim", "left", "right"}, checked against the bimodule axioms.
Bimodule bimodule_from_json(const json& j, const Algebra& a);
/// An A1-A2 bimodule: "left" has dim A1 matrices, "right" dim A2.
Bimodule bimodule_from_json(const json& j, const Algebra& left_alg, const Algebra& right_alg);
json bimodule_to_json(const Bimodule& m);
/// "dual", "regular", inline JSON text, a file path, or a JSON object.
Bimodule resolve_module(const json& spec, const Algebra& a);

/// "unit", "algebra", "idempotents", "span:<labels>", or {"basis", "in_unitization"}.
SubalgebraSpec resolve_subalgebra(const json& spec, const Algebra& a);
/// "algebra", "strict_upper", "part:<i>" (needs the direct sum), "span:<labels>", or {"basis"}.
IdealSpec resolve_ideal(const json& spec, const Algebra& a, const DirectSum* ds = nullptr);

json cohomology_json(const CohomologyResult& r, bool relative);
json comparison_flags_json(const ComparisonResult& r, std::size_t n);
json exactness_json(const ExactnessReport& r);
json ct_report_json(const CTReport& r);

}  // namespace hcohom
