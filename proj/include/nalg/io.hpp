#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "nalg/algebra.hpp"

namespace nalg {

/// "Q", "F5", "F13" as used on the command line.
FieldSpec parse_field_name(std::string_view name);

/// Algebra file: {"field", "arity", "dimension", "basis", "symmetry",
/// "products": [{"args": [..], "value": {"k": "scalar"}}]}. Products are
/// written in lexicographic order, one per orbit when symmetry is total.
nlohmann::json algebra_to_json(const NAryAlgebra& alg);
NAryAlgebra algebra_from_json(const nlohmann::json& j);
std::string emit_algebra(const NAryAlgebra& alg);
NAryAlgebra parse_algebra(std::string_view text);
NAryAlgebra read_algebra_file(const std::string& path);
void write_algebra_file(const NAryAlgebra& alg, const std::string& path);

/// Labeled combination such as "-2*a + 3/2*b1"; "0" for zero.
std::string format_element(const NAryAlgebra& alg, const Element& v);
Element parse_element(const NAryAlgebra& alg, std::string_view text);

}  // namespace nalg
