#ifndef HARRCO_IO_HPP
#define HARRCO_IO_HPP

#include <stdexcept>
#include <string>

#include "harrco/algebras.hpp"
#include "harrco/complexes.hpp"
#include "harrco/deform.hpp"

#include <json.hpp>

namespace harrco {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Algebra document: { "dim", "basis", "unit", "products": [ { "lhs",
// "rhs", "result": [ { "basis", "coeff" } ] } ] }. Unspecified products
// default to zero; each entry sets c[lhs][rhs] only, so a one-sided
// entry is visible to the commutativity check.
Json algebra_to_json(const StructureAlgebra& a);
StructureAlgebra algebra_from_json(const Json& doc);

// Cochain document: { "arity", "module": "regular", "entries": [ {
// "args": [names], "value": [ { "basis", "coeff" } ] } ] }; absent
// entries are zero.
Json cochain_to_json(const Cochain& f);
Cochain cochain_from_json(const StructureAlgebra& a, const Json& doc);

// Star-product document: { "order", "terms": [...] } where the first
// term may be the literal "structure" for the algebra multiplication.
Json star_to_json(const StarTruncation& s);
StarTruncation star_from_json(const StructureAlgebra& a, const Json& doc);

Json load_json_file(const std::string& path);           // throws ParseError
void write_json_file(const std::string& path, const Json& doc);

// Resolves either a real path or the pseudo-path "builtin:<name>".
StructureAlgebra load_algebra(const std::string& path_or_builtin);

} // namespace harrco

#endif
