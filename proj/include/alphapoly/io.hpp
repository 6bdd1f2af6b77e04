// Input documents (JSON), bundled example data, report serialization, and
// the command line driver.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "alphapoly/invariants.hpp"

namespace alphapoly {

// Parsed form of an input document (schema_version 1).  The root system is
// named factors, explicit positive roots, or absent (toric).  The polytope
// is inequalities or vertices.  Rationals are JSON integers or "p/q" strings.
struct InputDocument {
  int schema_version = 1;
  std::string name;
  int rank = 0;
  std::vector<RootFactor> factors;
  std::optional<std::vector<QVec>> explicit_roots;
  std::optional<std::vector<Facet>> inequalities;
  std::optional<std::vector<QVec>> vertex_list;
  std::optional<std::vector<QVec>> lattice_basis;  // column vectors
  bool fano = false;
};

InputDocument parse_input_document(const std::string& json_text);
std::string serialize_input_document(const InputDocument& doc);

// Build the validated bundle: construct the root system, change coordinates
// when a lattice basis is given (weights b -> B^
// {-1} b, normals via the transpose), convert vertex input to facets, and
// run the invariance checks.
CompactificationData compactification_from_document(const InputDocument& doc);

// Bundled example documents (also shipped under data/).
std::vector<std::string> builtin_names();
std::string builtin_document(const std::string& name);

// Projective-space datum of the given dimension (simplex polytope).
InputDocument cpn_document(int n);

// Entry point used by both the binary and the CLI tests.  Returns the
// process exit code: 0 success, 1 usage, 2 schema, 3 invariance, 4 domain.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace alphapoly
