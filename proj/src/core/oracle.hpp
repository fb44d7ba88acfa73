#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clausify.hpp"
#include "interp.hpp"

namespace mace4 {

// Exhaustive model enumeration, independent of the search engine. Used to
// validate the engine on small signatures.

// Number of total interpretations of `sig` over n elements (as a double; it
// overflows integers quickly).
double interpretation_space(const Signature& sig, int n);

struct OracleResult {
  bool refused = false;  // space above the bound
  std::uint64_t count = 0;
  std::vector<Interpretation> models;  // filled when requested
};

// Every interpretation of `sig` satisfying all clauses, in lexicographic
// order of the concatenated tables.
OracleResult enumerate_models(const Signature& sig, int n, const std::vector<Clause>& clauses,
                              bool keep_models = true, double bound = 1e8);

// Explicit ground encoding: every instance of every clause, the distinctness
// clauses of the domain elements, and one positive clause per function cell
// listing its possible values.
struct GroundEncoding {
  std::size_t instances = 0;
  std::size_t distinctness = 0;
  std::size_t cell_clauses = 0;
  std::vector<Clause> clauses;
  std::string text;
};
GroundEncoding emit_ground_encoding(const std::vector<Clause>& clauses, const Signature& sig,
                                    int n);

// Brute-force satisfiability of a ground encoding: searches assignments of
// every cell to a domain element. Empty if the space exceeds `bound`.
std::optional<bool> ground_encoding_satisfiable(const GroundEncoding& enc, const Signature& sig, int n,
                                 double bound = 1e7);

}  // namespace mace4
