#pragma once

#include <string>
#include <vector>

#include "uebforge/matrix.hpp"
#include "uebforge/obstructions.hpp"
#include "uebforge/qls.hpp"
#include "uebforge/ueb.hpp"

namespace uebforge {

// Canonical JSON text formats. Serialization is deterministic (sorted keys,
// two-space indentation, shortest round-trip decimals, trailing newline), so
// identical objects always produce identical bytes, and
// parse(serialize(x)) == x holds bit-exactly.
//
//   matrix  {"entries": [[[re, im] x n] x n], "n": n}         (row-major)
//   qls     {"n": n, "rows": [<matrix> x n]}
//   latin   {"grid": [[int x n] x n], "n": n}
//   ueb     {"elements": [<matrix> x n^2], "n": n, "provenance": tag}
//           (grid element (i, j) at flat index i*n + j)
//   report  {"eps": e, "test": t, "theta": th, "verdict": v, "witness": w}
//
// Parsers reject malformed JSON, shape mismatches and non-finite numbers
// with std::invalid_argument; they return raw pieces so callers decide when
// to run the validators.

std::string serialize_matrix(const Matrix& m);
std::string serialize_qls(const QuantumLatinSquare& q);
std::string serialize_latin(const ClassicalLatinSquare& l);
std::string serialize_ueb(const UnitaryErrorBasis& b);
std::string serialize_report(const ObstructionReport& r);

Matrix parse_matrix(const std::string& text);
std::vector<Matrix> parse_qls_rows(const std::string& text);
std::vector<std::vector<int>> parse_latin_grid(const std::string& text);

struct RawUeb {
  std::size_t n;
  Provenance provenance;
  std::vector<Matrix> elements;
};
RawUeb parse_ueb_raw(const std::string& text);

}  // namespace uebforge
