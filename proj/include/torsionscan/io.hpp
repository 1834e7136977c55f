#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "torsionscan/invariants.hpp"
#include "torsionscan/polytope.hpp"

namespace torsionscan {

// How to read a square matrix, where row/column counts cannot decide
// whether the points sit in the rows or in the columns.
enum class SquareOrientation { columns_are_points, rows_are_points };

// One block of the vertex-matrix format: a header line "rows cols" with an
// optional trailing comment, followed by rows*cols whitespace-separated
// integers. The smaller header number is the dimension; a wider-than-tall
// matrix keeps one point per column, a taller-than-wide one per row.
struct VertexMatrixRecord {
    std::size_t index = 0; // position in the stream, starting at 0
    long long line = 1;    // 1-based line number of the header
    std::string comment;
    std::size_t dim = 0;
    std::vector<IntVector> points;
};

// Strict single-record parse of a whole string: trailing data, truncation,
// non-integer tokens and entries longer than 15 digits all raise
// parse_error with the offending position.
VertexMatrixRecord parse_vertex_matrix(
    const std::string& text,
    SquareOrientation square = SquareOrientation::columns_are_points);

struct ParsedRecord {
    VertexMatrixRecord matrix; // header data; points empty if parsing failed
    std::string error;         // nonempty when the record is unusable
    std::optional<LatticePolytope> polytope;
    std::vector<std::string> warnings; // dropped non-vertex points etc.
};

// Reads records until end of stream. A record whose numbers cannot be read
// poisons the token boundaries, so it becomes the final entry (with `error`
// set); a record that reads fine but fails to build a polytope only fails
// locally and the scan continues with the next one.
std::vector<ParsedRecord> read_polytopes(
    std::istream& in,
    SquareOrientation square = SquareOrientation::columns_are_points);

// Inverse of the reader: "dim count [comment]" header, one row per
// coordinate, one column per point.
std::string emit_vertex_matrix(const LatticePolytope& polytope,
                               const std::string& comment = "");

// JSON value for an integer: a plain number when it fits in 64 bits, a
// decimal string otherwise.
nlohmann::ordered_json json_integer(const Int& value);

// JSON array of the invariant factors of a finite group ([] for trivial).
nlohmann::ordered_json group_invariants_json(const FiniteAbelianGroup& group);

// One-line JSON object with every field of the report, fixed key order.
std::string report_json(const TorsionReport& report);

// "|pi1| | P_d V_d | P_d* V_d* | h11 h21 | chi" on a single line,
// e.g. "2 | 41 16 | 9 8 | 4 36 | -64".
std::string report_table_line(const TorsionReport& report);

} // namespace torsionscan
