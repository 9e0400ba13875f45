#pragma once

#include <string>

#include "comtrack/types.hpp"

namespace comtrack {

// Edge-series CSV format:
//   #nodes=<n> intervals=<T>
//   t,i,j,w        one row per nonzero weight, sorted by (t, i, j)
// Absent pairs are weight 0. UTF-8, LF line endings.

/// Parse an edge-series CSV file. Malformed lines raise ParseError with the
/// line number; negative weights raise ValidationError. If the file has no
/// header, the node universe is the union of endpoints seen.
SnapshotSeries load_edge_series(const std::string& path);

/// Write a series in the edge-series CSV format, bit-exact and deterministic
/// (rows sorted by t, then i, then j; shortest round-trip float form).
void write_edge_series(const SnapshotSeries& series, const std::string& path);

/// Replace every weight w by ln(1 + w); zero stays zero.
SnapshotSeries log_transform_weights(const SnapshotSeries& series);

/// Shortest round-trip decimal form of a double (CSV cell form).
std::string format_double(double x);

}  // namespace comtrack
