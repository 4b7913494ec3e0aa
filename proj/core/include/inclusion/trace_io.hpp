#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "inclusion/types.hpp"

namespace inclusion {

// Trace CSV schema. Values are rendered with 17 significant digits so a
// float64 round-trips exactly; optional fields render as empty cells.
inline constexpr const char* kTraceCsvHeader =
    "k,cert_residual,natural_residual,potential,descent_slack,"
    "distance_to_solution";

void write_trace_csv(std::ostream& out, std::span<const IterateRecord> records);

// Atomic file write: the content lands under the final name completely or
// not at all (temp file + rename).
void write_file_atomic(const std::string& path, const std::string& content);

std::string trace_csv_string(std::span<const IterateRecord> records);

}  // namespace inclusion
