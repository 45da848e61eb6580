#ifndef SEQCPD_CSV_HPP
#define SEQCPD_CSV_HPP

#include <string>

#include "seqcpd/types.hpp"

namespace seqcpd {

/// Reads a numeric CSV (optional header line) into a matrix.  Ragged rows
/// and non-numeric cells raise std::runtime_error naming the line.
ObservationMatrix read_csv(const std::string& path);

/// Writes a matrix as CSV with shortest round-trip number formatting, so
/// write-then-read is bit-identical.
void write_csv(const ObservationMatrix& x, const std::string& path);

}  // namespace seqcpd

#endif  // SEQCPD_CSV_HPP
