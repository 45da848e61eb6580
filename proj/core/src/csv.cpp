#include "seqcpd/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace seqcpd {

namespace {

bool parse_double(const std::string& cell, double* out) {
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  while (first < last && (*first == ' ' || *first == '\t')) ++first;
  while (last > first && (*(last - 1) == ' ' || *(last - 1) == '\t' ||
                          *(last - 1) == '\r'))
    --last;
  if (first == last) return false;
  const auto res = std::from_chars(first, last, *out);
  return res.ec == std::errc{} && res.ptr == last;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

ObservationMatrix read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  ObservationMatrix out;
  std::string line;
  std::size_t lineno = 0;
  bool first_data_line = true;
  std::vector<double> row;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto cells = split(line);
    row.clear();
    bool numeric = true;
    for (const auto& cell : cells) {
      double v;
      if (!parse_double(cell, &v)) {
        numeric = false;
        break;
      }
      row.push_back(v);
    }
    if (!numeric) {
      if (first_data_line) continue;  // header line
      throw std::runtime_error(path + ": non-numeric cell at line " +
                               std::to_string(lineno));
    }
    first_data_line = false;
    if (out.rows() > 0 && row.size() != out.cols())
      throw std::runtime_error(path + ": ragged row at line " +
                               std::to_string(lineno));
    out.append_row(row);
  }
  if (out.rows() == 0) throw std::runtime_error(path + ": no data rows");
  return out;
}

void write_csv(const ObservationMatrix& x, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  char buf[64];
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      const auto res = std::to_chars(buf, buf + sizeof(buf), x(i, j));
      if (j > 0) out << ',';
      out.write(buf, res.ptr - buf);
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace seqcpd
