#include "inclusion/trace_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "inclusion/errors.hpp"

namespace inclusion {

namespace {

// 17 significant digits round-trips an IEEE double exactly.
std::string render(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void write_trace_csv(std::ostream& out, std::span<const IterateRecord> records) {
  out << kTraceCsvHeader << "\n";
  for (const auto& r : records) {
    out << r.k << ',' << render(r.cert_residual) << ','
        << render(r.natural_residual) << ',' << render(r.potential) << ',';
    if (r.descent_slack) out << render(*r.descent_slack);
    out << ',';
    if (r.distance_to_solution) out << render(*r.distance_to_solution);
    out << '\n';
  }
}

std::string trace_csv_string(std::span<const IterateRecord> records) {
  std::ostringstream out;
  write_trace_csv(out, records);
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("write_file_atomic: cannot open " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error("write_file_atomic: write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error("write_file_atomic: rename failed: " + ec.message());
  }
}

}  // namespace inclusion
