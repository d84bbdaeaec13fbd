#include "glh/csv.hpp"

#include <charconv>
#include <sstream>

#include "glh/errors.hpp"

namespace glh {

std::string format_double(double v) {
  char buf[40];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : out_(path, std::ios::binary), path_(path), columns_(header.size()) {
  if (!out_) throw Error(ErrorCode::IoFailure, "cannot open " + path + " for writing");
  for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
  out_ << '\n';
}

void CsvWriter::sep() {
  if (in_row_ > 0) out_ << ',';
  ++in_row_;
}

CsvWriter& CsvWriter::operator<<(double v) {
  sep();
  out_ << format_double(v);
  return *this;
}

CsvWriter& CsvWriter::operator<<(long long v) {
  sep();
  out_ << v;
  return *this;
}

CsvWriter& CsvWriter::operator<<(const std::string& v) {
  if (v.find_first_of(",\n\r\"") != std::string::npos) {
    throw Error(ErrorCode::IoFailure, path_ + ": field '" + v + "' needs quoting");
  }
  sep();
  out_ << v;
  return *this;
}

void CsvWriter::end_row() {
  if (in_row_ != columns_) {
    throw Error(ErrorCode::IoFailure, path_ + ": row has " + std::to_string(in_row_) + " fields, expected " +
                                          std::to_string(columns_));
  }
  out_ << '\n';
  in_row_ = 0;
  ++rows_;
  if (!out_) throw Error(ErrorCode::IoFailure, "write failed on " + path_);
}

void CsvWriter::close() {
  out_.close();
  if (!out_) throw Error(ErrorCode::IoFailure, "close failed on " + path_);
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw Error(ErrorCode::IoFailure, "no column named " + name);
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path);
  auto split = [](const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
  };
  CsvTable t;
  std::string line;
  if (std::getline(in, line)) t.header = split(line);
  while (std::getline(in, line)) {
    if (!line.empty()) t.rows.push_back(split(line));
  }
  return t;
}

}  // namespace glh
