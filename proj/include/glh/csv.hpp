#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace glh {

/// Row-oriented CSV writer. Numbers use the shortest decimal form that reads
/// back to the same double. Text fields may not contain
/// separators or quotes. Throws IoFailure.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);

  CsvWriter& operator<<(double v);
  CsvWriter& operator<<(long long v);
  CsvWriter& operator<<(int v) { return *this << static_cast<long long>(v); }
  CsvWriter& operator<<(std::size_t v) { return *this << static_cast<long long>(v); }
  CsvWriter& operator<<(const std::string& v);
  CsvWriter& operator<<(const char* v) { return *this << std::string(v); }
  void end_row();
  std::size_t rows() const { return rows_; }
  void close();

 private:
  void sep();
  std::ofstream out_;
  std::string path_;
  std::size_t columns_ = 0;
  std::size_t in_row_ = 0;
  std::size_t rows_ = 0;
};

std::string format_double(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::size_t column(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);

}  // namespace glh
