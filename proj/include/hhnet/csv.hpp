#ifndef HHNET_CSV_HPP
#define HHNET_CSV_HPP

#include <istream>
#include <map>
#include <string>
#include <vector>

namespace hhnet {

// one parsed CSV row with access by header name
struct CsvRow {
  long line = 0;
  std::vector<std::string> fields;
  const std::map<std::string, int> *header = nullptr;

  const std::string &get(const std::string &column) const;
  bool empty(const std::string &column) const { return get(column).empty(); }
};

// Small strict reader: comma separated, double quotes with "" escapes,
// header row required.  Rows with the wrong field count raise InputError
// carrying the line number.
class CsvReader {
 public:
  explicit CsvReader(std::istream &in, std::string source_name = "csv");

  const std::map<std::string, int> &header() const { return header_; }
  bool has_column(const std::string &name) const { return header_.count(name) > 0; }
  // false at end of input
  bool next(CsvRow &row);

 private:
  std::istream &in_;
  std::string source_;
  std::map<std::string, int> header_;
  std::size_t width_ = 0;
  long line_ = 0;

  bool read_raw(std::vector<std::string> &fields);
};

std::string csv_quote(const std::string &field);
std::string csv_join(const std::vector<std::string> &fields);

// split on a delimiter, trimming surrounding spaces; empty input -> empty list
std::vector<std::string> split_list(const std::string &s, char delim);

int parse_int(const std::string &s, const std::string &what, long line);
bool parse_flag(const std::string &s, const std::string &what, long line);

}  // namespace hhnet

#endif
