#include "hhnet/csv.hpp"

#include <cctype>

#include "hhnet/errors.hpp"

namespace hhnet {

const std::string &CsvRow::get(const std::string &column) const {
  auto it = header->find(column);
  if (it == header->end())
    throw InputError("missing column: " + column);
  return fields[it->second];
}

CsvReader::CsvReader(std::istream &in, std::string source_name)
    : in_(in), source_(std::move(source_name)) {
  std::vector<std::string> names;
  if (!read_raw(names))
    throw InputError(source_ + ": empty file, expected a header row");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (header_.count(names[i]))
      throw InputError(source_ + ": duplicate column " + names[i]);
    header_[names[i]] = int(i);
  }
  width_ = names.size();
}

bool CsvReader::next(CsvRow &row) {
  std::vector<std::string> fields;
  for (;;) {
    long at = line_ + 1;
    if (!read_raw(fields)) return false;
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    if (fields.size() != width_)
      throw InputError(source_ + " line " + std::to_string(at) + ": expected " +
                       std::to_string(width_) + " fields, got " +
                       std::to_string(fields.size()));
    row.line = at;
    row.fields = std::move(fields);
    row.header = &header_;
    return true;
  }
}

bool CsvReader::read_raw(std::vector<std::string> &fields) {
  fields.clear();
  std::string line;
  if (!std::getline(in_, line)) return false;
  ++line_;
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  if (quoted)
    throw InputError(source_ + " line " + std::to_string(line_) +
                     ": unterminated quote");
  fields.push_back(std::move(field));
  return true;
}

std::string csv_quote(const std::string &field) {
  bool needs = false;
  for (char c : field)
    if (c == ',' || c == '"' || c == '\n') needs = true;
  if (!needs) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string csv_join(const std::vector<std::string> &fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_quote(fields[i]);
  }
  return out;
}

std::vector<std::string> split_list(const std::string &s, char delim) {
  std::vector<std::string> out;
  std::string cur;
  auto push = [&out](std::string item) {
    std::size_t b = item.find_first_not_of(" \t");
    if (b == std::string::npos) {
      out.push_back("");
      return;
    }
    std::size_t e = item.find_last_not_of(" \t");
    out.push_back(item.substr(b, e - b + 1));
  };
  bool any = false;
  for (char c : s) {
    if (c == delim) {
      push(cur);
      cur.clear();
      any = true;
    } else {
      cur += c;
    }
  }
  if (any || !cur.empty()) push(cur);
  return out;
}

int parse_int(const std::string &s, const std::string &what, long line) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception &) {
    throw InputError("line " + std::to_string(line) + ": bad integer for " +
                     what + ": '" + s + "'");
  }
}

bool parse_flag(const std::string &s, const std::string &what, long line) {
  if (s == "1" || s == "true") return true;
  if (s == "0" || s == "false") return false;
  throw InputError("line " + std::to_string(line) + ": bad flag for " + what +
                   ": '" + s + "'");
}

}  // namespace hhnet
