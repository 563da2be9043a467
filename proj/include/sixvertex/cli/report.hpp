#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sixvertex::cli {

enum class Format { text, csv, json };

// Numbers travel as decimal strings; small counters as integers.
using Value = std::variant<std::monostate, std::string, long, bool>;
using Record = std::vector<std::pair<std::string, Value>>;

struct Report {
  std::string command;
  int precision_bits = 128;
  int digits = 30;
  std::string tol;
  Record inputs;
  std::vector<Record> rows;
  Record summary;
  std::vector<std::string> notes;
};

void render(const Report& report, Format format, std::ostream& out);

// RFC-4180 field quoting.
std::string csv_field(const std::string& field);

// Long integers shortened for text output: leading and trailing digits plus the length.
std::string abbreviate_digits(const std::string& digits, std::size_t keep = 20);

}  // namespace sixvertex::cli
