#include "sixvertex/cli/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace sixvertex::cli {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const Value& v) {
  if (std::holds_alternative<std::string>(v)) return std::get<std::string>(v);
  if (std::holds_alternative<long>(v)) return std::get<long>(v);
  if (std::holds_alternative<bool>(v)) return std::get<bool>(v);
  return nullptr;
}

std::string to_text(const Value& v) {
  if (std::holds_alternative<std::string>(v)) return std::get<std::string>(v);
  if (std::holds_alternative<long>(v)) return std::to_string(std::get<long>(v));
  if (std::holds_alternative<bool>(v)) return std::get<bool>(v) ? "true" : "false";
  return "";
}

Json to_json(const Record& r) {
  Json j = Json::object();
  for (const auto& [k, v] : r) j[k] = to_json(v);
  return j;
}

void render_json(const Report& report, std::ostream& out) {
  Json j;
  j["command"] = report.command;
  j["precision_bits"] = report.precision_bits;
  j["digits"] = report.digits;
  j["tol"] = report.tol;
  j["inputs"] = to_json(report.inputs);
  j["results"] = Json::array();
  for (const Record& r : report.rows) j["results"].push_back(to_json(r));
  if (!report.summary.empty()) j["summary"] = to_json(report.summary);
  if (!report.notes.empty()) j["notes"] = report.notes;
  out << j.dump(2) << '\n';
}

// Integers in text tables are abbreviated; everything else passes through.
std::string text_cell(const std::string& key, const Value& v) {
  const std::string s = to_text(v);
  if (key.find("numerator") == std::string::npos && key.find("denominator") == std::string::npos &&
      key.find('Z') == std::string::npos) {
    return s;
  }
  if (key.rfind("ln", 0) == 0) return s;
  const std::size_t slash = s.find('/');
  if (slash == std::string::npos) return abbreviate_digits(s);
  return abbreviate_digits(s.substr(0, slash)) + "/" + abbreviate_digits(s.substr(slash + 1));
}

void render_text(const Report& report, std::ostream& out) {
  out << "# " << report.command << "  precision_bits=" << report.precision_bits << " digits=" << report.digits
      << " tol=" << report.tol << '\n';
  for (const auto& [k, v] : report.inputs) out << "# " << k << " = " << to_text(v) << '\n';
  if (report.rows.size() == 1) {
    std::size_t width = 0;
    for (const auto& kv : report.rows.front()) width = std::max(width, kv.first.size());
    for (const auto& [k, v] : report.rows.front()) {
      out << k << std::string(width - k.size(), ' ') << " = " << text_cell(k, v) << '\n';
    }
  } else if (!report.rows.empty()) {
    const Record& head = report.rows.front();
    std::vector<std::size_t> widths;
    for (const auto& kv : head) widths.push_back(kv.first.size());
    for (const Record& r : report.rows) {
      for (std::size_t i = 0; i < r.size() && i < widths.size(); ++i) {
        widths[i] = std::max(widths[i], text_cell(r[i].first, r[i].second).size());
      }
    }
    for (std::size_t i = 0; i < head.size(); ++i) {
      out << head[i].first << std::string(widths[i] - head[i].first.size() + (i + 1 < head.size() ? 2 : 0), ' ');
    }
    out << '\n';
    for (const Record& r : report.rows) {
      for (std::size_t i = 0; i < r.size() && i < widths.size(); ++i) {
        const std::string cell = text_cell(r[i].first, r[i].second);
        out << cell << std::string(widths[i] - cell.size() + (i + 1 < r.size() ? 2 : 0), ' ');
      }
      out << '\n';
    }
  }
  for (const auto& [k, v] : report.summary) out << "# " << k << " = " << to_text(v) << '\n';
  for (const std::string& n : report.notes) out << "# note: " << n << '\n';
}

void render_csv(const Report& report, std::ostream& out) {
  if (report.rows.empty()) return;
  std::vector<std::string> header{"command", "precision_bits", "digits", "tol"};
  for (const auto& kv : report.rows.front()) header.push_back(kv.first);
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << csv_field(header[i]);
  out << "\r\n";
  for (const Record& r : report.rows) {
    out << csv_field(report.command) << ',' << report.precision_bits << ',' << report.digits << ','
        << csv_field(report.tol);
    for (const auto& kv : r) out << ',' << csv_field(to_text(kv.second));
    out << "\r\n";
  }
}

}  // namespace

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string abbreviate_digits(const std::string& digits, std::size_t keep) {
  const std::size_t sign = (!digits.empty() && digits[0] == '-') ? 1 : 0;
  const std::size_t n = digits.size() - sign;
  if (n <= 3 * keep) return digits;
  return digits.substr(0, sign + keep) + "..." + digits.substr(digits.size() - keep) + " (" + std::to_string(n) +
         " digits)";
}

void render(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::json:
      render_json(report, out);
      break;
    case Format::csv:
      render_csv(report, out);
      break;
    case Format::text:
      render_text(report, out);
      break;
  }
}

}  // namespace sixvertex::cli
