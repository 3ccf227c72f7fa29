#include "report.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace cli {

using ojson = nlohmann::ordered_json;

std::string RunConfig::command_line() const {
  std::string s = "colorloss " + command;
  for (const auto& [k, v] : options) {
    s += " --" + k;
    if (!v.empty()) s += " " + v;
  }
  return s;
}

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width does not match columns");
  rows.push_back(std::move(row));
}

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw UsageError("unknown format '" + text + "' (expected csv or json)");
}

std::string format_double(double x) {
  // shortest representation that round-trips
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  const auto& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

ojson cell_json(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  if (const auto* d = std::get_if<double>(&c)) return *d;
  return std::get<std::string>(c);
}

}  // namespace

void write_csv(std::ostream& out, const RunConfig& config, const Table& table) {
  out << "# colorloss " << COLORLOSS_VERSION_STRING << " " << table.kind << "\n";
  out << "# command: " << config.command_line() << "\n";
  for (const auto& [k, v] : config.options) {
    if (k == "seed") out << "# seed: " << v << "\n";
  }
  for (const auto& n : table.notes) out << "# " << n << "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << "\n";
  }
}

void write_json(std::ostream& out, const RunConfig& config, const Table& table) {
  ojson doc;
  doc["schema"] = "colorloss." + table.kind;
  doc["schema_version"] = kReportSchemaVersion;
  doc["version"] = COLORLOSS_VERSION_STRING;
  doc["command"] = config.command_line();
  ojson cfg = ojson::object();
  for (const auto& [k, v] : config.options) cfg[k] = v;
  doc["config"] = std::move(cfg);
  if (!table.notes.empty()) doc["notes"] = table.notes;
  doc["columns"] = table.columns;
  ojson rows = ojson::array();
  for (const auto& row : table.rows) {
    ojson r = ojson::object();
    for (std::size_t i = 0; i < row.size(); ++i) r[table.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << "\n";
}

std::filesystem::path Destination::resolve(const std::string& fallback) const {
  std::filesystem::path p = file.empty() ? std::filesystem::path(fallback) : std::filesystem::path(file);
  if (!dir.empty() && p.is_relative()) p = std::filesystem::path(dir) / p;
  return p;
}

namespace {

void with_stream(const Destination& dest, const std::string& fallback,
                 const std::function<void(std::ostream&)>& body) {
  if (dest.dir.empty() && dest.file.empty()) {
    body(std::cout);
    std::cout.flush();
    return;
  }
  const std::filesystem::path path = dest.resolve(fallback);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  body(f);
  if (!f) throw std::runtime_error("write to " + path.string() + " failed");
  std::cerr << "wrote " << path.string() << "\n";
}

}  // namespace

void emit(const Destination& dest, const std::string& fallback, Format format,
          const RunConfig& config, const Table& table) {
  with_stream(dest, fallback + (format == Format::Csv ? ".csv" : ".json"), [&](std::ostream& out) {
    if (format == Format::Csv) {
      write_csv(out, config, table);
    } else {
      write_json(out, config, table);
    }
  });
}

void emit_text(const Destination& dest, const std::string& fallback, const std::string& text) {
  with_stream(dest, fallback, [&](std::ostream& out) { out << text; });
}

}  // namespace cli
