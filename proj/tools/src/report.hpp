#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cli {

/// Bad flags or inputs: exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kReportSchemaVersion = 1;

using Cell = std::variant<std::int64_t, double, std::string>;

/// Resolved options of one invocation, in a fixed order. Echoed into every
/// output so that re-running the echoed command reproduces the file.
struct RunConfig {
  std::string command;  // "coeffs", "mc pc", ...
  std::vector<std::pair<std::string, std::string>> options;

  void set(std::string key, std::string value) { options.emplace_back(std::move(key), std::move(value)); }
  std::string command_line() const;
};

struct Table {
  std::string kind;  // schema becomes "colorloss.<kind>"
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;  // extra header comments / JSON "notes"

  void add(std::vector<Cell> row);
};

enum class Format { Csv, Json };
Format parse_format(const std::string& text);

void write_csv(std::ostream& out, const RunConfig& config, const Table& table);
void write_json(std::ostream& out, const RunConfig& config, const Table& table);

/// Where output goes: stdout when both are empty; `file` relative to `dir`
/// otherwise, with `fallback` as the file name when only a directory is set.
struct Destination {
  std::string dir;
  std::string file;

  std::filesystem::path resolve(const std::string& fallback) const;
};

void emit(const Destination& dest, const std::string& fallback, Format format,
          const RunConfig& config, const Table& table);

/// Writes raw text (JSON documents, JSON lines) to the destination.
void emit_text(const Destination& dest, const std::string& fallback, const std::string& text);

std::string format_double(double x);

}  // namespace cli
