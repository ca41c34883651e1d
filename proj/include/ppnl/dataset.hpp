#pragma once

// JSONL persistence of solved, verbalized instances.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ppnl/task.hpp"

namespace ppnl {

struct DatasetRecord {
  TaskInstance instance;
  std::string task_text;
  std::string gold_plan;  // canonical tokens or "Goal not reachable"
  std::optional<std::string> gold_plan_egocentric;  // single-goal only
};

/// Solves and verbalizes an instance.
DatasetRecord make_record(const TaskInstance& instance);

std::vector<DatasetRecord> make_records(std::span<const TaskInstance> instances);

/// Raised by record_from_json / read_jsonl. line is 0 when unknown.
class DatasetError : public std::runtime_error {
 public:
  DatasetError(std::size_t line, std::string field, const std::string& what);
  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::string field_;
  std::string detail_;
};

nlohmann::ordered_json to_json(const DatasetRecord& record);

struct ReadOptions {
  /// Re-solve every instance and require the stored gold plan to be a
  /// successful optimal plan (or the unreachable label when unreachable).
  bool revalidate_gold = true;
};

/// Throws DatasetError naming the field on any type or invariant violation.
DatasetRecord record_from_json(const nlohmann::json& j, const ReadOptions& options = {});

void write_jsonl(std::ostream& out, std::span<const DatasetRecord> records);
void write_jsonl(const std::filesystem::path& path, std::span<const DatasetRecord> records);

std::vector<DatasetRecord> read_jsonl(std::istream& in, const ReadOptions& options = {});
std::vector<DatasetRecord> read_jsonl(const std::filesystem::path& path, const ReadOptions& options = {});

}  // namespace ppnl
