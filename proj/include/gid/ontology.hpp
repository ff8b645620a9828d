#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace gid {

/// One reproducibility-obstacle attribute of the survey schema. Questions are
/// phrased so that a negative answer is good for reproducibility; recording
/// an attribute for a paper asserts the obstacle was observed, absence
/// asserts nothing (open-world reading).
struct AttributeDef {
  std::string id;        // D1..D11, S1..S19, R1..R6
  std::string category;  // e.g. "data set/availability"
  std::string question;
};

/// The fixed 36-attribute survey schema: 11 data-set, 19 software, 6 result
/// attributes, in block order with ascending numbers.
const std::vector<AttributeDef>& builtin_schema();

/// nullptr when the id is not part of the schema.
const AttributeDef* find_attribute(const std::string& id);

struct ReproRecord {
  std::string label;                   // surveyed paper
  std::vector<std::string> attributes; // observed obstacle ids
};

/// Ids of `record` that do not exist in the schema; empty means valid.
std::vector<std::string> validate_record(const ReproRecord& record);

/// Objects x attributes boolean incidence table.
struct FormalContext {
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  std::vector<std::vector<bool>> incidence;  // [object][attribute]
};

/// Context over the full schema attribute list, objects in record order.
FormalContext make_context(const std::vector<ReproRecord>& records);

/// Burmeister rendering: "B", blank line, object count, attribute count,
/// blank line, object names, attribute names, then one 'X'/'.' row per
/// object, every line newline-terminated. Names must not contain newlines.
std::string export_cxt(const FormalContext& context);

/// Strict inverse of export_cxt (round-trip identity).
FormalContext parse_cxt(const std::string& text);

/// Record file: one `label: id, id, ...` line per paper; blank lines and
/// lines starting with '#' are skipped. An empty id list is a valid record.
std::vector<ReproRecord> read_records(const std::filesystem::path& path);

}  // namespace gid
