#include "gid/ontology.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gid {

namespace {

constexpr const char* kAvailability = "data set/availability";
constexpr const char* kTransformation = "data set/transformation";
constexpr const char* kEnvironment = "software/environment";
constexpr const char* kUsage = "software/usage";
constexpr const char* kSourceCode = "software/source-code";
constexpr const char* kModel = "result/model";
constexpr const char* kPredictions = "result/predictions";

std::vector<AttributeDef> build_schema() {
  return {
      {"D1", kAvailability, "Is the data set format not documented?"},
      {"D2", kAvailability, "Was the data set version not set explicitly?"},
      {"D3", kAvailability, "Was the data set not directly accessible?"},
      {"D4", kAvailability, "Did the access not work at time of study?"},
      {"D5", kAvailability, "Is the data set privacy restricted?"},
      {"D6", kAvailability,
       "Does the data set require a restrictive license agreement for "
       "accessing?"},
      {"D7", kAvailability, "Is the data set available on request only?"},
      {"D8", kTransformation, "Are manual steps necessary for pre-processing?"},
      {"D9", kTransformation,
       "Is there only an incomplete description for pre-processing steps?"},
      {"D10", kTransformation,
       "Are the train, validation and test splits unclear?"},
      {"D11", kTransformation, "Is the number of samples not documented?"},
      {"S1", kEnvironment,
       "Is the exact version of dependencies not documented?"},
      {"S2", kEnvironment,
       "Is the specified version of dependencies not available anymore?"},
      {"S3", kEnvironment, "Is necessary hardware unavailable?"},
      {"S4", kEnvironment,
       "Are any seeds for random number generators not set?"},
      {"S5", kEnvironment, "Are important variables unclear?"},
      {"S6", kUsage, "Is the documentation not up-to-date?"},
      {"S7", kUsage, "Are necessary arguments not clear?"},
      {"S8", kUsage, "Are there missing hyperparameters?"},
      {"S9", kUsage, "Are train/test scripts incomplete?"},
      {"S10", kUsage, "Is it unclear which version of scripts was used?"},
      {"S11", kSourceCode, "Is there a bug that was never fixed?"},
      {"S12", kSourceCode, "Are there issue solutions that were not applied?"},
      {"S13", kSourceCode,
       "Was a bug fix distributed through other channels?"},
      {"S14", kSourceCode, "Did the API change?"},
      {"S15", kSourceCode, "Did an out of memory error occur?"},
      {"S16", kSourceCode, "Are steps for one experiment missing?"},
      {"S17", kSourceCode, "Are steps for all experiments missing?"},
      {"S18", kSourceCode, "Is the hyperparameter search not included?"},
      {"S19", kSourceCode,
       "Is only the general idea (and no experiments) implemented?"},
      {"R1", kModel,
       "Are there no parameters (weights) of the obtained model provided?"},
      {"R2", kPredictions, "Are there small deviation to obtained model?"},
      {"R3", kPredictions,
       "Are strong differences in few experiments observed?"},
      {"R4", kPredictions,
       "Are strong differences in almost all experiments observed?"},
      {"R5", kPredictions,
       "Are the claimed results only supported by small sample size?"},
      {"R6", kPredictions,
       "Are there no predictions (outputs of classes or decisions) on the "
       "data sets?"},
  };
}

}  // namespace

const std::vector<AttributeDef>& builtin_schema() {
  static const std::vector<AttributeDef> schema = build_schema();
  return schema;
}

const AttributeDef* find_attribute(const std::string& id) {
  for (const AttributeDef& attribute : builtin_schema())
    if (attribute.id == id) return &attribute;
  return nullptr;
}

std::vector<std::string> validate_record(const ReproRecord& record) {
  std::vector<std::string> unknown;
  for (const std::string& id : record.attributes)
    if (find_attribute(id) == nullptr) unknown.push_back(id);
  return unknown;
}

FormalContext make_context(const std::vector<ReproRecord>& records) {
  FormalContext context;
  for (const AttributeDef& attribute : builtin_schema())
    context.attributes.push_back(attribute.id);
  for (const ReproRecord& record : records) {
    const std::vector<std::string> unknown = validate_record(record);
    if (!unknown.empty())
      throw std::invalid_argument("unknown attribute id: " + unknown.front());
    context.objects.push_back(record.label);
    std::vector<bool> row(context.attributes.size(), false);
    for (std::size_t a = 0; a < context.attributes.size(); ++a)
      row[a] = std::find(record.attributes.begin(), record.attributes.end(),
                         context.attributes[a]) != record.attributes.end();
    context.incidence.push_back(std::move(row));
  }
  return context;
}

std::string export_cxt(const FormalContext& context) {
  if (context.incidence.size() != context.objects.size())
    throw std::invalid_argument("context: incidence rows do not match objects");
  for (const auto& row : context.incidence)
    if (row.size() != context.attributes.size())
      throw std::invalid_argument(
          "context: incidence columns do not match attributes");
  auto check_name = [](const std::string& name) {
    if (name.find('\n') != std::string::npos ||
        name.find('\r') != std::string::npos)
      throw std::invalid_argument("context: names must not contain newlines");
  };
  for (const std::string& name : context.objects) check_name(name);
  for (const std::string& name : context.attributes) check_name(name);

  std::string out = "B\n\n";
  out += std::to_string(context.objects.size());
  out += '\n';
  out += std::to_string(context.attributes.size());
  out += "\n\n";
  for (const std::string& name : context.objects) {
    out += name;
    out += '\n';
  }
  for (const std::string& name : context.attributes) {
    out += name;
    out += '\n';
  }
  for (const auto& row : context.incidence) {
    for (bool crossed : row) out += crossed ? 'X' : '.';
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string::npos) nl = text.size();
    lines.emplace_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

std::size_t parse_count(const std::string& line) {
  std::size_t pos = 0;
  const unsigned long value = std::stoul(line, &pos);
  if (pos != line.size()) throw std::invalid_argument("cxt: bad count line");
  return value;
}

}  // namespace

FormalContext parse_cxt(const std::string& text) {
  const std::vector<std::string> lines = lines_of(text);
  if (lines.size() < 5 || lines[0] != "B" || !lines[1].empty() ||
      !lines[4].empty())
    throw std::invalid_argument("cxt: malformed header");
  const std::size_t object_count = parse_count(lines[2]);
  const std::size_t attribute_count = parse_count(lines[3]);
  const std::size_t expected = 5 + object_count + attribute_count + object_count;
  if (lines.size() != expected)
    throw std::invalid_argument("cxt: unexpected line count");

  FormalContext context;
  std::size_t cursor = 5;
  for (std::size_t i = 0; i < object_count; ++i)
    context.objects.push_back(lines[cursor++]);
  for (std::size_t i = 0; i < attribute_count; ++i)
    context.attributes.push_back(lines[cursor++]);
  for (std::size_t i = 0; i < object_count; ++i) {
    const std::string& row = lines[cursor++];
    if (row.size() != attribute_count)
      throw std::invalid_argument("cxt: incidence row length mismatch");
    std::vector<bool> bits(attribute_count);
    for (std::size_t a = 0; a < attribute_count; ++a) {
      if (row[a] == 'X') bits[a] = true;
      else if (row[a] == '.') bits[a] = false;
      else throw std::invalid_argument("cxt: incidence cell must be 'X' or '.'");
    }
    context.incidence.push_back(std::move(bits));
  }
  return context;
}

namespace {

std::string trimmed(const std::string& text) {
  const auto b = text.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = text.find_last_not_of(" \t");
  return text.substr(b, e - b + 1);
}

}  // namespace

std::vector<ReproRecord> read_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open: " + path.string());
  std::vector<ReproRecord> records;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string body = trimmed(line);
    if (body.empty() || body.front() == '#') continue;
    const std::size_t colon = body.find(':');
    if (colon == std::string::npos) {
      std::ostringstream msg;
      msg << path.string() << ":" << line_number << ": expected `label: ids`";
      throw std::invalid_argument(msg.str());
    }
    ReproRecord record;
    record.label = trimmed(body.substr(0, colon));
    if (record.label.empty()) {
      std::ostringstream msg;
      msg << path.string() << ":" << line_number << ": empty label";
      throw std::invalid_argument(msg.str());
    }
    std::string rest = body.substr(colon + 1);
    std::size_t start = 0;
    while (start <= rest.size() && !rest.empty()) {
      std::size_t comma = rest.find(',', start);
      if (comma == std::string::npos) comma = rest.size();
      const std::string id = trimmed(rest.substr(start, comma - start));
      if (!id.empty()) record.attributes.push_back(id);
      if (comma == rest.size()) break;
      start = comma + 1;
    }
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace gid
