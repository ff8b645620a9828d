#include "gid/dataio.hpp"

#include "gid/sweep.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace gid {

namespace fs = std::filesystem;

std::string format_double(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void write_file_atomic(const fs::path& path, const std::string& contents) {
  fs::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + temp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw IoError("write failed: " + temp.string());
  }
  std::error_code ec;
  fs::rename(temp, path, ec);
  if (ec) {
    fs::remove(temp);
    throw IoError("rename failed: " + path.string() + ": " + ec.message());
  }
}

namespace {

enum class CellKind { finite, non_finite, not_a_number };

CellKind classify_cell(std::string_view cell, double& out) {
  std::size_t begin = cell.find_first_not_of(" \t");
  if (begin == std::string_view::npos) return CellKind::not_a_number;
  std::size_t end = cell.find_last_not_of(" \t");
  std::string_view body = cell.substr(begin, end - begin + 1);
  const char* first = body.data();
  if (!body.empty() && (body.front() == '+')) first += 1;  // from_chars rejects '+'
  const char* last = body.data() + body.size();
  double value = 0.0;
  auto [ptr, err] = std::from_chars(first, last, value);
  if (err != std::errc() || ptr != last) return CellKind::not_a_number;
  out = value;
  return std::isfinite(value) ? CellKind::finite : CellKind::non_finite;
}

std::vector<std::string_view> split_line(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(line.substr(start));
      break;
    }
    cells.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return cells;
}

std::string read_whole_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

[[noreturn]] void cell_error(const fs::path& path, std::size_t row,
                             std::size_t col, const char* what) {
  std::ostringstream msg;
  msg << path.string() << ": row " << row << ", column " << col << ": " << what;
  throw IoError(msg.str());
}

}  // namespace

Dataset read_csv(const fs::path& path) {
  const std::string text = read_whole_file(path);

  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string::npos) nl = text.size();
    std::string_view line(text.data() + start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    start = nl + 1;
  }
  if (lines.empty()) throw IoError("empty file: " + path.string());

  // Header detection: any cell of row 1 that is not a number at all.
  const std::vector<std::string_view> first_row = split_line(lines[0]);
  bool has_header = false;
  for (std::string_view cell : first_row) {
    double ignored;
    if (classify_cell(cell, ignored) == CellKind::not_a_number) {
      has_header = true;
      break;
    }
  }

  Dataset dataset;
  dataset.had_header = has_header;
  const std::size_t cols = first_row.size();
  if (has_header) {
    for (std::string_view cell : first_row) {
      std::string name(cell);
      const auto b = name.find_first_not_of(" \t");
      const auto e = name.find_last_not_of(" \t");
      dataset.column_names.push_back(
          b == std::string::npos ? "" : name.substr(b, e - b + 1));
    }
  } else {
    for (std::size_t j = 0; j < cols; ++j)
      dataset.column_names.push_back("f" + std::to_string(j));
  }

  const std::size_t data_begin = has_header ? 1 : 0;
  const std::size_t rows = lines.size() - data_begin;
  if (rows == 0) throw IoError("no data rows: " + path.string());

  dataset.values.resize(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::vector<std::string_view> cells = split_line(lines[data_begin + r]);
    if (cells.size() != cols) {
      std::ostringstream msg;
      msg << path.string() << ": row " << data_begin + r + 1 << ": expected "
          << cols << " cells, got " << cells.size();
      throw IoError(msg.str());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      double value;
      switch (classify_cell(cells[c], value)) {
        case CellKind::finite:
          dataset.values(static_cast<Index>(r), static_cast<Index>(c)) = value;
          break;
        case CellKind::non_finite:
          cell_error(path, data_begin + r + 1, c + 1, "non-finite value");
        case CellKind::not_a_number:
          cell_error(path, data_begin + r + 1, c + 1, "not a number");
      }
    }
  }
  return dataset;
}

void write_csv(const MatrixRef& data, const fs::path& path,
               const std::vector<std::string>& names) {
  std::string out;
  if (!names.empty()) {
    if (static_cast<Index>(names.size()) != data.cols())
      throw IoError("csv write: header size does not match column count");
    for (std::size_t j = 0; j < names.size(); ++j) {
      if (j) out += ',';
      out += names[j];
    }
    out += '\n';
  }
  for (Index r = 0; r < data.rows(); ++r) {
    for (Index c = 0; c < data.cols(); ++c) {
      if (c) out += ',';
      out += format_double(data(r, c));
    }
    out += '\n';
  }
  write_file_atomic(path, out);
}

namespace {

constexpr char kMagic[4] = {'G', 'D', 'M', '1'};

void append_u64_le(std::string& out, std::uint64_t value) {
  for (int b = 0; b < 8; ++b)
    out += static_cast<char>((value >> (8 * b)) & 0xFF);
}

std::uint64_t read_u64_le(const unsigned char* p) {
  std::uint64_t value = 0;
  for (int b = 7; b >= 0; --b) value = (value << 8) | p[b];
  return value;
}

}  // namespace

Matrix read_binary(const fs::path& path) {
  const std::string raw = read_whole_file(path);
  if (raw.size() < 20) throw IoError("truncated header: " + path.string());
  if (std::memcmp(raw.data(), kMagic, 4) != 0)
    throw IoError("bad magic: " + path.string());
  const auto* bytes = reinterpret_cast<const unsigned char*>(raw.data());
  const std::uint64_t rows = read_u64_le(bytes + 4);
  const std::uint64_t cols = read_u64_le(bytes + 12);
  if (rows == 0 || cols == 0)
    throw IoError("zero dimension in header: " + path.string());
  const std::uint64_t payload_capacity = (raw.size() - 20) / 8;
  if (rows > payload_capacity || cols > payload_capacity)
    throw IoError("payload size mismatch (header larger than file): " +
                  path.string());
  const std::uint64_t expected = 20 + rows * cols * 8;
  if (raw.size() != expected) {
    std::ostringstream msg;
    msg << path.string() << ": payload size mismatch (expected " << expected
        << " bytes, file has " << raw.size() << ")";
    throw IoError(msg.str());
  }

  Matrix data(static_cast<Index>(rows), static_cast<Index>(cols));
  const unsigned char* p = bytes + 20;
  for (Index r = 0; r < data.rows(); ++r) {
    for (Index c = 0; c < data.cols(); ++c, p += 8) {
      const double value = std::bit_cast<double>(read_u64_le(p));
      if (!std::isfinite(value))
        cell_error(path, static_cast<std::size_t>(r) + 1,
                   static_cast<std::size_t>(c) + 1, "non-finite value");
      data(r, c) = value;
    }
  }
  return data;
}

void write_binary(const MatrixRef& data, const fs::path& path) {
  if (data.rows() < 1 || data.cols() < 1)
    throw IoError("binary write: empty matrix");
  std::string out;
  out.reserve(20 + static_cast<std::size_t>(data.size()) * 8);
  out.append(kMagic, 4);
  append_u64_le(out, static_cast<std::uint64_t>(data.rows()));
  append_u64_le(out, static_cast<std::uint64_t>(data.cols()));
  for (Index r = 0; r < data.rows(); ++r) {
    for (Index c = 0; c < data.cols(); ++c) {
      const double value = data(r, c);
      if (!std::isfinite(value))
        throw IoError("binary write: non-finite value");
      append_u64_le(out, std::bit_cast<std::uint64_t>(value));
    }
  }
  write_file_atomic(path, out);
}

Dataset read_dataset(const fs::path& path, const std::string& format) {
  if (format == "csv") return read_csv(path);
  if (format == "bin") {
    Dataset dataset;
    dataset.values = read_binary(path);
    for (Index j = 0; j < dataset.values.cols(); ++j)
      dataset.column_names.push_back("f" + std::to_string(j));
    return dataset;
  }
  throw IoError("unknown input format: " + format);
}

namespace {

// Number or null-with-flag rendering for the fixed-key reports.
std::string json_number_or_null(double value, bool infinite) {
  return infinite ? "null" : format_double(value);
}

}  // namespace

std::string id_report_json(const IdEstimate& estimate) {
  std::ostringstream out;
  out << "{\"method\":\"" << method_name(estimate.method) << "\""
      << ",\"delta_lower\":" << format_double(estimate.delta_lower)
      << ",\"delta_upper\":" << format_double(estimate.delta_upper)
      << ",\"id_lower\":" << json_number_or_null(estimate.id_lower, estimate.infinite)
      << ",\"id_upper\":" << json_number_or_null(estimate.id_upper, estimate.infinite)
      << ",\"id_mid\":" << json_number_or_null(estimate.id_mid, estimate.infinite)
      << ",\"infinite\":" << (estimate.infinite ? "true" : "false") << "}\n";
  return out.str();
}

void write_id_report(const IdEstimate& estimate, const fs::path& path) {
  write_file_atomic(path, id_report_json(estimate));
}

std::string scores_csv(const std::vector<FeatureScore>& scores) {
  std::string out =
      "feature_index,discriminability,normalized_discriminability,nid,"
      "nid_lower,nid_upper,approximated\n";
  for (const FeatureScore& s : scores) {
    out += std::to_string(s.feature);
    out += ',';
    out += format_double(s.discriminability);
    out += ',';
    out += format_double(s.norm_discriminability);
    out += ',';
    out += format_double(s.nid);
    out += ',';
    out += format_double(s.nid_lower);
    out += ',';
    out += format_double(s.nid_upper);
    out += ',';
    out += s.approximated ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::string scores_json(const std::vector<FeatureScore>& scores) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const FeatureScore& s = scores[i];
    if (i) out << ",";
    out << "{\"feature_index\":" << s.feature
        << ",\"discriminability\":" << format_double(s.discriminability)
        << ",\"normalized_discriminability\":"
        << format_double(s.norm_discriminability)
        << ",\"nid\":" << json_number_or_null(s.nid, s.infinite)
        << ",\"nid_lower\":" << json_number_or_null(s.nid_lower, s.infinite)
        << ",\"nid_upper\":" << json_number_or_null(s.nid_upper, s.infinite)
        << ",\"infinite\":" << (s.infinite ? "true" : "false")
        << ",\"approximated\":" << (s.approximated ? "true" : "false") << "}";
  }
  out << "]\n";
  return out.str();
}

void write_scores(const std::vector<FeatureScore>& scores, const fs::path& path,
                  const std::string& format) {
  if (format == "csv") {
    write_file_atomic(path, scores_csv(scores));
  } else if (format == "json") {
    write_file_atomic(path, scores_json(scores));
  } else {
    throw IoError("unknown scores format: " + format);
  }
}

std::string curve_csv(const NidCurve& curve) {
  std::string out = "rank,rel_rank,feature_index,nid,rel_nid\n";
  for (const NidCurvePoint& p : curve.points) {
    out += std::to_string(p.rank);
    out += ',';
    out += format_double(p.rel_rank);
    out += ',';
    out += std::to_string(p.feature);
    out += ',';
    out += format_double(p.nid);
    out += ',';
    out += format_double(p.rel_nid);
    out += '\n';
  }
  return out;
}

void write_curve(const NidCurve& curve, const fs::path& path) {
  write_file_atomic(path, curve_csv(curve));
}

std::string plan_json(const SelectionPlan& plan) {
  std::ostringstream out;
  out << "{\"policy\":\"" << policy_name(plan.policy) << "\""
      << ",\"fraction\":" << format_double(plan.fraction)
      << ",\"seed\":" << plan.seed << ",\"discarded\":[";
  for (std::size_t i = 0; i < plan.discarded.size(); ++i) {
    if (i) out << ",";
    out << plan.discarded[i];
  }
  out << "],\"kept\":[";
  for (std::size_t i = 0; i < plan.kept.size(); ++i) {
    if (i) out << ",";
    out << plan.kept[i];
  }
  out << "]}\n";
  return out.str();
}

void write_plan(const SelectionPlan& plan, const fs::path& path) {
  write_file_atomic(path, plan_json(plan));
}

std::string sweep_csv(const SweepResult& result) {
  std::string out = "policy,alpha,seed,kept,remaining_share,accuracy\n";
  for (const SweepCell& cell : result.cells) {
    out += policy_name(cell.policy);
    out += ',';
    out += format_double(cell.alpha);
    out += ',';
    out += std::to_string(cell.seed);
    out += ',';
    out += std::to_string(cell.kept);
    out += ',';
    out += format_double(cell.remaining_share);
    out += ',';
    if (cell.accuracy) out += format_double(*cell.accuracy);
    out += '\n';
  }
  return out;
}

void write_sweep(const SweepResult& result, const fs::path& path) {
  write_file_atomic(path, sweep_csv(result));
}

}  // namespace gid
