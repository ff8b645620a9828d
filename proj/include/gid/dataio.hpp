#pragma once

#include "gid/types.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace gid {

struct SweepResult;  // sweep.hpp

/// Parse/validation failure with file position context.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Dataset {
  Matrix values;
  std::vector<std::string> column_names;  // from the header row, or "f0", "f1", ...
  bool had_header = false;
};

/// Strict CSV reader: rectangular, every cell a finite decimal number. A
/// header row is assumed iff row 1 contains a cell that does not parse as a
/// number at all ("inf"/"nan" parse as numbers and are rejected as data, with
/// the offending row and column named). Empty files and files without data
/// rows are errors.
Dataset read_csv(const std::filesystem::path& path);

/// Writes a matrix as plain CSV (17 significant digits). When `names` is
/// nonempty it becomes the header row.
void write_csv(const MatrixRef& data, const std::filesystem::path& path,
               const std::vector<std::string>& names = {});

// Binary matrix format: magic "GDM1", then row and column counts as 64-bit
// little-endian unsigned integers, then rows*cols IEEE-754 binary64 values
// little-endian in row-major order. Round-trips bit-exactly.
Matrix read_binary(const std::filesystem::path& path);
void write_binary(const MatrixRef& data, const std::filesystem::path& path);

/// Reads either format based on `format` ("csv" or "bin").
Dataset read_dataset(const std::filesystem::path& path,
                     const std::string& format);

// Report writers. All files are written atomically (temp file + rename) and
// floats carry 17 significant digits; infinite values appear as the literal
// `inf` in CSV and as null plus an `infinite` flag in JSON.
std::string id_report_json(const IdEstimate& estimate);
void write_id_report(const IdEstimate& estimate,
                     const std::filesystem::path& path);

std::string scores_csv(const std::vector<FeatureScore>& scores);
std::string scores_json(const std::vector<FeatureScore>& scores);
void write_scores(const std::vector<FeatureScore>& scores,
                  const std::filesystem::path& path,
                  const std::string& format);

// Curve CSV columns: rank,rel_rank,feature_index,nid,rel_nid.
std::string curve_csv(const NidCurve& curve);
void write_curve(const NidCurve& curve, const std::filesystem::path& path);

std::string plan_json(const SelectionPlan& plan);
void write_plan(const SelectionPlan& plan, const std::filesystem::path& path);

// Sweep CSV columns: policy,alpha,seed,kept,remaining_share,accuracy
// (accuracy empty when the evaluator was off).
std::string sweep_csv(const SweepResult& result);
void write_sweep(const SweepResult& result, const std::filesystem::path& path);

/// %.17g rendering used by every writer.
std::string format_double(double value);

/// Atomic text-file write: temp file in the same directory, then rename.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& contents);

}  // namespace gid
