// gid: concentration-based intrinsic dimension of tabular data sets,
// per-feature NID scores, NID-driven feature selection, and alpha-grid
// discard sweeps. See README.md for the file formats.

#include "gid/approx_id.hpp"
#include "gid/core_id.hpp"
#include "gid/dataio.hpp"
#include "gid/feature_scores.hpp"
#include "gid/ontology.hpp"
#include "gid/oracle.hpp"
#include "gid/selection.hpp"
#include "gid/sweep.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kDegenerate = 3;  // infinite ID: report still written

struct CommonInput {
  std::string path;
  std::string format = "csv";
  std::string mode = "auto";
  gid::Index threshold = 100000;
  gid::Index support_length = 10000;
  int threads = 1;
};

void add_input_flags(CLI::App* cmd, CommonInput& in, bool with_mode = true) {
  cmd->add_option("--input", in.path, "Input data set")->required();
  cmd->add_option("--format", in.format, "Input format")
      ->check(CLI::IsMember({"csv", "bin"}))
      ->capture_default_str();
  if (with_mode) {
    cmd->add_option("--mode", in.mode, "exact, support, or auto dispatch")
        ->check(CLI::IsMember({"auto", "exact", "support"}))
        ->capture_default_str();
    cmd->add_option("--threshold", in.threshold,
                    "Row count at which auto mode switches to support bounds")
        ->capture_default_str();
    cmd->add_option("--support-length", in.support_length,
                    "Length of the default support sequence")
        ->capture_default_str();
  }
  cmd->add_option("--threads", in.threads, "Worker thread cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

gid::IdEstimate run_id(const gid::Matrix& data, const CommonInput& in) {
  if (in.mode == "exact") return gid::id_exact(data, in.threads);
  if (in.mode == "support")
    return gid::id_bounds(
        data, gid::default_support_sequence(data.rows(), in.support_length),
        in.threads);
  return gid::id_auto(data, in.threshold, in.support_length, in.threads);
}

std::vector<gid::FeatureScore> run_scores(const gid::Matrix& data,
                                          const CommonInput& in) {
  if (in.mode == "exact") return gid::score_features_exact(data, in.threads);
  if (in.mode == "support")
    return gid::score_features_approx(
        data, gid::default_support_sequence(data.rows(), in.support_length),
        in.threads);
  return gid::score_features_auto(data, in.threshold, in.support_length,
                                  in.threads);
}

// Grid strings: comma-separated segments, each `start:stop:step` (inclusive
// endpoints within 1e-12) or a single value.
std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string segment = text.substr(start, comma - start);
    if (!segment.empty()) {
      const std::size_t c1 = segment.find(':');
      if (c1 == std::string::npos) {
        values.push_back(std::stod(segment));
      } else {
        const std::size_t c2 = segment.find(':', c1 + 1);
        if (c2 == std::string::npos)
          throw std::invalid_argument("grid segment needs start:stop:step");
        const double lo = std::stod(segment.substr(0, c1));
        const double hi = std::stod(segment.substr(c1 + 1, c2 - c1 - 1));
        const double step = std::stod(segment.substr(c2 + 1));
        if (!(step > 0.0)) throw std::invalid_argument("grid step must be > 0");
        for (int k = 0;; ++k) {
          const double v = lo + step * k;
          if (v > hi + 1e-12) break;
          values.push_back(v);
          if (values.size() > 100000)
            throw std::invalid_argument("grid has more than 100000 values");
        }
      }
    }
    if (comma == text.size()) break;
    start = comma + 1;
  }
  if (values.empty()) throw std::invalid_argument("empty grid");
  return values;
}

gid::Policy parse_policy(const std::string& name) {
  if (name == "top") return gid::Policy::top;
  if (name == "reversed") return gid::Policy::reversed;
  if (name == "random") return gid::Policy::random;
  throw std::invalid_argument("unknown policy: " + name);
}

std::vector<gid::Policy> parse_policies(const std::string& text) {
  std::vector<gid::Policy> policies;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string name = text.substr(start, comma - start);
    if (!name.empty()) policies.push_back(parse_policy(name));
    if (comma == text.size()) break;
    start = comma + 1;
  }
  if (policies.empty()) throw std::invalid_argument("no policies given");
  return policies;
}

int cmd_id(const CommonInput& in, const std::string& output) {
  const gid::Dataset dataset = gid::read_dataset(in.path, in.format);
  const gid::IdEstimate estimate = run_id(dataset.values, in);
  const std::string report = gid::id_report_json(estimate);
  if (output.empty())
    std::cout << report;
  else
    gid::write_file_atomic(output, report);
  return estimate.infinite ? kDegenerate : kOk;
}

int cmd_nid(const CommonInput& in, const std::string& curve_out,
            const std::string& scores_out, const std::string& scores_format) {
  const gid::Dataset dataset = gid::read_dataset(in.path, in.format);
  const std::vector<gid::FeatureScore> scores = run_scores(dataset.values, in);
  if (!scores_out.empty()) gid::write_scores(scores, scores_out, scores_format);
  if (!curve_out.empty()) gid::write_curve(gid::nid_curve(scores), curve_out);
  if (scores_out.empty() && curve_out.empty())
    std::cout << gid::scores_csv(scores);
  return kOk;
}

int cmd_select(const CommonInput& in, const std::string& policy_name,
               double fraction, std::uint64_t seed, const std::string& out,
               const std::string& out_format, const std::string& plan_out) {
  const gid::Dataset dataset = gid::read_dataset(in.path, in.format);
  const std::vector<gid::FeatureScore> scores = run_scores(dataset.values, in);
  const gid::SelectionPlan plan =
      gid::plan_selection(scores, parse_policy(policy_name), fraction, seed);
  if (!plan_out.empty()) gid::write_plan(plan, plan_out);
  if (!out.empty()) {
    const gid::Matrix reduced = gid::apply_selection(dataset.values, plan);
    if (out_format == "bin") {
      gid::write_binary(reduced, out);
    } else {
      std::vector<std::string> names;
      if (dataset.had_header)
        for (gid::Index j : plan.kept)
          names.push_back(dataset.column_names[static_cast<std::size_t>(j)]);
      gid::write_csv(reduced, out, names);
    }
  }
  if (out.empty() && plan_out.empty()) std::cout << gid::plan_json(plan);
  return kOk;
}

struct SyntheticFlags {
  gid::Index n = 0;
  gid::Index signal = 0;
  gid::Index noise = 0;
  std::uint64_t seed = 0;
};

int cmd_sweep(const CommonInput& in, bool have_input,
              const SyntheticFlags& synth, const std::string& label_column,
              const std::string& grid_text, const std::string& policies_text,
              std::uint64_t seeds, bool evaluate, const std::string& basis_name,
              const std::string& out) {
  gid::Matrix data;
  std::vector<int> labels;
  if (synth.n > 0) {
    if (have_input)
      throw std::invalid_argument("--input and --synthetic-n are exclusive");
    gid::SyntheticData synthetic =
        gid::generate_synthetic(synth.n, synth.signal, synth.noise, synth.seed);
    data = std::move(synthetic.values);
    labels = std::move(synthetic.labels);
  } else {
    if (!have_input)
      throw std::invalid_argument("need --input or --synthetic-n");
    gid::Dataset dataset = gid::read_dataset(in.path, in.format);
    if (!label_column.empty()) {
      gid::Index col = -1;
      for (std::size_t j = 0; j < dataset.column_names.size(); ++j)
        if (dataset.column_names[j] == label_column)
          col = static_cast<gid::Index>(j);
      if (col < 0) {
        try {
          col = static_cast<gid::Index>(std::stol(label_column));
        } catch (const std::exception&) {
          col = -1;
        }
      }
      if (col < 0 || col >= dataset.values.cols())
        throw std::invalid_argument("label column not found: " + label_column);
      labels.reserve(static_cast<std::size_t>(dataset.values.rows()));
      for (gid::Index r = 0; r < dataset.values.rows(); ++r)
        labels.push_back(
            static_cast<int>(std::llround(dataset.values(r, col))));
      // Drop the label column from the feature matrix.
      gid::Matrix features(dataset.values.rows(), dataset.values.cols() - 1);
      for (gid::Index j = 0, t = 0; j < dataset.values.cols(); ++j)
        if (j != col) features.col(t++) = dataset.values.col(j);
      data = std::move(features);
    } else {
      data = std::move(dataset.values);
    }
  }

  gid::SweepOptions options;
  options.grid = parse_grid(grid_text);
  options.policies = parse_policies(policies_text);
  options.seed_count = seeds;
  options.evaluate = evaluate;
  options.basis = basis_name == "nid" ? gid::ShareBasis::nid
                                      : gid::ShareBasis::discriminability;
  options.threshold = in.threshold;
  options.support_length = in.support_length;
  options.threads = in.threads;

  const gid::SweepResult result = gid::run_sweep(data, labels, options);
  if (out.empty())
    std::cout << gid::sweep_csv(result);
  else
    gid::write_sweep(result, out);
  return kOk;
}

int cmd_oracle(const std::string& path, const std::string& format) {
  const gid::Dataset dataset = gid::read_dataset(path, format);
  const double delta = gid::oracle::brute_delta(dataset.values);
  const std::vector<gid::FeatureScore> scores =
      gid::oracle::brute_feature_scores(dataset.values);
  gid::IdEstimate estimate;
  estimate.method = gid::Method::exact;
  estimate.delta_lower = delta;
  estimate.delta_upper = delta;
  estimate.infinite = delta == 0.0;
  if (!estimate.infinite) {
    estimate.id_mid = 1.0 / (delta * delta);
    estimate.id_lower = estimate.id_mid;
    estimate.id_upper = estimate.id_mid;
  }
  std::cout << gid::id_report_json(estimate);
  std::cout << gid::scores_csv(scores);
  return estimate.infinite ? kDegenerate : kOk;
}

int cmd_ontology_list() {
  for (const gid::AttributeDef& attribute : gid::builtin_schema())
    std::cout << attribute.id << '\t' << attribute.category << '\t'
              << attribute.question << '\n';
  return kOk;
}

int cmd_ontology_validate(const std::string& records_path) {
  const std::vector<gid::ReproRecord> records =
      gid::read_records(records_path);
  bool ok = true;
  for (const gid::ReproRecord& record : records) {
    const std::vector<std::string> unknown = gid::validate_record(record);
    if (unknown.empty()) {
      std::cout << record.label << ": ok\n";
    } else {
      ok = false;
      std::cout << record.label << ": unknown ids:";
      for (const std::string& id : unknown) std::cout << ' ' << id;
      std::cout << '\n';
    }
  }
  return ok ? kOk : kInputError;
}

int cmd_ontology_export(const std::string& records_path,
                        const std::string& out) {
  const gid::FormalContext context =
      gid::make_context(gid::read_records(records_path));
  const std::string bytes = gid::export_cxt(context);
  if (out.empty())
    std::cout << bytes;
  else
    gid::write_file_atomic(out, bytes);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concentration-based intrinsic dimension and NID feature selection"};
  app.require_subcommand(1);

  // id
  auto* id_cmd = app.add_subcommand("id", "Intrinsic dimension of a data set");
  CommonInput id_in;
  std::string id_output;
  std::string id_report_format = "json";
  add_input_flags(id_cmd, id_in);
  id_cmd->add_option("--output", id_output, "Report path (stdout if omitted)");
  id_cmd->add_option("--report", id_report_format, "Report format")
      ->check(CLI::IsMember({"json"}))
      ->capture_default_str();

  // nid
  auto* nid_cmd = app.add_subcommand("nid", "Per-feature NID scores and curve");
  CommonInput nid_in;
  std::string curve_out, scores_out, scores_format = "csv";
  add_input_flags(nid_cmd, nid_in);
  nid_cmd->add_option("--curve-out", curve_out, "Ranked NID curve CSV path");
  nid_cmd->add_option("--scores-out", scores_out, "Per-feature scores path");
  nid_cmd->add_option("--scores-format", scores_format, "Scores file format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  // select
  auto* select_cmd = app.add_subcommand("select", "Discard features by NID");
  CommonInput select_in;
  std::string select_policy = "top";
  double select_fraction = 0.0;
  std::uint64_t select_seed = 0;
  std::string select_out, select_out_format = "csv", select_plan_out;
  add_input_flags(select_cmd, select_in);
  select_cmd->add_option("--policy", select_policy, "top, reversed, or random")
      ->check(CLI::IsMember({"top", "reversed", "random"}))
      ->capture_default_str();
  select_cmd->add_option("--fraction", select_fraction,
                         "Fraction of features to discard, in [0,1)")
      ->required();
  select_cmd->add_option("--seed", select_seed, "Seed for the random policy")
      ->capture_default_str();
  select_cmd->add_option("--out", select_out, "Reduced data set path");
  select_cmd->add_option("--out-format", select_out_format, "Output format")
      ->check(CLI::IsMember({"csv", "bin"}))
      ->capture_default_str();
  select_cmd->add_option("--plan-out", select_plan_out, "Plan JSON path");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Alpha-grid discard experiment");
  CommonInput sweep_in;
  SyntheticFlags synth;
  std::string sweep_grid = "0.01:0.10:0.01,0.1:0.9:0.1";
  std::string sweep_policies = "top,reversed,random";
  std::string label_column, sweep_out, share_basis = "discriminability";
  std::uint64_t sweep_seeds = 10;
  bool sweep_evaluate = false;
  auto* sweep_input =
      sweep_cmd->add_option("--input", sweep_in.path, "Input data set");
  sweep_cmd->add_option("--format", sweep_in.format, "Input format")
      ->check(CLI::IsMember({"csv", "bin"}))
      ->capture_default_str();
  sweep_cmd->add_option("--label-column", label_column,
                        "Label column (name or index) for the evaluator");
  sweep_cmd->add_option("--synthetic-n", synth.n,
                        "Generate a synthetic labeled data set with n rows");
  sweep_cmd->add_option("--synthetic-signal", synth.signal,
                        "Synthetic signal column count")
      ->capture_default_str();
  sweep_cmd->add_option("--synthetic-noise", synth.noise,
                        "Synthetic noise column count")
      ->capture_default_str();
  sweep_cmd->add_option("--synthetic-seed", synth.seed, "Synthetic generator seed")
      ->capture_default_str();
  sweep_cmd->add_option("--grid", sweep_grid,
                        "Alpha grid: start:stop:step segments or single values")
      ->capture_default_str();
  sweep_cmd->add_option("--policies", sweep_policies, "Comma-separated policies")
      ->capture_default_str();
  sweep_cmd->add_option("--seeds", sweep_seeds, "Number of seeds (0..N-1)")
      ->capture_default_str();
  sweep_cmd->add_flag("--evaluate", sweep_evaluate,
                      "Record nearest-centroid accuracy per cell");
  sweep_cmd->add_option("--share-basis", share_basis,
                        "Quantity summed by remaining_share")
      ->check(CLI::IsMember({"discriminability", "nid"}))
      ->capture_default_str();
  sweep_cmd->add_option("--threshold", sweep_in.threshold,
                        "Row count at which scoring switches to support bounds")
      ->capture_default_str();
  sweep_cmd->add_option("--support-length", sweep_in.support_length,
                        "Length of the default support sequence")
      ->capture_default_str();
  sweep_cmd->add_option("--threads", sweep_in.threads, "Worker thread cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep_out, "Sweep CSV path (stdout if omitted)");

  // oracle
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Brute-force reference on tiny inputs");
  std::string oracle_path, oracle_format = "csv";
  oracle_cmd->add_option("--input", oracle_path, "Input data set")->required();
  oracle_cmd->add_option("--format", oracle_format, "Input format")
      ->check(CLI::IsMember({"csv", "bin"}))
      ->capture_default_str();

  // ontology
  auto* ontology_cmd =
      app.add_subcommand("ontology", "Reproducibility survey schema tools");
  ontology_cmd->require_subcommand(1);
  auto* list_cmd = ontology_cmd->add_subcommand("list", "Print the schema");
  std::string records_path, cxt_out;
  auto* validate_cmd =
      ontology_cmd->add_subcommand("validate", "Check record files");
  validate_cmd->add_option("--records", records_path, "Record file")->required();
  auto* export_cmd =
      ontology_cmd->add_subcommand("export", "Render records as a .cxt context");
  export_cmd->add_option("--records", records_path, "Record file")->required();
  export_cmd->add_option("--out", cxt_out, "Output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (id_cmd->parsed()) return cmd_id(id_in, id_output);
    if (nid_cmd->parsed())
      return cmd_nid(nid_in, curve_out, scores_out, scores_format);
    if (select_cmd->parsed())
      return cmd_select(select_in, select_policy, select_fraction, select_seed,
                        select_out, select_out_format, select_plan_out);
    if (sweep_cmd->parsed())
      return cmd_sweep(sweep_in, sweep_input->count() > 0, synth, label_column,
                       sweep_grid, sweep_policies, sweep_seeds, sweep_evaluate,
                       share_basis, sweep_out);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_path, oracle_format);
    if (ontology_cmd->parsed()) {
      if (list_cmd->parsed()) return cmd_ontology_list();
      if (validate_cmd->parsed()) return cmd_ontology_validate(records_path);
      if (export_cmd->parsed()) return cmd_ontology_export(records_path, cxt_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
