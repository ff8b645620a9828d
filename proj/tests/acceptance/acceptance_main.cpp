// Acceptance suite: runs every release criterion at its pinned tolerance and
// prints one PASS/FAIL line per criterion. Exit code is the failure count.

#include "gid/approx_id.hpp"
#include "gid/core_id.hpp"
#include "gid/dataio.hpp"
#include "gid/feature_scores.hpp"
#include "gid/ontology.hpp"
#include "gid/oracle.hpp"
#include "gid/selection.hpp"
#include "gid/splitmix64.hpp"
#include "gid/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>
#include <unistd.h>

using namespace gid;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Checker {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& message) {
    if (!condition) {
      if (!ok) detail << "; ";
      ok = false;
      detail << message;
    }
  }
};

Matrix random_matrix(SplitMix64& rng, Index n, Index d) {
  Matrix m(n, d);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < d; ++c) m(r, c) = rng.next_unit();
  return m;
}

SupportSequence random_support(SplitMix64& rng, Index n) {
  SupportSequence s;
  s.sizes.push_back(2);
  for (Index k = 3; k < n; ++k)
    if (rng.next() % 7 == 0) s.sizes.push_back(k);
  if (n > 2) s.sizes.push_back(n);
  return s;
}

// 1. core_id and feature_scores equal the brute-force oracle within 1e-12 on
//    500 random matrices with n <= 10, d <= 4, values uniform in [0,1].
Checker criterion_oracle_equivalence() {
  Checker c;
  const auto start = Clock::now();
  SplitMix64 rng(1001);
  for (int trial = 0; trial < 500 && c.ok; ++trial) {
    const Index n = 2 + static_cast<Index>(rng.next() % 9);
    const Index d = 1 + static_cast<Index>(rng.next() % 4);
    const Matrix m = random_matrix(rng, n, d);

    c.require(std::abs(delta_exact(m) - oracle::brute_delta(m)) <= 1e-12,
              "delta mismatch vs oracle");
    const IdEstimate fast_id = id_exact(m);
    const double slow_delta = oracle::brute_delta(m);
    if (slow_delta > 0.0)
      c.require(std::abs(fast_id.id_mid - 1.0 / (slow_delta * slow_delta)) <= 1e-12,
                "id mismatch vs oracle");

    const auto fast = score_features_exact(m);
    const auto slow = oracle::brute_feature_scores(m);
    for (std::size_t j = 0; j < fast.size(); ++j) {
      c.require(std::abs(fast[j].discriminability - slow[j].discriminability) <= 1e-12,
                "discriminability mismatch vs oracle");
      c.require(std::abs(fast[j].norm_discriminability -
                         slow[j].norm_discriminability) <= 1e-12,
                "normalized discriminability mismatch vs oracle");
      c.require(fast[j].infinite == slow[j].infinite, "infinite flag mismatch");
      if (!fast[j].infinite)
        c.require(std::abs(fast[j].nid - slow[j].nid) <=
                      1e-12 * std::max(1.0, slow[j].nid),
                  "nid mismatch vs oracle");
    }
  }
  const double elapsed = seconds_since(start);
  c.require(elapsed < 30.0, "runtime over 30 s");
  c.detail << (c.ok ? "" : " ") << "(500 matrices, "
           << static_cast<int>(elapsed * 1000) << " ms)";
  return c;
}

// 2. Worked golden examples at tolerance 1e-9.
Checker criterion_golden_examples() {
  Checker c;
  auto near = [](double a, double b) { return std::abs(a - b) <= 1e-9; };

  Matrix simple(3, 1);
  simple << 0, 1, 3;
  c.require(near(delta_exact(simple), 4.0 / 3.0), "delta([0,1,3]) != 4/3");
  c.require(near(id_exact(simple).id_mid, 0.5625), "id([0,1,3]) != 0.5625");
  const auto simple_scores = score_features_exact(simple);
  c.require(near(simple_scores[0].norm_discriminability, 0.5),
            "normalized discriminability([0,1,3]) != 0.5");
  c.require(near(simple_scores[0].nid, 4.0), "nid([0,1,3]) != 4");

  Matrix repeated(3, 1);
  repeated << 0, 2, 2;
  c.require(near(score_features_exact(repeated)[0].nid, 20.25),
            "nid([0,2,2]) != 20.25");

  Matrix four(4, 1);
  four << 0, 1, 2, 4;
  const SupportSequence sparse{{2, 4}};
  const DeltaBounds bounds = delta_bounds(four, sparse);
  c.require(near(bounds.lower, 1.5), "delta lower bound != 1.5");
  c.require(near(bounds.upper, 2.25), "delta upper bound != 2.25");
  const IdEstimate estimate = id_bounds(four, sparse);
  c.require(near(estimate.id_lower, 16.0 / 81.0), "id lower bound != 16/81");
  c.require(near(estimate.id_upper, 4.0 / 9.0), "id upper bound != 4/9");
  const double exact = id_exact(four).id_mid;
  c.require(near(exact, 16.0 / 49.0), "exact id != 16/49");
  c.require(estimate.id_lower <= exact && exact <= estimate.id_upper,
            "exact id outside the bracket");

  // The same values straight from the oracle.
  c.require(near(oracle::brute_delta(simple), 4.0 / 3.0), "oracle delta");
  c.require(near(oracle::brute_feature_scores(repeated)[0].nid, 20.25),
            "oracle nid");
  return c;
}

// 3. Sandwich property: 200 random matrices (n <= 2000, d <= 20), 5 random
//    support sequences each; complete sequence collapses within 1e-12.
Checker criterion_sandwich() {
  Checker c;
  const auto start = Clock::now();
  SplitMix64 rng(1003);
  for (int trial = 0; trial < 200 && c.ok; ++trial) {
    const Index n = 2 + static_cast<Index>(rng.next() % 1999);
    const Index d = 1 + static_cast<Index>(rng.next() % 20);
    const Matrix m = random_matrix(rng, n, d);
    const double exact = delta_exact(m, 2);
    const double exact_id = 1.0 / (exact * exact);

    for (int rep = 0; rep < 5; ++rep) {
      const SupportSequence s = random_support(rng, n);
      const DeltaBounds bounds = delta_bounds(m, s, 2);
      c.require(bounds.lower <= exact + 1e-12 && exact <= bounds.upper + 1e-12,
                "delta bounds fail to bracket the exact value");
      const IdEstimate estimate = id_bounds(m, s, 2);
      c.require(estimate.id_lower <= exact_id * (1 + 1e-12) &&
                    exact_id * (1 - 1e-12) <= estimate.id_upper,
                "id bounds fail to bracket the exact value");
    }

    const SupportSequence complete = default_support_sequence(n, n + 1);
    const DeltaBounds collapsed = delta_bounds(m, complete, 2);
    c.require(std::abs(collapsed.lower - exact) <= 1e-12 &&
                  std::abs(collapsed.upper - exact) <= 1e-12,
              "complete sequence does not collapse to the exact delta");
  }
  const double elapsed = seconds_since(start);
  c.require(elapsed < 120.0, "runtime over 2 min");
  c.detail << "(200 matrices x 5 sequences, "
           << static_cast<int>(elapsed * 1000) << " ms)";
  return c;
}

// 4. Scaling / translation / permutation invariance suite.
Checker criterion_invariances() {
  Checker c;
  SplitMix64 rng(1004);
  const Matrix m = random_matrix(rng, 64, 8);
  const double delta = delta_exact(m);
  const double id = id_exact(m).id_mid;

  for (double scale : {0.5, 3.0, 1e4}) {
    const Matrix scaled = scale * m;
    c.require(std::abs(delta_exact(scaled) - scale * delta) <=
                  1e-9 * scale * delta,
              "scaling law violated for delta");
    c.require(std::abs(id_exact(scaled).id_mid - id / (scale * scale)) <=
                  1e-9 * id / (scale * scale),
              "scaling law violated for id");
  }

  // Integer-valued data plus an integer shift: exact arithmetic, so
  // translation invariance must hold bit for bit.
  Matrix ints(12, 3);
  for (Index r = 0; r < 12; ++r)
    for (Index j = 0; j < 3; ++j)
      ints(r, j) = static_cast<double>(rng.next() % 1000);
  Matrix shifted = ints;
  shifted.col(1).array() += 12345.0;
  c.require(delta_exact(shifted) == delta_exact(ints),
            "translation changed delta");
  c.require(id_exact(shifted).id_mid == id_exact(ints).id_mid,
            "translation changed id");
  const auto base_scores = score_features_exact(ints);
  const auto shifted_scores = score_features_exact(shifted);
  for (std::size_t j = 0; j < base_scores.size(); ++j)
    c.require(shifted_scores[j].nid == base_scores[j].nid,
              "translation changed a feature score");

  // Row permutation: bit-exact across the board.
  Matrix rows = m;
  std::vector<Index> perm(64);
  for (Index i = 0; i < 64; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (Index i = 63; i > 0; --i)
    std::swap(perm[static_cast<std::size_t>(i)],
              perm[static_cast<std::size_t>(rng.next() % (i + 1))]);
  for (Index r = 0; r < 64; ++r) rows.row(r) = m.row(perm[static_cast<std::size_t>(r)]);
  c.require(delta_exact(rows) == delta, "row permutation changed delta");
  const auto row_scores = score_features_exact(rows);
  const auto ref_scores = score_features_exact(m);
  for (std::size_t j = 0; j < ref_scores.size(); ++j)
    c.require(row_scores[j].nid == ref_scores[j].nid,
              "row permutation changed a feature score");

  // Column permutation: delta and id are column-order free.
  Matrix cols(64, 8);
  const std::vector<Index> cperm{5, 2, 7, 0, 3, 6, 1, 4};
  for (Index j = 0; j < 8; ++j) cols.col(j) = m.col(cperm[static_cast<std::size_t>(j)]);
  c.require(delta_exact(cols) == delta, "column permutation changed delta");
  c.require(id_exact(cols).id_mid == id, "column permutation changed id");
  return c;
}

// 5. Performance envelope: default support sequence for n=10^6, l=10^4 in
//    under a second; id_bounds on a random 200000 x 64 binary matrix within
//    the 10-minute budget.
Checker criterion_performance() {
  Checker c;

  const auto seq_start = Clock::now();
  const SupportSequence s = default_support_sequence(1000000, 10000);
  const double seq_elapsed = seconds_since(seq_start);
  c.require(seq_elapsed < 1.0, "support sequence construction over 1 s");
  c.require(s.front() == 2 && s.back() == 1000000, "bad endpoints");

  const Index n = 200000;
  const Index d = 64;
  SplitMix64 rng(1005);
  Matrix m(n, d);
  for (Index r = 0; r < n; ++r)
    for (Index j = 0; j < d; ++j)
      m(r, j) = static_cast<double>(rng.next() & 1);

  const auto bounds_start = Clock::now();
  const IdEstimate estimate =
      id_bounds(m, default_support_sequence(n, 10000), 4);
  const double bounds_elapsed = seconds_since(bounds_start);
  c.require(bounds_elapsed < 600.0, "id_bounds over 10 min");
  c.require(!estimate.infinite, "binary matrix reported as degenerate");
  c.require(estimate.id_lower <= estimate.id_upper, "inverted bounds");
  c.detail << "(sequence " << static_cast<int>(seq_elapsed * 1000)
           << " ms, bounds " << static_cast<int>(bounds_elapsed * 1000)
           << " ms)";
  return c;
}

// 6. Curve shape: y nondecreasing, terminal y exactly 1, x = rank/d, over 100
//    random inputs.
Checker criterion_curve_shape() {
  Checker c;
  SplitMix64 rng(1006);
  for (int trial = 0; trial < 100 && c.ok; ++trial) {
    const Index n = 2 + static_cast<Index>(rng.next() % 40);
    const Index d = 1 + static_cast<Index>(rng.next() % 12);
    Matrix m = random_matrix(rng, n, d);
    if (trial % 4 == 0) m.col(d - 1).setConstant(0.5);
    const NidCurve curve = nid_curve(score_features_exact(m));
    c.require(curve.points.size() == static_cast<std::size_t>(d),
              "curve size mismatch");
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
      c.require(curve.points[i].rel_rank ==
                    static_cast<double>(i + 1) / static_cast<double>(d),
                "x grid is not rank/d");
      if (i > 0)
        c.require(curve.points[i].rel_nid >= curve.points[i - 1].rel_nid,
                  "curve not nondecreasing");
    }
    c.require(curve.points.back().rel_nid == 1.0, "terminal y != 1");
  }
  return c;
}

// 7. Synthetic policy ordering over generator seeds 0..9.
Checker criterion_policy_ordering() {
  Checker c;
  const auto start = Clock::now();
  int random_between = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SyntheticData data = generate_synthetic(400, 4, 16, seed);
    const auto scores = score_features_exact(data.values);

    auto accuracy_for = [&](Policy policy, double alpha) {
      const SelectionPlan plan = plan_selection(scores, policy, alpha, seed);
      return nearest_centroid_accuracy(apply_selection(data.values, plan),
                                       data.labels);
    };

    const double baseline = accuracy_for(Policy::top, 0.0);
    const double top_08 = accuracy_for(Policy::top, 0.8);
    c.require(std::abs(top_08 - baseline) <= 0.02,
              "top policy at alpha 0.8 lost more than 2 points (seed " +
                  std::to_string(seed) + ")");

    const double reversed_02 = accuracy_for(Policy::reversed, 0.2);
    c.require(reversed_02 < 0.60,
              "reversed policy at alpha 0.2 stayed above 60% (seed " +
                  std::to_string(seed) + ")");

    const double top_05 = accuracy_for(Policy::top, 0.5);
    const double reversed_05 = accuracy_for(Policy::reversed, 0.5);
    const double random_05 = accuracy_for(Policy::random, 0.5);
    if (reversed_05 <= random_05 && random_05 <= top_05) ++random_between;
  }
  c.require(random_between >= 8,
            "random policy between top and reversed in only " +
                std::to_string(random_between) + "/10 seeds");
  const double elapsed = seconds_since(start);
  c.require(elapsed < 60.0, "runtime over 1 min");
  c.detail << "(random between in " << random_between << "/10 seeds, "
           << static_cast<int>(elapsed * 1000) << " ms)";
  return c;
}

// 8. Full CLI sweep with --threads 1 and --threads 8 is byte-identical.
Checker criterion_thread_determinism() {
  Checker c;
  const fs::path dir =
      fs::temp_directory_path() /
      ("gid_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path a = dir / "threads1.csv";
  const fs::path b = dir / "threads8.csv";
  const std::string base =
      std::string(GID_CLI_PATH) +
      " sweep --synthetic-n 400 --synthetic-signal 4 --synthetic-noise 16"
      " --synthetic-seed 0 --seeds 10 --evaluate";
  const int rc1 =
      std::system((base + " --threads 1 --out " + a.string()).c_str());
  const int rc8 =
      std::system((base + " --threads 8 --out " + b.string()).c_str());
  c.require(WEXITSTATUS(rc1) == 0 && WEXITSTATUS(rc8) == 0,
            "sweep subcommand failed");

  auto read_bytes = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  const std::string bytes1 = read_bytes(a);
  c.require(!bytes1.empty(), "empty sweep output");
  c.require(bytes1 == read_bytes(b), "outputs differ between thread counts");

  // 19 alpha values per policy, 3 policies, 10 seeds, plus the header.
  int rows = 0;
  for (char ch : bytes1) rows += ch == '\n';
  c.require(rows == 1 + 19 * 3 * 10, "unexpected row count");
  fs::remove_all(dir);
  return c;
}

// 9. Ontology schema and .cxt round-trip.
Checker criterion_ontology() {
  Checker c;
  const auto& schema = builtin_schema();
  c.require(schema.size() == 36, "schema size != 36");

  std::ifstream golden(std::string(GID_TEST_DATA_DIR) +
                       "/attribute_questions.golden");
  c.require(golden.good(), "golden file missing");
  std::ostringstream expected;
  expected << golden.rdbuf();
  std::ostringstream rendered;
  for (const AttributeDef& attribute : schema)
    rendered << attribute.id << '\t' << attribute.category << '\t'
             << attribute.question << '\n';
  c.require(rendered.str() == expected.str(),
            "schema does not match the golden question texts");

  const std::vector<ReproRecord> records{
      {"GCN", {"D9", "S1", "S6", "R2", "R5"}},
      {"GraphSAGE", {"D6", "D7", "D8", "S7", "S8", "S9", "S11", "S12", "R2", "R5"}},
      {"SGC", {"D9"}},
  };
  const FormalContext context = make_context(records);
  const FormalContext back = parse_cxt(export_cxt(context));
  c.require(back.objects == context.objects &&
                back.attributes == context.attributes &&
                back.incidence == context.incidence,
            "cxt export/parse is not the identity");
  return c;
}

// 10. Remaining-share law on 100 random matrices.
Checker criterion_remaining_share() {
  Checker c;
  SplitMix64 rng(1010);
  const std::vector<double> grid{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  for (int trial = 0; trial < 100 && c.ok; ++trial) {
    const Index n = 4 + static_cast<Index>(rng.next() % 40);
    const Index d = 2 + static_cast<Index>(rng.next() % 15);
    const Matrix m = random_matrix(rng, n, d);
    const auto scores = score_features_exact(m);
    double previous = kInf;
    for (double alpha : grid) {
      const double share =
          remaining_share(scores, plan_selection(scores, Policy::top, alpha));
      if (alpha == 0.0)
        c.require(share == 1.0, "share at alpha 0 is not exactly 1");
      c.require(share <= previous + 1e-15, "share increased along the grid");
      previous = share;
    }
  }
  return c;
}

struct Entry {
  int number;
  const char* label;
  Checker (*run)();
};

}  // namespace

int main() {
  const std::vector<Entry> criteria{
      {1, "oracle equivalence", criterion_oracle_equivalence},
      {2, "worked golden examples", criterion_golden_examples},
      {3, "sandwich property", criterion_sandwich},
      {4, "scaling and invariance suite", criterion_invariances},
      {5, "performance envelope", criterion_performance},
      {6, "curve shape", criterion_curve_shape},
      {7, "synthetic policy ordering", criterion_policy_ordering},
      {8, "thread determinism", criterion_thread_determinism},
      {9, "ontology schema and cxt round-trip", criterion_ontology},
      {10, "remaining-share law", criterion_remaining_share},
  };

  int failures = 0;
  for (const Entry& entry : criteria) {
    const Checker result = entry.run();
    if (!result.ok) ++failures;
    std::cout << (result.ok ? "PASS" : "FAIL") << " criterion " << entry.number
              << " (" << entry.label << ")";
    const std::string detail = result.detail.str();
    if (!detail.empty()) std::cout << " " << detail;
    std::cout << std::endl;
  }
  return failures;
}
