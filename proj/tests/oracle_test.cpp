#include "gid/oracle.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace gid;
using test::column_matrix;

TEST_CASE("brute subset spreads on tiny inputs") {
  CHECK(oracle::brute_min_subset_spread({0, 1, 3}, 2) == 1.0);
  CHECK(oracle::brute_min_subset_spread({0, 1, 3}, 3) == 3.0);
  CHECK(oracle::brute_min_subset_spread({5, 5, 5}, 2) == 0.0);
  CHECK(oracle::brute_min_subset_spread({5, 5, 5}, 3) == 0.0);
  CHECK(oracle::brute_min_subset_spread({0, 1, 2, 4}, 2) == 1.0);
  CHECK(oracle::brute_min_subset_spread({0, 1, 2, 4}, 3) == 2.0);
  CHECK(oracle::brute_min_subset_spread({0, 1, 2, 4}, 4) == 4.0);
}

TEST_CASE("brute subset spread guards") {
  CHECK_THROWS_AS(oracle::brute_min_subset_spread({7}, 2), std::invalid_argument);
  CHECK_THROWS_AS(oracle::brute_min_subset_spread({1, 2}, 1), std::invalid_argument);
  CHECK_THROWS_AS(
      oracle::brute_min_subset_spread(std::vector<double>(21, 0.0), 2),
      std::invalid_argument);
}

TEST_CASE("brute delta on worked examples") {
  CHECK(oracle::brute_delta(column_matrix({0, 1, 3})) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));

  Matrix two(3, 2);
  two << 0, 0, 1, 2, 3, 2;
  CHECK(oracle::brute_delta(two) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));

  Matrix constant = Matrix::Constant(4, 2, 7.0);
  CHECK(oracle::brute_delta(constant) == 0.0);

  CHECK_THROWS_AS(oracle::brute_delta(Matrix::Zero(13, 1)), std::invalid_argument);
  CHECK_THROWS_AS(oracle::brute_delta(Matrix::Zero(4, 7)), std::invalid_argument);
}

TEST_CASE("brute feature scores on worked examples") {
  const auto a = oracle::brute_feature_scores(column_matrix({0, 1, 3}));
  REQUIRE(a.size() == 1);
  CHECK(a[0].discriminability == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(a[0].norm_discriminability == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(a[0].nid == doctest::Approx(4.0).epsilon(1e-15));
  CHECK_FALSE(a[0].infinite);

  const auto b = oracle::brute_feature_scores(column_matrix({0, 2, 2}));
  REQUIRE(b.size() == 1);
  CHECK(b[0].discriminability == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(b[0].norm_discriminability == doctest::Approx(2.0 / 9.0).epsilon(1e-15));
  CHECK(b[0].nid == doctest::Approx(20.25).epsilon(1e-15));

  const auto c = oracle::brute_feature_scores(column_matrix({3, 3, 3}));
  REQUIRE(c.size() == 1);
  CHECK(c[0].discriminability == 0.0);
  CHECK(c[0].norm_discriminability == 0.0);
  CHECK(c[0].infinite);
}
