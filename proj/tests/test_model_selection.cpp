#include <doctest.h>

#include <cmath>

#include "hhnet/errors.hpp"
#include "hhnet/model_selection.hpp"
#include "hhnet/simulate.hpp"

using namespace hhnet;

namespace {

// two categories, both strata represented, identical generating values
std::vector<RespondentRecord> balanced_data(long per_cell, std::uint64_t seed,
                                            const ParameterVector &theta_weekday,
                                            const ParameterVector &theta_weekend) {
  SimDesign design;
  design.bins = AgeBins({18});
  design.theta = theta_weekday;
  design.seed = seed;
  design.cells.push_back({AgeCategory{0}, HouseholdComposition{{1, 2}}, per_cell});
  design.cells.push_back({AgeCategory{1}, HouseholdComposition{{1, 1}}, per_cell});
  design.cells.push_back({AgeCategory{1}, HouseholdComposition{{0, 2}}, per_cell});
  auto data = simulate_dataset(design, 0);

  design.theta = theta_weekend;
  design.seed = seed + 1;
  auto weekend = simulate_dataset(design, 1);
  for (auto &rec : weekend) {
    rec.id += "-we";
    rec.strata["weekend"] = true;
  }
  data.insert(data.end(), weekend.begin(), weekend.end());
  return data;
}

}  // namespace

TEST_CASE("no real difference between strata") {
  auto theta = ParameterVector::constant(2, 0.8, 0.7);
  auto data = balanced_data(60, 42, theta, theta);

  auto res = lrt(data, "weekend", {});
  CHECK(res.df == 5);
  CHECK(res.stat >= 0.0);
  // same generating process: the test should not scream
  CHECK(res.p_value > 0.01);
  CHECK(res.alt_fit.loglik >= res.null_fit.loglik - 1e-9);
  CHECK(res.alt_fit.mask.stratified());
  CHECK_FALSE(res.null_fit.mask.stratified());
  CHECK(res.warnings.empty());
}

TEST_CASE("a genuine stratum effect is detected") {
  auto weekday = ParameterVector::constant(2, 0.7, 0.6);
  auto weekend = ParameterVector::constant(2, 0.92, 0.88);
  auto data = balanced_data(120, 7, weekday, weekend);

  auto res = lrt(data, "weekend", {});
  CHECK(res.df == 5);
  CHECK(res.stat > 20.0);
  CHECK(res.p_value < 0.001);

  // the split fit lands near each stratum's own generating values
  REQUIRE(res.alt_fit.theta.size() == 2);
  CHECK(res.alt_fit.theta[0].home(0) == doctest::Approx(0.7).epsilon(0.15));
  CHECK(res.alt_fit.theta[1].home(0) == doctest::Approx(0.92).epsilon(0.1));
}

TEST_CASE("tied parameters reduce the degrees of freedom") {
  auto theta = ParameterVector::constant(2, 0.8, 0.7);
  auto data = balanced_data(40, 11, theta, theta);

  ParameterVector probe(2);
  std::set<int> tied{probe.home_index(0), probe.contact_index(0, 0),
                     probe.contact_index(0, 1)};
  auto res = lrt(data, "weekend", tied);
  CHECK(res.df == 2);
  CHECK(res.alt_fit.mask.free_count() == 7);
  // tied slots expand to the same value in both strata
  for (int p : tied)
    CHECK(res.alt_fit.theta[0][p] == doctest::Approx(res.alt_fit.theta[1][p]));
  CHECK(res.p_value >= 0.0);
  CHECK(res.p_value <= 1.0);
}

TEST_CASE("fully tied alternative is the null") {
  auto theta = ParameterVector::constant(2, 0.8, 0.7);
  auto data = balanced_data(30, 3, theta, theta);

  auto res = lrt(data, "weekend", {0, 1, 2, 3, 4});
  CHECK(res.df == 0);
  CHECK(res.stat == doctest::Approx(0.0).scale(1.0).epsilon(1e-6));
  CHECK(res.p_value == 1.0);
}

TEST_CASE("constant stratum warns and changes nothing") {
  auto theta = ParameterVector::constant(2, 0.8, 0.7);
  SimDesign design;
  design.bins = AgeBins({18});
  design.theta = theta;
  design.seed = 5;
  design.cells.push_back({AgeCategory{0}, HouseholdComposition{{1, 1}}, 50});
  design.cells.push_back({AgeCategory{1}, HouseholdComposition{{1, 1}}, 50});
  auto data = simulate_dataset(design, 0);  // weekend false everywhere

  auto res = lrt(data, "weekend", {});
  REQUIRE_FALSE(res.warnings.empty());
  CHECK(res.warnings.front().find("constant") != std::string::npos);
  CHECK(res.stat == doctest::Approx(0.0).scale(1.0).epsilon(1e-6));
  // the unidentified weekend copies stay at the warm start, the null optimum
  for (int p = 0; p < 5; ++p)
    CHECK(res.alt_fit.theta[1][p] ==
          doctest::Approx(res.null_fit.free_estimates_raw[p]).epsilon(1e-9));
}

TEST_CASE("input guards") {
  auto theta = ParameterVector::constant(2, 0.8, 0.7);
  auto data = balanced_data(10, 1, theta, theta);
  CHECK_THROWS_AS(lrt(data, "market_day", {}), InputError);
  CHECK_THROWS_AS(lrt({}, "weekend", {}), InputError);
}
