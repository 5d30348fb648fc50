#include <doctest.h>

#include <cmath>
#include <map>

#include "hhnet/errors.hpp"
#include "hhnet/loglik.hpp"
#include "hhnet/simulate.hpp"

using namespace hhnet;

namespace {

SimDesign small_design() {
  SimDesign design;
  design.theta = ParameterVector::constant(5, 0.85, 0.75);
  design.cells.push_back({AgeCategory{3}, HouseholdComposition{{1, 0, 0, 1, 0}}, 7});
  design.cells.push_back({AgeCategory{0}, HouseholdComposition{{1, 0, 0, 2, 0}}, 5});
  design.replicates = 3;
  design.seed = 404;
  return design;
}

}  // namespace

TEST_CASE("deterministic edge cases") {
  RngStream rng(1, 0);

  SUBCASE("certain presence and contact reports everyone") {
    auto ones = ParameterVector::constant(5, 1.0, 1.0);
    HouseholdComposition members{{2, 1, 0, 0, 3}};
    for (int i = 0; i < 20; ++i) {
      auto rec = simulate_record(AgeCategory{4}, members, ones, rng, "x");
      CHECK(rec.contacts.counts == members.counts);
    }
  }

  SUBCASE("respondent never home reports nobody") {
    auto theta = ParameterVector::constant(5, 1.0, 1.0);
    theta.set_home(2, 0.0);
    HouseholdComposition members{{1, 1, 1, 1, 1}};
    for (int i = 0; i < 20; ++i) {
      auto rec = simulate_record(AgeCategory{2}, members, theta, rng, "x");
      CHECK(rec.contacts.total() == 0);
    }
  }

  SUBCASE("record carries composition and default strata") {
    auto theta = ParameterVector::constant(5, 0.5, 0.5);
    HouseholdComposition members{{0, 0, 0, 3, 0}};
    auto rec = simulate_record(AgeCategory{3}, members, theta, rng, "my-id");
    CHECK(rec.id == "my-id");
    CHECK(rec.members.counts == members.counts);
    CHECK_FALSE(rec.stratum("weekend"));
    CHECK(rec.stratum("large_household"));
    CHECK_NOTHROW(rec.validate(5));
  }
}

TEST_CASE("simulated frequencies match the likelihood") {
  // one fixed household, many draws: every observed contact pattern should
  // appear at close to its model probability
  auto theta = ParameterVector::constant(5, 0.8, 0.6);
  theta.set_home(0, 0.7);
  theta.set_contact(3, 0, 0.45);
  theta.set_contact(3, 3, 0.9);
  HouseholdComposition members{{2, 0, 0, 1, 0}};
  const AgeCategory j{3};

  const int draws = 300000;
  RngStream rng(909, 0);
  std::map<std::vector<int>, int> seen;
  for (int i = 0; i < draws; ++i) {
    auto rec = simulate_record(j, members, theta, rng, "x");
    ++seen[rec.contacts.counts];
  }

  // all 3 x 2 possible contact vectors occur
  CHECK(seen.size() == 6);
  RespondentRecord probe;
  probe.id = "probe";
  probe.respondent_category = j;
  probe.members = members;
  probe.strata = {{"weekend", false}, {"holiday", false}, {"large_household", true}};
  double checked = 0.0;
  for (const auto &[w, count] : seen) {
    probe.contacts.counts = w;
    const double expected = std::exp(respondent_loglik(probe, theta));
    const double se = std::sqrt(expected * (1.0 - expected) / draws);
    CHECK(std::fabs(double(count) / draws - expected) < 4.0 * se + 1e-9);
    checked += expected;
  }
  CHECK(checked == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("simulated frequencies match the likelihood on random setups") {
  RngStream meta(5150, 0);
  for (int trial = 0; trial < 8; ++trial) {
    const int k = 2 + int(meta.bounded(3));
    ParameterVector theta(k);
    for (int p = 0; p < theta.size(); ++p) theta.set(p, 0.15 + 0.7 * meta.next_unit());
    HouseholdComposition members;
    members.counts.assign(k, 0);
    int total = 0;
    for (int s = 0; s < k; ++s) total += members.counts[s] = int(meta.bounded(3));
    if (total == 0) members.counts[0] = 1;
    const AgeCategory j{int(meta.bounded(std::uint64_t(k)))};

    const int draws = 25000;
    RngStream rng(6000 + std::uint64_t(trial), 1);
    std::map<std::vector<int>, int> seen;
    for (int i = 0; i < draws; ++i)
      ++seen[simulate_record(j, members, theta, rng, "x").contacts.counts];

    RespondentRecord probe;
    probe.id = "probe";
    probe.respondent_category = j;
    probe.members = members;
    probe.strata = {{"weekend", false},
                    {"holiday", false},
                    {"large_household", derive_large_household(members)}};
    for (const auto &[w, count] : seen) {
      if (count < 50) continue;  // too rare for a tight normal bound
      probe.contacts.counts = w;
      const double expected = std::exp(respondent_loglik(probe, theta));
      const double se = std::sqrt(expected * (1.0 - expected) / draws);
      CHECK(std::fabs(double(count) / draws - expected) < 5.0 * se);
    }
  }
}

TEST_CASE("replicate datasets are deterministic per seed and stream") {
  auto design = small_design();

  auto once = simulate_dataset(design, 1);
  auto again = simulate_dataset(design, 1);
  REQUIRE(once.size() == 12);
  REQUIRE(again.size() == once.size());
  for (std::size_t i = 0; i < once.size(); ++i) {
    CHECK(once[i].id == again[i].id);
    CHECK(once[i].contacts.counts == again[i].contacts.counts);
  }
  CHECK(once.front().id == "r1-c0-0");
  CHECK(once.back().id == "r1-c1-4");

  // a different replicate produces different draws somewhere
  auto other = simulate_dataset(design, 2);
  bool same = true;
  for (std::size_t i = 0; i < once.size(); ++i)
    if (once[i].contacts.counts != other[i].contacts.counts) same = false;
  CHECK_FALSE(same);
}

TEST_CASE("design validation") {
  auto design = small_design();
  CHECK_NOTHROW(design.validate());

  auto bad = design;
  bad.cells[0].count = 0;
  CHECK_THROWS_AS(bad.validate(), InputError);

  bad = design;
  bad.cells.clear();
  CHECK_THROWS_AS(bad.validate(), InputError);

  bad = design;
  bad.replicates = 0;
  CHECK_THROWS_AS(bad.validate(), InputError);

  bad = design;
  bad.cells[0].respondent = AgeCategory{9};
  CHECK_THROWS_AS(bad.validate(), InputError);
}

TEST_CASE("sparse preset") {
  auto theta = low_contact_preset(5);
  CHECK(theta.home(0) == doctest::Approx(0.6));
  CHECK(theta.contact(2, 4) == doctest::Approx(0.5));
}
