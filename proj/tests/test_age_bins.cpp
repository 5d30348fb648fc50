#include <doctest.h>

#include "hhnet/age_bins.hpp"
#include "hhnet/errors.hpp"

using namespace hhnet;

TEST_CASE("default binning") {
  AgeBins bins;
  CHECK(bins.count() == 5);
  CHECK(bin_age(0, bins) == AgeCategory{0});
  CHECK(bin_age(5, bins) == AgeCategory{0});
  CHECK(bin_age(6, bins) == AgeCategory{1});
  CHECK(bin_age(11, bins) == AgeCategory{1});
  CHECK(bin_age(12, bins) == AgeCategory{2});
  CHECK(bin_age(18, bins) == AgeCategory{2});
  CHECK(bin_age(19, bins) == AgeCategory{3});
  CHECK(bin_age(35, bins) == AgeCategory{3});
  CHECK(bin_age(36, bins) == AgeCategory{4});
  CHECK(bin_age(99, bins) == AgeCategory{4});
  CHECK_THROWS_AS(bin_age(-1, bins), InputError);
}

TEST_CASE("default labels round-trip") {
  AgeBins bins;
  CHECK(bins.label(AgeCategory{0}) == "0-5");
  CHECK(bins.label(AgeCategory{1}) == "6-11");
  CHECK(bins.label(AgeCategory{2}) == "12-18");
  CHECK(bins.label(AgeCategory{3}) == "19-35");
  CHECK(bins.label(AgeCategory{4}) == "36+");
  for (int v = 0; v < 5; ++v)
    CHECK(bins.category_from_label(bins.label(AgeCategory{v})) == AgeCategory{v});
  CHECK_THROWS_AS(bins.category_from_label("toddler"), InputError);
}

TEST_CASE("custom bins") {
  AgeBins bins(std::vector<int>{18});
  CHECK(bins.count() == 2);
  CHECK(bins.label(AgeCategory{0}) == "0-17");
  CHECK(bins.label(AgeCategory{1}) == "18+");
  CHECK(bin_age(17, bins) == AgeCategory{0});
  CHECK(bin_age(18, bins) == AgeCategory{1});
}

TEST_CASE("bad boundaries rejected") {
  CHECK_THROWS_AS(AgeBins(std::vector<int>{}), InputError);
  CHECK_THROWS_AS(AgeBins(std::vector<int>{6, 6}), InputError);
  CHECK_THROWS_AS(AgeBins(std::vector<int>{12, 6}), InputError);
  CHECK_THROWS_AS(AgeBins(std::vector<int>{0, 6}), InputError);
}
