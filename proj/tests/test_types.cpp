#include <doctest.h>

#include "hhnet/errors.hpp"
#include "hhnet/types.hpp"

using namespace hhnet;

namespace {

RespondentRecord make_record(int j, std::vector<int> n, std::vector<int> w) {
  RespondentRecord rec;
  rec.id = "t";
  rec.respondent_category = AgeCategory{j};
  rec.members.counts = std::move(n);
  rec.contacts.counts = std::move(w);
  rec.strata["weekend"] = false;
  rec.strata["holiday"] = false;
  rec.strata["large_household"] = derive_large_household(rec.members);
  return rec;
}

}  // namespace

TEST_CASE("record validation") {
  auto ok = make_record(3, {2, 0, 0, 0, 1}, {1, 0, 0, 0, 1});
  CHECK_NOTHROW(ok.validate(5));
  CHECK(ok.household_size() == 4);

  // contacts cannot exceed members
  auto over = make_record(3, {1, 0, 0, 0, 0}, {2, 0, 0, 0, 0});
  CHECK_THROWS_AS(over.validate(5), InputError);

  // at least one member besides the respondent
  auto alone = make_record(3, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0});
  CHECK_THROWS_AS(alone.validate(5), InputError);

  auto negative = make_record(3, {-1, 0, 0, 0, 2}, {0, 0, 0, 0, 0});
  CHECK_THROWS_AS(negative.validate(5), InputError);

  auto wrong_k = make_record(3, {1, 0, 0}, {0, 0, 0});
  CHECK_THROWS_AS(wrong_k.validate(5), InputError);

  auto bad_cat = make_record(7, {1, 0, 0, 0, 0}, {0, 0, 0, 0, 0});
  CHECK_THROWS_AS(bad_cat.validate(5), InputError);

  auto odd_stratum = make_record(3, {1, 0, 0, 0, 0}, {0, 0, 0, 0, 0});
  odd_stratum.strata["market_day"] = true;
  CHECK_THROWS_AS(odd_stratum.validate(5), InputError);
}

TEST_CASE("large household stratum derives from total size") {
  // respondent + 2 members = 3, not large
  CHECK_FALSE(derive_large_household(HouseholdComposition{{2, 0, 0, 0, 0}}));
  // respondent + 3 members = 4, large
  CHECK(derive_large_household(HouseholdComposition{{2, 0, 0, 1, 0}}));
}

TEST_CASE("stratum lookup") {
  auto rec = make_record(0, {1, 0, 0, 0, 2}, {0, 0, 0, 0, 1});
  CHECK_FALSE(rec.stratum("weekend"));
  CHECK(rec.stratum("large_household"));
  CHECK_THROWS_AS(rec.stratum("market_day"), InputError);
}
