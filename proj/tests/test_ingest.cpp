#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hhnet/errors.hpp"
#include "hhnet/ingest.hpp"

using namespace hhnet;

namespace {

std::ifstream open_fixture(const std::string &name) {
  std::ifstream in(std::string(HHNET_DATA_DIR) + "/fixtures/" + name);
  REQUIRE(in.good());
  return in;
}

}  // namespace

TEST_CASE("diary fixture, all days") {
  AgeBins bins;
  IngestReport report;
  auto in = open_fixture("diary_small.csv");
  auto records = ingest_diary(in, "diary_small.csv", bins, DayFilter::all, report);

  REQUIRE(records.size() == 4);
  CHECK(report.records == 4);
  CHECK(report.clipped_contacts == 1);   // second age-4 contact of r1
  CHECK(report.skipped_rows == 1);       // r5, unparseable respondent age
  CHECK(report.rejected_respondent_days == 1);  // r3, empty roster
  CHECK(report.roster_conflicts == 0);

  const auto &a = records[0];
  CHECK(a.id == "r1:2005-10-12");
  CHECK(a.respondent_category.value == 3);
  CHECK(a.members.counts == std::vector<int>{1, 1, 0, 1, 0});
  // work-location and excess contacts do not count
  CHECK(a.contacts.counts == std::vector<int>{1, 1, 0, 1, 0});
  CHECK_FALSE(a.stratum("weekend"));
  CHECK(a.stratum("large_household"));

  const auto &b = records[1];
  CHECK(b.id == "r1:2005-10-13");
  CHECK(b.contacts.total() == 0);
  CHECK(b.members.counts == a.members.counts);

  const auto &c = records[2];
  CHECK(c.id == "r2:2005-10-15");
  CHECK(c.respondent_category.value == 4);
  // the weekly row is not a household contact, the daily one is
  CHECK(c.members.counts == std::vector<int>{0, 0, 0, 0, 1});
  CHECK(c.contacts.counts == std::vector<int>{0, 0, 0, 0, 1});
  CHECK(c.stratum("weekend"));

  const auto &d = records[3];
  CHECK(d.id == "r4:2005-10-16");
  CHECK(d.respondent_category.value == 1);
  CHECK(d.members.counts == std::vector<int>{0, 0, 0, 0, 2});
  CHECK(d.contacts.total() == 0);
  CHECK(d.stratum("holiday"));
  CHECK_FALSE(d.stratum("large_household"));
}

TEST_CASE("day filters") {
  AgeBins bins;

  SUBCASE("first day only") {
    IngestReport report;
    auto in = open_fixture("diary_small.csv");
    auto records = ingest_diary(in, "diary_small.csv", bins, DayFilter::first, report);
    REQUIRE(records.size() == 3);
    CHECK(records[0].id == "r1:2005-10-12");
    CHECK(records[1].id == "r2:2005-10-15");
    CHECK(records[2].id == "r4:2005-10-16");
  }

  SUBCASE("second day only") {
    IngestReport report;
    auto in = open_fixture("diary_small.csv");
    auto records = ingest_diary(in, "diary_small.csv", bins, DayFilter::second, report);
    REQUIRE(records.size() == 1);
    CHECK(records[0].id == "r1:2005-10-13");
  }

  CHECK(day_filter_from_string("all") == DayFilter::all);
  CHECK(day_filter_from_string("first") == DayFilter::first);
  CHECK_THROWS_AS(day_filter_from_string("both"), InputError);
}

TEST_CASE("roster conflicts keep the first roster") {
  AgeBins bins;
  IngestReport report;
  std::istringstream in(
      "respondent_id,respondent_age_years,household_member_ages_years,"
      "contact_age_years,contact_frequency,locations,diary_date,weekend_flag,holiday_flag\n"
      "r9,40,5;37,5,daily,home,2005-10-12,0,0\n"
      "r9,40,5;38,38,daily,home,2005-10-12,0,0\n");
  auto records = ingest_diary(in, "mem", bins, DayFilter::all, report);
  REQUIRE(records.size() == 1);
  CHECK(report.roster_conflicts == 1);
  // roster 5;37: the age-38 contact finds no member and is clipped
  CHECK(report.clipped_contacts == 1);
  CHECK(records[0].members.counts == std::vector<int>{1, 0, 0, 0, 1});
  CHECK(records[0].contacts.counts == std::vector<int>{1, 0, 0, 0, 0});
}

TEST_CASE("diary header validation") {
  AgeBins bins;
  IngestReport report;
  std::istringstream in("respondent_id,respondent_age_years\nr1,30\n");
  CHECK_THROWS_AS(ingest_diary(in, "mem", bins, DayFilter::all, report), InputError);
}

TEST_CASE("aggregated records round trip") {
  AgeBins bins;
  auto in = open_fixture("records_10.csv");
  auto records = read_records_csv(in, "records_10.csv", bins);
  REQUIRE(records.size() == 10);
  CHECK(records[0].id == "h01");
  CHECK(records[0].respondent_category.value == 0);  // file stores 1-based
  CHECK(records[0].members.counts == std::vector<int>{1, 0, 0, 2, 0});
  CHECK(records[1].stratum("holiday"));
  CHECK(records[2].stratum("weekend"));
  CHECK(records[9].stratum("large_household"));

  std::ostringstream out;
  write_records_csv(out, records);
  std::istringstream back(out.str());
  auto again = read_records_csv(back, "roundtrip", bins);
  REQUIRE(again.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(again[i].id == records[i].id);
    CHECK(again[i].respondent_category == records[i].respondent_category);
    CHECK(again[i].members.counts == records[i].members.counts);
    CHECK(again[i].contacts.counts == records[i].contacts.counts);
    CHECK(again[i].strata == records[i].strata);
  }
}

TEST_CASE("aggregated records validation") {
  AgeBins bins;

  SUBCASE("category out of range") {
    std::istringstream in(
        "id,j,n_1,n_2,n_3,n_4,n_5,w_1,w_2,w_3,w_4,w_5,weekend,holiday\n"
        "x,6,1,0,0,0,0,0,0,0,0,0,0,0\n");
    CHECK_THROWS_AS(read_records_csv(in, "mem", bins), InputError);
  }

  SUBCASE("contacts exceed members") {
    std::istringstream in(
        "id,j,n_1,n_2,n_3,n_4,n_5,w_1,w_2,w_3,w_4,w_5,weekend,holiday\n"
        "x,1,1,0,0,0,0,2,0,0,0,0,0,0\n");
    CHECK_THROWS_WITH_AS(read_records_csv(in, "mem", bins),
                         doctest::Contains("line 2"), InputError);
  }

  SUBCASE("column count must match the bins") {
    std::istringstream in(
        "id,j,n_1,n_2,n_3,n_4,n_5,n_6,w_1,w_2,w_3,w_4,w_5,w_6,weekend,holiday\n"
        "x,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0\n");
    CHECK_THROWS_AS(read_records_csv(in, "mem", bins), InputError);
  }
}
