#ifndef HHNET_TYPES_HPP
#define HHNET_TYPES_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hhnet/age_bins.hpp"

namespace hhnet {

// counts of household members by age category, excluding the respondent
struct HouseholdComposition {
  std::vector<int> counts;

  int categories() const { return int(counts.size()); }
  int total() const;
  // household size including the respondent
  int household_size() const { return total() + 1; }
  void validate(int k) const;
};

// reported within-household contacts by age category of the contacted member
struct ContactCounts {
  std::vector<int> counts;

  int total() const;
  void validate(int k) const;
};

// names of the binary strata a record can carry
const std::set<std::string> &known_strata();

// one respondent-day: composition, matched contacts, stratum flags
struct RespondentRecord {
  std::string id;
  AgeCategory respondent_category;
  HouseholdComposition members;
  ContactCounts contacts;
  std::map<std::string, bool> strata;

  int household_size() const { return members.household_size(); }
  bool stratum(const std::string &name) const;
  // throws InputError when counts are inconsistent (w_s > n_s, size < 2, ...)
  void validate(int k) const;
};

// one parsed line of a diary contact file; contact fields are empty for
// roster-only rows that merely declare the household
struct DiaryRow {
  long line = 0;
  std::string respondent_id;
  int respondent_age_years = -1;
  std::vector<int> household_member_ages_years;
  std::optional<int> contact_age_years;
  std::string contact_frequency;
  std::set<std::string> locations;
  std::string diary_date;
  bool weekend = false;
  bool holiday = false;
};

// households with at least this many members (respondent included) are
// "large" for stratification purposes
inline constexpr int large_household_min_size = 4;

bool derive_large_household(const HouseholdComposition &members);

}  // namespace hhnet

#endif
