#include "hhnet/types.hpp"

#include <numeric>

#include "hhnet/errors.hpp"

namespace hhnet {

int HouseholdComposition::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

void HouseholdComposition::validate(int k) const {
  if (int(counts.size()) != k)
    throw InputError("household composition has wrong number of categories");
  for (int c : counts)
    if (c < 0) throw InputError("household composition counts must be non-negative");
  if (total() < 1)
    throw InputError("household must contain at least one member besides the respondent");
}

int ContactCounts::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

void ContactCounts::validate(int k) const {
  if (int(counts.size()) != k)
    throw InputError("contact counts have wrong number of categories");
  for (int c : counts)
    if (c < 0) throw InputError("contact counts must be non-negative");
}

const std::set<std::string> &known_strata() {
  static const std::set<std::string> names{"weekend", "holiday", "large_household"};
  return names;
}

bool RespondentRecord::stratum(const std::string &name) const {
  auto it = strata.find(name);
  if (it == strata.end())
    throw InputError("record " + id + " has no stratum named " + name);
  return it->second;
}

void RespondentRecord::validate(int k) const {
  members.validate(k);
  contacts.validate(k);
  if (respondent_category.value < 0 || respondent_category.value >= k)
    throw InputError("record " + id + ": respondent category out of range");
  for (int s = 0; s < k; ++s)
    if (contacts.counts[s] > members.counts[s])
      throw InputError("record " + id + ": more contacts than members in a category");
  for (const auto &[name, value] : strata) {
    (void)value;
    if (!known_strata().count(name))
      throw InputError("record " + id + ": unknown stratum " + name);
  }
}

bool derive_large_household(const HouseholdComposition &members) {
  return members.household_size() >= large_household_min_size;
}

}  // namespace hhnet
