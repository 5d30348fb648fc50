#include "hhnet/ingest.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>

#include "hhnet/csv.hpp"
#include "hhnet/errors.hpp"

namespace hhnet {

DayFilter day_filter_from_string(const std::string &s) {
  if (s == "all") return DayFilter::all;
  if (s == "first") return DayFilter::first;
  if (s == "second") return DayFilter::second;
  throw InputError("unknown day filter: " + s + " (expected all, first or second)");
}

std::vector<DiaryRow> read_diary_csv(std::istream &in, const std::string &source,
                                     IngestReport &report) {
  CsvReader reader(in, source);
  for (const char *col : {"respondent_id", "respondent_age_years",
                          "household_member_ages_years", "contact_age_years",
                          "contact_frequency", "locations", "diary_date",
                          "weekend_flag", "holiday_flag"})
    if (!reader.has_column(col))
      throw InputError(source + ": missing column " + col);

  std::vector<DiaryRow> rows;
  CsvRow raw;
  for (;;) {
    try {
      if (!reader.next(raw)) break;
      DiaryRow row;
      row.line = raw.line;
      row.respondent_id = raw.get("respondent_id");
      if (row.respondent_id.empty())
        throw InputError("line " + std::to_string(raw.line) + ": empty respondent_id");
      row.respondent_age_years =
          parse_int(raw.get("respondent_age_years"), "respondent_age_years", raw.line);
      for (const std::string &a :
           split_list(raw.get("household_member_ages_years"), ';')) {
        int age = parse_int(a, "household member age", raw.line);
        if (age < 0)
          throw InputError("line " + std::to_string(raw.line) +
                           ": negative household member age");
        row.household_member_ages_years.push_back(age);
      }
      if (!raw.empty("contact_age_years")) {
        int age = parse_int(raw.get("contact_age_years"), "contact_age_years", raw.line);
        if (age < 0)
          throw InputError("line " + std::to_string(raw.line) + ": negative contact age");
        row.contact_age_years = age;
      }
      row.contact_frequency = raw.get("contact_frequency");
      for (const std::string &loc : split_list(raw.get("locations"), ';'))
        row.locations.insert(loc);
      row.diary_date = raw.get("diary_date");
      row.weekend = parse_flag(raw.get("weekend_flag"), "weekend_flag", raw.line);
      row.holiday = parse_flag(raw.get("holiday_flag"), "holiday_flag", raw.line);
      rows.push_back(std::move(row));
    } catch (const InputError &e) {
      ++report.skipped_rows;
      report.note(std::string(e.what()));
    }
  }
  return rows;
}

namespace {

bool is_household_contact(const DiaryRow &row) {
  return row.contact_age_years.has_value() && row.locations.count("home") > 0 &&
         row.contact_frequency == "daily";
}

std::string group_label(const std::vector<DiaryRow> &rows) {
  const DiaryRow &r = rows.front();
  if (r.diary_date.empty()) return r.respondent_id;
  return r.respondent_id + ":" + r.diary_date;
}

}  // namespace

std::optional<RespondentRecord> match_household_contacts(
    const std::vector<DiaryRow> &rows, const AgeBins &bins, IngestReport &report) {
  if (rows.empty()) return std::nullopt;
  const std::string label = group_label(rows);
  const DiaryRow &first = rows.front();

  // the roster must agree across the rows of one respondent-day; the first
  // occurrence wins when it does not
  {
    std::vector<int> expected = first.household_member_ages_years;
    std::sort(expected.begin(), expected.end());
    for (const DiaryRow &row : rows) {
      std::vector<int> got = row.household_member_ages_years;
      std::sort(got.begin(), got.end());
      if (got != expected) {
        ++report.roster_conflicts;
        report.note(label + ": household roster differs between rows, keeping the first");
        break;
      }
    }
  }
  for (const DiaryRow &row : rows) {
    if (row.respondent_age_years != first.respondent_age_years) {
      report.note(label + ": respondent age differs between rows, keeping the first");
      break;
    }
  }
  for (const DiaryRow &row : rows) {
    if (row.weekend != first.weekend || row.holiday != first.holiday) {
      report.note(label + ": weekend/holiday flags differ between rows, keeping the first");
      break;
    }
  }

  if (first.respondent_age_years < 0) {
    ++report.rejected_respondent_days;
    report.note(label + ": rejected, missing respondent age");
    return std::nullopt;
  }
  if (first.household_member_ages_years.empty()) {
    ++report.rejected_respondent_days;
    report.note(label + ": rejected, empty household roster");
    return std::nullopt;
  }

  const int k = bins.count();
  RespondentRecord rec;
  rec.id = label;
  rec.respondent_category = bins.bin(first.respondent_age_years);
  rec.members.counts.assign(k, 0);
  rec.contacts.counts.assign(k, 0);
  for (int age : first.household_member_ages_years)
    ++rec.members.counts[bins.bin(age).value];

  std::vector<bool> matched(first.household_member_ages_years.size(), false);
  for (const DiaryRow &row : rows) {
    if (!is_household_contact(row)) continue;
    const int age = *row.contact_age_years;
    bool found = false;
    for (std::size_t m = 0; m < matched.size(); ++m) {
      if (!matched[m] && first.household_member_ages_years[m] == age) {
        matched[m] = true;
        ++rec.contacts.counts[bins.bin(age).value];
        found = true;
        break;
      }
    }
    if (!found) {
      ++report.clipped_contacts;
      report.note(label + " line " + std::to_string(row.line) +
                  ": home daily contact aged " + std::to_string(age) +
                  " has no unmatched roster member, clipped");
    }
  }

  rec.strata["weekend"] = first.weekend;
  rec.strata["holiday"] = first.holiday;
  rec.strata["large_household"] = derive_large_household(rec.members);
  rec.validate(k);
  ++report.records;
  return rec;
}

std::vector<RespondentRecord> ingest_diary(std::istream &in, const std::string &source,
                                           const AgeBins &bins, DayFilter day,
                                           IngestReport &report) {
  std::vector<DiaryRow> rows = read_diary_csv(in, source, report);

  // group rows by respondent and diary date; map keys give a stable order
  std::map<std::string, std::map<std::string, std::vector<DiaryRow>>> grouped;
  for (DiaryRow &row : rows)
    grouped[row.respondent_id][row.diary_date].push_back(std::move(row));

  std::vector<RespondentRecord> records;
  for (auto &[id, by_date] : grouped) {
    (void)id;
    int index = 0;
    for (auto &[date, group] : by_date) {
      (void)date;
      const bool keep = day == DayFilter::all || (day == DayFilter::first && index == 0) ||
                        (day == DayFilter::second && index == 1);
      if (keep) {
        auto rec = match_household_contacts(group, bins, report);
        if (rec) records.push_back(std::move(*rec));
      }
      ++index;
    }
  }
  return records;
}

namespace {

int record_flag(const RespondentRecord &rec, const std::string &name) {
  auto it = rec.strata.find(name);
  return it != rec.strata.end() && it->second ? 1 : 0;
}

}  // namespace

std::vector<RespondentRecord> read_records_csv(std::istream &in,
                                               const std::string &source,
                                               const AgeBins &bins) {
  const int k = bins.count();
  CsvReader reader(in, source);
  for (const char *col : {"id", "j", "weekend", "holiday"})
    if (!reader.has_column(col))
      throw InputError(source + ": missing column " + std::string(col));
  for (int s = 1; s <= k; ++s) {
    if (!reader.has_column("n_" + std::to_string(s)) ||
        !reader.has_column("w_" + std::to_string(s)))
      throw InputError(source + ": expected columns n_1..n_" + std::to_string(k) +
                       " and w_1..w_" + std::to_string(k));
  }
  if (reader.has_column("n_" + std::to_string(k + 1)))
    throw InputError(source + ": more composition columns than age categories");

  std::vector<RespondentRecord> records;
  CsvRow row;
  while (reader.next(row)) {
    RespondentRecord rec;
    rec.id = row.get("id");
    const int j = parse_int(row.get("j"), "j", row.line);
    if (j < 1 || j > k)
      throw InputError(source + " line " + std::to_string(row.line) +
                       ": respondent category out of range");
    rec.respondent_category = AgeCategory{j - 1};
    rec.members.counts.resize(k);
    rec.contacts.counts.resize(k);
    for (int s = 0; s < k; ++s) {
      rec.members.counts[s] =
          parse_int(row.get("n_" + std::to_string(s + 1)), "n", row.line);
      rec.contacts.counts[s] =
          parse_int(row.get("w_" + std::to_string(s + 1)), "w", row.line);
    }
    rec.strata["weekend"] = parse_flag(row.get("weekend"), "weekend", row.line);
    rec.strata["holiday"] = parse_flag(row.get("holiday"), "holiday", row.line);
    rec.strata["large_household"] = derive_large_household(rec.members);
    try {
      rec.validate(k);
    } catch (const InputError &e) {
      throw InputError(source + " line " + std::to_string(row.line) + ": " + e.what());
    }
    records.push_back(std::move(rec));
  }
  return records;
}

void write_records_csv(std::ostream &out, const std::vector<RespondentRecord> &data) {
  const int k = data.empty() ? 0 : data.front().members.categories();
  std::vector<std::string> header{"id", "j"};
  for (int s = 1; s <= k; ++s) header.push_back("n_" + std::to_string(s));
  for (int s = 1; s <= k; ++s) header.push_back("w_" + std::to_string(s));
  header.push_back("weekend");
  header.push_back("holiday");
  out << csv_join(header) << "\n";
  for (const RespondentRecord &rec : data) {
    std::vector<std::string> fields{rec.id,
                                    std::to_string(rec.respondent_category.value + 1)};
    for (int c : rec.members.counts) fields.push_back(std::to_string(c));
    for (int c : rec.contacts.counts) fields.push_back(std::to_string(c));
    fields.push_back(std::to_string(record_flag(rec, "weekend")));
    fields.push_back(std::to_string(record_flag(rec, "holiday")));
    out << csv_join(fields) << "\n";
  }
}

}  // namespace hhnet
