#ifndef HHNET_INGEST_HPP
#define HHNET_INGEST_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hhnet/age_bins.hpp"
#include "hhnet/types.hpp"

namespace hhnet {

// which diary day of each respondent to keep
enum class DayFilter { all, first, second };

DayFilter day_filter_from_string(const std::string &s);

// counters and diagnostics accumulated while turning raw rows into records
struct IngestReport {
  long records = 0;
  long clipped_contacts = 0;
  long skipped_rows = 0;
  long rejected_respondent_days = 0;
  long roster_conflicts = 0;
  std::vector<std::string> diagnostics;

  void note(const std::string &msg) { diagnostics.push_back(msg); }
};

// parse the raw diary contact file; unusable rows are skipped and counted
std::vector<DiaryRow> read_diary_csv(std::istream &in, const std::string &source,
                                     IngestReport &report);

// Collapse the rows of one respondent-day into a record.  A contact row is a
// within-household contact when its locations include "home" and its
// frequency is "daily"; such contacts are matched one-to-one against roster
// members of exactly the same age, in roster order, and the unmatched excess
// is clipped and counted.  Returns nothing when the respondent-day cannot be
// used (empty roster, missing respondent age).
std::optional<RespondentRecord> match_household_contacts(
    const std::vector<DiaryRow> &rows, const AgeBins &bins, IngestReport &report);

// full pipeline: parse, group by respondent-day, filter days, match
std::vector<RespondentRecord> ingest_diary(std::istream &in, const std::string &source,
                                           const AgeBins &bins, DayFilter day,
                                           IngestReport &report);

// aggregated records, one row per respondent-day
std::vector<RespondentRecord> read_records_csv(std::istream &in,
                                               const std::string &source,
                                               const AgeBins &bins);
void write_records_csv(std::ostream &out, const std::vector<RespondentRecord> &data);

}  // namespace hhnet

#endif
