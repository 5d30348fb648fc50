#ifndef HHNET_AGE_BINS_HPP
#define HHNET_AGE_BINS_HPP

#include <compare>
#include <string>
#include <vector>

namespace hhnet {

// zero-based age category index
struct AgeCategory {
  int value = 0;
  auto operator<=>(const AgeCategory &) const = default;
};

// Partition of ages into left-closed bins.  Boundaries {6,12,19,36} give the
// default five categories 0-5, 6-11, 12-18, 19-35, 36+.
class AgeBins {
 public:
  AgeBins();  // default boundaries {6, 12, 19, 36}
  explicit AgeBins(std::vector<int> boundaries);

  int count() const { return int(boundaries_.size()) + 1; }
  const std::vector<int> &boundaries() const { return boundaries_; }

  AgeCategory bin(int age_years) const;
  const std::string &label(AgeCategory c) const;
  const std::vector<std::string> &labels() const { return labels_; }
  // inverse of label(); throws InputError on unknown labels
  AgeCategory category_from_label(const std::string &label) const;

  bool operator==(const AgeBins &other) const {
    return boundaries_ == other.boundaries_;
  }

 private:
  std::vector<int> boundaries_;
  std::vector<std::string> labels_;
};

// age in completed years -> category under the given bins
AgeCategory bin_age(int age_years, const AgeBins &bins);

}  // namespace hhnet

#endif
