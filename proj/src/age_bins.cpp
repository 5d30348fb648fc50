#include "hhnet/age_bins.hpp"

#include <algorithm>

#include "hhnet/errors.hpp"

namespace hhnet {

namespace {

std::vector<std::string> make_labels(const std::vector<int> &b) {
  std::vector<std::string> labels;
  int lo = 0;
  for (int hi : b) {
    labels.push_back(std::to_string(lo) + "-" + std::to_string(hi - 1));
    lo = hi;
  }
  labels.push_back(std::to_string(lo) + "+");
  return labels;
}

}  // namespace

AgeBins::AgeBins() : AgeBins(std::vector<int>{6, 12, 19, 36}) {}

AgeBins::AgeBins(std::vector<int> boundaries) : boundaries_(std::move(boundaries)) {
  if (boundaries_.empty())
    throw InputError("age bins: need at least one boundary");
  int prev = 0;
  for (int b : boundaries_) {
    if (b <= prev)
      throw InputError("age bins: boundaries must be positive and strictly increasing");
    prev = b;
  }
  labels_ = make_labels(boundaries_);
}

AgeCategory AgeBins::bin(int age_years) const {
  if (age_years < 0) throw InputError("age must be non-negative");
  auto it = std::upper_bound(boundaries_.begin(), boundaries_.end(), age_years);
  return AgeCategory{int(it - boundaries_.begin())};
}

const std::string &AgeBins::label(AgeCategory c) const {
  if (c.value < 0 || c.value >= count())
    throw InputError("age category out of range");
  return labels_[c.value];
}

AgeCategory AgeBins::category_from_label(const std::string &label) const {
  for (int i = 0; i < count(); ++i)
    if (labels_[i] == label) return AgeCategory{i};
  throw InputError("unknown age category label: " + label);
}

AgeCategory bin_age(int age_years, const AgeBins &bins) {
  return bins.bin(age_years);
}

}  // namespace hhnet
