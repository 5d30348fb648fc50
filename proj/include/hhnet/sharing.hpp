#ifndef HHNET_SHARING_HPP
#define HHNET_SHARING_HPP

#include <set>
#include <string>
#include <vector>

#include "hhnet/parameters.hpp"

namespace hhnet {

// Maps (stratum value, parameter index) to a free-slot index, describing
// which parameters the two strata share.  The identity mask has no stratum
// and one slot per parameter; a split mask duplicates every parameter except
// the tied ones, which keep a single shared slot.
class SharingMask {
 public:
  static SharingMask identity(int param_count);
  static SharingMask split(int param_count, std::string stratum,
                           const std::set<int> &tied);

  bool stratified() const { return !stratum_.empty(); }
  const std::string &stratum() const { return stratum_; }
  int param_count() const { return param_count_; }
  int stratum_values() const { return stratified() ? 2 : 1; }
  int free_count() const { return free_count_; }
  const std::set<int> &tied() const { return tied_; }

  int slot(int stratum_value, int param) const;

  // free values -> one parameter vector per stratum value
  std::vector<ParameterVector> expand(const std::vector<double> &free, int k) const;
  // starting free values from a single parameter vector (copied to both strata)
  std::vector<double> collapse(const ParameterVector &theta) const;

 private:
  std::string stratum_;
  int param_count_ = 0;
  int free_count_ = 0;
  std::set<int> tied_;
  std::vector<int> slots_;  // [value * param_count + param]
};

}  // namespace hhnet

#endif
