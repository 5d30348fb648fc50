#ifndef HHNET_PARAMETERS_HPP
#define HHNET_PARAMETERS_HPP

#include <string>
#include <vector>

#include "hhnet/age_bins.hpp"

namespace hhnet {

// Model parameters for K age categories: K at-home probabilities plus the
// upper triangle of the symmetric K x K conditional contact matrix, all in
// [0, 1].  Flat layout: [0, K) at-home, then contact pairs (r <= s) row-major,
// so K = 5 gives 20 parameters.
class ParameterVector {
 public:
  explicit ParameterVector(int k);
  static ParameterVector constant(int k, double home, double contact);

  int categories() const { return k_; }
  int size() const { return int(values_.size()); }

  double home(int v) const { return values_[home_index(v)]; }
  void set_home(int v, double p);

  double contact(int r, int s) const { return values_[contact_index(r, s)]; }
  void set_contact(int r, int s, double p);

  double operator[](int flat) const { return values_[flat]; }
  void set(int flat, double p);
  const std::vector<double> &flat() const { return values_; }

  int home_index(int v) const;
  int contact_index(int r, int s) const;  // symmetric in (r, s)

  bool operator==(const ParameterVector &other) const {
    return k_ == other.k_ && values_ == other.values_;
  }

 private:
  int k_;
  std::vector<double> values_;

  void check_range(double p) const;
};

// parameter count for K categories: K + K(K+1)/2
int parameter_count(int k);

// flat-order display names: home.<label>, then contact.<label>x<label>
std::vector<std::string> parameter_names(const AgeBins &bins);

// inverse of parameter_names for a single name; throws InputError
int parameter_index_from_name(const std::string &name, const AgeBins &bins);

// fit starting point used throughout: at-home 0.9, contact 0.8
ParameterVector default_init(int k);

}  // namespace hhnet

#endif
