#include "hhnet/sharing.hpp"

#include "hhnet/errors.hpp"
#include "hhnet/types.hpp"

namespace hhnet {

SharingMask SharingMask::identity(int param_count) {
  SharingMask m;
  m.param_count_ = param_count;
  m.free_count_ = param_count;
  m.slots_.resize(param_count);
  for (int p = 0; p < param_count; ++p) m.slots_[p] = p;
  return m;
}

SharingMask SharingMask::split(int param_count, std::string stratum,
                               const std::set<int> &tied) {
  if (!known_strata().count(stratum))
    throw InputError("unknown stratum: " + stratum);
  for (int p : tied)
    if (p < 0 || p >= param_count)
      throw InputError("tied parameter index out of range");
  SharingMask m;
  m.stratum_ = std::move(stratum);
  m.param_count_ = param_count;
  m.tied_ = tied;
  m.slots_.assign(2 * param_count, -1);
  int next = 0;
  for (int p = 0; p < param_count; ++p) {
    m.slots_[p] = next++;  // stratum value 0
    if (tied.count(p)) m.slots_[param_count + p] = m.slots_[p];
  }
  for (int p = 0; p < param_count; ++p)
    if (m.slots_[param_count + p] < 0) m.slots_[param_count + p] = next++;
  m.free_count_ = next;
  return m;
}

int SharingMask::slot(int stratum_value, int param) const {
  if (param < 0 || param >= param_count_)
    throw InputError("parameter index out of range");
  if (stratum_value < 0 || stratum_value >= stratum_values())
    throw InputError("stratum value out of range");
  return slots_[stratum_value * param_count_ + param];
}

std::vector<ParameterVector> SharingMask::expand(const std::vector<double> &free,
                                                 int k) const {
  if (int(free.size()) != free_count_)
    throw InputError("free parameter vector has the wrong length");
  if (parameter_count(k) != param_count_)
    throw InputError("mask was built for a different number of categories");
  std::vector<ParameterVector> out;
  for (int v = 0; v < stratum_values(); ++v) {
    ParameterVector theta(k);
    for (int p = 0; p < param_count_; ++p) theta.set(p, free[slot(v, p)]);
    out.push_back(std::move(theta));
  }
  return out;
}

std::vector<double> SharingMask::collapse(const ParameterVector &theta) const {
  if (theta.size() != param_count_)
    throw InputError("mask was built for a different number of parameters");
  std::vector<double> free(free_count_, 0.0);
  for (int v = 0; v < stratum_values(); ++v)
    for (int p = 0; p < param_count_; ++p) free[slot(v, p)] = theta[p];
  return free;
}

}  // namespace hhnet
