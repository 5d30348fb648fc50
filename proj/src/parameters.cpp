#include "hhnet/parameters.hpp"

#include <cmath>

#include "hhnet/errors.hpp"

namespace hhnet {

ParameterVector::ParameterVector(int k) : k_(k) {
  if (k < 1) throw InputError("parameter vector needs at least one category");
  values_.assign(parameter_count(k), 0.0);
}

ParameterVector ParameterVector::constant(int k, double home, double contact) {
  ParameterVector p(k);
  for (int v = 0; v < k; ++v) p.set_home(v, home);
  for (int r = 0; r < k; ++r)
    for (int s = r; s < k; ++s) p.set_contact(r, s, contact);
  return p;
}

void ParameterVector::check_range(double p) const {
  if (!(p >= 0.0 && p <= 1.0) || std::isnan(p))
    throw InputError("probability parameter outside [0, 1]");
}

void ParameterVector::set_home(int v, double p) {
  check_range(p);
  values_[home_index(v)] = p;
}

void ParameterVector::set_contact(int r, int s, double p) {
  check_range(p);
  values_[contact_index(r, s)] = p;
}

void ParameterVector::set(int flat, double p) {
  check_range(p);
  if (flat < 0 || flat >= size()) throw InputError("parameter index out of range");
  values_[flat] = p;
}

int ParameterVector::home_index(int v) const {
  if (v < 0 || v >= k_) throw InputError("age category out of range");
  return v;
}

int ParameterVector::contact_index(int r, int s) const {
  if (r < 0 || r >= k_ || s < 0 || s >= k_)
    throw InputError("age category out of range");
  if (r > s) std::swap(r, s);
  // offset of row r in the packed upper triangle
  return k_ + r * k_ - r * (r - 1) / 2 + (s - r);
}

int parameter_count(int k) { return k + k * (k + 1) / 2; }

std::vector<std::string> parameter_names(const AgeBins &bins) {
  const int k = bins.count();
  std::vector<std::string> names;
  names.reserve(parameter_count(k));
  for (int v = 0; v < k; ++v)
    names.push_back("home." + bins.label(AgeCategory{v}));
  for (int r = 0; r < k; ++r)
    for (int s = r; s < k; ++s)
      names.push_back("contact." + bins.label(AgeCategory{r}) + "x" +
                      bins.label(AgeCategory{s}));
  return names;
}

int parameter_index_from_name(const std::string &name, const AgeBins &bins) {
  const int k = bins.count();
  ParameterVector probe(k);
  if (name.rfind("home.", 0) == 0) {
    AgeCategory v = bins.category_from_label(name.substr(5));
    return probe.home_index(v.value);
  }
  if (name.rfind("contact.", 0) == 0) {
    const std::string body = name.substr(8);
    auto x = body.find('x');
    if (x == std::string::npos)
      throw InputError("malformed contact parameter name: " + name);
    AgeCategory r = bins.category_from_label(body.substr(0, x));
    AgeCategory s = bins.category_from_label(body.substr(x + 1));
    return probe.contact_index(r.value, s.value);
  }
  throw InputError("unknown parameter name: " + name);
}

ParameterVector default_init(int k) {
  return ParameterVector::constant(k, 0.9, 0.8);
}

}  // namespace hhnet
