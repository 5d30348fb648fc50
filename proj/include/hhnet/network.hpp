#ifndef HHNET_NETWORK_HPP
#define HHNET_NETWORK_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hhnet/age_bins.hpp"
#include "hhnet/bootstrap.hpp"
#include "hhnet/parameters.hpp"

namespace hhnet {

// One realization of the within-household network: who is at home and which
// at-home pairs are in contact.  Members are the whole household.
class NetworkState {
 public:
  NetworkState(std::vector<AgeCategory> members, std::vector<std::uint8_t> home);

  int size() const { return int(members_.size()); }
  const std::vector<AgeCategory> &members() const { return members_; }
  bool home(int i) const { return home_[i] != 0; }
  bool edge(int a, int b) const;
  void set_edge(int a, int b, bool present);
  int edge_count() const;

 private:
  std::vector<AgeCategory> members_;
  std::vector<std::uint8_t> home_;
  std::vector<std::uint8_t> adj_;  // k x k, symmetric, zero diagonal
};

// probability of one fully specified state; an edge incident to an away
// member is a contradiction and raises InputError rather than returning 0
double network_probability(const NetworkState &state, const ParameterVector &theta);

struct DistributionEntry {
  NetworkState state;  // class representative when collapsed
  double probability = 0.0;
  long class_size = 1;
  std::optional<std::array<double, 2>> interval;
};

struct NetworkDistribution {
  std::vector<AgeCategory> members;
  bool collapsed = false;
  double min_prob = 0.0;
  // entries with probability >= min_prob, sorted most probable first
  std::vector<DistributionEntry> entries;
  double remainder_probability = 0.0;
  long remainder_classes = 0;
  std::optional<std::array<double, 2>> remainder_interval;
  double total_probability = 0.0;
};

inline constexpr std::uint64_t default_state_budget = std::uint64_t(1) << 26;
inline constexpr int max_network_members = 10;

// Exact distribution over all network states by full enumeration.  With
// collapse_isomorphic, states that differ only by a permutation of
// equal-category members are merged; the representative is the state with the
// lexicographically smallest (home, adjacency) encoding.  Classes below
// min_prob are folded into the remainder.  The total state count is checked
// against max_states up front and overruns raise ResourceError.
NetworkDistribution enumerate_distribution(const std::vector<AgeCategory> &members,
                                           const ParameterVector &theta,
                                           bool collapse_isomorphic,
                                           double min_prob = 0.02,
                                           std::uint64_t max_states = default_state_budget);

// same distribution evaluated at the bootstrap point estimate, with percentile
// intervals across the replicates attached to every retained entry
NetworkDistribution distribution_intervals(const std::vector<AgeCategory> &members,
                                           const BootstrapResult &boots,
                                           bool collapse_isomorphic,
                                           double min_prob = 0.02,
                                           std::uint64_t max_states = default_state_budget);

// graphviz rendering of the retained entries, one cluster per entry, nodes
// ordered oldest first
std::string distribution_to_dot(const NetworkDistribution &dist, const AgeBins &bins);

void write_distribution_csv(std::ostream &out, const NetworkDistribution &dist,
                            const AgeBins &bins);

}  // namespace hhnet

#endif
