#include "hhnet/network.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <ostream>

#include "hhnet/errors.hpp"
#include "hhnet/stats.hpp"

namespace hhnet {

namespace {

int pair_index(int k, int i, int j) {
  // row-major upper triangle, i < j
  return i * k - i * (i + 1) / 2 + (j - i - 1);
}

std::uint64_t binom_u64(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t acc = 1;
  for (int i = 0; i < r; ++i) acc = acc * std::uint64_t(n - i) / std::uint64_t(i + 1);
  return acc;
}

using Key = std::pair<std::uint64_t, std::uint64_t>;

// encoding used for canonical representatives: member i occupies home bit
// (k-1-i) and pair p occupies adjacency bit (npairs-1-p), so lexicographic
// order on the bit strings is plain integer order on the key pair
Key encode_state(int k, std::uint32_t home_mask, const std::vector<std::uint8_t> &adj) {
  const int npairs = k * (k - 1) / 2;
  std::uint64_t hk = 0, ak = 0;
  for (int i = 0; i < k; ++i)
    if (home_mask >> i & 1u) hk |= std::uint64_t(1) << (k - 1 - i);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (adj[i * k + j])
        ak |= std::uint64_t(1) << (npairs - 1 - pair_index(k, i, j));
  return {hk, ak};
}

// all permutations of member positions that preserve the age category
std::vector<std::vector<int>> age_preserving_permutations(
    const std::vector<AgeCategory> &members) {
  const int k = int(members.size());
  std::map<int, std::vector<int>> blocks;
  for (int i = 0; i < k; ++i) blocks[members[i].value].push_back(i);

  std::vector<std::vector<int>> perms{std::vector<int>(k)};
  std::iota(perms[0].begin(), perms[0].end(), 0);
  for (auto &[cat, positions] : blocks) {
    (void)cat;
    std::vector<int> arrangement = positions;
    std::vector<std::vector<int>> grown;
    do {
      for (const auto &base : perms) {
        std::vector<int> perm = base;
        for (std::size_t a = 0; a < positions.size(); ++a)
          perm[positions[a]] = arrangement[a];
        grown.push_back(std::move(perm));
      }
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    perms = std::move(grown);
  }
  return perms;
}

struct ClassOut {
  Key key;
  double prob = 0.0;
  long count = 0;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> states;  // (home_mask, edge bits)
};

struct EnumerationResult {
  std::vector<ClassOut> retained;
  double remainder_prob = 0.0;
  long remainder_classes = 0;
  double total = 0.0;
};

constexpr std::size_t retained_cap = std::size_t(1) << 21;

void check_members(const std::vector<AgeCategory> &members, int k_categories) {
  if (members.empty()) throw InputError("household member list is empty");
  if (int(members.size()) > max_network_members)
    throw InputError("household has more than " +
                     std::to_string(max_network_members) + " members");
  for (AgeCategory c : members)
    if (c.value < 0 || c.value >= k_categories)
      throw InputError("member age category out of range");
}

std::uint64_t total_state_count(int k) {
  std::uint64_t total = 0;
  for (int m = 0; m <= k; ++m)
    total += binom_u64(k, m) << (std::uint64_t(m) * (m - 1) / 2);
  return total;
}

// expand (home_mask, packed at-home edge bits) into a full adjacency matrix
std::vector<std::uint8_t> unpack_adjacency(int k, std::uint32_t home_mask,
                                           std::uint64_t edge_bits) {
  std::vector<std::uint8_t> adj(k * k, 0);
  int bit = 0;
  for (int i = 0; i < k; ++i) {
    if (!(home_mask >> i & 1u)) continue;
    for (int j = i + 1; j < k; ++j) {
      if (!(home_mask >> j & 1u)) continue;
      if (edge_bits >> bit & 1ull) {
        adj[i * k + j] = 1;
        adj[j * k + i] = 1;
      }
      ++bit;
    }
  }
  return adj;
}

double labeled_state_probability(const std::vector<AgeCategory> &members,
                                 std::uint32_t home_mask, std::uint64_t edge_bits,
                                 const ParameterVector &theta) {
  const int k = int(members.size());
  double prob = 1.0;
  for (int i = 0; i < k; ++i) {
    const double p = theta.home(members[i].value);
    prob *= (home_mask >> i & 1u) ? p : 1.0 - p;
  }
  int bit = 0;
  for (int i = 0; i < k; ++i) {
    if (!(home_mask >> i & 1u)) continue;
    for (int j = i + 1; j < k; ++j) {
      if (!(home_mask >> j & 1u)) continue;
      const double p = theta.contact(members[i].value, members[j].value);
      prob *= (edge_bits >> bit & 1ull) ? p : 1.0 - p;
      ++bit;
    }
  }
  return prob;
}

EnumerationResult enumerate_core(const std::vector<AgeCategory> &members,
                                 const ParameterVector &theta, bool collapse,
                                 double min_prob, std::uint64_t max_states,
                                 bool keep_states) {
  check_members(members, theta.categories());
  if (min_prob < 0.0 || min_prob > 1.0)
    throw InputError("minimum probability must lie in [0, 1]");
  const int k = int(members.size());

  const std::uint64_t total_states = total_state_count(k);
  if (total_states > max_states)
    throw ResourceError("enumeration needs " + std::to_string(total_states) +
                        " states but the budget is " + std::to_string(max_states));

  std::vector<std::vector<int>> perms;
  if (collapse) perms = age_preserving_permutations(members);

  EnumerationResult out;
  std::map<Key, ClassOut> classes;  // collapsed accumulation

  std::vector<std::uint8_t> adj(k * k, 0);
  std::vector<int> at_home;
  std::vector<std::pair<int, int>> pairs;

  // canonical key of the current state under the age-preserving group
  auto canonical_key = [&](std::uint32_t home_mask) {
    Key best = encode_state(k, home_mask, adj);
    const int npairs = k * (k - 1) / 2;
    std::vector<std::uint8_t> padj(k * k);
    for (const auto &perm : perms) {
      std::uint64_t hk = 0;
      for (int i = 0; i < k; ++i)
        if (home_mask >> i & 1u) hk |= std::uint64_t(1) << (k - 1 - perm[i]);
      if (hk > best.first) continue;
      std::uint64_t ak = 0;
      for (const auto &[a, b] : pairs) {
        if (!adj[a * k + b]) continue;
        int pa = perm[a], pb = perm[b];
        if (pa > pb) std::swap(pa, pb);
        ak |= std::uint64_t(1) << (npairs - 1 - pair_index(k, pa, pb));
      }
      if (hk < best.first || (hk == best.first && ak < best.second))
        best = {hk, ak};
    }
    return best;
  };

  auto record_state = [&](std::uint32_t home_mask, std::uint64_t edge_bits,
                          double prob) {
    out.total += prob;
    if (collapse) {
      ClassOut &c = classes[canonical_key(home_mask)];
      c.prob += prob;
      c.count += 1;
      if (keep_states) c.states.emplace_back(home_mask, edge_bits);
      if (classes.size() > retained_cap)
        throw ResourceError("too many distinct network classes; lower the state budget");
    } else {
      if (prob >= min_prob) {
        if (out.retained.size() > retained_cap)
          throw ResourceError("too many retained network states; raise the minimum "
                              "probability or lower the state budget");
        ClassOut c;
        c.key = encode_state(k, home_mask, adj);
        c.prob = prob;
        c.count = 1;
        if (keep_states) c.states.emplace_back(home_mask, edge_bits);
        out.retained.push_back(std::move(c));
      } else {
        out.remainder_prob += prob;
        out.remainder_classes += 1;
      }
    }
  };

  for (std::uint32_t home_mask = 0; home_mask < (1u << k); ++home_mask) {
    double home_prob = 1.0;
    for (int i = 0; i < k; ++i) {
      const double p = theta.home(members[i].value);
      home_prob *= (home_mask >> i & 1u) ? p : 1.0 - p;
    }
    at_home.clear();
    for (int i = 0; i < k; ++i)
      if (home_mask >> i & 1u) at_home.push_back(i);
    pairs.clear();
    for (std::size_t a = 0; a < at_home.size(); ++a)
      for (std::size_t b = a + 1; b < at_home.size(); ++b)
        pairs.emplace_back(at_home[a], at_home[b]);

    // depth-first walk over edge subsets with a running product
    const int ne = int(pairs.size());
    std::vector<double> edge_p(ne);
    for (int e = 0; e < ne; ++e)
      edge_p[e] = theta.contact(members[pairs[e].first].value,
                                members[pairs[e].second].value);

    std::uint64_t edge_bits = 0;
    auto dfs = [&](auto &&self, int e, double prob) -> void {
      if (e == ne) {
        record_state(home_mask, edge_bits, prob);
        return;
      }
      const auto [a, b] = pairs[e];
      adj[a * k + b] = adj[b * k + a] = 0;
      self(self, e + 1, prob * (1.0 - edge_p[e]));
      adj[a * k + b] = adj[b * k + a] = 1;
      edge_bits |= std::uint64_t(1) << e;
      self(self, e + 1, prob * edge_p[e]);
      adj[a * k + b] = adj[b * k + a] = 0;
      edge_bits &= ~(std::uint64_t(1) << e);
    };
    dfs(dfs, 0, home_prob);
  }

  if (collapse) {
    for (auto &[key, c] : classes) {
      if (c.prob >= min_prob) {
        c.key = key;
        out.retained.push_back(std::move(c));
      } else {
        out.remainder_prob += c.prob;
        out.remainder_classes += 1;
      }
    }
  }

  std::sort(out.retained.begin(), out.retained.end(),
            [](const ClassOut &x, const ClassOut &y) {
              if (x.prob != y.prob) return x.prob > y.prob;
              return x.key < y.key;
            });
  return out;
}

NetworkState decode_state(const std::vector<AgeCategory> &members, Key key) {
  const int k = int(members.size());
  const int npairs = k * (k - 1) / 2;
  std::vector<std::uint8_t> home(k, 0);
  for (int i = 0; i < k; ++i)
    if (key.first >> (k - 1 - i) & 1ull) home[i] = 1;
  NetworkState state(members, home);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (key.second >> (npairs - 1 - pair_index(k, i, j)) & 1ull)
        state.set_edge(i, j, true);
  return state;
}

NetworkDistribution build_distribution(const std::vector<AgeCategory> &members,
                                       const EnumerationResult &enumerated,
                                       bool collapsed, double min_prob) {
  NetworkDistribution dist;
  dist.members = members;
  dist.collapsed = collapsed;
  dist.min_prob = min_prob;
  dist.remainder_probability = enumerated.remainder_prob;
  dist.remainder_classes = enumerated.remainder_classes;
  dist.total_probability = enumerated.total;
  for (const ClassOut &c : enumerated.retained) {
    DistributionEntry entry{decode_state(members, c.key), c.prob, c.count, {}};
    dist.entries.push_back(std::move(entry));
  }
  return dist;
}

int categories_for_parameter_count(int pcount) {
  for (int k = 1; k <= 64; ++k)
    if (parameter_count(k) == pcount) return k;
  throw InputError("parameter vector length does not match any category count");
}

}  // namespace

NetworkState::NetworkState(std::vector<AgeCategory> members,
                           std::vector<std::uint8_t> home)
    : members_(std::move(members)), home_(std::move(home)) {
  if (members_.empty()) throw InputError("network state needs at least one member");
  if (home_.size() != members_.size())
    throw InputError("home vector does not match the member list");
  for (std::uint8_t h : home_)
    if (h > 1) throw InputError("home markers must be 0 or 1");
  adj_.assign(members_.size() * members_.size(), 0);
}

bool NetworkState::edge(int a, int b) const {
  if (a < 0 || b < 0 || a >= size() || b >= size() || a == b)
    throw InputError("edge endpoints out of range");
  return adj_[a * size() + b] != 0;
}

void NetworkState::set_edge(int a, int b, bool present) {
  if (a < 0 || b < 0 || a >= size() || b >= size() || a == b)
    throw InputError("edge endpoints out of range");
  adj_[a * size() + b] = adj_[b * size() + a] = present ? 1 : 0;
}

int NetworkState::edge_count() const {
  int count = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (adj_[i * size() + j]) ++count;
  return count;
}

double network_probability(const NetworkState &state, const ParameterVector &theta) {
  check_members(state.members(), theta.categories());
  const int k = state.size();
  double prob = 1.0;
  for (int i = 0; i < k; ++i) {
    const double p = theta.home(state.members()[i].value);
    prob *= state.home(i) ? p : 1.0 - p;
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (state.home(i) && state.home(j)) {
        const double p = theta.contact(state.members()[i].value,
                                       state.members()[j].value);
        prob *= state.edge(i, j) ? p : 1.0 - p;
      } else if (state.edge(i, j)) {
        throw InputError("network state has an edge incident to an away member");
      }
    }
  }
  return prob;
}

NetworkDistribution enumerate_distribution(const std::vector<AgeCategory> &members,
                                           const ParameterVector &theta,
                                           bool collapse_isomorphic, double min_prob,
                                           std::uint64_t max_states) {
  EnumerationResult enumerated =
      enumerate_core(members, theta, collapse_isomorphic, min_prob, max_states, false);
  return build_distribution(members, enumerated, collapse_isomorphic, min_prob);
}

NetworkDistribution distribution_intervals(const std::vector<AgeCategory> &members,
                                           const BootstrapResult &boots,
                                           bool collapse_isomorphic, double min_prob,
                                           std::uint64_t max_states) {
  if (boots.mask.stratified())
    throw InputError("network intervals need an unstratified bootstrap");
  const int k_cat = categories_for_parameter_count(boots.mask.param_count());
  auto theta_from = [&](const std::vector<double> &free) {
    ParameterVector theta(k_cat);
    for (int p = 0; p < boots.mask.param_count(); ++p) theta.set(p, free[p]);
    return theta;
  };
  ParameterVector theta = theta_from(boots.point_estimate);

  // per-replicate reevaluation keeps every labeled state of every retained
  // class, so cap the walk harder than plain enumeration
  const std::uint64_t budget = std::min(max_states, std::uint64_t(1) << 22);
  EnumerationResult enumerated =
      enumerate_core(members, theta, collapse_isomorphic, min_prob, budget, true);
  NetworkDistribution dist =
      build_distribution(members, enumerated, collapse_isomorphic, min_prob);

  const std::size_t nrep = boots.replicates.size();
  std::vector<ParameterVector> rep_theta;
  rep_theta.reserve(nrep);
  for (const auto &rep : boots.replicates) rep_theta.push_back(theta_from(rep));

  std::vector<double> probs(nrep);
  std::vector<double> kept_sum(nrep, 0.0);
  for (std::size_t e = 0; e < dist.entries.size(); ++e) {
    const ClassOut &cls = enumerated.retained[e];
    for (std::size_t b = 0; b < nrep; ++b) {
      double p = 0.0;
      for (const auto &[home_mask, edge_bits] : cls.states)
        p += labeled_state_probability(members, home_mask, edge_bits, rep_theta[b]);
      probs[b] = p;
      kept_sum[b] += p;
    }
    std::vector<double> sorted = probs;
    std::sort(sorted.begin(), sorted.end());
    dist.entries[e].interval = {{quantile_sorted(sorted, 0.025),
                                 quantile_sorted(sorted, 0.975)}};
  }
  // the remainder is one minus the retained mass, replicate by replicate
  std::vector<double> rem(nrep);
  for (std::size_t b = 0; b < nrep; ++b) rem[b] = std::max(0.0, 1.0 - kept_sum[b]);
  std::sort(rem.begin(), rem.end());
  if (nrep > 0)
    dist.remainder_interval = {{quantile_sorted(rem, 0.025),
                                quantile_sorted(rem, 0.975)}};
  return dist;
}

namespace {

std::string format_prob(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", p);
  return buf;
}

// display order: oldest categories first, index as tie-break
std::vector<int> display_order(const std::vector<AgeCategory> &members) {
  std::vector<int> order(members.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return members[a].value > members[b].value;
  });
  return order;
}

}  // namespace

std::string distribution_to_dot(const NetworkDistribution &dist, const AgeBins &bins) {
  std::string out = "graph household_networks {\n";
  out += "  node [shape=circle fontsize=10];\n";
  std::string member_list;
  for (std::size_t i = 0; i < dist.members.size(); ++i) {
    if (i) member_list += ", ";
    member_list += bins.label(dist.members[i]);
  }
  out += "  label=\"household: " + member_list + "\";\n";

  const std::vector<int> order = display_order(dist.members);
  for (std::size_t e = 0; e < dist.entries.size(); ++e) {
    const DistributionEntry &entry = dist.entries[e];
    const std::string tag = "s" + std::to_string(e);
    out += "  subgraph cluster_" + std::to_string(e) + " {\n";
    out += "    label=\"p = " + format_prob(entry.probability);
    if (entry.class_size > 1)
      out += " (" + std::to_string(entry.class_size) + " states)";
    if (entry.interval)
      out += " [" + format_prob((*entry.interval)[0]) + ", " +
             format_prob((*entry.interval)[1]) + "]";
    out += "\";\n";
    for (int i : order) {
      out += "    " + tag + "_m" + std::to_string(i) + " [label=\"" +
             bins.label(dist.members[i]) + "\"";
      if (!entry.state.home(i)) out += " style=dashed color=gray";
      out += "];\n";
    }
    for (int i = 0; i < entry.state.size(); ++i)
      for (int j = i + 1; j < entry.state.size(); ++j)
        if (entry.state.edge(i, j))
          out += "    " + tag + "_m" + std::to_string(i) + " -- " + tag + "_m" +
                 std::to_string(j) + ";\n";
    out += "  }\n";
  }
  if (dist.remainder_classes > 0) {
    out += "  subgraph cluster_other {\n    label=\"(other) p = " +
           format_prob(dist.remainder_probability) + " (" +
           std::to_string(dist.remainder_classes) +
           (dist.collapsed ? " classes" : " states");
    if (dist.remainder_interval)
      out += " [" + format_prob((*dist.remainder_interval)[0]) + ", " +
             format_prob((*dist.remainder_interval)[1]) + "]";
    out += ")\";\n  }\n";
  }
  out += "}\n";
  return out;
}

void write_distribution_csv(std::ostream &out, const NetworkDistribution &dist,
                            const AgeBins &bins) {
  (void)bins;
  out << "rank,probability,class_size,home,edges,lo,hi\n";
  for (std::size_t e = 0; e < dist.entries.size(); ++e) {
    const DistributionEntry &entry = dist.entries[e];
    std::string home, edges;
    for (int i = 0; i < entry.state.size(); ++i) {
      if (i) home += ';';
      home += entry.state.home(i) ? '1' : '0';
    }
    for (int i = 0; i < entry.state.size(); ++i)
      for (int j = i + 1; j < entry.state.size(); ++j)
        if (entry.state.edge(i, j)) {
          if (!edges.empty()) edges += ';';
          edges += std::to_string(i) + "-" + std::to_string(j);
        }
    out << (e + 1) << ',' << format_prob(entry.probability) << ','
        << entry.class_size << ',' << home << ',' << edges << ',';
    if (entry.interval)
      out << format_prob((*entry.interval)[0]) << ',' << format_prob((*entry.interval)[1]);
    else
      out << ',';
    out << '\n';
  }
  if (dist.remainder_classes > 0) {
    out << "other," << format_prob(dist.remainder_probability) << ','
        << dist.remainder_classes << ",,,";
    if (dist.remainder_interval)
      out << format_prob((*dist.remainder_interval)[0]) << ','
          << format_prob((*dist.remainder_interval)[1]);
    else
      out << ',';
    out << '\n';
  }
}

}  // namespace hhnet
