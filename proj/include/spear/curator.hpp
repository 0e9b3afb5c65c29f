#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spear/trajectory.hpp"

namespace spear {

struct CuratorConfig {
  std::vector<std::string> small_ensemble;
  std::vector<std::string> large_ensemble;
  double tau = 0.9;
  double ratio_easy = 4.0;
  double ratio_medium = 3.0;
  double ratio_hard = 3.0;
  size_t sample_size = 0;
  uint64_t seed = 0;
};

// agent_key -> trajectory_id -> step success rate in [0,1]
using EnsembleResults = std::map<std::string, std::map<std::string, double>>;

struct DifficultyVote {
  std::string trajectory_id;
  std::map<std::string, double> agent_sr;
  int vote_count = 0;
  std::optional<Difficulty> label;  // absent iff vote_count == 0
};

// A trajectory survives iff at least one small-ensemble agent fails it
// (trajectory SR <= tau). Throws MissingResult on coverage gaps.
std::vector<std::string> value_filter(const std::vector<std::string>& trajectory_ids,
                                      const EnsembleResults& small_results, double tau);

std::vector<DifficultyVote> vote_and_label(const std::vector<std::string>& survivors,
                                           const EnsembleResults& large_results, double tau);

struct StratumQuota {
  Difficulty label = Difficulty::Easy;
  size_t requested = 0;  // largest-remainder quota before shortage handling
  size_t taken = 0;
  size_t available = 0;
};

struct SampleResult {
  std::vector<std::string> trajectory_ids;  // sorted
  std::map<std::string, Difficulty> labels;
  std::vector<StratumQuota> quotas;
  std::vector<std::string> warnings;  // ShortStratum notes
};

// Largest-remainder quotas over (r_E, r_M, r_H); shortfalls are redistributed
// proportionally to strata that still have headroom.
SampleResult stratified_sample(const std::vector<DifficultyVote>& voted, double ratio_easy,
                               double ratio_medium, double ratio_hard, size_t sample_size,
                               uint64_t seed);

// Quota arithmetic exposed for direct testing: returns per-label target
// counts for the given availability.
std::array<size_t, 3> quota_split(size_t sample_size, const std::array<double, 3>& ratio);
std::array<size_t, 3> apply_shortage(std::array<size_t, 3> quotas,
                                     const std::array<size_t, 3>& available,
                                     const std::array<double, 3>& ratio,
                                     std::vector<std::string>* warnings);

// Full Algorithm-1 style pipeline over precomputed ensemble results.
SampleResult curate(const std::vector<std::string>& trajectory_ids,
                    const EnsembleResults& small_results, const EnsembleResults& large_results,
                    const CuratorConfig& config);

}  // namespace spear
