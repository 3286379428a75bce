#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "osr/permutations.hpp"
#include "osr/synth.hpp"

namespace osr {

struct RankSurvey {
  int n = 0;
  bool exhaustive = false;
  long pairs_examined = 0;
  // Attained pair-count values, each with its lexicographically smallest
  // witness (first encountered in enumeration order; sampling keeps the
  // smallest seen).
  std::map<int, TuplePair> witnesses;
};

// Enumerates every tuple pair in (S_n^n)^2 and records the attained
// pair-count values. Feasible for n <= 3 only ((n!)^{2n} pairs); throws for
// larger n.
RankSurvey brute_force_perm_ranks(int n);

// Seeded random sampling alternative for n > 3.
RankSurvey sample_perm_ranks(int n, long samples, std::uint64_t seed);

struct CrossCheckReport {
  int n = 0;
  int samples = 0;
  struct Disagreement {
    TuplePair pair;
    int exact = 0;
    int numeric = 0;
  };
  std::vector<Disagreement> disagreements;
};

// Samples random tuple pairs and compares the exact pair count against the
// numeric Schmidt rank of the associated unitary. Any disagreement is a
// defect in one of the two routes.
CrossCheckReport cross_check_perm(int samples, int n, std::uint64_t seed,
                                  double tol = default_rank_tol);

// Uniformly random permutation via Fisher-Yates from a seeded generator.
Permutation random_permutation(int n, std::mt19937_64& rng);
PermTuple random_perm_tuple(int n, std::mt19937_64& rng);

// Certificate for an externally supplied operator: unitarity residual,
// numeric Schmidt rank, pass/fail against the expected rank.
Certificate verify(const BipartiteOperator& u, int expected_rank,
                   double tol = default_rank_tol);

struct SweepRow {
  int n = 0;
  int m = 0;
  int r = 0;
  std::string construction;
  std::optional<double> unitarity_residual;
  std::optional<int> numeric_rank;
  std::optional<int> exact_rank;
  bool pass = false;
  std::string note;
};

// One row per (n, m, r) with r achievable, plus an expected-impossible row
// for (2,2,3) whenever (2,2) is inside the range. Failures are recorded in
// rows, never thrown.
std::vector<SweepRow> sweep(int n_min, int n_max, int m_min, int m_max,
                            const NumericPolicy& policy = {});

std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace osr
