#include <doctest.h>

#include <sstream>

#include "osr/oracle.hpp"
#include "test_helpers.hpp"

using namespace osr;

TEST_CASE("exhaustive n=2 enumeration attains exactly {2,4}") {
  const RankSurvey survey = brute_force_perm_ranks(2);
  CHECK(survey.exhaustive);
  CHECK(survey.pairs_examined == 16);  // ((2!)^2)^2 tuple pairs
  REQUIRE(survey.witnesses.size() == 2);
  CHECK(survey.witnesses.count(2) == 1);
  CHECK(survey.witnesses.count(4) == 1);
  CHECK(survey.witnesses.count(3) == 0);

  // witnesses actually achieve their rank
  for (const auto& [rank, pair] : survey.witnesses)
    CHECK(count_pairs(pair.alpha, pair.beta) == rank);

  // identity tuples witness the full rank and are lexicographically minimal
  const auto& full = survey.witnesses.at(4);
  CHECK(full.alpha == PermTuple::identities(2));
  CHECK(full.beta == PermTuple::identities(2));
}

TEST_CASE("exhaustive n=3 enumeration attains the expected ranks") {
  const RankSurvey survey = brute_force_perm_ranks(3);
  CHECK(survey.pairs_examined == 46656);  // ((3!)^3)^2
  for (int rank : {3, 5, 6, 7, 9}) CHECK(survey.witnesses.count(rank) == 1);
  for (const auto& [rank, pair] : survey.witnesses)
    CHECK(count_pairs(pair.alpha, pair.beta) == rank);
}

TEST_CASE("brute force rejects infeasible sizes") {
  CHECK_THROWS_AS(brute_force_perm_ranks(4), std::invalid_argument);
}

TEST_CASE("sampling survey agrees with count_pairs and is seed-deterministic") {
  const RankSurvey a = sample_perm_ranks(4, 300, 42);
  const RankSurvey b = sample_perm_ranks(4, 300, 42);
  CHECK_FALSE(a.exhaustive);
  CHECK(a.pairs_examined == 300);
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  for (const auto& [rank, pair] : a.witnesses) {
    CHECK(count_pairs(pair.alpha, pair.beta) == rank);
    CHECK(b.witnesses.count(rank) == 1);
  }
}

TEST_CASE("cross_check_perm finds no disagreements") {
  for (int n = 2; n <= 6; ++n) {
    const CrossCheckReport report = cross_check_perm(40, n, 7 * n);
    CHECK(report.samples == 40);
    CHECK(report.disagreements.empty());
  }
}

TEST_CASE("verify passes correct claims and fails wrong ones") {
  const BipartiteOperator id{3, 3, cmat::Identity(9, 9)};
  CHECK(verify(id, 1).pass);
  CHECK_FALSE(verify(id, 2).pass);

  cmat swap = cmat::Zero(9, 9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) swap(i * 3 + j, j * 3 + i) = 1.0;
  CHECK(verify({3, 3, swap}, 9).pass);

  cmat contraction = cmat::Identity(4, 4);
  contraction(1, 1) = 0.5;
  const Certificate cert = verify({2, 2, contraction}, 1);
  CHECK_FALSE(cert.pass);
  CHECK(cert.unitarity_residual > 0.1);
}

TEST_CASE("sweep emits one passing row per achievable rank") {
  const auto rows = sweep(2, 3, 2, 3);
  // (2,2): 3 achievable + 1 impossible; (2,3),(3,2): 4 each; (3,3): 9
  CHECK(rows.size() == 4 + 4 + 4 + 9);
  for (const auto& row : rows) {
    CHECK(row.pass);
    if (row.n == 2 && row.m == 2 && row.r == 3) {
      CHECK(row.construction == "impossible");
      CHECK(row.note == "rank-3-impossible");
    } else {
      CHECK(row.numeric_rank == row.r);
    }
  }
}

TEST_CASE("sweep_csv carries the fixed column schema") {
  const auto rows = sweep(2, 2, 2, 2);
  const std::string csv = sweep_csv(rows);
  std::istringstream is(csv);
  std::string header;
  std::getline(is, header);
  CHECK(header == "n,m,r,construction,unitarity_residual,numeric_rank,exact_rank,pass");
  std::string line;
  int count = 0;
  while (std::getline(is, line)) {
    ++count;
    CHECK(line.find("2,2,") == 0);
  }
  CHECK(count == 4);
  CHECK(csv.find("2,2,3,impossible,,,,true") != std::string::npos);
}

TEST_CASE("sweep is deterministic for a fixed seed") {
  const NumericPolicy policy{};
  CHECK(sweep_csv(sweep(2, 4, 2, 4, policy)) == sweep_csv(sweep(2, 4, 2, 4, policy)));
}
