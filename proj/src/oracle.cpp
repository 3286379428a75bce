#include "osr/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace osr {

namespace {

// All n! permutations of {0,...,n-1} in lexicographic order.
std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Odometer over the n component slots; rightmost slot fastest, which walks
// the tuples in lexicographic order given lexicographically sorted parts.
class TupleEnumerator {
 public:
  TupleEnumerator(const std::vector<Permutation>& parts, int slots)
      : parts_(parts), indices_(slots, 0) {}

  PermTuple current() const {
    std::vector<Permutation> comps;
    comps.reserve(indices_.size());
    for (int idx : indices_) comps.push_back(parts_[idx]);
    return PermTuple(std::move(comps));
  }

  bool advance() {
    for (int slot = static_cast<int>(indices_.size()) - 1; slot >= 0; --slot) {
      if (++indices_[slot] < static_cast<int>(parts_.size())) return true;
      indices_[slot] = 0;
    }
    return false;
  }

 private:
  const std::vector<Permutation>& parts_;
  std::vector<int> indices_;
};

}  // namespace

RankSurvey brute_force_perm_ranks(int n) {
  if (n < 2 || n > 3)
    throw std::invalid_argument(
        "brute_force_perm_ranks: exhaustive enumeration is feasible for "
        "n in {2,3} only; use sample_perm_ranks for larger n");
  const std::vector<Permutation> parts = all_permutations(n);
  RankSurvey survey;
  survey.n = n;
  survey.exhaustive = true;
  TupleEnumerator alpha_it(parts, n);
  do {
    const PermTuple alpha = alpha_it.current();
    TupleEnumerator beta_it(parts, n);
    do {
      const PermTuple beta = beta_it.current();
      ++survey.pairs_examined;
      const int rank = count_pairs(alpha, beta);
      // First hit in enumeration order is the lexicographically smallest.
      survey.witnesses.try_emplace(rank, TuplePair{alpha, beta});
    } while (beta_it.advance());
  } while (alpha_it.advance());
  return survey;
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  for (int i = n - 1; i > 0; --i) {
    // Rejection-free enough at these sizes; bias from modulo is negligible
    // for n <= 64 against a 64-bit word, but rejection keeps it exact.
    const std::uint64_t bound = static_cast<std::uint64_t>(i) + 1;
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    std::uint64_t draw;
    do {
      draw = rng();
    } while (draw >= limit);
    std::swap(img[i], img[draw % bound]);
  }
  return Permutation(std::move(img));
}

PermTuple random_perm_tuple(int n, std::mt19937_64& rng) {
  std::vector<Permutation> comps;
  comps.reserve(n);
  for (int k = 0; k < n; ++k) comps.push_back(random_permutation(n, rng));
  return PermTuple(std::move(comps));
}

namespace {

bool tuple_pair_less(const TuplePair& a, const TuplePair& b) {
  auto key = [](const TuplePair& t) {
    std::vector<int> flat;
    for (const auto& p : t.alpha.components())
      flat.insert(flat.end(), p.images().begin(), p.images().end());
    for (const auto& p : t.beta.components())
      flat.insert(flat.end(), p.images().begin(), p.images().end());
    return flat;
  };
  return key(a) < key(b);
}

}  // namespace

RankSurvey sample_perm_ranks(int n, long samples, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("sample_perm_ranks: n must be >= 2");
  if (samples < 1)
    throw std::invalid_argument("sample_perm_ranks: need at least one sample");
  std::mt19937_64 rng(seed);
  RankSurvey survey;
  survey.n = n;
  survey.exhaustive = false;
  for (long s = 0; s < samples; ++s) {
    TuplePair pair{random_perm_tuple(n, rng), random_perm_tuple(n, rng)};
    ++survey.pairs_examined;
    const int rank = count_pairs(pair.alpha, pair.beta);
    auto it = survey.witnesses.find(rank);
    if (it == survey.witnesses.end()) {
      survey.witnesses.emplace(rank, std::move(pair));
    } else if (tuple_pair_less(pair, it->second)) {
      it->second = std::move(pair);
    }
  }
  return survey;
}

CrossCheckReport cross_check_perm(int samples, int n, std::uint64_t seed,
                                  double tol) {
  if (n < 2 || n > 8)
    throw std::invalid_argument("cross_check_perm: n must lie in {2,...,8}");
  std::mt19937_64 rng(seed);
  CrossCheckReport report;
  report.n = n;
  report.samples = samples;
  for (int s = 0; s < samples; ++s) {
    TuplePair pair{random_perm_tuple(n, rng), random_perm_tuple(n, rng)};
    const int exact = count_pairs(pair.alpha, pair.beta);
    const int numeric = schmidt_rank(perm_unitary(pair.alpha, pair.beta), tol);
    if (exact != numeric)
      report.disagreements.push_back({std::move(pair), exact, numeric});
  }
  return report;
}

Certificate verify(const BipartiteOperator& u, int expected_rank, double tol) {
  Certificate cert;
  cert.construction = "external";
  cert.requested_rank = expected_rank;
  cert.unitarity_residual = unitarity_residual(u.mat);
  if (u.mat.norm() == 0.0) {
    cert.numeric_rank = 0;
    cert.parameters = "zero operator";
    cert.pass = false;
    return cert;
  }
  cert.numeric_rank = schmidt_rank(u, tol);
  cert.pass = cert.numeric_rank == expected_rank &&
              cert.unitarity_residual < default_unitary_tol;
  return cert;
}

std::vector<SweepRow> sweep(int n_min, int n_max, int m_min, int m_max,
                            const NumericPolicy& policy) {
  if (n_min < 2 || m_min < 2 || n_max < n_min || m_max < m_min)
    throw std::invalid_argument("sweep: malformed dimension ranges");
  std::vector<SweepRow> rows;
  for (int n = n_min; n <= n_max; ++n)
    for (int m = m_min; m <= m_max; ++m) {
      std::vector<int> ranks = achievable_ranks(n, m);
      if (n == 2 && m == 2) ranks.insert(ranks.begin() + 2, 3);  // expected-impossible row
      for (int r : ranks) {
        SweepRow row;
        row.n = n;
        row.m = m;
        row.r = r;
        try {
          const SynthesisResult result = synthesize({n, m, r, policy});
          row.construction = result.cert.construction;
          row.unitarity_residual = result.cert.unitarity_residual;
          row.numeric_rank = result.cert.numeric_rank;
          row.exact_rank = result.cert.exact_rank;
          row.pass = result.cert.pass;
          if (n == 2 && m == 2 && r == 3) {
            row.pass = false;
            row.note = "expected RankThreeImpossible, got a matrix";
          }
        } catch (const RankThreeImpossible&) {
          row.construction = "impossible";
          row.pass = n == 2 && m == 2 && r == 3;
          row.note = "rank-3-impossible";
        } catch (const std::exception& e) {
          row.construction = "error";
          row.pass = false;
          row.note = e.what();
        }
        rows.push_back(std::move(row));
      }
    }
  return rows;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "n,m,r,construction,unitarity_residual,numeric_rank,exact_rank,pass\n";
  for (const SweepRow& row : rows) {
    os << row.n << ',' << row.m << ',' << row.r << ',' << row.construction
       << ',';
    if (row.unitarity_residual) os << format_double(*row.unitarity_residual);
    os << ',';
    if (row.numeric_rank) os << *row.numeric_rank;
    os << ',';
    if (row.exact_rank) os << *row.exact_rank;
    os << ',' << (row.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace osr
