// Command-line front end: construct bipartite unitaries of a requested
// operator Schmidt rank, measure ranks of stored matrices, verify
// certificates, sweep dimension ranges, and enumerate permutation tuples.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "osr/io.hpp"
#include "osr/oracle.hpp"
#include "osr/synth.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_impossible = 2;
constexpr int exit_verification = 3;

void print_certificate(const osr::Certificate& cert) {
  std::cout << "construction:       " << cert.construction << '\n'
            << "requested rank:     " << cert.requested_rank << '\n'
            << "numeric rank:       " << cert.numeric_rank << '\n';
  if (cert.exact_rank) std::cout << "exact rank:         " << *cert.exact_rank << '\n';
  std::cout << "unitarity residual: " << cert.unitarity_residual << '\n';
  if (!cert.parameters.empty())
    std::cout << "parameters:         " << cert.parameters << '\n';
  std::cout << "verdict:            " << (cert.pass ? "pass" : "FAIL") << '\n';
}

void write_operator(const std::string& path, std::optional<std::string> format,
                    const osr::BipartiteOperator& op,
                    const osr::Certificate* cert) {
  osr::MatrixFormat fmt =
      format ? (*format == "json" ? osr::MatrixFormat::json
                                  : osr::MatrixFormat::matrix_market)
             : osr::format_from_path(path);
  if (fmt == osr::MatrixFormat::matrix_market)
    osr::write_matrix_market(path, op.mat);
  else
    osr::write_json(path, op, cert ? cert->construction : "", cert);
}

// Loads an operator from disk. Matrix market files carry no factor split, so
// the caller must supply -n/-m for them; json files store it.
osr::BipartiteOperator load_operator(const std::string& path,
                                     std::optional<int> n,
                                     std::optional<int> m) {
  if (osr::format_from_path(path) == osr::MatrixFormat::json) {
    osr::StoredOperator stored = osr::read_json(path);
    if ((n && *n != stored.op.dim_a) || (m && *m != stored.op.dim_b))
      throw std::runtime_error("-n/-m disagree with the stored dimensions");
    return std::move(stored.op);
  }
  if (!n || !m)
    throw std::runtime_error("matrix market input requires -n and -m");
  osr::cmat mat = osr::read_matrix_market(path);
  return {*n, *m, std::move(mat)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bipartite unitary operators of prescribed operator Schmidt rank"};
  app.require_subcommand(1);

  int n = 0, m = 0, r = 0;
  double tol = osr::default_rank_tol;
  double eps = osr::default_dft_eps;
  std::uint64_t seed = 0;
  std::optional<std::string> out_path;
  std::optional<std::string> format;

  auto* synth = app.add_subcommand("synth", "construct a unitary of rank r");
  synth->add_option("-n", n, "first factor dimension")->required();
  synth->add_option("-m", m, "second factor dimension")->required();
  synth->add_option("-r", r, "target operator Schmidt rank")->required();
  synth->add_option("-o,--out", out_path, "output matrix file (.mtx or .json)");
  synth->add_option("--format", format, "override format: mtx or json")
      ->check(CLI::IsMember({"mtx", "json"}));
  synth->add_option("--tol", tol, "relative rank tolerance");
  synth->add_option("--eps", eps, "DFT non-zero threshold (fourier path)");
  synth->add_option("--seed", seed, "random seed (fourier path)");

  std::string in_path;
  std::optional<int> opt_n, opt_m;

  auto* rank = app.add_subcommand("rank", "operator Schmidt rank of a stored matrix");
  rank->add_option("path", in_path, "input matrix file")->required();
  rank->add_option("-n", opt_n, "first factor dimension (required for .mtx)");
  rank->add_option("-m", opt_m, "second factor dimension (required for .mtx)");
  rank->add_option("--tol", tol, "relative rank tolerance");

  int expected_rank = 0;
  auto* verify = app.add_subcommand("verify", "verify a stored matrix against an expected rank");
  verify->add_option("path", in_path, "input matrix file")->required();
  verify->add_option("-r", expected_rank, "expected operator Schmidt rank")->required();
  verify->add_option("-n", opt_n, "first factor dimension (required for .mtx)");
  verify->add_option("-m", opt_m, "second factor dimension (required for .mtx)");
  verify->add_option("--tol", tol, "relative rank tolerance");

  int range_min = 2, range_max = 5;
  auto* sweep = app.add_subcommand("sweep", "synthesize and verify all achievable ranks over a dimension range");
  sweep->add_option("--min", range_min, "smallest factor dimension");
  sweep->add_option("--max", range_max, "largest factor dimension");
  sweep->add_option("-o,--out", out_path, "CSV output path (default: stdout)");
  sweep->add_option("--tol", tol, "relative rank tolerance");
  sweep->add_option("--eps", eps, "DFT non-zero threshold");
  sweep->add_option("--seed", seed, "random seed");

  long samples = 0;
  auto* brute = app.add_subcommand("brute", "attained permutation-unitary ranks (exhaustive for n <= 3)");
  brute->add_option("-n", n, "tuple size")->required();
  brute->add_option("--samples", samples, "random sample count (required for n > 3)");
  brute->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (synth->parsed()) {
      osr::SynthesisRequest req{n, m, r, {tol, osr::default_unitary_tol, eps, seed}};
      osr::SynthesisResult result;
      try {
        result = osr::synthesize(req);
      } catch (const osr::RankThreeImpossible& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_impossible;
      }
      print_certificate(result.cert);
      if (out_path) {
        write_operator(*out_path, format, result.op, &result.cert);
        std::cout << "wrote:              " << *out_path << '\n';
      }
      return result.cert.pass ? exit_ok : exit_verification;
    }

    if (rank->parsed()) {
      const osr::BipartiteOperator op = load_operator(in_path, opt_n, opt_m);
      std::cout << "schmidt rank: " << osr::schmidt_rank(op, tol) << '\n';
      std::cout << "realignment singular values:";
      for (double s : osr::singular_values(osr::realign(op))) std::cout << ' ' << s;
      std::cout << '\n';
      return exit_ok;
    }

    if (verify->parsed()) {
      const osr::BipartiteOperator op = load_operator(in_path, opt_n, opt_m);
      const osr::Certificate cert = osr::verify(op, expected_rank, tol);
      print_certificate(cert);
      return cert.pass ? exit_ok : exit_verification;
    }

    if (sweep->parsed()) {
      const auto rows =
          osr::sweep(range_min, range_max, range_min, range_max,
                     {tol, osr::default_unitary_tol, eps, seed});
      const std::string csv = osr::sweep_csv(rows);
      if (out_path) {
        std::ofstream os(*out_path);
        if (!os) throw std::runtime_error("cannot open for writing: " + *out_path);
        os << csv;
      } else {
        std::cout << csv;
      }
      for (const auto& row : rows)
        if (!row.pass) return exit_verification;
      return exit_ok;
    }

    if (brute->parsed()) {
      const osr::RankSurvey survey = (n <= 3 && samples == 0)
                                         ? osr::brute_force_perm_ranks(n)
                                         : osr::sample_perm_ranks(n, samples, seed);
      std::cout << (survey.exhaustive ? "exhaustive" : "sampled") << " over "
                << survey.pairs_examined << " tuple pairs, n = " << survey.n << '\n';
      std::cout << "attained ranks:";
      for (const auto& [rank_value, witness] : survey.witnesses)
        std::cout << ' ' << rank_value;
      std::cout << '\n';
      for (const auto& [rank_value, witness] : survey.witnesses) {
        std::cout << "rank " << rank_value << ": alpha=";
        for (const auto& perm : witness.alpha.components()) {
          std::cout << '(';
          for (size_t i = 0; i < perm.images().size(); ++i)
            std::cout << (i ? "," : "") << perm.images()[i];
          std::cout << ')';
        }
        std::cout << " beta=";
        for (const auto& perm : witness.beta.components()) {
          std::cout << '(';
          for (size_t i = 0; i < perm.images().size(); ++i)
            std::cout << (i ? "," : "") << perm.images()[i];
          std::cout << ')';
        }
        std::cout << '\n';
      }
      return exit_ok;
    }
  } catch (const osr::RankOutOfRange& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
