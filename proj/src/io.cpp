#include "osr/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace osr {

namespace {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  return os;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  return is;
}

}  // namespace

MatrixFormat format_from_path(const std::string& path) {
  const auto dot = path.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  if (ext == ".mtx") return MatrixFormat::matrix_market;
  if (ext == ".json") return MatrixFormat::json;
  throw std::invalid_argument("unrecognized matrix file extension: " + path);
}

void write_matrix_market(std::ostream& os, const cmat& m) {
  Eigen::Index nnz = 0;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (m(r, c) != cplx(0.0, 0.0)) ++nnz;
  os << "%%MatrixMarket matrix coordinate complex general\n";
  os << m.rows() << ' ' << m.cols() << ' ' << nnz << '\n';
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const cplx v = m(r, c);
      if (v == cplx(0.0, 0.0)) continue;
      os << r + 1 << ' ' << c + 1 << ' ' << format_double(v.real()) << ' '
         << format_double(v.imag()) << '\n';
    }
}

void write_matrix_market(const std::string& path, const cmat& m) {
  auto os = open_output(path);
  write_matrix_market(os, m);
}

cmat read_matrix_market(std::istream& is) {
  std::string line;
  if (!std::getline(is, line))
    throw std::runtime_error("matrix market: missing header");
  std::istringstream header(line);
  std::string stamp, object, format, field, symmetry;
  header >> stamp >> object >> format >> field >> symmetry;
  if (stamp != "%%MatrixMarket" || object != "matrix")
    throw std::runtime_error("matrix market: bad header stamp");
  if (format != "coordinate")
    throw std::runtime_error("matrix market: only coordinate format supported");
  const bool complex_field = field == "complex";
  if (!complex_field && field != "real")
    throw std::runtime_error("matrix market: field must be complex or real");
  if (symmetry != "general")
    throw std::runtime_error("matrix market: only general symmetry supported");

  // Skip comments and blank lines up to the size line.
  while (std::getline(is, line)) {
    if (!line.empty() && line[0] != '%') break;
  }
  std::istringstream size_line(line);
  Eigen::Index rows = 0, cols = 0, nnz = 0;
  if (!(size_line >> rows >> cols >> nnz) || rows < 1 || cols < 1 || nnz < 0)
    throw std::runtime_error("matrix market: bad size line");

  cmat m = cmat::Zero(rows, cols);
  std::vector<bool> seen(static_cast<size_t>(rows) * cols, false);
  for (Eigen::Index t = 0; t < nnz; ++t) {
    Eigen::Index r = 0, c = 0;
    double re = 0.0, im = 0.0;
    if (!(is >> r >> c >> re)) throw std::runtime_error("matrix market: truncated entry");
    if (complex_field && !(is >> im))
      throw std::runtime_error("matrix market: truncated complex entry");
    if (r < 1 || r > rows || c < 1 || c > cols)
      throw std::runtime_error("matrix market: entry index out of range");
    const size_t key = static_cast<size_t>(r - 1) * cols + (c - 1);
    if (seen[key]) throw std::runtime_error("matrix market: duplicate entry");
    seen[key] = true;
    m(r - 1, c - 1) = cplx(re, im);
  }
  if (!m.allFinite())
    throw std::runtime_error("matrix market: non-finite entries");
  return m;
}

cmat read_matrix_market(const std::string& path) {
  auto is = open_input(path);
  return read_matrix_market(is);
}

void write_json(std::ostream& os, const BipartiteOperator& op,
                const std::string& construction, const Certificate* cert) {
  json j;
  j["dimA"] = op.dim_a;
  j["dimB"] = op.dim_b;
  j["construction"] = construction;
  if (cert) {
    json c;
    c["construction"] = cert->construction;
    c["requested_rank"] = cert->requested_rank;
    c["numeric_rank"] = cert->numeric_rank;
    if (cert->exact_rank) c["exact_rank"] = *cert->exact_rank;
    c["unitarity_residual"] = cert->unitarity_residual;
    c["parameters"] = cert->parameters;
    c["pass"] = cert->pass;
    j["certificate"] = std::move(c);
  }
  json entries = json::array();
  for (Eigen::Index r = 0; r < op.mat.rows(); ++r)
    for (Eigen::Index c = 0; c < op.mat.cols(); ++c)
      entries.push_back({op.mat(r, c).real(), op.mat(r, c).imag()});
  j["entries"] = std::move(entries);
  os << j.dump(2) << '\n';
}

void write_json(const std::string& path, const BipartiteOperator& op,
                const std::string& construction, const Certificate* cert) {
  auto os = open_output(path);
  write_json(os, op, construction, cert);
}

StoredOperator read_json(std::istream& is) {
  json j;
  is >> j;
  const int dim_a = j.at("dimA").get<int>();
  const int dim_b = j.at("dimB").get<int>();
  const auto& entries = j.at("entries");
  const Eigen::Index total = static_cast<Eigen::Index>(dim_a) * dim_b;
  if (static_cast<Eigen::Index>(entries.size()) != total * total)
    throw std::runtime_error("json matrix: entry count does not match dimensions");
  cmat m(total, total);
  Eigen::Index t = 0;
  for (Eigen::Index r = 0; r < total; ++r)
    for (Eigen::Index c = 0; c < total; ++c, ++t)
      m(r, c) = cplx(entries[t].at(0).get<double>(), entries[t].at(1).get<double>());
  StoredOperator out{BipartiteOperator(dim_a, dim_b, std::move(m)),
                     j.value("construction", "")};
  return out;
}

StoredOperator read_json(const std::string& path) {
  auto is = open_input(path);
  return read_json(is);
}

}  // namespace osr
