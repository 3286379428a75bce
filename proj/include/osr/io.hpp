#pragma once

#include <iosfwd>
#include <string>

#include "osr/bipartite.hpp"
#include "osr/synth.hpp"

namespace osr {

enum class MatrixFormat { matrix_market, json };

// Chooses by extension: .mtx -> matrix_market, .json -> json.
MatrixFormat format_from_path(const std::string& path);

// Matrix Market "coordinate complex general" with 1-based indices and
// 17-significant-digit decimals, so complex entries round-trip bitwise.
// Only non-zero entries are stored.
void write_matrix_market(std::ostream& os, const cmat& m);
void write_matrix_market(const std::string& path, const cmat& m);
cmat read_matrix_market(std::istream& is);
cmat read_matrix_market(const std::string& path);

struct StoredOperator {
  BipartiteOperator op;
  std::string construction;
};

// JSON envelope {dimA, dimB, construction, certificate?, entries} with
// entries as [re, im] pairs in row-major order.
void write_json(std::ostream& os, const BipartiteOperator& op,
                const std::string& construction,
                const Certificate* cert = nullptr);
void write_json(const std::string& path, const BipartiteOperator& op,
                const std::string& construction,
                const Certificate* cert = nullptr);
StoredOperator read_json(std::istream& is);
StoredOperator read_json(const std::string& path);

}  // namespace osr
