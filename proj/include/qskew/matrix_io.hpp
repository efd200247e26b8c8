// matrix_io.hpp: line-oriented matrix exchange format
//
//   dim=N kind=hermitian|density
//   row col re im        (N*N lines, row-major, zero-based indices)
//
// Values are written with 17 significant digits so a write/read cycle is
// bit-exact.

#pragma once

#include "qskew/types.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace qskew {

enum class MatrixKind { hermitian, density };

struct MatrixRecord {
  MatrixKind kind = MatrixKind::hermitian;
  Matrix matrix;
};

std::string to_string(MatrixKind kind);

void write_matrix(std::ostream& os, const Matrix& m, MatrixKind kind);
MatrixRecord read_matrix(std::istream& is);

void save_matrix(const std::filesystem::path& path, const Matrix& m, MatrixKind kind);
MatrixRecord load_matrix(const std::filesystem::path& path);

}  // namespace qskew
