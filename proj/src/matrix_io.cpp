#include "qskew/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace qskew {

namespace {

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

[[noreturn]] void parse_error(const std::string& what, std::size_t line) {
  throw Error("matrix format: " + what + " (line " + std::to_string(line) + ")");
}

}  // namespace

std::string to_string(MatrixKind kind) {
  return kind == MatrixKind::density ? "density" : "hermitian";
}

void write_matrix(std::ostream& os, const Matrix& m, MatrixKind kind) {
  if (m.rows() != m.cols()) throw DimensionError("write_matrix: matrix must be square");
  os << "dim=" << m.rows() << " kind=" << to_string(kind) << '\n';
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      os << r << ' ' << c << ' ' << format17(m(r, c).real()) << ' ' << format17(m(r, c).imag())
         << '\n';
    }
  }
}

MatrixRecord read_matrix(std::istream& is) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(is, line)) parse_error("missing header", lineno);

  long long dim = -1;
  char kind_buf[32] = {0};
  if (std::sscanf(line.c_str(), "dim=%lld kind=%31s", &dim, kind_buf) != 2 || dim <= 0) {
    parse_error("bad header '" + line + "'", lineno);
  }
  MatrixRecord rec;
  const std::string kind = kind_buf;
  if (kind == "hermitian") {
    rec.kind = MatrixKind::hermitian;
  } else if (kind == "density") {
    rec.kind = MatrixKind::density;
  } else {
    parse_error("unknown kind '" + kind + "'", lineno);
  }

  rec.matrix = Matrix::Zero(dim, dim);
  std::vector<bool> seen(static_cast<std::size_t>(dim * dim), false);
  long long count = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    long long r = 0, c = 0;
    double re = 0.0, im = 0.0;
    std::string extra;
    if (!(ls >> r >> c >> re >> im) || (ls >> extra)) parse_error("expected 'row col re im'", lineno);
    if (r < 0 || c < 0 || r >= dim || c >= dim) parse_error("index out of range", lineno);
    const auto flat = static_cast<std::size_t>(r * dim + c);
    if (seen[flat]) parse_error("duplicate entry", lineno);
    seen[flat] = true;
    rec.matrix(r, c) = cplx(re, im);
    ++count;
  }
  if (count != dim * dim) {
    parse_error("expected " + std::to_string(dim * dim) + " entries, got " + std::to_string(count),
                lineno);
  }
  return rec;
}

void save_matrix(const std::filesystem::path& path, const Matrix& m, MatrixKind kind) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open " + path.string() + " for writing");
  write_matrix(os, m, kind);
}

MatrixRecord load_matrix(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open " + path.string());
  return read_matrix(is);
}

}  // namespace qskew
