#ifndef SMR_MATRIX_MARKET_HPP
#define SMR_MATRIX_MARKET_HPP

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "smr/dense.hpp"
#include "smr/errors.hpp"

namespace smr {

// Minimal Matrix Market support: real matrices in coordinate or array format,
// general or symmetric kind. Values are written with 17 significant digits so
// doubles round-trip exactly.

namespace detail {

inline std::string mm_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

inline void mm_format_value(std::ostream& os, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  os << buf;
}

struct mm_header {
  bool coordinate = true;
  bool symmetric = false;
};

inline mm_header mm_read_header(std::istream& is, const std::string& path) {
  std::string line;
  require(static_cast<bool>(std::getline(is, line)), errc::io_error, "empty file: " + path);
  std::istringstream hs(line);
  std::string banner, object, format, field, symmetry;
  hs >> banner >> object >> format >> field >> symmetry;
  require(banner == "%%MatrixMarket", errc::io_error, "missing MatrixMarket banner: " + path);
  object = mm_lower(object);
  format = mm_lower(format);
  field = mm_lower(field);
  symmetry = mm_lower(symmetry);
  require(object == "matrix", errc::io_error, "unsupported MatrixMarket object in " + path);
  require(format == "coordinate" || format == "array", errc::io_error,
          "unsupported MatrixMarket format in " + path);
  require(field == "real" || field == "integer", errc::io_error,
          "unsupported MatrixMarket field in " + path);
  require(symmetry == "general" || symmetry == "symmetric", errc::io_error,
          "unsupported MatrixMarket symmetry in " + path);
  return {format == "coordinate", symmetry == "symmetric"};
}

inline bool mm_next_data_line(std::istream& is, std::string& line) {
  while (std::getline(is, line)) {
    size_t pos = line.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) continue;
    if (line[pos] == '%') continue;
    return true;
  }
  return false;
}

}  // namespace detail

inline void write_matrix_market(const std::string& path, const dense_symmetric& a) {
  std::ofstream os(path);
  require(static_cast<bool>(os), errc::io_error, "cannot open for writing: " + path);
  const int n = a.n();
  // Count stored entries of the lower triangle (symmetric coordinate format).
  int nnz = 0;
  for (int j = 0; j < n; ++j)
    for (int i = j; i < n; ++i)
      if (a(i, j) != 0.0) ++nnz;
  os << "%%MatrixMarket matrix coordinate real symmetric\n";
  os << n << " " << n << " " << nnz << "\n";
  for (int j = 0; j < n; ++j) {
    for (int i = j; i < n; ++i) {
      if (a(i, j) == 0.0) continue;
      os << (i + 1) << " " << (j + 1) << " ";
      detail::mm_format_value(os, a(i, j));
      os << "\n";
    }
  }
  require(static_cast<bool>(os), errc::io_error, "write failed: " + path);
}

inline dense_symmetric read_matrix_market(const std::string& path) {
  std::ifstream is(path);
  require(static_cast<bool>(is), errc::io_error, "cannot open: " + path);
  detail::mm_header h = detail::mm_read_header(is, path);
  std::string line;
  require(detail::mm_next_data_line(is, line), errc::io_error, "missing size line: " + path);
  std::istringstream szs(line);
  long rows = 0, cols = 0, nnz = 0;
  if (h.coordinate) {
    szs >> rows >> cols >> nnz;
  } else {
    szs >> rows >> cols;
  }
  require(rows >= 1 && cols == rows, errc::io_error, "expected a square matrix: " + path);
  Matrix m = Matrix::Zero(rows, cols);
  if (h.coordinate) {
    for (long k = 0; k < nnz; ++k) {
      require(detail::mm_next_data_line(is, line), errc::io_error, "truncated entries: " + path);
      std::istringstream es(line);
      long i = 0, j = 0;
      double v = 0.0;
      es >> i >> j >> v;
      require(i >= 1 && i <= rows && j >= 1 && j <= cols, errc::io_error,
              "entry out of range: " + path);
      m(i - 1, j - 1) = v;
      if (h.symmetric) m(j - 1, i - 1) = v;
    }
  } else {
    // Array format: column-major dense listing; symmetric kind stores the
    // lower triangle only.
    for (long j = 0; j < cols; ++j) {
      for (long i = h.symmetric ? j : 0; i < rows; ++i) {
        require(detail::mm_next_data_line(is, line), errc::io_error, "truncated array: " + path);
        double v = std::stod(line);
        m(i, j) = v;
        if (h.symmetric) m(j, i) = v;
      }
    }
  }
  if (!h.symmetric) {
    double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    require(asym <= 1e-10 * scale, errc::validation_failed,
            "general matrix is not numerically symmetric: " + path);
  }
  return dense_symmetric(m);
}

inline void write_matrix_market_vector(const std::string& path, const Vector& v) {
  std::ofstream os(path);
  require(static_cast<bool>(os), errc::io_error, "cannot open for writing: " + path);
  os << "%%MatrixMarket matrix array real general\n";
  os << v.size() << " 1\n";
  for (int i = 0; i < v.size(); ++i) {
    detail::mm_format_value(os, v(i));
    os << "\n";
  }
  require(static_cast<bool>(os), errc::io_error, "write failed: " + path);
}

inline Vector read_matrix_market_vector(const std::string& path) {
  std::ifstream is(path);
  require(static_cast<bool>(is), errc::io_error, "cannot open: " + path);
  detail::mm_header h = detail::mm_read_header(is, path);
  require(!h.coordinate, errc::io_error, "vector files must use array format: " + path);
  std::string line;
  require(detail::mm_next_data_line(is, line), errc::io_error, "missing size line: " + path);
  std::istringstream szs(line);
  long rows = 0, cols = 0;
  szs >> rows >> cols;
  require(rows >= 1 && cols == 1, errc::io_error, "expected an n-by-1 array: " + path);
  Vector v(rows);
  for (long i = 0; i < rows; ++i) {
    require(detail::mm_next_data_line(is, line), errc::io_error, "truncated array: " + path);
    v(i) = std::stod(line);
  }
  return v;
}

}  // namespace smr

#endif  // SMR_MATRIX_MARKET_HPP
