// Dense row-major matrices over a coefficient ring, and the naive product
// that every fast scheme is checked against.

#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fmm/ring.hpp"

namespace fmm {

/// Shape mismatch between operands.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed matrix or scheme text.  Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& reason, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + reason),
        reason_(reason),
        line_(line),
        column_(column) {}
  const std::string& reason() const noexcept { return reason_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string reason_;
  std::size_t line_;
  std::size_t column_;
};

enum class Execution { Serial, Parallel };

template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
  }
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
    if (data_.size() != rows * cols) {
      throw DimensionError("matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                           std::to_string(rows * cols));
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  T& at(std::size_t i, std::size_t j) {
    check(i, j);
    return data_[i * cols_ + j];
  }
  const T& at(std::size_t i, std::size_t j) const {
    check(i, j);
    return data_[i * cols_ + j];
  }

  const std::vector<T>& data() const noexcept { return data_; }
  std::vector<T>& data() noexcept { return data_; }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) {
      throw std::out_of_range("index (" + std::to_string(i) + "," + std::to_string(j) + ") outside " + shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <CoefficientRing R>
using MatrixOf = Matrix<typename R::value_type>;

template <CoefficientRing R>
MatrixOf<R> zeros(const R& ring, std::size_t rows, std::size_t cols) {
  return MatrixOf<R>(rows, cols, ring.zero());
}

template <CoefficientRing R>
MatrixOf<R> identity(const R& ring, std::size_t n) {
  auto m = zeros(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

/// Standard basis matrix e_ij (0-based indices).
template <CoefficientRing R>
MatrixOf<R> basis_unit(const R& ring, std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  auto m = zeros(ring, rows, cols);
  m.at(i, j) = ring.one();
  return m;
}

template <CoefficientRing R>
bool equal(const R& ring, const MatrixOf<R>& a, const MatrixOf<R>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!ring.equal(a.data()[k], b.data()[k])) return false;
  }
  return true;
}

template <CoefficientRing R>
bool is_zero(const R& ring, const MatrixOf<R>& a) {
  for (const auto& x : a.data()) {
    if (!ring.is_zero(x)) return false;
  }
  return true;
}

namespace detail {
template <class M>
void require_same_shape(const M& a, const M& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shapes " + a.shape() + " and " + b.shape() + " differ");
  }
}
}  // namespace detail

template <CoefficientRing R>
MatrixOf<R> add(const R& ring, const MatrixOf<R>& a, const MatrixOf<R>& b) {
  detail::require_same_shape(a, b, "add");
  MatrixOf<R> c = a;
  for (std::size_t k = 0; k < c.size(); ++k) c.data()[k] = ring.add(c.data()[k], b.data()[k]);
  return c;
}

template <CoefficientRing R>
MatrixOf<R> sub(const R& ring, const MatrixOf<R>& a, const MatrixOf<R>& b) {
  detail::require_same_shape(a, b, "sub");
  MatrixOf<R> c = a;
  for (std::size_t k = 0; k < c.size(); ++k) c.data()[k] = ring.sub(c.data()[k], b.data()[k]);
  return c;
}

template <CoefficientRing R>
MatrixOf<R> negate(const R& ring, const MatrixOf<R>& a) {
  MatrixOf<R> c = a;
  for (auto& x : c.data()) x = ring.neg(x);
  return c;
}

template <CoefficientRing R>
MatrixOf<R> scale(const R& ring, const typename R::value_type& s, const MatrixOf<R>& a) {
  MatrixOf<R> c = a;
  for (auto& x : c.data()) x = ring.mul(s, x);
  return c;
}

/// y += s * x, with the +-1 cases done without a ring multiplication.
template <CoefficientRing R>
void axpy(const R& ring, const typename R::value_type& s, const MatrixOf<R>& x, MatrixOf<R>& y) {
  detail::require_same_shape(x, y, "axpy");
  if (ring.is_zero(s)) return;
  auto& yd = y.data();
  const auto& xd = x.data();
  if (ring.equal(s, ring.one())) {
    for (std::size_t k = 0; k < yd.size(); ++k) yd[k] = ring.add(yd[k], xd[k]);
  } else if (ring.equal(s, ring.neg(ring.one()))) {
    for (std::size_t k = 0; k < yd.size(); ++k) yd[k] = ring.sub(yd[k], xd[k]);
  } else {
    for (std::size_t k = 0; k < yd.size(); ++k) yd[k] = ring.add(yd[k], ring.mul(s, xd[k]));
  }
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  std::vector<T> data;
  data.reserve(a.size());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) data.push_back(a(i, j));
  }
  return Matrix<T>(a.cols(), a.rows(), std::move(data));
}

/// Copy of the rows x cols block starting at (row0, col0).
template <class T>
Matrix<T> submatrix(const Matrix<T>& a, std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) {
  if (row0 + rows > a.rows() || col0 + cols > a.cols()) {
    throw std::out_of_range("block " + std::to_string(rows) + "x" + std::to_string(cols) + " at (" +
                            std::to_string(row0) + "," + std::to_string(col0) + ") outside " + a.shape());
  }
  std::vector<T> data;
  data.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) data.push_back(a(row0 + i, col0 + j));
  }
  return Matrix<T>(rows, cols, std::move(data));
}

/// Places `a` at offset (0, 0) of a rows x cols zero matrix.
template <CoefficientRing R>
MatrixOf<R> embed(const R& ring, const MatrixOf<R>& a, std::size_t rows, std::size_t cols) {
  if (rows < a.rows() || cols < a.cols()) {
    throw DimensionError("cannot embed " + a.shape() + " into " + std::to_string(rows) + "x" + std::to_string(cols));
  }
  auto out = zeros(ring, rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  }
  return out;
}

/// Schoolbook product: exactly rows(A) * cols(A) * cols(B) ring multiplications.
template <CoefficientRing R>
MatrixOf<R> naive_multiply(const R& ring, const MatrixOf<R>& a, const MatrixOf<R>& b,
                           Execution exec = Execution::Parallel) {
  if (a.cols() != b.rows()) {
    throw DimensionError("cannot multiply " + a.shape() + " by " + b.shape());
  }
  const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
  auto c = zeros(ring, m, n);
  auto row_kernel = [&](std::size_t i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto& aij = a(i, j);
      if (ring.is_zero(aij)) continue;
      for (std::size_t l = 0; l < n; ++l) c(i, l) = ring.add(c(i, l), ring.mul(aij, b(j, l)));
    }
  };
  if (exec == Execution::Parallel && m * k * n >= 4096) {
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < m; ++i) row_kernel(i);
  } else {
    for (std::size_t i = 0; i < m; ++i) row_kernel(i);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Text format: `rows cols` on the first line, then one line per row with
// whitespace-separated ring literals.

namespace detail {

/// Line-oriented reader that strips `#` comments and tracks positions.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next non-blank line with comments removed; false at end of input.
  bool next(std::string& line) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_no_;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      if (raw.find_first_not_of(" \t") == std::string::npos) continue;
      line = raw;
      return true;
    }
    return false;
  }

  /// Pushes back one line so the next call to next() returns it again.
  void unread(std::string line) { pending_ = std::move(line); has_pending_ = true; }

  bool next_or_pending(std::string& line) {
    if (has_pending_) {
      has_pending_ = false;
      line = std::move(pending_);
      return true;
    }
    return next(line);
  }

  std::size_t line_number() const noexcept { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
  std::string pending_;
  bool has_pending_ = false;
};

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> split_tokens(const std::string& line);

std::size_t parse_dimension(const Token& tok, std::size_t line);

}  // namespace detail

template <CoefficientRing R>
MatrixOf<R> read_matrix(detail::LineReader& reader, const R& ring) {
  std::string line;
  if (!reader.next_or_pending(line)) throw ParseError("expected matrix header 'rows cols'", reader.line_number() + 1, 1);
  auto header = detail::split_tokens(line);
  if (header.size() != 2) {
    throw ParseError("matrix header must be 'rows cols'", reader.line_number(), header.empty() ? 1 : header[0].column);
  }
  std::size_t rows = detail::parse_dimension(header[0], reader.line_number());
  std::size_t cols = detail::parse_dimension(header[1], reader.line_number());
  std::vector<typename R::value_type> data;
  data.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!reader.next(line)) {
      throw ParseError("expected " + std::to_string(rows) + " matrix rows, found " + std::to_string(i),
                       reader.line_number() + 1, 1);
    }
    auto toks = detail::split_tokens(line);
    if (toks.size() != cols) {
      throw ParseError("expected " + std::to_string(cols) + " entries in row, found " + std::to_string(toks.size()),
                       reader.line_number(), toks.size() > cols ? toks[cols].column : 1);
    }
    for (const auto& tok : toks) {
      try {
        data.push_back(ring.parse(tok.text));
      } catch (const LiteralError& e) {
        throw ParseError(e.what(), reader.line_number(), tok.column + e.column() - 1);
      } catch (const std::exception& e) {
        throw ParseError(e.what(), reader.line_number(), tok.column);
      }
    }
  }
  return MatrixOf<R>(rows, cols, std::move(data));
}

template <CoefficientRing R>
MatrixOf<R> read_matrix(std::istream& in, const R& ring) {
  detail::LineReader reader(in);
  auto m = read_matrix(reader, ring);
  std::string extra;
  if (reader.next(extra)) throw ParseError("unexpected content after matrix", reader.line_number(), 1);
  return m;
}

template <CoefficientRing R>
MatrixOf<R> parse_matrix(const std::string& text, const R& ring) {
  std::istringstream in(text);
  return read_matrix(in, ring);
}

template <CoefficientRing R>
void write_matrix(std::ostream& out, const R& ring, const MatrixOf<R>& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != 0) out << ' ';
      out << ring.format(m(i, j));
    }
    out << '\n';
  }
}

template <CoefficientRing R>
std::string format_matrix(const R& ring, const MatrixOf<R>& m) {
  std::ostringstream out;
  write_matrix(out, ring, m);
  return out.str();
}

}  // namespace fmm
