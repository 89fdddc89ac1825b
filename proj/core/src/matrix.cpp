#include "tqft/matrix.hpp"

#include <sstream>

#include "tqft/errors.hpp"

namespace tqft {

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec out = v;
  for (auto& x : out) x *= c;
  return out;
}

Vec vec_zero(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool vec_less(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

std::string vec_to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vec Matrix::col(std::size_t c) const {
  Vec out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix shapes differ");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix shapes differ");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shapes differ");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Scalar& b = rhs.at(k, j);
        if (b.is_zero()) continue;
        out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= c;
  return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (data_[i] != rhs.data_[i]) return false;
  }
  return true;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shapes differ");
  Vec out(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

Scalar Matrix::trace() const {
  if (rows_ != cols_) throw DimensionMismatch("trace of a non-square matrix");
  Scalar t = field_.zero();
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(field_, rows_);
}

Matrix Matrix::kron(const Matrix& rhs) const {
  if (field_ != rhs.field_) throw FieldMismatch("kron over different fields");
  Matrix out(field_, rows_ * rhs.rows_, cols_ * rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& a = at(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < rhs.rows_; ++k) {
        for (std::size_t l = 0; l < rhs.cols_; ++l) {
          if (!rhs.at(k, l).is_zero()) {
            out.at(i * rhs.rows_ + k, j * rhs.cols_ + l) = a * rhs.at(k, l);
          }
        }
      }
    }
  }
  return out;
}

Matrix Matrix::pow(std::size_t e) const {
  if (rows_ != cols_) throw DimensionMismatch("power of a non-square matrix");
  Matrix acc = identity(field_, rows_);
  Matrix base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
  Matrix m = *this;
  if (pivots) pivots->clear();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
    std::size_t piv = lead;
    while (piv < rows_ && m.at(piv, c).is_zero()) ++piv;
    if (piv == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(lead, j), m.at(piv, j));
    Scalar inv = m.at(lead, c).inverse();
    for (std::size_t j = c; j < cols_; ++j) m.at(lead, j) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead || m.at(r, c).is_zero()) continue;
      Scalar factor = m.at(r, c);
      for (std::size_t j = c; j < cols_; ++j) m.at(r, j) -= factor * m.at(lead, j);
    }
    if (pivots) pivots->push_back(c);
    ++lead;
  }
  return m;
}

std::size_t Matrix::rank() const {
  std::vector<std::size_t> pivots;
  rref(&pivots);
  return pivots.size();
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw DimensionMismatch("inverse of a non-square matrix");
  Matrix aug(field_, rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = field_.one();
  }
  std::vector<std::size_t> pivots;
  Matrix red = aug.rref(&pivots);
  if (pivots.size() != rows_ || pivots.back() >= cols_) return std::nullopt;
  Matrix inv(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = red.at(i, cols_ + j);
  }
  return inv;
}

Matrix Matrix::kernel() const {
  std::vector<std::size_t> pivots;
  Matrix red = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    Vec v(cols_, field_.zero());
    v[c] = field_.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -red.at(r, c);
    }
    basis.push_back(std::move(v));
  }
  // free-variable construction is already canonical, but normalize anyway
  return Matrix::from_rows(field_, basis, cols_).rref();
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
  if (b.size() != rows_) throw DimensionMismatch("rhs length mismatch");
  Matrix aug(field_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<std::size_t> pivots;
  Matrix red = aug.rref(&pivots);
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // 0 = 1 row
  Vec x(cols_, field_.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = red.at(r, cols_);
  return x;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j).to_string();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace tqft
