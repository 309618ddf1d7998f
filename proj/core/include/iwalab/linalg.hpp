#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "iwalab/fq.hpp"

namespace iwalab {

using Vec = std::vector<Fq::Elem>;

/// Sparse vector: (index, nonzero coefficient) pairs sorted by index.
using SparseVec = std::vector<std::pair<std::uint32_t, Fq::Elem>>;

bool is_zero(const Vec& v);
Vec vec_add(const Fq& F, const Vec& a, const Vec& b);
Vec vec_sub(const Fq& F, const Vec& a, const Vec& b);
Vec vec_scale(const Fq& F, const Vec& a, Fq::Elem s);
/// a += s * b
void vec_axpy(const Fq& F, Vec& a, Fq::Elem s, const Vec& b);

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, std::size_t n);

/// Dense row-major matrix over F_q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Fq::Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Fq::Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const Fq::Elem* row(std::size_t i) const { return data_.data() + i * cols_; }
  Vec column(std::size_t j) const;
  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fq::Elem> data_;
};

Matrix mat_mul(const Fq& F, const Matrix& a, const Matrix& b);
Matrix mat_add(const Fq& F, const Matrix& a, const Matrix& b);
Matrix mat_sub(const Fq& F, const Matrix& a, const Matrix& b);
Matrix mat_scale(const Fq& F, const Matrix& a, Fq::Elem s);
Matrix mat_pow(const Fq& F, const Matrix& a, std::uint64_t e);
Matrix transpose(const Matrix& a);
Vec mat_vec(const Fq& F, const Matrix& a, const Vec& v);
std::size_t rank(const Fq& F, Matrix a);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Fq& F, const Matrix& a);
/// Basis of the right kernel {x : a x = 0}.
std::vector<Vec> kernel(const Fq& F, const Matrix& a);
bool is_zero(const Matrix& a);

/// Subspace of F_q^n kept as a reduced row-echelon basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : n_(ambient) {}
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces v against the basis (in place); returns true when v ends up zero.
  bool reduce(const Fq& F, Vec& v) const;
  bool contains(const Fq& F, Vec v) const { return reduce(F, v); }
  bool contains(const Fq& F, const Subspace& other) const;
  /// Adds v; returns true when the dimension grew.
  bool insert(const Fq& F, Vec v);
  void insert_all(const Fq& F, const Subspace& other);
  bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }

 private:
  std::size_t n_ = 0;
  std::vector<Vec> basis_;            // fully reduced rows
  std::vector<std::size_t> pivots_;  // pivot column of each row, value 1 there
};

/// Image of a subspace under a linear map.
Subspace image(const Fq& F, const Matrix& a, const Subspace& s);
Subspace sum(const Fq& F, const Subspace& a, const Subspace& b);

/// Sparse linear operator stored by columns: column j is the image of e_j.
class SparseOp {
 public:
  SparseOp() = default;
  SparseOp(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  SparseVec& column(std::size_t j) { return columns_[j]; }
  const SparseVec& column(std::size_t j) const { return columns_[j]; }
  Vec apply(const Fq& F, const Vec& v) const;

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVec> columns_;
};

}  // namespace iwalab
