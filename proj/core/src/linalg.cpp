#include "iwalab/linalg.hpp"

#include <algorithm>

#include "iwalab/error.hpp"

namespace iwalab {

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Fq::Elem x) { return x == 0; });
}

Vec vec_add(const Fq& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const Fq& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
  return r;
}

Vec vec_scale(const Fq& F, const Vec& a, Fq::Elem s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], s);
  return r;
}

void vec_axpy(const Fq& F, Vec& a, Fq::Elem s, const Vec& b) {
  if (s == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] != 0) a[i] = F.add(a[i], F.mul(s, b[i]));
}

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return s;
}

Vec to_dense(const SparseVec& v, std::size_t n) {
  Vec d(n, 0);
  for (const auto& [i, c] : v) d[i] = c;
  return d;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix mat_mul(const Fq& F, const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), ErrorKind::ConfigMismatch, "matrix shapes do not match");
  Matrix r(a.rows(), b.cols());
  if (F.degree() == 1) {
    // Prime field: accumulate in 64 bits and reduce once per entry.
    const std::uint64_t p = F.characteristic();
    std::vector<std::uint64_t> acc(b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      const Fq::Elem* ar = a.row(i);
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const std::uint64_t x = ar[k];
        if (x == 0) continue;
        const Fq::Elem* br = b.row(k);
        for (std::size_t j = 0; j < b.cols(); ++j) acc[j] += x * br[j];
      }
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = static_cast<Fq::Elem>(acc[j] % p);
    }
    return r;
  }
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Fq::Elem x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) r(i, j) = F.add(r(i, j), F.mul(x, b(k, j)));
    }
  return r;
}

Matrix mat_add(const Fq& F, const Matrix& a, const Matrix& b) {
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = F.add(a(i, j), b(i, j));
  return r;
}

Matrix mat_sub(const Fq& F, const Matrix& a, const Matrix& b) {
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = F.sub(a(i, j), b(i, j));
  return r;
}

Matrix mat_scale(const Fq& F, const Matrix& a, Fq::Elem s) {
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = F.mul(a(i, j), s);
  return r;
}

Matrix mat_pow(const Fq& F, const Matrix& a, std::uint64_t e) {
  Matrix r = Matrix::identity(a.rows());
  Matrix b = a;
  while (e) {
    if (e & 1) r = mat_mul(F, r, b);
    e >>= 1;
    if (e) b = mat_mul(F, b, b);
  }
  return r;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Vec mat_vec(const Fq& F, const Matrix& a, const Vec& v) {
  Vec r(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Fq::Elem acc = 0;
    const Fq::Elem* ar = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (ar[j] != 0 && v[j] != 0) acc = F.add(acc, F.mul(ar[j], v[j]));
    r[i] = acc;
  }
  return r;
}

namespace {

// Gaussian elimination in place; returns pivot columns.
std::vector<std::size_t> eliminate(const Fq& F, Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    const Fq::Elem s = F.inv(a(r, c));
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = F.mul(a(r, j), s);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Fq::Elem t = F.neg(a(i, c));
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (a(r, j) != 0) a(i, j) = F.add(a(i, j), F.mul(t, a(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Fq& F, Matrix a) { return eliminate(F, a).size(); }

std::optional<Matrix> inverse(const Fq& F, const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = eliminate(F, aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<Vec> kernel(const Fq& F, const Matrix& a) {
  Matrix m = a;
  auto piv = eliminate(F, m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F.neg(m(r, free));
    out.push_back(std::move(v));
  }
  return out;
}

bool is_zero(const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) return false;
  return true;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vec e(ambient, 0);
    e[i] = 1;
    s.basis_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

bool Subspace::reduce(const Fq& F, Vec& v) const {
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Fq::Elem c = v[pivots_[r]];
    if (c != 0) vec_axpy(F, v, F.neg(c), basis_[r]);
  }
  return is_zero(v);
}

bool Subspace::contains(const Fq& F, const Subspace& other) const {
  for (const auto& b : other.basis_)
    if (!contains(F, b)) return false;
  return true;
}

bool Subspace::insert(const Fq& F, Vec v) {
  if (reduce(F, v)) return false;
  std::size_t piv = 0;
  while (v[piv] == 0) ++piv;
  v = vec_scale(F, v, F.inv(v[piv]));
  for (auto& row : basis_) {
    const Fq::Elem c = row[piv];
    if (c != 0) vec_axpy(F, row, F.neg(c), v);
  }
  // Keep rows ordered by pivot so the basis is canonical.
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  const auto idx = pos - pivots_.begin();
  pivots_.insert(pos, piv);
  basis_.insert(basis_.begin() + idx, std::move(v));
  return true;
}

void Subspace::insert_all(const Fq& F, const Subspace& other) {
  for (const auto& b : other.basis_) insert(F, b);
}

Subspace image(const Fq& F, const Matrix& a, const Subspace& s) {
  Subspace out(a.rows());
  for (const auto& b : s.basis()) out.insert(F, mat_vec(F, a, b));
  return out;
}

Subspace sum(const Fq& F, const Subspace& a, const Subspace& b) {
  Subspace out = a;
  out.insert_all(F, b);
  return out;
}

Vec SparseOp::apply(const Fq& F, const Vec& v) const {
  Vec r(rows_, 0);
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (v[j] == 0) continue;
    for (const auto& [i, c] : columns_[j]) r[i] = F.add(r[i], F.mul(c, v[j]));
  }
  return r;
}

}  // namespace iwalab
