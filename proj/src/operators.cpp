#include "delone/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace delone {

OperatorMatrix::OperatorMatrix(std::size_t dim) : dim_(dim), e_(dim * dim) {
  if (dim == 0) throw std::invalid_argument("OperatorMatrix: dim must be positive");
}

OperatorMatrix OperatorMatrix::identity(std::size_t dim) {
  OperatorMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

Storage OperatorMatrix::storage() const {
  bool tridiag = true;
  bool diag = true;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      if (at(i, j) == std::complex<double>{}) continue;
      if (i != j) diag = false;
      const std::size_t band = (i > j) ? i - j : j - i;
      if (band > 1) tridiag = false;
    }
  if (diag) return Storage::Diagonal;
  if (tridiag) return Storage::Tridiagonal;
  return Storage::Dense;
}

OperatorMatrix OperatorMatrix::adjoint() const {
  OperatorMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m.at(j, i) = std::conj(at(i, j));
  return m;
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& rhs) const {
  if (rhs.dim_ != dim_) throw std::invalid_argument("OperatorMatrix: dim mismatch");
  OperatorMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < dim_; ++k) {
      const std::complex<double> aik = at(i, k);
      if (aik == std::complex<double>{}) continue;
      for (std::size_t j = 0; j < dim_; ++j) m.at(i, j) += aik * rhs.at(k, j);
    }
  return m;
}

OperatorMatrix OperatorMatrix::operator+(const OperatorMatrix& rhs) const {
  if (rhs.dim_ != dim_) throw std::invalid_argument("OperatorMatrix: dim mismatch");
  OperatorMatrix m(dim_);
  for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] + rhs.e_[k];
  return m;
}

OperatorMatrix OperatorMatrix::operator-(const OperatorMatrix& rhs) const {
  if (rhs.dim_ != dim_) throw std::invalid_argument("OperatorMatrix: dim mismatch");
  OperatorMatrix m(dim_);
  for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] - rhs.e_[k];
  return m;
}

std::vector<std::complex<double>> OperatorMatrix::apply(
    const std::vector<std::complex<double>>& v) const {
  if (v.size() != dim_) throw std::invalid_argument("OperatorMatrix: vector dim mismatch");
  std::vector<std::complex<double>> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

double OperatorMatrix::max_abs(std::size_t leading) const {
  const std::size_t n = (leading == 0 || leading > dim_) ? dim_ : leading;
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m = std::max(m, std::abs(at(i, j)));
  return m;
}

bool OperatorMatrix::is_hermitian(double tol) const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) return false;
  return true;
}

}  // namespace delone
