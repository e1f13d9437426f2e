#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace delone {

enum class Storage { Diagonal, Tridiagonal, Dense };

/// Small dense complex matrix for truncated operators. The storage tag is
/// classified from the actual sparsity pattern, never asserted by callers,
/// so it always matches the entries.
class OperatorMatrix {
 public:
  explicit OperatorMatrix(std::size_t dim);

  static OperatorMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  std::complex<double>& at(std::size_t i, std::size_t j) { return e_[i * dim_ + j]; }
  const std::complex<double>& at(std::size_t i, std::size_t j) const {
    return e_[i * dim_ + j];
  }

  /// Sparsity classification of the current entries.
  Storage storage() const;

  OperatorMatrix adjoint() const;
  OperatorMatrix operator*(const OperatorMatrix& rhs) const;
  OperatorMatrix operator+(const OperatorMatrix& rhs) const;
  OperatorMatrix operator-(const OperatorMatrix& rhs) const;

  std::vector<std::complex<double>> apply(const std::vector<std::complex<double>>& v) const;

  /// max_ij |A_ij|, optionally restricted to the leading block.
  double max_abs(std::size_t leading = 0) const;

  bool is_hermitian(double tol = 1e-12) const;

 private:
  std::size_t dim_;
  std::vector<std::complex<double>> e_;
};

}  // namespace delone
