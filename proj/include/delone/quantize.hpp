#pragma once

#include "delone/operators.hpp"
#include "delone/renorm.hpp"

#include <complex>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace delone {

/// Thrown when a requested truncation cannot hold the coherent-state tail.
struct truncation_error : std::runtime_error {
  truncation_error(const std::string& msg, std::size_t suggested)
      : std::runtime_error(msg), suggested_dim(suggested) {}
  std::size_t suggested_dim;
};

struct CoherentState {
  std::complex<double> z;
  std::size_t dim = 0;
  std::vector<std::complex<double>> coeffs;  // <e_n, v_z>, n < dim
  double tail = 0.0;                         // 1 - ||coeffs||^2
};

/// (lowering a~, raising a~†): a~ e_n = sqrt(xt_n) e_{n-1}.
std::pair<OperatorMatrix, OperatorMatrix> ladder_matrices(const RenormalizedSequence& ren,
                                                          std::size_t dim);

/// Coefficients z^n / sqrt(Nt(|z|^2) xt_n!), tail-checked against tol.
CoherentState coherent_state(const RenormalizedSequence& ren, std::complex<double> z,
                             std::size_t dim, double tol = 1e-12);

/// Smallest dim whose coherent-state tail at |z| = z_abs_max is below tol,
/// floored at 16 and capped by the moment table.
std::size_t auto_dim(const RenormalizedSequence& ren, double z_abs_max, double tol = 1e-12);

/// Diagonal of the resolution-of-identity operator for the renormalized
/// sequence: I(n) / (mu_0 xt_n!), recomputed from fresh moment quadrature so
/// the deviation from 1 measures numerical error only.
std::vector<double> resolution_check(const DeloneSequence& base,
                                     const RenormalizedSequence& ren, std::size_t dim,
                                     double tol = 1e-10);

/// Same diagonal for the un-renormalized sequence: mu_n / mu_0 (not 1).
std::vector<double> resolution_check_raw(const DeloneSequence& base, std::size_t dim,
                                         double tol = 1e-10);

/// A radially decomposable symbol, given through its angular Fourier
/// coefficients c_k(u) with the (finite) set of nonzero bands listed.
struct RadialSymbol {
  std::function<std::complex<double>(int k, double u)> coeff;
  std::vector<int> bands;
};

RadialSymbol symbol_one();
RadialSymbol symbol_z();
RadialSymbol symbol_zbar();
RadialSymbol symbol_zzbar();
RadialSymbol symbol_q();
RadialSymbol symbol_p();

/// (A_f)_{n n'} = [xt_n! xt_n'!]^{-1/2} int_0^inf u^{(n+n')/2} c_{n'-n}(u)
///                 / (mu_0 N(u)) du.
OperatorMatrix quantize_radial(const DeloneSequence& base, const RenormalizedSequence& ren,
                               const RadialSymbol& symbol, std::size_t dim,
                               double tol = 1e-10);

/// Qt = (a~ + a~†)/sqrt(2), Pt = (a~ - a~†)/(i sqrt(2)).
std::pair<OperatorMatrix, OperatorMatrix> position_momentum(const RenormalizedSequence& ren,
                                                            std::size_t dim);

/// <v_z, A v_z> with the truncated state.
std::complex<double> lower_symbol(const OperatorMatrix& a, const RenormalizedSequence& ren,
                                  std::complex<double> z, std::size_t dim,
                                  double tol = 1e-12);

struct UncertaintyResult {
  double product = 0.0;              // (Delta Q)(Delta P) from second moments
  double product_expectation = 0.0;  // (1/2) <xt_{N+1} - xt_N>, independent path
  double lower_bound = 0.0;          // (1/2)(1 + inf jump of alpha~)
  double upper_bound = 0.0;          // (1/2)(1 + sup jump of alpha~)
};

UncertaintyResult uncertainty_product(const RenormalizedSequence& ren, std::complex<double> z,
                                      std::size_t dim, double tol = 1e-12);

}  // namespace delone
