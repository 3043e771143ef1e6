#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "qst/hamiltonian.hpp"
#include "qst/symmetry.hpp"

namespace qst {

/// Normalized single-particle state in the site basis.
class PureState {
  public:
    explicit PureState(Eigen::VectorXcd amplitudes);

    static PureState site_basis(int dim, int site);

    int dim() const { return static_cast<int>(amplitudes_.size()); }
    const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }

  private:
    Eigen::VectorXcd amplitudes_;
};

/// Many-fermion state as a D x n matrix of orthonormal orbital columns.
class SlaterState {
  public:
    explicit SlaterState(Eigen::MatrixXcd orbitals);

    static SlaterState from_sites(int dim, const std::vector<int>& sites);
    static SlaterState random(int dim, int particles, std::uint64_t seed);

    int dim() const { return static_cast<int>(orbitals_.rows()); }
    int particles() const { return static_cast<int>(orbitals_.cols()); }
    const Eigen::MatrixXcd& orbitals() const { return orbitals_; }

  private:
    Eigen::MatrixXcd orbitals_;
};

/// One-body correlation matrix C = M M^dagger; idempotent with trace n.
struct CorrelationMatrix {
    Eigen::MatrixXcd entries;
};

/// U(t) = V diag(exp(-i e_j t)) V^dagger.
Eigen::MatrixXcd propagator(const SpectralDecomposition& decomp, double t);

PureState evolve_state(const Eigen::MatrixXcd& propagator, const PureState& state);
SlaterState evolve_slater(const Eigen::MatrixXcd& propagator, const SlaterState& state);

/// Same evolutions without forming the full propagator; used by the
/// experiment drivers on dense time grids.
PureState evolve_state(const SpectralDecomposition& decomp, double t, const PureState& state);
SlaterState evolve_slater(const SpectralDecomposition& decomp, double t, const SlaterState& state);

/// det(A^dagger B); modulus at most 1.
std::complex<double> slater_overlap(const SlaterState& a, const SlaterState& b);

SlaterState apply_symmetry_slater(const SymmetryOperator& sym, const SlaterState& state);

CorrelationMatrix correlation_matrix(const SlaterState& state);

/// Overlap modulus, insensitive to global phases.
double fidelity(const PureState& a, const PureState& b);
double fidelity(const SlaterState& a, const SlaterState& b);

}  // namespace qst
