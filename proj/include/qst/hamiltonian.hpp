#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "qst/couplings.hpp"

namespace qst {

inline constexpr int kDefaultMaxDimension = 4096;

/// Linear ordering of lattice sites: index = (n1-1) + N1*(n2-1) + N1*N2*(n3-1)
/// with 1-based per-axis coordinates n_i in 1..N_i.
struct SiteBasis {
    std::array<int, 3> dims{1, 1, 1};

    int dimension() const { return dims[0] * dims[1] * dims[2]; }
    int index(const std::array<int, 3>& coords) const;
    std::array<int, 3> coords(int index) const;
};

SiteBasis lattice_basis(const LatticeEngineering& eng);

/// Dense Hermitian matrix in energy units. Construction rejects matrices
/// that deviate from M = M^dagger by more than 1e-12 entrywise.
class HermitianOperator {
  public:
    explicit HermitianOperator(Eigen::MatrixXcd entries);

    int dim() const { return static_cast<int>(entries_.rows()); }
    const Eigen::MatrixXcd& matrix() const { return entries_; }

  private:
    Eigen::MatrixXcd entries_;
};

/// Eigenvalues ascending; eigenvector column j pairs with eigenvalue j.
struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXcd eigenvectors;

    int dim() const { return static_cast<int>(eigenvalues.size()); }
};

/// Tridiagonal open-chain Hamiltonian with H[n,n+1] = sign * J_n and zero
/// diagonal. Engineered chains use sign = +1, the uniform ring uses -1.
HermitianOperator chain_hamiltonian(const CouplingProfile& profile, int sign = +1);

/// Uniform N-site ring, -J on every nearest-neighbor bond including the
/// (N,1) closure. Spectrum is -2J cos(2 pi q / N).
HermitianOperator ring_hamiltonian(int sites, double hopping);

/// One Hamiltonian per axis of a rectangular bond field, each acting as the
/// axis chain on its own coordinate and as identity on the others. All
/// operators share the SiteBasis ordering of the field's dims.
std::vector<HermitianOperator> bond_field_axis_hamiltonians(const BondField& field,
                                                            int max_dim = kDefaultMaxDimension);

std::vector<HermitianOperator> lattice_axis_hamiltonians(const LatticeEngineering& eng,
                                                         int max_dim = kDefaultMaxDimension);

/// Sum of the axis Hamiltonians.
HermitianOperator lattice_total_hamiltonian(const LatticeEngineering& eng,
                                            int max_dim = kDefaultMaxDimension);

/// Entrywise max norm of AB - BA.
double commutator_norm(const HermitianOperator& a, const HermitianOperator& b);

SpectralDecomposition spectral_decompose(const HermitianOperator& op);

/// Closed-form eigenvalue of engineered level k (1-based, ascending).
double engineered_level(const ChainEngineering& eng, int level);

/// All N closed-form eigenvalues, ascending. The gap across the middle of
/// the spectrum equals 2*(2m+1).
std::vector<double> engineered_spectrum(const ChainEngineering& eng);

/// Eigenvector of engineered level k built from the three-term recurrence
/// seeded by phi(k,1) = 1, normalized. Real by construction.
Eigen::VectorXd recurrence_eigenvector(const ChainEngineering& eng, int level);

}  // namespace qst
