#include "qst/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace qst {

namespace {

Eigen::VectorXcd phase_column(const Eigen::VectorXd& energies, double t) {
    Eigen::VectorXcd phases(energies.size());
    for (Eigen::Index i = 0; i < energies.size(); ++i) {
        phases(i) = std::complex<double>(std::cos(energies(i) * t), -std::sin(energies(i) * t));
    }
    return phases;
}

}  // namespace

PureState::PureState(Eigen::VectorXcd amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) throw std::invalid_argument("pure state: empty amplitude vector");
    const double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > 1e-10) {
        throw std::invalid_argument("pure state: amplitudes not normalized (norm " +
                                    std::to_string(norm) + ")");
    }
}

PureState PureState::site_basis(int dim, int site) {
    if (dim < 1 || site < 0 || site >= dim) {
        throw std::invalid_argument("pure state: site index out of range");
    }
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
    amps(site) = 1.0;
    return PureState(std::move(amps));
}

SlaterState::SlaterState(Eigen::MatrixXcd orbitals) : orbitals_(std::move(orbitals)) {
    const int d = static_cast<int>(orbitals_.rows());
    const int n = static_cast<int>(orbitals_.cols());
    if (n < 1 || n > d) {
        throw std::invalid_argument("slater state: need 1 <= particles <= dimension");
    }
    const Eigen::MatrixXcd gram = orbitals_.adjoint() * orbitals_;
    const double dev = (gram - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
    if (dev > 1e-10) {
        throw std::invalid_argument("slater state: orbitals not orthonormal (deviation " +
                                    std::to_string(dev) + ")");
    }
}

SlaterState SlaterState::from_sites(int dim, const std::vector<int>& sites) {
    if (sites.empty()) throw std::invalid_argument("slater state: empty site list");
    Eigen::MatrixXcd orbitals = Eigen::MatrixXcd::Zero(dim, static_cast<int>(sites.size()));
    std::vector<bool> used(dim, false);
    for (std::size_t i = 0; i < sites.size(); ++i) {
        const int site = sites[i];
        if (site < 0 || site >= dim) {
            throw std::invalid_argument("slater state: site index out of range");
        }
        if (used[site]) throw std::invalid_argument("slater state: repeated site occupation");
        used[site] = true;
        orbitals(site, static_cast<int>(i)) = 1.0;
    }
    return SlaterState(std::move(orbitals));
}

SlaterState SlaterState::random(int dim, int particles, std::uint64_t seed) {
    if (particles < 1 || particles > dim) {
        throw std::invalid_argument("slater state: need 1 <= particles <= dimension");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd raw(dim, particles);
    for (int col = 0; col < particles; ++col) {
        for (int row = 0; row < dim; ++row) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            raw(row, col) = std::complex<double>(re, im);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(raw);
    const Eigen::MatrixXcd q =
        qr.householderQ() * Eigen::MatrixXcd::Identity(dim, particles);
    return SlaterState(q);
}

Eigen::MatrixXcd propagator(const SpectralDecomposition& decomp, double t) {
    const Eigen::VectorXcd phases = phase_column(decomp.eigenvalues, t);
    return decomp.eigenvectors * phases.asDiagonal() * decomp.eigenvectors.adjoint();
}

PureState evolve_state(const Eigen::MatrixXcd& propagator, const PureState& state) {
    if (propagator.cols() != state.dim()) {
        throw std::invalid_argument("evolve state: dimension mismatch");
    }
    return PureState(propagator * state.amplitudes());
}

SlaterState evolve_slater(const Eigen::MatrixXcd& propagator, const SlaterState& state) {
    if (propagator.cols() != state.dim()) {
        throw std::invalid_argument("evolve slater: dimension mismatch");
    }
    return SlaterState(propagator * state.orbitals());
}

PureState evolve_state(const SpectralDecomposition& decomp, double t, const PureState& state) {
    if (decomp.dim() != state.dim()) {
        throw std::invalid_argument("evolve state: dimension mismatch");
    }
    const Eigen::VectorXcd phases = phase_column(decomp.eigenvalues, t);
    const Eigen::VectorXcd modal = decomp.eigenvectors.adjoint() * state.amplitudes();
    return PureState(decomp.eigenvectors * phases.cwiseProduct(modal));
}

SlaterState evolve_slater(const SpectralDecomposition& decomp, double t,
                          const SlaterState& state) {
    if (decomp.dim() != state.dim()) {
        throw std::invalid_argument("evolve slater: dimension mismatch");
    }
    const Eigen::VectorXcd phases = phase_column(decomp.eigenvalues, t);
    Eigen::MatrixXcd modal = decomp.eigenvectors.adjoint() * state.orbitals();
    modal = phases.asDiagonal() * modal;
    return SlaterState(decomp.eigenvectors * modal);
}

std::complex<double> slater_overlap(const SlaterState& a, const SlaterState& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("slater overlap: dimension mismatch");
    if (a.particles() != b.particles()) {
        throw std::invalid_argument("slater overlap: particle number mismatch");
    }
    return (a.orbitals().adjoint() * b.orbitals()).determinant();
}

SlaterState apply_symmetry_slater(const SymmetryOperator& sym, const SlaterState& state) {
    if (sym.dim() != state.dim()) {
        throw std::invalid_argument("apply symmetry: dimension mismatch");
    }
    return SlaterState(sym.apply_columns(state.orbitals()));
}

CorrelationMatrix correlation_matrix(const SlaterState& state) {
    return CorrelationMatrix{state.orbitals() * state.orbitals().adjoint()};
}

double fidelity(const PureState& a, const PureState& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
    return std::min(1.0, std::abs(a.amplitudes().dot(b.amplitudes())));
}

double fidelity(const SlaterState& a, const SlaterState& b) {
    return std::min(1.0, std::abs(slater_overlap(a, b)));
}

}  // namespace qst
