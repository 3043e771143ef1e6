#include "qst/hamiltonian.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qst {

int SiteBasis::index(const std::array<int, 3>& c) const {
    for (int axis = 0; axis < 3; ++axis) {
        if (c[axis] < 1 || c[axis] > dims[axis]) {
            throw std::invalid_argument("site basis: coordinate out of range");
        }
    }
    return (c[0] - 1) + dims[0] * (c[1] - 1) + dims[0] * dims[1] * (c[2] - 1);
}

std::array<int, 3> SiteBasis::coords(int index) const {
    if (index < 0 || index >= dimension()) {
        throw std::invalid_argument("site basis: index out of range");
    }
    std::array<int, 3> c;
    c[0] = index % dims[0] + 1;
    c[1] = (index / dims[0]) % dims[1] + 1;
    c[2] = index / (dims[0] * dims[1]) + 1;
    return c;
}

SiteBasis lattice_basis(const LatticeEngineering& eng) {
    validate(eng);
    SiteBasis basis;
    for (std::size_t axis = 0; axis < eng.axes.size(); ++axis) {
        basis.dims[axis] = eng.axes[axis].sites;
    }
    return basis;
}

HermitianOperator::HermitianOperator(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) {
        throw std::invalid_argument("hermitian operator: matrix must be square");
    }
    const double asym = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-12) {
        throw std::invalid_argument("hermitian operator: matrix is not Hermitian (deviation " +
                                    std::to_string(asym) + ")");
    }
}

HermitianOperator chain_hamiltonian(const CouplingProfile& profile, int sign) {
    validate(profile);
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("chain hamiltonian: sign must be +1 or -1");
    }
    const int n = profile.sites;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        h(i, i + 1) = sign * profile.values[i];
        h(i + 1, i) = sign * profile.values[i];
    }
    return HermitianOperator(std::move(h));
}

HermitianOperator ring_hamiltonian(int sites, double hopping) {
    if (sites < 3) {
        throw std::invalid_argument("ring hamiltonian: need at least 3 sites");
    }
    if (!(hopping > 0.0)) {
        throw std::invalid_argument("ring hamiltonian: hopping must be positive");
    }
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(sites, sites);
    for (int i = 0; i < sites; ++i) {
        const int j = (i + 1) % sites;
        h(i, j) -= hopping;
        h(j, i) -= hopping;
    }
    return HermitianOperator(std::move(h));
}

std::vector<HermitianOperator> bond_field_axis_hamiltonians(const BondField& field, int max_dim) {
    const auto& dims = field.dims();
    const int d = dims[0] * dims[1] * dims[2];
    if (d > max_dim) {
        throw std::length_error("axis hamiltonians: dimension " + std::to_string(d) +
                                " exceeds limit " + std::to_string(max_dim));
    }
    SiteBasis basis{dims};
    std::vector<HermitianOperator> out;
    for (int axis = 0; axis < 3; ++axis) {
        if (dims[axis] < 2) continue;  // singleton axes carry no bonds
        Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
        std::array<int, 3> site;
        for (site[2] = 1; site[2] <= dims[2]; ++site[2])
            for (site[1] = 1; site[1] <= dims[1]; ++site[1])
                for (site[0] = 1; site[0] <= dims[0]; ++site[0]) {
                    if (site[axis] + 1 > dims[axis]) continue;
                    std::array<int, 3> neighbor = site;
                    neighbor[axis] += 1;
                    const double j = field.bond(site, axis);
                    const int a = basis.index(site);
                    const int b = basis.index(neighbor);
                    h(a, b) += j;
                    h(b, a) += j;
                }
        out.emplace_back(std::move(h));
    }
    return out;
}

std::vector<HermitianOperator> lattice_axis_hamiltonians(const LatticeEngineering& eng,
                                                         int max_dim) {
    validate(eng);
    const BondField field = BondField::from_engineering(eng);
    // Declared axes all have >= 2 sites, so the field yields exactly one
    // operator per axis, in axis order.
    return bond_field_axis_hamiltonians(field, max_dim);
}

HermitianOperator lattice_total_hamiltonian(const LatticeEngineering& eng, int max_dim) {
    const auto parts = lattice_axis_hamiltonians(eng, max_dim);
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(parts[0].dim(), parts[0].dim());
    for (const auto& part : parts) total += part.matrix();
    return HermitianOperator(std::move(total));
}

double commutator_norm(const HermitianOperator& a, const HermitianOperator& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("commutator norm: dimension mismatch");
    }
    return (a.matrix() * b.matrix() - b.matrix() * a.matrix()).cwiseAbs().maxCoeff();
}

SpectralDecomposition spectral_decompose(const HermitianOperator& op) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(op.matrix());
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("spectral decompose: eigensolver failed");
    }
    SpectralDecomposition decomp;
    decomp.eigenvalues = solver.eigenvalues();
    decomp.eigenvectors = solver.eigenvectors();
    return decomp;
}

double engineered_level(const ChainEngineering& eng, int level) {
    validate(eng);
    const int n = eng.sites;
    const int m = eng.gap;
    if (level < 1 || level > n) {
        throw std::invalid_argument("engineered level: index out of range");
    }
    // For m = 0 the two branch formulas coincide for every level, which also
    // covers odd site counts.
    if (m == 0) return static_cast<double>(-n + 2 * level - 1);
    if (level <= n / 2) return static_cast<double>(-n + 2 * (level - m) - 1);
    return static_cast<double>(-n + 2 * (level + m) - 1);
}

std::vector<double> engineered_spectrum(const ChainEngineering& eng) {
    validate(eng);
    std::vector<double> spectrum;
    spectrum.reserve(eng.sites);
    for (int level = 1; level <= eng.sites; ++level) {
        spectrum.push_back(engineered_level(eng, level));
    }
    return spectrum;
}

Eigen::VectorXd recurrence_eigenvector(const ChainEngineering& eng, int level) {
    validate(eng);
    const int n = eng.sites;
    if (level < 1 || level > n) {
        throw std::invalid_argument("recurrence eigenvector: level out of range");
    }
    const double energy = engineered_level(eng, level);
    const CouplingProfile profile = engineered_profile(eng);
    // J_1 equals F(N, m) = sqrt((1+2m)(N-1+2m)), the seed denominator.
    Eigen::VectorXd phi(n);
    phi(0) = 1.0;
    if (n > 1) phi(1) = energy * phi(0) / profile.values[0];
    for (int site = 2; site < n; ++site) {
        phi(site) =
            (energy * phi(site - 1) - profile.values[site - 2] * phi(site - 2)) /
            profile.values[site - 1];
    }
    phi.normalize();
    return phi;
}

}  // namespace qst
