#include "qst/symmetry.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qst {

namespace {

constexpr double kClusterThreshold = 1e-8;  // degenerate-eigenvalue spread

std::complex<double> unit_phase(double angle) {
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

SymmetryOperator::SymmetryOperator(std::vector<int> site_map)
    : SymmetryOperator(std::move(site_map), {}) {}

SymmetryOperator::SymmetryOperator(std::vector<int> site_map,
                                   std::vector<std::complex<double>> phases)
    : site_map_(std::move(site_map)), phases_(std::move(phases)) {
    const int n = static_cast<int>(site_map_.size());
    if (n == 0) throw std::invalid_argument("symmetry operator: empty site map");
    std::vector<bool> seen(n, false);
    for (int target : site_map_) {
        if (target < 0 || target >= n || seen[target]) {
            throw std::invalid_argument("symmetry operator: site map is not a permutation");
        }
        seen[target] = true;
    }
    if (phases_.empty()) {
        phases_.assign(n, std::complex<double>(1.0, 0.0));
    }
    if (static_cast<int>(phases_.size()) != n) {
        throw std::invalid_argument("symmetry operator: phase list length mismatch");
    }
    for (const auto& phase : phases_) {
        if (std::abs(std::abs(phase) - 1.0) > 1e-12) {
            throw std::invalid_argument("symmetry operator: phases must have unit modulus");
        }
    }
}

Eigen::MatrixXcd SymmetryOperator::matrix() const {
    const int n = dim();
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(n, n);
    for (int j = 0; j < n; ++j) s(site_map_[j], j) = phases_[j];
    return s;
}

Eigen::VectorXcd SymmetryOperator::apply(const Eigen::VectorXcd& v) const {
    if (v.size() != dim()) throw std::invalid_argument("symmetry operator: dimension mismatch");
    Eigen::VectorXcd out(dim());
    for (int j = 0; j < dim(); ++j) out(site_map_[j]) = phases_[j] * v(j);
    return out;
}

Eigen::MatrixXcd SymmetryOperator::apply_columns(const Eigen::MatrixXcd& m) const {
    if (m.rows() != dim()) throw std::invalid_argument("symmetry operator: dimension mismatch");
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (int j = 0; j < dim(); ++j) out.row(site_map_[j]) = phases_[j] * m.row(j);
    return out;
}

SymmetryOperator reflection_operator(const SiteBasis& basis) {
    const int d = basis.dimension();
    std::vector<int> site_map(d);
    for (int index = 0; index < d; ++index) {
        auto c = basis.coords(index);
        for (int axis = 0; axis < 3; ++axis) c[axis] = basis.dims[axis] + 1 - c[axis];
        site_map[index] = basis.index(c);
    }
    return SymmetryOperator(std::move(site_map));
}

SymmetryOperator translation_operator(int ring_sites, int shift) {
    if (ring_sites < 3) {
        throw std::invalid_argument("translation operator: need at least 3 ring sites");
    }
    const int a = ((shift % ring_sites) + ring_sites) % ring_sites;
    std::vector<int> site_map(ring_sites);
    for (int j = 0; j < ring_sites; ++j) site_map[j] = (j + a) % ring_sites;
    return SymmetryOperator(std::move(site_map));
}

SymmetryEigensystem symmetry_adapted_eigensystem(const SpectralDecomposition& decomp,
                                                 const SymmetryOperator& sym) {
    const int n = decomp.dim();
    if (n == 0) throw std::invalid_argument("eigen parities: empty decomposition");
    if (sym.dim() != n) throw std::invalid_argument("eigen parities: dimension mismatch");

    const Eigen::MatrixXcd s = sym.matrix();
    const Eigen::MatrixXcd h = decomp.eigenvectors *
                               decomp.eigenvalues.cast<std::complex<double>>().asDiagonal() *
                               decomp.eigenvectors.adjoint();
    const double scale = std::max(1.0, decomp.eigenvalues.cwiseAbs().maxCoeff());
    const double comm = (h * s - s * h).cwiseAbs().maxCoeff();
    if (comm > 1e-10 * scale) {
        throw std::invalid_argument("eigen parities: Hamiltonian does not commute with the "
                                    "symmetry (deviation " + std::to_string(comm) + ")");
    }

    SymmetryEigensystem out;
    out.decomposition = decomp;
    out.parities.values.resize(n);
    out.parities.residuals.resize(n);

    int start = 0;
    while (start < n) {
        int end = start + 1;
        while (end < n &&
               decomp.eigenvalues(end) - decomp.eigenvalues(end - 1) < kClusterThreshold) {
            ++end;
        }
        const int width = end - start;
        if (width == 1) {
            const Eigen::VectorXcd phi = out.decomposition.eigenvectors.col(start);
            const std::complex<double> parity = phi.dot(s * phi);
            out.parities.values[start] = parity;
            out.parities.residuals[start] = (s * phi - parity * phi).cwiseAbs().maxCoeff();
        } else {
            // Diagonalize the symmetry restricted to the degenerate cluster and
            // re-pair the eigenvectors. S is unitary, hence normal, so the
            // Schur form is diagonal and Q is a unitary eigenbasis.
            const Eigen::MatrixXcd block = out.decomposition.eigenvectors.middleCols(start, width);
            const Eigen::MatrixXcd w = block.adjoint() * (s * block);
            Eigen::ComplexSchur<Eigen::MatrixXcd> schur(w);
            if (schur.info() != Eigen::Success) {
                throw std::runtime_error("eigen parities: Schur decomposition failed");
            }
            const Eigen::MatrixXcd rotated = block * schur.matrixU();
            out.decomposition.eigenvectors.middleCols(start, width) = rotated;
            for (int i = 0; i < width; ++i) {
                const std::complex<double> parity = schur.matrixT()(i, i);
                out.parities.values[start + i] = parity;
                out.parities.residuals[start + i] =
                    (s * rotated.col(i) - parity * rotated.col(i)).cwiseAbs().maxCoeff();
            }
        }
        start = end;
    }
    return out;
}

ParityTable eigen_parities(const SpectralDecomposition& decomp, const SymmetryOperator& sym) {
    return symmetry_adapted_eigensystem(decomp, sym).parities;
}

SSMCReport verify_ssmc(const std::vector<double>& energies,
                       const std::vector<std::complex<double>>& symmetry_values, double tau,
                       bool allow_global_phase, double tol) {
    if (energies.empty()) throw std::invalid_argument("verify ssmc: empty input");
    if (energies.size() != symmetry_values.size()) {
        throw std::invalid_argument("verify ssmc: list length mismatch");
    }
    for (const auto& p : symmetry_values) {
        if (std::abs(std::abs(p) - 1.0) > 1e-6) {
            throw std::invalid_argument("verify ssmc: symmetry eigenvalues must be unit modulus");
        }
    }
    SSMCReport report;
    report.tau = tau;
    if (allow_global_phase) {
        std::complex<double> g = unit_phase(-energies[0] * tau) / symmetry_values[0];
        report.global_phase = g / std::abs(g);
    } else {
        report.global_phase = {1.0, 0.0};
    }
    double max_dev = 0.0;
    for (std::size_t i = 0; i < energies.size(); ++i) {
        const double dev =
            std::abs(unit_phase(-energies[i] * tau) - report.global_phase * symmetry_values[i]);
        max_dev = std::max(max_dev, dev);
    }
    report.max_deviation = max_dev;
    report.pass = max_dev <= tol;
    return report;
}

namespace {

// Toleranced real gcd via symmetric-remainder Euclid. Values smaller than
// zero_tol count as zero; a divisor falling below `floor` means the inputs
// are incommensurate and yields 0.
double toleranced_gcd(const std::vector<double>& values, double zero_tol, double floor) {
    double g = 0.0;
    for (double v : values) {
        v = std::abs(v);
        if (v <= zero_tol) continue;
        if (g == 0.0) {
            g = v;
            continue;
        }
        double a = std::max(g, v);
        double b = std::min(g, v);
        while (b > zero_tol) {
            if (b < floor) return 0.0;
            const double r = std::abs(a - b * std::round(a / b));
            a = b;
            b = r;
        }
        g = a;
        if (g < floor) return 0.0;
    }
    return g;
}

int parity_sign(double p) { return p >= 0.0 ? +1 : -1; }

}  // namespace

SPMCReport verify_spmc(const std::vector<double>& energies, const std::vector<double>& parities,
                       double tol) {
    if (energies.empty()) throw std::invalid_argument("verify spmc: empty input");
    if (energies.size() != parities.size()) {
        throw std::invalid_argument("verify spmc: list length mismatch");
    }
    const int n = static_cast<int>(energies.size());

    SPMCReport report;
    const auto min_it = std::min_element(energies.begin(), energies.end());
    const auto max_it = std::max_element(energies.begin(), energies.end());
    const double span = *max_it - *min_it;
    const double scale = std::max(std::abs(*min_it), std::abs(*max_it));

    if (n == 1 || span <= kClusterThreshold) {
        // A single distinct level matches any tau; parities must agree.
        report.degenerate = true;
        report.offset = *min_it;
        report.labels.assign(n, 0);
        report.sign = parity_sign(parities[0]);
        double parity_res = 0.0;
        for (double p : parities) parity_res = std::max(parity_res, std::abs(p - report.sign));
        report.max_parity_residual = parity_res;
        report.pass = parity_res <= tol;
        return report;
    }

    std::vector<double> sorted(energies);
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> diffs;
    for (int i = 0; i + 1 < n; ++i) {
        const double d = sorted[i + 1] - sorted[i];
        if (d > kClusterThreshold) diffs.push_back(d);
    }

    const double zero_tol = 1e-9 * (1.0 + scale);
    const double floor = std::max(span * 1e-6, 2.0 * zero_tol);
    const double gcd = toleranced_gcd(diffs, zero_tol, floor);
    if (gcd <= 0.0) {
        report.max_label_residual = std::numeric_limits<double>::infinity();
        report.pass = false;
        return report;
    }

    const double offset = *min_it;
    auto fit = [&](double base) {
        std::vector<long> labels(n);
        double label_res = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = (energies[i] - offset) / base;
            labels[i] = std::lround(x);
            label_res = std::max(label_res, std::abs(x - static_cast<double>(labels[i])));
        }
        // Sign is pinned by the level at label 0 (the spectrum bottom).
        int s = +1;
        for (int i = 0; i < n; ++i) {
            if (labels[i] == 0) {
                s = parity_sign(parities[i]);
                break;
            }
        }
        double parity_res = 0.0;
        for (int i = 0; i < n; ++i) {
            const double expected = s * (labels[i] % 2 == 0 ? 1.0 : -1.0);
            parity_res = std::max(parity_res, std::abs(parities[i] - expected));
        }
        return std::tuple<std::vector<long>, double, int, double>(std::move(labels), label_res, s,
                                                                  parity_res);
    };

    auto [labels, label_res, sign, parity_res] = fit(gcd);
    double base = gcd;
    if (label_res <= tol && parity_res > tol) {
        // A commensurate ladder with uniform parity fits at half the level
        // spacing (all labels even).
        auto [labels2, label_res2, sign2, parity_res2] = fit(gcd / 2.0);
        if (label_res2 <= tol && parity_res2 <= tol) {
            labels = std::move(labels2);
            label_res = label_res2;
            sign = sign2;
            parity_res = parity_res2;
            base = gcd / 2.0;
        }
    }

    report.base_energy = base;
    report.offset = offset;
    report.labels = std::move(labels);
    report.sign = sign;
    report.max_label_residual = label_res;
    report.max_parity_residual = parity_res;
    report.tau = M_PI / base;
    report.pass = label_res <= tol && parity_res <= tol;
    return report;
}

}  // namespace qst
