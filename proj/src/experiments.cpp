#include "qst/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qst {

namespace {

constexpr double kLeakageBound = 1e-6;  // packet weight allowed outside the linear region

std::vector<double> validated_grid(const std::vector<double>& grid) {
    if (grid.empty()) throw std::invalid_argument("time grid: must be nonempty");
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        if (grid[i + 1] < grid[i]) throw std::invalid_argument("time grid: must be ascending");
    }
    return grid;
}

std::vector<double> with_point(std::vector<double> grid, double point) {
    auto it = std::lower_bound(grid.begin(), grid.end(), point);
    if (it == grid.end() || *it != point) grid.insert(it, point);
    return grid;
}

FidelityCurve make_curve(std::vector<double> times, std::vector<double> fidelities) {
    FidelityCurve curve;
    curve.times = std::move(times);
    curve.fidelities = std::move(fidelities);
    const auto peak = std::max_element(curve.fidelities.begin(), curve.fidelities.end());
    curve.peak_value = *peak;
    curve.peak_time = curve.times[std::distance(curve.fidelities.begin(), peak)];
    return curve;
}

Eigen::VectorXcd plane_wave(int sites, double k) {
    Eigen::VectorXcd wave(sites);
    const double scale = 1.0 / std::sqrt(static_cast<double>(sites));
    for (int j = 0; j < sites; ++j) {
        wave(j) = scale * std::complex<double>(std::cos(k * j), std::sin(k * j));
    }
    return wave;
}

double circular_distance(double k, double k0) {
    return std::abs(std::remainder(k - k0, 2.0 * M_PI));
}

double ring_energy(double hopping, double k) { return -2.0 * hopping * std::cos(k); }

bool in_linear_region(double k, double delta) {
    return std::abs(std::abs(k) - M_PI / 2.0) <= delta + 1e-12;
}

bool on_branch(double k, PacketSpec::Branch branch) {
    return branch == PacketSpec::Branch::right ? k > 1e-12 : k < -1e-12;
}

void validate_ring_core(const RingExperimentSpec& spec) {
    if (spec.sites < 8 || spec.sites % 2 != 0) {
        throw std::invalid_argument("ring spec: need an even ring of at least 8 sites");
    }
    if (!(spec.hopping > 0.0)) throw std::invalid_argument("ring spec: hopping must be positive");
    if (spec.sea_particles <= 0 || spec.sea_particles >= spec.sites) {
        throw std::invalid_argument("ring spec: need 0 < sea particles < sites");
    }
    if (!(spec.packet.sigma_k > 0.0) || !(spec.packet.sigma_k < M_PI / 2.0)) {
        throw std::invalid_argument("ring spec: need 0 < sigma_k < pi/2");
    }
    if (spec.displacement < 1 || spec.displacement >= spec.sites) {
        throw std::invalid_argument("ring spec: need 1 <= displacement < sites");
    }
    if (!(spec.delta > 0.0) || spec.delta > M_PI / 2.0 + 1e-12) {
        throw std::invalid_argument("ring spec: need 0 < delta <= pi/2");
    }
}

// Mode indices of the n_f lowest ring energies, energy-sorted with a
// deterministic tie-break. Throws on an open shell.
std::vector<int> fermi_sea_occupation(int sites, int sea_particles, double hopping) {
    const std::vector<double> momenta = ring_momenta(sites);
    std::vector<int> order(sites);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double ea = ring_energy(hopping, momenta[a]);
        const double eb = ring_energy(hopping, momenta[b]);
        if (ea != eb) return ea < eb;
        return momenta[a] < momenta[b];
    });
    const double shell_tol = 4.0 * hopping * 1e-9;
    const double gap = ring_energy(hopping, momenta[order[sea_particles]]) -
                       ring_energy(hopping, momenta[order[sea_particles - 1]]);
    if (gap <= shell_tol) {
        std::ostringstream msg;
        msg << "fermi sea: open shell at " << sea_particles
            << " particles (degenerate Fermi level); closed-shell fillings nearby:";
        for (int count = 1; count < sites; ++count) {
            const double g = ring_energy(hopping, momenta[order[count]]) -
                             ring_energy(hopping, momenta[order[count - 1]]);
            if (g > shell_tol && std::abs(count - sea_particles) <= 2) msg << ' ' << count;
        }
        throw std::invalid_argument(msg.str());
    }
    return {order.begin(), order.begin() + sea_particles};
}

}  // namespace

std::vector<double> ring_momenta(int sites) {
    if (sites < 3) throw std::invalid_argument("ring momenta: need at least 3 sites");
    std::vector<double> momenta(sites);
    for (int q = 0; q < sites; ++q) {
        // Exact symmetric representative in (-pi, pi].
        momenta[q] = 2.0 * q > sites ? 2.0 * M_PI * (q - sites) / sites : 2.0 * M_PI * q / sites;
    }
    return momenta;
}

MomentumPartition classify_linear_region(int sites, double delta) {
    if (!(delta > 0.0) || delta > M_PI / 2.0 + 1e-12) {
        throw std::invalid_argument("linear region: need 0 < delta <= pi/2");
    }
    MomentumPartition partition;
    for (double k : ring_momenta(sites)) {
        (in_linear_region(k, delta) ? partition.linear : partition.nonlinear).push_back(k);
    }
    return partition;
}

SlaterState build_fermi_sea(int sites, int sea_particles, double hopping) {
    if (sites < 3) throw std::invalid_argument("fermi sea: need at least 3 sites");
    if (!(hopping > 0.0)) throw std::invalid_argument("fermi sea: hopping must be positive");
    if (sea_particles <= 0 || sea_particles >= sites) {
        throw std::invalid_argument("fermi sea: need 0 < particles < sites");
    }
    const std::vector<double> momenta = ring_momenta(sites);
    const std::vector<int> occupied = fermi_sea_occupation(sites, sea_particles, hopping);
    Eigen::MatrixXcd orbitals(sites, sea_particles);
    for (int i = 0; i < sea_particles; ++i) {
        orbitals.col(i) = plane_wave(sites, momenta[occupied[i]]);
    }
    return SlaterState(std::move(orbitals));
}

SlaterState build_surface_packet(const RingExperimentSpec& spec) {
    validate_ring_core(spec);
    const int sites = spec.sites;
    const std::vector<double> momenta = ring_momenta(sites);
    const std::vector<int> occupied =
        fermi_sea_occupation(sites, spec.sea_particles, spec.hopping);
    std::vector<bool> is_occupied(sites, false);
    for (int q : occupied) is_occupied[q] = true;

    const double sigma = spec.packet.sigma_k;
    double weight_in = 0.0;
    double weight_out = 0.0;
    std::vector<std::pair<int, double>> support;  // (mode, envelope) inside the linear region
    for (int q = 0; q < sites; ++q) {
        if (is_occupied[q]) continue;
        const double k = momenta[q];
        if (!on_branch(k, spec.packet.branch)) continue;
        const double dist = circular_distance(k, spec.packet.k0);
        if (dist > 4.0 * sigma) continue;
        const double envelope = std::exp(-dist * dist / (2.0 * sigma * sigma));
        if (in_linear_region(k, spec.delta)) {
            support.emplace_back(q, envelope);
            weight_in += envelope * envelope;
        } else {
            weight_out += envelope * envelope;
        }
    }
    if (support.empty()) {
        throw std::invalid_argument("surface packet: empty support (no unoccupied branch modes "
                                    "within 4 sigma of k0 inside the linear region)");
    }
    if (weight_out / (weight_in + weight_out) > kLeakageBound) {
        throw std::invalid_argument(
            "surface packet: envelope weight outside the linear region exceeds 1e-6 "
            "(widen delta or narrow sigma_k)");
    }

    Eigen::VectorXcd orbital = Eigen::VectorXcd::Zero(sites);
    for (const auto& [q, envelope] : support) {
        orbital += envelope * plane_wave(sites, momenta[q]);
    }
    orbital.normalize();

    Eigen::MatrixXcd orbitals(sites, spec.sea_particles + 1);
    for (int i = 0; i < spec.sea_particles; ++i) {
        orbitals.col(i) = plane_wave(sites, momenta[occupied[i]]);
    }
    orbitals.col(spec.sea_particles) = orbital;
    return SlaterState(std::move(orbitals));
}

PureState ring_gaussian_packet(int sites, double k0, double sigma_k) {
    if (sites < 3) throw std::invalid_argument("gaussian packet: need at least 3 sites");
    if (!(sigma_k > 0.0)) throw std::invalid_argument("gaussian packet: sigma_k must be positive");
    const std::vector<double> momenta = ring_momenta(sites);
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(sites);
    bool any = false;
    for (double k : momenta) {
        const double dist = circular_distance(k, k0);
        if (dist > 4.0 * sigma_k) continue;
        amps += std::exp(-dist * dist / (2.0 * sigma_k * sigma_k)) * plane_wave(sites, k);
        any = true;
    }
    if (!any) throw std::invalid_argument("gaussian packet: empty support");
    amps.normalize();
    return PureState(std::move(amps));
}

FidelityCurve run_mirror_transfer(const MirrorExperimentSpec& spec) {
    validate(spec.lattice);
    const SiteBasis basis = lattice_basis(spec.lattice);
    const int dim = basis.dimension();

    PureState initial = [&]() -> PureState {
        if (const auto* site = std::get_if<SiteInitial>(&spec.initial)) {
            return PureState::site_basis(dim, basis.index(site->coords));
        }
        if (const auto* amp = std::get_if<AmplitudeInitial>(&spec.initial)) {
            if (amp->amplitudes.size() != dim) {
                throw std::invalid_argument("mirror transfer: amplitude length mismatch");
            }
            return PureState(amp->amplitudes);
        }
        throw std::invalid_argument("mirror transfer: needs a single-particle initial state");
    }();

    const SpectralDecomposition decomp =
        spectral_decompose(lattice_total_hamiltonian(spec.lattice));
    const SymmetryOperator reflection = reflection_operator(basis);
    const PureState target(reflection.apply(initial.amplitudes()));

    const std::vector<double> times = with_point(validated_grid(spec.time_grid), M_PI / 2.0);
    std::vector<double> fidelities;
    fidelities.reserve(times.size());
    for (double t : times) {
        fidelities.push_back(fidelity(target, evolve_state(decomp, t, initial)));
    }
    return make_curve(times, std::move(fidelities));
}

FidelityCurve run_many_body_mirror(const MirrorExperimentSpec& spec) {
    validate(spec.lattice);
    const SiteBasis basis = lattice_basis(spec.lattice);
    const int dim = basis.dimension();
    const SpectralDecomposition decomp =
        spectral_decompose(lattice_total_hamiltonian(spec.lattice));

    SlaterState initial = [&]() -> SlaterState {
        if (const auto* occ = std::get_if<OccupationInitial>(&spec.initial)) {
            std::vector<int> sites;
            sites.reserve(occ->sites.size());
            for (const auto& coords : occ->sites) sites.push_back(basis.index(coords));
            return SlaterState::from_sites(dim, sites);
        }
        if (const auto* random = std::get_if<RandomSlaterInitial>(&spec.initial)) {
            return SlaterState::random(dim, random->particles, spec.seed);
        }
        if (const auto* fill = std::get_if<OrbitalFillInitial>(&spec.initial)) {
            if (fill->particles < 1 || fill->particles > dim) {
                throw std::invalid_argument("mirror transfer: particle count out of range");
            }
            return SlaterState(decomp.eigenvectors.leftCols(fill->particles));
        }
        throw std::invalid_argument("many-body mirror: needs a fermionic initial state");
    }();

    const SymmetryOperator reflection = reflection_operator(basis);
    const SlaterState target = apply_symmetry_slater(reflection, initial);

    const std::vector<double> times = with_point(validated_grid(spec.time_grid), M_PI / 2.0);
    std::vector<double> fidelities;
    fidelities.reserve(times.size());
    for (double t : times) {
        fidelities.push_back(fidelity(target, evolve_slater(decomp, t, initial)));
    }
    return make_curve(times, std::move(fidelities));
}

FidelityCurve run_ring_translation(const RingExperimentSpec& spec) {
    validate_ring_core(spec);
    const SlaterState initial = build_surface_packet(spec);
    const SymmetryOperator translation = translation_operator(spec.sites, spec.displacement);
    const SlaterState target = apply_symmetry_slater(translation, initial);
    const SpectralDecomposition decomp =
        spectral_decompose(ring_hamiltonian(spec.sites, spec.hopping));

    const double tau = spec.displacement / (2.0 * spec.hopping);
    const std::vector<double> times = with_point(validated_grid(spec.time_grid), tau);
    std::vector<double> fidelities;
    fidelities.reserve(times.size());
    for (double t : times) {
        fidelities.push_back(fidelity(target, evolve_slater(decomp, t, initial)));
    }
    return make_curve(times, std::move(fidelities));
}

EffectiveModelReport effective_hamiltonian_fidelity(const RingExperimentSpec& spec) {
    validate_ring_core(spec);
    const SlaterState initial = build_surface_packet(spec);
    const SymmetryOperator translation = translation_operator(spec.sites, spec.displacement);
    const SlaterState target = apply_symmetry_slater(translation, initial);

    const int sites = spec.sites;
    const double hopping = spec.hopping;
    const std::vector<double> momenta = ring_momenta(sites);

    // Linearized dispersion 2J|k| - pi J on the linear region (the Taylor
    // expansion of -2J cos k at |k| = pi/2); exact values frozen elsewhere.
    Eigen::MatrixXcd modes(sites, sites);
    Eigen::VectorXd dispersion(sites);
    for (int q = 0; q < sites; ++q) {
        modes.col(q) = plane_wave(sites, momenta[q]);
        dispersion(q) = in_linear_region(momenta[q], spec.delta)
                            ? 2.0 * hopping * std::abs(momenta[q]) - M_PI * hopping
                            : ring_energy(hopping, momenta[q]);
    }
    Eigen::MatrixXcd effective =
        modes * dispersion.cast<std::complex<double>>().asDiagonal() * modes.adjoint();
    effective = (effective + effective.adjoint().eval()) / 2.0;

    const SpectralDecomposition exact_decomp =
        spectral_decompose(ring_hamiltonian(sites, hopping));
    const SpectralDecomposition effective_decomp =
        spectral_decompose(HermitianOperator(std::move(effective)));

    const double tau = spec.displacement / (2.0 * hopping);
    const SlaterState evolved_exact = evolve_slater(exact_decomp, tau, initial);
    const SlaterState evolved_effective = evolve_slater(effective_decomp, tau, initial);

    EffectiveModelReport report;
    report.tau = tau;
    report.fidelity_exact_vs_target = fidelity(target, evolved_exact);
    report.fidelity_effective_vs_target = fidelity(target, evolved_effective);
    report.model_agreement = fidelity(evolved_exact, evolved_effective);
    return report;
}

FidelityCurve baseline_single_particle(int sites, double hopping, double k0, double sigma_k,
                                       int displacement, const std::vector<double>& time_grid) {
    if (sites < 3) throw std::invalid_argument("baseline: need at least 3 sites");
    if (!(hopping > 0.0)) throw std::invalid_argument("baseline: hopping must be positive");
    if (displacement < 1 || displacement >= sites) {
        throw std::invalid_argument("baseline: need 1 <= displacement < sites");
    }
    const PureState initial = ring_gaussian_packet(sites, k0, sigma_k);
    const SymmetryOperator translation = translation_operator(sites, displacement);
    const PureState target(translation.apply(initial.amplitudes()));
    const SpectralDecomposition decomp = spectral_decompose(ring_hamiltonian(sites, hopping));

    const double tau = displacement / (2.0 * hopping);
    const std::vector<double> times = with_point(validated_grid(time_grid), tau);
    std::vector<double> fidelities;
    fidelities.reserve(times.size());
    for (double t : times) {
        fidelities.push_back(fidelity(target, evolve_state(decomp, t, initial)));
    }
    return make_curve(times, std::move(fidelities));
}

}  // namespace qst
