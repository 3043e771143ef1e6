#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "qst/couplings.hpp"
#include "qst/evolution.hpp"

namespace qst {

/// Single particle placed at one lattice site (1-based coordinates).
struct SiteInitial {
    std::array<int, 3> coords{1, 1, 1};
};

/// Single particle with explicit site amplitudes.
struct AmplitudeInitial {
    Eigen::VectorXcd amplitudes;
};

/// Fermions localized on a list of lattice sites.
struct OccupationInitial {
    std::vector<std::array<int, 3>> sites;
};

/// Haar-ish random Slater determinant drawn from the experiment seed.
struct RandomSlaterInitial {
    int particles = 1;
};

/// Fermions filling the lowest-energy orbitals of the lattice.
struct OrbitalFillInitial {
    int particles = 1;
};

using MirrorInitial =
    std::variant<SiteInitial, AmplitudeInitial, OccupationInitial, RandomSlaterInitial, OrbitalFillInitial>;

struct MirrorExperimentSpec {
    LatticeEngineering lattice;
    MirrorInitial initial = SiteInitial{};
    std::vector<double> time_grid;  // nonempty, ascending; pi/2 is appended automatically
    std::uint64_t seed = 0;
};

struct PacketSpec {
    double k0 = 0.0;       // center momentum, radians in (-pi, pi]
    double sigma_k = 0.1;  // Gaussian width in k, radians
    enum class Branch { right, left } branch = Branch::right;
};

struct RingExperimentSpec {
    int sites = 8;          // N >= 8, even
    double hopping = 1.0;   // J > 0
    int sea_particles = 1;  // 0 < n_f < N, closed shell
    PacketSpec packet;
    int displacement = 1;  // a, integer sites; target time is a/(2J)
    double delta = 0.35;   // linear-region halfwidth around |k| = pi/2
    std::vector<double> time_grid;
};

struct FidelityCurve {
    std::vector<double> times;
    std::vector<double> fidelities;
    double peak_time = 0.0;
    double peak_value = 0.0;
};

struct EffectiveModelReport {
    double tau = 0.0;
    double fidelity_exact_vs_target = 0.0;
    double fidelity_effective_vs_target = 0.0;
    double model_agreement = 0.0;  // |<psi_exact(tau)|psi_eff(tau)>|
};

struct MomentumPartition {
    std::vector<double> linear;     // k with ||k| - pi/2| <= delta
    std::vector<double> nonlinear;  // complement
};

/// Ring momenta 2 pi q / N mapped to (-pi, pi], in q order.
std::vector<double> ring_momenta(int sites);

/// Splits the ring momenta into the linear region around |k| = pi/2 and its
/// complement. The two sets always partition all N modes.
MomentumPartition classify_linear_region(int sites, double delta);

/// Plane-wave Slater determinant filling the n_f lowest ring energies.
/// Rejects open shells (degeneracy at the Fermi level) and suggests nearby
/// closed-shell fillings in the error message.
SlaterState build_fermi_sea(int sites, int sea_particles, double hopping = 1.0);

/// Fermi sea plus one Gaussian wave-packet orbital built from unoccupied
/// modes of the chosen branch inside the linear region. The Gaussian
/// envelope is cut off at 4 sigma; weight leaking outside the linear region
/// beyond 1e-6 is a configuration error.
SlaterState build_surface_packet(const RingExperimentSpec& spec);

/// Normalized Gaussian packet over all ring modes (4 sigma cutoff); the
/// single-particle baseline initial state.
PureState ring_gaussian_packet(int sites, double k0, double sigma_k);

/// Fidelity of the evolved state against its diagonal reflection, over the
/// time grid with t = pi/2 appended.
FidelityCurve run_mirror_transfer(const MirrorExperimentSpec& spec);
FidelityCurve run_many_body_mirror(const MirrorExperimentSpec& spec);

/// Fidelity of the evolved packet state against its translation by `a`
/// sites, over the time grid with tau = a/(2J) appended.
FidelityCurve run_ring_translation(const RingExperimentSpec& spec);

/// Compares exact ring evolution with the linearized-dispersion model
/// (2J|k| - pi J on the linear region, exact values elsewhere) at a/(2J).
EffectiveModelReport effective_hamiltonian_fidelity(const RingExperimentSpec& spec);

/// Translation fidelity of a lone Gaussian packet on the ring.
FidelityCurve baseline_single_particle(int sites, double hopping, double k0, double sigma_k,
                                       int displacement, const std::vector<double>& time_grid);

}  // namespace qst
