#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <complex>
#include <random>

#include "oracles.hpp"
#include "qst/evolution.hpp"

using namespace qst;
using cx = std::complex<double>;

namespace {

SpectralDecomposition two_site_decomp() {
    return spectral_decompose(chain_hamiltonian(uniform_profile(2, 1.0), +1));
}

}  // namespace

TEST_SUITE("evolution") {

TEST_CASE("state validation") {
    Eigen::VectorXcd unnormalized(2);
    unnormalized << 1.0, 1.0;
    CHECK_THROWS_AS(PureState{unnormalized}, std::invalid_argument);

    Eigen::MatrixXcd skewed(3, 2);
    skewed << 1.0, 1.0, 0.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(SlaterState{skewed}, std::invalid_argument);

    CHECK_THROWS_AS(SlaterState::from_sites(4, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(SlaterState::from_sites(4, {4}), std::invalid_argument);
    CHECK_NOTHROW(SlaterState::from_sites(4, {0, 3}));
}

TEST_CASE("propagator basics") {
    const auto decomp = two_site_decomp();
    SUBCASE("zero time gives the identity") {
        CHECK((propagator(decomp, 0.0) - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() <=
              1e-12);
    }
    SUBCASE("quarter period of the two-site chain is -i times the swap") {
        Eigen::MatrixXcd expected(2, 2);
        expected << 0.0, cx(0.0, -1.0), cx(0.0, -1.0), 0.0;
        CHECK((propagator(decomp, M_PI / 2.0) - expected).cwiseAbs().maxCoeff() <= 1e-12);
    }
    SUBCASE("semigroup property and unitarity") {
        const auto chain = spectral_decompose(chain_hamiltonian(engineered_profile({6, 1}), +1));
        const double t1 = 0.37, t2 = 1.21;
        const Eigen::MatrixXcd u1 = propagator(chain, t1);
        const Eigen::MatrixXcd u2 = propagator(chain, t2);
        const Eigen::MatrixXcd u12 = propagator(chain, t1 + t2);
        CHECK((u1 * u2 - u12).cwiseAbs().maxCoeff() <= 1e-9);
        CHECK((u1.adjoint() * u1 - Eigen::MatrixXcd::Identity(6, 6)).cwiseAbs().maxCoeff() <=
              1e-10);
    }
}

TEST_CASE("evolve state") {
    const auto decomp = two_site_decomp();
    const PureState start = PureState::site_basis(2, 0);
    SUBCASE("identity propagator keeps the state") {
        const auto same = evolve_state(Eigen::MatrixXcd::Identity(2, 2), start);
        CHECK((same.amplitudes() - start.amplitudes()).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("two-site quarter-period transfer lands on -i e_2") {
        const auto moved = evolve_state(decomp, M_PI / 2.0, start);
        CHECK(std::abs(moved.amplitudes()(1) - cx(0.0, -1.0)) <= 1e-12);
        CHECK(std::abs(moved.amplitudes()(0)) <= 1e-12);
    }
    SUBCASE("energy expectation is conserved") {
        const auto op = chain_hamiltonian(uniform_profile(5, 1.0), -1);
        const auto chain = spectral_decompose(op);
        Eigen::VectorXcd amps(5);
        amps << cx(0.5, 0.1), cx(0.2, -0.3), cx(0.4, 0.0), cx(0.1, 0.2), cx(0.3, -0.4);
        amps.normalize();
        const PureState psi(amps);
        const double energy0 =
            (psi.amplitudes().adjoint() * op.matrix() * psi.amplitudes())(0).real();
        for (double t : {0.3, 1.7, 4.0}) {
            const auto evolved = evolve_state(chain, t, psi);
            const double energy =
                (evolved.amplitudes().adjoint() * op.matrix() * evolved.amplitudes())(0).real();
            CHECK(std::abs(energy - energy0) <= 1e-9);
        }
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(evolve_state(Eigen::MatrixXcd::Identity(3, 3), start),
                        std::invalid_argument);
    }
}

TEST_CASE("evolve slater matches the single-particle path for one fermion") {
    const auto decomp = spectral_decompose(chain_hamiltonian(engineered_profile({4, 0}), +1));
    const PureState psi = PureState::site_basis(4, 2);
    const SlaterState slater = SlaterState::from_sites(4, {2});
    for (double t : {0.0, 0.4, M_PI / 2.0}) {
        const auto evolved_state = evolve_state(decomp, t, psi);
        const auto evolved_slater = evolve_slater(decomp, t, slater);
        CHECK((evolved_state.amplitudes() - evolved_slater.orbitals().col(0))
                  .cwiseAbs()
                  .maxCoeff() <= 1e-12);
    }
}

TEST_CASE("two fermions on four sites match the antisymmetrized oracle") {
    const auto op = chain_hamiltonian(engineered_profile({4, 0}), +1);
    const auto decomp = spectral_decompose(op);
    const auto basis = oracle::subsets(4, 2);
    const Eigen::MatrixXcd h_many = oracle::many_body_hamiltonian(op.matrix(), basis);

    const SlaterState start = SlaterState::random(4, 2, 99);
    const Eigen::VectorXcd amps0 = oracle::many_body_amplitudes(start.orbitals(), basis);
    for (double t : {0.2, 0.9, M_PI / 2.0}) {
        const SlaterState evolved = evolve_slater(decomp, t, start);
        const Eigen::VectorXcd expected = oracle::evolve_many_body(h_many, amps0, t);
        const Eigen::VectorXcd got = oracle::many_body_amplitudes(evolved.orbitals(), basis);
        CHECK((expected - got).cwiseAbs().maxCoeff() <= 1e-9);
    }
}

TEST_CASE("slater overlap") {
    const SlaterState a = SlaterState::from_sites(4, {0, 1});
    SUBCASE("self overlap is one") {
        CHECK(std::abs(slater_overlap(a, a) - cx(1.0, 0.0)) <= 1e-12);
    }
    SUBCASE("disjoint occupations are orthogonal") {
        const SlaterState b = SlaterState::from_sites(4, {2, 3});
        CHECK(std::abs(slater_overlap(a, b)) <= 1e-12);
    }
    SUBCASE("random pairs match the brute-force inner product") {
        const auto basis = oracle::subsets(4, 2);
        for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
            const SlaterState x = SlaterState::random(4, 2, seed);
            const SlaterState y = SlaterState::random(4, 2, seed + 100);
            const cx direct = slater_overlap(x, y);
            const cx brute = oracle::many_body_amplitudes(x.orbitals(), basis)
                                 .dot(oracle::many_body_amplitudes(y.orbitals(), basis));
            CHECK(std::abs(direct - brute) <= 1e-10);
        }
    }
    SUBCASE("particle number mismatch") {
        const SlaterState b = SlaterState::from_sites(4, {2});
        CHECK_THROWS_AS(slater_overlap(a, b), std::invalid_argument);
    }
}

TEST_CASE("apply symmetry to slater states") {
    const SiteBasis basis{{4, 1, 1}};
    const auto r = reflection_operator(basis);
    SUBCASE("reflection applied twice restores the state") {
        const SlaterState s = SlaterState::random(4, 2, 7);
        const SlaterState twice = apply_symmetry_slater(r, apply_symmetry_slater(r, s));
        CHECK(std::abs(std::abs(slater_overlap(s, twice)) - 1.0) <= 1e-12);
        CHECK((twice.orbitals() - s.orbitals()).cwiseAbs().maxCoeff() <= 1e-12);
    }
    SUBCASE("parity eigen-orbitals give the product of parities") {
        const auto decomp = spectral_decompose(chain_hamiltonian(engineered_profile({4, 1}), +1));
        const auto adapted = symmetry_adapted_eigensystem(decomp, r);
        const SlaterState s(adapted.decomposition.eigenvectors.leftCols(3));
        const SlaterState rs = apply_symmetry_slater(r, s);
        cx expected(1.0, 0.0);
        for (int i = 0; i < 3; ++i) expected *= adapted.parities.values[i];
        CHECK(std::abs(slater_overlap(s, rs) - expected) <= 1e-9);
    }
    SUBCASE("full-revolution translation is the identity") {
        const auto t = translation_operator(5, 5);
        const SlaterState s = SlaterState::random(5, 2, 3);
        const SlaterState moved = apply_symmetry_slater(t, s);
        CHECK((moved.orbitals() - s.orbitals()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("correlation matrix") {
    SUBCASE("single particle at a site") {
        const auto c = correlation_matrix(SlaterState::from_sites(3, {0}));
        Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(3, 3);
        expected(0, 0) = 1.0;
        CHECK((c.entries - expected).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("full filling gives the identity") {
        const auto c = correlation_matrix(SlaterState::from_sites(3, {0, 1, 2}));
        CHECK((c.entries - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-12);
    }
    SUBCASE("invariants and evolution covariance") {
        const auto decomp = spectral_decompose(chain_hamiltonian(engineered_profile({6, 0}), +1));
        const SlaterState s = SlaterState::random(6, 3, 21);
        const auto c = correlation_matrix(s);
        CHECK((c.entries - c.entries.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK((c.entries * c.entries - c.entries).cwiseAbs().maxCoeff() <= 1e-9);
        CHECK(std::abs(c.entries.trace().real() - 3.0) <= 1e-9);
        const double t = 0.8;
        const Eigen::MatrixXcd u = propagator(decomp, t);
        const auto evolved = correlation_matrix(evolve_slater(u, s));
        CHECK((evolved.entries - u * c.entries * u.adjoint()).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("fidelity") {
    const PureState a = PureState::site_basis(3, 0);
    const PureState b = PureState::site_basis(3, 1);
    CHECK(fidelity(a, a) == doctest::Approx(1.0));
    CHECK(fidelity(a, b) == doctest::Approx(0.0));
    Eigen::VectorXcd phased = a.amplitudes() * cx(0.0, 1.0);
    CHECK(fidelity(a, PureState(phased)) == doctest::Approx(1.0));

    const SlaterState sa = SlaterState::random(5, 2, 13);
    Eigen::MatrixXcd rotated = sa.orbitals() * cx(std::cos(0.7), std::sin(0.7));
    CHECK(fidelity(sa, SlaterState(rotated)) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("many-body mirror transfer holds for random slater states") {
    const std::vector<LatticeEngineering> lattices = {
        LatticeEngineering{{{8, 1}}},
        LatticeEngineering{{{4, 0}, {2, 0}}},
    };
    for (const auto& eng : lattices) {
        const auto decomp = spectral_decompose(lattice_total_hamiltonian(eng));
        const auto r = reflection_operator(lattice_basis(eng));
        const int dim = decomp.dim();
        for (std::uint64_t seed : {10u, 20u, 30u}) {
            const SlaterState s = SlaterState::random(dim, 3, seed);
            const SlaterState reflected = apply_symmetry_slater(r, s);
            const SlaterState evolved = evolve_slater(decomp, M_PI / 2.0, s);
            CHECK(fidelity(reflected, evolved) >= 1.0 - 1e-8);
        }
    }
}

TEST_CASE("slater operations agree with the antisymmetrized construction up to D=6") {
    std::mt19937_64 rng(5);
    for (int dim : {4, 5, 6}) {
        for (int particles : {1, 2, 3}) {
            const auto basis = oracle::subsets(dim, particles);
            const auto op = chain_hamiltonian(uniform_profile(dim, 1.0), -1);
            const auto decomp = spectral_decompose(op);
            const Eigen::MatrixXcd h_many = oracle::many_body_hamiltonian(op.matrix(), basis);
            const SlaterState x = SlaterState::random(dim, particles, rng());
            const SlaterState y = SlaterState::random(dim, particles, rng());
            // Overlap,
            const cx brute = oracle::many_body_amplitudes(x.orbitals(), basis)
                                 .dot(oracle::many_body_amplitudes(y.orbitals(), basis));
            CHECK(std::abs(slater_overlap(x, y) - brute) <= 1e-9);
            // and evolution.
            const double t = 1.3;
            const Eigen::VectorXcd expected = oracle::evolve_many_body(
                h_many, oracle::many_body_amplitudes(x.orbitals(), basis), t);
            const Eigen::VectorXcd got =
                oracle::many_body_amplitudes(evolve_slater(decomp, t, x).orbitals(), basis);
            CHECK((expected - got).cwiseAbs().maxCoeff() <= 1e-9);
        }
    }
}

}  // TEST_SUITE
