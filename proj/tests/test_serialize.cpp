#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "qst/serialize.hpp"

using namespace qst;
using nlohmann::json;

TEST_SUITE("serialize") {

TEST_CASE("coupling profile json schema and round trip") {
    const auto profile = engineered_profile({4, 0});
    const json j = to_json(profile);
    CHECK(j.at("N") == 4);
    CHECK(j.at("values").size() == 3);
    const auto back = coupling_profile_from_json(j);
    CHECK(back.sites == profile.sites);
    CHECK(back.values == profile.values);
}

TEST_CASE("lattice engineering json schema and round trip") {
    const LatticeEngineering eng{{{4, 1}, {2, 0}}};
    const json j = to_json(eng);
    CHECK(j.at("axes").size() == 2);
    CHECK(j.at("axes")[0].at("N") == 4);
    CHECK(j.at("axes")[0].at("m") == 1);
    const auto back = lattice_from_json(j);
    REQUIRE(back.axes.size() == 2);
    CHECK(back.axes[1].sites == 2);
    CHECK(back.axes[1].gap == 0);
}

TEST_CASE("hermitian operator round trips through dim/re/im") {
    const auto op = ring_hamiltonian(4, 1.5);
    const json j = to_json(op);
    CHECK(j.at("dim") == 4);
    const auto back = hermitian_from_json(j);
    CHECK((back.matrix() - op.matrix()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("states round trip") {
    Eigen::VectorXcd amps(3);
    amps << std::complex<double>(0.6, 0.0), std::complex<double>(0.0, 0.8),
        std::complex<double>(0.0, 0.0);
    const PureState psi(amps);
    const json j = to_json(psi);
    REQUIRE(j.is_array());
    CHECK(j[1].at("im") == 0.8);
    const auto back = pure_state_from_json(j);
    CHECK((back.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff() == 0.0);

    const SlaterState s = SlaterState::random(4, 2, 17);
    const auto s_back = slater_state_from_json(to_json(s));
    CHECK((s_back.orbitals() - s.orbitals()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("report serialization carries the typed fields") {
    const auto ssmc = verify_ssmc({-3.0, -1.0, 1.0, 3.0},
                                  {{1, 0}, {-1, 0}, {1, 0}, {-1, 0}}, M_PI / 2.0);
    const json js = to_json(ssmc);
    CHECK(js.at("pass") == true);
    CHECK(js.at("global_phase").contains("re"));
    CHECK(js.at("global_phase").contains("im"));

    const auto spmc = verify_spmc({-3.0, -1.0, 1.0, 3.0}, {1.0, -1.0, 1.0, -1.0});
    const json jp = to_json(spmc);
    CHECK(jp.at("E0") == doctest::Approx(2.0));
    CHECK(jp.at("offset") == doctest::Approx(-3.0));
    CHECK(jp.at("labels").size() == 4);
    CHECK(jp.at("sign") == 1);
    CHECK(jp.at("tau") == doctest::Approx(M_PI / 2.0));
    CHECK(jp.at("pass") == true);
}

TEST_CASE("csv formats") {
    const std::string spectrum = spectrum_csv({-1.5, 0.25});
    CHECK(spectrum == "index,eigenvalue\n0,-1.5\n1,0.25\n");

    FidelityCurve curve;
    curve.times = {0.0, 0.5};
    curve.fidelities = {1.0, 0.125};
    curve.peak_time = 0.0;
    curve.peak_value = 1.0;
    CHECK(curve_csv(curve) == "t,fidelity\n0,1\n0.5,0.125\n");
    const json sidecar = to_json(curve);
    CHECK(sidecar.at("peak_time") == 0.0);
    CHECK(sidecar.at("peak_value") == 1.0);
}

TEST_CASE("atomic write replaces the target without leftovers") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "qst_serialize_test";
    fs::create_directories(dir);
    const fs::path target = dir / "out.txt";
    atomic_write(target, "first\n");
    atomic_write(target, "second\n");
    std::ifstream in(target);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == "second\n");
    int entries = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        ++entries;
        (void)entry;
    }
    CHECK(entries == 1);
    fs::remove_all(dir);
}

}  // TEST_SUITE
