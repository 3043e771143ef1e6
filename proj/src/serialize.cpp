#include "qst/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qst {

namespace {

using nlohmann::json;

json complex_to_json(const std::complex<double>& z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

std::complex<double> complex_from_json(const json& j) {
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

}  // namespace

json to_json(const CouplingProfile& profile) {
    return json{{"N", profile.sites}, {"values", profile.values}};
}

CouplingProfile coupling_profile_from_json(const json& j) {
    CouplingProfile profile;
    profile.sites = j.at("N").get<int>();
    profile.values = j.at("values").get<std::vector<double>>();
    validate(profile);
    return profile;
}

json to_json(const LatticeEngineering& eng) {
    json axes = json::array();
    for (const auto& axis : eng.axes) {
        axes.push_back(json{{"N", axis.sites}, {"m", axis.gap}});
    }
    return json{{"axes", axes}};
}

LatticeEngineering lattice_from_json(const json& j) {
    LatticeEngineering eng;
    for (const auto& axis : j.at("axes")) {
        eng.axes.push_back({axis.at("N").get<int>(), axis.at("m").get<int>()});
    }
    validate(eng);
    return eng;
}

json to_json(const HermitianOperator& op) {
    const int d = op.dim();
    json re = json::array();
    json im = json::array();
    for (int i = 0; i < d; ++i) {
        json re_row = json::array();
        json im_row = json::array();
        for (int j = 0; j < d; ++j) {
            re_row.push_back(op.matrix()(i, j).real());
            im_row.push_back(op.matrix()(i, j).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return json{{"dim", d}, {"re", re}, {"im", im}};
}

HermitianOperator hermitian_from_json(const json& j) {
    const int d = j.at("dim").get<int>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    Eigen::MatrixXcd m(d, d);
    for (int row = 0; row < d; ++row) {
        for (int col = 0; col < d; ++col) {
            m(row, col) = std::complex<double>(re.at(row).at(col).get<double>(),
                                               im.at(row).at(col).get<double>());
        }
    }
    return HermitianOperator(std::move(m));
}

json to_json(const PureState& state) {
    json amps = json::array();
    for (int i = 0; i < state.dim(); ++i) amps.push_back(complex_to_json(state.amplitudes()(i)));
    return amps;
}

PureState pure_state_from_json(const json& j) {
    Eigen::VectorXcd amps(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) amps(static_cast<int>(i)) = complex_from_json(j[i]);
    return PureState(std::move(amps));
}

json to_json(const SlaterState& state) {
    json orbitals = json::array();
    for (int col = 0; col < state.particles(); ++col) {
        json orbital = json::array();
        for (int row = 0; row < state.dim(); ++row) {
            orbital.push_back(complex_to_json(state.orbitals()(row, col)));
        }
        orbitals.push_back(std::move(orbital));
    }
    return orbitals;
}

SlaterState slater_state_from_json(const json& j) {
    if (j.empty()) throw std::invalid_argument("slater state json: empty orbital list");
    const int particles = static_cast<int>(j.size());
    const int dim = static_cast<int>(j.at(0).size());
    Eigen::MatrixXcd orbitals(dim, particles);
    for (int col = 0; col < particles; ++col) {
        const auto& orbital = j.at(col);
        if (static_cast<int>(orbital.size()) != dim) {
            throw std::invalid_argument("slater state json: ragged orbital list");
        }
        for (int row = 0; row < dim; ++row) {
            orbitals(row, col) = complex_from_json(orbital.at(row));
        }
    }
    return SlaterState(std::move(orbitals));
}

json to_json(const SSMCReport& report) {
    return json{{"tau", report.tau},
                {"global_phase", complex_to_json(report.global_phase)},
                {"max_deviation", report.max_deviation},
                {"pass", report.pass}};
}

json to_json(const SPMCReport& report) {
    return json{{"E0", report.base_energy},
                {"offset", report.offset},
                {"labels", report.labels},
                {"sign", report.sign},
                {"max_label_residual", report.max_label_residual},
                {"max_parity_residual", report.max_parity_residual},
                {"degenerate", report.degenerate},
                {"tau", report.tau},
                {"pass", report.pass}};
}

json to_json(const FidelityCurve& curve) {
    return json{{"peak_time", curve.peak_time}, {"peak_value", curve.peak_value}};
}

json to_json(const EffectiveModelReport& report) {
    return json{{"tau", report.tau},
                {"fidelity_exact_vs_target", report.fidelity_exact_vs_target},
                {"fidelity_effective_vs_target", report.fidelity_effective_vs_target},
                {"model_agreement", report.model_agreement}};
}

std::string spectrum_csv(const std::vector<double>& eigenvalues) {
    std::string out = "index,eigenvalue\n";
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        out += std::to_string(i) + ',' + format_number(eigenvalues[i]) + '\n';
    }
    return out;
}

std::string curve_csv(const FidelityCurve& curve) {
    std::string out = "t,fidelity\n";
    for (std::size_t i = 0; i < curve.times.size(); ++i) {
        out += format_number(curve.times[i]) + ',' + format_number(curve.fidelities[i]) + '\n';
    }
    return out;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path dir =
        path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    const std::filesystem::path tmp = dir / (path.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("atomic write: cannot open " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("atomic write: short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace qst
