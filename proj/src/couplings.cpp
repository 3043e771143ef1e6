#include "qst/couplings.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qst {

namespace {

bool odd(int n) { return n % 2 != 0; }

}  // namespace

void validate(const ChainEngineering& eng) {
    if (eng.sites < 2) {
        throw std::invalid_argument("chain engineering: need at least 2 sites, got " +
                                    std::to_string(eng.sites));
    }
    if (eng.gap < 0) {
        throw std::invalid_argument("chain engineering: gap parameter must be >= 0");
    }
    if (eng.gap > 0 && odd(eng.sites)) {
        throw std::invalid_argument(
            "chain engineering: odd site count unsupported for gap parameter > 0");
    }
}

void validate(const CouplingProfile& profile) {
    if (profile.sites < 2) {
        throw std::invalid_argument("coupling profile: need at least 2 sites");
    }
    if (static_cast<int>(profile.values.size()) != profile.sites - 1) {
        throw std::invalid_argument("coupling profile: expected " +
                                    std::to_string(profile.sites - 1) + " values, got " +
                                    std::to_string(profile.values.size()));
    }
    for (double v : profile.values) {
        if (!(v > 0.0)) {
            throw std::invalid_argument("coupling profile: hopping values must be positive");
        }
    }
}

void validate(const LatticeEngineering& eng) {
    if (eng.axes.empty() || eng.axes.size() > 3) {
        throw std::invalid_argument("lattice engineering: need 1 to 3 axes");
    }
    for (const auto& axis : eng.axes) validate(axis);
    if (total_dimension(eng) < 2) {
        throw std::invalid_argument("lattice engineering: total dimension must be >= 2");
    }
}

int total_dimension(const LatticeEngineering& eng) {
    int d = 1;
    for (const auto& axis : eng.axes) d *= axis.sites;
    return d;
}

CouplingProfile engineered_profile(const ChainEngineering& eng) {
    validate(eng);
    const int n_sites = eng.sites;
    const double m = static_cast<double>(eng.gap);
    CouplingProfile profile;
    profile.sites = n_sites;
    profile.values.reserve(n_sites - 1);
    for (int n = 1; n < n_sites; ++n) {
        const double shift = odd(n) ? 2.0 * m : 0.0;  // m * (1 - (-1)^n)
        profile.values.push_back(std::sqrt(shift + n) * std::sqrt(shift + n_sites - n));
    }
    return profile;
}

CouplingProfile uniform_profile(int sites, double hopping) {
    if (sites < 2) {
        throw std::invalid_argument("uniform profile: need at least 2 sites");
    }
    if (!(hopping > 0.0)) {
        throw std::invalid_argument("uniform profile: hopping must be positive");
    }
    CouplingProfile profile;
    profile.sites = sites;
    profile.values.assign(sites - 1, hopping);
    return profile;
}

BondField::BondField(const std::array<int, 3>& dims) : dims_(dims) {
    for (int axis = 0; axis < 3; ++axis) {
        if (dims_[axis] < 1) throw std::invalid_argument("bond field: dims must be >= 1");
    }
    const int d = dims_[0] * dims_[1] * dims_[2];
    for (auto& per_axis : bonds_) {
        per_axis.assign(d, std::numeric_limits<double>::quiet_NaN());
    }
}

int BondField::linear_index(const std::array<int, 3>& site) const {
    for (int axis = 0; axis < 3; ++axis) {
        if (site[axis] < 1 || site[axis] > dims_[axis]) {
            throw std::invalid_argument("bond field: site coordinate out of range");
        }
    }
    return (site[0] - 1) + dims_[0] * (site[1] - 1) + dims_[0] * dims_[1] * (site[2] - 1);
}

bool BondField::has_bond(const std::array<int, 3>& site, int axis) const {
    if (axis < 0 || axis > 2) throw std::invalid_argument("bond field: axis out of range");
    for (int a = 0; a < 3; ++a) {
        if (site[a] < 1 || site[a] > dims_[a]) return false;
    }
    return site[axis] + 1 <= dims_[axis];
}

bool BondField::is_set(const std::array<int, 3>& site, int axis) const {
    return has_bond(site, axis) && !std::isnan(bonds_[axis][linear_index(site)]);
}

double BondField::bond(const std::array<int, 3>& site, int axis) const {
    if (!has_bond(site, axis)) {
        throw std::invalid_argument("bond field: no such bond");
    }
    const double value = bonds_[axis][linear_index(site)];
    if (std::isnan(value)) {
        throw std::invalid_argument("bond field: bond value missing");
    }
    return value;
}

void BondField::set_bond(const std::array<int, 3>& site, int axis, double value) {
    if (!has_bond(site, axis)) {
        throw std::invalid_argument("bond field: no such bond");
    }
    bonds_[axis][linear_index(site)] = value;
}

BondField BondField::from_engineering(const LatticeEngineering& eng) {
    validate(eng);
    std::array<int, 3> dims{1, 1, 1};
    for (std::size_t axis = 0; axis < eng.axes.size(); ++axis) {
        dims[axis] = eng.axes[axis].sites;
    }
    BondField field(dims);
    for (std::size_t axis = 0; axis < eng.axes.size(); ++axis) {
        if (dims[axis] < 2) continue;
        const CouplingProfile profile = engineered_profile(eng.axes[axis]);
        std::array<int, 3> site;
        for (site[2] = 1; site[2] <= dims[2]; ++site[2])
            for (site[1] = 1; site[1] <= dims[1]; ++site[1])
                for (site[0] = 1; site[0] <= dims[0]; ++site[0]) {
                    const int layer = site[axis];
                    if (layer + 1 > dims[axis]) continue;
                    field.set_bond(site, static_cast<int>(axis), profile.values[layer - 1]);
                }
    }
    return field;
}

namespace {

// Calls fn(site, axis, value) for every bond of the field; throws on holes.
template <typename Fn>
void for_each_bond(const BondField& field, Fn&& fn) {
    const auto& dims = field.dims();
    std::array<int, 3> site;
    for (int axis = 0; axis < 3; ++axis) {
        if (dims[axis] < 2) continue;
        for (site[2] = 1; site[2] <= dims[2]; ++site[2])
            for (site[1] = 1; site[1] <= dims[1]; ++site[1])
                for (site[0] = 1; site[0] <= dims[0]; ++site[0]) {
                    if (site[axis] + 1 > dims[axis]) continue;
                    fn(site, axis, field.bond(site, axis));
                }
    }
}

}  // namespace

bool layer_uniformity_check(const BondField& field, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("layer uniformity: tolerance must be positive");
    for_each_bond(field, [](const std::array<int, 3>&, int, double) {});
    const auto& dims = field.dims();
    bool uniform = true;
    for (int axis = 0; axis < 3 && uniform; ++axis) {
        if (dims[axis] < 2) continue;
        for (int layer = 1; layer < dims[axis] && uniform; ++layer) {
            bool have_reference = false;
            double reference = 0.0;
            std::array<int, 3> site;
            for (site[2] = 1; site[2] <= dims[2]; ++site[2])
                for (site[1] = 1; site[1] <= dims[1]; ++site[1])
                    for (site[0] = 1; site[0] <= dims[0]; ++site[0]) {
                        if (site[axis] != layer) continue;
                        const double value = field.bond(site, axis);
                        if (!have_reference) {
                            reference = value;
                            have_reference = true;
                        } else if (std::abs(value - reference) > tol) {
                            uniform = false;
                        }
                    }
        }
    }
    return uniform;
}

PlaquetteReport plaquette_commutation_check(const BondField& field, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("plaquette check: tolerance must be positive");
    }
    for_each_bond(field, [](const std::array<int, 3>&, int, double) {});
    const auto& dims = field.dims();
    PlaquetteReport report;
    int plaquette = 0;
    for (int axis_a = 0; axis_a < 3; ++axis_a) {
        for (int axis_b = axis_a + 1; axis_b < 3; ++axis_b) {
            if (dims[axis_a] < 2 || dims[axis_b] < 2) continue;
            std::array<int, 3> site;
            for (site[2] = 1; site[2] <= dims[2]; ++site[2])
                for (site[1] = 1; site[1] <= dims[1]; ++site[1])
                    for (site[0] = 1; site[0] <= dims[0]; ++site[0]) {
                        if (site[axis_a] + 1 > dims[axis_a]) continue;
                        if (site[axis_b] + 1 > dims[axis_b]) continue;
                        std::array<int, 3> shifted_a = site;
                        shifted_a[axis_a] += 1;
                        std::array<int, 3> shifted_b = site;
                        shifted_b[axis_b] += 1;
                        // Corners 1..4 = site, site+e_a, site+e_b, site+e_a+e_b.
                        const double bond_12 = field.bond(site, axis_a);
                        const double bond_34 = field.bond(shifted_b, axis_a);
                        const double bond_13 = field.bond(site, axis_b);
                        const double bond_24 = field.bond(shifted_a, axis_b);
                        if (std::abs(bond_12 - bond_34) > tol) {
                            report.violations.push_back(
                                {plaquette, axis_a, std::abs(bond_12 - bond_34)});
                        }
                        if (std::abs(bond_13 - bond_24) > tol) {
                            report.violations.push_back(
                                {plaquette, axis_b, std::abs(bond_13 - bond_24)});
                        }
                        ++plaquette;
                    }
        }
    }
    report.pass = report.violations.empty();
    return report;
}

}  // namespace qst
