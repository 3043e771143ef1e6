#pragma once

#include <array>
#include <vector>

namespace qst {

/// Open-chain geometry together with the gap parameter of the engineered
/// hopping family. gap = 0 reproduces the sqrt(n(N-n)) profile; gap > 0
/// opens a spectral gap of 2*(2*gap+1) between the band halves and is
/// defined for even site counts only.
struct ChainEngineering {
    int sites = 2;  // N >= 2
    int gap = 0;    // m >= 0
};

/// Throws std::invalid_argument when the (sites, gap) combination is outside
/// the engineered family.
void validate(const ChainEngineering& eng);

/// Nearest-neighbor hopping amplitudes J_1..J_{N-1} of an open chain,
/// in energy units (hbar = 1).
struct CouplingProfile {
    int sites = 0;
    std::vector<double> values;  // size sites-1, all > 0
};

void validate(const CouplingProfile& profile);

/// Rectangular lattice built from one to three engineered chain axes.
struct LatticeEngineering {
    std::vector<ChainEngineering> axes;
};

void validate(const LatticeEngineering& eng);
int total_dimension(const LatticeEngineering& eng);

/// Engineered hopping profile, J_n = sqrt(m(1-(-1)^n)+n) * sqrt(m(1-(-1)^n)+N-n).
/// Mirror symmetric by construction.
CouplingProfile engineered_profile(const ChainEngineering& eng);

/// Constant profile, the baseline for the uniform ring and open chains.
CouplingProfile uniform_profile(int sites, double hopping);

/// Hopping value for every nearest-neighbor bond of a rectangular lattice.
/// bond(site, axis) is the amplitude between `site` and `site + e_axis`;
/// site coordinates are 1-based per axis. Bonds start unset; reading an
/// unset bond is an input error.
class BondField {
  public:
    explicit BondField(const std::array<int, 3>& dims);

    static BondField from_engineering(const LatticeEngineering& eng);

    const std::array<int, 3>& dims() const { return dims_; }
    bool has_bond(const std::array<int, 3>& site, int axis) const;
    bool is_set(const std::array<int, 3>& site, int axis) const;
    double bond(const std::array<int, 3>& site, int axis) const;
    void set_bond(const std::array<int, 3>& site, int axis, double value);

  private:
    int linear_index(const std::array<int, 3>& site) const;

    std::array<int, 3> dims_;
    std::array<std::vector<double>, 3> bonds_;  // NaN marks unset entries
};

/// True iff every hopping value depends only on the layer coordinate along
/// its own axis. Equality is checked to absolute tolerance `tol`.
bool layer_uniformity_check(const BondField& field, double tol = 1e-12);

struct PlaquetteViolation {
    int plaquette = 0;   // enumeration order of the failing plaquette
    int axis = 0;        // axis along which the unequal parallel bonds point
    double mismatch = 0.0;
};

struct PlaquetteReport {
    std::vector<PlaquetteViolation> violations;
    bool pass = false;
};

/// Checks every 2x2 plaquette for equal parallel bonds. A clean report
/// implies the axis Hamiltonians induced by the field commute.
PlaquetteReport plaquette_commutation_check(const BondField& field, double tol = 1e-12);

}  // namespace qst
