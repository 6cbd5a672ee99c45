#ifndef SGE_PARAMS_HPP
#define SGE_PARAMS_HPP

#include <array>
#include <string>
#include <vector>

namespace sge {

/// Rate and coupling constants for the two radiatively coupled V-type atoms.
/// Channel 1 is |e><->|g>, channel 2 is |mu><->|g>; channel-2 rates follow
/// from r = omega2/omega1 (gamma2 = r*gamma1, Gamma2 = r*Gamma1, G2 = r*G1).
/// All rates share the units of gamma1. Validation is strict at
/// construction; downstream code assumes a validated set.
struct SystemParams {
  double gamma1 = 1.0;   // spontaneous decay |e> -> |g>, the global scale
  double r = 1.0;        // omega2 / omega1
  double Gamma1 = 0.0;   // dipole-dipole cross damping, channel 1
  double G1 = 0.0;       // dipole-dipole level shift, channel 1
  double Lambda1 = 0.0;  // incoherent pump |g> -> |e>
  double Lambda2 = 0.0;  // incoherent pump |g> -> |mu>

  SystemParams() = default;
  SystemParams(double gamma1_, double r_, double Gamma1_, double G1_,
               double Lambda1_ = 0.0, double Lambda2_ = 0.0);

  double gamma2() const { return r * gamma1; }
  double Gamma2() const { return r * Gamma1; }
  double G2() const { return r * G1; }
  double s1() const { return gamma1 + Lambda1 + Lambda2; }
  double s2() const { return gamma2() + Lambda1 + Lambda2; }

  bool pumped() const { return Lambda1 > 0.0 || Lambda2 > 0.0; }

  /// Throws std::invalid_argument on gamma1 <= 0, r <= 0, Lambda < 0 or
  /// |Gamma1| > gamma1 (cross damping cannot exceed single-atom damping).
  void validate() const;
};

/// Interatomic-distance preset: R in units of the transition wavelength,
/// couplings in units of gamma1.
struct Preset {
  double R;
  double Gamma1;
  double G1;
};

/// The four tabulated (R, Gamma, G) rows, keyed "R0.50", "R0.83", "R1.18",
/// "R2.78".
const std::vector<std::pair<std::string, Preset>>& preset_table();

/// Lookup by key; throws std::invalid_argument listing the valid keys.
Preset preset(const std::string& key);

std::vector<std::string> preset_keys();

/// Params built from a preset at the given frequency ratio and pump rates.
SystemParams params_from_preset(const std::string& key, double r,
                                double Lambda1 = 0.0, double Lambda2 = 0.0,
                                double gamma1 = 1.0);

/// Product-basis bookkeeping. Single-atom levels are ordered e, mu, g; the
/// nine two-atom states |i_A j_B> are numbered 0..8 as
/// ee, emu, eg, mue, mumu, mug, ge, gmu, gg (composite index 3*i + j).
namespace basis {
constexpr int kDim = 9;
constexpr int e = 0, mu = 1, g = 2;
constexpr int index(int atom_a, int atom_b) { return 3 * atom_a + atom_b; }
const std::array<std::string, kDim>& labels();
}  // namespace basis

}  // namespace sge

#endif
