#include "sge/params.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sge {

SystemParams::SystemParams(double gamma1_, double r_, double Gamma1_, double G1_,
                           double Lambda1_, double Lambda2_)
    : gamma1(gamma1_), r(r_), Gamma1(Gamma1_), G1(G1_), Lambda1(Lambda1_), Lambda2(Lambda2_) {
  validate();
}

void SystemParams::validate() const {
  std::ostringstream os;
  if (!(gamma1 > 0.0)) {
    os << "SystemParams: gamma1 must be > 0, got " << gamma1;
    throw std::invalid_argument(os.str());
  }
  if (!(r > 0.0)) {
    os << "SystemParams: r must be > 0, got " << r;
    throw std::invalid_argument(os.str());
  }
  if (Lambda1 < 0.0 || Lambda2 < 0.0) {
    os << "SystemParams: pump rates must be >= 0, got Lambda1=" << Lambda1
       << " Lambda2=" << Lambda2;
    throw std::invalid_argument(os.str());
  }
  if (std::abs(Gamma1) > gamma1) {
    os << "SystemParams: |Gamma1|=" << std::abs(Gamma1)
       << " exceeds gamma1=" << gamma1;
    throw std::invalid_argument(os.str());
  }
  if (!std::isfinite(G1)) {
    os << "SystemParams: G1 must be finite";
    throw std::invalid_argument(os.str());
  }
}

const std::vector<std::pair<std::string, Preset>>& preset_table() {
  static const std::vector<std::pair<std::string, Preset>> table = {
      {"R0.50", {0.50, 0.96, 8.0}},
      {"R0.83", {0.83, 0.9, 2.4}},
      {"R1.18", {1.18, 0.8, 0.9}},
      {"R2.78", {2.78, 0.2, -0.24}},
  };
  return table;
}

Preset preset(const std::string& key) {
  for (const auto& [k, p] : preset_table())
    if (k == key) return p;
  std::ostringstream os;
  os << "unknown preset '" << key << "'; valid keys:";
  for (const auto& [k, p] : preset_table()) os << " " << k;
  throw std::invalid_argument(os.str());
}

std::vector<std::string> preset_keys() {
  std::vector<std::string> keys;
  for (const auto& [k, p] : preset_table()) keys.push_back(k);
  return keys;
}

SystemParams params_from_preset(const std::string& key, double r, double Lambda1,
                                double Lambda2, double gamma1) {
  const Preset p = preset(key);
  return SystemParams(gamma1, r, p.Gamma1 * gamma1, p.G1 * gamma1, Lambda1, Lambda2);
}

namespace basis {
const std::array<std::string, kDim>& labels() {
  static const std::array<std::string, kDim> l = {"ee", "emu", "eg",  "mue", "mumu",
                                                  "mug", "ge", "gmu", "gg"};
  return l;
}
}  // namespace basis

}  // namespace sge
