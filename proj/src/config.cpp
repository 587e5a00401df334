#include "owc/config.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "owc/errors.hpp"

namespace owc {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ConfigError(what); }

}  // namespace

void validate(const PhysicalConfig& cfg) {
  std::ostringstream os;
  if (!(cfg.g > 0.0)) fail("g must be positive");
  if (!(cfg.rho > 0.0)) fail("rho must be positive");
  if (!(cfg.l > 0.0)) fail("l must be positive");
  if (!(cfg.l1 > cfg.l0 && cfg.l0 > cfg.r && cfg.r > 0.0)) {
    os << "geometry must satisfy l1>l0>r>0 (l1=" << cfg.l1 << ", l0=" << cfg.l0
       << ", r=" << cfg.r << ")";
    fail(os.str());
  }
  if (!(cfg.h_0 > 0.0)) fail("h_0 must be positive");
  if (!(cfg.h_s >= cfg.h_0)) {
    os << "depths must satisfy h_s>=h_0>0 (h_s=" << cfg.h_s << ", h_0=" << cfg.h_0
       << "), step height s=h_s-h_0 is nonnegative";
    fail(os.str());
  }
  if (!(cfg.wetted_depth() > 0.0)) {
    os << "wetted depth h_w=h_0+zeta_w must be positive (h_0=" << cfg.h_0
       << ", zeta_w=" << cfg.zeta_w << ")";
    fail(os.str());
  }
  if (!(cfg.period > 0.0)) fail("period must be positive");
  if (!(cfg.amplitude >= 0.0)) fail("amplitude must be nonnegative");
  if (!(std::isfinite(cfg.l) && std::isfinite(cfg.l0) && std::isfinite(cfg.l1) &&
        std::isfinite(cfg.r) && std::isfinite(cfg.h_s) && std::isfinite(cfg.h_0) &&
        std::isfinite(cfg.zeta_w) && std::isfinite(cfg.amplitude) &&
        std::isfinite(cfg.period))) {
    fail("all configuration values must be finite");
  }
}

double forcing(double t, const PhysicalConfig& cfg) {
  return cfg.amplitude * std::sin(2.0 * std::numbers::pi * t / cfg.period);
}

}  // namespace owc
