#include "arthur/glconstraints.hpp"

#include "arthur/error.hpp"

namespace arthur {

SelfDuality speh_type(const Cuspidal& rho, int a) {
  if (!rho.self_dual()) return SelfDuality::None;
  const bool odd = a % 2 != 0;
  if (rho.selfdual == SelfDuality::Orthogonal) return odd ? SelfDuality::Orthogonal : SelfDuality::Symplectic;
  return odd ? SelfDuality::Symplectic : SelfDuality::Orthogonal;
}

ConstraintReport check_constraint(const GLLocalComponent& c, const CuspidalRegistry& registry) {
  if (c.global_type == SelfDuality::None) {
    throw Error(ErrorKind::InvalidInput, "global type must be orthogonal or symplectic", "/global_type");
  }
  for (std::size_t i = 0; i < c.nu.size(); ++i) {
    const std::string path = "/nu/" + std::to_string(i);
    if (!registry.contains(c.nu[i].rho)) {
      throw Error(ErrorKind::UnknownCuspidal, "unknown cuspidal " + c.nu[i].rho, path + "/rho");
    }
    if (c.nu[i].a < 1) throw Error(ErrorKind::InvalidInput, "a must be positive", path + "/a");
    if (!(c.nu[i].x > Rational(0) && c.nu[i].x < Rational(1, 2))) {
      throw Error(ErrorKind::InvalidInput, "exponent must lie in (0, 1/2)", path + "/x");
    }
  }
  for (std::size_t i = 0; i < c.tempered.size(); ++i) {
    if (!registry.contains(c.tempered[i].rho)) {
      throw Error(ErrorKind::UnknownCuspidal, "unknown cuspidal " + c.tempered[i].rho,
                  "/tempered/" + std::to_string(i) + "/rho");
    }
  }

  ConstraintReport report;
  for (std::size_t i = 0; i < c.nu.size(); ++i) {
    const GLNuEntry& e = c.nu[i];
    if (speh_type(registry.at(e.rho), e.a) != c.global_type) continue;
    bool in_tempered = false;
    for (const auto& t : c.tempered) in_tempered = in_tempered || (t.rho == e.rho && t.a == e.a);
    if (in_tempered) continue;
    int cardinality = 0;
    for (const auto& f : c.nu) cardinality += (f.rho == e.rho && f.a == e.a) ? 1 : 0;
    if (cardinality % 2 != 0) report.violations.push_back(i);
  }
  report.ok = report.violations.empty();
  return report;
}

}  // namespace arthur
