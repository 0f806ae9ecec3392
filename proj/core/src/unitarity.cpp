#include "arthur/unitarity.hpp"

#include <map>
#include <tuple>

#include "arthur/error.hpp"
#include "arthur/induction.hpp"

namespace arthur {
namespace {

bool valid_exponent(const Rational& x) { return x > Rational(0) && x < Rational(1, 2); }

}  // namespace

void validate(const APlusRep& pi, const CuspidalRegistry& registry, std::size_t cap) {
  long long dimension = 0;
  for (std::size_t i = 0; i < pi.nu.size(); ++i) {
    const NuEntry& e = pi.nu[i];
    const std::string path = "/nu/" + std::to_string(i);
    if (!registry.contains(e.rho)) throw Error(ErrorKind::UnknownCuspidal, "unknown cuspidal " + e.rho, path + "/rho");
    if (e.a < 1 || e.b < 1) throw Error(ErrorKind::InvalidInput, "a and b must be positive", path);
    if (!valid_exponent(e.x)) throw Error(ErrorKind::InvalidInput, "exponent must lie in (0, 1/2)", path + "/x");
    dimension += 2LL * registry.at(e.rho).dim * e.a * e.b;
  }
  for (std::size_t i = 0; i < pi.bp.size(); ++i) {
    const BpEntry& e = pi.bp[i];
    const std::string path = "/bp/" + std::to_string(i);
    if (!registry.contains(e.rho)) throw Error(ErrorKind::UnknownCuspidal, "unknown cuspidal " + e.rho, path + "/rho");
    if (e.a < 1 || e.b < 1) throw Error(ErrorKind::InvalidInput, "a and b must be positive", path);
    if (good_parity(registry.at(e.rho), e.a, e.b, pi.group.kind)) {
      throw Error(ErrorKind::BadParity, "bad-parity entry is of good parity", path);
    }
    dimension += 2LL * registry.at(e.rho).dim * e.a * e.b;
  }
  if (pi.gp.group.kind != pi.group.kind) {
    throw Error(ErrorKind::InvalidInput, "good-parity part belongs to a different family", "/gp/group/kind");
  }
  try {
    validate(pi.gp, registry);
  } catch (const Error& err) {
    throw err.nested("/gp");
  }
  dimension += pi.gp.group.dual_dimension();
  if (dimension != pi.group.dual_dimension()) {
    throw Error(ErrorKind::DimensionMismatch,
                "parts add up to dimension " + std::to_string(dimension) + ", group needs " +
                    std::to_string(pi.group.dual_dimension()),
                "/group");
  }
  if (!pi_nonzero(pi.gp, cap)) throw Error(ErrorKind::PreconditionFailed, "good-parity part vanishes", "/gp");
}

bool is_hermitian(const APlusRep& pi, const CuspidalRegistry& registry) {
  using Key = std::tuple<std::string, int, int, Rational>;
  std::map<Key, int> count;
  for (const auto& e : pi.nu) ++count[{e.rho, e.a, e.b, e.x}];
  for (const auto& [key, m] : count) {
    const auto& [rho, a, b, x] = key;
    const Cuspidal& c = registry.at(rho);
    if (c.self_dual()) continue;
    auto it = count.find({c.dual, a, b, x});
    if (it == count.end() || it->second != m) return false;
  }
  return true;
}

UnitarityVerdict is_unitary(const APlusRep& pi, const CuspidalRegistry& registry, std::size_t cap) {
  validate(pi, registry, cap);
  UnitarityVerdict verdict;
  verdict.hermitian = is_hermitian(pi, registry);
  bool even_everywhere = true;
  for (std::size_t i = 0; i < pi.nu.size(); ++i) {
    const NuEntry& e = pi.nu[i];
    Witness w{i, false, 0};
    for (const auto& f : pi.nu) {
      if (f.rho == e.rho && f.a == e.a && f.b == e.b) ++w.class_cardinality;
    }
    if (good_parity(registry.at(e.rho), e.a, e.b, pi.group.kind)) {
      w.reducible = is_reducible(pi.gp, registry, e.rho, e.a, e.b, cap);
    }
    if (w.reducible && w.class_cardinality % 2 != 0) even_everywhere = false;
    verdict.witnesses.push_back(w);
  }
  verdict.unitary = verdict.hermitian && even_everywhere;
  return verdict;
}

}  // namespace arthur
