#include "arthur/cuspidal.hpp"

#include "arthur/error.hpp"

namespace arthur {

std::string_view to_string(SelfDuality s) noexcept {
  switch (s) {
    case SelfDuality::Orthogonal: return "orthogonal";
    case SelfDuality::Symplectic: return "symplectic";
    case SelfDuality::None: return "none";
  }
  return "none";
}

CuspidalRegistry::CuspidalRegistry(std::vector<Cuspidal> cuspidals) : cuspidals_(std::move(cuspidals)) {
  for (std::size_t i = 0; i < cuspidals_.size(); ++i) {
    const Cuspidal& c = cuspidals_[i];
    const std::string path = "/cuspidals/" + std::to_string(i);
    if (c.name.empty()) throw Error(ErrorKind::InvalidInput, "cuspidal name is empty", path);
    if (c.dim < 1) throw Error(ErrorKind::InvalidInput, "dim must be positive", path + "/dim");
    if (!index_.emplace(c.name, i).second) {
      throw Error(ErrorKind::InvalidInput, "duplicate cuspidal " + c.name, path);
    }
    if (c.dim == 1 && c.selfdual == SelfDuality::Symplectic) {
      throw Error(ErrorKind::InvalidInput, "a self-dual character is orthogonal", path + "/selfdual");
    }
  }
  for (std::size_t i = 0; i < cuspidals_.size(); ++i) {
    const Cuspidal& c = cuspidals_[i];
    const std::string path = "/cuspidals/" + std::to_string(i);
    if (c.self_dual()) {
      if (!c.dual.empty() && c.dual != c.name) {
        throw Error(ErrorKind::InvalidInput, c.name + " is self-dual but names another dual", path + "/dual");
      }
      continue;
    }
    if (c.dual.empty() || c.dual == c.name) {
      throw Error(ErrorKind::InvalidInput, c.name + " needs a distinct dual", path + "/dual");
    }
    auto it = index_.find(c.dual);
    if (it == index_.end()) {
      throw Error(ErrorKind::UnknownCuspidal, "dual " + c.dual + " is not declared", path + "/dual");
    }
    const Cuspidal& d = cuspidals_[it->second];
    if (d.self_dual() || d.dual != c.name || d.dim != c.dim) {
      throw Error(ErrorKind::InvalidInput, "duality of " + c.name + " and " + d.name + " is not an involution",
                  path + "/dual");
    }
  }
}

bool CuspidalRegistry::contains(std::string_view name) const { return index_.find(name) != index_.end(); }

const Cuspidal& CuspidalRegistry::at(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error(ErrorKind::UnknownCuspidal, "unknown cuspidal " + std::string(name));
  return cuspidals_[it->second];
}

const std::string& CuspidalRegistry::dual_of(std::string_view name) const {
  const Cuspidal& c = at(name);
  return c.self_dual() ? c.name : c.dual;
}

}  // namespace arthur
