#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace arthur {

enum class SelfDuality { Orthogonal, Symplectic, None };

std::string_view to_string(SelfDuality s) noexcept;

// Symbol for an irreducible unitary supercuspidal representation of GL_dim.
struct Cuspidal {
  std::string name;
  int dim = 1;
  SelfDuality selfdual = SelfDuality::Orthogonal;
  std::string dual;  // only for non-self-dual symbols

  bool self_dual() const { return selfdual != SelfDuality::None; }
  bool operator==(const Cuspidal&) const = default;
};

// Immutable set of cuspidal symbols with their duality pairing.
class CuspidalRegistry {
 public:
  CuspidalRegistry() = default;
  // Validates: unique names, positive dims, dim-1 self-dual symbols orthogonal,
  // non-self-dual duals present and paired back. Throws InvalidInput.
  explicit CuspidalRegistry(std::vector<Cuspidal> cuspidals);

  bool contains(std::string_view name) const;
  // Throws UnknownCuspidal.
  const Cuspidal& at(std::string_view name) const;
  const std::string& dual_of(std::string_view name) const;
  const std::vector<Cuspidal>& all() const { return cuspidals_; }

 private:
  std::vector<Cuspidal> cuspidals_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

}  // namespace arthur
