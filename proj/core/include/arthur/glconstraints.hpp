#pragma once

#include <string>
#include <vector>

#include "arthur/cuspidal.hpp"
#include "arthur/halfint.hpp"

namespace arthur {

struct GLNuEntry {
  std::string rho;
  int a = 1;
  Rational x;
};

struct GLTemperedEntry {
  std::string rho;
  int a = 1;
};

// Local component of a self-dual cuspidal automorphic representation of GL_N,
// in the shape u_rho(a,1)|.|^x x ... x pi_t.
struct GLLocalComponent {
  SelfDuality global_type = SelfDuality::Orthogonal;  // Orthogonal or Symplectic
  std::vector<GLNuEntry> nu;
  std::vector<GLTemperedEntry> tempered;
};

SelfDuality speh_type(const Cuspidal& rho, int a);

struct ConstraintReport {
  bool ok = true;
  std::vector<std::size_t> violations;  // nu indices
};

// Throws InvalidInput for an exponent outside (0, 1/2), a non-self-dual
// global type, or an unknown symbol.
ConstraintReport check_constraint(const GLLocalComponent& c, const CuspidalRegistry& registry);

}  // namespace arthur
