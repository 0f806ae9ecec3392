#pragma once

#include <string>
#include <vector>

#include "arthur/multisegment.hpp"

namespace arthur {

struct InductionResult {
  std::string rho;
  // [A,B] with A = (a+b)/2 - 1 and B = (a-b)/2.
  HalfInt A;
  HalfInt B;
  std::vector<ExtMultiSegment> components;
  // Inserted segment of each component (integer level), same order.
  std::vector<VExtZSeg> inserted;
  // Position of the inserted segment inside the rho-row of each component.
  std::vector<std::size_t> inserted_index;
};

// Group grown by (rho x S_a x S_b)^2.
GroupType grown_group(const GroupType& g, const Cuspidal& rho, int a, int b);

// Whether psi_E + (rho x S_a x S_b)^2 is of good parity, i.e. the triple is.
bool induction_good_parity(const ExtMultiSegment& E, const Cuspidal& rho, int a, int b);

// Decomposition of u_rho(a,b) x pi(E). Requires pi_nonzero(E)
// (PreconditionFailed) and good parity (BadParity).
InductionResult induce(const ExtMultiSegment& E, const CuspidalRegistry& registry,
                       const std::string& rho, int a, int b, std::size_t cap = kDefaultCap);

bool is_reducible(const ExtMultiSegment& E, const CuspidalRegistry& registry,
                  const std::string& rho, int a, int b, std::size_t cap = kDefaultCap);

struct SignCounts {
  int plus = 0;
  int minus = 0;
  bool operator==(const SignCounts&) const = default;
};

// Components of induce split by character value at rho x S_a x S_b.
// Throws ContainsSummand when psi_E already contains that summand.
SignCounts sign_counts(const ExtMultiSegment& E, const CuspidalRegistry& registry,
                       const std::string& rho, int a, int b, std::size_t cap = kDefaultCap);

}  // namespace arthur
