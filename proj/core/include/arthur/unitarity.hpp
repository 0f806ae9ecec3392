#pragma once

#include <string>
#include <vector>

#include "arthur/multisegment.hpp"

namespace arthur {

struct NuEntry {
  std::string rho;
  int a = 1;
  int b = 1;
  Rational x;  // 0 < x < 1/2
  bool operator==(const NuEntry&) const = default;
};

struct BpEntry {
  std::string rho;
  int a = 1;
  int b = 1;
  bool operator==(const BpEntry&) const = default;
};

// A representation of the extended Arthur class, given in decomposed form:
// non-tempered exponents, bad-parity part and the good-parity Arthur part.
struct APlusRep {
  GroupType group;
  std::vector<NuEntry> nu;
  std::vector<BpEntry> bp;
  ExtMultiSegment gp;
  bool operator==(const APlusRep&) const = default;
};

struct Witness {
  std::size_t nu_index = 0;
  bool reducible = false;
  int class_cardinality = 0;
  bool operator==(const Witness&) const = default;
};

struct UnitarityVerdict {
  bool hermitian = false;
  bool unitary = false;
  std::vector<Witness> witnesses;
};

// Throws InvalidInput/BadParity/DimensionMismatch/PreconditionFailed.
void validate(const APlusRep& pi, const CuspidalRegistry& registry, std::size_t cap = kDefaultCap);

bool is_hermitian(const APlusRep& pi, const CuspidalRegistry& registry);

// Validates first.
UnitarityVerdict is_unitary(const APlusRep& pi, const CuspidalRegistry& registry,
                            std::size_t cap = kDefaultCap);

}  // namespace arthur
