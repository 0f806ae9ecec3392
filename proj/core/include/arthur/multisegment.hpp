#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arthur/cuspidal.hpp"
#include "arthur/halfint.hpp"
#include "arthur/sequences.hpp"

namespace arthur {

enum class GroupKind { Sp, SOodd };

std::string_view to_string(GroupKind kind) noexcept;

// Sp_2n or split SO_2n+1.
struct GroupType {
  GroupKind kind = GroupKind::SOodd;
  int n = 0;

  // Dimension N of the standard representation of the dual group.
  int dual_dimension() const { return kind == GroupKind::Sp ? 2 * n + 1 : 2 * n; }
  // Group of the same kind whose dual dimension is N. Throws DimensionMismatch.
  static GroupType with_dual_dimension(GroupKind kind, int N);

  bool operator==(const GroupType&) const = default;
};

struct ArthurSummand {
  std::string rho;
  int a = 1;
  int b = 1;
  Rational x;

  bool operator==(const ArthurSummand&) const = default;
  auto operator<=>(const ArthurSummand&) const = default;
};

struct ArthurParameter {
  GroupType group;
  std::vector<ArthurSummand> summands;
};

bool good_parity(const Cuspidal& rho, int a, int b, GroupKind kind);

// Extended segment ([A,B]_rho, l, eta) with half-integral endpoints; rho is
// implied by the row holding it.
class ExtSegment {
 public:
  ExtSegment() = default;
  // Throws InvalidInput unless A - B is a non-negative integer, 0 <= l <= b/2
  // and eta is +-1. Canonicalizes eta when b = 2l.
  ExtSegment(HalfInt A, HalfInt B, int l, int eta);

  HalfInt A() const { return A_; }
  HalfInt B() const { return B_; }
  int l() const { return l_; }
  int eta() const { return eta_; }
  int a() const { return static_cast<int>((A_ + B_).twice() / 2) + 1; }
  int b() const { return static_cast<int>((A_ - B_).twice() / 2) + 1; }

  // Floors both endpoints.
  VExtZSeg zlevel() const;
  static ExtSegment lift(const VExtZSeg& z, HalfInt offset);

  bool operator==(const ExtSegment&) const = default;
  auto operator<=>(const ExtSegment&) const = default;

 private:
  HalfInt A_;
  HalfInt B_;
  int l_ = 0;
  int eta_ = 1;
};

struct MultiSegmentRow {
  std::string rho;
  std::vector<ExtSegment> segments;

  bool operator==(const MultiSegmentRow&) const = default;
};

struct ExtMultiSegment {
  GroupType group;
  std::vector<MultiSegmentRow> rows;

  const MultiSegmentRow* row(std::string_view rho) const;
  // psi_E, with x = 0 on every summand.
  ArthurParameter parameter() const;

  bool operator==(const ExtMultiSegment&) const = default;
};

// All invariants of an extended multi-segment; throws the first violation
// (OrderNotAdmissible, NegativeCenter, BadParity, SignConditionFailed,
// EndpointMismatch, DimensionMismatch, UnknownCuspidal, InvalidInput).
void validate(const ExtMultiSegment& E, const CuspidalRegistry& registry);

// Product over all segments of (-1)^(floor(b/2)+l) eta^b.
int sign_product(const ExtMultiSegment& E);

// Integer-level row. Throws MissingRow.
ZSeq zlevel(const ExtMultiSegment& E, std::string_view rho);
ZSeq zlevel(const MultiSegmentRow& row);

// Inequality (*) for the i-th segment of a row.
bool star_holds(const MultiSegmentRow& row, std::size_t i);

bool pi_nonzero(const ExtMultiSegment& E, std::size_t cap = kDefaultCap);

// Good-parity summand class.
struct SummandClass {
  std::string rho;
  int a = 1;
  int b = 1;
  bool operator==(const SummandClass&) const = default;
  auto operator<=>(const SummandClass&) const = default;
};

struct Character {
  std::map<SummandClass, int> values;

  // Throws InvalidInput for a class not in the domain.
  int at(const SummandClass& c) const;
  bool operator==(const Character&) const = default;
  auto operator<=>(const Character&) const = default;
};

// Sign functions on good-parity classes whose product over good-parity
// summands (with multiplicity) is 1. Sorted.
std::vector<Character> characters_of(const ArthurParameter& psi, const CuspidalRegistry& registry);

// Every row has B_i < B_j => i < j.
bool satisfies_p_prime(const ExtMultiSegment& E);

// The raw local sign (-1)^(|Z|+floor(b/2)+l) eta^b of one segment.
int local_sign(const MultiSegmentRow& row, std::size_t i);

// eta_E. Requires (P') (OrderNotPPrime) and pi_nonzero (PreconditionFailed);
// checks class consistency and total product (Internal).
Character character(const ExtMultiSegment& E, std::size_t cap = kDefaultCap);

// Whether E2 lies in the row-exchange class of E1 (same representation).
bool same_pi(const ExtMultiSegment& E1, const ExtMultiSegment& E2, std::size_t cap = kDefaultCap);

}  // namespace arthur
