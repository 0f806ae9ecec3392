#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace arthur {

// Integer segment [A,B] = {A, A-1, ..., B}.
struct ZSegment {
  int A = 0;
  int B = 0;

  // Throws InvalidInput when A < B.
  static ZSegment make(int A, int B);

  constexpr int length() const { return A - B + 1; }
  // True iff `other` is a subset of *this.
  constexpr bool contains(const ZSegment& other) const {
    return A >= other.A && B <= other.B;
  }

  constexpr bool operator==(const ZSegment&) const = default;
  constexpr auto operator<=>(const ZSegment&) const = default;

  std::string to_string() const;
};

// Admissible ordered pair: NOT (A1 > A2 and B1 > B2).
constexpr bool admissible(const ZSegment& first, const ZSegment& second) {
  return !(first.A > second.A && first.B > second.B);
}

// Nested one way or the other.
constexpr bool comparable(const ZSegment& x, const ZSegment& y) {
  return x.contains(y) || y.contains(x);
}

constexpr int sign_pow(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

// Virtual extended Z-segment ([A,B], l, eta) with l <= b/2. l < 0 is virtual.
// When b = 2l the sign is not meaningful and is stored as +1.
class VExtZSeg {
 public:
  VExtZSeg() : VExtZSeg(ZSegment{0, 0}, 0, 1) {}
  // Canonicalizes; throws InvalidInput if 2l > b or eta is not +-1.
  VExtZSeg(ZSegment support, int l, int eta);
  VExtZSeg(int A, int B, int l, int eta) : VExtZSeg(ZSegment::make(A, B), l, eta) {}

  const ZSegment& support() const { return seg_; }
  int A() const { return seg_.A; }
  int B() const { return seg_.B; }
  int length() const { return seg_.length(); }
  int l() const { return l_; }
  int eta() const { return eta_; }

  bool is_real() const { return l_ >= 0; }
  // b = 2l: both signs name this value.
  bool sign_free() const { return length() == 2 * l_; }
  // Signs that represent this value (one, or both when sign_free()).
  std::vector<int> lifts() const;

  // Coordinate on the line of Eseg_Delta: 0 for (0,+1) up to b for (0,-1).
  // Virtual values fall outside [0, b]. Two values over the same support are
  // adjacent iff their positions differ by one.
  int position() const { return eta_ == 1 ? l_ : length() - l_; }
  static VExtZSeg at_position(ZSegment support, int position);

  bool operator==(const VExtZSeg&) const = default;
  auto operator<=>(const VExtZSeg&) const = default;

  std::string to_string() const;

 private:
  ZSegment seg_;
  int l_ = 0;
  int eta_ = 1;
};

// All A-B+2 extended segments over delta, from (delta,0,+1) to (delta,0,-1).
std::vector<VExtZSeg> enumerate_eseg(const ZSegment& delta);

bool is_adjacent(const VExtZSeg& e1, const VExtZSeg& e2);

// Empty, or all members share a support and form one chain of adjacencies.
bool is_interval(std::span<const VExtZSeg> members);

// A set of extended segments over a fixed support forming an interval,
// stored in enumerate_eseg order.
class EsegInterval {
 public:
  explicit EsegInterval(ZSegment delta) : delta_(delta) {}
  // Throws InvalidInput unless the members are real, over delta, and form an interval.
  EsegInterval(ZSegment delta, std::vector<VExtZSeg> members);
  // Positions lo..hi inclusive (empty when lo > hi).
  static EsegInterval from_positions(ZSegment delta, int lo, int hi);

  const ZSegment& delta() const { return delta_; }
  const std::vector<VExtZSeg>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const VExtZSeg& e) const;
  // Positions of the first and last member; only for non-empty intervals.
  int lo() const { return members_.front().position(); }
  int hi() const { return members_.back().position(); }

  bool operator==(const EsegInterval&) const = default;
  auto operator<=>(const EsegInterval&) const = default;

 private:
  ZSegment delta_;
  std::vector<VExtZSeg> members_;
};

// Intervals of Eseg_delta adjacent to s (at most three), sorted.
std::vector<EsegInterval> adjacent_intervals(const EsegInterval& s);

// Same support and l, sign making NV(e, dagger(e)) hold.
VExtZSeg dagger(const VExtZSeg& e);

VExtZSeg shift(const VExtZSeg& e, int t);

}  // namespace arthur
