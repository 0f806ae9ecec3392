#include "arthur/segments.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "arthur/error.hpp"

namespace arthur {

ZSegment ZSegment::make(int A, int B) {
  if (A < B) {
    throw Error(ErrorKind::InvalidInput,
                "empty segment [" + std::to_string(A) + "," + std::to_string(B) + "]");
  }
  return ZSegment{A, B};
}

std::string ZSegment::to_string() const {
  return "[" + std::to_string(A) + "," + std::to_string(B) + "]";
}

VExtZSeg::VExtZSeg(ZSegment support, int l, int eta) : seg_(support), l_(l), eta_(eta) {
  if (seg_.A < seg_.B) throw Error(ErrorKind::InvalidInput, "empty segment " + seg_.to_string());
  if (eta != 1 && eta != -1) throw Error(ErrorKind::InvalidInput, "eta must be +1 or -1");
  if (2 * l > seg_.length()) {
    throw Error(ErrorKind::InvalidInput,
                "l=" + std::to_string(l) + " exceeds half the length of " + seg_.to_string());
  }
  if (sign_free()) eta_ = 1;
}

std::vector<int> VExtZSeg::lifts() const {
  if (sign_free()) return {1, -1};
  return {eta_};
}

VExtZSeg VExtZSeg::at_position(ZSegment support, int position) {
  int b = support.length();
  if (2 * position <= b) return VExtZSeg(support, position, 1);
  return VExtZSeg(support, b - position, -1);
}

std::string VExtZSeg::to_string() const {
  return "(" + seg_.to_string() + "," + std::to_string(l_) + "," + (eta_ == 1 ? "+1" : "-1") + ")";
}

std::vector<VExtZSeg> enumerate_eseg(const ZSegment& delta) {
  std::vector<VExtZSeg> out;
  out.reserve(static_cast<std::size_t>(delta.length()) + 1);
  for (int p = 0; p <= delta.length(); ++p) out.push_back(VExtZSeg::at_position(delta, p));
  return out;
}

bool is_adjacent(const VExtZSeg& e1, const VExtZSeg& e2) {
  return e1.support() == e2.support() && std::abs(e1.position() - e2.position()) == 1;
}

bool is_interval(std::span<const VExtZSeg> members) {
  if (members.empty()) return true;
  const ZSegment& delta = members.front().support();
  std::set<int> positions;
  for (const auto& e : members) {
    if (e.support() != delta) return false;
    if (!positions.insert(e.position()).second) return false;
  }
  return *positions.rbegin() - *positions.begin() + 1 == static_cast<int>(positions.size());
}

EsegInterval::EsegInterval(ZSegment delta, std::vector<VExtZSeg> members)
    : delta_(delta), members_(std::move(members)) {
  for (const auto& e : members_) {
    if (e.support() != delta_ || !e.is_real()) {
      throw Error(ErrorKind::InvalidInput, e.to_string() + " is not in Eseg" + delta_.to_string());
    }
  }
  std::sort(members_.begin(), members_.end(),
            [](const VExtZSeg& x, const VExtZSeg& y) { return x.position() < y.position(); });
  if (!is_interval(members_)) throw Error(ErrorKind::InvalidInput, "members do not form an interval");
}

EsegInterval EsegInterval::from_positions(ZSegment delta, int lo, int hi) {
  EsegInterval out(delta);
  lo = std::max(lo, 0);
  hi = std::min(hi, delta.length());
  for (int p = lo; p <= hi; ++p) out.members_.push_back(VExtZSeg::at_position(delta, p));
  return out;
}

bool EsegInterval::contains(const VExtZSeg& e) const {
  return std::find(members_.begin(), members_.end(), e) != members_.end();
}

std::vector<EsegInterval> adjacent_intervals(const EsegInterval& s) {
  const ZSegment delta = s.delta();
  const int b = delta.length();
  // Virtual position ranges whose real part is s. One virtual step past an
  // edge is enough: further steps do not change the intersections.
  std::vector<std::pair<int, int>> lifts;
  if (s.empty()) {
    lifts = {{-1, -1}, {-2, -1}, {b + 1, b + 1}, {b + 1, b + 2}};
  } else {
    std::vector<int> los = s.lo() > 0 ? std::vector<int>{s.lo()} : std::vector<int>{0, -1};
    std::vector<int> his = s.hi() < b ? std::vector<int>{s.hi()} : std::vector<int>{b, b + 1};
    for (int lo : los) {
      for (int hi : his) lifts.emplace_back(lo, hi);
    }
  }
  std::set<EsegInterval> found;
  for (auto [lo, hi] : lifts) {
    for (int t : {-1, 1}) found.insert(EsegInterval::from_positions(delta, lo + t, hi + t));
  }
  return {found.begin(), found.end()};
}

VExtZSeg dagger(const VExtZSeg& e) {
  return VExtZSeg(e.support(), e.l(), sign_pow(e.A() - e.B()) * e.eta());
}

VExtZSeg shift(const VExtZSeg& e, int t) {
  return VExtZSeg(ZSegment{e.A() + t, e.B() + t}, e.l(), e.eta());
}

}  // namespace arthur
