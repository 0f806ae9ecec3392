#include "arthur/nv_pair.hpp"

#include <algorithm>

#include "arthur/error.hpp"

namespace arthur {
namespace {

void require_admissible(const ZSegment& d1, const ZSegment& d2) {
  if (!admissible(d1, d2)) {
    throw Error(ErrorKind::NotAdmissible,
                "pair (" + d1.to_string() + "," + d2.to_string() + ") is not admissible");
  }
}

EsegInterval checked_interval(const ZSegment& delta, std::vector<VExtZSeg> members) {
  if (!is_interval(members)) {
    throw Error(ErrorKind::IntervalViolation, "NV set over " + delta.to_string() + " is not an interval");
  }
  return EsegInterval(delta, std::move(members));
}

void require_lift(const VExtZSeg& e, int eta) {
  const auto ok = e.lifts();
  if (std::find(ok.begin(), ok.end(), eta) == ok.end()) {
    throw Error(ErrorKind::InvalidInput, "eta=" + std::to_string(eta) + " is not a lift of " + e.to_string());
  }
}

}  // namespace

bool nv_pair_with_lifts(const VExtZSeg& e1, int eta1, const VExtZSeg& e2, int eta2) {
  require_lift(e1, eta1);
  require_lift(e2, eta2);
  const int A1 = e1.A(), B1 = e1.B(), l1 = e1.l(), b1 = e1.length();
  const int A2 = e2.A(), B2 = e2.B(), l2 = e2.l(), b2 = e2.length();
  const int eps = sign_pow(A1 - B1) * eta1 * eta2;

  if (A1 <= A2 && B1 <= B2) {
    bool ok = eps == 1 ? (B1 + l1 <= B2 + l2 && A1 - l1 <= A2 - l2) : (A1 - l1 < B2 + l2);
    if (!ok) return false;
  }
  if (A1 <= A2 && B1 >= B2) {
    bool ok = eps == 1 ? (0 <= l2 - l1 && l2 - l1 <= b2 - b1) : (l1 + l2 >= b1);
    if (!ok) return false;
  }
  if (A1 >= A2 && B1 <= B2) {
    bool ok = eps == 1 ? (0 <= l1 - l2 && l1 - l2 <= b1 - b2) : (l1 + l2 >= b2);
    if (!ok) return false;
  }
  return true;
}

bool nv_pair(const VExtZSeg& e1, const VExtZSeg& e2) {
  require_admissible(e1.support(), e2.support());
  if (!e1.is_real() || !e2.is_real()) return false;
  for (int eta1 : e1.lifts()) {
    for (int eta2 : e2.lifts()) {
      if (nv_pair_with_lifts(e1, eta1, e2, eta2)) return true;
    }
  }
  return false;
}

bool precedes(const ZSegment& d1, const ZSegment& d2) {
  require_admissible(d1, d2);
  if (d2.contains(d1)) return true;
  return !d1.contains(d2) && d1.B < d2.B;
}

EsegInterval nv_right_set(const VExtZSeg& e, const ZSegment& delta2) {
  if (!admissible(e.support(), delta2)) return EsegInterval(delta2);
  std::vector<VExtZSeg> members;
  for (const auto& f : enumerate_eseg(delta2)) {
    if (nv_pair(e, f)) members.push_back(f);
  }
  return checked_interval(delta2, std::move(members));
}

EsegInterval nv_left_set(const ZSegment& delta1, const VExtZSeg& e) {
  if (!admissible(delta1, e.support())) return EsegInterval(delta1);
  std::vector<VExtZSeg> members;
  for (const auto& f : enumerate_eseg(delta1)) {
    if (nv_pair(f, e)) members.push_back(f);
  }
  return checked_interval(delta1, std::move(members));
}

std::pair<VExtZSeg, VExtZSeg> row_exchange_with_lifts(const VExtZSeg& e1, int eta1,
                                                      const VExtZSeg& e2, int eta2) {
  require_lift(e1, eta1);
  require_lift(e2, eta2);
  const ZSegment d1 = e1.support(), d2 = e2.support();
  const int A1 = d1.A, B1 = d1.B, l1 = e1.l(), b1 = e1.length();
  const int A2 = d2.A, B2 = d2.B, l2 = e2.l(), b2 = e2.length();
  const int eps = sign_pow(A1 - B1) * eta1 * eta2;

  if (d2.contains(d1)) {
    const VExtZSeg e1p(d1, l1, sign_pow(A2 - B2) * eta1);
    const int gap = b1 - 2 * l1;
    if (eps == 1 && b2 - 2 * l2 < 2 * gap) {
      return {VExtZSeg(d2, b2 - (l2 + gap), sign_pow(A1 - B1) * eta2), e1p};
    }
    if (eps == 1) return {VExtZSeg(d2, l2 + gap, sign_pow(A1 - B1 + 1) * eta2), e1p};
    return {VExtZSeg(d2, l2 - gap, sign_pow(A1 - B1 + 1) * eta2), e1p};
  }
  if (d1.contains(d2)) {
    const VExtZSeg e2p(d2, l2, sign_pow(A1 - B1) * eta2);
    const int gap = b2 - 2 * l2;
    if (eps == 1 && b1 - 2 * l1 < 2 * gap) {
      return {e2p, VExtZSeg(d1, b1 - (l1 + gap), sign_pow(A2 - B2) * eta1)};
    }
    if (eps == 1) return {e2p, VExtZSeg(d1, l1 + gap, sign_pow(A2 - B2 + 1) * eta1)};
    return {e2p, VExtZSeg(d1, l1 - gap, sign_pow(A2 - B2 + 1) * eta1)};
  }
  throw Error(ErrorKind::Incomparable,
              "row exchange needs nested supports, got " + d1.to_string() + " and " + d2.to_string());
}

std::pair<VExtZSeg, VExtZSeg> row_exchange(const VExtZSeg& e1, const VExtZSeg& e2) {
  return row_exchange_with_lifts(e1, e1.eta(), e2, e2.eta());
}

}  // namespace arthur
