#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "arthur/segments.hpp"

namespace arthur {

inline constexpr std::size_t kDefaultCap = 1'000'000;

using ZSeq = std::vector<VExtZSeg>;

// (P): no i < j with A_j < A_i and B_j < B_i.
bool is_admissible(const ZSeq& s);

// Exchanges positions k and k+1 (0-based). Throws IndexOutOfRange or Incomparable.
ZSeq r_k(const ZSeq& s, std::size_t k);

struct Orbit {
  ZSeq seed;
  std::vector<ZSeq> members;  // sorted, deduplicated
  std::size_t cap = kDefaultCap;

  bool contains(const ZSeq& s) const;
};

// Closure of {s} under every defined r_k. Throws CapExceeded past `cap` members.
Orbit orbit(const ZSeq& s, std::size_t cap = kDefaultCap);

// Breadth-first walk of the orbit; stops early (returning false) when
// `visit` returns false. Used for early-exit searches.
bool walk_orbit(const ZSeq& s, std::size_t cap, const std::function<bool(const ZSeq&)>& visit);

// nv_pair on every consecutive pair.
bool tilde_nv(const ZSeq& s);

// Supports weakly decreasing under inclusion along the sequence.
bool nested_chain(const ZSeq& s);

struct NvOptions {
  std::size_t cap = kDefaultCap;
  // Use tilde_nv directly for nested chains.
  bool nested_shortcut = true;
};

// tilde_nv on every member of the orbit.
bool nv_seq(const ZSeq& s, const NvOptions& options);
inline bool nv_seq(const ZSeq& s, std::size_t cap = kDefaultCap) {
  return nv_seq(s, NvOptions{cap, true});
}

// (P''): B non-decreasing; A non-increasing among equal B.
bool satisfies_p2(const ZSeq& s);

// The unique (P'') member of the orbit. Throws PreconditionFailed when nv_seq
// fails, NoCanonical / NotUnique if the orbit has zero or several (P'') members.
ZSeq canonical_p2(const ZSeq& s, std::size_t cap = kDefaultCap);

// Index j (0-based) where (e, e dagger) is inserted into a (P'') sequence.
std::size_t insertion_index(const ZSeq& p2_form, int B);

// E_e: (e, dagger(e)) inserted into the (P'') form of s.
ZSeq insert_pair(const ZSeq& s, const VExtZSeg& e, std::size_t cap = kDefaultCap);

// { e in candidates : nv_seq(insert_pair(s, e)) }. Throws IntervalViolation if
// the result is not an interval.
EsegInterval nv_set(const ZSeq& s, const EsegInterval& candidates, std::size_t cap = kDefaultCap);

ZSeq shift(const ZSeq& s, int t);

std::string to_string(const ZSeq& s);

}  // namespace arthur
