#pragma once

// Brute-force reference implementations. Only the value types are shared with
// the main library; every rule is re-derived from the definitions, without
// the nested-chain shortcut and with a depth-first orbit walker.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "arthur/multisegment.hpp"

namespace arthur::oracle {

struct Counterexample {
  std::string property;
  std::string input;
  std::string expected;
  std::string actual;
};

// Eseg_delta listed by the descending total order (delta,0,+1) > ... > (delta,0,-1).
std::vector<VExtZSeg> eseg(const ZSegment& delta);

// Lift-based adjacency, straight from the definition.
bool adjacent(const VExtZSeg& x, const VExtZSeg& y);
// Distinct members that can be listed with consecutive ones adjacent (searched).
bool interval(const std::vector<VExtZSeg>& members);
// Intervals adjacent to S, through explicit virtual intervals with up to two
// virtual steps on each side.
std::vector<std::vector<VExtZSeg>> adjacent_intervals(const ZSegment& delta, const std::vector<VExtZSeg>& S);

bool nv_pair(const VExtZSeg& e1, const VExtZSeg& e2);
std::pair<VExtZSeg, VExtZSeg> row_exchange(const VExtZSeg& e1, const VExtZSeg& e2);
// The unique e' over Supp(e) with nv_pair(e, e'), found by search.
VExtZSeg dagger(const VExtZSeg& e);

// Depth-first closure; throws Error(CapExceeded).
std::vector<ZSeq> orbit_dfs(const ZSeq& s, std::size_t cap);
// Same walk, stopping (and returning false) as soon as visit returns false.
bool orbit_dfs(const ZSeq& s, std::size_t cap, const std::function<bool(const ZSeq&)>& visit);
bool brute_nv_seq(const ZSeq& s, std::size_t cap);
// Unique (P'') member, or throws Error(NoCanonical / NotUnique).
ZSeq brute_canonical(const ZSeq& s, std::size_t cap);

bool brute_star(const MultiSegmentRow& row, std::size_t i);
bool brute_pi_nonzero(const ExtMultiSegment& E, std::size_t cap);
int brute_sign_condition(const ExtMultiSegment& E);
// eta_E by the Z-set recipe, without the (P') check.
Character brute_character(const ExtMultiSegment& E);

struct BruteInduction {
  std::vector<VExtZSeg> inserted;
  std::vector<ExtMultiSegment> components;
};
BruteInduction brute_induce(const ExtMultiSegment& E, const CuspidalRegistry& registry, const std::string& rho,
                            int a, int b, std::size_t cap);

struct CensusReport {
  ZSegment delta;
  std::size_t elements = 0;
  std::size_t subsets = 0;
  std::vector<std::vector<VExtZSeg>> intervals;
  std::vector<std::vector<VExtZSeg>> non_intervals;
  // adjacency[k] lists the intervals adjacent to intervals[k].
  std::vector<std::vector<std::vector<VExtZSeg>>> adjacency;
  std::vector<Counterexample> counterexamples;
};
// All subsets of Eseg_delta; checks the basic interval lemmas clause by clause
// and compares with the main library. Requires length(delta) <= 5.
CensusReport exhaustive_interval_census(const ZSegment& delta);

struct PacketReport {
  std::size_t assignments = 0;
  std::size_t packet_size = 0;
  std::vector<ExtMultiSegment> members;
  std::vector<Character> characters;
  std::size_t collisions = 0;
  std::vector<Counterexample> counterexamples;
};
// All (l, eta) data on the segments of psi in a fixed (P') order, filtered by
// the sign condition and non-vanishing.
PacketReport packet_sweep(const ArthurParameter& psi, const CuspidalRegistry& registry, std::size_t max_rows,
                          std::size_t cap = kDefaultCap);

}  // namespace arthur::oracle
