#pragma once

#include <utility>

#include "arthur/segments.hpp"

namespace arthur {

// Pairwise non-vanishing criterion. False if either side is virtual.
// Throws NotAdmissible when (Supp e1, Supp e2) is not admissible.
bool nv_pair(const VExtZSeg& e1, const VExtZSeg& e2);

// d1 is contained in d2, or the two are incomparable and B1 < B2.
// Throws NotAdmissible on a non-admissible pair.
bool precedes(const ZSegment& d1, const ZSegment& d2);

// { e' in Eseg_delta2 : nv_pair(e, e') }; empty when not admissible.
EsegInterval nv_right_set(const VExtZSeg& e, const ZSegment& delta2);
// { e' in Eseg_delta1 : nv_pair(e', e) }; empty when not admissible.
EsegInterval nv_left_set(const ZSegment& delta1, const VExtZSeg& e);

// R(e1, e2) = (e2', e1'). Supports must be nested; throws Incomparable otherwise.
std::pair<VExtZSeg, VExtZSeg> row_exchange(const VExtZSeg& e1, const VExtZSeg& e2);

// Same, evaluated with explicit sign lifts (exposed for lift-independence checks).
std::pair<VExtZSeg, VExtZSeg> row_exchange_with_lifts(const VExtZSeg& e1, int eta1,
                                                      const VExtZSeg& e2, int eta2);
bool nv_pair_with_lifts(const VExtZSeg& e1, int eta1, const VExtZSeg& e2, int eta2);

}  // namespace arthur
