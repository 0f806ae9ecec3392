#include "arthur/induction.hpp"

#include <cstdlib>

#include "arthur/error.hpp"

namespace arthur {

GroupType grown_group(const GroupType& g, const Cuspidal& rho, int a, int b) {
  return GroupType::with_dual_dimension(g.kind, g.dual_dimension() + 2 * rho.dim * a * b);
}

bool induction_good_parity(const ExtMultiSegment& E, const Cuspidal& rho, int a, int b) {
  return good_parity(rho, a, b, E.group.kind);
}

InductionResult induce(const ExtMultiSegment& E, const CuspidalRegistry& registry, const std::string& rho,
                       int a, int b, std::size_t cap) {
  if (a < 1 || b < 1) throw Error(ErrorKind::InvalidInput, "a and b must be positive");
  const Cuspidal& cusp = registry.at(rho);
  if (!induction_good_parity(E, cusp, a, b)) {
    throw Error(ErrorKind::BadParity, "(" + rho + "," + std::to_string(a) + "," + std::to_string(b) +
                                          ") is not of good parity; the induction is irreducible");
  }
  if (!pi_nonzero(E, cap)) throw Error(ErrorKind::PreconditionFailed, "induction needs a non-zero representation");

  InductionResult result;
  result.rho = rho;
  result.A = HalfInt::from_twice(a + b - 2);
  result.B = HalfInt::from_twice(a - b);
  const HalfInt offset = result.B.is_integral() ? HalfInt(0) : HalfInt::from_twice(1);
  const ZSegment delta{static_cast<int>(result.A.floor()), static_cast<int>(result.B.floor())};
  const GroupType group = grown_group(E.group, cusp, a, b);

  const MultiSegmentRow* old_row = E.row(rho);
  const ZSeq canonical = old_row ? canonical_p2(zlevel(*old_row), cap) : ZSeq{};
  const std::size_t j = insertion_index(canonical, delta.B);

  for (const auto& e : enumerate_eseg(delta)) {
    ZSeq seq = canonical;
    seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(j), {e, dagger(e)});
    MultiSegmentRow row{rho, {}};
    for (const auto& z : seq) row.segments.push_back(ExtSegment::lift(z, offset));

    ExtMultiSegment component{group, E.rows};
    bool replaced = false;
    for (auto& r : component.rows) {
      if (r.rho == rho) {
        r = row;
        replaced = true;
      }
    }
    if (!replaced) component.rows.push_back(row);
    if (pi_nonzero(component, cap)) {
      result.components.push_back(std::move(component));
      result.inserted.push_back(e);
      result.inserted_index.push_back(j);
    }
  }
  if (result.components.empty()) throw Error(ErrorKind::Internal, "induction produced no components");
  if (!is_interval(result.inserted)) {
    throw Error(ErrorKind::IntervalViolation, "inserted segments of the components do not form an interval");
  }
  return result;
}

bool is_reducible(const ExtMultiSegment& E, const CuspidalRegistry& registry, const std::string& rho, int a, int b,
                  std::size_t cap) {
  if (!induction_good_parity(E, registry.at(rho), a, b)) return false;
  return induce(E, registry, rho, a, b, cap).components.size() > 1;
}

SignCounts sign_counts(const ExtMultiSegment& E, const CuspidalRegistry& registry, const std::string& rho, int a,
                       int b, std::size_t cap) {
  if (const MultiSegmentRow* r = E.row(rho)) {
    for (const auto& s : r->segments) {
      if (s.a() == a && s.b() == b) {
        throw Error(ErrorKind::ContainsSummand, "parameter already contains (" + rho + "," + std::to_string(a) +
                                                    "," + std::to_string(b) + ")");
      }
    }
  }
  const InductionResult result = induce(E, registry, rho, a, b, cap);
  SignCounts counts;
  for (std::size_t k = 0; k < result.components.size(); ++k) {
    const MultiSegmentRow* row = result.components[k].row(rho);
    const std::size_t at = result.inserted_index[k];
    const int v = local_sign(*row, at);
    if (local_sign(*row, at + 1) != v) throw Error(ErrorKind::Internal, "character differs on (e, e dagger)");
    (v == 1 ? counts.plus : counts.minus) += 1;
  }
  if (std::abs(counts.plus - counts.minus) > 1) {
    throw Error(ErrorKind::Internal, "sign counts violate |m+ - m-| <= 1");
  }
  return counts;
}

}  // namespace arthur
