#include "arthur/multisegment.hpp"

#include <algorithm>
#include <set>

#include "arthur/error.hpp"
#include "arthur/nv_pair.hpp"

namespace arthur {

std::string_view to_string(GroupKind kind) noexcept { return kind == GroupKind::Sp ? "Sp" : "SOodd"; }

GroupType GroupType::with_dual_dimension(GroupKind kind, int N) {
  bool odd = N % 2 != 0;
  if (N < 0 || (kind == GroupKind::Sp) != odd) {
    throw Error(ErrorKind::DimensionMismatch,
                "dimension " + std::to_string(N) + " does not fit a dual group of " + std::string(to_string(kind)));
  }
  return GroupType{kind, kind == GroupKind::Sp ? (N - 1) / 2 : N / 2};
}

bool good_parity(const Cuspidal& rho, int a, int b, GroupKind kind) {
  if (!rho.self_dual()) return false;
  const bool odd = (a + b) % 2 != 0;
  const bool so = kind == GroupKind::SOodd;
  if (rho.selfdual == SelfDuality::Orthogonal) return so ? odd : !odd;
  return so ? !odd : odd;
}

ExtSegment::ExtSegment(HalfInt A, HalfInt B, int l, int eta) : A_(A), B_(B), l_(l), eta_(eta) {
  HalfInt diff = A - B;
  if (!diff.is_integral() || diff.twice() < 0) {
    throw Error(ErrorKind::InvalidInput, "[" + A.to_string() + "," + B.to_string() + "] is not a segment");
  }
  if (l < 0 || 2 * l > b()) throw Error(ErrorKind::InvalidInput, "l must satisfy 0 <= l <= b/2");
  if (eta != 1 && eta != -1) throw Error(ErrorKind::InvalidInput, "eta must be +1 or -1");
  if (2 * l == b()) eta_ = 1;
}

VExtZSeg ExtSegment::zlevel() const {
  return VExtZSeg(static_cast<int>(A_.floor()), static_cast<int>(B_.floor()), l_, eta_);
}

ExtSegment ExtSegment::lift(const VExtZSeg& z, HalfInt offset) {
  return ExtSegment(HalfInt(z.A()) + offset, HalfInt(z.B()) + offset, z.l(), z.eta());
}

const MultiSegmentRow* ExtMultiSegment::row(std::string_view rho) const {
  for (const auto& r : rows) {
    if (r.rho == rho) return &r;
  }
  return nullptr;
}

ArthurParameter ExtMultiSegment::parameter() const {
  ArthurParameter psi{group, {}};
  for (const auto& r : rows) {
    for (const auto& s : r.segments) psi.summands.push_back({r.rho, s.a(), s.b(), Rational(0)});
  }
  return psi;
}

int sign_product(const ExtMultiSegment& E) {
  int sign = 1;
  for (const auto& r : E.rows) {
    for (const auto& s : r.segments) {
      sign *= sign_pow(s.b() / 2 + s.l());
      if (s.b() % 2 != 0) sign *= s.eta();
    }
  }
  return sign;
}

void validate(const ExtMultiSegment& E, const CuspidalRegistry& registry) {
  if (E.group.n < 0) throw Error(ErrorKind::InvalidInput, "rank must be non-negative", "/group/n");
  std::set<std::string> seen;
  long long dimension = 0;
  for (std::size_t r = 0; r < E.rows.size(); ++r) {
    const auto& row = E.rows[r];
    const std::string path = "/rows/" + std::to_string(r);
    if (!registry.contains(row.rho)) {
      throw Error(ErrorKind::UnknownCuspidal, "unknown cuspidal " + row.rho, path + "/rho");
    }
    if (!seen.insert(row.rho).second) throw Error(ErrorKind::InvalidInput, "duplicate row " + row.rho, path + "/rho");
    const Cuspidal& rho = registry.at(row.rho);
    const auto& segs = row.segments;
    for (std::size_t i = 1; i < segs.size(); ++i) {
      if (segs[i].B().is_integral() != segs[0].B().is_integral()) {
        throw Error(ErrorKind::EndpointMismatch, "endpoints of one row must be congruent mod 1",
                    path + "/segments/" + std::to_string(i));
      }
    }
    for (std::size_t i = 0; i < segs.size(); ++i) {
      for (std::size_t j = i + 1; j < segs.size(); ++j) {
        if (segs[j].A() < segs[i].A() && segs[j].B() < segs[i].B()) {
          throw Error(ErrorKind::OrderNotAdmissible,
                      "segments " + std::to_string(i) + " and " + std::to_string(j) + " violate (P)",
                      path + "/segments/" + std::to_string(j));
        }
      }
    }
    for (std::size_t i = 0; i < segs.size(); ++i) {
      const std::string spath = path + "/segments/" + std::to_string(i);
      if ((segs[i].A() + segs[i].B()).twice() < 0) throw Error(ErrorKind::NegativeCenter, "A + B < 0", spath);
      if (!good_parity(rho, segs[i].a(), segs[i].b(), E.group.kind)) {
        throw Error(ErrorKind::BadParity,
                    "(" + row.rho + "," + std::to_string(segs[i].a()) + "," + std::to_string(segs[i].b()) +
                        ") is not of good parity",
                    spath);
      }
      dimension += static_cast<long long>(rho.dim) * segs[i].a() * segs[i].b();
    }
  }
  if (dimension != E.group.dual_dimension()) {
    throw Error(ErrorKind::DimensionMismatch,
                "parameter has dimension " + std::to_string(dimension) + ", group needs " +
                    std::to_string(E.group.dual_dimension()),
                "/group");
  }
  if (sign_product(E) != 1) throw Error(ErrorKind::SignConditionFailed, "sign condition fails", "/rows");
}

ZSeq zlevel(const MultiSegmentRow& row) {
  ZSeq out;
  out.reserve(row.segments.size());
  for (const auto& s : row.segments) out.push_back(s.zlevel());
  return out;
}

ZSeq zlevel(const ExtMultiSegment& E, std::string_view rho) {
  const MultiSegmentRow* r = E.row(rho);
  if (!r) throw Error(ErrorKind::MissingRow, "no row for " + std::string(rho));
  return zlevel(*r);
}

bool star_holds(const MultiSegmentRow& row, std::size_t i) {
  const ExtSegment& s = row.segments.at(i);
  const std::int64_t lhs = s.B().twice() + 2 * s.l();  // 2(B + l)
  if (s.B().is_integral()) return lhs >= 0;
  int alpha = 0;
  for (std::size_t j = 0; j < i; ++j) alpha += row.segments[j].a();
  const bool free = s.b() == 2 * s.l();
  for (int eta : free ? std::vector<int>{1, -1} : std::vector<int>{s.eta()}) {
    if (lhs >= sign_pow(alpha + 1) * eta) return true;
  }
  return false;
}

bool pi_nonzero(const ExtMultiSegment& E, std::size_t cap) {
  for (const auto& r : E.rows) {
    for (std::size_t i = 0; i < r.segments.size(); ++i) {
      if (!star_holds(r, i)) return false;
    }
  }
  for (const auto& r : E.rows) {
    if (!nv_seq(zlevel(r), cap)) return false;
  }
  return true;
}

int Character::at(const SummandClass& c) const {
  auto it = values.find(c);
  if (it == values.end()) {
    throw Error(ErrorKind::InvalidInput,
                "(" + c.rho + "," + std::to_string(c.a) + "," + std::to_string(c.b) + ") is not in the domain");
  }
  return it->second;
}

std::vector<Character> characters_of(const ArthurParameter& psi, const CuspidalRegistry& registry) {
  std::map<SummandClass, int> multiplicity;
  for (const auto& s : psi.summands) {
    if (s.x != Rational(0)) throw Error(ErrorKind::PreconditionFailed, "characters need x = 0 on every summand");
    if (good_parity(registry.at(s.rho), s.a, s.b, psi.group.kind)) ++multiplicity[{s.rho, s.a, s.b}];
  }
  std::vector<std::pair<SummandClass, int>> classes(multiplicity.begin(), multiplicity.end());
  if (classes.size() > 24) throw Error(ErrorKind::InvalidInput, "too many summand classes to enumerate");
  std::vector<Character> out;
  for (std::uint32_t mask = 0; mask < (1u << classes.size()); ++mask) {
    Character c;
    int product = 1;
    for (std::size_t k = 0; k < classes.size(); ++k) {
      int v = (mask >> k) & 1u ? -1 : 1;
      c.values[classes[k].first] = v;
      if (classes[k].second % 2 != 0) product *= v;
    }
    if (product == 1) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool satisfies_p_prime(const ExtMultiSegment& E) {
  for (const auto& r : E.rows) {
    for (std::size_t i = 0; i + 1 < r.segments.size(); ++i) {
      if (r.segments[i].B() > r.segments[i + 1].B()) return false;
    }
  }
  return true;
}

int local_sign(const MultiSegmentRow& row, std::size_t i) {
  const auto& segs = row.segments;
  const int ai = segs.at(i).a(), bi = segs[i].b();
  int z = 0;
  for (std::size_t j = 0; j < segs.size(); ++j) {
    if (j == i) continue;
    const int aj = segs[j].a(), bj = segs[j].b();
    if ((bi - bj) % 2 == 0) continue;
    if (!((j > i && aj < ai) || (j < i && aj > ai))) continue;
    if ((bj % 2 == 0 && bj > bi) || (bj % 2 != 0 && bi > bj)) ++z;
  }
  int sign = sign_pow(z + bi / 2 + segs[i].l());
  if (bi % 2 != 0) sign *= segs[i].eta();
  return sign;
}

Character character(const ExtMultiSegment& E, std::size_t cap) {
  if (!satisfies_p_prime(E)) throw Error(ErrorKind::OrderNotPPrime, "character needs rows ordered by (P')");
  if (!pi_nonzero(E, cap)) throw Error(ErrorKind::PreconditionFailed, "character needs a non-zero representation");
  Character c;
  int product = 1;
  for (const auto& r : E.rows) {
    for (std::size_t i = 0; i < r.segments.size(); ++i) {
      const int v = local_sign(r, i);
      product *= v;
      auto [it, fresh] = c.values.emplace(SummandClass{r.rho, r.segments[i].a(), r.segments[i].b()}, v);
      if (!fresh && it->second != v) {
        throw Error(ErrorKind::Internal, "character is not constant on the class of row " + r.rho);
      }
    }
  }
  if (product != 1) throw Error(ErrorKind::Internal, "character has total product -1");
  return c;
}

namespace {

bool half_offset(const MultiSegmentRow& r) { return !r.segments.empty() && !r.segments[0].B().is_integral(); }

}  // namespace

bool same_pi(const ExtMultiSegment& E1, const ExtMultiSegment& E2, std::size_t cap) {
  if (!(E1.group == E2.group)) return false;
  std::set<std::string> names;
  for (const auto& r : E1.rows) {
    if (!r.segments.empty()) names.insert(r.rho);
  }
  for (const auto& r : E2.rows) {
    if (!r.segments.empty()) names.insert(r.rho);
  }
  for (const auto& name : names) {
    const MultiSegmentRow* r1 = E1.row(name);
    const MultiSegmentRow* r2 = E2.row(name);
    if (!r1 || !r2 || r1->segments.size() != r2->segments.size()) return false;
    if (half_offset(*r1) != half_offset(*r2)) return false;
    const ZSeq target = zlevel(*r2);
    bool found = false;
    walk_orbit(zlevel(*r1), cap, [&](const ZSeq& m) {
      found = m == target;
      return !found;
    });
    if (!found) return false;
  }
  return true;
}

}  // namespace arthur
