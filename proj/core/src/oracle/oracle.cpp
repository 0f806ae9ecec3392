#include "arthur/oracle/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "arthur/error.hpp"
#include "arthur/segments.hpp"

namespace arthur::oracle {
namespace {

int parity_sign(int k) { return (k % 2 + 2) % 2 == 0 ? 1 : -1; }

std::vector<int> sign_lifts(const VExtZSeg& e) {
  if (2 * e.l() == e.length()) return {1, -1};
  return {e.eta()};
}

std::string show(const std::vector<VExtZSeg>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i].to_string();
  return out + "}";
}

std::set<VExtZSeg> as_set(const std::vector<VExtZSeg>& v) { return {v.begin(), v.end()}; }

// Sort by the listing order of eseg(delta).
std::vector<VExtZSeg> in_order(const ZSegment& delta, std::vector<VExtZSeg> v) {
  const auto all = eseg(delta);
  auto rank = [&](const VExtZSeg& e) { return std::find(all.begin(), all.end(), e) - all.begin(); };
  std::sort(v.begin(), v.end(), [&](const VExtZSeg& x, const VExtZSeg& y) { return rank(x) < rank(y); });
  return v;
}

std::vector<VExtZSeg> virtual_universe(const ZSegment& delta, int depth) {
  std::set<VExtZSeg> u;
  for (int l = -depth; 2 * l <= delta.length(); ++l) {
    for (int eta : {1, -1}) u.insert(VExtZSeg(delta, l, eta));
  }
  return {u.begin(), u.end()};
}

std::vector<std::vector<VExtZSeg>> virtual_intervals(const ZSegment& delta) {
  const auto u = virtual_universe(delta, 2);
  std::vector<std::vector<VExtZSeg>> out;
  for (std::uint32_t mask = 1; mask < (1u << u.size()); ++mask) {
    std::vector<VExtZSeg> s;
    for (std::size_t k = 0; k < u.size(); ++k) {
      if ((mask >> k) & 1u) s.push_back(u[k]);
    }
    if (interval(s)) out.push_back(std::move(s));
  }
  return out;
}

std::vector<VExtZSeg> real_part(const std::vector<VExtZSeg>& s) {
  std::vector<VExtZSeg> out;
  for (const auto& e : s) {
    if (e.l() >= 0) out.push_back(e);
  }
  return out;
}

std::vector<std::vector<VExtZSeg>> adjacent_from(const ZSegment& delta,
                                                 const std::vector<std::vector<VExtZSeg>>& virt,
                                                 const std::vector<VExtZSeg>& S) {
  const auto target = as_set(S);
  std::set<std::set<VExtZSeg>> found;
  for (const auto& lift : virt) {
    if (as_set(real_part(lift)) != target) continue;
    for (const auto& other : virt) {
      if (other.size() != lift.size()) continue;
      std::set<VExtZSeg> uni = as_set(lift);
      uni.insert(other.begin(), other.end());
      if (uni.size() != lift.size() + 1) continue;
      if (!interval({uni.begin(), uni.end()})) continue;
      found.insert(as_set(real_part(other)));
    }
  }
  std::vector<std::vector<VExtZSeg>> out;
  for (const auto& s : found) out.push_back(in_order(delta, {s.begin(), s.end()}));
  return out;
}

bool is_p2(const ZSeq& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i].B() > s[j].B()) return false;
      if (s[i].B() == s[j].B() && s[i].A() < s[j].A()) return false;
    }
  }
  return true;
}

VExtZSeg floor_seg(const ExtSegment& s) {
  return VExtZSeg(static_cast<int>(s.A().floor()), static_cast<int>(s.B().floor()), s.l(), s.eta());
}

ZSeq floor_row(const MultiSegmentRow& r) {
  ZSeq out;
  for (const auto& s : r.segments) out.push_back(floor_seg(s));
  return out;
}

bool good(const Cuspidal& c, int a, int b, GroupKind kind) {
  if (c.selfdual == SelfDuality::None) return false;
  bool even = (a + b) % 2 == 0;
  bool orth = c.selfdual == SelfDuality::Orthogonal;
  if (kind == GroupKind::Sp) return orth == even;
  return orth != even;
}

}  // namespace

std::vector<VExtZSeg> eseg(const ZSegment& delta) {
  const int b = delta.length();
  std::vector<VExtZSeg> out;
  for (int l = 0; 2 * l <= b; ++l) out.push_back(VExtZSeg(delta, l, 1));
  for (int l = (b - 1) / 2; l >= 0; --l) out.push_back(VExtZSeg(delta, l, -1));
  return out;
}

bool adjacent(const VExtZSeg& x, const VExtZSeg& y) {
  if (x.support() != y.support() || x == y) return false;
  for (int ex : sign_lifts(x)) {
    for (int ey : sign_lifts(y)) {
      if (ex == ey && std::abs(x.l() - y.l()) == 1) return true;
    }
  }
  const int b = x.length();
  return b % 2 == 1 && 2 * x.l() == b - 1 && 2 * y.l() == b - 1 && x.eta() == -y.eta();
}

bool interval(const std::vector<VExtZSeg>& members) {
  const std::size_t n = members.size();
  if (n == 0) return true;
  if (as_set(members).size() != n) return false;
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t, std::size_t)> extend = [&](std::size_t last, std::size_t count) {
    if (count == n) return true;
    for (std::size_t k = 0; k < n; ++k) {
      if (used[k] || !adjacent(members[last], members[k])) continue;
      used[k] = true;
      if (extend(k, count + 1)) return true;
      used[k] = false;
    }
    return false;
  };
  for (std::size_t start = 0; start < n; ++start) {
    std::fill(used.begin(), used.end(), false);
    used[start] = true;
    if (extend(start, 1)) return true;
  }
  return false;
}

std::vector<std::vector<VExtZSeg>> adjacent_intervals(const ZSegment& delta, const std::vector<VExtZSeg>& S) {
  return adjacent_from(delta, virtual_intervals(delta), S);
}

bool nv_pair(const VExtZSeg& e1, const VExtZSeg& e2) {
  const int A1 = e1.A(), B1 = e1.B(), A2 = e2.A(), B2 = e2.B();
  if (A1 > A2 && B1 > B2) throw Error(ErrorKind::NotAdmissible, "oracle: pair not admissible");
  if (e1.l() < 0 || e2.l() < 0) return false;
  const int l1 = e1.l(), l2 = e2.l(), b1 = A1 - B1 + 1, b2 = A2 - B2 + 1;
  for (int h1 : sign_lifts(e1)) {
    for (int h2 : sign_lifts(e2)) {
      const int eps = parity_sign(A1 - B1) * h1 * h2;
      bool ok = true;
      if (A1 <= A2 && B1 <= B2) {
        if (eps == 1) ok = ok && B1 + l1 <= B2 + l2 && A1 - l1 <= A2 - l2;
        else ok = ok && A1 - l1 < B2 + l2;
      }
      if (A1 <= A2 && B1 >= B2) {
        if (eps == 1) ok = ok && l2 - l1 >= 0 && l2 - l1 <= b2 - b1;
        else ok = ok && l1 + l2 >= b1;
      }
      if (A1 >= A2 && B1 <= B2) {
        if (eps == 1) ok = ok && l1 - l2 >= 0 && l1 - l2 <= b1 - b2;
        else ok = ok && l1 + l2 >= b2;
      }
      if (ok) return true;
    }
  }
  return false;
}

std::pair<VExtZSeg, VExtZSeg> row_exchange(const VExtZSeg& e1, const VExtZSeg& e2) {
  const int A1 = e1.A(), B1 = e1.B(), A2 = e2.A(), B2 = e2.B();
  const int b1 = A1 - B1 + 1, b2 = A2 - B2 + 1;
  const int h1 = e1.eta(), h2 = e2.eta();
  const int eps = parity_sign(A1 - B1) * h1 * h2;
  const bool sub = A1 <= A2 && B1 >= B2;   // Supp e1 inside Supp e2
  const bool sup = A1 >= A2 && B1 <= B2;   // Supp e1 contains Supp e2
  if (sub) {
    int l2p, eta2p;
    const int d = b1 - 2 * e1.l();
    if (eps == 1 && b2 - 2 * e2.l() < 2 * d) {
      l2p = b2 - (e2.l() + d);
      eta2p = parity_sign(A1 - B1) * h2;
    } else if (eps == 1) {
      l2p = e2.l() + d;
      eta2p = parity_sign(A1 - B1 + 1) * h2;
    } else {
      l2p = e2.l() - d;
      eta2p = parity_sign(A1 - B1 + 1) * h2;
    }
    return {VExtZSeg(e2.support(), l2p, eta2p), VExtZSeg(e1.support(), e1.l(), parity_sign(A2 - B2) * h1)};
  }
  if (sup) {
    int l1p, eta1p;
    const int d = b2 - 2 * e2.l();
    if (eps == 1 && b1 - 2 * e1.l() < 2 * d) {
      l1p = b1 - (e1.l() + d);
      eta1p = parity_sign(A2 - B2) * h1;
    } else if (eps == 1) {
      l1p = e1.l() + d;
      eta1p = parity_sign(A2 - B2 + 1) * h1;
    } else {
      l1p = e1.l() - d;
      eta1p = parity_sign(A2 - B2 + 1) * h1;
    }
    return {VExtZSeg(e2.support(), e2.l(), parity_sign(A1 - B1) * h2), VExtZSeg(e1.support(), l1p, eta1p)};
  }
  throw Error(ErrorKind::Incomparable, "oracle: supports not nested");
}

VExtZSeg dagger(const VExtZSeg& e) {
  std::vector<VExtZSeg> hits;
  for (const auto& f : eseg(e.support())) {
    if (oracle::nv_pair(e, f)) hits.push_back(f);
  }
  if (hits.size() != 1) throw Error(ErrorKind::Internal, "oracle: dagger of " + e.to_string() + " is not unique");
  return hits.front();
}

// Orbits of vanishing sequences can be infinite, so callers stop on them.
bool orbit_dfs(const ZSeq& s, std::size_t cap, const std::function<bool(const ZSeq&)>& visit) {
  std::set<ZSeq> seen{s};
  std::vector<ZSeq> stack{s};
  while (!stack.empty()) {
    ZSeq cur = stack.back();
    stack.pop_back();
    if (!visit(cur)) return false;
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      const ZSegment& x = cur[k].support();
      const ZSegment& y = cur[k + 1].support();
      const bool nested = (x.A >= y.A && x.B <= y.B) || (y.A >= x.A && y.B <= x.B);
      if (!nested) continue;
      ZSeq next = cur;
      std::tie(next[k], next[k + 1]) = oracle::row_exchange(cur[k], cur[k + 1]);
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw Error(ErrorKind::CapExceeded, "oracle: orbit exceeds cap");
        stack.push_back(std::move(next));
      }
    }
  }
  return true;
}

std::vector<ZSeq> orbit_dfs(const ZSeq& s, std::size_t cap) {
  std::vector<ZSeq> out;
  orbit_dfs(s, cap, [&](const ZSeq& m) {
    out.push_back(m);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool brute_nv_seq(const ZSeq& s, std::size_t cap) {
  return orbit_dfs(s, cap, [](const ZSeq& m) {
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
      if (!oracle::nv_pair(m[i], m[i + 1])) return false;
    }
    return true;
  });
}

ZSeq brute_canonical(const ZSeq& s, std::size_t cap) {
  std::vector<ZSeq> hits;
  orbit_dfs(s, cap, [&](const ZSeq& m) {
    if (is_p2(m)) hits.push_back(m);
    return true;
  });
  if (hits.empty()) throw Error(ErrorKind::NoCanonical, "oracle: no (P'') member");
  if (hits.size() > 1) throw Error(ErrorKind::NotUnique, "oracle: several (P'') members");
  return hits.front();
}

bool brute_star(const MultiSegmentRow& row, std::size_t i) {
  const ExtSegment& s = row.segments.at(i);
  const HalfInt lhs = s.B() + HalfInt(s.l());
  if (s.B().is_integral()) return lhs >= HalfInt(0);
  HalfInt alpha(0);
  for (std::size_t j = 0; j < i; ++j) alpha += row.segments[j].A() + row.segments[j].B() + HalfInt(1);
  const int sgn = parity_sign(static_cast<int>(alpha.twice() / 2) + 1);
  const bool free = 2 * s.l() == (s.A() - s.B()).twice() / 2 + 1;
  for (int eta : free ? std::vector<int>{1, -1} : std::vector<int>{s.eta()}) {
    if (lhs >= HalfInt::from_twice(sgn * eta)) return true;
  }
  return false;
}

bool brute_pi_nonzero(const ExtMultiSegment& E, std::size_t cap) {
  for (const auto& r : E.rows) {
    for (std::size_t i = 0; i < r.segments.size(); ++i) {
      if (!brute_star(r, i)) return false;
    }
    if (!brute_nv_seq(floor_row(r), cap)) return false;
  }
  return true;
}

int brute_sign_condition(const ExtMultiSegment& E) {
  int sign = 1;
  for (const auto& r : E.rows) {
    for (const auto& s : r.segments) {
      const int b = static_cast<int>((s.A() - s.B()).twice() / 2) + 1;
      sign *= parity_sign(b / 2 + s.l());
      for (int k = 0; k < b; ++k) sign *= s.eta();
    }
  }
  return sign;
}

Character brute_character(const ExtMultiSegment& E) {
  Character c;
  for (const auto& r : E.rows) {
    const auto& segs = r.segments;
    for (std::size_t i = 0; i < segs.size(); ++i) {
      std::size_t z = 0;
      const int ai = segs[i].a(), bi = segs[i].b();
      for (std::size_t j = 0; j < segs.size(); ++j) {
        const int aj = segs[j].a(), bj = segs[j].b();
        const bool parity_differs = (bi % 2) != (bj % 2);
        const bool order = (j > i && aj < ai) || (j < i && aj > ai);
        const bool size = (bj % 2 == 0 && bj > bi) || (bj % 2 == 1 && bi > bj);
        if (parity_differs && order && size) ++z;
      }
      int v = parity_sign(static_cast<int>(z) + bi / 2 + segs[i].l());
      for (int k = 0; k < bi; ++k) v *= segs[i].eta();
      c.values[{r.rho, ai, bi}] = v;
    }
  }
  return c;
}

BruteInduction brute_induce(const ExtMultiSegment& E, const CuspidalRegistry& registry, const std::string& rho,
                            int a, int b, std::size_t cap) {
  const Cuspidal& c = registry.at(rho);
  if (!good(c, a, b, E.group.kind)) throw Error(ErrorKind::BadParity, "oracle: not of good parity");
  if (!brute_pi_nonzero(E, cap)) throw Error(ErrorKind::PreconditionFailed, "oracle: pi(E) vanishes");
  const HalfInt A = HalfInt::from_twice(a + b - 2), B = HalfInt::from_twice(a - b);
  const HalfInt offset = HalfInt::from_twice(B.twice() - 2 * B.floor());
  const ZSegment delta{static_cast<int>(A.floor()), static_cast<int>(B.floor())};

  GroupType group = E.group;
  const int N = (group.kind == GroupKind::Sp ? 2 * group.n + 1 : 2 * group.n) + 2 * c.dim * a * b;
  group.n = group.kind == GroupKind::Sp ? (N - 1) / 2 : N / 2;

  ZSeq base;
  for (const auto& r : E.rows) {
    if (r.rho == rho) base = brute_canonical(floor_row(r), cap);
  }
  std::size_t j = base.size();
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (base[i].B() > delta.B) {
      j = i;
      break;
    }
  }

  BruteInduction out;
  for (const auto& e : eseg(delta)) {
    ZSeq seq = base;
    seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(j), oracle::dagger(e));
    seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(j), e);
    MultiSegmentRow row{rho, {}};
    for (const auto& z : seq) row.segments.emplace_back(HalfInt(z.A()) + offset, HalfInt(z.B()) + offset, z.l(), z.eta());
    ExtMultiSegment comp{group, {}};
    bool placed = false;
    for (const auto& r : E.rows) {
      if (r.rho == rho) {
        comp.rows.push_back(row);
        placed = true;
      } else {
        comp.rows.push_back(r);
      }
    }
    if (!placed) comp.rows.push_back(row);
    if (brute_pi_nonzero(comp, cap)) {
      out.inserted.push_back(e);
      out.components.push_back(std::move(comp));
    }
  }
  return out;
}

CensusReport exhaustive_interval_census(const ZSegment& delta) {
  if (delta.length() > 5) throw Error(ErrorKind::InvalidInput, "census is limited to length 5");
  CensusReport rep;
  rep.delta = delta;
  const auto all = eseg(delta);
  rep.elements = all.size();
  rep.subsets = std::size_t{1} << all.size();
  auto flag = [&](std::string property, std::string input, std::string expected, std::string actual) {
    rep.counterexamples.push_back({std::move(property), std::move(input), std::move(expected), std::move(actual)});
  };
  if (rep.elements != static_cast<std::size_t>(delta.length()) + 1) {
    flag("eseg_size", delta.to_string(), std::to_string(delta.length() + 1), std::to_string(rep.elements));
  }
  const auto main_order = enumerate_eseg(delta);
  if (main_order != all) flag("eseg_order", delta.to_string(), show(all), show(main_order));
  for (std::size_t k = 0; k + 1 < all.size(); ++k) {
    if (!adjacent(all[k], all[k + 1])) flag("consecutive_adjacent", show({all[k], all[k + 1]}), "true", "false");
  }
  for (const auto& x : all) {
    for (const auto& y : all) {
      if (adjacent(x, y) != is_adjacent(x, y)) {
        flag("adjacency_agrees", show({x, y}), adjacent(x, y) ? "true" : "false",
             is_adjacent(x, y) ? "true" : "false");
      }
    }
  }

  for (std::size_t mask = 0; mask < rep.subsets; ++mask) {
    std::vector<VExtZSeg> s;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if ((mask >> k) & 1u) s.push_back(all[k]);
    }
    const bool mine = interval(s);
    if (mine != is_interval(s)) flag("interval_agrees", show(s), mine ? "true" : "false", mine ? "false" : "true");
    (mine ? rep.intervals : rep.non_intervals).push_back(std::move(s));
  }

  const auto virt = virtual_intervals(delta);
  for (const auto& S : rep.intervals) {
    auto adj = adjacent_from(delta, virt, S);
    if (adj.size() > 3) flag("at_most_three_adjacent", show(S), "<= 3", std::to_string(adj.size()));
    std::set<std::set<VExtZSeg>> mine, theirs;
    for (const auto& t : adj) mine.insert(as_set(t));
    for (const auto& t : adjacent_intervals(EsegInterval(delta, S))) theirs.insert(as_set(t.members()));
    if (mine != theirs) flag("adjacent_intervals_agree", show(S), std::to_string(mine.size()), std::to_string(theirs.size()));
    rep.adjacency.push_back(std::move(adj));
  }

  for (std::size_t p = 0; p < rep.intervals.size(); ++p) {
    const auto& S1 = rep.intervals[p];
    if (S1.empty()) continue;
    for (const auto& S2 : rep.intervals) {
      if (S2.empty()) continue;
      std::vector<VExtZSeg> common;
      for (const auto& e : S1) {
        if (as_set(S2).count(e)) common.push_back(e);
      }
      if (!interval(common)) flag("intersection_is_interval", show(S1) + " & " + show(S2), "interval", show(common));
      if (S1.size() > 1 && S2.size() > 1 && common.size() == 1) {
        for (const auto& S1p : rep.adjacency[p]) {
          std::size_t meet = 0;
          for (const auto& e : S1p) meet += as_set(S2).count(e);
          if (meet > 0 && meet != 2) {
            flag("adjacent_meets_in_two", show(S1) + " ~ " + show(S1p) + " vs " + show(S2), "2", std::to_string(meet));
          }
        }
      }
    }
  }
  return rep;
}

PacketReport packet_sweep(const ArthurParameter& psi, const CuspidalRegistry& registry, std::size_t max_rows,
                          std::size_t cap) {
  if (psi.summands.size() > max_rows) throw Error(ErrorKind::InvalidInput, "oracle: too many summands for a sweep");
  long long dim = 0;
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::pair<HalfInt, HalfInt>>> supports;
  for (const auto& s : psi.summands) {
    const Cuspidal& c = registry.at(s.rho);
    if (s.x != Rational(0)) throw Error(ErrorKind::PreconditionFailed, "oracle: sweep needs x = 0");
    if (!good(c, s.a, s.b, psi.group.kind)) throw Error(ErrorKind::BadParity, "oracle: summand not of good parity");
    dim += static_cast<long long>(c.dim) * s.a * s.b;
    if (!supports.count(s.rho)) order.push_back(s.rho);
    supports[s.rho].emplace_back(HalfInt::from_twice(s.a + s.b - 2), HalfInt::from_twice(s.a - s.b));
  }
  const int N = psi.group.kind == GroupKind::Sp ? 2 * psi.group.n + 1 : 2 * psi.group.n;
  if (dim != N) throw Error(ErrorKind::DimensionMismatch, "oracle: parameter dimension does not match the group");

  // Fixed (P') order: B ascending, A descending.
  std::vector<std::pair<std::string, std::pair<HalfInt, HalfInt>>> slots;
  for (const auto& rho : order) {
    auto& v = supports[rho];
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
      return x.second != y.second ? x.second < y.second : x.first > y.first;
    });
    for (const auto& ab : v) slots.emplace_back(rho, ab);
  }
  std::vector<std::vector<std::pair<int, int>>> choices;
  for (const auto& [rho, ab] : slots) {
    const int b = static_cast<int>((ab.first - ab.second).twice() / 2) + 1;
    std::vector<std::pair<int, int>> opts;
    for (int l = 0; 2 * l <= b; ++l) {
      opts.emplace_back(l, 1);
      if (2 * l < b) opts.emplace_back(l, -1);
    }
    choices.push_back(std::move(opts));
  }

  PacketReport rep;
  std::vector<std::size_t> pick(slots.size(), 0);
  while (true) {
    ++rep.assignments;
    ExtMultiSegment E{psi.group, {}};
    for (std::size_t k = 0; k < slots.size(); ++k) {
      const auto& [rho, ab] = slots[k];
      if (E.rows.empty() || E.rows.back().rho != rho) E.rows.push_back({rho, {}});
      E.rows.back().segments.emplace_back(ab.first, ab.second, choices[k][pick[k]].first, choices[k][pick[k]].second);
    }
    if (brute_sign_condition(E) == 1) {
      const bool mine = brute_pi_nonzero(E, cap);
      if (mine != pi_nonzero(E, cap)) {
        rep.counterexamples.push_back({"pi_nonzero_agrees", "sweep member", mine ? "true" : "false",
                                       mine ? "false" : "true"});
      }
      if (mine) {
        Character ch = brute_character(E);
        if (!(ch == character(E, cap))) {
          rep.counterexamples.push_back({"character_agrees", "sweep member", "oracle character", "main character"});
        }
        rep.characters.push_back(std::move(ch));
        rep.members.push_back(std::move(E));
      }
    }
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  rep.packet_size = rep.members.size();

  for (std::size_t p = 0; p < rep.members.size(); ++p) {
    for (std::size_t q = p + 1; q < rep.members.size(); ++q) {
      bool same = true;
      for (std::size_t r = 0; r < rep.members[p].rows.size() && same; ++r) {
        const auto orb = orbit_dfs(floor_row(rep.members[p].rows[r]), cap);
        same = std::find(orb.begin(), orb.end(), floor_row(rep.members[q].rows[r])) != orb.end();
      }
      if (same) ++rep.collisions;
    }
  }
  if (rep.collisions) {
    rep.counterexamples.push_back({"multiplicity_free", "sweep", "0", std::to_string(rep.collisions)});
  }
  return rep;
}

}  // namespace arthur::oracle
