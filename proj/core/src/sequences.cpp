#include "arthur/sequences.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "arthur/error.hpp"
#include "arthur/nv_pair.hpp"

namespace arthur {

bool is_admissible(const ZSeq& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[j].A() < s[i].A() && s[j].B() < s[i].B()) return false;
    }
  }
  return true;
}

ZSeq r_k(const ZSeq& s, std::size_t k) {
  if (k + 1 >= s.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "r_k index " + std::to_string(k) + " out of range for length " + std::to_string(s.size()));
  }
  ZSeq out = s;
  auto [first, second] = row_exchange(s[k], s[k + 1]);
  out[k] = first;
  out[k + 1] = second;
  return out;
}

bool Orbit::contains(const ZSeq& s) const {
  return std::binary_search(members.begin(), members.end(), s);
}

bool walk_orbit(const ZSeq& s, std::size_t cap, const std::function<bool(const ZSeq&)>& visit) {
  std::set<ZSeq> seen{s};
  std::deque<ZSeq> queue{s};
  while (!queue.empty()) {
    ZSeq cur = std::move(queue.front());
    queue.pop_front();
    if (!visit(cur)) return false;
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      if (!comparable(cur[k].support(), cur[k + 1].support())) continue;
      ZSeq next = r_k(cur, k);
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw Error(ErrorKind::CapExceeded, "orbit exceeds cap of " + std::to_string(cap));
        }
        queue.push_back(std::move(next));
      }
    }
  }
  return true;
}

Orbit orbit(const ZSeq& s, std::size_t cap) {
  Orbit out{s, {}, cap};
  walk_orbit(s, cap, [&](const ZSeq& m) {
    out.members.push_back(m);
    return true;
  });
  std::sort(out.members.begin(), out.members.end());
  return out;
}

bool tilde_nv(const ZSeq& s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (!nv_pair(s[i], s[i + 1])) return false;
  }
  return true;
}

bool nested_chain(const ZSeq& s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (!s[i].support().contains(s[i + 1].support())) return false;
  }
  return true;
}

bool nv_seq(const ZSeq& s, const NvOptions& options) {
  if (!is_admissible(s)) throw Error(ErrorKind::NotAdmissible, "sequence " + to_string(s) + " is not admissible");
  if (options.nested_shortcut && nested_chain(s)) return tilde_nv(s);
  return walk_orbit(s, options.cap, [](const ZSeq& m) { return tilde_nv(m); });
}

bool satisfies_p2(const ZSeq& s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i].B() > s[i + 1].B()) return false;
    if (s[i].B() == s[i + 1].B() && s[i].A() < s[i + 1].A()) return false;
  }
  return true;
}

ZSeq canonical_p2(const ZSeq& s, std::size_t cap) {
  if (!is_admissible(s)) throw Error(ErrorKind::NotAdmissible, "sequence " + to_string(s) + " is not admissible");
  std::vector<ZSeq> found;
  walk_orbit(s, cap, [&](const ZSeq& m) {
    if (!tilde_nv(m)) {
      throw Error(ErrorKind::PreconditionFailed, "canonical form needs a non-vanishing sequence");
    }
    if (satisfies_p2(m)) found.push_back(m);
    return true;
  });
  if (found.empty()) throw Error(ErrorKind::NoCanonical, "no (P'') member in the orbit of " + to_string(s));
  if (found.size() > 1) throw Error(ErrorKind::NotUnique, "several (P'') members in the orbit of " + to_string(s));
  return found.front();
}

std::size_t insertion_index(const ZSeq& p2_form, int B) {
  for (std::size_t i = 0; i < p2_form.size(); ++i) {
    if (p2_form[i].B() > B) return i;
  }
  return p2_form.size();
}

namespace {

ZSeq insert_into_canonical(const ZSeq& canonical, const VExtZSeg& e) {
  ZSeq out = canonical;
  auto at = out.begin() + static_cast<std::ptrdiff_t>(insertion_index(canonical, e.B()));
  at = out.insert(at, dagger(e));
  out.insert(at, e);
  return out;
}

}  // namespace

ZSeq insert_pair(const ZSeq& s, const VExtZSeg& e, std::size_t cap) {
  if (!e.is_real()) throw Error(ErrorKind::InvalidInput, "inserted segment must not be virtual");
  return insert_into_canonical(canonical_p2(s, cap), e);
}

EsegInterval nv_set(const ZSeq& s, const EsegInterval& candidates, std::size_t cap) {
  const ZSeq canonical = canonical_p2(s, cap);
  std::vector<VExtZSeg> kept;
  for (const auto& e : candidates.members()) {
    if (nv_seq(insert_into_canonical(canonical, e), cap)) kept.push_back(e);
  }
  if (!is_interval(kept)) {
    throw Error(ErrorKind::IntervalViolation, "NV set of " + to_string(s) + " is not an interval");
  }
  return EsegInterval(candidates.delta(), std::move(kept));
}

ZSeq shift(const ZSeq& s, int t) {
  ZSeq out;
  out.reserve(s.size());
  for (const auto& e : s) out.push_back(shift(e, t));
  return out;
}

std::string to_string(const ZSeq& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i].to_string();
  }
  return out + ")";
}

}  // namespace arthur
