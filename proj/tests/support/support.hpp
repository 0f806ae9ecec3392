#pragma once
// Shared helpers for the test executables: cuspidal registries, seeded
// random generators and the GL fixture table.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "arthur/arthur.hpp"

namespace arthur::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline int random_sign(Rng& rng) { return uniform(rng, 0, 1) == 0 ? 1 : -1; }

// "1" and "chi" are quadratic characters, "chi2" a third one; "rho_o" and
// "rho_s" are self-dual cuspidals of GL_2; "mu"/"muv" a non-self-dual pair.
inline CuspidalRegistry standard_registry() {
  return CuspidalRegistry({
      {"1", 1, SelfDuality::Orthogonal, ""},
      {"chi", 1, SelfDuality::Orthogonal, ""},
      {"chi2", 1, SelfDuality::Orthogonal, ""},
      {"rho_o", 2, SelfDuality::Orthogonal, ""},
      {"rho_s", 2, SelfDuality::Symplectic, ""},
      {"mu", 1, SelfDuality::None, "muv"},
      {"muv", 1, SelfDuality::None, "mu"},
  });
}

inline ExtSegment half_seg(int twiceA, int twiceB, int l, int eta) {
  return ExtSegment(HalfInt::from_twice(twiceA), HalfInt::from_twice(twiceB), l, eta);
}

inline ZSegment random_support(Rng& rng, int lo, int hi) {
  int x = uniform(rng, lo, hi);
  int y = uniform(rng, lo, hi);
  return ZSegment::make(std::max(x, y), std::min(x, y));
}

// Real value over `support`, with l uniform in [0, b/2].
inline VExtZSeg random_real(Rng& rng, const ZSegment& support) {
  return VExtZSeg(support, uniform(rng, 0, support.length() / 2), random_sign(rng));
}

// Admissible sequence of real values, n items, supports inside [hi, lo].
inline ZSeq random_sequence(Rng& rng, int n, int lo = -1, int hi = 3) {
  std::vector<ZSegment> supports;
  for (int i = 0; i < n; ++i) supports.push_back(random_support(rng, lo, hi));
  // A random order is kept when admissible; otherwise fall back to B ascending.
  std::shuffle(supports.begin(), supports.end(), rng);
  ZSeq s;
  for (const auto& d : supports) s.push_back(random_real(rng, d));
  if (!is_admissible(s)) {
    std::stable_sort(s.begin(), s.end(), [](const VExtZSeg& x, const VExtZSeg& y) {
      return x.B() != y.B() ? x.B() < y.B() : x.A() > y.A();
    });
  }
  return s;
}

// Supports weakly decreasing under inclusion.
inline ZSeq random_nested_sequence(Rng& rng, int n, int lo = -1, int hi = 3) {
  ZSeq s;
  ZSegment d = random_support(rng, lo, hi);
  for (int i = 0; i < n; ++i) {
    s.push_back(random_real(rng, d));
    d = random_support(rng, d.B, d.A);
  }
  return s;
}

// Endpoint offset (0 or 1/2) forced by good parity of rho in this family.
inline bool half_integral_row(const Cuspidal& rho, GroupKind kind) {
  // a + b odd on SO_odd for orthogonal rho gives half-integral endpoints.
  return good_parity(rho, 1, 2, kind);
}

struct RandomMultiSegmentOptions {
  int max_segments = 3;
  int max_a = 4;
  int max_b = 4;
  std::vector<std::string> cuspidals = {"1", "chi"};
};

// A random validated multi-segment in (P') order, or nullopt when the draw
// violates an invariant (sign condition, dimension parity, ...).
inline std::optional<ExtMultiSegment> random_multisegment(Rng& rng, const CuspidalRegistry& registry,
                                                          GroupKind kind,
                                                          const RandomMultiSegmentOptions& opt = {}) {
  ExtMultiSegment E;
  int count = uniform(rng, 0, opt.max_segments);
  long long N = 0;
  for (int i = 0; i < count; ++i) {
    const std::string& name = opt.cuspidals[uniform(rng, 0, static_cast<int>(opt.cuspidals.size()) - 1)];
    const Cuspidal& rho = registry.at(name);
    int a = uniform(rng, 1, opt.max_a);
    int b = uniform(rng, 1, opt.max_b);
    if (!good_parity(rho, a, b, kind)) {
      if (a < opt.max_a) ++a; else --a;
      if (a < 1 || !good_parity(rho, a, b, kind)) return std::nullopt;
    }
    int twiceA = a + b - 2;
    int twiceB = a - b;
    ExtSegment seg = half_seg(twiceA, twiceB, uniform(rng, 0, b / 2), random_sign(rng));
    auto it = std::find_if(E.rows.begin(), E.rows.end(), [&](const MultiSegmentRow& r) { return r.rho == name; });
    if (it == E.rows.end()) {
      E.rows.push_back({name, {}});
      it = std::prev(E.rows.end());
    }
    it->segments.push_back(seg);
    N += static_cast<long long>(rho.dim) * a * b;
  }
  for (auto& row : E.rows) {
    std::shuffle(row.segments.begin(), row.segments.end(), rng);
    std::stable_sort(row.segments.begin(), row.segments.end(),
                     [](const ExtSegment& x, const ExtSegment& y) { return x.B() < y.B(); });
  }
  try {
    E.group = GroupType::with_dual_dimension(kind, static_cast<int>(N));
    validate(E, registry);
  } catch (const Error&) {
    return std::nullopt;
  }
  return E;
}

// Draws until a multi-segment with pi_nonzero is found.
inline ExtMultiSegment random_nonzero_multisegment(Rng& rng, const CuspidalRegistry& registry, GroupKind kind,
                                                   const RandomMultiSegmentOptions& opt = {}) {
  for (;;) {
    auto E = random_multisegment(rng, registry, kind, opt);
    if (E && pi_nonzero(*E)) return *E;
  }
}

// One row of the GL fixture table: the local component, and its translation
// to a representation of SO_odd (nullopt when the translation is not needed).
struct GLCase {
  std::string label;
  GLLocalComponent component;
  bool expect_ok = true;
  std::optional<APlusRep> translated;
  bool expect_unitary = true;
};

inline Rational quarter() { return Rational(1, 4); }

// gp of the orthogonal translation: ([a/2, (a-2)/2]_rho, 1, +1) per tempered factor.
inline ExtMultiSegment orth_gp(const std::vector<GLTemperedEntry>& tempered, const CuspidalRegistry& registry) {
  ExtMultiSegment E;
  long long N = 0;
  for (const auto& t : tempered) {
    auto it = std::find_if(E.rows.begin(), E.rows.end(), [&](const MultiSegmentRow& r) { return r.rho == t.rho; });
    if (it == E.rows.end()) {
      E.rows.push_back({t.rho, {}});
      it = std::prev(E.rows.end());
    }
    it->segments.push_back(half_seg(t.a, t.a - 2, 1, 1));
    N += 2LL * registry.at(t.rho).dim * t.a;
  }
  E.group = GroupType::with_dual_dimension(GroupKind::SOodd, static_cast<int>(N));
  return E;
}

// Orthogonal global type: psi = Pi x S_2 on SO_{2N+1}.
inline APlusRep orth_translation(const GLLocalComponent& c, const CuspidalRegistry& registry) {
  APlusRep pi;
  pi.gp = orth_gp(c.tempered, registry);
  long long N = pi.gp.group.dual_dimension();
  for (const auto& e : c.nu) {
    pi.nu.push_back({e.rho, e.a, 2, e.x});
    N += 2LL * registry.at(e.rho).dim * e.a * 2;
  }
  pi.group = GroupType::with_dual_dimension(GroupKind::SOodd, static_cast<int>(N));
  return pi;
}

// Symplectic global type: psi = Pi x S_1, tempered part given by rows
// ([(a-1)/2, (a-1)/2]_rho, 0, +1).
inline APlusRep sympl_translation(const GLLocalComponent& c, const CuspidalRegistry& registry) {
  APlusRep pi;
  long long Ngp = 0;
  for (const auto& t : c.tempered) {
    auto it = std::find_if(pi.gp.rows.begin(), pi.gp.rows.end(),
                           [&](const MultiSegmentRow& r) { return r.rho == t.rho; });
    if (it == pi.gp.rows.end()) {
      pi.gp.rows.push_back({t.rho, {}});
      it = std::prev(pi.gp.rows.end());
    }
    it->segments.push_back(half_seg(t.a - 1, t.a - 1, 0, 1));
    Ngp += static_cast<long long>(registry.at(t.rho).dim) * t.a;
  }
  pi.gp.group = GroupType::with_dual_dimension(GroupKind::SOodd, static_cast<int>(Ngp));
  long long N = Ngp;
  for (const auto& e : c.nu) {
    pi.nu.push_back({e.rho, e.a, 1, e.x});
    N += 2LL * registry.at(e.rho).dim * e.a;
  }
  pi.group = GroupType::with_dual_dimension(GroupKind::SOodd, static_cast<int>(N));
  return pi;
}

inline GLCase make_case(std::string label, SelfDuality type, std::vector<GLNuEntry> nu,
                        std::vector<GLTemperedEntry> tempered, bool ok, const CuspidalRegistry& registry,
                        bool translate = true) {
  GLCase c;
  c.label = std::move(label);
  c.component = {type, std::move(nu), std::move(tempered)};
  c.expect_ok = ok;
  c.expect_unitary = ok;
  if (translate) {
    c.translated = type == SelfDuality::Orthogonal ? orth_translation(c.component, registry)
                                                   : sympl_translation(c.component, registry);
  }
  return c;
}

// Worked low-rank cases. `expect_ok == false` marks the shapes the parity
// constraint rules out; the doubled variants must pass.
inline std::vector<GLCase> gl_fixture_table(const CuspidalRegistry& r) {
  const auto O = SelfDuality::Orthogonal;
  const auto S = SelfDuality::Symplectic;
  const Rational x = quarter();
  const Rational y = Rational(1, 3);
  std::vector<GLCase> t;
  // GL_2
  t.push_back(make_case("GL2 (iii) orthogonal", O, {{"chi", 1, x}}, {}, false, r));
  t.push_back(make_case("GL2 (iii) orthogonal doubled", O, {{"chi", 1, x}, {"chi", 1, x}}, {}, true, r));
  t.push_back(make_case("GL2 (iii) symplectic", S, {{"chi", 1, x}}, {}, true, r));
  // GL_3
  t.push_back(make_case("GL3 (vi)", O, {{"chi", 1, x}}, {{"1", 1}}, false, r));
  t.push_back(make_case("GL3 (vi) doubled", O, {{"chi", 1, x}, {"chi", 1, x}}, {{"1", 1}}, true, r));
  // GL_4, orthogonal type
  t.push_back(make_case("GL4 (i) rho orthogonal", O, {{"rho_o", 1, x}}, {}, false, r));
  t.push_back(make_case("GL4 (i) rho orthogonal doubled", O, {{"rho_o", 1, x}, {"rho_o", 1, x}}, {}, true, r));
  t.push_back(make_case("GL4 (i) rho symplectic", O, {{"rho_s", 1, x}}, {}, true, r));
  t.push_back(make_case("GL4 (ii) orthogonal", O, {{"chi", 2, x}}, {}, true, r));
  t.push_back(make_case("GL4 (iii) chi quadratic", O, {{"chi", 1, x}}, {{"rho_o", 1}}, false, r));
  t.push_back(make_case("GL4 (iii) chi quadratic doubled", O, {{"chi", 1, x}, {"chi", 1, x}}, {{"rho_o", 1}}, true,
                        r));
  t.push_back(make_case("GL4 (iv)", O, {{"chi", 1, x}}, {{"chi2", 2}}, false, r, false));
  t.push_back(make_case("GL4 (v) chi1 apart", O, {{"chi", 1, x}}, {{"1", 1}, {"1", 1}}, false, r));
  t.push_back(make_case("GL4 (v) chi1 apart doubled", O, {{"chi", 1, x}, {"chi", 1, x}}, {{"1", 1}, {"1", 1}},
                        true, r));
  t.push_back(make_case("GL4 (v) chi1 = chi2", O, {{"chi", 1, x}}, {{"chi", 1}, {"1", 1}}, true, r));
  t.push_back(make_case("GL4 (vi) distinct quadratic", O, {{"chi", 1, x}, {"chi2", 1, y}}, {}, false, r));
  t.push_back(make_case("GL4 (vi) chi1 = chi2", O, {{"chi", 1, x}, {"chi", 1, y}}, {}, true, r));
  // GL_4, symplectic type
  t.push_back(make_case("GL4 (i) symplectic, rho symplectic", S, {{"rho_s", 1, x}}, {}, false, r));
  t.push_back(make_case("GL4 (i) symplectic, rho symplectic doubled", S, {{"rho_s", 1, x}, {"rho_s", 1, x}}, {},
                        true, r));
  t.push_back(make_case("GL4 (i) symplectic, rho orthogonal", S, {{"rho_o", 1, x}}, {}, true, r));
  t.push_back(make_case("GL4 (ii) symplectic", S, {{"chi", 2, x}}, {}, false, r));
  t.push_back(make_case("GL4 (ii) symplectic doubled", S, {{"chi", 2, x}, {"chi", 2, x}}, {}, true, r));
  return t;
}

}  // namespace arthur::testing
