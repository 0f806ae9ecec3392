#include <gtest/gtest.h>

#include <set>

#include "arthur/error.hpp"
#include "arthur/halfint.hpp"
#include "arthur/segments.hpp"

using namespace arthur;

namespace {

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Internal;
}

const VExtZSeg e1{1, 0, 0, 1}, e2{1, 0, 1, 1}, e3{1, 0, 0, -1};

}  // namespace

TEST(HalfInt, ParsesAndPrints) {
  EXPECT_EQ(HalfInt::parse("3").twice(), 6);
  EXPECT_EQ(HalfInt::parse("-1/2").twice(), -1);
  EXPECT_EQ(HalfInt::parse("5/2").to_string(), "5/2");
  EXPECT_EQ(HalfInt::parse("4/2").to_string(), "2");
  EXPECT_EQ(HalfInt(-3).to_string(), "-3");
}

TEST(HalfInt, RejectsMalformedText) {
  for (const char* bad : {"", "1/3", "a", "1/", "/2", "1.5", "1/2/2", "--1"}) {
    EXPECT_EQ(kind_of([&] { HalfInt::parse(bad); }), ErrorKind::ParseError) << bad;
  }
}

TEST(HalfInt, FloorAndArithmetic) {
  EXPECT_EQ(HalfInt::from_twice(-1).floor(), -1);
  EXPECT_EQ(HalfInt::from_twice(1).floor(), 0);
  EXPECT_EQ(HalfInt::from_twice(-4).floor(), -2);
  EXPECT_EQ(HalfInt::from_twice(3) + HalfInt::from_twice(1), HalfInt(2));
  EXPECT_LT(HalfInt::from_twice(-1), HalfInt(0));
  EXPECT_TRUE(HalfInt(4).is_integral());
  EXPECT_FALSE(HalfInt::from_twice(3).is_integral());
}

TEST(Rational, NormalizesAndCompares) {
  EXPECT_EQ(Rational(2, 8), Rational(1, 4));
  EXPECT_EQ(Rational(1, -3), Rational(-1, 3));
  EXPECT_LT(Rational(1, 4), Rational(1, 3));
  EXPECT_EQ(Rational::parse("3/12").to_string(), "1/4");
  EXPECT_EQ(Rational::parse("2").to_string(), "2");
  EXPECT_EQ(kind_of([] { Rational(1, 0); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { Rational::parse("1/0"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { Rational::parse("x"); }), ErrorKind::ParseError);
}

TEST(ZSegment, MakeValidates) {
  EXPECT_EQ(ZSegment::make(2, 0).length(), 3);
  EXPECT_EQ(kind_of([] { ZSegment::make(0, 1); }), ErrorKind::InvalidInput);
  EXPECT_TRUE(ZSegment::make(3, 0).contains(ZSegment::make(2, 1)));
  EXPECT_FALSE(admissible({2, 1}, {1, 0}));
  EXPECT_TRUE(admissible({1, 0}, {2, 1}));
}

TEST(VExtZSeg, CanonicalizesSignFreeValues) {
  EXPECT_EQ(VExtZSeg(1, 0, 1, -1), VExtZSeg(1, 0, 1, 1));
  EXPECT_TRUE(VExtZSeg(1, 0, 1, 1).sign_free());
  EXPECT_EQ(VExtZSeg(1, 0, 1, 1).lifts().size(), 2u);
  EXPECT_EQ(VExtZSeg(2, 0, 1, 1).lifts().size(), 1u);
  EXPECT_EQ(kind_of([] { VExtZSeg(1, 0, 2, 1); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { VExtZSeg(1, 0, 0, 0); }), ErrorKind::InvalidInput);
  EXPECT_FALSE(VExtZSeg(1, 0, -1, 1).is_real());
}

TEST(EnumerateEseg, Examples) {
  EXPECT_EQ(enumerate_eseg({1, 0}), (std::vector<VExtZSeg>{e1, e2, e3}));
  EXPECT_EQ(enumerate_eseg({0, 0}), (std::vector<VExtZSeg>{{0, 0, 0, 1}, {0, 0, 0, -1}}));
  EXPECT_EQ(enumerate_eseg({2, 0}),
            (std::vector<VExtZSeg>{{2, 0, 0, 1}, {2, 0, 1, 1}, {2, 0, 1, -1}, {2, 0, 0, -1}}));
}

TEST(IsAdjacent, Examples) {
  EXPECT_TRUE(is_adjacent({1, 0, 0, -1}, {1, 0, 1, 1}));
  EXPECT_FALSE(is_adjacent({1, 0, 0, -1}, {1, 0, 0, 1}));
  EXPECT_TRUE(is_adjacent({2, 0, 1, 1}, {2, 0, 1, -1}));
  EXPECT_FALSE(is_adjacent({2, 0, 1, 1}, {3, 0, 1, 1}));
}

TEST(IsInterval, Examples) {
  EXPECT_FALSE(is_interval(std::vector<VExtZSeg>{e1, e3}));
  EXPECT_TRUE(is_interval(std::vector<VExtZSeg>{}));
  EXPECT_TRUE(is_interval(std::vector<VExtZSeg>{e1, e2, e3}));
  EXPECT_TRUE(is_interval(std::vector<VExtZSeg>{e3, e1, e2}));
  EXPECT_FALSE(is_interval(std::vector<VExtZSeg>{e1, {2, 0, 0, 1}}));
  EXPECT_FALSE(is_interval(std::vector<VExtZSeg>{e1, e1}));
}

TEST(EsegInterval, ValidatesMembers) {
  EXPECT_EQ(kind_of([] { EsegInterval({1, 0}, {e1, e3}); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { EsegInterval({1, 0}, {VExtZSeg(0, 0, 0, 1)}); }), ErrorKind::InvalidInput);
  EsegInterval s({1, 0}, {e2, e1});
  EXPECT_EQ(s.members(), (std::vector<VExtZSeg>{e1, e2}));
  EXPECT_TRUE(s.contains(e2));
  EXPECT_FALSE(s.contains(e3));
  EXPECT_EQ(EsegInterval::from_positions({1, 0}, -3, 5).size(), 3u);
  EXPECT_TRUE(EsegInterval::from_positions({1, 0}, 2, 1).empty());
}

TEST(AdjacentIntervals, WorkedExample) {
  auto members = [](const std::vector<EsegInterval>& v) {
    std::set<std::vector<VExtZSeg>> out;
    for (const auto& s : v) out.insert(s.members());
    return out;
  };
  using S = std::set<std::vector<VExtZSeg>>;
  EXPECT_EQ(members(adjacent_intervals(EsegInterval({1, 0}, {e1}))), (S{{}, {e2}, {e1, e2}}));
  EXPECT_EQ(members(adjacent_intervals(EsegInterval({1, 0}, {e1, e2, e3}))), (S{{e1, e2, e3}, {e1, e2}, {e2, e3}}));
  EXPECT_EQ(members(adjacent_intervals(EsegInterval({1, 0}))), (S{{}, {e1}, {e3}}));
}

TEST(Dagger, Examples) {
  EXPECT_EQ(dagger({1, 0, 0, 1}), VExtZSeg(1, 0, 0, -1));
  EXPECT_EQ(dagger({2, 0, 1, 1}), VExtZSeg(2, 0, 1, 1));
  EXPECT_EQ(dagger({1, 0, 1, 1}), VExtZSeg(1, 0, 1, 1));
}

TEST(Shift, Examples) {
  EXPECT_EQ(shift(VExtZSeg(1, 0, 0, 1), 2), VExtZSeg(3, 2, 0, 1));
  EXPECT_EQ(shift(VExtZSeg(0, 0, 0, -1), -1), VExtZSeg(-1, -1, 0, -1));
  EXPECT_EQ(shift(VExtZSeg(1, 0, 1, 1), 0), VExtZSeg(1, 0, 1, 1));
}

TEST(SegmentProperties, EsegSizeAndChain) {
  for (int A = -2; A <= 4; ++A)
    for (int B = A - 5; B <= A; ++B) {
      ZSegment d{A, B};
      auto E = enumerate_eseg(d);
      ASSERT_EQ(static_cast<int>(E.size()), A - B + 2);
      for (std::size_t i = 0; i + 1 < E.size(); ++i) EXPECT_TRUE(is_adjacent(E[i], E[i + 1]));
      for (const auto& x : E) {
        EXPECT_EQ(dagger(dagger(x)), x);
        EXPECT_FALSE(is_adjacent(x, x));
        for (const auto& y : E) EXPECT_EQ(is_adjacent(x, y), is_adjacent(y, x));
      }
    }
}

TEST(SegmentProperties, IntervalLatticeUpToLengthFive) {
  for (int len = 1; len <= 5; ++len) {
    ZSegment d{len - 1, 0};
    auto E = enumerate_eseg(d);
    std::vector<std::vector<VExtZSeg>> intervals;
    for (unsigned mask = 0; mask < (1u << E.size()); ++mask) {
      std::vector<VExtZSeg> sub;
      for (std::size_t k = 0; k < E.size(); ++k)
        if (mask & (1u << k)) sub.push_back(E[k]);
      if (is_interval(sub)) intervals.push_back(sub);
    }
    for (const auto& s : intervals) {
      EXPECT_LE(adjacent_intervals(EsegInterval(d, s)).size(), 3u);
      for (const auto& t : intervals) {
        std::vector<VExtZSeg> both;
        for (const auto& x : s)
          if (std::find(t.begin(), t.end(), x) != t.end()) both.push_back(x);
        EXPECT_TRUE(is_interval(both));
      }
    }
  }
}
