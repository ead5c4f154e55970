#include "vogel/core/identify.hpp"
#include "vogel/core/lines.hpp"
#include "vogel/core/vogel_point.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace vogel;

namespace {

VogelPoint pt(Rational a, Rational b, Rational c) { return VogelPoint(a, b, c); }

const VogelPoint kG2 = pt(-2, Rational(10, 3), Rational(8, 3));

// Random projective-permutation image of p.
VogelPoint scramble(const VogelPoint& p, std::mt19937_64& rng) {
  std::array<int, 3> order = {0, 1, 2};
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  int n = 0;
  while (n == 0) n = num(rng);
  return p.permuted(order).scaled(Rational(n, den(rng)));
}

}  // namespace

TEST(Canonical, Examples) {
  EXPECT_EQ(canonicalize(pt(-2, 4, 4)), canonicalize(pt(-2, -2, 1)));
  const CanonicalPoint y1 = canonicalize(pt(1, 1, 1));
  EXPECT_EQ(y1, canonicalize(pt(-3, -3, -3)));
  EXPECT_EQ(y1.to_string(), "-1,-1,-1");
  EXPECT_EQ(canonicalize(kG2), canonicalize(pt(-3, 5, 4)));
}

TEST(Canonical, PrimitiveAndMinimal) {
  const CanonicalPoint c = canonicalize(pt(6, -10, 4));
  EXPECT_EQ(gcd_of(gcd_of(c.a, c.b), c.c), 1);
  // Every variant of the primitive triple is lexicographically >= c.
  const IntTriple v = {3, -5, 2};
  for (int sign : {1, -1}) {
    std::array<int, 3> order = {0, 1, 2};
    do {
      const IntTriple w = {v[order[0]] * sign, v[order[1]] * sign, v[order[2]] * sign};
      EXPECT_LE(c.as_array(), w);
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST(Canonical, AllZeroRejected) { EXPECT_THROW(pt(0, 0, 0), AllZero); }

TEST(Dimension, Examples) {
  EXPECT_EQ(dimension(pt(-2, 2, 5)), 24);
  EXPECT_EQ(dimension(pt(1, 1, 1)), -125);
  EXPECT_EQ(dimension(pt(1, 2, -3)), 1);
  EXPECT_EQ(dimension(pt(-6, -10, 1)), 248);
  EXPECT_THROW(dimension(pt(0, 1, 2)), ZeroParameter);
}

TEST(Dimension, ClassicalFamilies) {
  for (std::int64_t n = 2; n <= 30; ++n) {
    EXPECT_EQ(dimension(su_point(n)), n * n - 1) << n;
  }
  for (std::int64_t n = 3; n <= 30; ++n) {
    if (n == 4) continue;  // (-2,4,0): zero parameter
    EXPECT_EQ(dimension(so_point(n)), n * (n - 1) / 2) << n;
  }
  for (std::int64_t r = 1; r <= 15; ++r) {
    EXPECT_EQ(dimension(sp_point(r)), r * (2 * r + 1)) << r;
    EXPECT_EQ(canonicalize(sp_point(r)), canonicalize(so_point(-2 * r)));
  }
}

TEST(Dimension, Exceptionals) {
  const std::map<AlgebraKind, int> expected = {{AlgebraKind::G2, 14},  {AlgebraKind::F4, 52},
                                               {AlgebraKind::E6, 78},  {AlgebraKind::E7, 133},
                                               {AlgebraKind::E8, 248}, {AlgebraKind::E7half, 190},
                                               {AlgebraKind::X1, 156}, {AlgebraKind::X2, 99}};
  for (const auto& e : exceptional_points()) EXPECT_EQ(dimension(e.point), expected.at(e.kind)) << e.name;
}

TEST(RMatrix, SUExamples) {
  const RMatrix r = r_matrix(su_point(4));
  EXPECT_EQ(r.row(Slot::Alpha), (std::array<Rational, 3>{-5, -3, -2}));
  // Printed form: -(N+1), 1-N, -N/2 along the alpha row.
  for (std::int64_t n = 2; n <= 12; ++n) {
    const RMatrix rn = r_matrix(su_point(n));
    EXPECT_EQ(rn.entries[0][0], -(n + 1));
    EXPECT_EQ(rn.entries[0][1], 1 - n);
    EXPECT_EQ(rn.entries[0][2], Rational(-n, 2));
  }
}

TEST(RMatrix, G2Rows) {
  const RMatrix r = r_matrix(kG2);
  EXPECT_EQ(r.row(Slot::Beta), (std::array<Rational, 3>{3, Rational(7, 5), Rational(8, 5)}));
  EXPECT_EQ(r.row(Slot::Gamma), (std::array<Rational, 3>{Rational(15, 4), Rational(7, 4), 2}));
}

TEST(RMatrix, EveryRowHasAnIntegerAtAlgebraPoints) {
  std::vector<VogelPoint> points;
  for (std::int64_t n = 2; n <= 20; ++n) points.push_back(su_point(n));
  for (std::int64_t n = 5; n <= 20; ++n) points.push_back(so_point(n));
  for (std::int64_t r = 1; r <= 10; ++r) points.push_back(sp_point(r));
  for (const auto& e : exceptional_points()) {
    if (e.kind != AlgebraKind::E7half && e.kind != AlgebraKind::X1 && e.kind != AlgebraKind::X2) {
      points.push_back(e.point);
    }
  }
  for (const auto& p : points) {
    const RMatrix r = r_matrix(p);
    for (Slot s : {Slot::Alpha, Slot::Beta, Slot::Gamma}) EXPECT_TRUE(r.row_has_integer(s)) << p.to_string();
  }
}

TEST(Lines, Examples) {
  EXPECT_TRUE(line_membership(pt(-1, 5, 8)).count(LineId::Exc));
  EXPECT_TRUE(line_membership(pt(1, -3, -5)).count(LineId::T));
  EXPECT_TRUE(line_membership(pt(1, 2, -3)).count(LineId::D));
  EXPECT_TRUE(line_membership(su_point(7)).count(LineId::SU));
  EXPECT_TRUE(line_membership(so_point(9)).count(LineId::SO));
  EXPECT_TRUE(line_membership(pt(4, -1, -1)).count(LineId::ZeroD));
  EXPECT_TRUE(line_membership(pt(-1, 3, -1)).count(LineId::ThreeD));
  EXPECT_TRUE(line_membership(pt(1, 1, 1)).empty());
}

TEST(Lines, FormatAndParse) {
  const std::set<LineId> s = {LineId::SO, LineId::D};
  EXPECT_EQ(format_lines(s), "SO;D");
  EXPECT_EQ(parse_lines("SO;D"), s);
  EXPECT_TRUE(parse_lines("").empty());
}

TEST(Y2, XPointValues) {
  const VogelPoint x2 = pt(1, -3, -5);
  EXPECT_EQ(dim_y2(x2, Slot::Alpha), 3927);
  const VogelPoint x1 = pt(1, -4, -7);
  EXPECT_EQ(dim_y2(x1, Slot::Alpha), 10166);
  // The beta/gamma slot values, read as an unordered pair.
  EXPECT_EQ(std::set<Rational>({dim_y2(x2, Slot::Beta), dim_y2(x2, Slot::Gamma)}), std::set<Rational>({77, 945}));
  EXPECT_EQ(std::set<Rational>({dim_y2(x1, Slot::Beta), dim_y2(x1, Slot::Gamma)}), std::set<Rational>({90, 1989}));
  EXPECT_EQ(dim_y2(pt(1, -5, -3), Slot::Beta), 77);
  EXPECT_EQ(dim_y2(pt(1, -7, -4), Slot::Beta), 90);
}

TEST(Y2, ExceptionalSymmetricSquares) {
  // Sym^2 g = 1 + Y2(alpha) + Y2(beta) + Y2(gamma); for E8 that is 1 + 3875 + 27000.
  const VogelPoint e8 = pt(-2, 12, 20);
  Rational sum = 1;
  for (Slot s : {Slot::Alpha, Slot::Beta, Slot::Gamma}) sum += dim_y2(e8, s);
  EXPECT_EQ(sum, 248 * 249 / 2);
}

TEST(Y2, DenominatorZero) {
  EXPECT_THROW(dim_y2(pt(1, 1, 2), Slot::Alpha), DenominatorZero);
  EXPECT_THROW(dim_y2(pt(0, 1, 2), Slot::Beta), DenominatorZero);
}

TEST(Identify, Examples) {
  EXPECT_EQ(identify(pt(-2, -2, 1)).to_string(), "SO(8)");
  EXPECT_EQ(identify(pt(-8, 1, -5)).to_string(), "E7half");
  EXPECT_EQ(identify(pt(1, 1, 1)).to_string(), "Y1");
  EXPECT_EQ(identify(pt(2, -1, -1)).to_string(), "SO(2)");
  EXPECT_EQ(identify(pt(1, 2, -3)).to_string(), "D21lambda");
  EXPECT_EQ(identify(su_point(5)).to_string(), "SU(5)");
  EXPECT_EQ(identify(sp_point(3)).to_string(), "SO(-6)");
  EXPECT_EQ(identify(kG2).to_string(), "G2");
  EXPECT_EQ(identify(pt(1, 1, 7)).kind, AlgebraKind::Unknown);
}

TEST(Semiplane, Split) {
  EXPECT_TRUE(is_physical(pt(-2, 12, 20)));
  EXPECT_TRUE(is_unphysical(pt(1, 1, 1)));
  EXPECT_TRUE(is_unphysical(pt(-1, -4, -7)));
  EXPECT_FALSE(is_physical(pt(0, 1, 2)));
  EXPECT_FALSE(is_unphysical(pt(0, 1, 2)));
}

TEST(Properties, InvariantUnderPermutationAndScaling) {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> coord(-12, 12);
  for (int i = 0; i < 300; ++i) {
    const int a = coord(rng), b = coord(rng), c = coord(rng);
    if (a == 0 || b == 0 || c == 0) continue;
    const VogelPoint p = pt(a, b, c);
    const VogelPoint q = scramble(p, rng);
    EXPECT_EQ(dimension(p), dimension(q));
    EXPECT_EQ(line_membership(p), line_membership(q));
    EXPECT_EQ(canonicalize(p), canonicalize(q));
    EXPECT_EQ(identify(p), identify(q));
    EXPECT_EQ(is_physical(p), is_physical(q));
  }
}

TEST(Properties, IdentifyIsFunctionOfCanonicalForm) {
  std::mt19937_64 rng(23);
  for (const auto& e : exceptional_points()) {
    for (int i = 0; i < 10; ++i) EXPECT_EQ(identify(scramble(e.point, rng)).kind, e.kind);
  }
  for (std::int64_t n = 2; n < 12; ++n) {
    EXPECT_EQ(identify(scramble(su_point(n), rng)).to_string(), "SU(" + std::to_string(n) + ")");
  }
}
