#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "strata/error.hpp"
#include "strata/surface.hpp"

namespace strata {
namespace {

using testing::load;

HalfTranslationSurface octagon() { return load("octagon_h2.json"); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no strata::Error thrown";
  return ErrorCode::kIo;
}

TEST(ParseSurface, SquareTorus) {
  const auto s = load("square_torus.json");
  EXPECT_EQ(s.num_polygons(), 1);
  EXPECT_EQ(s.num_pairings(), 2);
  EXPECT_TRUE(validate(s).empty());
}

TEST(ParseSurface, SelfPairedEdge) {
  const std::string doc = R"({"polygons": [[[1,0],[0,1],[-1,0],[0,-1]]],
    "pairings": [{"a": [0,0], "b": [0,0], "sign": 1}, {"a": [0,1], "b": [0,3], "sign": 1}]})";
  EXPECT_EQ(code_of([&] { parse_surface(doc); }), ErrorCode::kSelfPaired);
}

TEST(ParseSurface, DanglingReference) {
  const std::string doc = R"({"polygons": [[[1,0],[0,1],[-1,0],[0,-1]]],
    "pairings": [{"a": [0,0], "b": [0,2], "sign": 1}, {"a": [0,1], "b": [1,3], "sign": 1}]})";
  EXPECT_EQ(code_of([&] { parse_surface(doc); }), ErrorCode::kDanglingReference);
}

TEST(ParseSurface, UnpairedSlotIsMalformed) {
  const std::string doc = R"({"polygons": [[[1,0],[0,1],[-1,0],[0,-1]]],
    "pairings": [{"a": [0,0], "b": [0,2], "sign": 1}]})";
  EXPECT_EQ(code_of([&] { parse_surface(doc); }), ErrorCode::kMalformedDocument);
}

TEST(ParseSurface, RejectsUnknownFieldsAndBadSigns) {
  EXPECT_EQ(code_of([] { parse_surface(std::string(R"({"polygons": [], "pairings": [], "x": 1})")); }),
            ErrorCode::kMalformedDocument);
  const std::string doc = R"({"polygons": [[[1,0],[0,1],[-1,0],[0,-1]]],
    "pairings": [{"a": [0,0], "b": [0,2], "sign": 2}, {"a": [0,1], "b": [0,3], "sign": 1}]})";
  EXPECT_EQ(code_of([&] { parse_surface(doc); }), ErrorCode::kMalformedDocument);
  EXPECT_EQ(code_of([] { parse_surface(std::string("not json")); }),
            ErrorCode::kMalformedDocument);
}

TEST(Validate, FlippedSignIsGluingMismatch) {
  const auto v = validate(load("bad_gluing.json"));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::kGluingMismatch);
}

TEST(Validate, PerturbedOctagonDoesNotClose) {
  const auto s = octagon();
  auto polys = s.polygons();
  polys[0][3] += Vec2(1e-3, 0.0);
  const auto v = validate(HalfTranslationSurface(polys, s.pairings()));
  ASSERT_FALSE(v.empty());
  EXPECT_TRUE(std::any_of(v.begin(), v.end(),
                          [](const Violation& x) { return x.kind == ViolationKind::kNotClosed; }));
}

TEST(Validate, OrientationAndZeroEdges) {
  std::vector<std::vector<Vec2>> cw = {{{0, 1}, {1, 0}, {0, -1}, {-1, 0}}};
  const std::vector<Pairing> prs = {{{0, 0}, {0, 2}, 1}, {{0, 1}, {0, 3}, 1}};
  auto v = validate(HalfTranslationSurface(cw, prs));
  EXPECT_TRUE(std::any_of(v.begin(), v.end(), [](const Violation& x) {
    return x.kind == ViolationKind::kNegativeOrientation;
  }));
  std::vector<std::vector<Vec2>> zero = {{{1, 0}, {0, 0}, {0, 1}, {-1, 0}, {0, -1}, {0, 0}}};
  const std::vector<Pairing> prs2 = {{{0, 0}, {0, 3}, 1}, {{0, 2}, {0, 4}, 1}, {{0, 1}, {0, 5}, 1}};
  v = validate(HalfTranslationSurface(zero, prs2));
  EXPECT_TRUE(std::any_of(v.begin(), v.end(),
                          [](const Violation& x) { return x.kind == ViolationKind::kZeroEdge; }));
}

TEST(Validate, SelfIntersectingChainIsNotSimple) {
  // Closed, positively oriented on balance, but the boundary crosses itself.
  std::vector<std::vector<Vec2>> bow = {{{2, 0}, {-1, 1}, {0, -2}, {-1, 1}}};
  const std::vector<Pairing> prs = {{{0, 0}, {0, 2}, 1}, {{0, 1}, {0, 3}, -1}};
  const auto v = validate(HalfTranslationSurface(bow, prs));
  EXPECT_TRUE(std::any_of(v.begin(), v.end(),
                          [](const Violation& x) { return x.kind == ViolationKind::kNotSimple; }));
}

TEST(VertexCycles, SquareTorus) {
  const auto cycles = vertex_cycles(load("square_torus.json"));
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_NEAR(cycles[0].total_angle, 2 * std::numbers::pi, 1e-12);
  EXPECT_EQ(cycles[0].corners.size(), 4u);
}

TEST(VertexCycles, OctagonHasOneSixPiVertex) {
  const auto cycles = vertex_cycles(octagon());
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_NEAR(cycles[0].total_angle, 6 * std::numbers::pi, 1e-12);
  EXPECT_EQ(cycles[0].quadratic_order(), 4);
}

TEST(VertexCycles, TwoSquareTorusHasTwoRegularVertices) {
  const auto cycles = vertex_cycles(load("two_square_torus.json"));
  ASSERT_EQ(cycles.size(), 2u);
  for (const auto& c : cycles) EXPECT_EQ(c.angle_multiple, 2);
}

TEST(Stratum, SquareTorusAndOctagon) {
  const Stratum t = stratum(load("square_torus.json"));
  EXPECT_EQ(t.genus, 1);
  EXPECT_TRUE(t.orders.empty());
  EXPECT_EQ(to_string(t), "Q_1()");
  const Stratum o = stratum(octagon());
  EXPECT_EQ(o.genus, 2);
  EXPECT_EQ(o.orders, std::vector<int>{4});
  EXPECT_EQ(to_string(o), "Q_2(4)");
}

TEST(Stratum, PolesAreUnsupported) {
  EXPECT_EQ(code_of([] { stratum(load("pillowcase.json")); }), ErrorCode::kUnsupportedStratum);
  // vertex data itself is still available
  EXPECT_EQ(vertex_orders(load("pillowcase.json")), (std::vector<int>{-1, -1, -1, -1}));
}

TEST(Stratum, DisconnectedSurfaceHasNoGenus) {
  const auto t = load("square_torus.json");
  auto polys = t.polygons();
  polys.push_back(polys[0]);
  auto prs = t.pairings();
  prs.push_back({{1, 0}, {1, 2}, 1});
  prs.push_back({{1, 1}, {1, 3}, 1});
  const HalfTranslationSurface two(polys, prs);
  EXPECT_FALSE(is_connected(two));
  EXPECT_EQ(code_of([&] { genus(two); }), ErrorCode::kDisconnected);
}

TEST(Translation, AbelianOrders) {
  EXPECT_TRUE(is_translation(load("square_torus.json")));
  EXPECT_TRUE(is_translation(octagon()));
  EXPECT_EQ(abelian_stratum(octagon()).orders, std::vector<int>{2});
  EXPECT_FALSE(is_translation(load("hexagons_q2_2_2.json")));
  EXPECT_EQ(code_of([] { abelian_stratum(load("hexagons_q2_2_2.json")); }),
            ErrorCode::kInvalidArgument);
}

class FixtureProperties : public ::testing::TestWithParam<std::string> {};

TEST_P(FixtureProperties, GaussBonnet) {
  const auto s = load(GetParam());
  ASSERT_TRUE(validate(s).empty());
  const Stratum st = stratum(s);
  int sum = 0;
  for (int k : st.orders) sum += k;
  EXPECT_EQ(sum, 4 * st.genus - 4);
}

TEST_P(FixtureProperties, EulerCharacteristicMatchesOracle) {
  const auto s = load(GetParam());
  const int v = testing::count_vertices(s);
  const int chi = v - s.num_pairings() + s.num_polygons();
  EXPECT_EQ(euler_characteristic(s), chi);
  EXPECT_EQ(static_cast<int>(vertex_cycles(s).size()), v);
  EXPECT_GE(2 - chi, 0);
  EXPECT_EQ((2 - chi) % 2, 0);
}

TEST_P(FixtureProperties, CornersArePartitioned) {
  const auto s = load(GetParam());
  std::set<Corner> seen;
  std::size_t total = 0;
  for (const auto& v : vertex_cycles(s)) {
    total += v.corners.size();
    seen.insert(v.corners.begin(), v.corners.end());
  }
  EXPECT_EQ(total, static_cast<std::size_t>(s.num_slots()));
  EXPECT_EQ(seen.size(), total);
}

TEST_P(FixtureProperties, RoundTrip) {
  const auto s = load(GetParam());
  const auto back = parse_surface(serialize(s));
  EXPECT_TRUE(validate(back).empty());
  EXPECT_EQ(serialize(back), serialize(s));
  EXPECT_EQ(back.polygons(), s.polygons());
}

INSTANTIATE_TEST_SUITE_P(Holomorphic, FixtureProperties,
                         ::testing::ValuesIn(testing::holomorphic_fixtures()),
                         [](const auto& info) {
                           std::string n = info.param;
                           return n.substr(0, n.find('.'));
                         });

TEST(Translation, AbelianOrdersSum) {
  for (const char* name : {"square_torus.json", "two_square_torus.json", "octagon_h2.json",
                           "hexagons_h1_1.json", "octagons_h2_2.json"}) {
    const auto s = load(name);
    ASSERT_TRUE(is_translation(s)) << name;
    const Stratum a = abelian_stratum(s);
    int sum = 0;
    for (int l : a.orders) sum += l;
    EXPECT_EQ(sum, 2 * a.genus - 2) << name;
  }
}

TEST(Serialize, FieldOrder) {
  const std::string text = serialize(load("square_torus.json"));
  EXPECT_LT(text.find("polygons"), text.find("pairings"));
  EXPECT_LT(text.find("\"a\""), text.find("\"b\""));
  EXPECT_LT(text.find("\"b\""), text.find("\"sign\""));
}

}  // namespace
}  // namespace strata
