#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "nsum/literal.hpp"

using namespace nsum;

TEST_CASE("group literals") {
  CHECK(format_group(parse_group("Z8")) == "Z8");
  CHECK(format_group(parse_group("z4xz2")) == "Z2xZ4");
  CHECK(format_group(parse_group("Z2xZ2xZ2")) == "Z2xZ2xZ2");
  CHECK(format_group(parse_group("Z6xZ4")) == "Z2xZ12");
  CHECK(format_group(parse_group("Z1")) == "Z1");
  CHECK(parse_group("Z1").trivial());

  CHECK_THROWS_AS(parse_group("Z0"), ParseError);
  CHECK_THROWS_AS(parse_group("Z1xZ5"), ParseError);
  CHECK_THROWS_AS(parse_group("Q5"), ParseError);
  CHECK_THROWS_AS(parse_group("Z8 extra"), ParseError);
  CHECK_THROWS_AS(parse_group("Z99999"), ParseError);
}

TEST_CASE("sequence literals over cyclic groups") {
  auto S = parse_sequence("Z5: 1^4 2^2");
  CHECK(S.multiplicity(1) == 4);
  CHECK(S.multiplicity(2) == 2);
  CHECK(format_sequence(S) == "Z5: 1^4 2^2");
  CHECK(parse_sequence(format_sequence(S)) == S);

  CHECK(parse_sequence("Z5:").empty());
  CHECK(format_sequence(parse_sequence("Z5:")) == "Z5:");
  CHECK(parse_sequence("Z5: 1 1 1") == parse_sequence("Z5: 1^3"));
  CHECK(format_sequence(parse_sequence("Z5: 3")) == "Z5: 3");

  CHECK_THROWS_AS(parse_sequence("Z5: 7"), ParseError);
  CHECK_THROWS_AS(parse_sequence("Z5: 1^0"), ParseError);
  CHECK_THROWS_AS(parse_sequence("Z5 1"), ParseError);
  CHECK_THROWS_AS(parse_sequence("Z5: x"), ParseError);

  try {
    parse_sequence("Z5: 1^4 7");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 8);
  }
}

TEST_CASE("sequence literals over non-cyclic presentations") {
  auto S = parse_sequence("Z4xZ2: (1,0)^3 (0,1)^2");
  CHECK(format_group(S.group()) == "Z2xZ4");
  CHECK(S.length() == 5);
  // The Z4 generator maps to an order-4 canonical element, the Z2 generator
  // to an order-2 one not in its span.
  const auto& g = S.group();
  int quad = -1, invol = -1;
  for (int c = 0; c < g.order(); ++c) {
    if (S.multiplicity(c) == 3) quad = c;
    if (S.multiplicity(c) == 2) invol = c;
  }
  REQUIRE(quad >= 0);
  REQUIRE(invol >= 0);
  CHECK(g.element_order(quad) == 4);
  CHECK(g.element_order(invol) == 2);
  CHECK(g.scalar_mul(2, quad) != invol);

  CHECK(parse_sequence(format_sequence(S)) == S);

  CHECK_THROWS_AS(parse_sequence("Z4xZ2: (4,0)"), ParseError);
  CHECK_THROWS_AS(parse_sequence("Z4xZ2: (1)"), ParseError);
  CHECK_THROWS_AS(parse_sequence("Z4xZ2: 1"), ParseError);
}

TEST_CASE("presentation mapping is an isomorphism") {
  for (const char* text : {"Z4xZ2", "Z6xZ4", "Z2xZ2xZ3", "Z12xZ10"}) {
    auto pres = GroupPresentation::parse(text);
    const auto& given = pres.given_factors();
    int order = 1;
    for (int d : given) order *= d;
    REQUIRE(order == pres.group().order());

    std::vector<int> coords(given.size(), 0);
    std::set<int> images;
    std::map<std::vector<int>, int> image_of;
    while (true) {
      int img = pres.map_coords(coords);
      CHECK(images.insert(img).second);  // injective
      image_of[coords] = img;
      std::size_t i = 0;
      while (i < given.size() && ++coords[i] == given[i]) {
        coords[i] = 0;
        ++i;
      }
      if (i == given.size()) break;
    }
    CHECK(static_cast<int>(images.size()) == order);

    // Additivity on a sample of coordinate pairs.
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 50; ++iter) {
      std::vector<int> a(given.size()), b(given.size()), s(given.size());
      for (std::size_t i = 0; i < given.size(); ++i) {
        a[i] = static_cast<int>(rng() % given[i]);
        b[i] = static_cast<int>(rng() % given[i]);
        s[i] = (a[i] + b[i]) % given[i];
      }
      CHECK(pres.group().add(image_of[a], image_of[b]) == image_of[s]);
    }
  }
}

TEST_CASE("trivial-group literals") {
  auto S = parse_sequence("Z1: 0^4");
  CHECK(S.length() == 4);
  CHECK(format_sequence(S) == "Z1: 0^4");
  CHECK_THROWS_AS(parse_sequence("Z1: 1"), ParseError);
}

TEST_CASE("set literals") {
  auto pres = GroupPresentation::parse("Z6");
  auto A = parse_subset(pres, "{0, 1, 2}");
  CHECK(A == GroupSubset::of(pres.group(), {0, 1, 2}));
  CHECK(format_subset(A) == "{0,1,2}");
  CHECK(parse_subset(pres, "{}").empty());

  auto pres2 = GroupPresentation::parse("Z2xZ2");
  auto B = parse_subset(pres2, "{(1,0),(0,1)}");
  CHECK(B.size() == 2);
  CHECK(format_subset(B) == "{(1,0),(0,1)}");

  CHECK_THROWS_AS(parse_subset(pres, "{1,2"), ParseError);
  CHECK_THROWS_AS(parse_subset(pres, "1,2}"), ParseError);
  CHECK_THROWS_AS(parse_subset(pres, "{9}"), ParseError);
}

TEST_CASE("random sequence literal round-trips (orders <= 12)") {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 300; ++iter) {
    int order = 1 + static_cast<int>(rng() % 12);
    auto groups = groups_of_order(order);
    const auto& g = groups[rng() % groups.size()];
    std::vector<int> mult(g.order());
    for (int c = 0; c < g.order(); ++c) mult[c] = static_cast<int>(rng() % 4);
    auto S = Sequence::from_multiplicities(g, mult);
    CHECK(parse_sequence(format_sequence(S)) == S);
  }
}
