#include "doctest.h"

#include "posetsat/embedding.hpp"
#include "posetsat/family.hpp"
#include "test_support.hpp"

using namespace posetsat;

TEST_CASE("find_induced_copy basics") {
  CHECK(find_induced_copy(catalog("chain", 2), catalog("diamond")).has_value());

  SetFamily cube2(2, {0b00, 0b01, 0b10, 0b11});
  CHECK(find_induced_copy(catalog("diamond"), family_order(cube2)).has_value());

  // The first 3 layers of any cube are butterfly-free.
  SetFamily low = first_layers_family(6, 3);
  CHECK_FALSE(find_induced_copy(catalog("butterfly"), family_order(low)).has_value());

  CHECK_THROWS_AS(find_induced_copy(catalog("butterfly"), family_order(low), 2),
                  BudgetExhaustedError);
}

TEST_CASE("find_induced_copy map realizes the pattern") {
  Poset pattern = catalog("fork");
  Poset host = family_order(first_layers_family(4, 3));
  auto map = find_induced_copy(pattern, host);
  REQUIRE(map.has_value());
  for (int i = 0; i < pattern.size(); ++i) {
    for (int j = 0; j < pattern.size(); ++j) {
      if (i != j) CHECK(pattern.less(i, j) == host.less((*map)[i], (*map)[j]));
    }
  }
}

TEST_CASE("construct_height_embedding worked examples") {
  Embedding chain = construct_height_embedding(catalog("chain", 3));
  CHECK(chain.images == std::vector<Mask>{0b00, 0b01, 0b011});

  Embedding butterfly = construct_height_embedding(catalog("butterfly"));
  CHECK(butterfly.images == std::vector<Mask>{0b0001, 0b0010, 0b0111, 0b1011});

  Embedding anti = construct_height_embedding(catalog("antichain", 3));
  CHECK(anti.images == std::vector<Mask>{0b001, 0b010, 0b100});
}

TEST_CASE("construct_height_embedding is always a small valid embedding") {
  auto population = testing::catalog_sample();
  for (const Poset& p : testing::random_sample(60, 7)) population.push_back(p);
  for (const Poset& p : population) {
    Embedding e = construct_height_embedding(p);
    CHECK(embedding_valid(p, e));
    for (Mask m : e.images) CHECK(popcount(m) <= p.size() - 1);
  }
}

TEST_CASE("cube_height exact values") {
  for (int k = 2; k <= 6; ++k) CHECK(cube_height(catalog("chain", k)) == k - 1);
  CHECK(cube_height(catalog("butterfly")) == 3);
  for (int m = 2; m <= 6; ++m) CHECK(cube_height(catalog("antichain", m)) == 1);
  CHECK(cube_height(catalog("chain", 1)) == 0);
}

TEST_CASE("cube_width exact values and witnesses") {
  for (int m = 2; m <= 6; ++m) {
    HeightWidthResult hw = cube_width(catalog("antichain", m));
    CHECK(hw.cube_height == 1);
    CHECK(hw.cube_width == m);
    CHECK(embedding_valid(catalog("antichain", m), hw.witness));
  }
  for (int k = 2; k <= 6; ++k) CHECK(cube_width(catalog("chain", k)).cube_width == k - 1);

  HeightWidthResult diamond = cube_width(catalog("diamond"));
  CHECK(diamond.cube_height == 2);
  CHECK(diamond.cube_width == 2);
  CHECK(diamond.witness.images == std::vector<Mask>{0b00, 0b01, 0b10, 0b11});
}

TEST_CASE("cube_width witness peaks at cube_height and is optimal") {
  for (const Poset& p : testing::catalog_sample()) {
    HeightWidthResult hw = cube_width(p);
    CHECK(embedding_valid(p, hw.witness));
    int max_size = 0;
    for (Mask m : hw.witness.images) max_size = std::max(max_size, popcount(m));
    if (p.size() > 1) CHECK(max_size == hw.cube_height);
    if (hw.cube_width > 0) {
      std::vector<Mask> smaller;
      LayerStream stream(hw.cube_width - 1, 0, std::min(hw.cube_height, hw.cube_width - 1));
      while (auto m = stream.next()) smaller.push_back(*m);
      CHECK_FALSE(search_in_masks(p, smaller).found());
    }
  }
}

TEST_CASE("check_separation examples") {
  SeparationCheck good = check_separation({2, {0b00, 0b01, 0b10, 0b11}});
  CHECK(good.separates);
  REQUIRE(good.witness[0].has_value());
  CHECK(*good.witness[0] == std::pair<int, int>{1, 0});

  SeparationCheck bad = check_separation({3, {0b001, 0b110}});
  CHECK_FALSE(bad.separates);
  CHECK(bad.unwitnessed == std::vector<int>{1, 2});
}

TEST_CASE("minimize_ground_set examples") {
  Embedding shrunk = minimize_ground_set({3, {0b001, 0b110}});
  CHECK(shrunk.ground == 2);
  CHECK(shrunk.images == std::vector<Mask>{0b01, 0b10});

  Embedding fixed = minimize_ground_set({2, {0b00, 0b01, 0b10, 0b11}});
  CHECK(fixed == Embedding{2, {0b00, 0b01, 0b10, 0b11}});

  Embedding c2 = minimize_ground_set({2, {0b00, 0b11}});
  CHECK(c2.ground == 1);
  CHECK(c2.images == std::vector<Mask>{0b0, 0b1});
}

TEST_CASE("minimize_ground_set output separates and never grows") {
  for (const Poset& p : testing::random_sample(40, 6)) {
    Embedding e = construct_height_embedding(p);
    Embedding m = minimize_ground_set(e);
    CHECK(m.ground <= e.ground);
    CHECK(check_separation(m).separates);
    CHECK(embedding_valid(p, m));
  }
}

TEST_CASE("separation_lower_bound") {
  CHECK(separation_lower_bound(2) == doctest::Approx(0.0));
  CHECK(separation_lower_bound(6) == doctest::Approx(4.0));
  CHECK(separation_lower_bound(11) == doctest::Approx(6.0));
  CHECK_THROWS_AS(separation_lower_bound(1), RangeError);
}

TEST_CASE("width_bound_ledger on known exact values") {
  BoundsReport butterfly = width_bound_ledger(catalog("butterfly"));
  CHECK(butterfly.h_star == 3);
  CHECK(butterfly.w_star == 4);
  for (const auto& e : butterfly.entries) CHECK(e.holds);
  CHECK(butterfly.conjecture_41.holds);

  BoundsReport c5 = width_bound_ledger(catalog("chain", 5));
  CHECK(c5.h_star == 4);
  CHECK(c5.w_star == 4);
  CHECK(c5.conjecture_41.holds);

  BoundsReport a4 = width_bound_ledger(catalog("antichain", 4));
  CHECK(a4.h_star == 1);
  CHECK(a4.w_star == 4);
  CHECK(a4.conjecture_41.lhs == a4.conjecture_41.rhs);
}

TEST_CASE("stacked2 needs exactly 2t unrestricted cube dimensions") {
  for (int t = 1; t <= 2; ++t) {
    CHECK(testing::min_embedding_dimension(catalog("stacked2", t), 2 * t) == 2 * t);
  }
}
