#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "nearring/maps.hpp"
#include "nearring/pgroup.hpp"
#include "nearring/table_io.hpp"
#include "oracles.hpp"

using namespace nearring;
using oracle::distributive_mul;

namespace {

MapTriple random_maps(const GroupParams& g, std::mt19937_64& rng) {
  const auto n = g.order();
  std::vector<Residue> al(n), be(n), ga(n);
  for (std::size_t k = 0; k < n; ++k) {
    al[k] = static_cast<Residue>(rng() % g.mod1());
    be[k] = static_cast<Residue>(rng() % g.mod2());
    ga[k] = static_cast<Residue>(rng() % g.mod3());
  }
  return MapTriple(g, al, be, ga);
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST(Maps, CanonicalRows) {
  auto g = make_params(3, 1, 1, 1);
  auto maps = canonical_maps(g);
  EXPECT_EQ(maps.row(rank(g, {2, 1, 0})), (Element{0, 2, 0}));
  EXPECT_EQ(maps.row(rank(g, kZero)), kZero);
  EXPECT_EQ(maps.row(rank(g, kGenA)), kGenB);
  EXPECT_FALSE(maps.forced_row_violation().has_value());
  EXPECT_EQ(xb(maps, kGenA), kGenB);
  EXPECT_EQ(xb(maps, {2, 1, 1}), (Element{0, 2, 0}));
  EXPECT_EQ(xb(maps, {0, 2, 1}), kZero);
}

TEST(Maps, CanonicalBetaReducesModPn) {
  auto g = make_params(3, 2, 1, 1);
  auto maps = canonical_maps(g);
  EXPECT_EQ(xb(maps, {5, 0, 0}), (Element{0, 2, 0}));
}

TEST(Maps, RejectsMalformed) {
  auto g = make_params(3, 1, 1, 1);
  std::vector<Residue> z(27, 0), short_(26, 0), bad(27, 0);
  bad[4] = 3;
  EXPECT_THROW(MapTriple(g, short_, z, z), MapFormatError);
  EXPECT_THROW(MapTriple(g, z, bad, z), MapFormatError);
  EXPECT_NO_THROW(MapTriple(g, z, z, z));
  EXPECT_TRUE(MapTriple(g, z, z, z).forced_row_violation().has_value());
}

TEST(Mul, Examples) {
  auto g = make_params(3, 1, 1, 1);
  auto maps = canonical_maps(g);
  EXPECT_EQ(mul(maps, {2, 1, 1}, {1, 2, 0}), (Element{2, 2, 1}));
  EXPECT_EQ(distributive_mul(maps, {2, 1, 1}, {1, 2, 0}), (Element{2, 2, 1}));
  EXPECT_EQ(mul(maps, kGenB, kGenB), kZero);
  for (const auto& x : all_elements(g)) {
    EXPECT_EQ(mul(maps, x, kGenA), x);
    EXPECT_EQ(mul(maps, kGenA, x), x);
  }
}

TEST(Mul, MatchesDistributiveExpansionCanonical) {
  for (auto g : {make_params(3, 1, 1, 1), make_params(3, 2, 1, 1), make_params(5, 1, 1, 1)}) {
    auto maps = canonical_maps(g);
    auto elems = all_elements(g);
    for (const auto& x : elems)
      for (const auto& y : elems)
        ASSERT_EQ(mul(maps, x, y), distributive_mul(maps, x, y)) << x << " * " << y;
  }
}

TEST(Mul, MatchesDistributiveExpansionArbitraryMaps) {
  // the closed form is the left-distributive extension for any triple
  std::mt19937_64 rng(3);
  for (auto g : {make_params(3, 1, 1, 1), make_params(3, 2, 1, 1), make_params(3, 2, 2, 1)}) {
    for (int trial = 0; trial < 3; ++trial) {
      auto maps = random_maps(g, rng);
      auto elems = all_elements(g);
      for (int i = 0; i < 3000; ++i) {
        const auto& x = elems[rng() % elems.size()];
        const auto& y = elems[rng() % elems.size()];
        ASSERT_EQ(mul(maps, x, y), distributive_mul(maps, x, y));
      }
    }
  }
}

TEST(Mul, RepresentativeIndependence) {
  // Shifting y1, y2 by their moduli leaves the product unchanged modulo every
  // coordinate, so the binomial terms are well defined.
  auto g = make_params(3, 2, 1, 1);
  auto maps = canonical_maps(g);
  for (const auto& x : all_elements(g)) {
    const auto row = maps.row(rank(g, x));
    for (const auto& y : all_elements(g)) {
      const auto base = mul_with_row(g, row, x, y);
      for (Residue k1 : {0, 1, 2}) {
        for (Residue k2 : {0, 1, 3}) {
          Element shifted{y.x1 + k1 * g.mod1(), y.x2 + k2 * g.mod2(), y.x3 + g.mod3()};
          ASSERT_EQ(mul_with_row(g, row, x, shifted), base);
        }
      }
    }
  }
}

TEST(LeftMulTable, Examples) {
  auto g = make_params(3, 1, 1, 1);
  auto maps = canonical_maps(g);
  auto id = left_mul_table(maps, kGenA);
  for (Rank k = 0; k < 27; ++k) EXPECT_EQ(id[k], k);
  auto zero = left_mul_table(maps, kZero);
  for (Rank k = 0; k < 27; ++k) EXPECT_EQ(zero[k], 0u);
  auto t = left_mul_table(maps, {2, 0, 0});
  std::vector<Rank> sorted(t);
  std::sort(sorted.begin(), sorted.end());
  for (Rank k = 0; k < 27; ++k) EXPECT_EQ(sorted[k], k);
}

TEST(MulTable, IdentityRowAndBound) {
  auto g = make_params(3, 1, 1, 1);
  auto t = mul_table(canonical_maps(g));
  const Rank ra = rank(g, kGenA);
  for (Rank k = 0; k < 27; ++k) {
    EXPECT_EQ(t.at(ra, k), k);
    EXPECT_EQ(t.at(k, ra), k);
  }
  EXPECT_THROW(mul_table(canonical_maps(make_params(3, 2, 2, 2)), 100), SizeError);
}

TEST(MapJson, RoundTrip) {
  std::mt19937_64 rng(5);
  auto g = make_params(3, 2, 1, 1);
  auto maps = random_maps(g, rng);
  auto text = to_json(maps);
  EXPECT_EQ(text.back(), '\n');
  auto back = map_triple_from_json(text);
  EXPECT_EQ(back, maps);
  EXPECT_EQ(to_json(back), text);

  auto path = temp_path("nearring_maps_roundtrip.json");
  save_map_triple(maps, path);
  EXPECT_EQ(read_file(path), text);
  EXPECT_EQ(load_map_triple(path), maps);
  std::filesystem::remove(path);
}

TEST(MapJson, Errors) {
  try {
    map_triple_from_json("{\"params\": [1,");
    FAIL() << "expected MapFormatError";
  } catch (const MapFormatError& e) {
    EXPECT_NE(std::string(e.what()).find("offset"), std::string::npos);
  }
  EXPECT_THROW(map_triple_from_json("{\"alpha\":[]}"), MapFormatError);
  EXPECT_THROW(map_triple_from_json(
                   R"({"params":{"p":2,"m":1,"n":1,"d":1},"alpha":[],"beta":[],"gamma":[]})"),
               ParamError);
  EXPECT_THROW(map_triple_from_json(
                   R"({"params":{"p":3,"m":1,"n":1,"d":1},"alpha":[0],"beta":[0],"gamma":[0]})"),
               MapFormatError);
  EXPECT_THROW(load_map_triple("/nonexistent/maps.json"), Error);
}

TEST(TableIo, CsvAndJsonRoundTrip) {
  auto g = make_params(3, 1, 1, 1);
  auto maps = canonical_maps(g);
  auto t = mul_table(maps);
  auto csv = table_to_csv(t);
  EXPECT_EQ(table_from_csv(csv), t);
  EXPECT_EQ(table_to_csv(table_from_csv(csv)), csv);
  auto js = table_to_json(t);
  EXPECT_EQ(table_from_json(js), t);
  EXPECT_EQ(maps_from_mul_table(g, t), maps);
  EXPECT_THROW(table_from_csv("0,1\n1\n"), MapFormatError);
  EXPECT_THROW(table_from_csv("0,x\n1,0\n"), MapFormatError);
  EXPECT_THROW(maps_from_mul_table(g, addition_table(g)), MapFormatError);
}
