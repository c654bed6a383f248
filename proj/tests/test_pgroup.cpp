#include <gtest/gtest.h>

#include <map>
#include <random>
#include <vector>

#include "nearring/pgroup.hpp"

using namespace nearring;

namespace {

// Normal form a^x1 b^x2 c^x3 of a word in a, b, c by letter rewriting with
// b a = a b c^-1 and c central.
Element rewrite(const GroupParams& g, const std::vector<char>& word) {
  std::vector<char> ab;
  std::int64_t c = 0;
  for (char ch : word) {
    if (ch == 'c') ++c;
    else ab.push_back(ch);
  }
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < ab.size(); ++i) {
      if (ab[i] == 'b' && ab[i + 1] == 'a') {
        std::swap(ab[i], ab[i + 1]);
        --c;
        swapped = true;
      }
    }
  }
  std::int64_t x1 = 0, x2 = 0;
  for (char ch : ab) (ch == 'a' ? x1 : x2)++;
  return {reduce(x1, g.mod1()), reduce(x2, g.mod2()), reduce(c, g.mod3())};
}

std::vector<char> letters(const Element& x) {
  std::vector<char> w;
  w.insert(w.end(), static_cast<std::size_t>(x.x1), 'a');
  w.insert(w.end(), static_cast<std::size_t>(x.x2), 'b');
  w.insert(w.end(), static_cast<std::size_t>(x.x3), 'c');
  return w;
}

Element rewrite_sum(const GroupParams& g, const Element& x, const Element& y) {
  auto w = letters(x);
  auto wy = letters(y);
  w.insert(w.end(), wy.begin(), wy.end());
  return rewrite(g, w);
}

Element repeated_add(const GroupParams& g, const Element& x, std::uint64_t r) {
  Element acc = kZero;
  for (std::uint64_t i = 0; i < r; ++i) acc = add(g, acc, x);
  return acc;
}

}  // namespace

TEST(Params, Valid) {
  auto g = make_params(3, 1, 1, 1);
  EXPECT_EQ(g.order(), 27u);
  EXPECT_EQ(g.exponent(), 3);
  EXPECT_EQ(g.to_string(), "G(3^1,3^1,3^1)");
  EXPECT_EQ(make_params(3, 2, 2, 1).order(), 243u);
}

TEST(Params, Rejected) {
  EXPECT_THROW(make_params(3, 1, 2, 1), ParamError);
  EXPECT_THROW(make_params(3, 2, 1, 2), ParamError);
  EXPECT_THROW(make_params(2, 2, 2, 1), ParamError);
  EXPECT_THROW(make_params(9, 1, 1, 1), ParamError);
  EXPECT_THROW(make_params(3, 0, 0, 0), ParamError);
  EXPECT_THROW(make_params(3, 20, 20, 20), ParamError);
}

TEST(Add, Examples) {
  auto g = make_params(3, 1, 1, 1);
  EXPECT_EQ(add(g, kGenB, kGenA), (Element{1, 1, 2}));
  auto g2 = make_params(3, 2, 1, 1);
  EXPECT_EQ(add(g2, {4, 2, 1}, {7, 1, 2}), (Element{2, 0, 1}));
  EXPECT_EQ(rewrite_sum(g2, {4, 2, 1}, {7, 1, 2}), (Element{2, 0, 1}));
}

TEST(Add, MatchesWordRewriting) {
  for (auto g : {make_params(3, 1, 1, 1), make_params(3, 2, 1, 1), make_params(5, 1, 1, 1)}) {
    auto elems = all_elements(g);
    for (const auto& x : elems) {
      EXPECT_EQ(add(g, x, kZero), x);
      for (const auto& y : elems) ASSERT_EQ(add(g, x, y), rewrite_sum(g, x, y)) << x << " + " << y;
    }
  }
}

TEST(Add, Associative) {
  auto g = make_params(3, 2, 1, 1);
  auto elems = all_elements(g);
  for (const auto& x : elems)
    for (const auto& y : elems)
      for (const auto& z : elems)
        ASSERT_EQ(add(g, add(g, x, y), z), add(g, x, add(g, y, z)));
}

TEST(Neg, BruteForce) {
  auto g = make_params(3, 1, 1, 1);
  EXPECT_EQ(neg(g, kZero), kZero);
  EXPECT_EQ(neg(g, {1, 1, 0}), (Element{2, 2, 2}));
  EXPECT_EQ(neg(g, kGenC), (Element{0, 0, 2}));
  for (auto gg : {g, make_params(3, 2, 2, 1)}) {
    auto elems = all_elements(gg);
    for (const auto& x : elems) {
      int found = 0;
      for (const auto& y : elems) {
        if (add(gg, x, y) == kZero) {
          ++found;
          EXPECT_EQ(neg(gg, x), y);
          EXPECT_EQ(add(gg, y, x), kZero);
        }
      }
      EXPECT_EQ(found, 1);
    }
  }
}

TEST(Scalar, Examples) {
  auto g = make_params(3, 1, 1, 1);
  EXPECT_EQ(scalar(g, {1, 1, 0}, 2), (Element{2, 2, 2}));
  EXPECT_EQ(scalar(g, {1, 1, 0}, 2), add(g, {1, 1, 0}, {1, 1, 0}));
  EXPECT_EQ(scalar(g, {1, 1, 0}, 3), kZero);
  EXPECT_EQ(scalar(g, {2, 1, 2}, 1), (Element{2, 1, 2}));
  EXPECT_EQ(scalar(g, {2, 1, 2}, 0), kZero);
}

TEST(Scalar, MatchesRepeatedAddition) {
  for (auto g : {make_params(3, 1, 1, 1), make_params(3, 2, 1, 1)}) {
    for (const auto& x : all_elements(g)) {
      for (std::uint64_t r = 0; r <= 2 * static_cast<std::uint64_t>(g.exponent()) + 1; ++r) {
        ASSERT_EQ(scalar(g, x, r), repeated_add(g, x, r)) << x << " * " << r;
      }
    }
  }
}

TEST(Scalar, RepresentativeIndependence) {
  // r and r + k p^m give the same multiple, so C(r,2) is well defined mod p^d.
  auto g = make_params(3, 2, 2, 1);
  std::mt19937_64 rng(11);
  auto elems = all_elements(g);
  for (int i = 0; i < 2000; ++i) {
    const auto& x = elems[rng() % elems.size()];
    std::uint64_t r = rng() % 200;
    std::uint64_t k = rng() % 50;
    ASSERT_EQ(scalar(g, x, r), scalar(g, x, r + k * static_cast<std::uint64_t>(g.mod1())));
  }
}

TEST(Commutator, Examples) {
  auto g = make_params(3, 1, 1, 1);
  EXPECT_EQ(commutator(g, kGenA, kGenB), kGenC);
  auto g2 = make_params(3, 2, 1, 1);
  EXPECT_EQ(commutator(g2, {2, 0, 0}, {0, 2, 0}), kGenC);
  for (const auto& x : all_elements(g2)) EXPECT_EQ(commutator(g2, x, x), kZero);
}

TEST(Commutator, ClosedFormMatchesDefinition) {
  // [a^k, b^l] = c^(kl), and -x - y + x + y computed by additions.
  for (auto g : {make_params(3, 1, 1, 1), make_params(3, 2, 1, 1)}) {
    auto elems = all_elements(g);
    for (const auto& x : elems) {
      for (const auto& y : elems) {
        Element def = add(g, add(g, add(g, neg(g, x), neg(g, y)), x), y);
        ASSERT_EQ(commutator(g, x, y), def);
        // class 2: the commutator depends only on the a and b exponents
        Element closed{0, 0, reduce(static_cast<__int128>(x.x1) * y.x2 - static_cast<__int128>(x.x2) * y.x1, g.mod3())};
        ASSERT_EQ(def, closed);
      }
    }
  }
}

TEST(Order, Examples) {
  auto g = make_params(3, 2, 1, 1);
  EXPECT_EQ(element_order(g, kGenA), 9u);
  EXPECT_EQ(element_order(g, kGenC), 3u);
  EXPECT_EQ(element_order(make_params(3, 1, 1, 1), {1, 1, 0}), 3u);
  EXPECT_EQ(element_order(g, kZero), 1u);
}

TEST(Order, MatchesRepeatedAddition) {
  auto g = make_params(3, 2, 2, 1);
  for (const auto& x : all_elements(g)) {
    std::uint64_t r = 1;
    Element acc = x;
    while (acc != kZero) {
      acc = add(g, acc, x);
      ++r;
    }
    ASSERT_EQ(element_order(g, x), r);
  }
}

TEST(Rank, RoundTrip) {
  EXPECT_EQ(rank(make_params(3, 1, 1, 1), kGenA), 9u);
  auto g = make_params(3, 2, 1, 1);
  EXPECT_EQ(rank(g, {1, 2, 0}), 15u);
  auto elems = all_elements(g);
  ASSERT_EQ(elems.size(), 81u);
  for (std::size_t k = 0; k < elems.size(); ++k) {
    EXPECT_EQ(rank(g, elems[k]), k);
    EXPECT_EQ(unrank(g, k), elems[k]);
  }
  EXPECT_THROW(unrank(g, 81), Error);
}

TEST(Closure, Examples) {
  auto g = make_params(3, 1, 1, 1);
  EXPECT_EQ(subgroup_closure(g, {}), ElementSet{0});
  std::vector<Element> c{kGenC};
  EXPECT_EQ(subgroup_closure(g, c).size(), 3u);
  std::vector<Element> ab{kGenA, kGenB};
  EXPECT_EQ(subgroup_closure(g, ab).size(), 27u);
  EXPECT_EQ(subgroup_closure(make_params(3, 2, 2, 1), ab).size(), 243u);
}

TEST(Canonical, ReduceNegative) {
  auto g = make_params(3, 2, 1, 1);
  EXPECT_EQ(canonicalize(g, {-1, -1, -1}), (Element{8, 2, 2}));
  EXPECT_TRUE(is_canonical(g, {8, 2, 2}));
  EXPECT_FALSE(is_canonical(g, {9, 0, 0}));
}
