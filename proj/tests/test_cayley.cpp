#include <gtest/gtest.h>

#include <numeric>

#include "nearring/cayley.hpp"
#include "nearring/pgroup.hpp"
#include "nearring/table.hpp"

using namespace nearring;

namespace {

Permutation identity_perm(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), Rank{0});
  return p;
}

}  // namespace

TEST(Cayley, FromParams) {
  auto g = make_params(3, 1, 1, 1);
  auto G = CayleyGroup::from_params(g);
  EXPECT_EQ(G.order(), 27u);
  EXPECT_EQ(G.identity(), 0u);
  EXPECT_FALSE(G.is_abelian());
  EXPECT_FALSE(G.find_nonassociative().has_value());
  EXPECT_EQ(G.op(rank(g, kGenB), rank(g, kGenA)), rank(g, {1, 1, 2}));
  EXPECT_EQ(G.commutator(rank(g, kGenA), rank(g, kGenB)), rank(g, kGenC));
  EXPECT_EQ(G.power(rank(g, kGenA), 3), 0u);
}

TEST(Cayley, SizeBound) {
  EXPECT_THROW(CayleyGroup::from_params(make_params(3, 2, 2, 2), 500), SizeError);
  EXPECT_THROW(addition_table(make_params(3, 2, 2, 2), 100), SizeError);
}

TEST(Cayley, RejectsNonGroup) {
  // x*y = 0 for all x, y: no identity
  OperationTable t(2, {0, 0, 0, 0});
  EXPECT_THROW(CayleyGroup(t, 0), Error);
}

TEST(Cayley, FindsNonAssociative) {
  // non-commutative loop of order 5, hence not a group
  OperationTable t(5, {0, 1, 2, 3, 4,
                       1, 0, 3, 4, 2,
                       2, 4, 0, 1, 3,
                       3, 2, 4, 0, 1,
                       4, 3, 1, 2, 0});
  CayleyGroup loop(t, 0);
  EXPECT_TRUE(loop.find_nonassociative().has_value());
}

TEST(Frattini, Examples) {
  auto g = make_params(3, 1, 1, 1);
  auto phi = frattini_pgroup(CayleyGroup::from_params(g));
  std::vector<Element> c{kGenC};
  EXPECT_EQ(phi, subgroup_closure(g, c));
  EXPECT_EQ(frattini_pgroup(CayleyGroup::from_params(make_params(3, 2, 1, 1))).size(), 9u);
  EXPECT_EQ(frattini_pgroup(CayleyGroup::cyclic(3)), std::vector<Rank>{0});
  EXPECT_EQ(frattini_pgroup(CayleyGroup::cyclic(9)).size(), 3u);
  EXPECT_THROW(frattini_pgroup(CayleyGroup::cyclic(6)), Error);
}

TEST(Frattini, QuotientRankTwo) {
  // G/Phi is elementary abelian of rank 2: |Phi| = p^(m+n+d-2).
  for (auto g : {make_params(3, 1, 1, 1), make_params(3, 2, 1, 1), make_params(3, 2, 2, 1),
                 make_params(5, 1, 1, 1)}) {
    auto G = CayleyGroup::from_params(g);
    auto phi = frattini_pgroup(G);
    EXPECT_EQ(phi.size() * static_cast<std::size_t>(g.p() * g.p()), g.order()) << g.to_string();
    EXPECT_EQ(phi, frattini_by_maximal_subgroups(G)) << g.to_string();
  }
}

TEST(Automorphism, Check) {
  auto G = CayleyGroup::cyclic(5);
  EXPECT_TRUE(is_automorphism(G, identity_perm(5)));
  EXPECT_TRUE(is_automorphism(G, {0, 2, 4, 1, 3}));
  EXPECT_FALSE(is_automorphism(G, {0, 1, 2, 4, 3}));
  EXPECT_FALSE(is_automorphism(G, {0, 0, 0, 0, 0}));
}

TEST(Semidirect, IdentityActorCopiesCarrier) {
  auto g = make_params(3, 1, 1, 1);
  auto R = CayleyGroup::from_params(g);
  std::vector<Permutation> actors{identity_perm(27)};
  auto H = semidirect_product(R, actors);
  EXPECT_EQ(H.table(), R.table());
}

TEST(Semidirect, CyclicByAutomorphisms) {
  auto C = CayleyGroup::cyclic(5);
  std::vector<Permutation> actors{identity_perm(5), {0, 4, 3, 2, 1}};
  auto H = semidirect_product(C, actors);
  EXPECT_EQ(H.order(), 10u);
  EXPECT_FALSE(H.is_abelian());
  EXPECT_FALSE(H.find_nonassociative().has_value());
}

TEST(Semidirect, Rejects) {
  auto C = CayleyGroup::cyclic(5);
  std::vector<Permutation> bad{identity_perm(5), {0, 1, 2, 4, 3}};
  EXPECT_THROW(semidirect_product(C, bad), Error);
  std::vector<Permutation> not_closed{identity_perm(5), {0, 2, 4, 1, 3}};
  EXPECT_THROW(semidirect_product(C, not_closed), Error);
  std::vector<Permutation> no_identity{{0, 4, 3, 2, 1}};
  EXPECT_THROW(semidirect_product(C, no_identity), Error);
}

TEST(PrimePower, Detects) {
  EXPECT_EQ(prime_of_power(27), 3);
  EXPECT_EQ(prime_of_power(125), 5);
  EXPECT_FALSE(prime_of_power(12).has_value());
  EXPECT_FALSE(prime_of_power(1).has_value());
}
