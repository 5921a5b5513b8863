#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "expect.hpp"
#include "groupcodes/group.hpp"
#include "groupcodes/parse.hpp"

using namespace groupcodes;

namespace {

// Is there a bijection σ with σ(xy) = σ(x)σ(y)? Tries all n! permutations.
bool brute_isomorphic(const Group& a, const Group& b) {
  if (a.order() != b.order()) return false;
  std::vector<std::size_t> sigma(a.order());
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool ok = true;
    for (std::size_t x = 0; x < a.order() && ok; ++x)
      for (std::size_t y = 0; y < a.order() && ok; ++y) ok = sigma[a.mul(x, y)] == b.mul(sigma[x], sigma[y]);
    if (ok) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

void check_group_axioms(const Group& g) {
  const std::size_t n = g.order();
  for (std::size_t x = 0; x < n; ++x) {
    CHECK(g.mul(x, g.identity()) == x);
    CHECK(g.mul(g.identity(), x) == x);
    CHECK(g.mul(x, g.inverse(x)) == g.identity());
    CHECK(g.power(x, g.element_order(x)) == g.identity());
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) CHECK(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
  }
  // The generators reach every element.
  std::set<std::size_t> reached{g.identity()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t x : std::vector<std::size_t>(reached.begin(), reached.end()))
      for (std::size_t s : g.generators()) grew |= reached.insert(g.mul(x, s)).second;
  }
  CHECK(reached.size() == n);
}

}  // namespace

TEST_CASE("built-in groups satisfy the axioms") {
  for (auto g : {Group::cyclic(1), Group::cyclic(6), Group::dihedral(4), Group::symmetric(3), Group::symmetric(4),
                 Group::direct_product(*Group::cyclic(2), *Group::cyclic(2))}) {
    CAPTURE(g->name());
    check_group_axioms(*g);
    CHECK(g->identity() == 0);
  }
}

TEST_CASE("orders, centers and commutativity") {
  CHECK(Group::cyclic(5)->order() == 5);
  CHECK(Group::dihedral(4)->order() == 8);
  CHECK(Group::symmetric(4)->order() == 24);
  CHECK(Group::cyclic(6)->is_abelian());
  CHECK_FALSE(Group::symmetric(3)->is_abelian());
  CHECK(Group::symmetric(3)->center().size() == 1);
  CHECK(Group::dihedral(4)->center().size() == 2);
  CHECK(Group::dihedral(3)->center().size() == 1);
  CHECK(Group::cyclic(6)->element_order(1) == 6);
  std::multiset<std::size_t> orders;
  const auto s3 = Group::symmetric(3);
  for (std::size_t x = 0; x < 6; ++x) orders.insert(s3->element_order(x));
  CHECK(orders == std::multiset<std::size_t>{1, 2, 2, 2, 3, 3});
}

TEST_CASE("C2 x C3 is isomorphic to C6 and S3 is not") {
  const auto c2c3 = Group::direct_product(*Group::cyclic(2), *Group::cyclic(3));
  CHECK(brute_isomorphic(*c2c3, *Group::cyclic(6)));
  CHECK_FALSE(brute_isomorphic(*Group::symmetric(3), *Group::cyclic(6)));
  CHECK(brute_isomorphic(*Group::dihedral(3), *Group::symmetric(3)));
}

TEST_CASE("tables are validated") {
  // Z/3 written out by hand.
  const auto z3 = Group::from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(z3->order() == 3);
  CHECK(z3->inverse(1) == 2);
  CHECK_THROWS_KIND(Group::from_table({{0, 1}, {1, 1}}), ErrorKind::kInvalidArgument);       // no inverse
  CHECK_THROWS_KIND(Group::from_table({{0, 1}, {1, 2}}), ErrorKind::kInvalidArgument);       // not closed
  CHECK_THROWS_KIND(Group::from_table({{0, 1, 2}, {1, 0}}), ErrorKind::kInvalidArgument);    // ragged
  // A Latin square that is not associative.
  CHECK_THROWS_KIND(Group::from_table({{0, 1, 2, 3, 4},
                                       {1, 0, 3, 4, 2},
                                       {2, 4, 0, 1, 3},
                                       {3, 2, 4, 0, 1},
                                       {4, 3, 1, 2, 0}}),
                    ErrorKind::kInvalidArgument);
  CHECK_THROWS_KIND(Group::cyclic(65), ErrorKind::kTooLarge);
}
