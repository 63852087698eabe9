#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "atlas/error.hpp"
#include "atlas/group.hpp"
#include "oracles.hpp"

using namespace atlas;

namespace {

std::vector<GroupPtr> test_groups() {
  return {cyclic_group(1),
          cyclic_group(2),
          cyclic_group(3),
          cyclic_group(4),
          direct_product(cyclic_group(2), cyclic_group(2)),
          symmetric_group(3),
          cyclic_group(6),
          cyclic_group(8),
          direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2)),
          direct_product(cyclic_group(2), cyclic_group(4)),
          dihedral_group(4),
          quaternion_group(),
          alternating_group(4),
          dihedral_group(6),
          symmetric_group(4)};
}

// Brute-force conjugacy classes.
std::set<std::vector<Element>> brute_classes(const FiniteGroup& g) {
  std::set<std::vector<Element>> out;
  for (Element a = 0; a < g.order(); ++a) {
    std::set<Element> cls;
    for (Element x = 0; x < g.order(); ++x) cls.insert(g.mul(g.mul(x, a), g.inv(x)));
    out.insert({cls.begin(), cls.end()});
  }
  return out;
}

std::multiset<std::size_t> sizes(const std::vector<std::vector<Element>>& classes) {
  std::multiset<std::size_t> out;
  for (const auto& c : classes) out.insert(c.size());
  return out;
}

}  // namespace

TEST_CASE("load_group reads tables and permutations", "[group][io]") {
  SECTION("cyclic table of order 2") {
    GroupPtr g = load_group("group Z2\norder 2\ntable\n0 1\n1 0\n");
    CHECK(g->order() == 2);
    CHECK(g->table() == std::vector<std::vector<Element>>{{0, 1}, {1, 0}});
    CHECK(g->name() == "Z2");
  }
  SECTION("permutation generators (1 2) and (1 2 3)") {
    GroupPtr g = load_group("group S3\norder 6\nperm 3\n2 1 3\n2 3 1\n");
    CHECK(g->order() == 6);
    CHECK_FALSE(g->is_abelian());
    CHECK(are_isomorphic(g, symmetric_group(3)));
    CHECK(identify_group(g) == "S3");
  }
  SECTION("repeated row is not a group") {
    CHECK_THROWS_MATCHES(load_group("group B\norder 2\ntable\n0 1\n0 1\n"), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.kind() == ErrorKind::NotAGroup; }));
  }
  SECTION("syntax errors carry a line number") {
    try {
      load_group("group B\norder 2\ntable\n0 1\n1 z\n");
      FAIL("expected MalformedSpec");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::MalformedSpec);
      CHECK(e.line() == 5);
    }
  }
  SECTION("perm closure must match the declared order") {
    CHECK_THROWS_AS(load_group("group X\norder 5\nperm 3\n2 1 3\n2 3 1\n"), Error);
  }
  SECTION("non-associative Latin square with identity") {
    // loop of order 5 that is not a group
    const char* text =
        "group L\norder 5\ntable\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
    CHECK_THROWS_AS(load_group(text), Error);
  }
  SECTION("format_group round-trips") {
    GroupPtr g = symmetric_group(4);
    GroupPtr back = load_group(format_group(*g));
    CHECK(back->same_table(*g));
  }
}

TEST_CASE("Latin square and inverse invariants", "[group][property]") {
  for (const GroupPtr& g : test_groups()) {
    INFO(g->name());
    const std::size_t n = g->order();
    for (Element a = 0; a < n; ++a) {
      std::set<Element> row, col;
      for (Element b = 0; b < n; ++b) {
        row.insert(g->mul(a, b));
        col.insert(g->mul(b, a));
      }
      REQUIRE(row.size() == n);
      REQUIRE(col.size() == n);
      REQUIRE(g->mul(a, g->inv(a)) == 0);
      REQUIRE(g->mul(g->inv(a), a) == 0);
      REQUIRE(g->pow(a, static_cast<std::int64_t>(g->element_order(a))) == 0);
    }
  }
}

TEST_CASE("conjugacy classes", "[group]") {
  CHECK(sizes(conjugacy_classes(*cyclic_group(4))) == std::multiset<std::size_t>{1, 1, 1, 1});
  CHECK(sizes(conjugacy_classes(*symmetric_group(3))) == std::multiset<std::size_t>{1, 2, 3});
  CHECK(conjugacy_classes(*direct_product(cyclic_group(2), cyclic_group(2))).size() == 4);
  for (const GroupPtr& g : test_groups()) {
    INFO(g->name());
    auto classes = conjugacy_classes(*g);
    std::set<std::vector<Element>> got(classes.begin(), classes.end());
    REQUIRE(got == brute_classes(*g));
    REQUIRE(classes.front() == std::vector<Element>{0});
    std::size_t total = 0;
    for (const auto& c : classes) {
      total += c.size();
      REQUIRE(g->order() % c.size() == 0);
      REQUIRE(c.front() == *std::min_element(c.begin(), c.end()));
      // orbit-stabilizer
      REQUIRE(centralizer(g, c.front()).order() * c.size() == g->order());
    }
    REQUIRE(total == g->order());
  }
}

TEST_CASE("centralizers", "[group]") {
  GroupPtr s3 = symmetric_group(3);
  CHECK(centralizer(s3, 0).order() == 6);
  for (Element x = 1; x < 6; ++x) {
    Subgroup z = centralizer(s3, x);
    CHECK(z.contains(x));
    CHECK(z.contains(0));
    if (s3->element_order(x) == 2) {
      CHECK(z.elements == std::vector<Element>{0, x});
    }
  }
  GroupPtr v4 = direct_product(cyclic_group(2), cyclic_group(2));
  for (Element x = 0; x < 4; ++x) CHECK(centralizer(v4, x).order() == 4);
  for (const GroupPtr& g : test_groups())
    for (Element x = 0; x < g->order(); ++x) {
      std::vector<Element> brute;
      for (Element y = 0; y < g->order(); ++y)
        if (g->mul(x, y) == g->mul(y, x)) brute.push_back(y);
      REQUIRE(centralizer(g, x).elements == brute);
    }
}

TEST_CASE("all_subgroups", "[group]") {
  CHECK(all_subgroups(cyclic_group(2)).size() == 2);
  CHECK(all_subgroups(symmetric_group(3)).size() == 6);
  CHECK(all_subgroups(direct_product(cyclic_group(2), cyclic_group(2))).size() == 5);
  CHECK(all_subgroups(symmetric_group(4)).size() == 30);
  for (const GroupPtr& g : test_groups()) {
    INFO(g->name());
    auto subs = all_subgroups(g);
    std::set<std::vector<Element>> got;
    for (const Subgroup& h : subs) {
      got.insert(h.elements);
      REQUIRE(g->order() % h.order() == 0);
      REQUIRE(h.elements.front() == 0);
      for (Element a : h.elements) {
        REQUIRE(h.contains(g->inv(a)));
        for (Element b : h.elements) REQUIRE(h.contains(g->mul(a, b)));
      }
      // embed is a homomorphism from the re-indexed group
      for (Element a = 0; a < h.order(); ++a)
        for (Element b = 0; b < h.order(); ++b)
          REQUIRE(h.elements[h.as_group->mul(a, b)] == g->mul(h.elements[a], h.elements[b]));
    }
    REQUIRE(got.size() == subs.size());
    REQUIRE(got == oracle::subgroups_by_pairs(*g));
    // canonical order: (order, lexicographic)
    for (std::size_t i = 1; i < subs.size(); ++i) {
      REQUIRE(std::make_pair(subs[i - 1].order(), subs[i - 1].elements) <
              std::make_pair(subs[i].order(), subs[i].elements));
    }
  }
}

TEST_CASE("subgroup conjugacy representatives", "[group]") {
  CHECK(subgroup_conjugacy_reps(symmetric_group(3)).size() == 4);
  CHECK(subgroup_conjugacy_reps(direct_product(cyclic_group(2), cyclic_group(2))).size() == 5);
  CHECK(subgroup_conjugacy_reps(cyclic_group(1)).size() == 1);
  CHECK(subgroup_conjugacy_reps(symmetric_group(4)).size() == 11);
  for (const GroupPtr& g : test_groups()) {
    INFO(g->name());
    auto all = all_subgroups(g);
    std::set<std::vector<Element>> all_sets;
    for (const Subgroup& h : all) all_sets.insert(h.elements);
    std::set<std::vector<Element>> covered;
    for (const Subgroup& rep : subgroup_conjugacy_reps(g)) {
      for (Element x = 0; x < g->order(); ++x) {
        Subgroup c = conjugate_subgroup(rep, x);
        REQUIRE(all_sets.count(c.elements) == 1);
        REQUIRE(rep.elements <= c.elements);  // lexicographic minimum of its orbit
        covered.insert(c.elements);
      }
    }
    REQUIRE(covered == all_sets);
  }
}

TEST_CASE("normal subgroups and quotients", "[group]") {
  GroupPtr s3 = symmetric_group(3);
  auto normals = normal_subgroups_in(whole_group(s3));
  std::vector<std::size_t> orders;
  for (const Subgroup& n : normals) orders.push_back(n.order());
  CHECK(orders == std::vector<std::size_t>{1, 3, 6});
  CHECK(normal_subgroups_in(trivial_subgroup(s3)).size() == 1);
  GroupPtr v4 = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(normal_subgroups_in(whole_group(v4)).size() == 5);

  Subgroup a3 = normals[1];
  QuotientGroup q = quotient_group(whole_group(s3), a3);
  CHECK(q.as_group->order() == 2);
  QuotientGroup all = quotient_group(whole_group(s3), whole_group(s3));
  CHECK(all.as_group->order() == 1);
  QuotientGroup none = quotient_group(whole_group(s3), trivial_subgroup(s3));
  CHECK(none.as_group->order() == 6);
  for (Element x = 0; x < 6; ++x) CHECK(none.project[x] == x);

  Subgroup transposition = centralizer(s3, 1);
  if (transposition.order() != 2) transposition = make_subgroup(s3, {0, 3});
  CHECK_THROWS_MATCHES(quotient_group(whole_group(s3), transposition.order() == 2 ? transposition : a3), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) { return e.kind() == ErrorKind::NotNormal; }));

  for (const GroupPtr& g : test_groups())
    for (const Subgroup& h : subgroup_conjugacy_reps(g))
      for (const Subgroup& n : normal_subgroups_in(h)) {
        for (Element x : h.elements) REQUIRE(conjugate_subgroup(n, x).elements == n.elements);
        QuotientGroup qq = quotient_group(h, n);
        REQUIRE(qq.as_group->order() * n.order() == h.order());
        std::vector<std::size_t> fiber(qq.as_group->order(), 0);
        for (Element a = 0; a < h.order(); ++a) {
          ++fiber[qq.project[a]];
          for (Element b = 0; b < h.order(); ++b)
            REQUIRE(qq.project[h.as_group->mul(a, b)] == qq.as_group->mul(qq.project[a], qq.project[b]));
        }
        for (std::size_t f : fiber) REQUIRE(f == n.order());
      }
}

TEST_CASE("normality requires containment in H", "[group]") {
  GroupPtr s3 = symmetric_group(3);
  auto subs = all_subgroups(s3);
  const Subgroup& order2 = subs[1];
  const Subgroup& order3 = subs[4];
  REQUIRE(order2.order() == 2);
  REQUIRE(order3.order() == 3);
  CHECK_FALSE(is_normal_in(order2, whole_group(s3)));
  CHECK(is_normal_in(order3, whole_group(s3)));
  CHECK_THROWS_AS(quotient_group(order3, order2), Error);
}

TEST_CASE("homomorphisms", "[group]") {
  GroupPtr z2 = cyclic_group(2), z3 = cyclic_group(3), s3 = symmetric_group(3);
  CHECK(homs_between(z2, z2).size() == 2);
  CHECK(homs_between(z3, z2).size() == 1);
  CHECK(homs_between(s3, z2).size() == 2);
  // brute force over all 2^6 maps S3 -> Z/2
  std::size_t brute = 0;
  for (unsigned mask = 0; mask < 64; ++mask) {
    GroupHom f{s3, z2, std::vector<Element>(6)};
    for (Element x = 0; x < 6; ++x) f.images[x] = (mask >> x) & 1;
    if (is_homomorphism(f)) ++brute;
  }
  CHECK(brute == 2);
  for (const GroupPtr& d : test_groups()) {
    if (d->order() > 8) continue;
    for (const GroupPtr& c : {z2, z3, s3}) {
      auto homs = homs_between(d, c);
      std::set<std::vector<Element>> distinct;
      for (const GroupHom& f : homs) {
        REQUIRE(is_homomorphism(f));
        REQUIRE(f.images[0] == 0);
        distinct.insert(f.images);
      }
      REQUIRE(distinct.size() == homs.size());
    }
  }
  CHECK(homs_between(s3, s3).size() == 10);  // 6 automorphisms, 3 onto order-2 subgroups, trivial
}

TEST_CASE("isomorphism labels", "[group]") {
  CHECK(identify_group(cyclic_group(1)) == "1");
  CHECK(identify_group(cyclic_group(2)) == "Z/2");
  CHECK(identify_group(cyclic_group(6)) == "Z/6");
  CHECK(identify_group(direct_product(cyclic_group(2), cyclic_group(2))) == "Z/2 x Z/2");
  CHECK(identify_group(direct_product(cyclic_group(2), cyclic_group(6))) == "Z/2 x Z/6");
  CHECK(identify_group(dihedral_group(4)) == "D8");
  CHECK(identify_group(quaternion_group()) == "Q8");
  CHECK(identify_group(alternating_group(4)) == "A4");
  CHECK(identify_group(symmetric_group(4)) == "S4");
  CHECK_FALSE(are_isomorphic(dihedral_group(4), quaternion_group()));
  CHECK_FALSE(are_isomorphic(cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))));
  CHECK(are_isomorphic(cyclic_group(6), direct_product(cyclic_group(2), cyclic_group(3))));
  CHECK_FALSE(are_isomorphic(cyclic_group(6), symmetric_group(3)));
}

TEST_CASE("relabeled copies have the same structure", "[group][property]") {
  std::mt19937_64 rng(42);
  for (const GroupPtr& g : test_groups()) {
    if (g->order() < 3) continue;
    std::vector<Element> perm(g->order());
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    GroupPtr h = relabel(g, perm);
    REQUIRE(are_isomorphic(g, h));
    REQUIRE(all_subgroups(g).size() == all_subgroups(h).size());
    REQUIRE(subgroup_conjugacy_reps(g).size() == subgroup_conjugacy_reps(h).size());
    REQUIRE(sizes(conjugacy_classes(*g)) == sizes(conjugacy_classes(*h)));
  }
}
