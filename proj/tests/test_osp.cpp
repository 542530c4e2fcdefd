#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "osprings/fillings.hpp"
#include "osprings/json_io.hpp"
#include "osprings/osp.hpp"

using namespace osprings;

TEST_CASE("small enumerations") {
  auto a = enumerate_osp(2, {1}, 2);
  std::set<OrderedSetPartition> got(a.begin(), a.end());
  std::set<OrderedSetPartition> want{{{1, 2}, {}}, {{1}, {2}}, {{2}, {1}}};
  CHECK(got == want);
  CHECK(enumerate_osp(3, {2, 1}, 2).size() == 3);
  CHECK(enumerate_osp(3, {2, 1}, 5).size() == 3);
  CHECK(enumerate_osp(4, {2, 1}, 3).size() == 22);
}

TEST_CASE("counts") {
  CHECK(count_osp(4, {1, 1}, 2) == 14);
  CHECK(count_osp(4, {2, 1}, 3) == 22);
  for (int n = 1; n <= 7; ++n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    CHECK(count_osp(n, Partition(n, 1), n) == f);
  }
  CHECK_THROWS_AS(count_osp(3, {1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("enumeration matches brute force and has no repeats") {
  for (int n = 1; n <= 6; ++n)
    for (int s = 1; s <= 4; ++s)
      for (auto& la : partitions_up_to(n, s)) {
        auto all = enumerate_osp(n, la, s);
        std::set<OrderedSetPartition> uniq(all.begin(), all.end());
        CHECK(uniq.size() == all.size());
        CHECK(static_cast<long>(all.size()) == oracles::count_osp_brute(n, la, s));
        for (auto& p : all) {
          REQUIRE(static_cast<int>(p.size()) == s);
          std::vector<int> seen;
          for (size_t i = 0; i < p.size(); ++i) {
            if (i < la.size()) CHECK(static_cast<int>(p[i].size()) >= la[i]);
            seen.insert(seen.end(), p[i].begin(), p[i].end());
          }
          std::sort(seen.begin(), seen.end());
          for (int e = 1; e <= n; ++e) CHECK(seen[e - 1] == e);
        }
      }
}

TEST_CASE("the symmetric group action") {
  OrderedSetPartition p{{1}, {2}};
  CHECK(permute_osp({1, 2}, p) == p);
  CHECK(permute_osp({2, 1}, p) == OrderedSetPartition{{2}, {1}});
  OrderedSetPartition big{{1, 3, 5, 7, 8}, {2, 9, 10}, {4, 6}};
  auto moved = permute_osp({10, 9, 8, 7, 6, 5, 4, 3, 2, 1}, big);
  for (size_t i = 0; i < big.size(); ++i) CHECK(moved[i].size() == big[i].size());
  CHECK(moved[0] == std::vector<int>{3, 4, 6, 8, 10});
  // the action preserves the set
  auto all = enumerate_osp(4, {2, 1}, 3);
  std::set<OrderedSetPartition> orig(all.begin(), all.end()), img;
  for (auto& q : all) img.insert(permute_osp({3, 1, 4, 2}, q));
  CHECK(orig == img);
}

TEST_CASE("filling bijection on the worked example") {
  OrderedSetPartition p{{1, 3, 5, 7, 8}, {2, 9, 10}, {4, 6}};
  auto f = osp_to_seci(p, {3, 2}, 3);
  CHECK(reading_word(f) == std::vector<int>{1, 3, 2, 5, 9, 7, 10, 4, 8, 6});
  CHECK(inv_reading_word(f) == std::vector<int>{1, 3, 2, 5, 9, 7, 8, 10, 4, 6});
  CHECK(seci_to_osp(f) == p);

  auto g = osp_to_seci({{1, 2}, {}}, {1}, 2);
  CHECK(g.diagram[0] == std::vector<int>{1});
  CHECK(g.basement[0] == std::vector<int>{2});
  auto h = osp_to_seci({{1, 2}, {3}}, {2, 1}, 2);
  CHECK(h.basement_sizes() == Composition{0, 0});
}

TEST_CASE("filling bijection round trips") {
  for (int n = 1; n <= 6; ++n)
    for (int s = 1; s <= 4; ++s)
      for (auto& la : partitions_up_to(n, s)) {
        std::set<ExtendedFilling> images;
        for (auto& p : enumerate_osp(n, la, s)) {
          auto f = osp_to_seci(p, la, s);
          CHECK(f.standard());
          CHECK(seci_to_osp(f) == p);
          images.insert(f);
        }
        Composition shape = la;
        shape.resize(s, 0);
        auto seci = enumerate_seci(n, shape, s);
        CHECK(std::set<ExtendedFilling>(seci.begin(), seci.end()) == images);
      }
}

TEST_CASE("antisymmetrization count") {
  // osps with n-j+1..n in distinct blocks, left to right
  for (int n = 1; n <= 6; ++n)
    for (int s = 1; s <= 4; ++s)
      for (auto& la : partitions_up_to(n, s))
        for (int j = 1; j <= n; ++j) {
          long lhs = 0;
          for (auto& p : enumerate_osp(n, la, s)) {
            std::vector<int> where(n + 1, -1);
            for (int b = 0; b < s; ++b)
              for (int e : p[b]) where[e] = b;
            bool ok = true;
            for (int e = n - j + 1; e < n; ++e) ok = ok && where[e] < where[e + 1];
            lhs += ok;
          }
          mpz_class rhs = 0;
          for (auto& I : increasing_sequences(s, j)) {
            Partition r = multi_reduction(la, I, s);
            if (size_of(r) <= n - j) rhs += count_osp(n - j, r, s);
          }
          CHECK(rhs == lhs);
        }
}

TEST_CASE("size recursion for adding a part or a block") {
  for (int n = 1; n <= 7; ++n)
    for (int s = 2; s <= 5; ++s)
      for (auto& la : partitions_up_to(n - 1, s - 1))
        CHECK(count_osp(n, la, s) == count_osp(n, concat_ones(la, 1), s) + count_osp(n, la, s - 1));
}

TEST_CASE("json form") {
  OrderedSetPartition p{{1, 3, 5, 7, 8}, {2, 9, 10}, {4, 6}};
  CHECK(osp_to_json(p).dump() == "[[1,3,5,7,8],[2,9,10],[4,6]]");
  CHECK(osp_from_json(osp_to_json(p)) == p);
}
