#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "osprings/json_io.hpp"
#include "osprings/symfunc.hpp"

using namespace osprings;

static SchurExpansion S(int n, std::vector<std::pair<Partition, QPoly>> t) {
  SchurExpansion f;
  f.n = n;
  for (auto& [la, c] : t) f.add(la, c);
  return f;
}

static FundExpansion F(int n, std::vector<std::pair<DescentSet, QPoly>> t) {
  FundExpansion f;
  f.n = n;
  for (auto& [d, c] : t) f.add(d, c);
  return f;
}

static const QPoly q = QPoly::monomial(1);

TEST_CASE("kostka numbers") {
  CHECK(kostka({2, 1}, {1, 1, 1}) == 2);
  CHECK(kostka({2, 2}, {2, 2}) == 1);
  CHECK(kostka({1, 1}, {2}) == 0);
  for (int n = 0; n <= 6; ++n)
    for (auto& la : partitions_of(n))
      for (auto& mu : partitions_of(n)) CHECK(kostka(la, mu) == oracles::kostka_by_tableaux(la, mu));
}

TEST_CASE("standard tableaux and descents") {
  CHECK(standard_tableaux({2, 1}).size() == 2);
  CHECK(standard_tableaux({3, 2}).size() == 5);
  CHECK(standard_tableaux({3, 2, 1}).size() == 16);
  CHECK(tableau_descents({{1, 2}, {3}}) == DescentSet{2});
  CHECK(tableau_descents({{1, 3}, {2}}) == DescentSet{1});
}

TEST_CASE("fundamental to schur") {
  CHECK(fund_to_schur(F(3, {{{}, 1}})) == S(3, {{{3}, 1}}));
  CHECK(fund_to_schur(F(3, {{{1}, 1}, {{2}, 1}})) == S(3, {{{2, 1}, 1}}));
  CHECK(fund_to_schur(F(2, {{{1}, 1}})) == S(2, {{{1, 1}, 1}}));
  CHECK_THROWS_AS(fund_to_schur(F(3, {{{1}, 1}})), NotSymmetricError);
  for (int n = 0; n <= 6; ++n)
    for (auto& la : partitions_of(n)) CHECK(fund_to_schur(schur_to_fund(la)) == S(n, {{la, 1}}));
}

TEST_CASE("h to schur") {
  CHECK(h_to_schur({3}) == S(3, {{{3}, 1}}));
  CHECK(h_to_schur({1, 1}) == S(2, {{{2}, 1}, {{1, 1}, 1}}));
  CHECK(h_to_schur({2, 1}) == S(3, {{{3}, 1}, {{2, 1}, 1}}));
}

TEST_CASE("skewing by elementary functions") {
  CHECK(e_perp(1, S(3, {{{2, 1}, 1}})) == S(2, {{{2}, 1}, {{1, 1}, 1}}));
  CHECK(e_perp(2, S(2, {{{1, 1}, 1}})) == S(0, {{{}, 1}}));
  CHECK(e_perp(2, S(2, {{{2}, 1}})).is_zero());
  CHECK(e_times(1, S(1, {{{1}, 1}})) == S(2, {{{2}, 1}, {{1, 1}, 1}}));
}

TEST_CASE("skewing is adjoint to multiplication") {
  for (int n = 0; n <= 5; ++n)
    for (auto& la : partitions_of(n))
      for (int j = 1; j <= n; ++j)
        for (auto& mu : partitions_of(n - j)) {
          auto a = S(n, {{la, 1}}), b = S(n - j, {{mu, 1}});
          CHECK(hall_inner(e_perp(j, a), b) == hall_inner(a, e_times(j, b)));
        }
}

TEST_CASE("hilbert coefficient") {
  auto f = F(2, {{{}, 1 + q}, {{1}, q}});
  CHECK(hilbert_coefficient(f) == 1 + q + q);
  CHECK(hilbert_coefficient(F(4, {{{1, 3}, QPoly::monomial(3)}})) == QPoly::monomial(3));
  CHECK(hilbert_coefficient(F(3, {})).is_zero());
}

TEST_CASE("dual Hall-Littlewood functions") {
  CHECK(hl_qprime_rev({1, 1}) == S(2, {{{2}, 1}, {{1, 1}, q}}));
  CHECK(hl_qprime_rev({4}) == S(4, {{{4}, 1}}));
  CHECK(hl_qprime({1, 1}) == S(2, {{{2}, q}, {{1, 1}, 1}}));
  for (int n = 1; n <= 6; ++n)
    for (auto& la : partitions_of(n)) {
      auto f = hl_qprime_rev(la);
      CHECK(f == oracles::cocharge_expansion(la));
      CHECK(f.max_degree() == n_stat(la));
      for (auto& [nu, c] : f.terms) CHECK(c.nonnegative());
    }
  for (int n = 1; n <= 4; ++n) {
    Partition ones(n, 1);
    auto f = hl_qprime_rev(ones);
    for (auto& la : partitions_of(n)) CHECK(f.coeff(la).at_one() == static_cast<long>(standard_tableaux(la).size()));
  }
}

TEST_CASE("rendering") {
  CHECK(S(2, {{{2}, 1 + q}, {{1, 1}, q}}).str() == "s[2] + q(s[2]+s[1,1])");
  CHECK(S(0, {{{}, 1}}).str() == "s[]");
  CHECK(S(3, {}).str() == "0");
  CHECK(S(3, {{{3}, QPoly(2)}, {{2, 1}, QPoly(-1)}}).str() == "2s[3] - s[2,1]");
}

TEST_CASE("json forms") {
  auto f = S(4, {{{2, 1, 1}, q}});
  json j = to_json(f);
  CHECK(j == json::parse(R"({"n":4,"basis":"schur","terms":[{"index":[2,1,1],"coeffs":["0","1"]}]})"));
  CHECK(schur_from_json(j) == f);
  auto g = F(3, {{{1, 2}, 1 + q}});
  CHECK(fund_from_json(to_json(g)) == g);
  CHECK(to_json(g)["basis"] == "fundamental");
  CHECK_THROWS(schur_from_json(to_json(g)));
}

TEST_CASE("LLT row tallies") {
  auto one = llt_rows({{1, 0}}, 3);
  CHECK(one.size() == 3);
  for (auto& [x, c] : one) CHECK(c == QPoly(1));
  auto none = llt_rows({}, 2);
  CHECK(none.size() == 1);
  CHECK(none.at({0, 0}) == QPoly(1));
  // two cells of equal content: s_2 + q s_11
  auto two = llt_rows({{1, 0}, {1, 0}}, 2);
  CHECK(two.at({2, 0}) == QPoly(1));
  CHECK(two.at({1, 1}) == 1 + q);
}

TEST_CASE("LLT row tallies are symmetric in the labels") {
  std::vector<std::vector<LLTRow>> cases = {
      {{2, 1}, {1, 0}}, {{2, 0}, {2, 1}}, {{3, 2}, {1, 0}, {1, 1}}, {{1, 0}, {2, 0}, {1, -1}}};
  for (auto& rows : cases) {
    auto t = llt_rows(rows, 4);
    for (auto& [x, c] : t) {
      Composition y = x;
      std::sort(y.begin(), y.end(), std::greater<int>());
      CHECK(t.at(y) == c);
    }
  }
}

TEST_CASE("rendering with negative coefficients inside a degree") {
  CHECK(S(3, {{{3}, q}, {{2, 1}, q * QPoly(-1)}}).str() == "q(s[3]-s[2,1])");
}
