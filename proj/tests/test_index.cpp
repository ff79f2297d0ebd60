/// @file test_index.cpp
/// @brief Index algebra: weight/depth, admissibility, end shifts,
///        compositions, binomial coefficients, duality, branch
///        coefficients and the index grammar.

#include <doctest.h>

#include <string>
#include <vector>

#include "mzv/errors.hpp"
#include "mzv/index.hpp"

using mzv::Index;

TEST_CASE("index: weight, depth, admissibility") {
  CHECK(mzv::weight(Index{1, 2, 3}) == 6);
  CHECK(mzv::depth(Index{1, 2, 3}) == 3);
  CHECK(mzv::weight(Index{}) == 0);

  const mzv::GmtIndex g{{{1, 2}, {3}}, {2}};
  CHECK(mzv::weight(g) == 8);

  CHECK(!mzv::admissible(Index{}));
  CHECK(mzv::admissible(Index{2}));
  CHECK(mzv::admissible(Index{1, 2}));
  CHECK(mzv::admissible(Index{1, 1, 5}));
  CHECK(!mzv::admissible(Index{2, 1}));
  CHECK(!mzv::admissible(Index{0, 2}));
  CHECK(!mzv::admissible(Index{1}));
}

TEST_CASE("index: end shifts") {
  CHECK(mzv::shift(Index{1, 2}, mzv::End::Last, +1) == Index{1, 3});
  CHECK(mzv::shift(Index{3}, mzv::End::First, -1) == Index{2});
  CHECK(mzv::shift(Index{2, 2}, mzv::End::First, -1) == Index{1, 2});
  // dropping to zero requires explicit permission
  CHECK_THROWS_AS(mzv::shift(Index{1, 2}, mzv::End::First, -1), mzv::Error);
  CHECK(mzv::shift(Index{1, 2}, mzv::End::First, -1, /*allow_zero=*/true) ==
        Index{0, 2});
  CHECK_THROWS_AS(mzv::shift(Index{1, 2}, mzv::End::First, -2, true),
                  mzv::Error);
}

TEST_CASE("index: compositions are nonnegative, complete, and lex-ascending") {
  const auto c22 = mzv::compositions(2, 2);
  REQUIRE(c22.size() == 3);
  CHECK(c22[0] == std::vector<int>{0, 2});
  CHECK(c22[1] == std::vector<int>{1, 1});
  CHECK(c22[2] == std::vector<int>{2, 0});

  const auto c43 = mzv::compositions(4, 3);
  CHECK(c43.size() == 15);  // C(4+3-1, 3-1)
  for (std::size_t i = 0; i < c43.size(); ++i) {
    int s = 0;
    for (int x : c43[i]) { CHECK(x >= 0); s += x; }
    CHECK(s == 4);
    if (i > 0) CHECK(c43[i - 1] < c43[i]);
  }

  CHECK(mzv::compositions(3, 1) == std::vector<std::vector<int>>{{3}});
  CHECK(mzv::compositions(0, 2) == std::vector<std::vector<int>>{{0, 0}});
}

TEST_CASE("index: b-coefficients") {
  CHECK(mzv::b_coefficient(Index{2}, {1}) == 2);
  CHECK(mzv::b_coefficient(Index{1, 2}, {0, 1}) == 2);
  CHECK(mzv::b_coefficient(Index{3}, {2}) == 6);        // C(4,2)
  CHECK(mzv::b_coefficient(Index{2, 3}, {1, 2}) == 12); // C(2,1)*C(4,2)
  CHECK(mzv::b_coefficient(Index{5}, {0}) == 1);
}

TEST_CASE("index: duality pins and involution") {
  CHECK(mzv::dual_index(Index{2}) == Index{2});
  CHECK(mzv::dual_index(Index{3}) == Index{1, 2});
  CHECK(mzv::dual_index(Index{4}) == Index{1, 1, 2});
  CHECK(mzv::dual_index(Index{1, 2}) == Index{3});
  CHECK(mzv::dual_index(Index{2, 2}) == Index{2, 2});
  CHECK(mzv::dual_index(Index{1, 2, 2}) == Index{2, 3});
  CHECK(mzv::dual_index(Index{2, 3}) == Index{1, 2, 2});

  CHECK_THROWS_AS(mzv::dual_index(Index{1, 1}), mzv::Error);
  CHECK_THROWS_AS(mzv::dual_index(Index{2, 1}), mzv::Error);
  CHECK_THROWS_AS(mzv::dual_index(Index{}), mzv::Error);

  // involution + weight preservation, exhaustively through weight 8
  int seen = 0;
  for (int w = 2; w <= 8; ++w) {
    for (int d = 1; d < w; ++d) {
      for (const auto& c : mzv::compositions(w - d, d)) {
        Index k(c.begin(), c.end());
        for (int& e : k) ++e;  // entries >= 1 summing to w
        if (!mzv::admissible(k)) continue;
        ++seen;
        const Index dk = mzv::dual_index(k);
        CHECK(mzv::admissible(dk));
        CHECK(mzv::weight(dk) == w);
        CHECK(mzv::dual_index(dk) == k);
      }
    }
  }
  CHECK(seen == 127);  // 2^{w-2} admissible indices per weight w
}

TEST_CASE("index: branch coefficients for products of single polylogarithms") {
  // k = (3): the five branches j = 0..4 (0 <= j <= 2k-2)
  {
    const auto c = mzv::ito_coefficients({0}, Index{3});
    CHECK(c.sign == 1);
    CHECK(c.zeta_factors == std::vector<int>{3});
    CHECK(c.t_power == 0);
    REQUIRE(c.lis.size() == 1);
    CHECK(c.lis[0].empty());
  }
  {
    const auto c = mzv::ito_coefficients({1}, Index{3});
    CHECK(c.sign == -1);
    CHECK(c.zeta_factors == std::vector<int>{2});
    CHECK(c.t_power == 0);
    CHECK(c.lis == std::vector<Index>{Index{1}});
  }
  {
    const auto c = mzv::ito_coefficients({2}, Index{3});  // j = k-1
    CHECK(c.sign == 1);
    CHECK(c.zeta_factors.empty());
    CHECK(c.t_power == 1);
    CHECK(c.lis == std::vector<Index>{Index{1, 1}});
  }
  {
    const auto c = mzv::ito_coefficients({3}, Index{3});  // j > k-1
    CHECK(c.sign == 1);
    CHECK(c.t_power == 0);
    CHECK(c.lis == std::vector<Index>{Index{1, 2}});
  }
  {
    const auto c = mzv::ito_coefficients({4}, Index{3});
    CHECK(c.sign == 1);
    CHECK(c.lis == std::vector<Index>{Index{2, 1}});
  }
  // tuple branch: signs and zeta factors multiply across positions
  {
    const auto c = mzv::ito_coefficients({0, 1}, Index{2, 3});
    CHECK(c.sign == -1);
    CHECK(c.zeta_factors == std::vector<int>{2, 2});
    CHECK(c.t_power == 0);
    REQUIRE(c.lis.size() == 2);
    CHECK(c.lis[0].empty());
    CHECK(c.lis[1] == Index{1});
  }
  // k = (2), j = 1 = k-1: linear-in-t branch
  {
    const auto c = mzv::ito_coefficients({1}, Index{2});
    CHECK(c.sign == -1);  // (-1)^{k-1}
    CHECK(c.t_power == 1);
    CHECK(c.lis == std::vector<Index>{Index{1}});
  }
}

TEST_CASE("index: grammar round-trips") {
  {
    const auto p = mzv::parse_index("1,2");
    CHECK(!p.is_gmt);
    CHECK(p.plain == Index{1, 2});
  }
  {
    const auto p = mzv::parse_index(" 1 , 2 ");
    CHECK(p.plain == Index{1, 2});
  }
  {
    const auto p = mzv::parse_index("{2}^3");
    CHECK(p.plain == Index{2, 2, 2});
  }
  {
    const auto p = mzv::parse_index("1,{1}^2,3");
    CHECK(p.plain == Index{1, 1, 1, 3});
  }
  {
    const auto p = mzv::parse_index("0,(1,2);3");
    REQUIRE(p.is_gmt);
    CHECK(p.gmt.blocks == std::vector<Index>{{0}, {1, 2}});
    CHECK(p.gmt.final_block == Index{3});
  }
  {
    const auto p = mzv::parse_index("(1,2),3;2,2");
    REQUIRE(p.is_gmt);
    CHECK(p.gmt.blocks == std::vector<Index>{{1, 2}, {3}});
    CHECK(p.gmt.final_block == Index{2, 2});
  }
  {
    const auto p = mzv::parse_index(";2");
    REQUIRE(p.is_gmt);
    CHECK(p.gmt.blocks.empty());
    CHECK(p.gmt.final_block == Index{2});
  }

  CHECK_THROWS_AS(mzv::parse_index("-1"), mzv::Error);
  CHECK_THROWS_AS(mzv::parse_index("1,,2"), mzv::Error);
  CHECK_THROWS_AS(mzv::parse_index("(1,2"), mzv::Error);
  CHECK_THROWS_AS(mzv::parse_index("1,2;"), mzv::Error);
  CHECK_THROWS_AS(mzv::parse_index(""), mzv::Error);

  CHECK(mzv::format_index(Index{2, 1, 3}) == "2,1,3");
  CHECK(mzv::format_index(mzv::GmtIndex{{{0}, {1, 2}}, {3}}) == "0,(1,2);3");
  for (const char* text : {"1,2", "2", "1,1,4"}) {
    const auto p = mzv::parse_index(text);
    CHECK(mzv::format_index(p.plain) == text);
  }
  for (const char* text : {"0,(1,2);3", "2,3;2", ";2,2", "(1,1),2;1,2"}) {
    const auto p = mzv::parse_index(text);
    REQUIRE(p.is_gmt);
    CHECK(mzv::format_index(p.gmt) == text);
  }
  {
    // parenthesized singleton blocks parse to the same canonical spelling
    const auto p = mzv::parse_index("(1,1),(2);1,2");
    REQUIRE(p.is_gmt);
    CHECK(mzv::format_index(p.gmt) == "(1,1),2;1,2");
  }
}
