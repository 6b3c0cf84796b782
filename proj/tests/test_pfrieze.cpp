#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "frieze/pfrieze.hpp"
#include "oracles.hpp"

using namespace frieze;

TEST_CASE("phi positions") {
    CHECK(phi(2, 5, 1, 3).canonical == Subset{1, 3});
    CHECK(phi(2, 5, 0, 4).canonical == Subset{3, 5});
    for (int r = 0; r < 6; ++r) CHECK(phi(3, 6, r, 1).sign == 0);
}

TEST_CASE("phi is periodic in r and has zero and frozen rows where expected") {
    for (int k = 2; k <= 4; ++k)
        for (int n = 2 * k; n <= 2 * k + 3; ++n)
            for (int r = 0; r < n; ++r)
                for (int m = 1; m <= n + k - 1; ++m) {
                    auto a = phi(k, n, r, m), b = phi(k, n, r + n, m);
                    REQUIRE(a.canonical == b.canonical);
                    REQUIRE(a.sign == b.sign);
                    const int mr = reduce(m, n);
                    // zero rows: m' falls inside the window [r']^{k-1}
                    const bool zero = (m <= k - 1) || (m >= n + 1);
                    REQUIRE((a.sign == 0) == zero);
                    if (!zero) REQUIRE(is_consecutive(a.canonical, n) == (mr == k || mr == n));
                }
}

TEST_CASE("SL_k structure at sample points") {
    const std::vector<std::pair<int, int>> sizes{{2, 5}, {2, 7}, {3, 6}, {3, 7}, {4, 8}, {4, 9}};
    for (auto [k, n] : sizes) {
        auto P = sample_point(k, n, 1234);
        auto rep = verify_slk_structure(P);
        INFO("k=" << k << " n=" << n);
        CHECK(rep.ok());
        CHECK(rep.k_diamonds == n * (n - k + 1));
        CHECK(rep.k1_diamonds == n * (n - k - 1));
    }
    CHECK(verify_slk_structure(sample_point(3, 6)).ok());
}

TEST_CASE("(3,6) row below the top frozen row") {
    const std::vector<Subset> want{{1, 4, 6}, {1, 2, 5}, {2, 3, 6}, {1, 3, 4}, {2, 4, 5}, {3, 5, 6}};
    for (int i = 0; i < 6; ++i) CHECK(phi(3, 6, i == 0 ? 6 : i, 5).canonical == want[i]);
}

TEST_CASE("degenerate point raises a genericity error") {
    GrassmannPoint P = vandermonde_point(2, {1, 2, 2, 4, 5});
    CHECK_THROWS_AS(verify_slk_structure(P), GenericityError);
}

namespace {

void check_cluster(int k, int n, const std::vector<Subset>& c) {
    CHECK(static_cast<int>(c.size()) == (k - 1) * (n - k - 1));
    for (size_t i = 0; i < c.size(); ++i) {
        CHECK(is_almost_consecutive(c[i], n));
        CHECK_FALSE(is_consecutive(c[i], n));
        for (size_t j = 0; j < c.size(); ++j) {
            if (i != j) CHECK(c[i] != c[j]);
            CHECK_FALSE(oracle::crossing(c[i], c[j], n));
        }
    }
}

}  // namespace

TEST_CASE("non-crossing clusters exist for small k and n") {
    for (int k = 2; k <= 3; ++k)
        for (int n = 2 * k; n <= 8; ++n) {
            auto c = find_noncrossing_cluster(k, n);
            INFO("k=" << k << " n=" << n);
            REQUIRE(c.has_value());
            check_cluster(k, n, *c);
        }
    auto c46 = find_noncrossing_cluster(4, 6);
    REQUIRE(c46.has_value());
    check_cluster(4, 6, *c46);
}

TEST_CASE("the (4,6) cluster from the text is valid and so are the (3,n) families") {
    check_cluster(4, 6, {{1, 2, 3, 5}, {1, 3, 4, 5}, {1, 3, 5, 6}});
    for (int n = 6; n <= 9; ++n) {
        std::vector<Subset> fam;
        for (int m = 4; m <= n - 1; ++m) fam.push_back({1, 2, m});
        for (int s = 3; s <= n - 2; ++s) fam.push_back({1, s, s + 1});
        check_cluster(3, n, fam);
    }
}

TEST_CASE("(4,7) has no cluster of size 6") { CHECK_FALSE(find_noncrossing_cluster(4, 7).has_value()); }

TEST_CASE("labels and rendering") {
    CHECK(subset_label({1, 3, 5}) == "135");
    CHECK(subset_label({1, 3, 10}) == "1,3,10");
    auto s = render_plucker(2, 5, 5);
    CHECK(s.rfind("k=2 n=5\n", 0) == 0);
    // 6 rows after the header
    CHECK(std::count(s.begin(), s.end(), '\n') == 7);
    CHECK(s.find("13") != std::string::npos);
    CHECK(s.find("35") != std::string::npos);
}
