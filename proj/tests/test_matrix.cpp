#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ramalift/graph.hpp"
#include "ramalift/matrix.hpp"
#include "support/test_graphs.hpp"

using namespace ramalift;
namespace ts = testsupport;

namespace {

IntPoly P(std::vector<long long> c) {
    std::vector<Int> v(c.begin(), c.end());
    return IntPoly(std::move(v));
}

IntMatrix random_symmetric(std::mt19937& rng, int n, int lim) {
    std::uniform_int_distribution<int> entry(-lim, lim);
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Int e(entry(rng));
            m.at(i, j) = e;
            m.at(j, i) = e;
        }
    return m;
}

}  // namespace

TEST_CASE("characteristic polynomial of fixed matrices", "[matrix]") {
    IntMatrix id2(2);
    id2.at(0, 0) = 1;
    id2.at(1, 1) = 1;
    CHECK(char_poly(id2) == P({1, -2, 1}));  // (x-1)^2

    CHECK(char_poly(ts::k2().adjacency_matrix()) == P({-1, 0, 1}));
    CHECK(char_poly(ts::k33().adjacency_matrix()) == P({0, 0, 0, 0, -9, 0, 1}));
    CHECK(char_poly(IntMatrix(0)) == P({1}));
    IntMatrix one(1);
    one.at(0, 0) = 5;
    CHECK(char_poly(one) == P({-5, 1}));
}

TEST_CASE("characteristic polynomial agrees with cofactor expansion", "[matrix]") {
    std::mt19937 rng(11);
    for (int n = 1; n <= 5; ++n)
        for (int t = 0; t < 20; ++t) {
            IntMatrix m = random_symmetric(rng, n, 4);
            CHECK(char_poly(m) == ts::naive_charpoly(m));
        }
    // Non-symmetric input is fine too: the algorithm never assumes symmetry.
    IntMatrix a(2);
    a.at(0, 1) = 3;
    a.at(1, 0) = -2;  // eigenvalues +-i*sqrt(6): char = x^2 + 6
    CHECK(char_poly(a) == P({6, 0, 1}));
}

TEST_CASE("both arithmetic paths agree", "[matrix]") {
    std::mt19937 rng(13);
    for (int t = 0; t < 20; ++t) {
        int n = 2 + t % 7;
        IntMatrix m = random_symmetric(rng, n, 1);
        REQUIRE(detail::small_entries(m));
        auto entry_int = [&](int i, int j) { return static_cast<__int128>(m.at(i, j)); };
        auto entry_big = [&](int i, int j) { return m.at(i, j); };
        auto desc128 = detail::berkowitz_descending<__int128>(n, entry_int);
        auto descbig = detail::berkowitz_descending<Int>(n, entry_big);
        REQUIRE(desc128.size() == descbig.size());
        for (size_t i = 0; i < descbig.size(); ++i)
            CHECK(Int(static_cast<long long>(desc128[i])) == descbig[i]);
    }
}

TEST_CASE("int128 overflow precheck is conservative at corpus scale", "[matrix]") {
    // 24-vertex 3-regular matrices must stay on the fast path...
    Graph base = Graph::complete_bipartite(3, 3);
    Signing s{std::vector<int>(9, 1)};
    Graph lift = two_lift(base, s);
    Graph lift2 = two_lift(lift, Signing{std::vector<int>(18, 1)});
    CHECK(detail::fits_int128(lift2.adjacency_matrix()));
    // ...while a large dense all-ones matrix must not.
    IntMatrix dense(36);
    for (int i = 0; i < 36; ++i)
        for (int j = 0; j < 36; ++j) dense.at(i, j) = (i == j) ? 0 : 1;
    CHECK_FALSE(detail::fits_int128(dense));
    IntMatrix big(40);
    CHECK_FALSE(detail::fits_int128(big));  // n > 36 always declines
}

TEST_CASE("rational determinant and linear solve", "[matrix]") {
    IntMatrix m(2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(1, 1) = 3;
    RatMatrix rm(m);
    CHECK(rm.det() == 5);
    auto x = rm.solve({Rat(1), Rat(2)});
    CHECK(x[0] == Rat(1, 5));
    CHECK(x[1] == Rat(3, 5));

    RatMatrix sing(2);
    sing.at(0, 0) = 1;
    sing.at(0, 1) = 2;
    sing.at(1, 0) = 2;
    sing.at(1, 1) = 4;
    CHECK(sing.det() == 0);
    CHECK_THROWS_AS(sing.solve({Rat(1), Rat(1)}), std::invalid_argument);

    // det via Gaussian elimination matches the characteristic polynomial's
    // constant term: det(A) = (-1)^n * char(0).
    std::mt19937 rng(17);
    for (int t = 0; t < 10; ++t) {
        IntMatrix a = random_symmetric(rng, 4, 5);
        IntPoly c = char_poly(a);
        Rat d = RatMatrix(a).det();
        CHECK(d == Rat(c.at(0)) * (4 % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("principal submatrix", "[matrix]") {
    IntMatrix m = ts::k33().adjacency_matrix();
    IntMatrix s = m.submatrix({0, 3});
    CHECK(s.size() == 2);
    CHECK(s.at(0, 1) == 1);  // edge 0-3 survives
    CHECK(s.at(0, 0) == 0);
    CHECK(char_poly(m.submatrix({0, 1, 2})) == P({0, 0, 0, 1}));  // empty side: x^3
}
