#include <doctest.h>

#include <random>

#include "polyprime/systems.hpp"

using namespace polyprime;

namespace {

Mat S(const FieldPtr& f, std::vector<std::vector<uint32_t>> rows) {
    int r = static_cast<int>(rows.size()), c = r ? static_cast<int>(rows[0].size()) : 0;
    Mat m(f, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return m;
}

Mat random_mat(const FieldPtr& f, int r, int c, std::mt19937_64& rng) {
    Mat m(f, r, c);
    std::uniform_int_distribution<uint32_t> dist(0, static_cast<uint32_t>(f->size() - 1));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = dist(rng);
    return m;
}

}  // namespace

TEST_CASE("kalman reachability") {
    auto f2 = Field::parse("2");
    CHECK(is_reachable(S(f2, {{0}}), S(f2, {{1}})));
    CHECK_FALSE(is_reachable(Mat::identity(f2, 2), S(f2, {{1}, {1}})));

    // GF(2), n=2, m=1: exactly 24 of 64 pairs reachable
    int count = 0;
    Mat a(f2, 2, 2), b(f2, 2, 1);
    for (uint64_t ia = 0; ia < 16; ++ia)
        for (uint64_t ib = 0; ib < 4; ++ib) {
            a.assign_from_index(ia);
            b.assign_from_index(ib);
            if (is_reachable(a, b)) ++count;
        }
    CHECK(count == 24);
}

TEST_CASE("observability and minimality") {
    auto f2 = Field::parse("2");
    CHECK(is_observable(S(f2, {{0}}), S(f2, {{1}})));
    CHECK_FALSE(is_observable(S(f2, {{1, 0}, {0, 1}}), Mat(f2, 1, 2)));

    int observable = 0;
    for (uint64_t ia = 0; ia < 2; ++ia)
        for (uint64_t ic = 0; ic < 2; ++ic) {
            Mat a(f2, 1, 1), c(f2, 1, 1);
            a.assign_from_index(ia);
            c.assign_from_index(ic);
            if (is_observable(a, c)) ++observable;
        }
    CHECK(observable == 2);  // fraction 1/2 = 1 - t

    CHECK(is_minimal(StateSpace(S(f2, {{0}}), S(f2, {{1}}), S(f2, {{1}}), S(f2, {{0}}))));
    CHECK_FALSE(is_minimal(StateSpace(S(f2, {{0}}), S(f2, {{1}}), S(f2, {{0}}), S(f2, {{0}}))));

    int minimal = 0;
    for (uint64_t i = 0; i < 16; ++i) {
        Mat a(f2, 1, 1), b(f2, 1, 1), c(f2, 1, 1), d(f2, 1, 1);
        a.assign_from_index(i % 2);
        b.assign_from_index(i / 2 % 2);
        c.assign_from_index(i / 4 % 2);
        d.assign_from_index(i / 8);
        if (is_minimal(StateSpace(a, b, c, d))) ++minimal;
    }
    CHECK(minimal == 4);  // fraction 1/4
}

TEST_CASE("characteristic matrix and adjugate") {
    auto f3 = Field::parse("3");
    std::mt19937_64 rng(11);
    for (int n : {1, 2, 3, 4}) {
        Mat a = random_mat(f3, n, n, rng);
        PolyMat zia = char_matrix(a);
        Poly d = zia.det();
        CHECK(d.degree() == n);
        CHECK(d.is_monic());
        PolyMat adj = adjugate(zia);
        CHECK(adj * zia == PolyMat::scalar_diag(d, n));
        CHECK(zia * adj == PolyMat::scalar_diag(d, n));
    }
}

TEST_CASE("right coprime factorization examples") {
    auto f2 = Field::parse("2");
    MatrixFraction fr = right_coprime_factorization(
        StateSpace(S(f2, {{0}}), S(f2, {{1}}), S(f2, {{1}}), S(f2, {{0}})));
    CHECK(fr.p == PolyMat::identity(f2, 1));
    CHECK(fr.q.matrix.at(0, 0) == Poly(f2, {0, 1}));

    MatrixFraction unobservable = right_coprime_factorization(
        StateSpace(S(f2, {{0}}), S(f2, {{1}}), S(f2, {{0}}), S(f2, {{1}})));
    CHECK(unobservable.p == PolyMat::identity(f2, 1));
    CHECK(unobservable.q.matrix == PolyMat::identity(f2, 1));

    // n = 0: T = D
    auto f3 = Field::parse("3");
    MatrixFraction constant = right_coprime_factorization(
        StateSpace(Mat(f3, 0, 0), Mat(f3, 0, 2), Mat(f3, 1, 0), S(f3, {{1, 2}})));
    CHECK(constant.q.matrix == PolyMat::identity(f3, 2));
    CHECK(constant.p.at(0, 0) == Poly(f3, {1}));
    CHECK(constant.p.at(0, 1) == Poly(f3, {2}));
}

TEST_CASE("fraction invariants on random systems") {
    auto f3 = Field::parse("3");
    std::mt19937_64 rng(13);
    int minimal_seen = 0;
    for (int it = 0; it < 200; ++it) {
        StateSpace sys(random_mat(f3, 2, 2, rng), random_mat(f3, 2, 1, rng),
                       random_mat(f3, 1, 2, rng), random_mat(f3, 1, 1, rng));
        MatrixFraction fr = right_coprime_factorization(sys);
        CHECK(are_right_coprime({fr.p, fr.q.matrix}));
        CHECK(fr.q.matrix.det().degree() <= 2);
        // column-degree bound deg_j P <= deg_j Q
        auto dq = column_degrees(fr.q.matrix);
        auto dp = column_degrees(fr.p);
        for (size_t j = 0; j < dq.size(); ++j) CHECK(dp[j] <= dq[j]);
        if (is_minimal(sys)) {
            ++minimal_seen;
            CHECK(fr.q.matrix.det().degree() == 2);
        }
    }
    CHECK(minimal_seen > 0);

    // B = 0: McMillan degree 0
    StateSpace dead(random_mat(f3, 2, 2, rng), Mat(f3, 2, 1), random_mat(f3, 1, 2, rng), Mat(f3, 1, 1));
    CHECK(right_coprime_factorization(dead).q.matrix.det().degree() == 0);
}

TEST_CASE("hermite denominator") {
    auto f2 = Field::parse("2");
    CHECK(denominator_in_hermite_form(S(f2, {{0}}), S(f2, {{1}})).matrix.at(0, 0) == Poly(f2, {0, 1}));
    CHECK(denominator_in_hermite_form(S(f2, {{1}}), S(f2, {{1}})).matrix.at(0, 0) == Poly(f2, {1, 1}));
    CHECK(denominator_in_hermite_form(Mat(f2, 0, 0), Mat(f2, 0, 2)).matrix == PolyMat::identity(f2, 2));
}

TEST_CASE("parallel connection") {
    auto f2 = Field::parse("2");
    auto node = std::pair<Mat, Mat>{S(f2, {{0}}), S(f2, {{1}})};
    StateSpace two = parallel_connect({node, node});
    CHECK(two.n() == 2);
    CHECK(two.a.is_zero());
    CHECK(two.b.at(0, 0) == 1);
    CHECK(two.b.at(1, 0) == 1);
    CHECK_FALSE(parallel_reachable_via_criterion({node, node}));
    CHECK_FALSE(is_reachable(two.a, two.b));

    auto other = std::pair<Mat, Mat>{S(f2, {{1}}), S(f2, {{1}})};
    CHECK(parallel_reachable_via_criterion({node, other}));
    StateSpace mixed = parallel_connect({node, other});
    CHECK(is_reachable(mixed.a, mixed.b));

    CHECK(parallel_reachable_via_criterion({node}));
    CHECK_THROWS_AS(parallel_connect({node, {S(f2, {{0}}), Mat(f2, 1, 2)}}), std::invalid_argument);
}

TEST_CASE("criterion agrees with direct kalman test") {
    auto f3 = Field::parse("3");
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> nN(2, 3), nn(1, 2), nm(1, 2);
    for (int it = 0; it < 1000; ++it) {
        int N = nN(rng), m = nm(rng);
        std::vector<std::pair<Mat, Mat>> nodes;
        for (int i = 0; i < N; ++i) {
            int n = nn(rng);
            nodes.emplace_back(random_mat(f3, n, n, rng), random_mat(f3, n, m, rng));
        }
        StateSpace sys = parallel_connect(nodes);
        CHECK(parallel_reachable_via_criterion(nodes) == is_reachable(sys.a, sys.b));
    }
}

TEST_CASE("reachability is preserved across the GL orbit") {
    auto f2 = Field::parse("2");
    std::mt19937_64 rng(29);
    // a reachable pair over GF(2), n = 2
    Mat a = S(f2, {{0, 1}, {1, 1}}), b = S(f2, {{1}, {0}});
    REQUIRE(is_reachable(a, b));
    PolyMat denom = denominator_in_hermite_form(a, b).matrix;
    int count = 0;
    Mat t(f2, 2, 2);
    for (uint64_t i = 0; i < 16; ++i) {
        t.assign_from_index(i);
        if (t.rank() != 2) continue;
        ++count;
        Mat tinv = t.inverse();
        Mat a2 = t * a * tinv, b2 = t * b;
        CHECK(is_reachable(a2, b2));
        CHECK(denominator_in_hermite_form(a2, b2).matrix == denom);
    }
    CHECK(count == 6);  // |GL_2(GF(2))|
}
