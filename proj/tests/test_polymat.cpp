#include <doctest.h>

#include <random>

#include "polyprime/polymat.hpp"

using namespace polyprime;

namespace {

PolyMat M(const FieldPtr& f, std::vector<std::vector<std::vector<uint32_t>>> rows) {
    int r = static_cast<int>(rows.size()), c = static_cast<int>(rows[0].size());
    PolyMat m(f, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = Poly(f, rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    return m;
}

PolyMat random_polymat(const FieldPtr& f, int rows, int cols, int maxdeg, std::mt19937_64& rng) {
    PolyMat m(f, rows, cols);
    std::uniform_int_distribution<uint32_t> coeff(0, static_cast<uint32_t>(f->size() - 1));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            std::vector<uint32_t> c(static_cast<size_t>(maxdeg) + 1);
            for (auto& v : c) v = coeff(rng);
            m.at(i, j) = Poly(f, std::move(c));
        }
    return m;
}

PolyMat random_nonsingular(const FieldPtr& f, int n, int maxdeg, std::mt19937_64& rng) {
    for (;;) {
        PolyMat m = random_polymat(f, n, n, maxdeg, rng);
        if (m.is_nonsingular()) return m;
    }
}

// Product of <= 5 elementary column operations.
PolyMat random_unimodular(const FieldPtr& f, int n, std::mt19937_64& rng) {
    PolyMat u = PolyMat::identity(f, n);
    std::uniform_int_distribution<int> col(0, n - 1), deg(0, 2), ops(1, 5);
    std::uniform_int_distribution<uint32_t> coeff(0, static_cast<uint32_t>(f->size() - 1));
    int count = ops(rng);
    for (int k = 0; k < count; ++k) {
        int a = col(rng), b = col(rng);
        if (a == b) {
            uint32_t s = coeff(rng);
            if (s == 0) s = 1;
            for (int i = 0; i < n; ++i) u.at(i, a) = u.at(i, a) * s;
            continue;
        }
        Poly c = Poly::monomial(f, deg(rng), coeff(rng));
        for (int i = 0; i < n; ++i) u.at(i, a) = u.at(i, a) + c * u.at(i, b);
    }
    return u;
}

}  // namespace

TEST_CASE("determinant and unimodularity") {
    auto f2 = Field::parse("2");
    CHECK(PolyMat::identity(f2, 3).det().is_one());
    CHECK(M(f2, {{{0, 1}, {0}}, {{0}, {1}}}).det() == Poly(f2, {0, 1}));
    CHECK(M(f2, {{{0, 1}, {1}}, {{1}, {0, 1}}}).det() == Poly(f2, {1, 0, 1}));  // z^2+1

    CHECK(PolyMat::identity(f2, 2).is_unimodular());
    CHECK(M(f2, {{{1}, {0, 1}}, {{0}, {1}}}).is_unimodular());
    CHECK_FALSE(M(f2, {{{0, 1}, {0}}, {{0}, {1}}}).is_unimodular());
}

TEST_CASE("bareiss matches cofactor expansion") {
    auto f3 = Field::parse("3");
    std::mt19937_64 rng(99);
    for (int it = 0; it < 20; ++it) {
        PolyMat a = random_polymat(f3, 5, 5, 1, rng);
        // 5x5 goes through fraction-free elimination; check against Laplace
        // expansion over the first row using 4x4 cofactor determinants.
        Poly expect(f3);
        for (int j = 0; j < 5; ++j) {
            if (a.at(0, j).is_zero()) continue;
            PolyMat sub(f3, 4, 4);
            for (int i = 1; i < 5; ++i)
                for (int c = 0, cc = 0; c < 5; ++c) {
                    if (c == j) continue;
                    sub.at(i - 1, cc++) = a.at(i, c);
                }
            Poly term = a.at(0, j) * sub.det();
            expect = (j % 2 == 0) ? expect + term : expect - term;
        }
        CHECK(a.det() == expect);
    }
}

TEST_CASE("column degrees and properness") {
    auto f2 = Field::parse("2");
    PolyMat h = M(f2, {{{0, 1}, {1}}, {{1}, {0, 1}}});  // [[z,1],[1,z]]
    CHECK(column_degrees(h) == std::vector<int>{1, 1});
    Mat hc = hc_matrix(h);
    CHECK(hc.at(0, 0) == 1);
    CHECK(hc.at(0, 1) == 0);
    CHECK(hc.at(1, 0) == 0);
    CHECK(hc.at(1, 1) == 1);
    CHECK(is_column_proper(h));

    CHECK_FALSE(is_column_proper(M(f2, {{{0, 1}, {0, 1}}, {{1}, {1}}})));  // [[z,z],[1,1]]
    CHECK(is_column_proper(PolyMat::identity(f2, 3)));
}

TEST_CASE("hermite form examples") {
    auto f2 = Field::parse("2");
    std::mt19937_64 rng(5);

    auto [h, u] = hermite_form(M(f2, {{{0, 1}, {0}}, {{1}, {1}}}));  // [[z,0],[1,1]]
    CHECK(h.matrix == M(f2, {{{0, 1}, {0}}, {{0}, {1}}}));
    CHECK(u.is_unimodular());

    for (int it = 0; it < 20; ++it) {
        PolyMat q = random_unimodular(f2, 2, rng);
        CHECK(hermite_form(q).first.matrix == PolyMat::identity(f2, 2));
    }

    PolyMat diag = M(f2, {{{1, 1}, {0}}, {{0}, {0, 0, 1}}});
    CHECK(hermite_form(diag).first.matrix == diag);

    CHECK_THROWS_AS(hermite_form(M(f2, {{{0, 1}, {0, 1}}, {{0, 1}, {0, 1}}})), std::domain_error);
}

TEST_CASE("hermite invariants on random matrices") {
    auto f3 = Field::parse("3");
    std::mt19937_64 rng(17);
    for (int it = 0; it < 100; ++it) {
        PolyMat q = random_nonsingular(f3, 3, 1, rng);
        auto [h, u] = hermite_form(q);
        CHECK(u.is_unimodular());
        CHECK(q * u == h.matrix);
        for (int i = 0; i < 3; ++i) {
            CHECK(h.matrix.at(i, i).is_monic());
            for (int j = i + 1; j < 3; ++j) CHECK(h.matrix.at(i, j).is_zero());
            for (int j = 0; j < i; ++j)
                CHECK(h.matrix.at(i, j).degree() < h.matrix.at(i, i).degree());
        }
        // det degree invariance and idempotence
        CHECK(h.matrix.det().degree() == q.det().degree());
        CHECK(hermite_form(h.matrix).first.matrix == h.matrix);
    }
}

TEST_CASE("hermite and kh forms are unimodular invariants") {
    auto f3 = Field::parse("3");
    std::mt19937_64 rng(23);
    for (int it = 0; it < 100; ++it) {
        PolyMat q = random_nonsingular(f3, 2, 2, rng);
        PolyMat qu = q * random_unimodular(f3, 2, rng);
        CHECK(hermite_form(q).first.matrix == hermite_form(qu).first.matrix);
        CHECK(kronecker_hermite_form(q).first.matrix == kronecker_hermite_form(qu).first.matrix);
    }
}

TEST_CASE("kronecker-hermite form") {
    auto f2 = Field::parse("2");
    auto f3 = Field::parse("3");
    std::mt19937_64 rng(31);

    for (int it = 0; it < 20; ++it) {
        PolyMat q = random_unimodular(f3, 2, rng);
        CHECK(kronecker_hermite_form(q).first.matrix == PolyMat::identity(f3, 2));
    }

    PolyMat zdiag = M(f2, {{{0, 1}, {0}}, {{0}, {0, 1}}});
    CHECK(kronecker_hermite_form(zdiag).first.matrix == zdiag);

    // uniqueness: reducing the hermite form reproduces the direct KH form
    for (int it = 0; it < 200; ++it) {
        PolyMat q = random_nonsingular(f3, 2, 1, rng);
        if (q.det().degree() > 3) continue;
        PolyMat via_hermite = kronecker_hermite_form(hermite_form(q).first.matrix).first.matrix;
        CHECK(via_hermite == kronecker_hermite_form(q).first.matrix);
    }
}

TEST_CASE("kronecker-hermite invariants") {
    auto f3 = Field::parse("3");
    std::mt19937_64 rng(37);
    for (int it = 0; it < 100; ++it) {
        PolyMat q = random_nonsingular(f3, 3, 1, rng);
        auto [k, u] = kronecker_hermite_form(q);
        CHECK(u.is_unimodular());
        CHECK(q * u == k.matrix);
        CHECK(k.matrix.det().degree() == q.det().degree());
        CHECK(is_column_proper(k.matrix));
        for (int i = 0; i < 3; ++i) {
            CHECK(k.matrix.at(i, i).is_monic());
            int nu = k.matrix.at(i, i).degree();
            for (int j = 0; j < 3; ++j) {
                if (j == i) continue;
                CHECK(k.matrix.at(i, j).degree() < nu);  // row dominance
                int dji = k.matrix.at(j, i).degree();
                if (j < i) CHECK(dji < nu);  // strict above the diagonal
                else CHECK(dji <= nu);
            }
        }
    }
}

TEST_CASE("minors") {
    auto f2 = Field::parse("2");
    PolyMat a = M(f2, {{{0, 1}, {1}}, {{1}, {0, 1}}});
    auto m2 = minors(a, 2);
    REQUIRE(m2.size() == 1);
    CHECK(m2[0] == a.det());
    auto m1 = minors(a, 1);
    REQUIRE(m1.size() == 4);
    CHECK(m1[0] == a.at(0, 0));
    CHECK(m1[3] == a.at(1, 1));

    PolyMat stacked = M(f2, {{{1}, {0}}, {{0}, {1}}, {{0}, {0}}});
    auto ms = minors(stacked, 2);
    REQUIRE(ms.size() == 3);
    CHECK(ms[0].is_one());
    CHECK(ms[1].is_zero());
    CHECK(ms[2].is_zero());
    CHECK_THROWS_AS(minors(a, 3), std::invalid_argument);
}

TEST_CASE("primeness") {
    auto f2 = Field::parse("2");
    CHECK(is_left_prime(M(f2, {{{0, 1}, {1, 1}}})));
    CHECK_FALSE(is_left_prime(M(f2, {{{0, 1}, {0, 0, 1}}})));
    CHECK(is_right_prime(M(f2, {{{1}}, {{0, 1}}})));
    CHECK_THROWS_AS(is_left_prime(M(f2, {{{1}}, {{0, 1}}})), std::invalid_argument);
    CHECK_FALSE(is_left_prime(M(f2, {{{0}, {0}}})));  // all minors zero
}

TEST_CASE("coprimeness") {
    auto f2 = Field::parse("2");
    CHECK(are_left_coprime({M(f2, {{{0, 1}}}), M(f2, {{{1, 1}}})}));
    CHECK_FALSE(are_left_coprime({M(f2, {{{0, 1}}}), M(f2, {{{0, 1}}})}));
    CHECK_THROWS_AS(are_left_coprime({M(f2, {{{1}}}), M(f2, {{{1}}, {{1}}})}), std::invalid_argument);
}

TEST_CASE("pairwise but not mutually coprime") {
    auto f2 = Field::parse("2");
    PolyMat d1 = M(f2, {{{1}, {0}}, {{1}, {0, 1}}});
    PolyMat d2 = M(f2, {{{1}, {0}}, {{0}, {0, 1}}});
    PolyMat d3 = M(f2, {{{0, 1}, {0}}, {{0}, {1}}});
    CHECK(are_left_coprime({d1, d2}));
    CHECK(are_left_coprime({d1, d3}));
    CHECK(are_left_coprime({d2, d3}));
    CHECK_FALSE(mutually_left_coprime({d1, d2, d3}));
    // the 4x6 block matrix loses rank at z = 0
    PolyMat big = mutual_coprimeness_matrix({d1, d2, d3});
    CHECK(big.eval(0).rank() < 4);
}

TEST_CASE("mutual coprimeness properties") {
    auto f3 = Field::parse("3");
    std::mt19937_64 rng(41);
    int checked = 0;
    for (int it = 0; checked < 500 && it < 5000; ++it) {
        PolyMat a = random_polymat(f3, 2, 2, 1, rng), b = random_polymat(f3, 2, 2, 1, rng);
        if (!a.is_nonsingular() || !b.is_nonsingular()) continue;
        ++checked;
        CHECK(mutually_left_coprime({a, b}) == are_left_coprime({a, b}));
    }
    CHECK(checked == 500);

    // permutation invariance and mutual => pairwise on random triples
    for (int it = 0; it < 60; ++it) {
        PolyMat a = random_nonsingular(f3, 2, 1, rng);
        PolyMat b = random_nonsingular(f3, 2, 1, rng);
        PolyMat c = random_nonsingular(f3, 2, 1, rng);
        bool mut = mutually_left_coprime({a, b, c});
        CHECK(mut == mutually_left_coprime({c, a, b}));
        CHECK(mut == mutually_left_coprime({b, c, a}));
        if (mut) {
            CHECK(are_left_coprime({a, b}));
            CHECK(are_left_coprime({a, c}));
            CHECK(are_left_coprime({b, c}));
        }
    }

    std::vector<PolyMat> ids(3, PolyMat::identity(f3, 2));
    CHECK(mutually_left_coprime(ids));
    CHECK_THROWS_AS(mutually_left_coprime({PolyMat::identity(f3, 2)}), std::invalid_argument);
}

TEST_CASE("gcrd") {
    auto f2 = Field::parse("2");
    auto z = M(f2, {{{0, 1}}});
    CHECK(gcrd(z, z).r == z);
    CHECK(gcrd(z, M(f2, {{{1}}})).r == M(f2, {{{1}}}));
    CHECK(gcrd(M(f2, {{{0, 1, 1}}}), M(f2, {{{0, 0, 1}}})).r == z);  // gcd(z^2+z, z^2) = z

    std::mt19937_64 rng(43);
    auto f3 = Field::parse("3");
    for (int it = 0; it < 50; ++it) {
        PolyMat a = random_nonsingular(f3, 2, 1, rng);
        PolyMat b = random_polymat(f3, 2, 2, 1, rng);
        GcrdResult g = gcrd(a, b);
        // cofactor identity and exact divisibility
        CHECK(g.la * a + g.lb * b == g.r);
        CHECK(exact_right_divide(a, g.r) * g.r == a);
        CHECK(exact_right_divide(b, g.r) * g.r == b);
        for (int i = 0; i < 2; ++i) {
            CHECK(g.r.at(i, i).is_monic());
            for (int j = 0; j < i; ++j) CHECK(g.r.at(i, j).is_zero());
        }
    }
}

TEST_CASE("exact right division") {
    auto f2 = Field::parse("2");
    PolyMat r = M(f2, {{{1, 1}, {0}}, {{0}, {1}}});
    CHECK(exact_right_divide(r, r) == PolyMat::identity(f2, 2));
    CHECK(exact_right_divide(M(f2, {{{0, 0, 1}}}), M(f2, {{{0, 1}}})) == M(f2, {{{0, 1}}}));
    CHECK(exact_right_divide(M(f2, {{{1, 0, 1}, {0}}}), r) == M(f2, {{{1, 1}, {0}}}));
    CHECK_THROWS_AS(exact_right_divide(M(f2, {{{1}}}), M(f2, {{{0, 1}}})), std::domain_error);
}

TEST_CASE("left prime oracle") {
    auto f2 = Field::parse("2");
    CHECK(left_prime_oracle(M(f2, {{{0, 1}, {1, 1}}})));
    CHECK_FALSE(left_prime_oracle(M(f2, {{{1, 1, 1}, {1, 1, 1}}})));  // root in GF(4)
    CHECK_FALSE(left_prime_oracle(M(f2, {{{0, 1}, {0, 0, 1}}})));
    CHECK_THROWS_AS(left_prime_oracle(M(Field::parse("2^2"), {{{1}, {1}}})), std::invalid_argument);
}

TEST_CASE("oracle agrees with the minor-gcd test") {
    auto f2 = Field::parse("2");
    // exhaustive 1x2 family with entry degrees <= 2
    for (uint64_t i = 0; i < 8; ++i)
        for (uint64_t j = 0; j < 8; ++j) {
            PolyMat m(f2, 1, 2);
            m.at(0, 0) = poly_from_index(f2, 3, i);
            m.at(0, 1) = poly_from_index(f2, 3, j);
            CHECK(is_left_prime(m) == left_prime_oracle(m));
        }
    auto f3 = Field::parse("3");
    std::mt19937_64 rng(47);
    for (int it = 0; it < 500; ++it) {
        PolyMat m = random_polymat(f3, 2, 3, 2, rng);
        CHECK(is_left_prime(m) == left_prime_oracle(m));
    }
}
