#include <doctest.h>

#include <random>
#include <set>

#include "polyprime/field.hpp"

using namespace polyprime;

TEST_CASE("field construction") {
    auto f2 = Field::make(2);
    CHECK(f2->size() == 2);
    CHECK(f2->characteristic() == 2);
    CHECK(f2->degree() == 1);

    auto f4 = Field::make(2, 2, std::vector<uint32_t>{1, 1, 1});  // z^2+z+1
    CHECK(f4->size() == 4);

    CHECK_THROWS_AS(Field::make(4), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 2, std::vector<uint32_t>{1, 0, 1}), std::invalid_argument);  // (z+1)^2
    CHECK_THROWS_AS(Field::make(2, 1, std::vector<uint32_t>{1, 1}), std::invalid_argument);
}

TEST_CASE("canonical modulus is deterministic and irreducible") {
    auto a = Field::make(2, 2);
    auto b = Field::make(2, 2);
    CHECK(a->modulus() == b->modulus());
    CHECK(a->modulus() == std::vector<uint32_t>{1, 1, 1});  // least irreducible quadratic
    auto f8 = Field::make(2, 3);
    CHECK(f8->size() == 8);
    CHECK(f8->modulus().size() == 4);
}

TEST_CASE("basic arithmetic") {
    auto f2 = Field::make(2);
    CHECK(f2->add(1, 1) == 0);

    auto f4 = Field::make(2, 2);  // modulus z^2+z+1; element 2 = residue of z
    CHECK(f4->mul(2, 2) == 3);    // z^2 = z+1

    auto f5 = Field::make(5);
    CHECK(f5->inv(2) == 3);
    CHECK_THROWS_AS(f5->inv(0), std::domain_error);
}

TEST_CASE("field parse") {
    CHECK(Field::parse("3")->size() == 3);
    CHECK(Field::parse("2^2")->size() == 4);
    CHECK(Field::parse("2^2")->name() == "2^2");
    CHECK_THROWS_AS(Field::parse("four"), std::invalid_argument);
    CHECK_THROWS_AS(Field::parse("4"), std::invalid_argument);
}

TEST_CASE("elements enumeration") {
    for (auto spec : {std::pair<uint64_t, unsigned>{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
        auto f = Field::make(spec.first, spec.second);
        auto elems = f->elements();
        CHECK(elems.size() == f->size());
        CHECK(elems[0] == 0);
        CHECK(std::set<uint32_t>(elems.begin(), elems.end()).size() == f->size());
    }
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(12345);
    for (auto spec : {std::pair<uint64_t, unsigned>{2, 1}, {5, 1}, {2, 3}, {3, 2}, {7, 2}}) {
        auto f = Field::make(spec.first, spec.second);
        std::uniform_int_distribution<uint32_t> dist(0, static_cast<uint32_t>(f->size() - 1));
        for (int it = 0; it < 50; ++it) {
            uint32_t a = dist(rng), b = dist(rng), c = dist(rng);
            CHECK(f->add(a, b) == f->add(b, a));
            CHECK(f->mul(a, b) == f->mul(b, a));
            CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
            CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
        }
    }
}

TEST_CASE("extension evaluation") {
    auto f2 = Field::make(2);
    auto f4 = Field::make(2, 2);
    // z^2+z+1 at the residue of z in GF(4)
    CHECK(extension_eval(*f2, {1, 1, 1}, *f4, 2) == 0);
    CHECK(extension_eval(*f2, {0, 1}, *f2, 1) == 1);
    CHECK(extension_eval(*f2, {1, 0, 1}, *f2, 1) == 0);
    CHECK_THROWS_AS(extension_eval(*f2, {1}, *Field::make(3), 1), std::invalid_argument);
}
