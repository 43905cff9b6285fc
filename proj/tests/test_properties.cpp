#include <doctest.h>

#include <random>

#include "cmc/catalog.hpp"
#include "cmc/properties.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cmc;

namespace {

void require_clean(const PropertyResult& r) {
    CAPTURE(r.name);
    CAPTURE(r.counterexample);
    CHECK(r.cases > 0);
    CHECK(r.failures == 0);
}

} // namespace

TEST_CASE("kernel properties over a large prime") {
    const Field F = Field::prime(32003);
    for (auto prop : {property_membership, property_fitting_invariance, property_saturation, property_syzygies,
                      property_factorization, property_parallel_serial})
        require_clean(prop(40, 1, F));
}

TEST_CASE("kernel properties in small characteristic and over Q") {
    for (const auto& F : support::small_fields()) {
        CAPTURE(F.name());
        for (auto prop : {property_membership, property_saturation, property_syzygies, property_factorization})
            require_clean(prop(10, 2, F));
    }
}

TEST_CASE("property runs are reproducible for a seed") {
    const Field F = Field::prime(32003);
    auto a = property_membership(15, 99, F), b = property_membership(15, 99, F);
    CHECK(a.failures == b.failures);
    CHECK(a.counterexample == b.counterexample);
}

TEST_CASE("linear algebra helpers agree with the independent oracle") {
    auto R = support::ring(Field::prime(32003), {"x", "y", "z"});
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Polynomial> gens{random_form(R, 2, rng, 3), random_form(R, 3, rng, 3)};
        const int d = 3 + trial % 3;
        CHECK(linear_algebra_hilbert_function(gens, d) == oracle::hilbert_function(R, gens, d));
        auto f = random_form(R, d - 2, rng, 2) * gens[0] + (trial % 2 ? random_form(R, d, rng, 1) : Polynomial(R));
        CHECK(linear_algebra_member(f, gens) == oracle::member(f, gens));
    }
}

TEST_CASE("the oracle itself: interpolation and elimination") {
    CHECK(oracle::interpolate({{1, 4}, {2, 7}, {3, 10}}) == std::vector<mpq_class>{1, 3});
    CHECK(oracle::interpolate({{0, 1}, {1, 3}, {2, 6}}) == std::vector<mpq_class>{1, mpq_class(3, 2), mpq_class(1, 2)});
    const Field Q = Field::rationals();
    std::vector<oracle::Row> rows{{Q.from_int(1), Q.from_int(2)}, {Q.from_int(2), Q.from_int(4)}};
    CHECK(oracle::rank(rows, Q) == 1);
    auto k = oracle::left_kernel(rows, 2, Q);
    REQUIRE(k.size() == 1);
    CHECK(Q.equal(Q.add(Q.mul(k[0][0], Q.from_int(1)), Q.mul(k[0][1], Q.from_int(2))), Q.zero()));
    CHECK(oracle::monomials(3, 2).size() == 6);
}
