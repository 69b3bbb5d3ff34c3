#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mnv/numtheory.hpp"
#include "mnv/poly.hpp"

using namespace mnv;

TEST_CASE("primality and factoring")
{
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK(is_prime(99991));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));   // Carmichael
    CHECK_FALSE(is_prime(999999));
    auto f = factorize(720);
    CHECK(f == std::vector<std::pair<u64, int>>{{2, 4}, {3, 2}, {5, 1}});
}

TEST_CASE("multiplicative order")
{
    CHECK(order_mod(3, 13) == 3); // 27 = 1 mod 13
    CHECK(order_mod(3, 7) == 6);
    CHECK(order_mod(2, 5) == 4);
    CHECK(order_mod(4, 3) == 1); // ell | q - 1
    CHECK(order_mod(2, 3) == 2);
    CHECK_THROWS_AS(order_mod(6, 3), Error);
}

TEST_CASE("cyclotomic polynomial values")
{
    CHECK(cyclotomic_eval(3, 3) == 13);
    CHECK(cyclotomic_eval(6, 3) == 7);
    CHECK(cyclotomic_eval(1, 9) == 8);
    CHECK(cyclotomic_eval(2, 9) == 10);
    CHECK(cyclotomic_eval(4, 2) == 5);
    CHECK(cyclotomic_eval(4, 4) == 17);
}

TEST_CASE("telescoping product of cyclotomic values")
{
    for (int D = 1; D <= 12; ++D) {
        for (Int q : {Int(2), Int(3), Int(4), Int(5), Int(9)}) {
            Int prod = 1;
            for (int d = 1; d <= D; ++d)
                if (D % d == 0) prod *= cyclotomic_eval(d, q);
            Int target = 1;
            for (int i = 0; i < D; ++i) target *= q;
            CHECK(prod == target - 1);
        }
    }
}

TEST_CASE("group orders")
{
    auto g2 = group_order(make_params(Series::G2, 1));
    CHECK(g2.total == 4245696);
    auto b2 = group_order(make_params(Series::B2, 1));
    CHECK(b2.total == 720);
    auto b4 = group_order(make_params(Series::B2, 2));
    CHECK(b4.total == 979200);

    // factored pieces multiply back to the total
    for (const auto& fo : {g2, b2, b4}) {
        Int prod = 1;
        for (const auto& [name, v] : fo.pieces) prod *= v;
        CHECK(prod == fo.total);
    }
}

TEST_CASE("relevant primes with their torus orders")
{
    auto g2 = relevant_primes(make_params(Series::G2, 1));
    REQUIRE(g2.size() == 2);
    CHECK(g2[0].ell == 7);
    CHECK(g2[0].d == 6);
    CHECK(g2[1].ell == 13);
    CHECK(g2[1].d == 3);

    auto b2 = relevant_primes(make_params(Series::B2, 1));
    REQUIRE(b2.size() == 2);
    CHECK(b2[0].ell == 3);
    CHECK(b2[0].d == 2);
    CHECK(b2[1].ell == 5);
    CHECK(b2[1].d == 4);

    auto b4 = relevant_primes(make_params(Series::B2, 2));
    REQUIRE(b4.size() == 3);
    CHECK(b4[0].ell == 3);
    CHECK(b4[0].d == 1);
    CHECK(b4[1].ell == 5);
    CHECK(b4[1].d == 2);
    CHECK(b4[2].ell == 17);
    CHECK(b4[2].d == 4);

    for (const auto& pc : b4) {
        CHECK(cyclotomic_eval(pc.d, Int(4)) % pc.ell == 0);
        CHECK(Int(4) % pc.ell != 0);
    }
}

TEST_CASE("congruence scans are clean at a medium bound")
{
    const u64 bound = 20000;
    for (auto cs : {CongruenceCase::A, CongruenceCase::B, CongruenceCase::C,
                    CongruenceCase::D, CongruenceCase::E}) {
        auto bad = congruence_scan(cs, bound);
        CHECK(bad.empty());
        CHECK(congruence_instance_count(cs, bound) > 0);
    }
}

TEST_CASE("specific scan instances from small fields")
{
    // 5 divides 2^2+1 and 5 = 1 mod 4
    CHECK(powmod64(2, 2, 5) == 4);
    CHECK(congruence_scan(CongruenceCase::E, 10).empty());
    // 7 divides 2^3-1 and 7 = 7 mod 8
    CHECK(powmod64(2, 3, 7) == 1);
    CHECK(congruence_scan(CongruenceCase::D, 10).empty());
    CHECK(congruence_instance_count(CongruenceCase::D, 10) >= 1);
}

TEST_CASE("congruence route agrees with direct Galois fixedness")
{
    CHECK(congruence_fixedness_crosscheck(5000) == "");
}
