#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "netarc/gf.hpp"

using namespace netarc;

namespace {

std::vector<uint32_t> codes(const std::vector<FE>& v) {
    std::vector<uint32_t> out;
    for (const auto& e : v) out.push_back(e.code());
    return out;
}

std::vector<uint64_t> small_prime_powers(uint64_t lo, uint64_t hi, bool odd_only = false) {
    std::vector<uint64_t> out;
    for (uint64_t q = lo; q <= hi; ++q) {
        uint32_t p, k;
        if (!factor_prime_power(q, p, k)) continue;
        if (odd_only && p == 2) continue;
        out.push_back(q);
    }
    return out;
}

}  // namespace

TEST_CASE("prime and prime power predicates") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    uint32_t p = 0, k = 0;
    CHECK(factor_prime_power(8, p, k));
    CHECK(p == 2);
    CHECK(k == 3);
    CHECK(factor_prime_power(169, p, k));
    CHECK(p == 13);
    CHECK(k == 2);
    CHECK_FALSE(factor_prime_power(6, p, k));
    CHECK_FALSE(factor_prime_power(1, p, k));
}

TEST_CASE("prime field arithmetic matches modular arithmetic") {
    auto f = Field::make(7, 1);
    CHECK(f->q() == 7);
    CHECK((f->element(3) + f->element(5)).code() == 1);
    CHECK((f->element(3) * f->element(5)).code() == 1);
    CHECK(f->element(5).inv().code() == 3);
    CHECK((-f->element(3)).code() == 4);
    CHECK(f->element(2).pow(3).code() == 1);
    CHECK(f->from_int(-1).code() == 6);
    CHECK(f->from_int(7).code() == 0);
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 21), std::invalid_argument);
    // x^2+1 = (x+1)^2 over GF(2)
    CHECK_THROWS_AS(Field::make(2, 2, {1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 2, {1, 1, 2}), std::invalid_argument);
}

TEST_CASE("fixed moduli for the standard small fields") {
    CHECK(Field::make(2, 2)->modulus_code() == 7);    // x^2+x+1
    CHECK(Field::make(2, 3)->modulus_code() == 11);   // x^3+x+1
    CHECK(Field::make(2, 4)->modulus_code() == 19);   // x^4+x+1
    CHECK(Field::make(3, 2)->modulus_code() == 10);   // x^2+1
    CHECK(Field::make(5, 2)->modulus_code() == 31);   // x^2+x+1
    CHECK(Field::make(2, 1)->modulus_code() == 2);    // x
    // fallback rule: least-code monic irreducible
    CHECK(Field::make(3, 3)->modulus_code() == 34);   // x^3+2x+1
    CHECK(Field::make(2, 5)->modulus_code() == 37);   // x^5+x^2+1
    CHECK(Field::make(7, 2)->modulus_code() == 50);   // x^2+1
}

TEST_CASE("descriptor roundtrip and parsing") {
    auto f = Field::make(2, 3);
    CHECK(f->descriptor() == "2^3");
    CHECK(Field::parse("2^3/11")->same(*f));
    CHECK(Field::parse("2^3")->same(*f));
    CHECK(Field::parse("8")->same(*f));
    CHECK(Field::parse("9")->descriptor() == "3^2");
    CHECK(Field::parse("7")->descriptor() == "7");
    // the other irreducible cubic gives a distinct, fully qualified name
    auto f13 = Field::make(2, 3, {1, 0, 1, 1});
    CHECK(f13->descriptor() == "2^3/13");
    CHECK(Field::parse("2^3/13")->same(*f13));
    CHECK_FALSE(f13->same(*f));
    CHECK_THROWS_AS(Field::parse("6"), std::invalid_argument);
    CHECK_THROWS_AS(Field::parse("banana"), std::invalid_argument);
    CHECK_THROWS_AS(Field::parse("2^2/6"), std::invalid_argument);  // reducible
}

TEST_CASE("GF(8) structure constants") {
    auto f = Field::make(2, 3);
    FE w = f->element(2);  // the class of x
    CHECK((w * w).code() == 4);
    CHECK(w.pow(3).code() == 3);  // x^3 = x+1
    CHECK((w * f->element(5)).is_one());  // x * (x^2+1) = 1
    CHECK(w.inv().code() == 5);
}

TEST_CASE("cross-field operations are rejected") {
    auto a = Field::make(2, 3)->element(1);
    auto b = Field::make(3, 1)->element(1);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    // same parameters but separately constructed: structurally identical
    auto c = Field::make(2, 3)->element(6);
    CHECK((a + c).code() == 7);
}

TEST_CASE("division by zero") {
    auto f = Field::make(5, 1);
    CHECK_THROWS_AS(f->element(3) / f->zero(), std::domain_error);
    CHECK_THROWS_AS(f->zero().inv(), std::domain_error);
}

TEST_CASE("inverses exhaustively on all fields up to 32") {
    for (uint64_t q : small_prime_powers(2, 32)) {
        auto f = Field::from_order(q);
        for (uint32_t a = 1; a < f->q(); ++a) {
            CHECK(f->mul(a, f->inv(a)) == 1);
            CHECK(f->add(a, f->neg(a)) == 0);
        }
    }
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(20260823);
    for (uint64_t q : {8ull, 9ull, 16ull, 49ull, 121ull, 128ull}) {
        auto f = Field::from_order(q);
        std::uniform_int_distribution<uint32_t> pick(0, f->q() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            FE a = f->element(pick(rng)), b = f->element(pick(rng)), c = f->element(pick(rng));
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - b == a + (-b));
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
    }
}

TEST_CASE("pow agrees with repeated multiplication") {
    auto f = Field::make(3, 2);
    for (uint32_t a = 0; a < f->q(); ++a) {
        FE x = f->element(a), acc = f->one();
        for (uint64_t e = 0; e < 12; ++e) {
            CHECK(x.pow(e) == acc);
            acc = acc * x;
        }
    }
    CHECK(f->zero().pow(0).is_one());
}

TEST_CASE("frobenius is the p-power automorphism") {
    std::mt19937 rng(7);
    for (uint64_t q : {9ull, 16ull, 27ull, 25ull}) {
        auto f = Field::from_order(q);
        std::uniform_int_distribution<uint32_t> pick(0, f->q() - 1);
        for (int trial = 0; trial < 100; ++trial) {
            FE a = f->element(pick(rng)), b = f->element(pick(rng));
            for (uint32_t i = 0; i < f->k(); ++i) {
                CHECK(a.frobenius(i) == a.pow([&] {
                    uint64_t e = 1;
                    for (uint32_t t = 0; t < i; ++t) e *= f->p();
                    return e;
                }()));
                CHECK((a + b).frobenius(i) == a.frobenius(i) + b.frobenius(i));
                CHECK((a * b).frobenius(i) == a.frobenius(i) * b.frobenius(i));
            }
        }
    }
    auto f9 = Field::make(3, 2);
    FE i9 = f9->element(3);  // a square root of -1 under x^2+1
    CHECK((i9 * i9) == f9->from_int(-1));
    CHECK(i9.frobenius(1) == -i9);
    CHECK_THROWS_AS(i9.frobenius(2), std::invalid_argument);
}

TEST_CASE("polynomial roots: frozen instances") {
    auto f11 = Field::make(11, 1);
    auto r = codes(poly_roots(Poly::from_ints(f11, {-1, 1, 1})));  // x^2+x-1
    CHECK(r == std::vector<uint32_t>{3, 7});

    auto f7 = Field::make(7, 1);
    CHECK(codes(poly_roots(Poly::from_ints(f7, {1, -2, -1, 1}))) ==
          std::vector<uint32_t>{5});  // x^3-x^2-2x+1
    CHECK(poly_roots(Poly::from_ints(f7, {-1, 1, 1})).empty());

    auto f5 = Field::make(5, 1);
    CHECK(codes(poly_roots(Poly::from_ints(f5, {-1, 1, 1}))) ==
          std::vector<uint32_t>{2});  // double root listed once

    auto f4 = Field::make(2, 2);
    CHECK(codes(poly_roots(Poly::from_ints(f4, {-1, 1, 1}))) ==
          std::vector<uint32_t>{2, 3});  // the two elements outside GF(2)

    auto f9 = Field::make(3, 2);
    CHECK(codes(poly_roots(Poly::from_ints(f9, {1, 0, 1}))) ==
          std::vector<uint32_t>{3, 6});  // x^2+1

    CHECK_THROWS_AS(poly_roots(Poly::from_ints(f5, {0})), std::invalid_argument);
}

TEST_CASE("polynomial evaluation and degree") {
    auto f = Field::make(2, 2);
    Poly p = Poly::from_ints(f, {1, 1, 1});
    CHECK(p.degree() == 2);
    CHECK(p.eval(f->element(2)).is_zero());
    CHECK(p.eval(f->zero()).is_one());
    Poly trimmed(f, {f->one(), f->zero()});
    CHECK(trimmed.degree() == 0);
}

TEST_CASE("subfield elements") {
    auto f16 = Field::make(2, 4);
    CHECK(codes(subfield_elements(f16, 2)) == std::vector<uint32_t>{0, 1, 6, 7});
    CHECK(codes(subfield_elements(f16, 1)) == std::vector<uint32_t>{0, 1});
    CHECK(subfield_elements(f16, 4).size() == 16);
    CHECK_THROWS_AS(subfield_elements(f16, 3), std::invalid_argument);

    // the fixed set of frobenius^d is closed under field operations
    auto sub = subfield_elements(Field::make(3, 2), 1);
    CHECK(sub.size() == 3);
    for (const auto& a : sub)
        for (const auto& b : sub) {
            bool found_sum = false, found_prod = false;
            for (const auto& c : sub) {
                if (c == a + b) found_sum = true;
                if (c == a * b) found_prod = true;
            }
            CHECK(found_sum);
            CHECK(found_prod);
        }
}

TEST_CASE("half-cyclotomic minimum degree") {
    CHECK(min_degree_for_halfcyclotomic(5, 11) == 1);
    CHECK(min_degree_for_halfcyclotomic(7, 3) == 3);
    CHECK(min_degree_for_halfcyclotomic(7, 13) == 1);
    CHECK(min_degree_for_halfcyclotomic(5, 2) == 2);   // 2^2 = 4 = -1 (mod 5)
    CHECK(min_degree_for_halfcyclotomic(9, 2) == 3);   // 2^3 = 8 = -1 (mod 9)
    CHECK_THROWS_AS(min_degree_for_halfcyclotomic(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(min_degree_for_halfcyclotomic(7, 7), std::invalid_argument);
    CHECK_THROWS_AS(min_degree_for_halfcyclotomic(6, 3), std::invalid_argument);
    CHECK_THROWS_AS(min_degree_for_halfcyclotomic(5, 6), std::invalid_argument);
}

TEST_CASE("roots of x^2+x-1 exist iff 5 is a square, odd q up to 169") {
    for (uint64_t q : small_prime_powers(3, 169, /*odd_only=*/true)) {
        auto f = Field::from_order(q);
        bool golden = !poly_roots(Poly::from_ints(f, {-1, 1, 1})).empty();
        bool five_square = !poly_roots(Poly::from_ints(f, {-5, 0, 1})).empty();
        CHECK_MESSAGE(golden == five_square, "q=", q);
    }
}

TEST_CASE("degree-3 half-cyclotomic polynomial splits per residue class of p") {
    for (uint32_t p = 2; p <= 97; ++p) {
        if (!is_prime(p) || p == 7) continue;
        auto f = Field::make(p, 1);
        bool has_root = !poly_roots(Poly::from_ints(f, {1, -2, -1, 1})).empty();
        bool residue = (p % 7 == 1 || p % 7 == 6);
        CHECK_MESSAGE(has_root == residue, "p=", p);
        CHECK((min_degree_for_halfcyclotomic(7, p) == 1) == residue);
    }
    // p = 7: the polynomial degenerates to (x+2)^3
    CHECK(codes(poly_roots(Poly::from_ints(Field::make(7, 1), {1, -2, -1, 1}))) ==
          std::vector<uint32_t>{5});
}

TEST_CASE("large-field smoke: GF(2^17) beyond the log-table range") {
    auto f = Field::make(2, 17);
    CHECK(f->q() == 131072u);
    FE a = f->element(54321), b = f->element(98765);
    CHECK((a * b) * a.inv() == b);
    CHECK(a.pow(f->q() - 1).is_one());
    CHECK((a + b).frobenius(1) == a.frobenius(1) + b.frobenius(1));
}
