#include <doctest.h>

#include <functional>
#include <random>

#include "capax/errors.hpp"
#include "capax/sequence.hpp"

using namespace capax;

namespace {

// Every coefficient vector (b_0..b_k) with 0 <= b_j <= p, b_k >= 1, sum b_j sigma_j = n
// and "b_j = p implies lower coefficients vanish". Test-only brute force.
std::vector<std::vector<std::uint64_t>> all_valid_decompositions(std::uint64_t n, std::uint32_t p) {
    std::vector<std::uint64_t> sig{1};
    while (sig.back() * p + 1 <= n) sig.push_back(sig.back() * p + 1);
    const std::size_t k = sig.size() - 1;
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> b(k + 1, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == k + 1) {
            std::uint64_t s = 0;
            for (std::size_t i = 0; i <= k; ++i) s += b[i] * sig[i];
            if (s != n || b[k] < 1) return;
            for (std::size_t i = 0; i <= k; ++i)
                if (b[i] == p)
                    for (std::size_t l = 0; l < i; ++l)
                        if (b[l] != 0) return;
            out.push_back(b);
            return;
        }
        for (std::uint64_t v = 0; v <= p; ++v) {
            b[j] = v;
            rec(j + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace

TEST_CASE("sigma") {
    CHECK(sigma(0, PrimeModulus(2)) == 1);
    CHECK(sigma(0, PrimeModulus(65521)) == 1);
    CHECK(sigma(2, PrimeModulus(2)) == 7);
    CHECK(sigma(1, PrimeModulus(3)) == 4);
    CHECK(sigma(63, PrimeModulus(2)) == ~std::uint64_t{0});
    CHECK_THROWS_AS(sigma(64, PrimeModulus(2)), RangeError);
    CHECK_THROWS_AS(checked_pow(PrimeModulus(3), 41), RangeError);
    for (std::uint32_t pv : {2u, 3u, 5u, 7u})
        for (std::uint64_t k = 1; k < 10; ++k)
            CHECK(sigma(k, PrimeModulus(pv)) == pv * sigma(k - 1, PrimeModulus(pv)) + 1);
}

TEST_CASE("decompose examples") {
    const SigmaDecomposition d5 = decompose(5, PrimeModulus(2));
    CHECK(d5.k == 1);
    CHECK(d5.coefficients == std::vector<std::uint64_t>{2, 1});
    CHECK(d5.lowest_index() == 0);

    const SigmaDecomposition d7 = decompose(7, PrimeModulus(2));
    CHECK(d7.coefficients == std::vector<std::uint64_t>{0, 0, 1});
    CHECK(d7.lowest_index() == 2);

    for (std::uint32_t pv : {2u, 3u, 5u, 11u})
        for (std::uint64_t n = 1; n <= pv; ++n)
            CHECK(decompose(n, PrimeModulus(pv)).coefficients == std::vector<std::uint64_t>{n});

    CHECK_THROWS_AS(decompose(0, PrimeModulus(2)), DomainError);
}

TEST_CASE("greedy decomposition is among the exhaustively found ones") {
    for (std::uint32_t pv : {2u, 3u, 5u}) {
        for (std::uint64_t n = 1; n <= 120; ++n) {
            const SigmaDecomposition d = decompose(n, PrimeModulus(pv));
            const auto all = all_valid_decompositions(n, pv);
            REQUIRE_FALSE(all.empty());
            CHECK(std::find(all.begin(), all.end(), d.coefficients) != all.end());
            CHECK_FALSE(d.invariant_violation().has_value());
        }
    }
}

TEST_CASE("invariant_violation reports broken decompositions") {
    SigmaDecomposition d = decompose(6, PrimeModulus(2));  // b = [0, 2]
    CHECK_FALSE(d.invariant_violation());
    d.coefficients = {2, 2};
    CHECK(d.invariant_violation());
    d.coefficients = {3, 1};  // sums to 6 but b_0 > p
    CHECK(d.invariant_violation());
    d.coefficients = {6, 0};
    CHECK(d.invariant_violation());
}

TEST_CASE("lambda_closed") {
    CHECK(lambda_closed(5, PrimeModulus(2)) == 4);
    CHECK(lambda_closed(7, PrimeModulus(2)) == 4);
    for (std::uint32_t pv : {2u, 3u, 5u, 7u, 11u})
        for (std::uint64_t n = 1; n <= pv; ++n) CHECK(lambda_closed(n, PrimeModulus(pv)) == n);
    CHECK_THROWS_AS(lambda_closed(0, PrimeModulus(3)), DomainError);
    // Large n stays exact; sigma_{k+1} must still fit in 64 bits.
    CHECK(lambda_closed((std::uint64_t{1} << 63) - 1, PrimeModulus(2)) == std::uint64_t{1} << 62);
    CHECK_THROWS_AS(lambda_closed(~std::uint64_t{0}, PrimeModulus(2)), RangeError);
}

TEST_CASE("frozen leading terms") {
    // Computed by an independent Python evaluation of the greedy closed form.
    const std::vector<std::uint64_t> p2{1, 2, 2, 3, 4, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 9, 10, 10, 11, 12};
    const std::vector<std::uint64_t> p3{1, 2, 3, 3, 4, 5, 6, 6, 7, 8, 9, 9, 9, 10, 11, 12, 12, 13, 14, 15};
    const std::vector<std::uint64_t> p5{1, 2, 3, 4, 5, 5, 6, 7, 8, 9, 10, 10, 11, 12, 13, 14, 15, 15, 16, 17};
    for (auto method : {LambdaMethod::closed, LambdaMethod::meta, LambdaMethod::shift}) {
        CAPTURE(to_string(method));
        const auto t2 = lambda_table(method, 20, PrimeModulus(2));
        const auto t3 = lambda_table(method, 20, PrimeModulus(3));
        const auto t5 = lambda_table(method, 20, PrimeModulus(5));
        CHECK(std::vector<std::uint64_t>(t2.values().begin(), t2.values().end()) == p2);
        CHECK(std::vector<std::uint64_t>(t3.values().begin(), t3.values().end()) == p3);
        CHECK(std::vector<std::uint64_t>(t5.values().begin(), t5.values().end()) == p5);
    }
}

TEST_CASE("meta recurrence examples") {
    const LambdaTable t = lambda_meta(8, PrimeModulus(2));
    CHECK(t(3) == 2);
    CHECK(t.method() == LambdaMethod::meta);
    for (std::uint32_t pv : {2u, 3u, 5u, 7u, 11u}) CHECK(lambda_meta(pv + 1, PrimeModulus(pv))(pv + 1) == pv);
    CHECK_THROWS_AS(lambda_meta(0, PrimeModulus(2)), DomainError);
}

TEST_CASE("meta recurrence with bad seeds") {
    // lambda(2) = 1 is the A046699 start: still a valid table, but different.
    const std::vector<std::uint64_t> a046699{1, 1};
    const LambdaTable t = lambda_meta(10, PrimeModulus(2), a046699);
    CHECK(t(2) == 1);
    CHECK(t(3) == 2);
    // lambda(2) = 3 > 2 sends an inner argument out of range.
    const std::vector<std::uint64_t> broken{1, 3};
    CHECK_THROWS_AS(lambda_meta(10, PrimeModulus(2), broken), ConsistencyError);
    const std::vector<std::uint64_t> short_seeds{1};
    CHECK_THROWS_AS(lambda_meta(10, PrimeModulus(2), short_seeds), DomainError);
}

TEST_CASE("shift recurrence examples") {
    CHECK(lambda_shift(5, PrimeModulus(2))(5) == 4);
    CHECK(lambda_shift(3, PrimeModulus(3))(3) == 3);
    for (std::uint32_t pv : {2u, 3u, 5u}) {
        const PrimeModulus p(pv);
        const LambdaTable t = lambda_shift(sigma(5, p), p);
        for (std::uint64_t k = 0; k <= 5; ++k) CHECK(t(sigma(k, p)) == checked_pow(p, k));
    }
}

TEST_CASE("table access and validation") {
    const LambdaTable t = lambda_closed_table(4, PrimeModulus(2));
    CHECK(t.max_n() == 4);
    CHECK_THROWS_AS(t(0), DomainError);
    CHECK_THROWS_AS(t(5), DomainError);
    CHECK_THROWS_AS(LambdaTable(PrimeModulus(2), LambdaMethod::closed, {1, 3}), ConsistencyError);
    CHECK_THROWS_AS(LambdaTable(PrimeModulus(2), LambdaMethod::closed, {1, 2, 1}), ConsistencyError);
    CHECK_THROWS_AS(LambdaTable(PrimeModulus(2), LambdaMethod::closed, {0}), ConsistencyError);
    CHECK(parse_lambda_method("shift") == LambdaMethod::shift);
    CHECK_FALSE(parse_lambda_method("fast"));
}

TEST_CASE("three methods agree, lambda(n) = n only in the seed region") {
    for (std::uint32_t pv : {2u, 3u, 5u, 7u, 11u, 13u}) {
        const PrimeModulus p(pv);
        const std::uint64_t N = 20000;
        const LambdaTable c = lambda_closed_table(N, p), m = lambda_meta(N, p), s = lambda_shift(N, p);
        for (std::uint64_t n = 1; n <= N; ++n) {
            if (c(n) != m(n) || c(n) != s(n)) {
                FAIL("disagreement at p=" << pv << " n=" << n);
            }
            if ((c(n) == n) != (n <= pv)) FAIL("seed-region law broken at p=" << pv << " n=" << n);
        }
    }
}

TEST_CASE("lambda at multiples of sigma") {
    for (std::uint32_t pv : {2u, 3u, 5u}) {
        const PrimeModulus p(pv);
        for (std::uint64_t k = 0; k <= 6; ++k)
            CHECK(lambda_closed(pv * sigma(k, p), p) == pv * checked_pow(p, k));
    }
}

TEST_CASE("random decompositions satisfy the invariants") {
    std::mt19937_64 rng(99);
    const std::uint32_t primes[] = {2, 3, 5, 7, 11, 13, 65521};
    for (int t = 0; t < 20000; ++t) {
        const PrimeModulus p(primes[rng() % 7]);
        const std::uint64_t n = 1 + rng() % (std::uint64_t{1} << (1 + rng() % 50));
        const auto d = decompose(n, p);
        REQUIRE_FALSE(d.invariant_violation());
    }
}
