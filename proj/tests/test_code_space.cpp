#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "capax/code_space.hpp"
#include "capax/errors.hpp"

using namespace capax;
using Rows = std::vector<std::vector<capax::Residue>>;

namespace {

const PrimeModulus F2(2), F3(3);

std::set<std::vector<Residue>> codewords(const FpMatrix& m) {
    std::set<std::vector<Residue>> out;
    for (const FpVector& v : rowspace_codewords(m)) out.emplace(v.entries().begin(), v.entries().end());
    return out;
}

// Span by direct closure over the raw rows, independent of echelon form.
std::set<std::vector<Residue>> span_by_closure(const FpMatrix& m) {
    const PrimeModulus& f = m.modulus();
    std::set<std::vector<Residue>> span{std::vector<Residue>(m.col_count(), 0)};
    for (const FpVector& row : m.rows()) {
        std::set<std::vector<Residue>> grown;
        for (const auto& s : span)
            for (Residue c = 0; c < f.value(); ++c) {
                std::vector<Residue> v = s;
                for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(v[i], f.mul(c, row[i]));
                grown.insert(std::move(v));
            }
        span = std::move(grown);
    }
    return span;
}

FpMatrix random_matrix(std::mt19937_64& rng, PrimeModulus p, std::size_t m, std::size_t n) {
    std::uniform_int_distribution<Residue> d(0, p.value() - 1);
    std::vector<std::vector<Residue>> rows(m, std::vector<Residue>(n));
    for (auto& r : rows)
        for (auto& e : r) e = d(rng);
    return FpMatrix(p, rows);
}

std::vector<std::vector<Residue>> raw(const FpMatrix& m) {
    std::vector<std::vector<Residue>> rows;
    for (const auto& r : m.rows()) rows.emplace_back(r.entries().begin(), r.entries().end());
    return rows;
}

}  // namespace

TEST_CASE("matrix construction rejects bad shapes") {
    CHECK_THROWS_AS(FpMatrix(F2, std::vector<std::vector<Residue>>{}), DimensionError);
    CHECK_THROWS_AS(FpMatrix(F2, std::vector<std::vector<Residue>>{{}}), DimensionError);
    CHECK_THROWS_AS(FpMatrix(F2, std::vector<std::vector<Residue>>{{1, 0}, {1}}), DimensionError);
    CHECK_THROWS_AS(FpMatrix(F2, std::vector<std::vector<Residue>>{{2}}), DomainError);
    CHECK_NOTHROW(FpMatrix(F2, std::vector<std::vector<Residue>>{{0, 0}}));
}

TEST_CASE("echelonize") {
    const FpMatrix m(F2, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    const EchelonBasis b = echelonize(m);
    CHECK(b.rank() == 2);
    CHECK(b.rows() == std::vector<FpVector>{FpVector(F2, {1, 0, 1}), FpVector(F2, {0, 1, 1})});
    CHECK(b.pivots() == std::vector<std::size_t>{0, 1});
    CHECK(codewords(m) == span_by_closure(m));

    const FpMatrix id = FpMatrix::identity(F3, 3);
    CHECK(echelonize(id).rank() == 3);
    CHECK(echelonize(id).rows() == id.rows());

    const EchelonBasis c = echelonize(FpMatrix(F3, Rows{{2, 2}, {1, 1}}));
    CHECK(c.rank() == 1);
    CHECK(c.rows().front() == FpVector(F3, {1, 1}));

    CHECK(echelonize(FpMatrix(F3, Rows{{0, 0, 0}})).rank() == 0);
}

TEST_CASE("echelon basis rejects non-RREF input") {
    CHECK_THROWS_AS(EchelonBasis(F2, 2, {FpVector(F2, {0, 1}), FpVector(F2, {1, 0})}, {1, 0}),
                    ConsistencyError);
    CHECK_THROWS_AS(EchelonBasis(F3, 2, {FpVector(F3, {2, 1})}, {0}), ConsistencyError);
    CHECK_THROWS_AS(EchelonBasis(F2, 2, {FpVector(F2, {1, 1}), FpVector(F2, {0, 1})}, {0, 1}),
                    ConsistencyError);
}

TEST_CASE("echelonize is the unique RREF of the row space") {
    std::mt19937_64 rng(11);
    for (std::uint32_t pv : {2u, 3u, 5u}) {
        const PrimeModulus p(pv);
        for (int t = 0; t < 100; ++t) {
            const FpMatrix m = random_matrix(rng, p, 1 + rng() % 4, 1 + rng() % 5);
            const EchelonBasis b = echelonize(m);
            CHECK(b.rank() <= std::min(m.row_count(), m.col_count()));
            CHECK(codewords(m) == span_by_closure(m));
            // Shuffling and rescaling rows leaves the RREF unchanged.
            auto rows = raw(m);
            std::shuffle(rows.begin(), rows.end(), rng);
            for (auto& r : rows)
                for (auto& e : r) e = p.mul(e, pv - 1);
            CHECK(echelonize(FpMatrix(p, rows)) == b);
        }
    }
}

TEST_CASE("rowspace_codewords") {
    CHECK(codewords(FpMatrix(F2, Rows{{1, 1, 0}, {0, 1, 1}})) ==
          std::set<std::vector<Residue>>{{0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(codewords(FpMatrix(F2, Rows{{1, 1}})) == std::set<std::vector<Residue>>{{0, 0}, {1, 1}});
    CHECK(codewords(FpMatrix(F3, Rows{{1}})) == std::set<std::vector<Residue>>{{0}, {1}, {2}});

    const Rowspace rs = rowspace_codewords(FpMatrix(F3, Rows{{1, 0, 2}, {0, 1, 1}, {1, 1, 0}}));
    CHECK(rs.size() == 9);
    std::uint64_t visited = 0;
    for (const auto& v : rs) {
        (void)v;
        ++visited;
    }
    CHECK(visited == 9);
    CHECK((*rs.begin()).is_zero());
}

TEST_CASE("enumeration budget is enforced, never truncated") {
    const FpMatrix id = FpMatrix::identity(F2, 10);
    CHECK_THROWS_AS(rowspace_codewords(id, EnumerationBudget{1000}), ResourceError);
    CHECK_THROWS_AS(capacity(id, EnumerationBudget{1023}), ResourceError);
    CHECK(capacity(id, EnumerationBudget{1024}) == 10);
    CHECK_THROWS_AS(weight_distribution(id, EnumerationBudget{512}), ResourceError);
}

TEST_CASE("capacity") {
    CHECK(capacity(FpMatrix(F2, Rows{{1, 1, 1, 1, 0}, {1, 1, 0, 1, 1}})) == 4);
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(capacity(FpMatrix::identity(F2, n)) == n);
        CHECK(capacity(FpMatrix::identity(PrimeModulus(5), n)) == n);
        CHECK(capacity(FpMatrix(F3, {std::vector<Residue>(n, 1)})) == n);
    }
    CHECK(capacity(FpMatrix(F3, Rows{{0, 0}, {0, 0}})) == 0);
}

TEST_CASE("weight_distribution") {
    using Dist = std::map<std::size_t, std::uint64_t>;
    CHECK(weight_distribution(FpMatrix(F2, Rows{{1, 1, 0}, {0, 1, 1}})) == Dist{{2, 3}});
    CHECK(weight_distribution(FpMatrix::identity(F2, 2)) == Dist{{1, 2}, {2, 1}});
    const FpMatrix b2(F2, {{1, 1, 0, 1, 1, 0, 0}, {0, 1, 1, 0, 1, 1, 0}, {0, 0, 0, 1, 1, 1, 1}});
    CHECK(weight_distribution(b2) == Dist{{4, 7}});
    CHECK(weight_distribution(FpMatrix(F2, Rows{{0, 0}})).empty());
}

TEST_CASE("has_full_support") {
    CHECK(has_full_support(FpMatrix(F2, Rows{{1, 0}, {0, 1}})));
    CHECK_FALSE(has_full_support(FpMatrix(F2, Rows{{1, 0}, {1, 0}})));
    CHECK(echelonize(FpMatrix(F2, Rows{{1, 0}, {0, 1}})).has_full_support());
    CHECK_FALSE(echelonize(FpMatrix(F2, Rows{{1, 0}, {1, 0}})).has_full_support());
}

TEST_CASE("capacity invariances") {
    std::mt19937_64 rng(3);
    for (std::uint32_t pv : {2u, 3u, 5u}) {
        const PrimeModulus p(pv);
        std::uniform_int_distribution<Residue> unit(1, pv - 1);
        for (int t = 0; t < 60; ++t) {
            const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 7;
            const FpMatrix a = random_matrix(rng, p, m, n);
            const std::size_t cap = capacity(a);
            auto rows = raw(a);

            auto permuted = rows;
            std::shuffle(permuted.begin(), permuted.end(), rng);
            CHECK(capacity(FpMatrix(p, permuted)) == cap);

            auto scaled = rows;
            const Residue s = unit(rng);
            for (auto& e : scaled[rng() % m]) e = p.mul(e, s);
            CHECK(capacity(FpMatrix(p, scaled)) == cap);

            if (m > 1) {
                auto sheared = rows;
                const std::size_t i = rng() % m, j = (i + 1 + rng() % (m - 1)) % m;
                for (std::size_t c = 0; c < n; ++c) sheared[i][c] = p.add(sheared[i][c], sheared[j][c]);
                CHECK(capacity(FpMatrix(p, sheared)) == cap);
            }

            auto duplicated = rows;
            duplicated.push_back(rows[rng() % m]);
            CHECK(capacity(FpMatrix(p, duplicated)) == cap);

            std::vector<std::size_t> perm(n);
            for (std::size_t c = 0; c < n; ++c) perm[c] = c;
            std::shuffle(perm.begin(), perm.end(), rng);
            auto cols = rows;
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < n; ++c) cols[r][c] = rows[r][perm[c]];
            CHECK(capacity(FpMatrix(p, cols)) == cap);

            const auto dist = weight_distribution(a);
            const std::size_t top = dist.empty() ? 0 : dist.rbegin()->first;
            CHECK(top == cap);
            std::uint64_t total = 0;
            for (const auto& [w, c] : dist) total += c;
            CHECK(total + 1 == rowspace_codewords(a).size());
            std::uint64_t expected = 1;
            for (std::size_t r = 0; r < echelonize(a).rank(); ++r) expected *= pv;
            CHECK(rowspace_codewords(a).size() == expected);
        }
    }
}
