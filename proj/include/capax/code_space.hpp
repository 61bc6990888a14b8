#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "capax/fp_core.hpp"

namespace capax {

// Upper bound on the items one enumeration may visit: codewords of a row space, or
// subspaces in an oracle run. Exceeding it raises ResourceError; results are never
// truncated.
struct EnumerationBudget {
    static constexpr std::uint64_t kDefaultMaxItems = std::uint64_t{1} << 24;
    std::uint64_t max_items = kDefaultMaxItems;
};

// m x n matrix over F_p with m >= 1 and n >= 1. The zero matrix is allowed.
class FpMatrix {
public:
    FpMatrix(PrimeModulus modulus, std::vector<FpVector> rows);
    FpMatrix(PrimeModulus modulus, const std::vector<std::vector<Residue>>& rows);

    static FpMatrix identity(PrimeModulus modulus, std::size_t n);

    const PrimeModulus& modulus() const noexcept { return modulus_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    std::size_t col_count() const noexcept { return rows_.front().size(); }
    const std::vector<FpVector>& rows() const noexcept { return rows_; }
    const FpVector& row(std::size_t i) const { return rows_.at(i); }
    Residue at(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    PrimeModulus modulus_;
    std::vector<FpVector> rows_;
};

// Reduced row-echelon basis of a row space. Pivots are strictly increasing, each
// pivot entry is 1 and every pivot column is zero in the other basis rows. The
// rank may be zero (zero row space).
class EchelonBasis {
public:
    // Throws ConsistencyError if the rows are not in reduced row-echelon form.
    EchelonBasis(PrimeModulus modulus, std::size_t cols, std::vector<FpVector> rows,
                 std::vector<std::size_t> pivots);

    const PrimeModulus& modulus() const noexcept { return modulus_; }
    std::size_t col_count() const noexcept { return cols_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    const std::vector<FpVector>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    // True iff no coordinate is identically zero on the row space.
    bool has_full_support() const noexcept;

    friend bool operator==(const EchelonBasis&, const EchelonBasis&) = default;

private:
    PrimeModulus modulus_;
    std::size_t cols_;
    std::vector<FpVector> rows_;
    std::vector<std::size_t> pivots_;
};

EchelonBasis echelonize(const FpMatrix& m);

// p^rank, or ResourceError if that exceeds the budget (or 64 bits).
std::uint64_t codeword_count(const EchelonBasis& basis, const EnumerationBudget& budget = {});

// Visits every codeword of the row space exactly once, the zero vector first.
// Consecutive codewords differ by one basis row per odometer digit touched, so
// each step costs O(n * carries). `visit(std::span<const Residue>)` returns false
// to stop early. Returns the number of codewords visited.
template <class Visitor>
std::uint64_t for_each_codeword(const EchelonBasis& basis, const EnumerationBudget& budget,
                                Visitor&& visit) {
    (void)codeword_count(basis, budget);
    const PrimeModulus& f = basis.modulus();
    const std::size_t r = basis.rank();
    const std::size_t n = basis.col_count();
    std::vector<Residue> digits(r, 0);
    std::vector<Residue> current(n, 0);
    std::uint64_t visited = 0;
    for (;;) {
        ++visited;
        if (!visit(std::span<const Residue>(current))) return visited;
        std::size_t i = 0;
        for (; i < r; ++i) {
            // Incrementing digit i, including the wrap p-1 -> 0, adds row i once.
            const auto row = basis.rows()[i].entries();
            for (std::size_t c = 0; c < n; ++c) current[c] = f.add(current[c], row[c]);
            if (++digits[i] < f.value()) break;
            digits[i] = 0;
        }
        if (i == r) return visited;
    }
}

// Iterable view of row(M): p^rank codewords generated from the echelon basis.
class Rowspace {
public:
    class iterator {
    public:
        using value_type = FpVector;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        FpVector operator*() const { return FpVector(space_->basis_.modulus(), current_); }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

    private:
        friend class Rowspace;
        explicit iterator(const Rowspace* space);

        const Rowspace* space_ = nullptr;
        std::vector<Residue> digits_;
        std::vector<Residue> current_;
        bool done_ = true;
    };

    Rowspace(EchelonBasis basis, const EnumerationBudget& budget = {});

    iterator begin() const { return iterator(this); }
    std::default_sentinel_t end() const { return {}; }
    std::uint64_t size() const noexcept { return count_; }
    const EchelonBasis& basis() const noexcept { return basis_; }

private:
    EchelonBasis basis_;
    std::uint64_t count_;
};

Rowspace rowspace_codewords(const FpMatrix& m, const EnumerationBudget& budget = {});

// max weight over row(M); 0 only for the zero matrix.
std::size_t capacity(const FpMatrix& m, const EnumerationBudget& budget = {});
std::size_t capacity(const EchelonBasis& basis, const EnumerationBudget& budget = {});

// weight -> number of nonzero codewords of that weight. Counts sum to p^rank - 1.
std::map<std::size_t, std::uint64_t> weight_distribution(const FpMatrix& m,
                                                         const EnumerationBudget& budget = {});

// True iff every column has a nonzero entry.
bool has_full_support(const FpMatrix& m) noexcept;

}  // namespace capax
