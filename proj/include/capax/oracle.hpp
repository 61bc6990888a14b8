#pragma once

// Brute-force ground truth for lambda_p(n).
//
// A matrix with n nonzero columns generates a subspace C of F_p^n on which no
// coordinate vanishes identically, and its capacity depends only on C. Conversely
// any such C is the row space of its own RREF basis, which has no zero column. So
// the minimum over matrices equals the minimum over full-support subspaces, and
// the oracle enumerates those once each via their RREF bases.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "capax/code_space.hpp"

namespace capax {

// Number of d-dimensional subspaces of F_p^n. RangeError on overflow.
std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t d, PrimeModulus p);
// Sum over d = 1..n of gaussian_binomial(n, d, p).
std::uint64_t nonzero_subspace_count(std::uint64_t n, PrimeModulus p);

// Walks the subspaces of F_p^n as RREF bases: dimension 1 to n, pivot sets in
// lexicographic order within a dimension, and the non-pivot entries of each pivot
// set odometer-style. Pivot sets can be dealt round-robin to `worker_count`
// cursors; each cursor then emits a disjoint share.
class SubspaceCursor {
public:
    struct Options {
        std::size_t worker = 0;
        std::size_t worker_count = 1;
        // Emit the zero subspace (rank 0) first. Only worker 0 does so.
        bool include_zero = false;
    };

    SubspaceCursor(std::size_t n, PrimeModulus p);
    SubspaceCursor(std::size_t n, PrimeModulus p, Options options);

    std::optional<EchelonBasis> next();
    std::uint64_t emitted() const noexcept { return emitted_; }

private:
    bool advance_pivots();
    void load_pivot_set();
    EchelonBasis current_basis() const;

    std::size_t n_;
    PrimeModulus p_;
    Options options_;
    std::size_t dim_ = 0;
    std::vector<std::size_t> pivots_;
    std::uint64_t pivot_ordinal_ = 0;
    // (row, column) of each free entry and its current value.
    std::vector<std::pair<std::size_t, std::size_t>> free_;
    std::vector<Residue> digits_;
    bool pending_ = false;  // current assignment not yet emitted
    bool zero_pending_ = false;
    bool exhausted_ = false;
    std::uint64_t emitted_ = 0;
};

// Single-cursor enumeration of every nonzero subspace. Throws ResourceError if the
// count exceeds the budget.
SubspaceCursor enumerate_subspaces(std::size_t n, PrimeModulus p,
                                   const EnumerationBudget& budget = {});

struct OracleOptions {
    EnumerationBudget budget;
    unsigned workers = 1;
    // Restrict the minimum to full-support subspaces. Turning this off admits the
    // zero subspace and the answer collapses to 0.
    bool require_full_support = true;
};

// min over full-support subspaces C of F_p^n of max codeword weight in C. Candidates
// whose running maximum already reaches the best minimum found are abandoned.
// The result does not depend on the worker count.
std::uint64_t lambda_bruteforce(std::uint64_t n, PrimeModulus p, const OracleOptions& options = {});

struct IncrementLemmaReport {
    std::size_t capacity = 0;
    std::uint64_t codewords_seen = 0;    // nonzero codewords looked at
    std::uint64_t hypothesis_held = 0;   // of those, how many had p * lambda(n - |v|) > |v|
    std::uint64_t violations = 0;
    std::optional<FpVector> witness;     // first v with no heavier codeword

    bool passed() const noexcept { return violations == 0; }
};

// For nonzero v in row(M) with p * lambda(n - |v|) > |v| (lambda(0) = 0), checks that
// some codeword is strictly heavier than v. Stops after `samples` vectors satisfying
// the hypothesis have been checked. M must have full support.
IncrementLemmaReport check_increment_lemma(const FpMatrix& m, std::uint64_t samples,
                                           const EnumerationBudget& budget = {});

// Uniform random rows x cols matrix whose zero columns are then patched with one
// random nonzero entry each.
FpMatrix random_full_support_matrix(std::mt19937_64& rng, PrimeModulus p, std::size_t rows,
                                    std::size_t cols);

}  // namespace capax
