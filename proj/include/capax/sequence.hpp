#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "capax/fp_core.hpp"

namespace capax {

// sigma_k = 1 + p + ... + p^k. Throws RangeError if it does not fit in 64 bits.
std::uint64_t sigma(std::uint64_t k, PrimeModulus p);
// p^k, checked.
std::uint64_t checked_pow(PrimeModulus p, std::uint64_t k);

// n = sum_j b_j sigma_j with 0 <= b_j <= p, b_k >= 1, and b_j = p forcing b_i = 0
// for every i < j. Produced greedily from the top index down.
struct SigmaDecomposition {
    std::uint32_t p = 2;
    std::uint64_t n = 0;
    std::size_t k = 0;                        // sigma_k <= n < sigma_{k+1}
    std::vector<std::uint64_t> coefficients;  // b_0 .. b_k

    // Least j with b_j != 0.
    std::size_t lowest_index() const;
    // Empty when every invariant holds, otherwise a description of the first broken one.
    std::optional<std::string> invariant_violation() const;
};

// Throws DomainError for n < 1.
SigmaDecomposition decompose(std::uint64_t n, PrimeModulus p);

// sum_j b_j p^j over decompose(n, p).
std::uint64_t lambda_closed(std::uint64_t n, PrimeModulus p);

enum class LambdaMethod { closed, meta, shift };

std::string_view to_string(LambdaMethod m) noexcept;
std::optional<LambdaMethod> parse_lambda_method(std::string_view name) noexcept;

// lambda_p(1..N) for a single p. Construction enforces 1 <= lambda(n) <= n and
// monotonicity (ConsistencyError otherwise); the finished table is immutable.
class LambdaTable {
public:
    LambdaTable(PrimeModulus modulus, LambdaMethod method, std::vector<std::uint64_t> values);

    const PrimeModulus& modulus() const noexcept { return modulus_; }
    LambdaMethod method() const noexcept { return method_; }
    std::uint64_t max_n() const noexcept { return values_.size(); }
    // 1-based; DomainError outside [1, max_n].
    std::uint64_t operator()(std::uint64_t n) const;
    // values()[i] is lambda(i + 1).
    std::span<const std::uint64_t> values() const noexcept { return values_; }

private:
    PrimeModulus modulus_;
    LambdaMethod method_;
    std::vector<std::uint64_t> values_;
};

// Bottom-up evaluation of lambda(n) = sum_{i=1..p} lambda(n - i + 1 - lambda(n - i)) for
// n > p, seeded with lambda(n) = n on [1, p]. An inner argument outside [1, n-1]
// raises ConsistencyError.
LambdaTable lambda_meta(std::uint64_t max_n, PrimeModulus p);
// Same recurrence with caller-chosen seeds for lambda(1..p). Exists to exercise the
// verification harness with deliberately wrong initial conditions.
LambdaTable lambda_meta(std::uint64_t max_n, PrimeModulus p, std::span<const std::uint64_t> seeds);

// lambda(n) = p^k + lambda(n - sigma_k) for sigma_k <= n < sigma_{k+1}, with lambda(0) = 0.
LambdaTable lambda_shift(std::uint64_t max_n, PrimeModulus p);

// Table of lambda_closed values.
LambdaTable lambda_closed_table(std::uint64_t max_n, PrimeModulus p);

LambdaTable lambda_table(LambdaMethod method, std::uint64_t max_n, PrimeModulus p);

}  // namespace capax
