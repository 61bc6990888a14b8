#include "capax/sequence.hpp"


#include "capax/errors.hpp"

namespace capax {

namespace {


// a * b + c, or nullopt on overflow.
std::optional<std::uint64_t> mul_add(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t prod;
    if (__builtin_mul_overflow(a, b, &prod)) return std::nullopt;
    std::uint64_t sum;
    if (__builtin_add_overflow(prod, c, &sum)) return std::nullopt;
    return sum;
}

}  // namespace

std::uint64_t sigma(std::uint64_t k, PrimeModulus p) {
    std::uint64_t s = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        auto next = mul_add(s, p.value(), 1);
        if (!next) throw RangeError("sigma_" + std::to_string(k) + " overflows 64 bits for p = " +
                                    std::to_string(p.value()));
        s = *next;
    }
    return s;
}

std::uint64_t checked_pow(PrimeModulus p, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        auto next = mul_add(r, p.value(), 0);
        if (!next) throw RangeError(std::to_string(p.value()) + "^" + std::to_string(k) +
                                    " overflows 64 bits");
        r = *next;
    }
    return r;
}

std::size_t SigmaDecomposition::lowest_index() const {
    for (std::size_t j = 0; j < coefficients.size(); ++j)
        if (coefficients[j] != 0) return j;
    throw ConsistencyError("decomposition has no nonzero coefficient");
}

std::optional<std::string> SigmaDecomposition::invariant_violation() const {
    if (coefficients.size() != k + 1)
        return "expected " + std::to_string(k + 1) + " coefficients, got " +
               std::to_string(coefficients.size());
    if (coefficients[k] < 1) return "top coefficient b_" + std::to_string(k) + " is zero";
    const PrimeModulus modulus(p);
    std::uint64_t total = 0;
    std::uint64_t s = 1;
    for (std::size_t j = 0; j <= k; ++j) {
        const std::uint64_t b = coefficients[j];
        if (b > p) return "b_" + std::to_string(j) + " = " + std::to_string(b) + " exceeds p";
        if (b == p)
            for (std::size_t i = 0; i < j; ++i)
                if (coefficients[i] != 0)
                    return "b_" + std::to_string(j) + " = p but b_" + std::to_string(i) + " != 0";
        auto next = mul_add(b, s, total);
        if (!next) return "sum of b_j sigma_j overflows";
        total = *next;
        if (j < k) s = sigma(j + 1, modulus);
    }
    if (total != n)
        return "sum of b_j sigma_j is " + std::to_string(total) + ", expected " + std::to_string(n);
    return std::nullopt;
}

SigmaDecomposition decompose(std::uint64_t n, PrimeModulus p) {
    if (n < 1) throw DomainError("decompose: n must be >= 1");
    // sigmas[j] = sigma_j for j = 0..k+1.
    std::vector<std::uint64_t> sigmas{1};
    while (sigmas.back() <= n) {
        auto next = mul_add(sigmas.back(), p.value(), 1);
        if (!next) throw RangeError("decompose: sigma_{k+1} overflows for n = " + std::to_string(n));
        sigmas.push_back(*next);
    }
    SigmaDecomposition d;
    d.p = p.value();
    d.n = n;
    d.k = sigmas.size() - 2;
    d.coefficients.assign(d.k + 1, 0);
    std::uint64_t remainder = n;
    for (std::size_t j = d.k + 1; j-- > 0;) {
        d.coefficients[j] = remainder / sigmas[j];
        remainder -= d.coefficients[j] * sigmas[j];
    }
    if (remainder != 0) throw ConsistencyError("decompose: nonzero remainder");
    return d;
}

std::uint64_t lambda_closed(std::uint64_t n, PrimeModulus p) {
    const SigmaDecomposition d = decompose(n, p);
    std::uint64_t total = 0;
    std::uint64_t power = 1;
    for (std::size_t j = 0; j <= d.k; ++j) {
        auto next = mul_add(d.coefficients[j], power, total);
        if (!next) throw RangeError("lambda_closed overflows for n = " + std::to_string(n));
        total = *next;
        if (j < d.k) power = checked_pow(p, j + 1);
    }
    return total;
}

std::string_view to_string(LambdaMethod m) noexcept {
    switch (m) {
        case LambdaMethod::closed: return "closed";
        case LambdaMethod::meta: return "meta";
        case LambdaMethod::shift: return "shift";
    }
    return "?";
}

std::optional<LambdaMethod> parse_lambda_method(std::string_view name) noexcept {
    if (name == "closed") return LambdaMethod::closed;
    if (name == "meta") return LambdaMethod::meta;
    if (name == "shift") return LambdaMethod::shift;
    return std::nullopt;
}

LambdaTable::LambdaTable(PrimeModulus modulus, LambdaMethod method,
                         std::vector<std::uint64_t> values)
    : modulus_(modulus), method_(method), values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const std::uint64_t n = i + 1;
        if (values_[i] < 1 || values_[i] > n)
            throw ConsistencyError(std::string(to_string(method_)) + " table: lambda(" +
                                   std::to_string(n) + ") = " + std::to_string(values_[i]) +
                                   " outside [1, n]");
        if (i > 0 && values_[i] < values_[i - 1])
            throw ConsistencyError(std::string(to_string(method_)) + " table: lambda(" +
                                   std::to_string(n) + ") < lambda(" + std::to_string(n - 1) + ")");
    }
}

std::uint64_t LambdaTable::operator()(std::uint64_t n) const {
    if (n < 1 || n > values_.size())
        throw DomainError("lambda table covers 1.." + std::to_string(values_.size()) +
                          ", asked for " + std::to_string(n));
    return values_[n - 1];
}

LambdaTable lambda_meta(std::uint64_t max_n, PrimeModulus p, std::span<const std::uint64_t> seeds) {
    if (max_n < 1) throw DomainError("lambda_meta: N must be >= 1");
    if (seeds.size() != p.value())
        throw DomainError("lambda_meta: need exactly p seed values");
    // lam[n] for n = 0..max_n; index 0 unused.
    std::vector<std::uint64_t> lam(max_n + 1, 0);
    const std::uint64_t pv = p.value();
    for (std::uint64_t n = 1; n <= max_n && n <= pv; ++n) lam[n] = seeds[n - 1];
    for (std::uint64_t n = pv + 1; n <= max_n; ++n) {
        std::uint64_t total = 0;
        for (std::uint64_t i = 1; i <= pv; ++i) {
            const std::uint64_t prev = lam[n - i];
            // n - i + 1 - lam(n - i) must land in [1, n - 1].
            if (prev > n - i || prev < 1)
                throw ConsistencyError("lambda_meta: inner argument for n = " + std::to_string(n) +
                                       ", i = " + std::to_string(i) + " leaves [1, n-1]");
            total += lam[n - i + 1 - prev];
        }
        lam[n] = total;
    }
    lam.erase(lam.begin());
    return LambdaTable(p, LambdaMethod::meta, std::move(lam));
}

LambdaTable lambda_meta(std::uint64_t max_n, PrimeModulus p) {
    std::vector<std::uint64_t> seeds(p.value());
    for (std::uint64_t n = 1; n <= seeds.size(); ++n) seeds[n - 1] = n;
    return lambda_meta(max_n, p, seeds);
}

LambdaTable lambda_shift(std::uint64_t max_n, PrimeModulus p) {
    if (max_n < 1) throw DomainError("lambda_shift: N must be >= 1");
    std::vector<std::uint64_t> lam(max_n + 1, 0);  // lam[0] = 0
    std::uint64_t k = 0;
    std::uint64_t sigma_k = 1;
    std::uint64_t power_k = 1;
    std::optional<std::uint64_t> sigma_next = mul_add(sigma_k, p.value(), 1);
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        while (sigma_next && n >= *sigma_next) {
            ++k;
            sigma_k = *sigma_next;
            auto pk = mul_add(power_k, p.value(), 0);
            if (!pk) throw RangeError("lambda_shift: p^" + std::to_string(k) + " overflows");
            power_k = *pk;
            sigma_next = mul_add(sigma_k, p.value(), 1);
        }
        lam[n] = power_k + lam[n - sigma_k];
    }
    lam.erase(lam.begin());
    return LambdaTable(p, LambdaMethod::shift, std::move(lam));
}

LambdaTable lambda_closed_table(std::uint64_t max_n, PrimeModulus p) {
    if (max_n < 1) throw DomainError("lambda_closed_table: N must be >= 1");
    std::vector<std::uint64_t> lam(max_n);
    for (std::uint64_t n = 1; n <= max_n; ++n) lam[n - 1] = lambda_closed(n, p);
    return LambdaTable(p, LambdaMethod::closed, std::move(lam));
}

LambdaTable lambda_table(LambdaMethod method, std::uint64_t max_n, PrimeModulus p) {
    switch (method) {
        case LambdaMethod::closed: return lambda_closed_table(max_n, p);
        case LambdaMethod::meta: return lambda_meta(max_n, p);
        case LambdaMethod::shift: return lambda_shift(max_n, p);
    }
    throw DomainError("unknown lambda method");
}

}  // namespace capax
