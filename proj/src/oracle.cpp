#include "capax/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "capax/errors.hpp"
#include "capax/sequence.hpp"

namespace capax {

std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t d, PrimeModulus p) {
    if (d > n) return 0;
    // q-Pascal: [m, e] = [m-1, e-1] + p^e [m-1, e].
    std::vector<std::uint64_t> row(d + 1, 0);
    row[0] = 1;
    for (std::uint64_t m = 1; m <= n; ++m) {
        for (std::uint64_t e = std::min(m, d); e >= 1; --e) {
            std::uint64_t scaled, sum;
            if (__builtin_mul_overflow(checked_pow(p, e), row[e], &scaled) ||
                __builtin_add_overflow(row[e - 1], scaled, &sum))
                throw RangeError("gaussian binomial overflows 64 bits");
            row[e] = sum;
        }
    }
    return row[d];
}

std::uint64_t nonzero_subspace_count(std::uint64_t n, PrimeModulus p) {
    std::uint64_t total = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (__builtin_add_overflow(total, gaussian_binomial(n, d, p), &total))
            throw RangeError("subspace count overflows 64 bits");
    return total;
}

SubspaceCursor::SubspaceCursor(std::size_t n, PrimeModulus p) : SubspaceCursor(n, p, Options{}) {}

SubspaceCursor::SubspaceCursor(std::size_t n, PrimeModulus p, Options options)
    : n_(n), p_(p), options_(options) {
    if (n_ < 1) throw DomainError("subspace enumeration needs n >= 1");
    if (options_.worker_count < 1 || options_.worker >= options_.worker_count)
        throw DomainError("invalid worker partition");
    zero_pending_ = options_.include_zero && options_.worker == 0;
}

bool SubspaceCursor::advance_pivots() {
    if (dim_ == 0) {
        dim_ = 1;
        pivots_ = {0};
    } else {
        // Next dim_-combination of {0..n-1} in lexicographic order.
        std::size_t i = dim_;
        while (i > 0 && pivots_[i - 1] == n_ - dim_ + (i - 1)) --i;
        if (i == 0) {
            if (++dim_ > n_) return false;
            pivots_.resize(dim_);
            for (std::size_t r = 0; r < dim_; ++r) pivots_[r] = r;
        } else {
            ++pivots_[i - 1];
            for (std::size_t r = i; r < dim_; ++r) pivots_[r] = pivots_[r - 1] + 1;
        }
    }
    ++pivot_ordinal_;
    return true;
}

void SubspaceCursor::load_pivot_set() {
    free_.clear();
    std::vector<bool> is_pivot(n_, false);
    for (std::size_t c : pivots_) is_pivot[c] = true;
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = pivots_[r] + 1; c < n_; ++c)
            if (!is_pivot[c]) free_.emplace_back(r, c);
    digits_.assign(free_.size(), 0);
    pending_ = true;
}

EchelonBasis SubspaceCursor::current_basis() const {
    std::vector<std::vector<Residue>> rows(dim_, std::vector<Residue>(n_, 0));
    for (std::size_t r = 0; r < dim_; ++r) rows[r][pivots_[r]] = 1;
    for (std::size_t f = 0; f < free_.size(); ++f) rows[free_[f].first][free_[f].second] = digits_[f];
    std::vector<FpVector> vecs;
    vecs.reserve(dim_);
    for (auto& r : rows) vecs.emplace_back(p_, std::move(r));
    return EchelonBasis(p_, n_, std::move(vecs), pivots_);
}

std::optional<EchelonBasis> SubspaceCursor::next() {
    if (zero_pending_) {
        zero_pending_ = false;
        ++emitted_;
        return EchelonBasis(p_, n_, {}, {});
    }
    while (!exhausted_) {
        if (pending_) {
            EchelonBasis basis = current_basis();
            std::size_t i = 0;
            for (; i < digits_.size(); ++i) {
                if (++digits_[i] < p_.value()) break;
                digits_[i] = 0;
            }
            if (i == digits_.size()) pending_ = false;
            ++emitted_;
            return basis;
        }
        bool owned = false;
        while (advance_pivots()) {
            if ((pivot_ordinal_ - 1) % options_.worker_count == options_.worker) {
                owned = true;
                break;
            }
        }
        if (!owned) {
            exhausted_ = true;
            break;
        }
        load_pivot_set();
    }
    return std::nullopt;
}

namespace {

void check_subspace_budget(std::uint64_t n, PrimeModulus p, const EnumerationBudget& budget) {
    std::uint64_t count;
    try {
        count = nonzero_subspace_count(n, p);
    } catch (const RangeError&) {
        throw ResourceError("subspace count of F_" + std::to_string(p.value()) + "^" +
                            std::to_string(n) + " does not fit in 64 bits");
    }
    if (count > budget.max_items)
        throw ResourceError("F_" + std::to_string(p.value()) + "^" + std::to_string(n) + " has " +
                            std::to_string(count) + " nonzero subspaces, over the budget of " +
                            std::to_string(budget.max_items));
}

}  // namespace

SubspaceCursor enumerate_subspaces(std::size_t n, PrimeModulus p, const EnumerationBudget& budget) {
    check_subspace_budget(n, p, budget);
    return SubspaceCursor(n, p);
}

std::uint64_t lambda_bruteforce(std::uint64_t n, PrimeModulus p, const OracleOptions& options) {
    if (n < 1) throw DomainError("lambda_bruteforce: n must be >= 1");
    check_subspace_budget(n, p, options.budget);
    // Each candidate enumerates at most p^n codewords.
    std::uint64_t per_space;
    try {
        per_space = checked_pow(p, n);
    } catch (const RangeError&) {
        per_space = ~std::uint64_t{0};
    }
    if (per_space > options.budget.max_items)
        throw ResourceError("F_" + std::to_string(p.value()) + "^" + std::to_string(n) +
                            " has more vectors than the enumeration budget");

    unsigned workers = options.workers;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

    // Capacity never exceeds n, so n + 1 means "nothing found yet".
    std::atomic<std::uint64_t> best{n + 1};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto run = [&](std::size_t worker) {
        try {
            SubspaceCursor cursor(n, p,
                                  {worker, workers, !options.require_full_support});
            while (auto basis = cursor.next()) {
                if (options.require_full_support && !basis->has_full_support()) continue;
                const std::uint64_t bound = best.load(std::memory_order_relaxed);
                std::uint64_t heaviest = 0;
                for_each_codeword(*basis, options.budget, [&](std::span<const Residue> v) {
                    heaviest = std::max<std::uint64_t>(heaviest, weight(v));
                    return heaviest < bound;
                });
                std::uint64_t seen = best.load(std::memory_order_relaxed);
                while (heaviest < seen &&
                       !best.compare_exchange_weak(seen, heaviest, std::memory_order_relaxed)) {
                }
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }
    if (failure) std::rethrow_exception(failure);
    const std::uint64_t result = best.load();
    if (result == n + 1)
        throw ConsistencyError("lambda_bruteforce: no full-support subspace of F_" +
                               std::to_string(p.value()) + "^" + std::to_string(n) + " found");
    return result;
}

IncrementLemmaReport check_increment_lemma(const FpMatrix& m, std::uint64_t samples,
                                           const EnumerationBudget& budget) {
    if (!has_full_support(m))
        throw DomainError("check_increment_lemma: matrix has a zero column");
    const PrimeModulus& p = m.modulus();
    const std::size_t n = m.col_count();
    const EchelonBasis basis = echelonize(m);

    IncrementLemmaReport report;
    report.capacity = capacity(basis, budget);

    // lambda(0..n-1), lambda(0) = 0.
    std::vector<std::uint64_t> lam(n, 0);
    for (std::size_t i = 1; i < n; ++i) lam[i] = lambda_closed(i, p);

    for_each_codeword(basis, budget, [&](std::span<const Residue> v) {
        const std::size_t w = weight(v);
        if (w == 0) return true;
        ++report.codewords_seen;
        if (std::uint64_t{p.value()} * lam[n - w] <= w) return true;
        ++report.hypothesis_held;
        if (report.capacity <= w) {
            ++report.violations;
            if (!report.witness)
                report.witness.emplace(p, std::vector<Residue>(v.begin(), v.end()));
        }
        return report.hypothesis_held < samples;
    });
    return report;
}

FpMatrix random_full_support_matrix(std::mt19937_64& rng, PrimeModulus p, std::size_t rows,
                                    std::size_t cols) {
    if (rows == 0 || cols == 0) throw DimensionError("random matrix needs rows >= 1 and cols >= 1");
    std::uniform_int_distribution<Residue> entry(0, p.value() - 1);
    std::uniform_int_distribution<Residue> nonzero(1, p.value() - 1);
    std::uniform_int_distribution<std::size_t> row_pick(0, rows - 1);
    std::vector<std::vector<Residue>> a(rows, std::vector<Residue>(cols));
    for (auto& r : a)
        for (auto& e : r) e = entry(rng);
    for (std::size_t c = 0; c < cols; ++c) {
        bool any = false;
        for (const auto& r : a) any = any || r[c] != 0;
        if (!any) a[row_pick(rng)][c] = nonzero(rng);
    }
    return FpMatrix(p, a);
}

}  // namespace capax
