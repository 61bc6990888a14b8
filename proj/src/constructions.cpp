#include "capax/constructions.hpp"

#include "capax/errors.hpp"
#include "capax/sequence.hpp"

namespace capax {

std::string_view to_string(BlockKind kind) noexcept {
    switch (kind) {
        case BlockKind::B: return "B";
        case BlockKind::Bprime: return "Bprime";
        case BlockKind::Btilde: return "Btilde";
        case BlockKind::extremal: return "extremal";
    }
    return "?";
}

std::optional<BlockKind> parse_block_kind(std::string_view name) noexcept {
    if (name == "B") return BlockKind::B;
    if (name == "Bprime") return BlockKind::Bprime;
    if (name == "Btilde") return BlockKind::Btilde;
    if (name == "extremal") return BlockKind::extremal;
    return std::nullopt;
}

void BlockSpec::validate() const {
    switch (kind) {
        case BlockKind::B: break;
        case BlockKind::Bprime:
            if (k < 1) throw DomainError("Bprime requires k >= 1");
            break;
        case BlockKind::Btilde:
            if (j > k)
                throw DomainError("Btilde requires 0 <= j <= k (got k = " + std::to_string(k) +
                                  ", j = " + std::to_string(j) + ")");
            break;
        case BlockKind::extremal:
            if (n < 1) throw DomainError("extremal requires n >= 1");
            break;
    }
}

namespace {

void check_size(std::uint64_t rows, std::uint64_t cols) {
    if (cols != 0 && rows > kMaxMaterializedEntries / cols)
        throw ResourceError("matrix of " + std::to_string(rows) + " x " + std::to_string(cols) +
                            " entries is too large to materialize");
}

}  // namespace

const BlockBuilder::Rows& BlockBuilder::rows_of_B(std::uint64_t k) {
    if (auto it = cache_.find(k); it != cache_.end()) return it->second;
    const std::uint64_t width = sigma(k, modulus_);
    check_size(k + 1, width);
    Rows rows;
    if (k == 0) {
        rows = {{1}};
    } else {
        const Rows& inner = rows_of_B(k - 1);
        const std::uint64_t inner_width = inner.front().size();
        const std::uint32_t p = modulus_.value();
        rows.assign(k + 1, std::vector<Residue>());
        for (std::uint64_t r = 0; r < k; ++r) {
            rows[r].reserve(width);
            for (std::uint32_t copy = 0; copy < p; ++copy)
                rows[r].insert(rows[r].end(), inner[r].begin(), inner[r].end());
            rows[r].push_back(0);
        }
        auto& last = rows[k];
        last.reserve(width);
        for (std::uint32_t c = 0; c < p; ++c) last.insert(last.end(), inner_width, c);
        last.push_back(1);
    }
    return cache_.emplace(k, std::move(rows)).first->second;
}

FpMatrix BlockBuilder::B(std::uint64_t k) { return FpMatrix(modulus_, rows_of_B(k)); }

FpMatrix BlockBuilder::B_prime(std::uint64_t k) {
    BlockSpec{modulus_.value(), BlockKind::Bprime, k}.validate();
    Rows rows = rows_of_B(k);
    rows.pop_back();
    return FpMatrix(modulus_, rows);
}

FpMatrix BlockBuilder::B_tilde(std::uint64_t k, std::uint64_t j) {
    BlockSpec{modulus_.value(), BlockKind::Btilde, k, j}.validate();
    const Rows& base = rows_of_B(j);
    check_size(k + 1, base.front().size());
    Rows rows(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(j));
    for (std::uint64_t r = j; r <= k; ++r) rows.push_back(base.back());
    return FpMatrix(modulus_, rows);
}

FpMatrix BlockBuilder::extremal(std::uint64_t n) {
    BlockSpec{modulus_.value(), BlockKind::extremal, 0, 0, n}.validate();
    const SigmaDecomposition d = decompose(n, modulus_);
    check_size(d.k + 1, n);
    Rows rows(d.k + 1);
    for (auto& r : rows) r.reserve(n);
    // Blocks in nondecreasing order of j.
    for (std::uint64_t j = 0; j <= d.k; ++j) {
        if (d.coefficients[j] == 0) continue;
        const Rows& base = rows_of_B(j);
        for (std::uint64_t r = 0; r <= d.k; ++r) {
            const auto& src = r < j ? base[r] : base.back();
            for (std::uint64_t copy = 0; copy < d.coefficients[j]; ++copy)
                rows[r].insert(rows[r].end(), src.begin(), src.end());
        }
    }
    return FpMatrix(modulus_, rows);
}

FpMatrix BlockBuilder::build(const BlockSpec& spec) {
    if (spec.p != modulus_.value()) throw DimensionError("block spec modulus differs from builder");
    spec.validate();
    switch (spec.kind) {
        case BlockKind::B: return B(spec.k);
        case BlockKind::Bprime: return B_prime(spec.k);
        case BlockKind::Btilde: return B_tilde(spec.k, spec.j);
        case BlockKind::extremal: return extremal(spec.n);
    }
    throw DomainError("unknown block kind");
}

FpMatrix build_B(std::uint64_t k, PrimeModulus p) { return BlockBuilder(p).B(k); }
FpMatrix build_B_prime(std::uint64_t k, PrimeModulus p) { return BlockBuilder(p).B_prime(k); }
FpMatrix build_B_tilde(std::uint64_t k, std::uint64_t j, PrimeModulus p) {
    return BlockBuilder(p).B_tilde(k, j);
}
FpMatrix build_extremal(std::uint64_t n, PrimeModulus p) { return BlockBuilder(p).extremal(n); }

}  // namespace capax
