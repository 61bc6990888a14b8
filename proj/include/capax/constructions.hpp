#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "capax/code_space.hpp"

namespace capax {

enum class BlockKind { B, Bprime, Btilde, extremal };

std::string_view to_string(BlockKind kind) noexcept;
std::optional<BlockKind> parse_block_kind(std::string_view name) noexcept;

// Which matrix to build. k is used by B, Bprime and Btilde; j only by Btilde; n only
// by extremal.
struct BlockSpec {
    std::uint32_t p = 2;
    BlockKind kind = BlockKind::B;
    std::uint64_t k = 0;
    std::uint64_t j = 0;
    std::uint64_t n = 1;

    // Throws DomainError when the indices are invalid for the kind.
    void validate() const;
};

// Dense matrices hold at most this many entries.
inline constexpr std::uint64_t kMaxMaterializedEntries = std::uint64_t{1} << 26;

// Builds the recursive constant-weight blocks for one modulus, memoizing B_k
// rows since B_k contains p copies of B_{k-1}. Not thread-safe; use one per thread.
class BlockBuilder {
public:
    explicit BlockBuilder(PrimeModulus p) : modulus_(p) {}

    // (k+1) x sigma_k. B_0 = [1]; B_k = [B_{k-1} ... B_{k-1} | 0] over the row
    // 0..0 1..1 ... (p-1)..(p-1) 1.
    FpMatrix B(std::uint64_t k);
    // B_k without its last row; k >= 1.
    FpMatrix B_prime(std::uint64_t k);
    // (k+1) x sigma_j: first j rows of B_j, then the last row of B_j repeated k+1-j times.
    FpMatrix B_tilde(std::uint64_t k, std::uint64_t j);
    // b_j copies of B~_{k,j} side by side for j = 0..k, using decompose(n, p).
    FpMatrix extremal(std::uint64_t n);

    FpMatrix build(const BlockSpec& spec);

private:
    using Rows = std::vector<std::vector<Residue>>;
    const Rows& rows_of_B(std::uint64_t k);

    PrimeModulus modulus_;
    std::map<std::uint64_t, Rows> cache_;
};

FpMatrix build_B(std::uint64_t k, PrimeModulus p);
FpMatrix build_B_prime(std::uint64_t k, PrimeModulus p);
FpMatrix build_B_tilde(std::uint64_t k, std::uint64_t j, PrimeModulus p);
FpMatrix build_extremal(std::uint64_t n, PrimeModulus p);

}  // namespace capax
