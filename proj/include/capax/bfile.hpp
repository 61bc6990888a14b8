#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace capax {

// One "n value" line of an OEIS b-file.
struct BFileEntry {
    std::int64_t index;
    std::uint64_t value;

    friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

// Reads "n value" pairs. Blank lines and lines starting with '#' are skipped.
// Throws DomainError on a malformed line or non-consecutive indices.
std::vector<BFileEntry> read_bfile(std::istream& in);
// Throws IoError when the file cannot be opened.
std::vector<BFileEntry> read_bfile(const std::filesystem::path& path);

// Writes values[i] as index first_index + i, one "n value" per line.
void write_bfile(std::ostream& out, std::span<const std::uint64_t> values,
                 std::int64_t first_index = 1);

struct OffsetReport {
    // ours(n) == theirs(n + offset) on every shared index.
    std::optional<std::int64_t> offset;
    std::uint64_t overlap = 0;  // shared indices under the reported offset
    // When no offset agrees: the shift with the longest agreeing prefix and the
    // first index (ours) where it breaks.
    std::int64_t closest_offset = 0;
    std::optional<std::int64_t> first_disagreement;
    std::uint64_t ours_value = 0;
    std::uint64_t theirs_value = 0;
};

// Tries shifts in order 0, +1, -1, +2, -2, ... up to max_shift and returns the first
// under which the sequences agree on at least min_overlap shared indices.
OffsetReport find_offset(std::span<const BFileEntry> ours, std::span<const BFileEntry> theirs,
                         std::int64_t max_shift, std::uint64_t min_overlap);

}  // namespace capax
