#include "capax/bfile.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "capax/errors.hpp"

namespace capax {

std::vector<BFileEntry> read_bfile(std::istream& in) {
    std::vector<BFileEntry> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        BFileEntry e{};
        std::string rest;
        if (!(ls >> e.index >> e.value) || (ls >> rest))
            throw DomainError("b-file line " + std::to_string(line_no) + " is not \"n value\": " +
                              line);
        if (!entries.empty() && e.index != entries.back().index + 1)
            throw DomainError("b-file line " + std::to_string(line_no) +
                              ": indices are not consecutive");
        entries.push_back(e);
    }
    return entries;
}

std::vector<BFileEntry> read_bfile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read b-file " + path.string());
    return read_bfile(in);
}

void write_bfile(std::ostream& out, std::span<const std::uint64_t> values,
                 std::int64_t first_index) {
    for (std::size_t i = 0; i < values.size(); ++i)
        out << first_index + static_cast<std::int64_t>(i) << ' ' << values[i] << '\n';
}

OffsetReport find_offset(std::span<const BFileEntry> ours, std::span<const BFileEntry> theirs,
                         std::int64_t max_shift, std::uint64_t min_overlap) {
    std::map<std::int64_t, std::uint64_t> lookup;
    for (const BFileEntry& e : theirs) lookup.emplace(e.index, e.value);

    OffsetReport report;
    std::uint64_t best_prefix = 0;
    bool have_closest = false;
    for (std::int64_t step = 0; step <= 2 * max_shift; ++step) {
        const std::int64_t shift = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
        std::uint64_t overlap = 0;
        std::optional<BFileEntry> broken;
        std::uint64_t theirs_at_break = 0;
        for (const BFileEntry& e : ours) {
            auto it = lookup.find(e.index + shift);
            if (it == lookup.end()) continue;
            if (it->second != e.value) {
                broken = e;
                theirs_at_break = it->second;
                break;
            }
            ++overlap;
        }
        if (!broken && overlap >= min_overlap) {
            report.offset = shift;
            report.overlap = overlap;
            report.first_disagreement.reset();
            return report;
        }
        if (broken && (!have_closest || overlap > best_prefix)) {
            have_closest = true;
            best_prefix = overlap;
            report.closest_offset = shift;
            report.overlap = overlap;
            report.first_disagreement = broken->index;
            report.ours_value = broken->value;
            report.theirs_value = theirs_at_break;
        }
    }
    return report;
}

}  // namespace capax
