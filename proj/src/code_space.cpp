#include "capax/code_space.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "capax/errors.hpp"

namespace capax {

FpMatrix::FpMatrix(PrimeModulus modulus, std::vector<FpVector> rows)
    : modulus_(modulus), rows_(std::move(rows)) {
    if (rows_.empty()) throw DimensionError("matrix needs at least one row");
    const std::size_t n = rows_.front().size();
    if (n == 0) throw DimensionError("matrix needs at least one column");
    for (const FpVector& r : rows_) {
        if (!(r.modulus() == modulus_)) throw DimensionError("matrix rows use a different modulus");
        if (r.size() != n)
            throw DimensionError("ragged matrix: row of length " + std::to_string(r.size()) +
                                 ", expected " + std::to_string(n));
    }
}

namespace {

std::vector<FpVector> to_vectors(PrimeModulus modulus,
                                 const std::vector<std::vector<Residue>>& rows) {
    std::vector<FpVector> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.emplace_back(modulus, r);
    return out;
}

}  // namespace

FpMatrix::FpMatrix(PrimeModulus modulus, const std::vector<std::vector<Residue>>& rows)
    : FpMatrix(modulus, to_vectors(modulus, rows)) {}

FpMatrix FpMatrix::identity(PrimeModulus modulus, std::size_t n) {
    std::vector<std::vector<Residue>> rows(n, std::vector<Residue>(n, 0));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
    return FpMatrix(modulus, rows);
}

EchelonBasis::EchelonBasis(PrimeModulus modulus, std::size_t cols, std::vector<FpVector> rows,
                           std::vector<std::size_t> pivots)
    : modulus_(modulus), cols_(cols), rows_(std::move(rows)), pivots_(std::move(pivots)) {
    if (rows_.size() != pivots_.size())
        throw ConsistencyError("echelon basis: rank differs from pivot count");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (!(rows_[i].modulus() == modulus_) || rows_[i].size() != cols_)
            throw ConsistencyError("echelon basis: row shape mismatch");
        const std::size_t pc = pivots_[i];
        if (pc >= cols_ || (i > 0 && pc <= pivots_[i - 1]))
            throw ConsistencyError("echelon basis: pivots not strictly increasing");
        if (rows_[i][pc] != 1) throw ConsistencyError("echelon basis: pivot entry is not 1");
        for (std::size_t c = 0; c < pc; ++c)
            if (rows_[i][c] != 0) throw ConsistencyError("echelon basis: nonzero left of pivot");
        for (std::size_t o = 0; o < rows_.size(); ++o)
            if (o != i && rows_[o][pc] != 0)
                throw ConsistencyError("echelon basis: pivot column not cleared");
    }
}

bool EchelonBasis::has_full_support() const noexcept {
    for (std::size_t c = 0; c < cols_; ++c) {
        bool any = false;
        for (const FpVector& r : rows_)
            if (r[c] != 0) {
                any = true;
                break;
            }
        if (!any) return false;
    }
    return true;
}

EchelonBasis echelonize(const FpMatrix& m) {
    const PrimeModulus& f = m.modulus();
    const std::size_t rows = m.row_count();
    const std::size_t cols = m.col_count();
    std::vector<std::vector<Residue>> a;
    a.reserve(rows);
    for (const FpVector& r : m.rows()) a.emplace_back(r.entries().begin(), r.entries().end());

    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t sel = lead;
        while (sel < rows && a[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[lead]);
        const Residue inv = f.inverse(a[lead][c]);
        for (Residue& e : a[lead]) e = f.mul(e, inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || a[r][c] == 0) continue;
            const Residue factor = a[r][c];
            for (std::size_t j = c; j < cols; ++j)
                a[r][j] = f.sub(a[r][j], f.mul(factor, a[lead][j]));
        }
        pivots.push_back(c);
        ++lead;
    }
    std::vector<FpVector> basis;
    basis.reserve(lead);
    for (std::size_t r = 0; r < lead; ++r) basis.emplace_back(f, std::move(a[r]));
    return EchelonBasis(f, cols, std::move(basis), std::move(pivots));
}

std::uint64_t codeword_count(const EchelonBasis& basis, const EnumerationBudget& budget) {
    const std::uint64_t p = basis.modulus().value();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < basis.rank(); ++i) {
        if (count > budget.max_items / p)
            throw ResourceError("row space has " + std::to_string(p) + "^" +
                                std::to_string(basis.rank()) +
                                " codewords, over the enumeration budget of " +
                                std::to_string(budget.max_items));
        count *= p;
    }
    if (count > budget.max_items)
        throw ResourceError("enumeration budget of " + std::to_string(budget.max_items) +
                            " codewords exceeded");
    return count;
}

Rowspace::Rowspace(EchelonBasis basis, const EnumerationBudget& budget)
    : basis_(std::move(basis)), count_(codeword_count(basis_, budget)) {}

Rowspace::iterator::iterator(const Rowspace* space)
    : space_(space),
      digits_(space->basis_.rank(), 0),
      current_(space->basis_.col_count(), 0),
      done_(false) {}

Rowspace::iterator& Rowspace::iterator::operator++() {
    const EchelonBasis& b = space_->basis_;
    const PrimeModulus& f = b.modulus();
    std::size_t i = 0;
    for (; i < digits_.size(); ++i) {
        const auto row = b.rows()[i].entries();
        for (std::size_t c = 0; c < current_.size(); ++c) current_[c] = f.add(current_[c], row[c]);
        if (++digits_[i] < f.value()) break;
        digits_[i] = 0;
    }
    if (i == digits_.size()) done_ = true;
    return *this;
}

Rowspace rowspace_codewords(const FpMatrix& m, const EnumerationBudget& budget) {
    return Rowspace(echelonize(m), budget);
}

std::size_t capacity(const EchelonBasis& basis, const EnumerationBudget& budget) {
    std::size_t best = 0;
    const std::size_t n = basis.col_count();
    for_each_codeword(basis, budget, [&](std::span<const Residue> v) {
        best = std::max(best, weight(v));
        return best < n;
    });
    return best;
}

std::size_t capacity(const FpMatrix& m, const EnumerationBudget& budget) {
    return capacity(echelonize(m), budget);
}

std::map<std::size_t, std::uint64_t> weight_distribution(const FpMatrix& m,
                                                         const EnumerationBudget& budget) {
    std::map<std::size_t, std::uint64_t> dist;
    for_each_codeword(echelonize(m), budget, [&](std::span<const Residue> v) {
        const std::size_t w = weight(v);
        if (w != 0) ++dist[w];
        return true;
    });
    return dist;
}

bool has_full_support(const FpMatrix& m) noexcept {
    for (std::size_t c = 0; c < m.col_count(); ++c) {
        bool any = false;
        for (const FpVector& r : m.rows())
            if (r[c] != 0) {
                any = true;
                break;
            }
        if (!any) return false;
    }
    return true;
}

}  // namespace capax
