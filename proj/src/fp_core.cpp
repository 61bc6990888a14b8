#include "capax/fp_core.hpp"

#include <algorithm>
#include <sstream>

#include "capax/errors.hpp"

namespace capax {

bool is_prime(std::uint64_t x) noexcept {
    if (x < 2) return false;
    if (x < 4) return true;
    if (x % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= x; d += 2)
        if (x % d == 0) return false;
    return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(0) {
    if (p > kMaxModulus || !is_prime(p))
        throw DomainError("p must be prime (2 <= p <= 65536), got " + std::to_string(p));
    p_ = static_cast<std::uint32_t>(p);
}

Residue PrimeModulus::inverse(Residue a) const {
    if (a % p_ == 0) throw DomainError("zero has no inverse mod " + std::to_string(p_));
    // Extended Euclid on (a, p).
    std::int64_t r0 = p_, r1 = a % p_, t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        std::int64_t t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (t0 < 0) t0 += p_;
    return static_cast<Residue>(t0);
}

FpVector::FpVector(PrimeModulus modulus, std::size_t length)
    : modulus_(modulus), entries_(length, 0) {}

FpVector::FpVector(PrimeModulus modulus, std::vector<Residue> entries)
    : modulus_(modulus), entries_(std::move(entries)) {
    for (Residue e : entries_)
        if (e >= modulus_.value())
            throw DomainError("entry " + std::to_string(e) + " is not a residue mod " +
                              std::to_string(modulus_.value()));
}

FpVector::FpVector(PrimeModulus modulus, std::initializer_list<Residue> entries)
    : FpVector(modulus, std::vector<Residue>(entries)) {}

bool FpVector::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](Residue e) { return e == 0; });
}

FpVector vec_add(const FpVector& a, const FpVector& b) {
    if (!(a.modulus() == b.modulus()))
        throw DimensionError("vec_add: modulus mismatch");
    if (a.size() != b.size())
        throw DimensionError("vec_add: length mismatch (" + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()) + ")");
    const PrimeModulus& f = a.modulus();
    std::vector<Residue> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a[i], b[i]);
    return FpVector(f, std::move(out));
}

FpVector vec_scale(std::uint64_t c, const FpVector& a) {
    const PrimeModulus& f = a.modulus();
    if (c >= f.value())
        throw DomainError("vec_scale: scalar " + std::to_string(c) + " is not a residue mod " +
                          std::to_string(f.value()));
    std::vector<Residue> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.mul(static_cast<Residue>(c), a[i]);
    return FpVector(f, std::move(out));
}

std::size_t weight(std::span<const Residue> entries) noexcept {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](Residue e) { return e != 0; }));
}

std::size_t weight(const FpVector& a) noexcept { return weight(a.entries()); }

std::vector<std::size_t> support(const FpVector& a) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) idx.push_back(i);
    return idx;
}

std::string to_string(const FpVector& a) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ')';
    return os.str();
}

}  // namespace capax
