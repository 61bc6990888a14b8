#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace capax {

using Residue = std::uint32_t;

// A prime p with 2 <= p <= 2^16, so products of two residues fit easily in 64 bits.
class PrimeModulus {
public:
    static constexpr std::uint32_t kMaxModulus = 1u << 16;

    // Throws DomainError("p must be prime") for composites and values out of range.
    explicit PrimeModulus(std::uint64_t p);

    std::uint32_t value() const noexcept { return p_; }
    operator std::uint32_t() const noexcept { return p_; }

    Residue reduce(std::uint64_t x) const noexcept { return static_cast<Residue>(x % p_); }
    Residue add(Residue a, Residue b) const noexcept { return reduce(std::uint64_t{a} + b); }
    Residue sub(Residue a, Residue b) const noexcept { return reduce(std::uint64_t{a} + p_ - b); }
    Residue mul(Residue a, Residue b) const noexcept { return reduce(std::uint64_t{a} * b); }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    // Multiplicative inverse of a nonzero residue.
    Residue inverse(Residue a) const;

    friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t x) noexcept;

// Fixed-length vector over F_p. Entries are canonical residues in [0, p).
class FpVector {
public:
    // Zero vector of the given length.
    FpVector(PrimeModulus modulus, std::size_t length);
    // Throws DomainError if any entry is >= p.
    FpVector(PrimeModulus modulus, std::vector<Residue> entries);
    FpVector(PrimeModulus modulus, std::initializer_list<Residue> entries);

    const PrimeModulus& modulus() const noexcept { return modulus_; }
    std::size_t size() const noexcept { return entries_.size(); }
    Residue operator[](std::size_t i) const noexcept { return entries_[i]; }
    Residue at(std::size_t i) const { return entries_.at(i); }
    std::span<const Residue> entries() const noexcept { return entries_; }

    bool is_zero() const noexcept;

    friend bool operator==(const FpVector&, const FpVector&) = default;

private:
    PrimeModulus modulus_;
    std::vector<Residue> entries_;
};

// Componentwise a + b. Throws DimensionError on length or modulus mismatch.
FpVector vec_add(const FpVector& a, const FpVector& b);
// c * a. Throws DomainError unless 0 <= c < p.
FpVector vec_scale(std::uint64_t c, const FpVector& a);

// Number of nonzero entries.
std::size_t weight(const FpVector& a) noexcept;
std::size_t weight(std::span<const Residue> entries) noexcept;

// Nonzero positions, 0-based and increasing. Reports shown to users add 1.
std::vector<std::size_t> support(const FpVector& a);

std::string to_string(const FpVector& a);

}  // namespace capax
