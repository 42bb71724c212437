#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "distrec/errors.hpp"
#include "distrec/exact/bigint.hpp"

namespace distrec::exact {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

inline u64 add_mod(u64 a, u64 b, u64 p)
{
    u64 s = a + b;
    return s >= p ? s - p : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

inline u64 pow_mod(u64 base, u64 exp, u64 p)
{
    u64 result = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1)
            result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return result;
}

// Deterministic Miller-Rabin for all 64-bit inputs.
inline bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0)
            return n == small;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

// Moduli must stay below 2^63 so that the Shoup products in the determinant
// kernel cannot overflow.
inline constexpr unsigned max_prime_bits = 62;
inline constexpr unsigned min_prime_bits = 3;

inline void require_modulus(u64 p)
{
    if (p >= (u64(1) << 63) || !is_prime(p) || p == 2)
        throw ConfigError("modulus " + std::to_string(p) + " is not an odd prime below 2^63");
}

// An element of Z/pZ together with its modulus.
struct FieldElement {
    u64 value = 0;
    u64 modulus = 0;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

// Arithmetic context for Z/pZ.
class PrimeField {
public:
    explicit PrimeField(u64 p) : p_(p) { require_modulus(p); }

    u64 modulus() const noexcept { return p_; }

    FieldElement element(u64 v) const { return {v % p_, p_}; }

    u64 reduce(const BigInt& x) const
    {
        BigInt r = x % p_;
        if (r < 0)
            r += p_;
        return static_cast<u64>(r);
    }

    u64 reduce(std::int64_t x) const
    {
        const std::int64_t r = x % static_cast<std::int64_t>(p_);
        return r < 0 ? static_cast<u64>(r + static_cast<std::int64_t>(p_)) : static_cast<u64>(r);
    }

    u64 add(u64 a, u64 b) const { return add_mod(a, b, p_); }
    u64 sub(u64 a, u64 b) const { return sub_mod(a, b, p_); }
    u64 mul(u64 a, u64 b) const { return mul_mod(a, b, p_); }
    u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
    u64 pow(u64 a, u64 e) const { return pow_mod(a, e, p_); }

    u64 inv(u64 a) const
    {
        if (a % p_ == 0)
            throw DomainError("inverse of zero in prime field");
        return pow_mod(a, p_ - 2, p_);
    }

private:
    u64 p_;
};

// Uniform random prime with exactly `bits` bits.
template <typename Rng>
u64 random_prime(unsigned bits, Rng& rng)
{
    if (bits < min_prime_bits || bits > max_prime_bits)
        throw ConfigError("prime bit width must lie in [" + std::to_string(min_prime_bits) + ", " +
                          std::to_string(max_prime_bits) + "], got " + std::to_string(bits));
    const u64 lo = u64(1) << (bits - 1);
    const u64 hi = (u64(1) << bits) - 1;
    std::uniform_int_distribution<u64> dist(lo, hi);
    for (;;) {
        const u64 candidate = dist(rng) | 1;
        if (is_prime(candidate))
            return candidate;
    }
}

// Distinct random primes of a fixed width from a seeded generator.
class PrimeStream {
public:
    PrimeStream(unsigned bits, u64 seed) : bits_(bits), rng_(seed) {}

    u64 next()
    {
        // Narrow widths hold only a handful of primes.
        for (int attempt = 0; attempt < 4096; ++attempt) {
            const u64 p = random_prime(bits_, rng_);
            bool fresh = true;
            for (u64 q : used_)
                if (q == p)
                    fresh = false;
            if (fresh) {
                used_.push_back(p);
                return p;
            }
        }
        throw ConfigError("ran out of distinct " + std::to_string(bits_) + "-bit primes");
    }

private:
    unsigned bits_;
    std::mt19937_64 rng_;
    std::vector<u64> used_;
};

} // namespace distrec::exact
