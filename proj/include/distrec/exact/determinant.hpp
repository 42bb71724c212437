#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "distrec/errors.hpp"
#include "distrec/exact/bigint.hpp"
#include "distrec/exact/matrix.hpp"
#include "distrec/exact/prime_field.hpp"

namespace distrec::exact {

/*
 * Determinant kernels.
 *
 *   det_bareiss  fraction-free elimination over the integers; every division
 *                is exact (Sylvester's identity), so intermediates stay in Z.
 *   det_mod      Gaussian elimination in Z/pZ; the row update uses Shoup's
 *                precomputed-quotient multiplication since the multiplier is
 *                fixed along a row. Moduli below 2^31 run on 32-bit lanes,
 *                which the compiler vectorizes.
 *   det_crt      det_mod over enough random primes to exceed twice the
 *                Hadamard bound, recombined by Chinese remaindering with a
 *                symmetric lift into (-M/2, M/2].
 *
 * The 0x0 determinant is 1.
 */

template <typename T>
T det_bareiss(Matrix<T> a)
{
    if (!a.square())
        throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0)
        return T(1);

    bool negate = false;
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a(pivot, k) == 0)
                ++pivot;
            if (pivot == n)
                return T(0);
            a.swap_rows(k, pivot);
            negate = !negate;
        }
        const T& akk = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const T aik = a(i, k);
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * akk - aik * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = akk;
    }
    T det = a(n - 1, n - 1);
    return negate ? T(-det) : det;
}

namespace detail {

    // In-place determinant of an n x n row-major matrix with entries in [0, p).
    inline u64 det_mod_reduced(std::vector<u64>& a, std::size_t n, u64 p)
    {
        const PrimeField field(p);
        u64 det = 1 % p;
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t pivot = k;
            while (pivot < n && a[pivot * n + k] == 0)
                ++pivot;
            if (pivot == n)
                return 0;
            if (pivot != k) {
                for (std::size_t j = k; j < n; ++j)
                    std::swap(a[k * n + j], a[pivot * n + j]);
                det = field.neg(det);
            }
            const u64 piv = a[k * n + k];
            det = field.mul(det, piv);
            const u64 inv = field.inv(piv);
            const u64* row_k = &a[k * n];
            for (std::size_t i = k + 1; i < n; ++i) {
                u64* row_i = &a[i * n];
                if (row_i[k] == 0)
                    continue;
                const u64 f = field.mul(row_i[k], inv);
                const u64 f_shoup = static_cast<u64>((static_cast<u128>(f) << 64) / p);
                row_i[k] = 0;
                for (std::size_t j = k + 1; j < n; ++j) {
                    const u64 x = row_k[j];
                    const u64 q = static_cast<u64>((static_cast<u128>(x) * f_shoup) >> 64);
                    u64 r = x * f - q * p;
                    if (r >= p)
                        r -= p;
                    const u64 y = row_i[j];
                    row_i[j] = y >= r ? y - r : y + (p - r);
                }
            }
        }
        return det;
    }

    inline std::uint32_t det_mod_reduced32(std::vector<std::uint32_t>& a, std::size_t n, std::uint32_t p)
    {
        using u32 = std::uint32_t;
        const PrimeField field(p);
        u64 det = 1;
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t pivot = k;
            while (pivot < n && a[pivot * n + k] == 0)
                ++pivot;
            if (pivot == n)
                return 0;
            if (pivot != k) {
                for (std::size_t j = k; j < n; ++j)
                    std::swap(a[k * n + j], a[pivot * n + j]);
                det = field.neg(det);
            }
            const u64 piv = a[k * n + k];
            det = field.mul(det, piv);
            const u64 inv = field.inv(piv);
            const u32* __restrict row_k = &a[k * n];
            for (std::size_t i = k + 1; i < n; ++i) {
                u32* __restrict row_i = &a[i * n];
                if (row_i[k] == 0)
                    continue;
                const u32 f = static_cast<u32>(field.mul(row_i[k], inv));
                const u32 f_shoup = static_cast<u32>((static_cast<u64>(f) << 32) / p);
                row_i[k] = 0;
                for (std::size_t j = k + 1; j < n; ++j) {
                    const u32 x = row_k[j];
                    const u32 q = static_cast<u32>((static_cast<u64>(x) * f_shoup) >> 32);
                    u32 r = x * f - q * p;
                    r = r >= p ? r - p : r;
                    const u32 y = row_i[j];
                    const u32 diff = y - r;
                    row_i[j] = y >= r ? diff : diff + p;
                }
            }
        }
        return static_cast<u32>(det);
    }

    // Dispatches on the modulus width; entries must lie in [0, p).
    inline u64 det_mod_dispatch(std::vector<u64>& a, std::size_t n, u64 p)
    {
        if (p < (u64(1) << 31)) {
            std::vector<std::uint32_t> narrow(a.begin(), a.end());
            return detail::det_mod_reduced32(narrow, n, static_cast<std::uint32_t>(p));
        }
        return det_mod_reduced(a, n, p);
    }

    // Entries as int64 when they all fit, for fast repeated reduction.
    inline std::optional<std::vector<std::int64_t>> small_entries(const IntMatrix& m)
    {
        std::vector<std::int64_t> out;
        out.reserve(m.entries().size());
        const BigInt lo = std::numeric_limits<std::int64_t>::min();
        const BigInt hi = std::numeric_limits<std::int64_t>::max();
        for (const BigInt& x : m.entries()) {
            if (x < lo || x > hi)
                return std::nullopt;
            out.push_back(static_cast<std::int64_t>(x));
        }
        return out;
    }

    inline std::vector<u64> reduce_entries(const IntMatrix& m, const PrimeField& field,
                                           const std::optional<std::vector<std::int64_t>>& small)
    {
        std::vector<u64> out(m.entries().size());
        if (small) {
            for (std::size_t i = 0; i < out.size(); ++i)
                out[i] = field.reduce((*small)[i]);
        } else {
            for (std::size_t i = 0; i < out.size(); ++i)
                out[i] = field.reduce(m.entries()[i]);
        }
        return out;
    }

} // namespace detail

inline FieldElement det_mod(const IntMatrix& m, u64 p)
{
    if (!m.square())
        throw DimensionError("determinant of a non-square matrix");
    const PrimeField field(p);
    std::vector<u64> a = detail::reduce_entries(m, field, detail::small_entries(m));
    return {detail::det_mod_dispatch(a, m.rows(), p), p};
}

// Determinant of a matrix whose entries are already residues in [0, p).
inline u64 det_mod_residues(std::vector<u64> entries, std::size_t n, u64 p)
{
    if (entries.size() != n * n)
        throw DimensionError("residue matrix is not n x n");
    require_modulus(p);
    return detail::det_mod_dispatch(entries, n, p);
}

// min over rows/columns of the product of ceil(||v||_2), in exact integer
// arithmetic. Bounds |det(m)|.
inline BigInt hadamard_bound(const IntMatrix& m)
{
    if (!m.square())
        throw DimensionError("Hadamard bound of a non-square matrix");
    const std::size_t n = m.rows();
    BigInt by_rows = 1;
    BigInt by_cols = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt row_sq = 0;
        BigInt col_sq = 0;
        for (std::size_t j = 0; j < n; ++j) {
            row_sq += m(i, j) * m(i, j);
            col_sq += m(j, i) * m(j, i);
        }
        by_rows *= isqrt_ceil(row_sq);
        by_cols *= isqrt_ceil(col_sq);
    }
    return by_rows < by_cols ? by_rows : by_cols;
}

// Incremental Chinese remaindering: value in [0, modulus).
class CrtAccumulator {
public:
    void add(u64 residue, u64 p)
    {
        const PrimeField field(p);
        const u64 x_mod_p = field.reduce(value_);
        const u64 m_mod_p = field.reduce(modulus_);
        const u64 t = field.mul(field.sub(residue % p, x_mod_p), field.inv(m_mod_p));
        value_ += modulus_ * t;
        modulus_ *= p;
    }

    const BigInt& modulus() const noexcept { return modulus_; }
    const BigInt& value() const noexcept { return value_; }

    // Representative in (-M/2, M/2].
    BigInt symmetric() const
    {
        if (2 * value_ > modulus_)
            return value_ - modulus_;
        return value_;
    }

private:
    BigInt value_ = 0;
    BigInt modulus_ = 1;
};

// The CRT result does not depend on the prime width; 31-bit primes take the
// vectorized kernel and are several times faster per bit of modulus.
struct CrtOptions {
    unsigned prime_bits = 31;
    u64 seed = 0x9e3779b97f4a7c15ULL;
};

struct CrtDeterminant {
    BigInt value;
    BigInt hadamard;
    std::vector<u64> primes;
};

inline CrtDeterminant det_crt_detailed(const IntMatrix& m, const CrtOptions& options = {})
{
    if (!m.square())
        throw DimensionError("determinant of a non-square matrix");
    CrtDeterminant out;
    out.hadamard = hadamard_bound(m);
    if (out.hadamard == 0) {
        out.value = 0;
        return out;
    }
    const BigInt target = 2 * out.hadamard;
    const auto small = detail::small_entries(m);
    PrimeStream primes(options.prime_bits, options.seed);
    CrtAccumulator acc;
    while (acc.modulus() <= target) {
        const u64 p = primes.next();
        const PrimeField field(p);
        std::vector<u64> a = detail::reduce_entries(m, field, small);
        acc.add(detail::det_mod_dispatch(a, m.rows(), p), p);
        out.primes.push_back(p);
    }
    out.value = acc.symmetric();
    return out;
}

inline BigInt det_crt(const IntMatrix& m, const CrtOptions& options = {})
{
    return det_crt_detailed(m, options).value;
}

} // namespace distrec::exact
