#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "distrec/decomp/decomposition.hpp"
#include "distrec/errors.hpp"
#include "distrec/exact/bigint.hpp"
#include "distrec/exact/poly.hpp"

namespace distrec::recurrence {

using exact::BigInt;
using exact::Poly;
using exact::Rational;
using exact::u64;

// c_0 det(D_n) + c_1 det(D_{n-1}) + ... + c_{m-1} det(D_{n-m+1}) = 0 with c_0 = 1.
class Recurrence {
public:
    explicit Recurrence(std::vector<BigInt> coeffs, std::optional<decomp::Decomposition> origin = std::nullopt)
        : coeffs_(std::move(coeffs)), origin_(std::move(origin))
    {
        if (coeffs_.empty() || coeffs_.front() != 1)
            throw DomainError("a recurrence must start with c_0 = 1");
    }

    static Recurrence from_ints(std::initializer_list<long long> cs)
    {
        std::vector<BigInt> v;
        for (long long c : cs)
            v.emplace_back(c);
        return Recurrence(std::move(v));
    }

    std::size_t length() const noexcept { return coeffs_.size(); }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    const BigInt& operator[](std::size_t j) const { return coeffs_.at(j); }
    const std::optional<decomp::Decomposition>& origin() const noexcept { return origin_; }

    bool minimal() const noexcept { return coeffs_.size() == 1 || coeffs_.back() != 0; }

    Recurrence trimmed() const
    {
        std::vector<BigInt> v = coeffs_;
        while (v.size() > 1 && v.back() == 0)
            v.pop_back();
        return Recurrence(std::move(v), origin_);
    }

    // Zero-padded to `length` terms.
    Recurrence padded(std::size_t length) const
    {
        if (length < coeffs_.size())
            throw DimensionError("cannot pad a recurrence to fewer terms");
        std::vector<BigInt> v = coeffs_;
        v.resize(length, BigInt(0));
        return Recurrence(std::move(v), origin_);
    }

    Recurrence with_origin(decomp::Decomposition d) const { return Recurrence(coeffs_, std::move(d)); }

    // "[1,2,-4,-8]"
    std::string str() const
    {
        std::string out = "[";
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            out += (i ? "," : "") + coeffs_[i].str();
        return out + "]";
    }

    // Same coefficients; origin is provenance only.
    friend bool operator==(const Recurrence& a, const Recurrence& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<BigInt> coeffs_;
    std::optional<decomp::Decomposition> origin_;
};

// -(n-1)(-2)^(n-2); 0 at n = 1.
inline BigInt graham_pollak(std::size_t n)
{
    if (n == 0)
        throw DomainError("graham_pollak needs n >= 1");
    if (n == 1)
        return 0;
    BigInt power = boost::multiprecision::pow(BigInt(-2), static_cast<unsigned>(n - 2));
    return -BigInt(n - 1) * power;
}

// x^(m-1) + c_1 x^(m-2) + ... + c_{m-1}
inline Poly char_poly(const Recurrence& r)
{
    std::vector<BigInt> lowest_first(r.coeffs().rbegin(), r.coeffs().rend());
    return Poly(std::move(lowest_first));
}

// (x + 2)^2 = x^2 + 4x + 4
inline Poly gp_factor() { return Poly({BigInt(4), BigInt(4), BigInt(1)}); }

// True iff (x+2)^2 divides the characteristic polynomial, i.e. every
// sequence (A + Bn)(-2)^n satisfies the recurrence.
inline bool has_gp_factor(const Recurrence& r)
{
    const Poly cp = char_poly(r);
    if (cp.degree() < 2)
        return false;
    return exact::poly_divrem(cp, gp_factor()).remainder.is_zero();
}

// a_1..a_upto where a_1..a_{m-1} = initial and later terms follow
// a_n = -(c_1 a_{n-1} + ... + c_{m-1} a_{n-m+1}).
inline std::vector<BigInt> solve_recurrence(const Recurrence& r, const std::vector<BigInt>& initial,
                                            std::size_t upto)
{
    const std::size_t order = r.length() - 1;
    if (initial.size() != order)
        throw DomainError("recurrence of length " + std::to_string(r.length()) + " needs " + std::to_string(order) +
                          " initial values, got " + std::to_string(initial.size()));
    std::vector<BigInt> a = initial;
    if (upto < a.size())
        a.resize(upto);
    while (a.size() < upto) {
        BigInt next = 0;
        for (std::size_t j = 1; j <= order; ++j)
            next -= r[j] * a[a.size() - j];
        a.push_back(std::move(next));
    }
    return a;
}

} // namespace distrec::recurrence
