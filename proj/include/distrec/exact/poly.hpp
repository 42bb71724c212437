#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "distrec/errors.hpp"
#include "distrec/exact/bigint.hpp"

namespace distrec::exact {

// Univariate polynomial, coefficients lowest degree first. Trailing zero
// coefficients are always stripped, so the zero polynomial has no
// coefficients and degree -1.
template <typename T>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }

    // x^k
    static Polynomial monomial(std::size_t k, T c = T(1))
    {
        std::vector<T> v(k + 1, T(0));
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    const std::vector<T>& coeffs() const noexcept { return coeffs_; }
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const T& leading() const { return coeffs_.back(); }

    T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }

    T operator()(const T& x) const
    {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        std::vector<T> v(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(v));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b)
    {
        std::vector<T> v(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = a.coeff(i) - b.coeff(i);
        return Polynomial(std::move(v));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(v));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    // e.g. "x^3+2x^2-4x-8"
    std::string str() const
    {
        if (is_zero())
            return "0";
        std::string out;
        for (long k = degree(); k >= 0; --k) {
            const T& c = coeffs_[static_cast<std::size_t>(k)];
            if (c == 0)
                continue;
            const bool negative = c < 0;
            const T mag = negative ? T(-c) : c;
            if (!out.empty() || negative)
                out += negative ? "-" : "+";
            if (k == 0 || mag != 1)
                out += to_string(mag);
            if (k >= 1)
                out += "x";
            if (k >= 2)
                out += "^" + std::to_string(k);
        }
        return out;
    }

private:
    void normalize()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using Poly = Polynomial<BigInt>;
using RationalPoly = Polynomial<Rational>;

template <typename T>
struct PolyDivision {
    Polynomial<T> quotient;
    Polynomial<T> remainder;
};

// Long division p = q * quotient + remainder with deg(remainder) < deg(q).
// Over BigInt every step must divide exactly (always the case for monic q);
// otherwise a DomainError asks the caller to work over Rational.
template <typename T>
PolyDivision<T> poly_divrem(const Polynomial<T>& p, const Polynomial<T>& q)
{
    if (q.is_zero())
        throw DomainError("polynomial division by zero");
    std::vector<T> rem = p.coeffs();
    const std::size_t dq = static_cast<std::size_t>(q.degree());
    if (p.degree() < q.degree())
        return {Polynomial<T>{}, p};
    std::vector<T> quot(rem.size() - dq, T(0));
    const T& lead = q.leading();
    for (std::size_t k = rem.size(); k-- > dq;) {
        if (rem[k] == 0)
            continue;
        T factor = rem[k] / lead;
        if (factor * lead != rem[k])
            throw DomainError("inexact polynomial division over the integers");
        quot[k - dq] = factor;
        for (std::size_t i = 0; i <= dq; ++i)
            rem[k - dq + i] -= factor * q.coeffs()[i];
    }
    rem.resize(dq);
    return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

inline RationalPoly to_rational(const Poly& p)
{
    return RationalPoly(std::vector<Rational>(p.coeffs().begin(), p.coeffs().end()));
}

} // namespace distrec::exact
