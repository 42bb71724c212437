#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "distrec/decomp/bordered.hpp"
#include "distrec/decomp/decomposition.hpp"
#include "distrec/errors.hpp"
#include "distrec/exact/determinant.hpp"
#include "distrec/exact/linear_solve.hpp"
#include "distrec/recurrence/recurrence.hpp"

namespace distrec::recurrence {

/*
 * Recurrence discovery by exact linear solving.
 *
 * Each sample instance g gives one equation in c_1..c_{m-1}:
 *
 *     sum_{j>=1} c_j det(B_{m-j}(g)) = -det(T(g))
 *
 * with T the decomposition's bordered matrix and B_k the bordered path
 * minors. Samples are small random integers, so the system is solved over Q
 * with no tolerance anywhere.
 *
 * For generic instances the determinants det(B_k) obey
 * det(B_k) + 4 det(B_{k-1}) + 4 det(B_{k-2}) = 0 and det(T) coincides with
 * det(B_m), so the system has rank 2 for every m >= 3. The solution set is
 * the (m-3)-dimensional family of relations whose characteristic polynomial
 * is divisible by (x+2)^2; only m = 3 is unique. `shortest` reports the
 * unique relation of least length, which is what the samples do identify.
 */

enum class DiscoveryStatus { unique, underdetermined, no_relation };

inline const char* to_string(DiscoveryStatus s)
{
    switch (s) {
    case DiscoveryStatus::unique:
        return "unique";
    case DiscoveryStatus::underdetermined:
        return "underdetermined";
    case DiscoveryStatus::no_relation:
        return "no-relation";
    }
    return "?";
}

struct DiscoveryConfig {
    std::uint64_t seed = 1;
    std::int64_t entry_bound = 10;
    std::vector<std::size_t> fit_block_sizes{2, 3, 4};
    std::vector<std::size_t> cv_block_sizes{2, 3, 4, 5, 6};
    std::size_t equations_per_unknown = 3;
    std::size_t cv_samples = 16;
    bool symmetric = false;
};

struct DiscoveryResult {
    DiscoveryStatus status = DiscoveryStatus::no_relation;
    std::optional<decomp::Decomposition> origin;
    // Set only for a unique integral solution: the minimal (trimmed) form and
    // the full-length vector.
    std::optional<Recurrence> recurrence;
    std::vector<BigInt> untrimmed;
    // Affine solution family for (c_1, ..., c_{m-1}).
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> basis;
    std::size_t dimension = 0;
    std::size_t rank = 0;
    // Least-length relation uniquely determined by the samples.
    std::optional<Recurrence> shortest;
    std::size_t samples_used = 0;
    std::size_t cv_trials = 0;
    bool cv_passed = false;
};

namespace detail {

    struct SampleSystem {
        exact::RationalMatrix lhs; // column j-1 holds det(B_{m-j})
        std::vector<Rational> rhs; // -det(T)
    };

    template <typename Rng>
    SampleSystem build_system(const decomp::Decomposition& d, const std::vector<std::size_t>& sizes,
                              std::size_t count, const DiscoveryConfig& config, Rng& rng)
    {
        const std::size_t m = d.m();
        SampleSystem sys{exact::RationalMatrix(count, m - 1), std::vector<Rational>(count)};
        for (std::size_t s = 0; s < count; ++s) {
            const std::size_t n = sizes[s % sizes.size()];
            const auto g = decomp::sample_integer_instance(n, config.entry_bound, config.symmetric, rng);
            sys.rhs[s] = -Rational(exact::det_bareiss(decomp::bordered_top(d, g)));
            for (std::size_t j = 1; j < m; ++j)
                sys.lhs(s, j - 1) = Rational(exact::det_bareiss(decomp::bordered_path(m - j, g)));
        }
        return sys;
    }

    inline exact::RationalMatrix leading_columns(const exact::RationalMatrix& a, std::size_t k)
    {
        exact::RationalMatrix out(a.rows(), k);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < k; ++j)
                out(i, j) = a(i, j);
        return out;
    }

    inline bool family_satisfies(const SampleSystem& sys, const exact::LinearSolution& sol)
    {
        if (!exact::satisfies(sys.lhs, sys.rhs, sol.particular))
            return false;
        const std::vector<Rational> zero(sys.rhs.size(), Rational(0));
        for (const auto& v : sol.basis)
            if (!exact::satisfies(sys.lhs, zero, v))
                return false;
        return true;
    }

    inline std::optional<Recurrence> integral_recurrence(const std::vector<Rational>& tail)
    {
        std::vector<BigInt> coeffs{BigInt(1)};
        for (const Rational& c : tail) {
            if (boost::multiprecision::denominator(c) != 1)
                return std::nullopt;
            coeffs.push_back(boost::multiprecision::numerator(c));
        }
        return Recurrence(std::move(coeffs));
    }

    inline SampleSystem stack(const SampleSystem& a, const SampleSystem& b)
    {
        SampleSystem out{exact::RationalMatrix(a.lhs.rows() + b.lhs.rows(), a.lhs.cols()), a.rhs};
        for (std::size_t i = 0; i < a.lhs.rows(); ++i)
            for (std::size_t j = 0; j < a.lhs.cols(); ++j)
                out.lhs(i, j) = a.lhs(i, j);
        for (std::size_t i = 0; i < b.lhs.rows(); ++i)
            for (std::size_t j = 0; j < b.lhs.cols(); ++j)
                out.lhs(a.lhs.rows() + i, j) = b.lhs(i, j);
        out.rhs.insert(out.rhs.end(), b.rhs.begin(), b.rhs.end());
        return out;
    }

} // namespace detail

inline DiscoveryResult discover(const decomp::Decomposition& d, const DiscoveryConfig& config = {})
{
    const std::size_t m = d.m();
    if (m < 3)
        throw DomainError("discovery needs m >= 3");
    if (config.fit_block_sizes.empty() || config.cv_block_sizes.empty())
        throw ConfigError("discovery needs fit and cross-validation block sizes");

    std::mt19937_64 rng(config.seed);
    DiscoveryResult out;
    out.origin = d;

    detail::SampleSystem fit =
        detail::build_system(d, config.fit_block_sizes, config.equations_per_unknown * (m - 1), config, rng);
    out.samples_used = fit.rhs.size();

    // A failed cross-validation means the fit samples admitted a spurious
    // relation; fold the fresh equations in and try again.
    exact::LinearSolution sol;
    constexpr int max_rounds = 3;
    for (int round = 0; round < max_rounds; ++round) {
        sol = exact::solve_exact(fit.lhs, fit.rhs);
        if (sol.kind == exact::SolutionKind::inconsistent)
            return out;
        const detail::SampleSystem cv = detail::build_system(d, config.cv_block_sizes, config.cv_samples, config, rng);
        out.cv_trials += cv.rhs.size();
        if (detail::family_satisfies(cv, sol)) {
            out.cv_passed = true;
            break;
        }
        fit = detail::stack(fit, cv);
        out.samples_used = fit.rhs.size();
    }
    if (!out.cv_passed) {
        sol = exact::solve_exact(fit.lhs, fit.rhs);
        if (sol.kind == exact::SolutionKind::inconsistent)
            return out;
    }

    out.particular = sol.particular;
    out.basis = sol.basis;
    out.dimension = sol.dimension();
    out.rank = sol.rank;

    if (sol.kind == exact::SolutionKind::unique) {
        out.status = out.cv_passed ? DiscoveryStatus::unique : DiscoveryStatus::no_relation;
        if (auto rec = detail::integral_recurrence(sol.particular)) {
            out.untrimmed = rec->coeffs();
            out.recurrence = rec->trimmed().with_origin(d);
        }
    } else {
        out.status = DiscoveryStatus::underdetermined;
    }

    // Least L such that c_j = 0 for j >= L leaves a consistent, uniquely
    // solvable system.
    for (std::size_t len = 2; len <= m; ++len) {
        const auto sub = exact::solve_exact(detail::leading_columns(fit.lhs, len - 1), fit.rhs);
        if (sub.kind == exact::SolutionKind::unique) {
            if (auto rec = detail::integral_recurrence(sub.particular))
                out.shortest = rec->with_origin(d);
            break;
        }
        if (sub.kind == exact::SolutionKind::space)
            break;
    }
    return out;
}

// True when coeffs (c_0 = 1, zero-padded to m terms) lies in the discovered
// solution family.
inline bool family_contains(const DiscoveryResult& result, const Recurrence& r)
{
    if (result.particular.empty() && result.basis.empty())
        return false;
    const std::size_t unknowns = result.particular.size();
    if (r.length() > unknowns + 1)
        return false;
    const Recurrence full = r.padded(unknowns + 1);
    std::vector<Rational> diff(unknowns);
    for (std::size_t j = 0; j < unknowns; ++j)
        diff[j] = Rational(full[j + 1]) - result.particular[j];
    if (result.basis.empty())
        return std::all_of(diff.begin(), diff.end(), [](const Rational& x) { return x == 0; });
    exact::RationalMatrix b(unknowns, result.basis.size());
    for (std::size_t k = 0; k < result.basis.size(); ++k)
        for (std::size_t j = 0; j < unknowns; ++j)
            b(j, k) = result.basis[k][j];
    return exact::solve_exact(b, diff).kind != exact::SolutionKind::inconsistent;
}

} // namespace distrec::recurrence
