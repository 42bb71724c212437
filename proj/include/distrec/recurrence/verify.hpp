#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "distrec/decomp/bordered.hpp"
#include "distrec/decomp/decomposition.hpp"
#include "distrec/errors.hpp"
#include "distrec/exact/determinant.hpp"
#include "distrec/recurrence/recurrence.hpp"
#include "distrec/trees/distance.hpp"
#include "distrec/trees/random.hpp"

namespace distrec::recurrence {


enum class VerifyMode { generic, tree };

inline const char* to_string(VerifyMode mode) { return mode == VerifyMode::generic ? "generic" : "tree"; }

struct VerificationReport {
    VerifyMode mode = VerifyMode::generic;
    std::size_t trials = 0;
    std::vector<std::size_t> block_sizes;
    std::optional<u64> prime;
    std::size_t failures = 0;
    // Probability that a false identity survives every trial; 0 for the
    // exact tree mode.
    Rational failure_bound = 0;
    // log2 of failure_bound, -inf when it is 0.
    double failure_bound_log2 = -INFINITY;

    // tree mode breakdown
    std::size_t closed_form_checks = 0;
    std::size_t closed_form_failures = 0;
    std::size_t two_term_checks = 0;
    std::size_t two_term_failures = 0;
    std::size_t tree_samples = 0;
    std::size_t tree_failures = 0;

    bool passed() const noexcept { return failures == 0; }
};

struct GenericVerifyOptions {
    std::size_t trials = 64;
    std::vector<std::size_t> block_sizes{2, 3, 4, 5, 6};
    unsigned prime_bits = 62;
    std::uint64_t seed = 1;
    bool symmetric = false;
};

// Sum_j c_j det(B_{m-j}) over a random point of (Z/pZ)^k, where B_m is the
// decomposition's bordered matrix and B_k (k < m) the bordered path minors.
// The residual is a polynomial of degree <= N + m in the instance entries, so
// a false identity vanishes at a uniform point with probability <= (N+m)/p.
inline VerificationReport verify_generic(const decomp::Decomposition& d, const Recurrence& r,
                                         const GenericVerifyOptions& options = {})
{
    const std::size_t m = d.m();
    if (r.length() > m)
        throw DomainError("recurrence has " + std::to_string(r.length()) + " terms but the decomposition only " +
                          std::to_string(m));
    if (options.block_sizes.empty() || options.trials == 0)
        throw ConfigError("generic verification needs at least one trial and one block size");
    const Recurrence full = r.padded(m);

    std::mt19937_64 rng(options.seed);
    const u64 p = exact::random_prime(options.prime_bits, rng);
    const exact::PrimeField field(p);

    VerificationReport report;
    report.mode = VerifyMode::generic;
    report.trials = options.trials;
    report.block_sizes = options.block_sizes;
    report.prime = p;

    std::vector<u64> coeff(m);
    for (std::size_t j = 0; j < m; ++j)
        coeff[j] = field.reduce(full[j]);

    for (std::size_t t = 0; t < options.trials; ++t) {
        const std::size_t n = options.block_sizes[t % options.block_sizes.size()];
        const decomp::GenericInstance g = decomp::sample_field_instance(n, p, options.symmetric, rng);
        u64 residual = exact::det_mod(decomp::bordered_top(d, g), p).value;
        for (std::size_t j = 1; j < m; ++j) {
            if (coeff[j] == 0)
                continue;
            const u64 minor = exact::det_mod(decomp::bordered_path(m - j, g), p).value;
            residual = field.add(residual, field.mul(coeff[j], minor));
        }
        if (residual != 0)
            ++report.failures;
    }

    const std::size_t max_block = *std::max_element(options.block_sizes.begin(), options.block_sizes.end());
    const std::size_t degree = max_block + m;
    const auto trials = static_cast<unsigned>(options.trials);
    report.failure_bound = Rational{boost::multiprecision::pow(BigInt(degree), trials),
                                    boost::multiprecision::pow(BigInt(p), trials)};
    report.failure_bound_log2 =
        static_cast<double>(options.trials) * (std::log2(static_cast<double>(degree)) - std::log2(static_cast<double>(p)));
    return report;
}

// Exact determinant of a tree's distance matrix; Bareiss for small trees,
// CRT beyond.
inline BigInt tree_determinant(const trees::Tree& t)
{
    const auto dm = trees::distance_matrix(t);
    if (t.n() <= 16)
        return exact::det_bareiss(dm);
    return exact::det_crt(dm);
}

inline bool verify_gp(const trees::Tree& t) { return tree_determinant(t) == graham_pollak(t.n()); }

struct TreeVerifyOptions {
    std::size_t n_min = 0; // 0: use the recurrence length
    std::size_t n_max = 60;
    std::size_t samples = 8;
    std::uint64_t seed = 1;
};

// Tree mode: the recurrence against the closed form on every n in range, the
// inhomogeneous two-term relation det(D_n) + 2 det(D_{n-1}) = -(-2)^(n-2),
// and actual determinants of sampled random trees of sizes n, n-1, ...,
// n-m+1. This checks values only; it cannot tell relations apart whose
// characteristic polynomials share the factor (x+2)^2.
inline VerificationReport verify_on_trees(const Recurrence& r, const TreeVerifyOptions& options = {})
{
    const std::size_t m = r.length();
    const std::size_t lo = options.n_min == 0 ? std::max<std::size_t>(m, 2) : options.n_min;
    if (lo < m)
        throw DomainError("n range must start at or above the recurrence length " + std::to_string(m));
    if (options.n_max < lo)
        throw DomainError("empty n range");

    VerificationReport report;
    report.mode = VerifyMode::tree;
    report.failure_bound = 0;

    for (std::size_t n = lo; n <= options.n_max; ++n) {
        BigInt sum = 0;
        for (std::size_t j = 0; j < m; ++j)
            sum += r[j] * graham_pollak(n - j);
        ++report.closed_form_checks;
        if (sum != 0)
            ++report.closed_form_failures;
        if (n >= 2) {
            const BigInt rhs = -boost::multiprecision::pow(BigInt(-2), static_cast<unsigned>(n - 2));
            ++report.two_term_checks;
            if (graham_pollak(n) + 2 * graham_pollak(n - 1) != rhs)
                ++report.two_term_failures;
        }
    }

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick_n(lo, options.n_max);
    for (std::size_t s = 0; s < options.samples; ++s) {
        const std::size_t n = pick_n(rng);
        BigInt sum = 0;
        for (std::size_t j = 0; j < m; ++j) {
            const trees::Tree t = trees::random_tree(n - j, rng());
            sum += r[j] * tree_determinant(t);
        }
        ++report.tree_samples;
        if (sum != 0)
            ++report.tree_failures;
    }

    report.trials = report.closed_form_checks + report.tree_samples;
    report.failures = report.closed_form_failures + report.two_term_failures + report.tree_failures;
    return report;
}

} // namespace distrec::recurrence
