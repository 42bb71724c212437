// Acceptance gate: one PASS/FAIL line per criterion, indented detail lines
// below each. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "distrec/decomp/decomposition.hpp"
#include "distrec/decomp/spec.hpp"
#include "distrec/exact/determinant.hpp"
#include "distrec/recurrence/discover.hpp"
#include "distrec/recurrence/recurrence.hpp"
#include "distrec/recurrence/tables.hpp"
#include "distrec/recurrence/verify.hpp"
#include "distrec/trees/distance.hpp"
#include "distrec/trees/enumerate.hpp"
#include "distrec/trees/random.hpp"
#include "oracles.hpp"

using namespace distrec;
using exact::BigInt;
using recurrence::Recurrence;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string secs(double s)
{
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << "s";
    return os.str();
}

struct Gate {
    int failed = 0;

    void report(int id, const std::string& name, bool ok, const std::vector<std::string>& details)
    {
        std::cout << (ok ? "PASS" : "FAIL") << "  [" << id << "] " << name << '\n';
        for (const auto& d : details)
            std::cout << "        " << d << '\n';
        std::cout.flush();
        failed += ok ? 0 : 1;
    }
};

std::vector<Recurrence> reference_rows()
{
    std::vector<Recurrence> out;
    for (std::size_t m = recurrence::reference_min_m; m <= recurrence::reference_max_m; ++m)
        for (const auto& e : recurrence::reference_table(m)) {
            std::vector<BigInt> cs(e.coeffs.begin(), e.coeffs.end());
            Recurrence r(std::move(cs));
            bool seen = false;
            for (const auto& x : out)
                seen = seen || x == r;
            if (!seen)
                out.push_back(std::move(r));
        }
    return out;
}

void graham_pollak_exact(Gate& gate)
{
    std::vector<std::string> info;
    auto t0 = Clock::now();
    std::size_t trees_checked = 0, bad = 0;
    for (std::size_t n = 1; n <= 10; ++n)
        for (const auto& t : trees::enumerate_trees(n)) {
            ++trees_checked;
            bad += exact::det_bareiss(trees::distance_matrix(t)) != recurrence::graham_pollak(n);
        }
    const double small = seconds_since(t0);
    info.push_back(std::to_string(trees_checked) + " unlabeled trees n<=10, " + std::to_string(bad) +
                   " mismatches, " + secs(small) + " (budget 5s)");

    t0 = Clock::now();
    std::size_t big_bad = 0;
    std::mt19937_64 rng(2024);
    for (std::size_t n : {100u, 300u, 500u}) {
        const auto tn = Clock::now();
        std::size_t primes = 0;
        for (int s = 0; s < 50; ++s) {
            const auto t = trees::random_tree(n, rng());
            const auto r = exact::det_crt_detailed(trees::distance_matrix(t));
            primes = r.primes.size();
            big_bad += r.value != recurrence::graham_pollak(n);
        }
        info.push_back("50 random trees n=" + std::to_string(n) + " via CRT (" + std::to_string(primes) +
                       " primes each), " + secs(seconds_since(tn)));
    }
    const double large = seconds_since(t0);
    info.push_back(std::to_string(big_bad) + " mismatches, " + secs(large) + " total (budget 180s)");
    gate.report(1, "Graham-Pollak closed form, exact", bad == 0 && trees_checked == 201 && small < 5.0 &&
                                                           big_bad == 0 && large < 180.0,
                info);
}

void enumeration_counts(Gate& gate)
{
    const std::size_t trees_expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    std::vector<std::string> info;
    bool ok = true;
    std::string got = "trees n=1..10:";
    for (std::size_t n = 1; n <= 10; ++n) {
        const std::size_t c = trees::enumerate_trees(n).size();
        got += " " + std::to_string(c);
        ok = ok && c == trees_expected[n - 1];
    }
    info.push_back(got);
    const std::size_t decomp_expected[] = {4, 9, 20, 48};
    got = "decompositions m=4..7:";
    for (std::size_t m = 4; m <= 7; ++m) {
        const std::size_t c = decomp::enumerate_decompositions(m).size();
        got += " " + std::to_string(c);
        ok = ok && c == decomp_expected[m - 4];
    }
    info.push_back(got);
    gate.report(2, "enumeration counts", ok, info);
}

void table_reproduction(Gate& gate, std::vector<recurrence::TableReport>& reports)
{
    const auto t0 = Clock::now();
    recurrence::TableConfig cfg;
    std::vector<std::string> info;
    std::size_t rows = 0, matched = 0, in_family = 0, verified = 0;
    for (std::size_t m = 4; m <= 7; ++m) {
        reports.push_back(recurrence::reproduce_table(m, cfg));
        const auto& r = reports.back();
        for (const auto& row : r.rows) {
            ++rows;
            matched += row.match();
            in_family += row.in_family == row.members.size();
            verified += row.verified == row.members.size();
            std::string statuses;
            for (const auto& d : row.discoveries) {
                const std::string s = recurrence::to_string(d.status);
                if (statuses.find(s) == std::string::npos)
                    statuses += (statuses.empty() ? "" : "/") + s;
            }
            info.push_back("m=" + std::to_string(m) + " " + (row.match() ? "match    " : "MISMATCH ") +
                           row.expected.str() + " [" + row.id + "] discovery " + statuses + ", dim " +
                           std::to_string(row.discoveries.front().dimension));
        }
        for (const auto& w : r.warnings)
            info.push_back("warning: " + w);
    }
    const double elapsed = seconds_since(t0);
    info.push_back(std::to_string(matched) + "/" + std::to_string(rows) + " rows discovered exactly, " + secs(elapsed) +
                   " (budget 120s)");
    info.push_back("supplementary: " + std::to_string(in_family) + "/" + std::to_string(rows) +
                   " rows lie in the discovered solution family of every member, " + std::to_string(verified) + "/" +
                   std::to_string(rows) + " pass generic verification on every member");
    info.push_back("the generic bordered determinant depends only on m, so the sample system has rank 2 "
                   "and cannot single out a row for m >= 4");
    gate.report(3, "table reproduction by discovery", matched == rows && elapsed < 120.0, info);
}

void generic_verification(Gate& gate, const std::vector<recurrence::TableReport>& reports)
{
    std::vector<std::string> info;
    std::size_t checks = 0, failures = 0;
    double worst = -INFINITY;
    recurrence::GenericVerifyOptions o; // 64 trials, blocks 2..6, 62-bit primes
    auto check = [&](const decomp::Decomposition& d, const Recurrence& r) {
        const auto rep = recurrence::verify_generic(d, r, o);
        ++checks;
        failures += rep.failures;
        worst = std::max(worst, rep.failure_bound_log2);
    };
    std::size_t discovered = 0;
    for (const auto& t : reports)
        for (const auto& row : t.rows)
            for (std::size_t i = 0; i < row.members.size(); ++i) {
                const auto& res = row.discoveries[i];
                if (res.recurrence) {
                    check(row.members[i], *res.recurrence);
                    ++discovered;
                }
                if (res.shortest) {
                    check(row.members[i], *res.shortest);
                    ++discovered;
                }
                check(row.members[i], row.expected);
            }
    // Cumulative union bound over all checks, in log2.
    const double cumulative = worst + std::log2(static_cast<double>(checks));
    info.push_back(std::to_string(checks) + " identities (" + std::to_string(discovered) +
                   " discovered relations, the rest table rows on their decompositions), 64 trials each, "
                   "blocks 2..6, 62-bit primes");
    std::ostringstream b;
    b.precision(1);
    b << std::fixed << "failures " << failures << ", worst per-identity bound 2^" << worst << ", cumulative 2^"
      << cumulative;
    info.push_back(b.str());
    gate.report(4, "generic identity verification", failures == 0 && cumulative < -40.0, info);
}

void characteristic_structure(Gate& gate)
{
    std::vector<std::string> info;
    bool ok = true;
    for (const auto& r : reference_rows()) {
        const auto div = exact::poly_divrem(recurrence::char_poly(r), recurrence::gp_factor());
        const bool has = div.remainder.is_zero();
        ok = ok && has;
        info.push_back(r.str() + " = (x+2)^2 * (" + div.quotient.str() + ")" + (has ? "" : " REMAINDER " + div.remainder.str()));
    }
    gate.report(5, "characteristic polynomial divisible by (x+2)^2", ok, info);
}

void closed_form_solving(Gate& gate)
{
    std::vector<std::string> info;
    // det(D_1..D_6) by cofactor expansion on paths.
    std::vector<BigInt> initial;
    for (std::size_t n = 1; n <= 6; ++n)
        initial.push_back(oracle::cofactor_det(trees::distance_matrix(trees::path(n))));
    std::string init = "initial values";
    for (const auto& x : initial)
        init += " " + x.str();
    info.push_back(init);
    bool ok = initial == std::vector<BigInt>{0, -1, 4, -12, 32, -80};
    std::size_t rows = 0;
    for (const auto& r : reference_rows()) {
        const std::vector<BigInt> seed(initial.begin(), initial.begin() + static_cast<long>(r.length() - 1));
        const auto seq = recurrence::solve_recurrence(r, seed, 200);
        bool row_ok = true;
        for (std::size_t n = 1; n <= 200; ++n)
            row_ok = row_ok && seq[n - 1] == recurrence::graham_pollak(n);
        ok = ok && row_ok;
        ++rows;
        if (!row_ok)
            info.push_back("mismatch for " + r.str());
    }
    info.push_back(std::to_string(rows) + " distinct table recurrences reproduce det(D_n) for n <= 200");
    gate.report(6, "closed-form solving from initial conditions", ok, info);
}

void theorem_and_open_question(Gate& gate, const std::vector<recurrence::TableReport>& reports)
{
    std::vector<std::string> info;
    bool ok = true;
    for (const auto& t : reports) {
        std::size_t best = 0;
        for (const auto& row : t.rows)
            for (const auto& res : row.discoveries)
                if (res.status == recurrence::DiscoveryStatus::unique && res.recurrence && res.recurrence->minimal())
                    best = std::max(best, res.recurrence->length());
        std::size_t table_len = 0;
        for (const auto& row : t.rows)
            if (row.verified == row.members.size())
                table_len = std::max(table_len, row.expected.length());
        ok = ok && best == t.m;
        info.push_back("m=" + std::to_string(t.m) + ": longest uniquely discovered minimal relation has " +
                       std::to_string(best) + " terms; longest table row verified generically has " +
                       std::to_string(table_len));
    }
    for (std::size_t m : {8u, 9u}) {
        const decomp::Decomposition d(trees::path(m), 0);
        const auto res = recurrence::discover(d);
        bool prop = res.status == recurrence::DiscoveryStatus::unique && res.cv_passed && res.recurrence;
        if (prop) {
            prop = recurrence::verify_generic(d, *res.recurrence).passed() &&
                   recurrence::has_gp_factor(*res.recurrence);
        }
        ok = ok && prop;
        info.push_back("P_" + std::to_string(m) + "@end: status " + recurrence::to_string(res.status) +
                       ", cross-validation " + (res.cv_passed ? "clean" : "dirty") + ", family dimension " +
                       std::to_string(res.dimension) + ", shortest " +
                       (res.shortest ? res.shortest->str() : std::string("none")));
    }
    gate.report(7, "m-term relations from discovery; P_8 and P_9 unique", ok, info);
}

void kernel_oracle(Gate& gate)
{
    std::mt19937_64 rng(500);
    std::uniform_int_distribution<long> entry(-50, 50);
    std::uniform_int_distribution<std::size_t> size(1, 7);
    std::size_t bad = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = size(rng);
        exact::IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = entry(rng);
        const BigInt naive = oracle::cofactor_det(m);
        bad += exact::det_bareiss(m) != naive || exact::det_crt(m) != naive;
    }
    gate.report(8, "det_bareiss = det_crt = cofactor expansion", bad == 0,
                {"500 random matrices, sizes 1..7, entries in [-50, 50], " + std::to_string(bad) + " disagreements"});
}

} // namespace

int main()
{
    Gate gate;
    std::vector<recurrence::TableReport> reports;
    graham_pollak_exact(gate);
    enumeration_counts(gate);
    table_reproduction(gate, reports);
    generic_verification(gate, reports);
    characteristic_structure(gate);
    closed_form_solving(gate);
    theorem_and_open_question(gate, reports);
    kernel_oracle(gate);
    std::cout << (8 - gate.failed) << "/8 criteria pass\n";
    return gate.failed == 0 ? 0 : 1;
}
