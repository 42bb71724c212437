// distrec: exact determinants of tree distance matrices and the linear
// recurrences induced by subtree decompositions.
//
// Exit status: 0 success, 1 a verification or reproduction check failed,
// 2 usage or configuration error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "distrec/decomp/bordered.hpp"
#include "distrec/decomp/decomposition.hpp"
#include "distrec/decomp/spec.hpp"
#include "distrec/errors.hpp"
#include "distrec/exact/determinant.hpp"
#include "distrec/io/json.hpp"
#include "distrec/recurrence/discover.hpp"
#include "distrec/recurrence/recurrence.hpp"
#include "distrec/recurrence/tables.hpp"
#include "distrec/recurrence/verify.hpp"
#include "distrec/trees/canonical.hpp"
#include "distrec/trees/distance.hpp"
#include "distrec/trees/enumerate.hpp"
#include "distrec/trees/random.hpp"

namespace {

using namespace distrec;
using io::json;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

enum class Format { text, json, csv };

struct RunConfig {
    std::uint64_t seed = 1;
    std::size_t trials = 64;
    unsigned prime_bits = 62;
    Format format = Format::text;
    std::size_t max_n = 60;
    std::vector<std::size_t> block_sizes{2, 3, 4, 5, 6};
    std::string out;
};

// "2..6" or "2,3,5"
std::vector<std::size_t> parse_size_list(const std::string& text)
{
    std::vector<std::size_t> out;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const std::size_t lo = trees::detail::parse_count(std::string_view(text).substr(0, dots), "range start");
        const std::size_t hi = trees::detail::parse_count(std::string_view(text).substr(dots + 2), "range end");
        if (hi < lo)
            throw ConfigError("empty range '" + text + "'");
        for (std::size_t k = lo; k <= hi; ++k)
            out.push_back(k);
        return out;
    }
    for (std::string_view part : trees::detail::split(text, ','))
        out.push_back(trees::detail::parse_count(part, "list entry"));
    if (out.empty())
        throw ConfigError("empty list '" + text + "'");
    return out;
}

std::string coeff_list(const std::vector<exact::BigInt>& cs, const char* sep = ",")
{
    std::string out;
    for (std::size_t i = 0; i < cs.size(); ++i)
        out += (i ? sep : "") + cs[i].str();
    return out;
}

std::string fmt_log2(double x)
{
    if (!std::isfinite(x))
        return "exact";
    std::ostringstream os;
    os << std::fixed << std::setprecision(1) << "2^" << x;
    return os.str();
}

// Output goes to --out when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw ConfigError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

void emit_json(Sink& sink, const json& j) { sink.os() << j.dump(2) << '\n'; }

recurrence::GenericVerifyOptions generic_options(const RunConfig& cfg)
{
    recurrence::GenericVerifyOptions o;
    o.trials = cfg.trials;
    o.block_sizes = cfg.block_sizes;
    o.prime_bits = cfg.prime_bits;
    o.seed = cfg.seed;
    return o;
}

decomp::Decomposition decomposition_from(const std::string& subtree, const std::string& attach)
{
    const trees::Tree s = decomp::parse_subtree_spec(subtree);
    return decomp::Decomposition(s, decomp::parse_attach(attach, s));
}

// ---- trees ----------------------------------------------------------------

int cmd_trees(std::size_t n, const RunConfig& cfg)
{
    const auto list = trees::enumerate_trees(n);
    Sink sink(cfg.out);
    auto& os = sink.os();
    switch (cfg.format) {
    case Format::json: {
        json arr = json::array();
        for (const auto& t : list)
            arr.push_back(io::to_json(t));
        emit_json(sink, {{"n", n}, {"count", list.size()}, {"trees", std::move(arr)}});
        break;
    }
    case Format::csv:
        os << "index,n,class,edges\n";
        for (std::size_t i = 0; i < list.size(); ++i)
            os << i << ',' << n << ",\"" << decomp::describe(list[i]) << "\",\""
               << trees::format_edge_list(list[i]) << "\"\n";
        break;
    case Format::text:
        os << "n=" << n << "  classes=" << list.size() << '\n';
        for (std::size_t i = 0; i < list.size(); ++i)
            os << std::setw(4) << i << "  " << std::left << std::setw(14) << decomp::describe(list[i])
               << std::right << "  " << trees::format_edge_list(list[i]) << '\n';
        break;
    }
    return exit_ok;
}

// ---- decomps --------------------------------------------------------------

int cmd_decomps(std::size_t m, const RunConfig& cfg)
{
    const auto list = decomp::enumerate_decompositions(m);
    Sink sink(cfg.out);
    auto& os = sink.os();
    switch (cfg.format) {
    case Format::json: {
        json arr = json::array();
        for (const auto& d : list)
            arr.push_back(io::to_json(d));
        emit_json(sink, arr);
        break;
    }
    case Format::csv:
        os << "index,id,m,attach,edges\n";
        for (std::size_t i = 0; i < list.size(); ++i)
            os << i << ",\"" << decomp::decomposition_id(list[i]) << "\"," << m << ',' << list[i].attach() << ",\""
               << trees::format_edge_list(list[i].subtree()) << "\"\n";
        break;
    case Format::text:
        os << "m=" << m << "  decompositions=" << list.size() << '\n';
        for (std::size_t i = 0; i < list.size(); ++i)
            os << std::setw(4) << i << "  " << std::left << std::setw(18) << decomp::decomposition_id(list[i])
               << std::right << "  " << trees::format_edge_list(list[i].subtree()) << '\n';
        break;
    }
    return exit_ok;
}

// ---- gp -------------------------------------------------------------------

struct GpRow {
    std::size_t n;
    std::string source;
    exact::BigInt det;
    bool ok;
};

int cmd_gp(const RunConfig& cfg, std::size_t samples, const std::string& matrix_file)
{
    std::vector<GpRow> rows;
    if (!matrix_file.empty()) {
        std::ifstream in(matrix_file);
        if (!in)
            throw ConfigError("cannot read matrix file '" + matrix_file + "'");
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception& e) {
            throw ConfigError(std::string("matrix file is not valid JSON: ") + e.what());
        }
        const exact::IntMatrix m = io::matrix_from_json(j);
        trees::Tree t = [&] {
            try {
                return trees::tree_from_distance_matrix(m);
            } catch (const DomainError& e) {
                throw ConfigError(e.what());
            }
        }();
        const exact::BigInt det = recurrence::tree_determinant(t);
        rows.push_back({t.n(), "input", det, det == recurrence::graham_pollak(t.n())});
    } else {
        const std::size_t exhaustive = std::min<std::size_t>(cfg.max_n, 10);
        for (std::size_t n = 1; n <= exhaustive; ++n) {
            std::size_t bad = 0;
            const auto list = trees::enumerate_trees(n);
            for (const auto& t : list)
                bad += !recurrence::verify_gp(t);
            rows.push_back({n, "all " + std::to_string(list.size()), recurrence::graham_pollak(n), bad == 0});
        }
        if (cfg.max_n > 10) {
            std::mt19937_64 rng(cfg.seed);
            std::uniform_int_distribution<std::size_t> pick(11, cfg.max_n);
            for (std::size_t s = 0; s < samples; ++s) {
                const std::size_t n = pick(rng);
                const trees::Tree t = trees::random_tree(n, rng());
                const exact::BigInt det = recurrence::tree_determinant(t);
                rows.push_back({n, "random", det, det == recurrence::graham_pollak(n)});
            }
        }
    }

    bool all = true;
    for (const auto& r : rows)
        all = all && r.ok;

    Sink sink(cfg.out);
    auto& os = sink.os();
    switch (cfg.format) {
    case Format::json: {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"n", r.n}, {"source", r.source}, {"det", r.det.str()}, {"ok", r.ok}});
        emit_json(sink, {{"passed", all}, {"checks", std::move(arr)}});
        break;
    }
    case Format::csv:
        os << "n,source,det,ok\n";
        for (const auto& r : rows)
            os << r.n << ',' << r.source << ',' << r.det << ',' << (r.ok ? "true" : "false") << '\n';
        break;
    case Format::text:
        for (const auto& r : rows)
            os << (r.ok ? "ok  " : "BAD ") << "n=" << std::setw(4) << std::left << r.n << std::right << "  "
               << std::setw(8) << std::left << r.source << std::right << "  det=" << r.det << '\n';
        os << (all ? "PASS" : "FAIL") << "  det(D_n) = -(n-1)(-2)^(n-2) on " << rows.size() << " checks\n";
        break;
    }
    return all ? exit_ok : exit_failed;
}

// ---- discover -------------------------------------------------------------

int cmd_discover(const RunConfig& cfg, const std::string& subtree, const std::string& attach, std::size_t bound)
{
    const decomp::Decomposition d = decomposition_from(subtree, attach);
    recurrence::DiscoveryConfig dc;
    dc.seed = cfg.seed;
    dc.entry_bound = static_cast<std::int64_t>(bound);
    const recurrence::DiscoveryResult res = recurrence::discover(d, dc);

    std::optional<recurrence::VerificationReport> report;
    if (res.recurrence)
        report = recurrence::verify_generic(d, *res.recurrence, generic_options(cfg));
    const bool ok = res.status == recurrence::DiscoveryStatus::unique && report && report->passed();

    Sink sink(cfg.out);
    auto& os = sink.os();
    switch (cfg.format) {
    case Format::json:
        emit_json(sink, io::to_json(res, report ? &*report : nullptr));
        break;
    case Format::csv:
        os << "id,status,dimension,coeffs,shortest,cv_passed,verified\n";
        os << '"' << decomp::decomposition_id(d) << "\"," << recurrence::to_string(res.status) << ','
           << res.dimension << ",\"" << (res.recurrence ? coeff_list(res.recurrence->coeffs()) : "") << "\",\""
           << (res.shortest ? coeff_list(res.shortest->coeffs()) : "") << "\"," << (res.cv_passed ? "true" : "false")
           << ',' << (report ? (report->passed() ? "true" : "false") : "") << '\n';
        break;
    case Format::text:
        os << "decomposition  " << decomp::decomposition_id(d) << "  (m=" << d.m() << ")\n";
        os << "status         " << recurrence::to_string(res.status) << "  (" << res.samples_used << " samples, "
           << res.cv_trials << " cross-validation, " << (res.cv_passed ? "clean" : "NOT clean") << ")\n";
        if (res.recurrence) {
            os << "recurrence     " << res.recurrence->str() << '\n';
            os << "generic check  " << (report->passed() ? "pass" : "FAIL") << "  " << report->trials
               << " trials, false-pass bound " << fmt_log2(report->failure_bound_log2) << '\n';
        } else if (res.status == recurrence::DiscoveryStatus::underdetermined) {
            os << "solution space dimension " << res.dimension << " (rank " << res.rank << ")\n";
            std::vector<std::string> parts;
            for (const auto& x : res.particular)
                parts.push_back(exact::to_string(x));
            os << "particular     [1";
            for (const auto& p : parts)
                os << ',' << p;
            os << "]\n";
            for (const auto& v : res.basis) {
                os << "direction      [0";
                for (const auto& x : v)
                    os << ',' << exact::to_string(x);
                os << "]\n";
            }
        }
        if (res.shortest)
            os << "shortest       " << res.shortest->str() << '\n';
        break;
    }
    return ok ? exit_ok : exit_failed;
}

// ---- tables ---------------------------------------------------------------

int cmd_tables(const RunConfig& cfg, const std::vector<std::size_t>& ms)
{
    recurrence::TableConfig tc;
    tc.discovery.seed = cfg.seed;
    tc.verify = generic_options(cfg);
    std::vector<recurrence::TableReport> reports;
    for (std::size_t m : ms)
        reports.push_back(recurrence::reproduce_table(m, tc));

    bool all = true;
    for (const auto& r : reports)
        all = all && r.all_match();

    Sink sink(cfg.out);
    auto& os = sink.os();
    switch (cfg.format) {
    case Format::json: {
        json arr = json::array();
        for (const auto& r : reports)
            arr.push_back(io::to_json(r));
        emit_json(sink, {{"all_match", all}, {"tables", std::move(arr)}});
        break;
    }
    case Format::csv:
        os << "m,row,claimed,expected,match,matches,in_family,verified,members,has_gp_factor\n";
        for (const auto& r : reports)
            for (const auto& row : r.rows)
                os << r.m << ",\"" << row.id << "\"," << row.claimed << ",\"" << coeff_list(row.expected.coeffs())
                   << "\"," << (row.match() ? "true" : "false") << ',' << row.matches << ',' << row.in_family << ','
                   << row.verified << ',' << row.members.size() << ','
                   << (recurrence::has_gp_factor(row.expected) ? "true" : "false") << '\n';
        break;
    case Format::text:
        for (const auto& r : reports) {
            os << "m=" << r.m << "  decompositions=" << r.decompositions << '\n';
            for (const auto& row : r.rows) {
                os << "  " << (row.match() ? "match   " : "MISMATCH") << "  " << std::left << std::setw(28)
                   << row.expected.str() << std::right << "  " << row.id << '\n';
                os << "            discovered unique " << row.matches << '/' << row.members.size()
                   << ", in solution family " << row.in_family << '/' << row.members.size() << ", generic pass "
                   << row.verified << '/' << row.members.size() << '\n';
            }
            for (const auto& w : r.warnings)
                os << "  warning: " << w << '\n';
        }
        os << (all ? "PASS" : "FAIL") << "  table reproduction\n";
        break;
    }
    return all ? exit_ok : exit_failed;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, const std::string& coeffs, const std::string& recurrence_file,
               const std::string& subtree, const std::string& attach, const std::string& mode)
{
    std::optional<recurrence::Recurrence> rec;
    if (!coeffs.empty()) {
        std::vector<exact::BigInt> cs;
        std::string body = coeffs;
        if (!body.empty() && body.front() == '[' && body.back() == ']')
            body = body.substr(1, body.size() - 2);
        for (std::string_view part : trees::detail::split(body, ','))
            cs.push_back(exact::parse_bigint(part));
        rec = recurrence::Recurrence(std::move(cs));
    } else {
        std::ifstream in(recurrence_file);
        if (!in)
            throw ConfigError("cannot read recurrence file '" + recurrence_file + "'");
        try {
            rec = io::recurrence_from_json(json::parse(in));
        } catch (const json::exception& e) {
            throw ConfigError(std::string("recurrence file is not valid JSON: ") + e.what());
        }
    }

    const bool want_generic = mode == "generic" || mode == "both";
    const bool want_tree = mode == "tree" || mode == "both";
    if (want_generic && subtree.empty())
        throw ConfigError("generic verification needs --subtree (and optionally --attach)");

    std::vector<recurrence::VerificationReport> reports;
    std::optional<decomp::Decomposition> d;
    if (want_generic) {
        d = decomposition_from(subtree, attach);
        reports.push_back(recurrence::verify_generic(*d, *rec, generic_options(cfg)));
    }
    if (want_tree) {
        recurrence::TreeVerifyOptions to;
        to.n_max = std::max(cfg.max_n, rec->length());
        to.seed = cfg.seed;
        reports.push_back(recurrence::verify_on_trees(*rec, to));
    }
    bool all = true;
    for (const auto& r : reports)
        all = all && r.passed();

    Sink sink(cfg.out);
    auto& os = sink.os();
    switch (cfg.format) {
    case Format::json: {
        json arr = json::array();
        for (const auto& r : reports)
            arr.push_back(io::to_json(r));
        const recurrence::Recurrence shown = d ? rec->with_origin(*d) : *rec;
        json out = io::to_json(shown, reports.empty() ? nullptr : &reports.front());
        out["verification"] = std::move(arr);
        out["has_gp_factor"] = recurrence::has_gp_factor(*rec);
        out["passed"] = all;
        emit_json(sink, out);
        break;
    }
    case Format::csv:
        os << "coeffs,mode,trials,failures,failure_bound_log2,passed\n";
        for (const auto& r : reports)
            os << '"' << coeff_list(rec->coeffs()) << "\"," << recurrence::to_string(r.mode) << ',' << r.trials << ','
               << r.failures << ',' << (std::isfinite(r.failure_bound_log2) ? std::to_string(r.failure_bound_log2) : "")
               << ',' << (r.passed() ? "true" : "false") << '\n';
        break;
    case Format::text:
        os << "recurrence     " << rec->str() << (recurrence::has_gp_factor(*rec) ? "  ((x+2)^2 divides)" : "")
           << '\n';
        for (const auto& r : reports) {
            os << std::left << std::setw(15) << recurrence::to_string(r.mode) << std::right
               << (r.passed() ? "pass" : "FAIL") << "  " << r.failures << '/' << r.trials << " failures";
            if (r.mode == recurrence::VerifyMode::generic)
                os << ", false-pass bound " << fmt_log2(r.failure_bound_log2) << " on " << decomp::decomposition_id(*d);
            else
                os << " (closed form " << r.closed_form_checks << ", two-term " << r.two_term_checks << ", trees "
                   << r.tree_samples << ')';
            os << '\n';
        }
        break;
    }
    return all ? exit_ok : exit_failed;
}

std::uint64_t default_seed()
{
    const char* env = std::getenv("DISTREC_SEED");
    if (env == nullptr || *env == '\0')
        return 1;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used, 0);
        if (used != std::string(env).size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(std::string("DISTREC_SEED is not an unsigned integer: '") + env + "'");
    }
}

} // namespace

int main(int argc, char** argv)
{
    RunConfig cfg;
    try {
        cfg.seed = default_seed();
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }

    CLI::App app{"Exact tree distance determinants and decomposition recurrences"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string block_sizes = "2..6";
    app.add_option("--seed", cfg.seed, "RNG seed (default: $DISTREC_SEED or 1)");
    app.add_option("--trials", cfg.trials, "generic verification trials")->check(CLI::PositiveNumber);
    app.add_option("--prime-bits", cfg.prime_bits, "prime width for generic verification")
        ->check(CLI::Range(exact::min_prime_bits, exact::max_prime_bits));
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--max-n", cfg.max_n, "largest tree size for sweeps")->check(CLI::PositiveNumber);
    app.add_option("--block-sizes", block_sizes, "generic block sizes, e.g. 2..6 or 2,4");
    app.add_option("--out", cfg.out, "write output to FILE");
    app.fallthrough();

    std::size_t n = 0;
    auto* trees_cmd = app.add_subcommand("trees", "list isomorphism classes of trees on n vertices");
    trees_cmd->add_option("n", n, "vertex count")->required();

    std::size_t m = 0;
    auto* decomps_cmd = app.add_subcommand("decomps", "list inequivalent decompositions S_m o_x R");
    decomps_cmd->add_option("m", m, "subtree size")->required();

    std::size_t samples = 8;
    std::string matrix_file;
    auto* gp_cmd = app.add_subcommand("gp", "check det(D_n) = -(n-1)(-2)^(n-2)");
    gp_cmd->add_option("--samples", samples, "random trees above n = 10");
    gp_cmd->add_option("--matrix", matrix_file, "check one distance matrix given as JSON");

    std::string subtree;
    std::string attach = "end";
    std::size_t bound = 10;
    auto* discover_cmd = app.add_subcommand("discover", "discover the recurrence of a decomposition");
    discover_cmd->add_option("--subtree", subtree, "path:k | star:k | starlike:r1,.. | edges:0-1,..")->required();
    discover_cmd->add_option("--attach", attach, "vertex index, end or center");
    discover_cmd->add_option("--bound", bound, "sample entries drawn from [-bound, bound]")->check(CLI::PositiveNumber);

    std::string m_range = "3..7";
    auto* tables_cmd = app.add_subcommand("tables", "reproduce the reference recurrence tables");
    tables_cmd->add_option("--m", m_range, "subtree sizes, e.g. 4..7");

    std::string coeffs;
    std::string recurrence_file;
    std::string mode = "both";
    auto* verify_cmd = app.add_subcommand("verify", "verify a recurrence generically and on trees");
    auto* coeff_opt = verify_cmd->add_option("--coeffs", coeffs, "inline coefficients, e.g. 1,2,-4,-8");
    auto* file_opt = verify_cmd->add_option("--recurrence", recurrence_file, "recurrence JSON file");
    coeff_opt->excludes(file_opt);
    verify_cmd->add_option("--subtree", subtree, "decomposition subtree for generic mode");
    verify_cmd->add_option("--attach", attach, "attachment vertex");
    verify_cmd->add_option("--mode", mode, "generic, tree or both")->check(CLI::IsMember({"generic", "tree", "both"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
        cfg.block_sizes = parse_size_list(block_sizes);

        if (*trees_cmd)
            return cmd_trees(n, cfg);
        if (*decomps_cmd)
            return cmd_decomps(m, cfg);
        if (*gp_cmd)
            return cmd_gp(cfg, samples, matrix_file);
        if (*discover_cmd)
            return cmd_discover(cfg, subtree, attach, bound);
        if (*tables_cmd)
            return cmd_tables(cfg, parse_size_list(m_range));
        if (*verify_cmd) {
            if (coeffs.empty() && recurrence_file.empty())
                throw ConfigError("verify needs --coeffs or --recurrence");
            return cmd_verify(cfg, coeffs, recurrence_file, subtree, attach, mode);
        }
    } catch (const std::invalid_argument& e) { // ConfigError, DimensionError
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) { // DomainError from malformed input
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
