// hecke: command-line front end to the trace engines.
//
// Exit codes: 0 success, 1 self-check failure, 2 invalid arguments, 3 integrality failure.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hecke/atkin_lehner.hpp"
#include "hecke/characters.hpp"
#include "hecke/class_numbers.hpp"
#include "hecke/gamma0_trace.hpp"
#include "hecke/gamma1_trace.hpp"
#include "hecke/json_io.hpp"
#include "hecke/level4.hpp"
#include "hecke/oracles.hpp"
#include "hecke/version.hpp"
#include "result_cache.hpp"

namespace {

using namespace hecke;
using Clock = std::chrono::steady_clock;

constexpr int exit_selfcheck = 1;
constexpr int exit_usage = 2;
constexpr int exit_integrality = 3;

struct Common {
    std::string format = "json";
    int approx = 0;
    bool breakdown = false;
    bool no_wall_time = false;
    int h_sign = -1;
    std::string chi_eval = "primitive";

    Conventions conventions() const
    {
        Conventions c;
        c.negative_square_sign = h_sign;
        if (chi_eval == "naive") c.residue_evaluation = ResidueEvaluation::naive_representative;
        return c;
    }
};

std::string approx_string(const CyclotomicNumber& x, int digits)
{
    std::ostringstream os;
    if (x.is_rational()) {
        mpf_class f(x.rational_value(), static_cast<mp_bitcnt_t>(digits * 4 + 64));
        os << std::setprecision(digits) << f;
        return os.str();
    }
    const auto z = x.to_complex();
    os << std::setprecision(std::min(digits, 17)) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

std::string plain(const CyclotomicNumber& x)
{
    if (x.is_rational()) return to_string(x.rational_value());
    return x.to_string();
}

DirichletCharacter parse_character(std::int64_t level, const std::string& spec)
{
    if (spec == "trivial") return DirichletCharacter(level);
    std::size_t pos = 0;
    long long idx = 0;
    try {
        idx = std::stoll(spec, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != spec.size()) throw precondition_error("--char expects an index or 'trivial', got '" + spec + "'");
    return character_by_index(level, idx);
}

void emit(const Common& c, Json query, const CyclotomicNumber& value, const TraceResult* parts, Clock::time_point start)
{
    if (c.format == "text") {
        std::cout << plain(value);
        if (c.approx > 0) std::cout << "  ~ " << approx_string(value, c.approx);
        std::cout << '\n';
        if (c.breakdown && parts) {
            std::cout << "  elliptic " << plain(parts->elliptic) << '\n'
                      << "  boundary " << plain(parts->boundary) << '\n'
                      << "  cusp     " << plain(parts->cusp) << '\n'
                      << "  delta    " << plain(parts->delta) << '\n';
        }
        return;
    }
    Json rec;
    rec["query"] = std::move(query);
    rec["result"] = to_json(value);
    if (c.approx > 0) rec["approx"] = approx_string(value, c.approx);
    if (c.breakdown && parts) {
        rec["breakdown"] = Json{{"elliptic", to_json(parts->elliptic.simplified())},
                                {"boundary", to_json(parts->boundary.simplified())},
                                {"cusp", to_json(parts->cusp.simplified())},
                                {"delta", to_json(parts->delta.simplified())}};
    }
    if (!c.no_wall_time) rec["wall_time"] = std::chrono::duration<double>(Clock::now() - start).count();
    std::cout << rec.dump() << '\n';
}

TraceResult from_gamma1(const Gamma1Result& g)
{
    TraceResult r;
    r.value = CyclotomicNumber(g.value);
    r.elliptic = CyclotomicNumber(g.elliptic);
    r.boundary = CyclotomicNumber(g.boundary);
    r.cusp = CyclotomicNumber(g.cusp);
    r.delta = CyclotomicNumber(g.delta);
    return r;
}

// ---- table -----------------------------------------------------------------

struct Range {
    std::int64_t lo, hi, step;
};

Range parse_range(const std::string& s)
{
    std::int64_t lo = 0, hi = 0, step = 1;
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoll(s);
        } else {
            lo = std::stoll(s.substr(0, dots));
            std::string rest = s.substr(dots + 2);
            if (auto colon = rest.find(':'); colon != std::string::npos) {
                step = std::stoll(rest.substr(colon + 1));
                rest = rest.substr(0, colon);
            }
            hi = std::stoll(rest);
        }
    } catch (const std::exception&) {
        throw precondition_error("bad range '" + s + "'; expected a, a..b or a..b:step");
    }
    if (step <= 0 || hi < lo) throw precondition_error("bad range '" + s + "'");
    return {lo, hi, step};
}

struct Grid {
    Range N{1, 1, 1}, k{2, 2, 1}, n{1, 1, 1};
};

Grid parse_grid(const std::string& spec)
{
    Grid g;
    bool seen[3] = {false, false, false};
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw precondition_error("bad grid item '" + item + "'");
        const std::string name = item.substr(0, eq);
        const Range r = parse_range(item.substr(eq + 1));
        if (name == "N") g.N = r, seen[0] = true;
        else if (name == "k") g.k = r, seen[1] = true;
        else if (name == "n") g.n = r, seen[2] = true;
        else throw precondition_error("unknown grid axis '" + name + "' (use N, k, n)");
    }
    if (!seen[0] || !seen[1] || !seen[2]) throw precondition_error("grid must give N, k and n");
    if (g.N.lo < 1 || g.k.lo < 2 || g.n.lo < 1) throw precondition_error("grid needs N >= 1, k >= 2, n >= 1");
    return g;
}

struct Cell {
    std::string group;
    std::int64_t N;
    int k;
    std::int64_t chi;  // -1 for Gamma_1
    std::int64_t n;

    std::string key() const
    {
        std::string s = group + ":N=" + std::to_string(N) + ",k=" + std::to_string(k);
        if (chi >= 0) s += ",chi=" + std::to_string(chi);
        return s + ",n=" + std::to_string(n);
    }
};

Json compute_cell(const Cell& c)
{
    Json q{{"group", c.group}, {"N", c.N}, {"k", c.k}};
    CyclotomicNumber v;
    if (c.group == "gamma1") {
        v = CyclotomicNumber(trace_gamma1_S(Gamma1Query(c.N, c.k, c.n)).value);
    } else {
        q["chi"] = c.chi;
        v = trace_S(TraceQuery(c.N, c.k, character_by_index(c.N, c.chi), c.n)).value;
    }
    q["n"] = c.n;
    return Json{{"query", q}, {"result", to_json(v)}};
}

struct TableOptions {
    std::string grid;
    std::string group = "gamma0";
    std::string chars = "trivial";
    int jobs = 0;
    std::string cache;
    std::string format = "json";
};

int run_table(const TableOptions& o)
{
    if (o.format == "csv" && o.group == "gamma0" && o.chars != "trivial")
        throw precondition_error("CSV output needs integer values: use --chars trivial or --group gamma1");
    const Grid g = parse_grid(o.grid);
    std::vector<Cell> cells;
    for (std::int64_t N = g.N.lo; N <= g.N.hi; N += g.N.step)
        for (std::int64_t k = g.k.lo; k <= g.k.hi; k += g.k.step)
            for (std::int64_t n = g.n.lo; n <= g.n.hi; n += g.n.step) {
                if (o.group == "gamma1") {
                    cells.push_back({"gamma1", N, static_cast<int>(k), -1, n});
                } else if (o.chars == "trivial") {
                    cells.push_back({"gamma0", N, static_cast<int>(k), 0, n});
                } else {
                    for (const auto& chi : enumerate_characters(N, k % 2 == 0 ? 1 : -1))
                        cells.push_back({"gamma0", N, static_cast<int>(k), chi.index(), n});
                }
            }

    std::optional<tools::ResultCache> cache;
    std::string cache_dir = o.cache;
    if (cache_dir.empty())
        if (const char* env = std::getenv("HECKE_CACHE_DIR")) cache_dir = env;
    if (!cache_dir.empty()) cache.emplace(cache_dir, engine_version);

    std::vector<Json> records(cells.size());
    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cache)
            if (auto hit = cache->get(cells[i].key())) {
                records[i] = std::move(*hit);
                continue;
            }
        todo.push_back(i);
    }

    const auto start = Clock::now();
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>(o.jobs > 0 ? static_cast<std::size_t>(o.jobs) : hw, std::max<std::size_t>(todo.size(), 1));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(todo.size());
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t j = next++; j < todo.size(); j = next++) {
                    try {
                        const std::size_t i = todo[j];
                        records[i] = compute_cell(cells[i]);
                        if (cache) cache->put(cells[i].key(), records[i]);
                    } catch (...) {
                        errors[j] = std::current_exception();
                    }
                }
            });
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::cerr << "table: " << cells.size() << " cells, " << todo.size() << " computed, " << cells.size() - todo.size()
              << " from cache, " << std::fixed << std::setprecision(3)
              << std::chrono::duration<double>(Clock::now() - start).count() << "s\n";

    if (o.format == "csv") {
        std::cout << "group,N,k,chi,n,value\n";
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const auto& c = cells[i];
            const Json& res = records[i].at("result");
            if (!res.contains("int")) throw integrality_error("CSV cell " + c.key() + " is not an integer");
            const Json& v = res.at("int");
            std::cout << c.group << ',' << c.N << ',' << c.k << ',' << (c.chi >= 0 ? std::to_string(c.chi) : "") << ','
                      << c.n << ',' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
        }
    } else {
        for (const auto& r : records) std::cout << r.dump() << '\n';
    }
    return 0;
}

// ---- selfcheck -----------------------------------------------------------------

SuiteBounds parse_bounds(const std::string& spec)
{
    SuiteBounds b;
    if (spec.empty()) return b;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw precondition_error("bad bound '" + item + "'");
        const std::string name = item.substr(0, eq);
        std::int64_t v = 0;
        try {
            v = std::stoll(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw precondition_error("bad bound '" + item + "'");
        }
        if (v < 1) throw precondition_error("bounds must be positive");
        if (name == "N") b.level_max = v;
        else if (name == "k") b.weight_max = static_cast<int>(v);
        else if (name == "n") b.index_max = v;
        else if (name == "al") b.al_level_max = v;
        else if (name == "c1") b.c1_level_max = v;
        else if (name == "genus") b.genus_level_max = v;
        else if (name == "level1") b.level1_index_max = v;
        else if (name == "level4") b.level4_index_max = v;
        else if (name == "kh") b.kh_index_max = v;
        else if (name == "D") b.class_max = v;
        else throw precondition_error("unknown bound '" + name + "'");
    }
    return b;
}

std::string qseries(const QExpansion<CyclotomicNumber>& f)
{
    std::ostringstream os;
    bool first = true;
    for (std::int64_t j = 0; j <= f.precision(); ++j) {
        const auto& a = f[j];
        if (a.is_zero()) continue;
        std::string coef;
        if (a.is_rational()) {
            Rational q = a.rational_value();
            const bool neg = sgn(q) < 0;
            if (!first) os << (neg ? " - " : " + ");
            else if (neg) os << "-";
            q = abs(q);
            coef = q == 1 && j > 0 ? "" : to_string(q);
        } else {
            if (!first) os << " + ";
            coef = "(" + a.to_string() + ")";
        }
        first = false;
        os << coef;
        if (j > 0) os << (coef.empty() ? "" : "*") << "q" << (j > 1 ? "^" + std::to_string(j) : "");
    }
    if (first) os << "0";
    os << " + O(q^" << f.precision() + 1 << ")";
    return os.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact traces of Hecke operators on spaces of modular forms"};
    app.set_version_flag("--version", std::string(library_version) + " (" + engine_version + ")");
    app.require_subcommand(1);

    const auto positive = CLI::Range(std::int64_t{1}, std::int64_t{1} << 40);
    Common common;
    auto add_common = [&](CLI::App* sub, bool with_breakdown) {
        sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--approx", common.approx, "Also print a decimal rendering with this many digits")
            ->check(CLI::Range(1, 1000));
        sub->add_flag("--no-wall-time", common.no_wall_time, "Omit the wall_time field");
        if (with_breakdown) {
            sub->add_flag("--breakdown", common.breakdown, "Include the term breakdown");
            auto* dbg = sub->add_option_group("debugging", "Alternative conventions; these give wrong answers");
            dbg->add_option("--h-sign", common.h_sign, "Sign s in H(-u^2) = s u / 2")->check(CLI::IsMember({-1, 1}));
            dbg->add_option("--chi-eval", common.chi_eval, "Reading of chi on residues modulo divisors of N")
                ->check(CLI::IsMember({"primitive", "naive"}));
        }
    };

    std::int64_t level = 1, index = 1, ell = 1, D = 0, precision = 10;
    int weight = 2;
    std::string chi_spec = "trivial", space = "S", parity = "all", group = "gamma0", form_format = "json";

    auto* trace = app.add_subcommand("trace", "tr(T_n) on S_k(Gamma_0(N), chi)");
    trace->add_option("--level", level, "Level N")->required()->check(positive);
    trace->add_option("--weight", weight, "Weight k")->required()->check(CLI::Range(2, 1000));
    trace->add_option("--char", chi_spec, "Character index (see `char list`) or 'trivial'");
    trace->add_option("--index", index, "Hecke index n")->required()->check(positive);
    add_common(trace, true);

    auto* trace_al = app.add_subcommand("trace-al", "tr(T_n W_l) on S_k(Gamma_0(N)), l || N, k even");
    trace_al->add_option("--level", level, "Level N")->required()->check(positive);
    trace_al->add_option("--ell", ell, "Exact divisor l of N")->required()->check(positive);
    trace_al->add_option("--weight", weight, "Even weight k")->required()->check(CLI::Range(2, 1000));
    trace_al->add_option("--index", index, "Hecke index n")->required()->check(positive);
    add_common(trace_al, true);

    auto* trace_g1 = app.add_subcommand("trace-gamma1", "tr(T_n) on S_k(Gamma_1(N)) or M_k + S_k");
    trace_g1->add_option("--level", level, "Level N")->required()->check(positive);
    trace_g1->add_option("--weight", weight, "Weight k")->required()->check(CLI::Range(2, 1000));
    trace_g1->add_option("--index", index, "Hecke index n")->required()->check(positive);
    trace_g1->add_option("--space", space, "S or MS")->check(CLI::IsMember({"S", "MS"}));
    add_common(trace_g1, true);

    auto* trace_form_cmd = app.add_subcommand("trace-form", "sum of tr(T_n) q^n on a cusp space");
    trace_form_cmd->add_option("--group", group, "gamma0 or gamma1")->check(CLI::IsMember({"gamma0", "gamma1"}));
    trace_form_cmd->add_option("--level", level, "Level N")->required()->check(positive);
    trace_form_cmd->add_option("--weight", weight, "Weight k")->required()->check(CLI::Range(2, 1000));
    trace_form_cmd->add_option("--char", chi_spec, "Character index or 'trivial' (gamma0 only)");
    trace_form_cmd->add_option("--precision", precision, "Last exponent P")->check(CLI::Range(1, 100000));
    trace_form_cmd->add_option("--parity", parity, "Keep all, odd or even n")->check(CLI::IsMember({"all", "odd", "even"}));
    trace_form_cmd->add_option("--format", form_format, "json or qseries")->check(CLI::IsMember({"json", "qseries"}));

    auto* classnum = app.add_subcommand("classnum", "Hurwitz class number H(D), any integer D");
    classnum->add_option("--D", D, "Argument D")->required()->allow_extra_args(false);
    add_common(classnum, false);

    auto* chars = app.add_subcommand("char", "Dirichlet characters");
    auto* char_list = chars->add_subcommand("list", "List the characters mod N in index order");
    char_list->add_option("--level", level, "Modulus N")->required()->check(CLI::Range(1, 100000));
    chars->require_subcommand(1);

    std::string suite = "all", bounds_spec, mutate = "none";
    auto* selfcheck = app.add_subcommand("selfcheck", "Cross-check the engines against oracles and each other");
    selfcheck->add_option("--suite", suite, "Suite name or 'all'");
    selfcheck->add_option("--bounds", bounds_spec, "e.g. N=16,k=8,n=12 (also al, c1, genus, level1, level4, kh, D)");
    selfcheck->add_option("--mutate", mutate, "Run under a deliberately wrong convention")
        ->check(CLI::IsMember({"none", "h-sign", "chi-naive"}));

    TableOptions topt;
    auto* table = app.add_subcommand("table", "Grid of traces with a resumable on-disk cache");
    table->add_option("--grid", topt.grid, "e.g. N=1..10,k=2..6:2,n=1..10")->required();
    table->add_option("--group", topt.group, "gamma0 or gamma1")->check(CLI::IsMember({"gamma0", "gamma1"}));
    table->add_option("--chars", topt.chars, "trivial or all-valid-parity")
        ->check(CLI::IsMember({"trivial", "all-valid-parity"}));
    table->add_option("--jobs", topt.jobs, "Worker threads (default: hardware threads)")->check(CLI::Range(1, 1024));
    table->add_option("--cache", topt.cache, "Cache directory (default: $HECKE_CACHE_DIR, else none)");
    table->add_option("--format", topt.format, "json (one record per line) or csv")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    const auto start = Clock::now();
    try {
        if (trace->parsed()) {
            const TraceQuery q(level, weight, parse_character(level, chi_spec), index);
            const auto r = trace_S(q, common.conventions());
            emit(common, Json{{"level", level}, {"weight", weight}, {"char", q.chi.index()}, {"index", index}}, r.value, &r, start);
        } else if (trace_al->parsed()) {
            const auto r = trace_Tn_Wl(ALQuery(level, ell, weight, index), common.conventions());
            emit(common, Json{{"level", level}, {"ell", ell}, {"weight", weight}, {"index", index}}, r.value, &r, start);
        } else if (trace_g1->parsed()) {
            const Gamma1Query q(level, weight, index);
            const auto r = from_gamma1(space == "S" ? trace_gamma1_S(q, common.conventions()) : trace_gamma1_MS(q, common.conventions()));
            emit(common, Json{{"level", level}, {"weight", weight}, {"index", index}, {"space", space}}, r.value, &r, start);
        } else if (trace_form_cmd->parsed()) {
            GroupSpec gs;
            gs.level = level;
            if (group == "gamma1") {
                gs.kind = GroupSpec::Kind::gamma1;
            } else {
                gs.chi_index = parse_character(level, chi_spec).index();
            }
            const ParityFilter pf = parity == "odd" ? ParityFilter::odd : parity == "even" ? ParityFilter::even : ParityFilter::all;
            const auto f = trace_form(gs, weight, precision, pf);
            if (form_format == "qseries") {
                std::cout << qseries(f) << '\n';
            } else {
                Json coeffs = Json::array();
                for (std::int64_t j = 1; j <= f.precision(); ++j) coeffs.push_back(to_json(f[j]));
                std::cout << Json{{"label", f.label}, {"parity", parity}, {"coefficients", coeffs}}.dump() << '\n';
            }
        } else if (classnum->parsed()) {
            const Rational h = hurwitz_H(D);
            if (common.format == "text") {
                std::cout << to_string(h) << '\n';
            } else {
                Json rec{{"query", Json{{"D", D}}}, {"result", to_json(h)}, {"h0", to_json(h0(D))}};
                if (common.approx > 0) rec["approx"] = approx_string(CyclotomicNumber(h), common.approx);
                std::cout << rec.dump() << '\n';
            }
        } else if (char_list->parsed()) {
            const auto& grp = *UnitGroup::get(level);
            Json gens = Json::array();
            for (const auto& f : grp.factors()) gens.push_back(Json{{"generator", f.generator}, {"order", f.order}});
            Json list = Json::array();
            for (const auto& chi : enumerate_characters(level)) {
                Json c = to_json(chi);
                c["index"] = chi.index();
                c["order"] = chi.order();
                list.push_back(std::move(c));
            }
            std::cout << Json{{"modulus", level}, {"generators", gens}, {"characters", list}}.dump() << '\n';
        } else if (selfcheck->parsed()) {
            Conventions conv;
            if (mutate == "h-sign") conv.negative_square_sign = 1;
            if (mutate == "chi-naive") conv.residue_evaluation = ResidueEvaluation::naive_representative;
            const auto report = consistency_suite(suite, parse_bounds(bounds_spec), conv);
            Json failures = Json::array();
            for (const auto& f : report.failures)
                failures.push_back(Json{{"case", f.key}, {"expected", f.expected}, {"actual", f.actual}});
            std::cout << Json{{"suite", report.suite}, {"cases", report.cases}, {"failures", failures}, {"ok", report.ok()}}.dump(2)
                      << '\n';
            return report.ok() ? 0 : exit_selfcheck;
        } else if (table->parsed()) {
            return run_table(topt);
        }
    } catch (const integrality_error& e) {
        std::cerr << "integrality failure: " << e.what() << '\n';
        return exit_integrality;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return 0;
}
