#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gpoly/asymptotics.hpp"
#include "gpoly/errors.hpp"
#include "gpoly/gpoly.hpp"
#include "gpoly/json_io.hpp"
#include "gpoly/recurrence.hpp"
#include "gpoly/rootline.hpp"

using namespace gpoly;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kIo = 3 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "table";
    bool no_meta = false;
    int threads = 0;
    std::string out;
    std::string plot_data;
};

int resolve_threads(int requested) {
    if (const char* env = std::getenv("GPOLY_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
        throw DomainError("GPOLY_THREADS must be a positive integer");
    }
    if (requested >= 1) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream s;
    s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return s.str();
}

void write_text(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out);
    if (!f || !(f << text)) throw IoError("cannot write " + opt.out);
}

void emit_json(const Options& opt, const std::string& command, const Json& payload) {
    Json env{{"command", command}, {"format", "json"}, {"payload", payload}};
    if (!opt.no_meta) env["timestamp"] = utc_timestamp();
    write_text(opt, env.dump(2) + "\n");
}

// Fixed-width table from rows of cells; first row is the header.
std::string table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], r[i].size());
        }
    std::ostringstream s;
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            s << std::left << std::setw(static_cast<int>(width[i])) << r[i];
            if (i + 1 < r.size()) s << "  ";
        }
        s << '\n';
    }
    return s.str();
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

void write_plot_data(const Options& opt, const std::vector<std::pair<int, double>>& points) {
    if (opt.plot_data.empty()) return;
    std::ofstream f(opt.plot_data);
    if (!f) throw IoError("cannot write " + opt.plot_data);
    f << "# n clt_distance\n";
    for (const auto& [n, v] : points) f << n << ' ' << format_double(v) << '\n';
    if (!f) throw IoError("cannot write " + opt.plot_data);
}

std::string pass_word(bool ok) { return ok ? "PASS" : "FAIL"; }

int run_compute(const Options& opt, int n, int d, const std::string& scheme) {
    const GPolyRecord rec = scheme == "closed-form" ? closed_form(n, d) : via_recurrence(n, d, parse_scheme(scheme));
    if (opt.format == "json") {
        emit_json(opt, "compute", to_json(rec));
    } else if (opt.format == "csv") {
        std::string s = "n,d,i,coefficient\n";
        for (int i = 0; i <= rec.poly.degree(); ++i)
            s += std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(i) + "," + to_string(rec.poly.coeff(i)) + "\n";
        write_text(opt, s);
    } else {
        write_text(opt, "g(" + std::to_string(n) + "," + std::to_string(d) + ") = " + to_string(rec.poly) + "\n");
    }
    return kOk;
}

int run_verify(const Options& opt, const std::string& ids, int n_max, int threads) {
    std::vector<const RecurrenceSpec*> specs;
    if (ids == "all") {
        for (const auto& s : registry()) specs.push_back(&s);
    } else {
        for (const auto& id : split_csv(ids)) {
            const RecurrenceSpec* s = find_spec(id);
            if (!s) throw DomainError("unknown recurrence id '" + id + "'");
            specs.push_back(s);
        }
    }
    std::vector<VerificationReport> reports;
    for (const auto* s : specs) reports.push_back(verify(*s, n_max, threads));
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.passed();

    if (opt.format == "json") {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        emit_json(opt, "verify", Json{{"reports", arr}, {"pass", ok}});
    } else {
        std::vector<std::vector<std::string>> rows{{"id", "domain", "checked", "skipped", "failures", "status"}};
        for (const auto& r : reports)
            rows.push_back({r.id, r.domain, std::to_string(r.checked), std::to_string(r.skipped.size()),
                            std::to_string(r.failures.size()), pass_word(r.passed())});
        if (opt.format == "csv") {
            std::string s;
            for (const auto& row : rows) {
                for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + ("\"" + row[i] + "\"");
                s += "\n";
            }
            write_text(opt, s);
        } else {
            write_text(opt, table(rows));
        }
    }
    return ok ? kOk : kFail;
}

int run_roots(const Options& opt, int n, int d) {
    const UniPoly p = closed_form(n, d).poly;
    if (p.is_zero()) throw DomainError("g is the zero polynomial at this (n, d)");
    auto roots = real_roots(p);
    const Rational width = make_rational(1, 1000000);
    for (auto& r : roots) r.value.iv = refine(r.value.poly, r.value.iv, width);
    if (opt.format == "json") {
        Json arr = Json::array();
        for (const auto& r : roots) arr.push_back(to_json(r));
        emit_json(opt, "roots", Json{{"n", n}, {"d", d}, {"real_rooted", is_real_rooted(p)}, {"roots", arr}});
        return kOk;
    }
    std::vector<std::vector<std::string>> rows{{"lo", "hi", "kind", "multiplicity", "approx"}};
    for (const auto& r : roots)
        rows.push_back({to_string(r.value.iv.lo), to_string(r.value.iv.hi), r.value.iv.is_exact() ? "exact" : "open",
                        std::to_string(r.multiplicity), format_double(Rational((r.value.iv.lo + r.value.iv.hi) / 2).get_d())});
    if (opt.format == "csv") {
        std::string s;
        for (const auto& row : rows) s += row[0] + "," + row[1] + "," + row[2] + "," + row[3] + "," + row[4] + "\n";
        write_text(opt, s);
    } else {
        write_text(opt, table(rows));
    }
    return kOk;
}

int run_interlace(const Options& opt, const std::string& family, int n, int d, int n_max, int threads) {
    const Family fam = parse_family(family);
    int param = 0;
    if (fam == Family::FixedD) {
        if (d < 1) throw DomainError("fixed-d family needs --d");
        param = d;
    } else if (fam == Family::FixedN) {
        if (n < 2) throw DomainError("fixed-n family needs --n");
        param = n;
    }
    const FamilyReport rep = verify_sturm_family(fam, param, n_max, threads);
    if (opt.format == "json") {
        emit_json(opt, "interlace", to_json(rep));
    } else {
        std::vector<std::vector<std::string>> rows{{"index", "from", "to", "verdict", "shared_roots"}};
        for (const auto& p : rep.pairs)
            rows.push_back({std::to_string(p.index), "g(" + std::to_string(p.n_from) + "," + std::to_string(p.d_from) + ")",
                            "g(" + std::to_string(p.n_to) + "," + std::to_string(p.d_to) + ")",
                            std::string(relation_name(p.verdict.relation)), std::to_string(p.verdict.shared_roots.size())});
        std::string s;
        if (opt.format == "csv") {
            for (const auto& row : rows) s += row[0] + "," + row[1] + "," + row[2] + "," + row[3] + "," + row[4] + "\n";
        } else {
            s = table(rows) + family + ": " + pass_word(rep.pass) + "\n";
        }
        write_text(opt, s);
    }
    return rep.pass ? kOk : kFail;
}

int run_liu_wang(const Options& opt, const std::string& family, int n_max, bool negate_psi) {
    std::vector<LiuWangInstance> instances = liu_wang_grid(parse_family(family), n_max);
    if (negate_psi)
        for (auto& inst : instances) inst = with_negated_psi(inst, 0);
    bool ok = true;
    Json arr = Json::array();
    std::vector<std::vector<std::string>> rows{{"instance", "satisfied", "strict", "violations"}};
    for (const auto& inst : instances) {
        const LiuWangVerdict v = liu_wang_check(inst);
        ok = ok && v.satisfied;
        arr.push_back(to_json(inst, v));
        std::string conds;
        for (const auto& x : v.violations) conds += (conds.empty() ? "" : ";") + x.condition;
        rows.push_back({inst.label, v.satisfied ? "yes" : "no", v.strict ? "yes" : "no", conds.empty() ? "-" : conds});
    }
    if (opt.format == "json") {
        emit_json(opt, "liu-wang", Json{{"family", family}, {"n_max", n_max}, {"instances", arr}, {"pass", ok}});
    } else if (opt.format == "csv") {
        std::string s;
        for (const auto& row : rows) s += "\"" + row[0] + "\"," + row[1] + "," + row[2] + "," + row[3] + "\n";
        write_text(opt, s);
    } else {
        write_text(opt, table(rows) + family + ": " + pass_word(ok) + "\n");
    }
    return ok ? kOk : kFail;
}

std::string stats_table(const std::vector<StatsRecord>& rows) {
    std::vector<std::vector<std::string>> t{{"n", "d", "mu", "sigma2", "r", "clt", "llt"}};
    for (const auto& r : rows)
        t.push_back({std::to_string(r.n), std::to_string(r.d), format_double(r.mu.get_d()), format_double(r.sigma2.get_d()),
                     format_double(r.r.get_d()),
                     format_double(r.clt_distance), format_double(r.llt_distance)});
    return table(t);
}

int emit_stats(const Options& opt, const std::string& command, const std::vector<StatsRecord>& rows) {
    if (opt.format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        emit_json(opt, command, Json{{"rows", arr}});
    } else if (opt.format == "csv") {
        write_text(opt, stats_csv(rows));
    } else {
        write_text(opt, stats_table(rows));
    }
    std::vector<std::pair<int, double>> pts;
    for (const auto& r : rows) pts.emplace_back(r.n, r.clt_distance);
    write_plot_data(opt, pts);
    return kOk;
}

int run_stats(const Options& opt, int n_min, int n_max, int threads) {
    if (n_min < 3 || n_max < n_min) throw DomainError("stats needs 3 <= --n-min <= --n-max");
    std::vector<int> ns;
    for (int n = n_min; n <= n_max; ++n) ns.push_back(n);
    std::vector<StatsRecord> rows(ns.size());
    std::vector<std::thread> pool;
    const std::size_t width = static_cast<std::size_t>(threads);
    for (std::size_t w = 0; w < width; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < ns.size(); i += width) rows[i] = stats(ns[i]);
        });
    for (auto& t : pool) t.join();
    return emit_stats(opt, "stats", rows);
}

int run_lemmas(const Options& opt, int m_max) {
    const std::vector<LemmaReport> reps{check_lemma44(m_max), check_lemma45(m_max), check_variance_bounds(m_max)};
    bool ok = true;
    for (const auto& r : reps) ok = ok && r.pass();
    if (opt.format == "json") {
        Json arr = Json::array();
        for (const auto& r : reps) arr.push_back(to_json(r));
        emit_json(opt, "lemmas", Json{{"reports", arr}, {"pass", ok}});
    } else {
        std::vector<std::vector<std::string>> rows{{"lemma", "check", "m_range", "status"}};
        for (const auto& rep : reps) {
            std::vector<std::string> names;
            for (const auto& row : rep.rows)
                for (const auto& c : row.checks)
                    if (std::find(names.begin(), names.end(), c.name) == names.end()) names.push_back(c.name);
            for (const auto& name : names) {
                int lo = 0, hi = 0;
                bool held = true;
                for (const auto& row : rep.rows)
                    for (const auto& c : row.checks)
                        if (c.name == name) {
                            if (lo == 0) lo = row.m;
                            hi = row.m;
                            held = held && c.holds;
                        }
                rows.push_back({rep.lemma, name, std::to_string(lo) + ".." + std::to_string(hi), pass_word(held)});
            }
        }
        std::string s;
        if (opt.format == "csv") {
            for (const auto& row : rows) s += row[0] + "," + row[1] + "," + row[2] + "," + row[3] + "\n";
        } else {
            s = table(rows);
        }
        write_text(opt, s);
    }
    return ok ? kOk : kFail;
}

int run_normality(const Options& opt, const std::string& ns, int grid, int threads) {
    std::vector<int> n_list;
    for (const auto& item : split_csv(ns)) {
        try {
            n_list.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw DomainError("bad n value '" + item + "'");
        }
    }
    if (n_list.empty()) throw DomainError("normality needs at least one n");
    return emit_stats(opt, "normality", normality_report(n_list, grid, threads));
}

int run_conjecture(const Options& opt, const std::string& schedule, double param, int n_min, int n_max, int grid,
                   int threads) {
    const Schedule s = parse_schedule(schedule);
    if (n_min <= 0) n_min = first_valid_n(s, param);
    const ScheduleProbe probe = conjecture_probe(s, param, n_min, n_max, grid, threads);
    if (opt.format == "json") {
        emit_json(opt, "conjecture", to_json(probe));
    } else if (opt.format == "csv") {
        write_text(opt, probe_csv(probe));
    } else {
        std::vector<std::vector<std::string>> t{{"n", "d", "sigma2", "clt", "llt"}};
        for (const auto& r : probe.rows)
            t.push_back({std::to_string(r.n), std::to_string(r.d), format_double(r.sigma2.get_d()), format_double(r.clt_distance),
                         format_double(r.llt_distance)});
        write_text(opt, table(t));
    }
    std::vector<std::pair<int, double>> pts;
    for (const auto& r : probe.rows) pts.emplace_back(r.n, r.clt_distance);
    write_plot_data(opt, pts);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"g-polynomials of uniform matroids: construction, recurrences, interlacing, asymptotics"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_flag("--no-meta", opt.no_meta, "Omit the timestamp from the JSON envelope");
    app.add_option("--threads", opt.threads, "Worker threads (default: all cores; GPOLY_THREADS overrides)")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", opt.out, "Write output to this file instead of stdout");
    app.add_option("--plot-data", opt.plot_data, "Also write a two-column (n, clt_distance) file");

    int n = 0, d = 0, n_max = 40, n_min = 0, m_max = 100, grid = 201;
    double param = 2.0;
    std::string scheme = "closed-form", ids = "all", family, ns = "50,100,200,400", schedule;
    bool negate_psi = false;

    auto* compute = app.add_subcommand("compute", "Coefficients of g(n, d)");
    compute->add_option("--n", n, "n")->required();
    compute->add_option("--d", d, "d")->required();
    compute->add_option("--scheme", scheme, "closed-form or a recurrence scheme name");

    auto* verify_cmd = app.add_subcommand("verify", "Check registered recurrences against the closed form");
    verify_cmd->add_option("--ids", ids, "Comma-separated ids or 'all'");
    verify_cmd->add_option("--n-max", n_max, "Largest n");

    auto* roots = app.add_subcommand("roots", "Isolating intervals for the real roots of g(n, d)");
    roots->add_option("--n", n, "n")->required();
    roots->add_option("--d", d, "d")->required();

    auto* interlace = app.add_subcommand("interlace", "Interlacing of consecutive members of a family");
    interlace->add_option("--family", family, "fixed-d, fixed-n, diag-2d, diag-2d+1 or diag-half")->required();
    interlace->add_option("--n", n, "n for fixed-n");
    interlace->add_option("--d", d, "d for fixed-d");
    interlace->add_option("--n-max", n_max, "Largest n in the family");

    auto* liu_wang = app.add_subcommand("liu-wang", "Check the Liu-Wang hypotheses on recursion instances");
    liu_wang->add_option("--family", family, "fixed-d, fixed-n, diag-2d, diag-2d+1 or diag-half")->required();
    liu_wang->add_option("--n-max", n_max, "Largest first index of F");
    liu_wang->add_flag("--negate-psi", negate_psi, "Flip the sign of psi before checking");

    auto* stats_cmd = app.add_subcommand("stats", "Exact mean, variance and ratio on the half-diagonal");
    stats_cmd->add_option("--n-max", n_max, "Largest n")->required();
    stats_cmd->add_option("--n-min", n_min, "Smallest n (default 4)");

    auto* lemmas = app.add_subcommand("lemmas", "Exact sweeps of the ratio and variance inequalities");
    lemmas->add_option("--m-max", m_max, "Largest m");

    auto* normality = app.add_subcommand("normality", "CLT and LLT distances on the half-diagonal");
    normality->add_option("--n", ns, "Comma-separated n values");
    normality->add_option("--grid", grid, "LLT grid size (>= 101)");

    auto* conjecture = app.add_subcommand("conjecture", "Variance and distances along a d(n) schedule");
    conjecture->add_option("--schedule", schedule, "constant-c, floor-sqrt, floor-log, floor-alpha-n or floor-half")
        ->required();
    conjecture->add_option("--param", param, "c for constant-c, alpha for floor-alpha-n");
    conjecture->add_option("--n-min", n_min, "Smallest n (default: first valid n >= 4)");
    conjecture->add_option("--n-max", n_max, "Largest n")->required();
    conjecture->add_option("--grid", grid, "LLT grid size (>= 101)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const int threads = resolve_threads(opt.threads);
        if (*compute) return run_compute(opt, n, d, scheme);
        if (*verify_cmd) return run_verify(opt, ids, n_max, threads);
        if (*roots) return run_roots(opt, n, d);
        if (*interlace) return run_interlace(opt, family, n, d, n_max, threads);
        if (*liu_wang) return run_liu_wang(opt, family, n_max, negate_psi);
        if (*stats_cmd) return run_stats(opt, n_min > 0 ? n_min : 4, n_max, threads);
        if (*lemmas) return run_lemmas(opt, m_max);
        if (*normality) return run_normality(opt, ns, grid, threads);
        if (*conjecture) return run_conjecture(opt, schedule, param, n_min, n_max, grid, threads);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const SingularCoefficientError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
