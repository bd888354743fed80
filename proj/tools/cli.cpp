#include "cli.hpp"

#include "dfmax/errors.hpp"
#include "dfmax/krawtchouk.hpp"
#include "dfmax/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

namespace dfmax::cli {

namespace {

const std::vector<std::string> kCommands = {"count",       "estimate",      "coeffs",
                                            "krawtchouk",  "beta",          "bounds",
                                            "concentration", "simulate",    "rm-check"};

struct Options {
    std::optional<int> d, n, nmax, K, a, k, x, terms, samples, trials, M;
    std::optional<double> alpha;
    std::optional<std::uint64_t> seed;
    std::vector<int> nbar, s, m;
    std::vector<double> xi;
    std::string kind = "b";
    std::string family;
    std::string suite;
    std::string format = "csv";
    std::string out;
};

struct Output {
    std::string text;
    std::vector<std::string> notes;  // sent to stderr in csv mode
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

int need(const std::optional<int>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing required flag ") + flag);
    return *v;
}

std::uint64_t seed_of(const Options& o) {
    if (o.seed) return *o.seed;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

bool json(const Options& o) { return o.format == "json"; }

std::string emit(const Options& o, const Json& j, const CsvTable& t) {
    return json(o) ? j.dump() + "\n" : t.str();
}

Output cmd_count(const Options& o) {
    int d = need(o.d, "--d");
    int nmax = o.nmax ? *o.nmax : need(o.n, "--nmax");
    CoordinateCap cap = o.K ? CoordinateCap::at_most(*o.K) : CoordinateCap::unbounded();
    CoefficientSeries series = theta_coeffs(d, nmax, cap);
    return {emit(o, to_json(series), counts_csv(series)), {}};
}

Output cmd_estimate(const Options& o) {
    if (o.alpha) {
        SaddleSolution s = solve_saddle(*o.alpha);
        return {emit(o, to_json(s), to_csv(s)), {}};
    }
    int d = need(o.d, "--d");
    std::vector<EstimateRow> rows;
    if (o.n && !o.nmax) {
        rows = estimate_rows(d, *o.n);
        rows.erase(rows.begin(), rows.end() - 1);
    } else {
        rows = estimate_rows(d, o.nmax ? *o.nmax : std::max(1, d / 20));
    }
    return {emit(o, to_json(rows), to_csv(rows)), {}};
}

Output cmd_coeffs(const Options& o) {
    int m = o.terms.value_or(3);
    std::vector<Rational> vals;
    int first = 0;
    if (o.kind == "a") {
        vals = inversion_coeffs(m);
        first = 1;
    } else if (o.kind == "b") {
        vals = b_coeffs(m);
    } else {
        throw UsageError("--kind must be a or b");
    }
    Json arr = Json::array();
    CsvTable t({"k", "value"});
    for (size_t i = 0; i < vals.size(); ++i) {
        arr.push_back(to_string(vals[i]));
        t.add_row({std::to_string(first + static_cast<int>(i)), to_string(vals[i])});
    }
    Json j;
    j["kind"] = o.kind;
    j["first_index"] = first;
    j["coeffs"] = arr;
    return {emit(o, j, t), {}};
}

Output cmd_krawtchouk(const Options& o) {
    int n = need(o.n, "--n");
    if (o.k && o.x) {
        std::string v = to_string(kr(*o.k, n, *o.x));
        if (json(o)) {
            Json j;
            j["n"] = n;
            j["k"] = *o.k;
            j["x"] = *o.x;
            j["value"] = v;
            return {j.dump() + "\n", {}};
        }
        return {v + "\n", {}};
    }
    CsvTable t({"n", "k", "x", "value"});
    Json arr = Json::array();
    int klo = o.k.value_or(0), khi = o.k.value_or(n);
    for (int k = klo; k <= khi; ++k) {
        for (int x = 0; x <= n; ++x) {
            if (o.x && x != *o.x) continue;
            std::string v = to_string(kr(k, n, x));
            t.add_row({std::to_string(n), std::to_string(k), std::to_string(x), v});
            arr.push_back(Json{{"k", k}, {"x", x}, {"value", v}});
        }
    }
    Json j;
    j["n"] = n;
    j["values"] = arr;
    return {emit(o, j, t), {}};
}

std::string join_doubles(const std::vector<double>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + format_double(v[i]);
    return s;
}

Output cmd_beta(const Options& o) {
    if (o.nbar.empty()) throw UsageError("missing required flag --nbar");
    MultiIndex nbar{o.nbar};
    std::vector<TorusPoint> points;
    std::optional<std::uint64_t> seed;
    if (!o.xi.empty()) {
        if (o.d && *o.d != static_cast<int>(o.xi.size())) throw UsageError("--xi length differs from --d");
        points.push_back(TorusPoint{o.xi});
    } else {
        int d = need(o.d, "--d");
        seed = seed_of(o);
        std::mt19937_64 rng(*seed);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < o.samples.value_or(1); ++i) {
            TorusPoint p;
            for (int c = 0; c < d; ++c) p.xi.push_back(u(rng));
            points.push_back(p);
        }
    }
    const bool brute = points.front().dim() <= 10 && nbar.total() <= 4;
    CsvTable t({"xi", "beta", "bruteforce"});
    Json arr = Json::array();
    for (const TorusPoint& p : points) {
        double b = beta_eval(nbar, p);
        Json row;
        row["xi"] = p.xi;
        row["beta"] = b;
        std::string bf;
        if (brute) {
            double v = beta_bruteforce(nbar, p).real();
            row["bruteforce"] = v;
            bf = format_double(v);
        }
        arr.push_back(row);
        t.add_row({join_doubles(p.xi), format_double(b), bf});
    }
    Json j;
    j["nbar"] = o.nbar;
    if (seed) j["seed"] = *seed;
    j["values"] = arr;
    Output out{emit(o, j, t), {}};
    if (seed) out.notes.push_back("seed " + std::to_string(*seed));
    if (!brute) out.notes.push_back("brute force skipped: needs d <= 10 and |n| <= 4");
    return out;
}

Output cmd_bounds(const Options& o) {
    if (o.suite.empty()) {
        throw UsageError("missing required flag --suite (beta-decay, semigroup-approx, dyadic-sum, "
                         "subset-average, difference-decay)");
    }
    BoundSuite suite = parse_bound_suite(o.suite);
    int samples = o.samples.value_or(suite == BoundSuite::DyadicSum ? 10000 : 500);
    BoundReport r = check_bounds(suite, samples, seed_of(o));
    Output out{emit(o, to_json(r), to_csv(r)), r.notes};
    if (!r.explicit_constant) out.notes.push_back("implicit constant: only the fitted value is reported");
    return out;
}

Output cmd_concentration(const Options& o) {
    ConcentrationReport r =
        concentration_report(need(o.d, "--d"), need(o.n, "--n"), need(o.K, "--K"), need(o.a, "--a"));
    return {emit(o, to_json(r), to_csv(r)), {}};
}

const char* kSimulationCaveat =
    "empirical lower bound for the l2 operator norm on a finite torus, not an upper bound";

Output cmd_simulate(const Options& o) {
    if (o.family.empty()) throw UsageError("missing required flag --family (spheres, dbar, semigroup)");
    FamilyKind kind = parse_family(o.family);
    int param = kind == FamilyKind::Spheres ? o.nmax.value_or(8)
              : kind == FamilyKind::DBar    ? o.K.value_or(1)
                                            : o.k.value_or(1);
    int M = o.M.value_or(16);
    int trials = o.trials.value_or(8);
    std::uint64_t seed = seed_of(o);
    std::vector<int> dims;
    if (o.d) dims.push_back(*o.d);
    else dims = {1, 2, 3, 4};
    std::vector<NormRatioReport> rows;
    for (int d : dims) rows.push_back(empirical_norm_ratio(build_family(kind, d, param), d, M, trials, seed));

    Output out;
    out.notes.push_back(kSimulationCaveat);
    for (const NormRatioReport& r : rows) {
        for (const std::string& n : r.notes) out.notes.push_back("d=" + std::to_string(r.d) + ": " + n);
    }
    Json j;
    j["caveat"] = kSimulationCaveat;
    Json arr = Json::array();
    for (const NormRatioReport& r : rows) arr.push_back(to_json(r));
    j["runs"] = arr;
    out.text = emit(o, j, to_csv(rows));
    return out;
}

Output cmd_rm_check(const Options& o) {
    std::vector<int> s = o.s;
    if (s.empty()) s.assign(static_cast<size_t>(o.K.value_or(1)), 4);
    if (o.K && *o.K != static_cast<int>(s.size())) throw UsageError("--K differs from the length of --s");
    std::vector<int> m = o.m;
    if (m.empty()) {
        for (int v : s) {
            if (v < 1 || v > 20) throw std::invalid_argument("rm-check: s_j must lie in [1, 20]");
            m.push_back(1 << v);
        }
    }
    RMReport r = rm_check(s, m, o.trials.value_or(100), seed_of(o));
    return {emit(o, to_json(r), to_csv(r)), {}};
}

void add_common(CLI::App& sub, Options& o) {
    sub.add_option("--d", o.d, "dimension");
    sub.add_option("--n", o.n, "radius squared or size");
    sub.add_option("--nmax", o.nmax, "largest n");
    sub.add_option("--K", o.K, "frequency cap or coordinate cap");
    sub.add_option("--a", o.a, "mass threshold");
    sub.add_option("--k", o.k, "degree or semigroup step");
    sub.add_option("--x", o.x, "Krawtchouk argument");
    sub.add_option("--nbar", o.nbar, "multi-index, comma separated")->delimiter(',');
    sub.add_option("--xi", o.xi, "torus point, comma separated")->delimiter(',');
    sub.add_option("--alpha", o.alpha, "density n/d");
    sub.add_option("--terms", o.terms, "number of series terms");
    sub.add_option("--kind", o.kind, "coefficient family: a or b");
    sub.add_option("--samples", o.samples, "random samples or grid points");
    sub.add_option("--trials", o.trials, "random trials");
    sub.add_option("--seed", o.seed, "RNG seed (recorded in output)");
    sub.add_option("--M", o.M, "torus side length");
    sub.add_option("--family", o.family, "operator family: spheres, dbar, semigroup");
    sub.add_option("--suite", o.suite, "bound suite");
    sub.add_option("--s", o.s, "dyadic depths, comma separated")->delimiter(',');
    sub.add_option("--m", o.m, "index limits, comma separated")->delimiter(',');
    sub.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub.add_option("--out", o.out, "write output to this path");
}

} // namespace

std::string usage() {
    std::ostringstream os;
    os << "usage: dfmax <command> [flags]\n\ncommands:\n"
       << "  count          lattice shell sizes, --d --nmax [--K]\n"
       << "  estimate       saddle-point log estimate, --d [--n|--nmax] or --alpha\n"
       << "  coeffs         exact series coefficients, --kind a|b --terms m\n"
       << "  krawtchouk     normalized Krawtchouk values, --n [--k] [--x]\n"
       << "  beta           multiplier symbol, --nbar --d [--xi] [--samples --seed]\n"
       << "  bounds         randomized bound suite, --suite [--samples --seed]\n"
       << "  concentration  exact concentration counts, --d --n --K --a\n"
       << "  simulate       torus maximal function, --family [--d --M --trials --seed]\n"
       << "  rm-check       dyadic maximal inequality, --s [--m --trials --seed]\n\n"
       << "common flags: --format csv|json, --out PATH\n";
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty() || std::find(kCommands.begin(), kCommands.end(), args[0]) == kCommands.end()) {
        if (!args.empty() && (args[0] == "--help" || args[0] == "-h")) {
            out << usage();
            return 0;
        }
        if (!args.empty()) err << "unknown command '" << args[0] << "'\n";
        err << usage();
        return 2;
    }

    Options o;
    CLI::App app{"dfmax"};
    CLI::App* sub = app.add_subcommand(args[0]);
    add_common(*sub, o);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << sub->help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << usage();
        return 2;
    }

    Output result;
    try {
        const std::string& c = args[0];
        if (c == "count") result = cmd_count(o);
        else if (c == "estimate") result = cmd_estimate(o);
        else if (c == "coeffs") result = cmd_coeffs(o);
        else if (c == "krawtchouk") result = cmd_krawtchouk(o);
        else if (c == "beta") result = cmd_beta(o);
        else if (c == "bounds") result = cmd_bounds(o);
        else if (c == "concentration") result = cmd_concentration(o);
        else if (c == "simulate") result = cmd_simulate(o);
        else result = cmd_rm_check(o);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << usage();
        return 2;
    } catch (const GuardError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (!json(o)) {
        for (const std::string& n : result.notes) err << "note: " << n << "\n";
    }
    if (o.out.empty()) {
        out << result.text;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) {
            err << "error: cannot open " << o.out << "\n";
            return 1;
        }
        f << result.text;
    }
    return 0;
}

} // namespace dfmax::cli
