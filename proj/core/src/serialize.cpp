#include "dfmax/serialize.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace dfmax {

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

namespace {

void write_field(std::ostream& os, const std::string& f) {
    if (f.find_first_of(",\"\n") == std::string::npos) {
        os << f;
        return;
    }
    os << '"';
    for (char c : f) {
        if (c == '"') os << '"';
        os << c;
    }
    os << '"';
}

void write_row(std::ostream& os, const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size(); ++i) {
        if (i) os << ',';
        write_field(os, row[i]);
    }
    os << '\n';
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
    return s;
}

} // namespace

void CsvTable::write(std::ostream& os) const {
    write_row(os, header_);
    for (const auto& r : rows_) write_row(os, r);
}

std::string CsvTable::str() const {
    std::ostringstream os;
    write(os);
    return os.str();
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::vector<EstimateRow> estimate_rows(int d, int nmax) {
    std::vector<BigInt> counts = sphere_counts(d, nmax);
    std::vector<EstimateRow> rows;
    for (int n = 1; n <= nmax; ++n) {
        EstimateRow r;
        r.d = d;
        r.n = n;
        r.ln_exact = log_big(counts[static_cast<size_t>(n)]);
        r.ln_estimate = log_estimate(n, d);
        r.log_ratio = r.ln_estimate - r.ln_exact;
        rows.push_back(r);
    }
    return rows;
}

Json to_json(const CoefficientSeries& series) {
    Json j;
    j["d"] = series.d;
    if (series.cap.limit) j["K"] = *series.cap.limit;
    Json counts = Json::array();
    for (const BigInt& c : series.coeffs) counts.push_back(c.get_str());
    j["counts"] = counts;
    return j;
}

CsvTable counts_csv(const CoefficientSeries& series) {
    CsvTable t({"d", "n", "count"});
    for (size_t n = 0; n < series.coeffs.size(); ++n) {
        t.add_row({std::to_string(series.d), std::to_string(n), series.coeffs[n].get_str()});
    }
    return t;
}

Json to_json(const ConcentrationReport& r) {
    Json j;
    j["d"] = r.d;
    j["n"] = r.n;
    j["K"] = r.K;
    j["a"] = r.a;
    j["shell_total"] = r.shell_total.get_str();
    j["small_mass_violations"] = r.small_mass_violations.get_str();
    j["few_ones_violations"] = r.few_ones_violations.get_str();
    j["small_mass_fraction"] = r.small_mass_fraction;
    j["few_ones_fraction"] = r.few_ones_fraction;
    return j;
}

CsvTable to_csv(const ConcentrationReport& r) {
    CsvTable t({"d", "n", "K", "a", "shell_total", "small_mass_violations", "few_ones_violations",
                "small_mass_fraction", "few_ones_fraction"});
    t.add_row({std::to_string(r.d), std::to_string(r.n), std::to_string(r.K), std::to_string(r.a),
               r.shell_total.get_str(), r.small_mass_violations.get_str(), r.few_ones_violations.get_str(),
               format_double(r.small_mass_fraction), format_double(r.few_ones_fraction)});
    return t;
}

Json to_json(const std::vector<EstimateRow>& rows) {
    Json arr = Json::array();
    for (const EstimateRow& r : rows) {
        Json j;
        j["d"] = r.d;
        j["n"] = r.n;
        j["ln_exact"] = r.ln_exact;
        j["ln_estimate"] = r.ln_estimate;
        j["log_ratio"] = r.log_ratio;
        arr.push_back(j);
    }
    return arr;
}

CsvTable to_csv(const std::vector<EstimateRow>& rows) {
    CsvTable t({"d", "n", "ln_exact", "ln_estimate", "log_ratio"});
    for (const EstimateRow& r : rows) {
        t.add_row({std::to_string(r.d), std::to_string(r.n), format_double(r.ln_exact),
                   format_double(r.ln_estimate), format_double(r.log_ratio)});
    }
    return t;
}

Json to_json(const SaddleSolution& s) {
    Json j;
    j["alpha"] = s.alpha;
    j["r"] = s.r;
    j["h"] = s.h_at_r;
    j["h_prime"] = s.hprime_at_r;
    j["beta"] = s.beta;
    j["residual"] = s.residual;
    return j;
}

CsvTable to_csv(const SaddleSolution& s) {
    CsvTable t({"alpha", "r", "h", "h_prime", "beta", "residual"});
    t.add_row({format_double(s.alpha), format_double(s.r), format_double(s.h_at_r),
               format_double(s.hprime_at_r), format_double(s.beta), format_double(s.residual)});
    return t;
}

Json to_json(const BoundReport& r) {
    Json j;
    j["suite"] = to_string(r.suite);
    j["samples"] = r.samples;
    j["violations"] = r.violations;
    if (r.explicit_constant) j["worst_ratio"] = r.worst_ratio;
    else j["worst_ratio"] = nullptr;
    j["fitted_constant"] = r.fitted_constant;
    j["seed"] = r.seed;
    if (!r.fitted_by_K.empty()) {
        Json byk;
        for (const auto& [K, c] : r.fitted_by_K) byk[std::to_string(K)] = c;
        j["fitted_by_K"] = byk;
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

CsvTable to_csv(const BoundReport& r) {
    CsvTable t({"suite", "samples", "violations", "worst_ratio", "fitted_constant", "seed"});
    t.add_row({to_string(r.suite), std::to_string(r.samples), std::to_string(r.violations),
               r.explicit_constant ? format_double(r.worst_ratio) : "", format_double(r.fitted_constant),
               std::to_string(r.seed)});
    return t;
}

Json to_json(const NormRatioReport& r) {
    Json j;
    j["family"] = r.family;
    j["d"] = r.d;
    j["M"] = r.M;
    j["trials"] = r.trials;
    j["max_ratio"] = r.max_ratio;
    j["mean_ratio"] = r.mean_ratio;
    j["seed"] = r.seed;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

CsvTable to_csv(const std::vector<NormRatioReport>& rows) {
    CsvTable t({"family", "d", "M", "trials", "max_ratio", "mean_ratio", "seed"});
    for (const NormRatioReport& r : rows) {
        t.add_row({r.family, std::to_string(r.d), std::to_string(r.M), std::to_string(r.trials),
                   format_double(r.max_ratio), format_double(r.mean_ratio), std::to_string(r.seed)});
    }
    return t;
}

Json to_json(const RMReport& r) {
    Json j;
    j["K"] = r.K;
    j["s"] = r.s;
    j["m"] = r.m;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["lhs"] = r.worst_lhs;
    j["rhs"] = r.worst_rhs;
    j["fitted_constant"] = r.fitted_constant;
    return j;
}

CsvTable to_csv(const RMReport& r) {
    CsvTable t({"K", "s", "m", "trials", "seed", "lhs", "rhs", "fitted_constant"});
    t.add_row({std::to_string(r.K), join(r.s), join(r.m), std::to_string(r.trials), std::to_string(r.seed),
               format_double(r.worst_lhs), format_double(r.worst_rhs), format_double(r.fitted_constant)});
    return t;
}

} // namespace dfmax
