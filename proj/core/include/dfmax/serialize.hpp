#pragma once

#include "dfmax/exact_counting.hpp"
#include "dfmax/maximal_sim.hpp"
#include "dfmax/multipliers.hpp"
#include "dfmax/rm_inequality.hpp"
#include "dfmax/saddle_point.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace dfmax {

using Json = nlohmann::ordered_json;

// Minimal CSV table: header row, LF endings, fields quoted only when needed.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);
    void add_row(std::vector<std::string> row);
    void write(std::ostream& os) const;
    std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

std::string format_double(double v);  // shortest round-trip form

struct EstimateRow {
    int d = 0;
    int n = 0;
    double ln_exact = 0.0;
    double ln_estimate = 0.0;
    double log_ratio = 0.0;  // ln_estimate - ln_exact
};

std::vector<EstimateRow> estimate_rows(int d, int nmax);

Json to_json(const CoefficientSeries& series);  // {"d":..,"counts":[..]} with decimal strings
CsvTable counts_csv(const CoefficientSeries& series);

Json to_json(const ConcentrationReport& r);
CsvTable to_csv(const ConcentrationReport& r);

Json to_json(const std::vector<EstimateRow>& rows);
CsvTable to_csv(const std::vector<EstimateRow>& rows);

Json to_json(const SaddleSolution& s);
CsvTable to_csv(const SaddleSolution& s);

Json to_json(const BoundReport& r);
CsvTable to_csv(const BoundReport& r);

Json to_json(const NormRatioReport& r);
CsvTable to_csv(const std::vector<NormRatioReport>& rows);

Json to_json(const RMReport& r);
CsvTable to_csv(const RMReport& r);

} // namespace dfmax
