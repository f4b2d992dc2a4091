#include "curvlab/serialize.hpp"

namespace curvlab {

Json to_json(const DensityReport& report) {
    Json j;
    j["group"] = "Heis";
    j["radius"] = report.radius;
    j["max_length"] = report.max_length;
    j["elements"] = report.elements;
    j["signs"] = Json{{"positive", report.sign_counts[0]},
                      {"zero", report.sign_counts[1]},
                      {"negative", report.sign_counts[2]}};
    j["predictions"] = Json{{"positive", report.prediction_counts[0]},
                            {"zero", report.prediction_counts[1]},
                            {"negative", report.prediction_counts[2]},
                            {"mixed", report.prediction_counts[3]}};
    j["prediction_mismatches"] = report.prediction_mismatches;
    Json bands = Json::array();
    for (const auto& b : report.bands) {
        bands.push_back(Json{{"A", b.A},
                             {"B", b.B},
                             {"closed", {{"X", b.closed_x}, {"Y", b.closed_y}, {"Z", b.closed_z}}},
                             {"exact", {{"X", b.exact_x}, {"Y", b.exact_y}, {"Z", b.exact_z}, {"mixed", b.exact_mixed}}},
                             {"boundary", b.boundary}});
    }
    j["bands"] = std::move(bands);
    return j;
}

void write_csv(std::ostream& out, const DensityReport& report) {
    out << "A,B,C,s";
    for (int t = 1; t <= report.radius; ++t) out << ",case_t" << t;
    out << ",predicted,kappa\n";
    for (const auto& row : report.rows) {
        out << row.g.a << ',' << row.g.b << ',' << row.g.c << ',' << row.s;
        for (auto label : row.cases) out << ',' << to_string(label);
        out << ',' << to_string(row.predicted) << ',' << to_string(row.kappa) << '\n';
    }
}

}  // namespace curvlab
