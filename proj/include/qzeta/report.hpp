#pragma once

#include "qzeta/json_io.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qzeta {

enum class DiscrepancyKind { exact, numeric, valuation };

struct Witness {
    std::string label;
    DiscrepancyKind kind = DiscrepancyKind::exact;
    Json exact;              // exact discrepancy (LogScalar JSON); null when zero
    double error = 0.0;      // numeric discrepancy
    long valuation = 0;      // p-adic valuation of the discrepancy
    bool at_precision = false; // discrepancy vanished to working precision; valuation is a lower bound
    double tolerance = 0.0;  // numeric bound, or required valuation
    bool ok = false;
};

struct LevelValuation {
    int level = 0;
    long valuation = 0;
    bool at_precision = false;
};

struct VerificationReport {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<LevelValuation> levels;
    std::vector<Witness> witnesses;
    bool pass = false;

    void add_param(std::string key, std::string value) { params.emplace_back(std::move(key), std::move(value)); }
    // pass = every witness ok (and at least one witness)
    void finalize();
};

Json to_json(const VerificationReport& r);
std::string render_text(const VerificationReport& r);

} // namespace qzeta
