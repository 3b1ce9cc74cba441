#include "qzeta/report.hpp"

#include <algorithm>
#include <sstream>

namespace qzeta {

void VerificationReport::finalize() {
    pass = !witnesses.empty() &&
           std::all_of(witnesses.begin(), witnesses.end(), [](const Witness& w) { return w.ok; });
}

Json to_json(const VerificationReport& r) {
    Json out = Json::object();
    out["identity"] = r.identity;
    Json params = Json::object();
    for (const auto& [k, v] : r.params)
        params[k] = v;
    out["params"] = params;
    Json levels = Json::array();
    for (const auto& l : r.levels) {
        Json e = Json::object();
        e["N"] = l.level;
        e["valuation"] = l.valuation;
        if (l.at_precision)
            e["at_precision"] = true;
        levels.push_back(e);
    }
    out["levels"] = levels;
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) {
        Json e = Json::object();
        e["case"] = w.label;
        switch (w.kind) {
        case DiscrepancyKind::exact:
            e["kind"] = "exact";
            e["discrepancy"] = w.exact.is_null() ? Json("0") : w.exact;
            break;
        case DiscrepancyKind::numeric:
            e["kind"] = "numeric";
            e["error"] = w.error;
            e["tolerance"] = w.tolerance;
            break;
        case DiscrepancyKind::valuation:
            e["kind"] = "valuation";
            e["valuation"] = w.valuation;
            if (w.at_precision)
                e["at_precision"] = true;
            e["required"] = static_cast<long>(w.tolerance);
            break;
        }
        e["ok"] = w.ok;
        witnesses.push_back(e);
    }
    out["witnesses"] = witnesses;
    out["pass"] = r.pass;
    return out;
}

std::string render_text(const VerificationReport& r) {
    std::ostringstream os;
    os << r.identity << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& [k, v] : r.params)
        os << "  " << k << " = " << v << "\n";
    for (const auto& l : r.levels)
        os << "  N=" << l.level << "  valuation " << (l.at_precision ? ">= " : "") << l.valuation << "\n";
    for (const auto& w : r.witnesses) {
        os << "  [" << (w.ok ? "ok" : "FAIL") << "] " << w.label << ": ";
        switch (w.kind) {
        case DiscrepancyKind::exact:
            os << (w.exact.is_null() ? std::string("exactly zero") : w.exact.dump());
            break;
        case DiscrepancyKind::numeric:
            os << "error " << w.error << " (tol " << w.tolerance << ")";
            break;
        case DiscrepancyKind::valuation:
            os << "valuation " << (w.at_precision ? ">= " : "") << w.valuation << " (need "
               << static_cast<long>(w.tolerance) << ")";
            break;
        }
        os << "\n";
    }
    return os.str();
}

} // namespace qzeta
