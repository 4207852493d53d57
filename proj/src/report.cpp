#include "edgereg/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace edgereg {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::PaperFormula: return "paper-formula";
        case Provenance::PaperClaim: return "paper-claim";
        case Provenance::DerivedOracle: return "derived-oracle";
    }
    return "?";
}

void VerificationReport::set_parameter(const std::string& key, const std::string& value) {
    for (auto& [k, v] : parameters_)
        if (k == key) {
            v = value;
            return;
        }
    parameters_.emplace_back(key, value);
}

void VerificationReport::append(const VerificationReport& other) {
    instances_.insert(instances_.end(), other.instances_.begin(), other.instances_.end());
}

std::vector<std::size_t> VerificationReport::discrepancies() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < instances_.size(); ++i)
        if (!instances_[i].skipped && !instances_[i].agree) out.push_back(i);
    return out;
}

std::vector<std::size_t> VerificationReport::gating_failures() const {
    std::vector<std::size_t> out;
    for (std::size_t i : discrepancies())
        if (instances_[i].gating) out.push_back(i);
    return out;
}

std::size_t VerificationReport::skipped_count() const {
    return static_cast<std::size_t>(
        std::count_if(instances_.begin(), instances_.end(), [](const InstanceResult& r) { return r.skipped; }));
}

std::string VerificationReport::to_json(bool include_timing) const {
    nlohmann::ordered_json j;
    j["campaign"] = campaign_;
    j["seed"] = seed_;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : parameters_) params[k] = v;
    j["parameters"] = params;

    const auto disc = discrepancies();
    const auto gate = gating_failures();
    j["summary"] = {{"instances", instances_.size()},
                    {"discrepancies", disc.size()},
                    {"gating_failures", gate.size()},
                    {"skipped", skipped_count()},
                    {"passed", gate.empty()}};

    j["instances"] = nlohmann::ordered_json::array();
    for (const auto& r : instances_) {
        nlohmann::ordered_json row;
        row["instance"] = r.instance;
        row["check"] = r.check;
        row["expected"] = r.expected;
        row["computed"] = r.computed;
        row["provenance"] = to_string(r.provenance);
        row["method"] = r.method;
        row["agree"] = r.agree;
        row["skipped"] = r.skipped;
        row["gating"] = r.gating;
        if (!r.note.empty()) row["note"] = r.note;
        j["instances"].push_back(std::move(row));
    }
    j["discrepancies"] = disc;
    if (include_timing) j["runtime"] = {{"elapsed_ms", static_cast<long long>(elapsed_ * 1000.0)}};
    return j.dump(2);
}

std::string VerificationReport::to_table() const {
    std::ostringstream out;
    out << "campaign " << campaign_ << "  seed " << seed_ << '\n';
    for (const auto& [k, v] : parameters_) out << "  " << k << " = " << v << '\n';
    std::size_t w_inst = 8, w_check = 5;
    for (const auto& r : instances_) {
        w_inst = std::max(w_inst, r.instance.size());
        w_check = std::max(w_check, r.check.size());
    }
    out << std::left << std::setw(static_cast<int>(w_inst)) << "instance" << "  " << std::setw(static_cast<int>(w_check))
        << "check" << "  status  expected | computed  [method]\n";
    for (const auto& r : instances_) {
        const char* status = r.skipped ? "skip" : r.agree ? "ok" : r.gating ? "FAIL" : "info";
        out << std::left << std::setw(static_cast<int>(w_inst)) << r.instance << "  "
            << std::setw(static_cast<int>(w_check)) << r.check << "  " << std::setw(6) << status << "  " << r.expected
            << " | " << r.computed;
        if (!r.method.empty()) out << "  [" << r.method << ']';
        if (!r.note.empty()) out << "  (" << r.note << ')';
        out << '\n';
    }
    out << "summary: " << instances_.size() << " rows, " << discrepancies().size() << " discrepancies, "
        << gating_failures().size() << " gating failures, " << skipped_count() << " skipped";
    if (elapsed_ > 0) out << ", " << std::fixed << std::setprecision(2) << elapsed_ << " s";
    out << '\n';
    return out.str();
}

}  // namespace edgereg
