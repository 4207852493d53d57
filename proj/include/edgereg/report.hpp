#ifndef EDGEREG_REPORT_HPP
#define EDGEREG_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace edgereg {

/// Where an expected value comes from.
enum class Provenance {
    PaperFormula,   // a closed formula evaluated at the instance
    PaperClaim,     // a stated equality, inequality or structural fact
    DerivedOracle,  // an independent computation (second engine path, brute force)
};
std::string to_string(Provenance p);

struct InstanceResult {
    std::string instance;  // e.g. "C_11^2"
    std::string check;     // what is compared, e.g. "reg(R/I) hochster vs formula"
    std::string expected;
    std::string computed;
    Provenance provenance = Provenance::PaperClaim;
    std::string method;
    bool agree = false;
    bool skipped = false;
    /// Non-gating rows are recorded but never fail a campaign.
    bool gating = true;
    std::string note;
};

class VerificationReport {
public:
    VerificationReport() = default;
    VerificationReport(std::string campaign, std::uint64_t seed) : campaign_(std::move(campaign)), seed_(seed) {}

    const std::string& campaign() const { return campaign_; }
    std::uint64_t seed() const { return seed_; }
    void set_parameter(const std::string& key, const std::string& value);
    const std::vector<std::pair<std::string, std::string>>& parameters() const { return parameters_; }

    void add(InstanceResult r) { instances_.push_back(std::move(r)); }
    void append(const VerificationReport& other);
    const std::vector<InstanceResult>& instances() const { return instances_; }

    /// Indices of computed rows that disagree (gating or not).
    std::vector<std::size_t> discrepancies() const;
    std::vector<std::size_t> gating_failures() const;
    std::size_t skipped_count() const;
    bool passed() const { return gating_failures().empty(); }

    void set_elapsed_seconds(double s) { elapsed_ = s; }
    double elapsed_seconds() const { return elapsed_; }

    /// Deterministic unless include_timing is set.
    std::string to_json(bool include_timing = false) const;
    std::string to_table() const;

private:
    std::string campaign_;
    std::uint64_t seed_ = 0;
    std::vector<std::pair<std::string, std::string>> parameters_;
    std::vector<InstanceResult> instances_;
    double elapsed_ = 0.0;
};

}  // namespace edgereg

#endif
