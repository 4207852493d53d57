#ifndef EDGEREG_VERIFY_COMMON_HPP
#define EDGEREG_VERIFY_COMMON_HPP

#include <atomic>
#include <chrono>
#include <exception>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "edgereg/ideal.hpp"
#include "edgereg/invariants.hpp"
#include "edgereg/verifier.hpp"

namespace edgereg::detail {

using Rows = std::vector<InstanceResult>;

inline InstanceResult make_row(std::string instance, std::string check, std::string expected, std::string computed,
                               Provenance prov, std::string method, bool agree, bool gating = true,
                               std::string note = {}) {
    InstanceResult r;
    r.instance = std::move(instance);
    r.check = std::move(check);
    r.expected = std::move(expected);
    r.computed = std::move(computed);
    r.provenance = prov;
    r.method = std::move(method);
    r.agree = agree;
    r.gating = gating;
    r.note = std::move(note);
    return r;
}

inline InstanceResult skipped_row(std::string instance, std::string check, std::string why) {
    InstanceResult r;
    r.instance = std::move(instance);
    r.check = std::move(check);
    r.computed = "skipped";
    r.skipped = true;
    r.note = std::move(why);
    return r;
}

template <class T>
std::string join(const std::vector<T>& xs, const char* open = "(", const char* close = ")") {
    std::ostringstream out;
    out << open;
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
    out << close;
    return out.str();
}

inline std::string format_matching(const Matching& m) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < m.edges.size(); ++i)
        out << (i ? "," : "") << '{' << m.edges[i].first << ',' << m.edges[i].second << '}';
    out << ']';
    return out.str();
}

/// Generators on one side only, e.g. "missing {3,8,10}; extra {}".
std::string ideal_difference(const MonomialIdeal& expected, const MonomialIdeal& computed);

inline EngineOptions worker_engine(const CampaignOptions& o) {
    EngineOptions e = o.engine;
    if (o.workers > 1) e.threads = 1;
    return e;
}

/// Evaluates fn(i) for i in [0, count) on o.workers threads; rows are
/// concatenated in index order. Capacity errors become skipped rows and any
/// other exception becomes a failing row.
template <class Fn>
Rows run_indexed(std::size_t count, const CampaignOptions& o, const std::string& campaign, Fn fn) {
    std::vector<Rows> out(count);
    const auto start = std::chrono::steady_clock::now();
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            const std::string label = campaign + "#" + std::to_string(i);
            const double elapsed =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if ((o.max_instances && i >= o.max_instances) || (o.max_seconds > 0 && elapsed > o.max_seconds)) {
                out[i] = {skipped_row(label, "instance", "budget exhausted")};
                continue;
            }
            try {
                out[i] = fn(i);
            } catch (const CapacityError& e) {
                out[i] = {skipped_row(label, "instance", e.what())};
            } catch (const std::exception& e) {
                out[i] = {make_row(label, "evaluation", "completes", std::string("error: ") + e.what(),
                                   Provenance::DerivedOracle, "", false)};
            }
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(o.workers, static_cast<unsigned>(count)));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    Rows rows;
    for (auto& r : out) rows.insert(rows.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    return rows;
}

/// Report with rows and elapsed time filled in.
template <class Fn>
VerificationReport finish(VerificationReport report, std::size_t count, const CampaignOptions& o, Fn fn) {
    const auto start = std::chrono::steady_clock::now();
    for (auto& r : run_indexed(count, o, report.campaign(), fn)) report.add(std::move(r));
    report.set_elapsed_seconds(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    return report;
}

int hochster_regularity(const Graph& g, const EngineOptions& e);

}  // namespace edgereg::detail

#endif
