#ifndef EDGEREG_VERIFIER_HPP
#define EDGEREG_VERIFIER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "edgereg/graph.hpp"
#include "edgereg/homology.hpp"
#include "edgereg/report.hpp"

namespace edgereg {

/// Shared knobs. Instances run on `workers` threads and are merged by index,
/// so reports do not depend on the worker count. A nonzero max_seconds or
/// max_instances turns the remaining instances into skipped rows.
struct CampaignOptions {
    EngineOptions engine;
    unsigned workers = 1;
    std::size_t max_instances = 0;
    double max_seconds = 0.0;
};

struct PathFormulaParams {
    int n_max = 16;
    int d_max = 6;
    int homology_n_max = 13;  // forced-Hochster arm
    int homology_d_max = 5;
    bool second_field = true;
};
VerificationReport verify_path_formula(const PathFormulaParams& p = {}, const CampaignOptions& o = {});

struct CycleTheoremParams {
    int n_min = 3;
    int n_max = 14;
    int d_min = 1;
    int d_max = 5;
    /// The lcm-lattice arm runs when the ideal has at most this many generators.
    int lcm_generator_cap = 16;
};
VerificationReport verify_cycle_theorem(const CycleTheoremParams& p = {}, const CampaignOptions& o = {});

struct ForestParams {
    int trials = 200;
    int n_max = 12;
    std::uint64_t seed = 1;
    bool hochster_cross_check = true;
};
VerificationReport verify_forest_theorem(const ForestParams& p = {}, const CampaignOptions& o = {});

struct ImMonotoneParams {
    int trials = 300;
    int n_max = 12;
    int d_max = 4;
    std::uint64_t seed = 1;
    std::vector<int> percents{20, 40};
};
VerificationReport verify_im_monotone(const ImMonotoneParams& p = {}, const CampaignOptions& o = {});

/// reg(R/I(g^d)) for d = 1..d_max must weakly decrease. d_max = 0 means
/// diameter + 1 (largest finite distance + 1).
VerificationReport verify_conjecture(const Graph& g, int d_max, const std::string& label,
                                     const CampaignOptions& o = {});

struct ConjectureFamilyParams {
    std::string family = "tree";  // tree, forest, block, random, cycle, path
    int trials = 200;
    int n_min = 2;
    int n_max = 12;
    int d_max = 0;
    int percent = 30;  // random family only
    std::uint64_t seed = 1;
};
VerificationReport verify_conjecture_family(const ConjectureFamilyParams& p, const CampaignOptions& o = {});

/// Identities and regularity lemmas for C_n^d with n = k(d+2) + d + 1.
/// Rows are informational when d = 1.
VerificationReport verify_critical_case(int d, int k, const CampaignOptions& o = {});

/// Intermediate graphs and ideals of the critical-case and vertex-dropping
/// arguments, rebuilt and checked step by step.
VerificationReport verify_reduction_sequences(int d, int k, const CampaignOptions& o = {});

struct IdealLemmaParams {
    int identity_trials = 1000;
    int regularity_trials = 200;
    int max_variables = 9;
    int max_generators = 7;
    std::uint64_t seed = 1;
};
VerificationReport verify_ideal_lemmas(const IdealLemmaParams& p = {}, const CampaignOptions& o = {});

struct EngineConsistencyParams {
    int trials = 100;
    int invariance_trials = 50;
    int max_variables = 9;
    int max_generators = 8;
    std::uint64_t seed = 1;
};
VerificationReport verify_engine_consistency(const EngineConsistencyParams& p = {}, const CampaignOptions& o = {});

VerificationReport verify_sunflower_example(const CampaignOptions& o = {});

/// Seed for instance `index` of a campaign seeded with `seed`.
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace edgereg

#endif
