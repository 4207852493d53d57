// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria (capped at 125).
#include <algorithm>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "edgereg/homology.hpp"
#include "edgereg/invariants.hpp"
#include "edgereg/verifier.hpp"

using namespace edgereg;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o) {
    if (!o.pass) ++failures;
    std::cout << "criterion " << std::setw(2) << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title;
    if (!o.detail.empty()) std::cout << "  [" << o.detail << "]";
    std::cout << std::endl;
}

// Failing gating rows, optionally restricted by a predicate on the check.
std::vector<const InstanceResult*> gating_failures(const VerificationReport& r,
                                                   const std::function<bool(const InstanceResult&)>& keep = {}) {
    std::vector<const InstanceResult*> out;
    for (std::size_t i : r.gating_failures())
        if (!keep || keep(r.instances()[i])) out.push_back(&r.instances()[i]);
    return out;
}

std::string describe(const std::vector<const InstanceResult*>& rows, std::size_t limit = 3) {
    std::ostringstream s;
    s << rows.size() << " failing";
    for (std::size_t i = 0; i < rows.size() && i < limit; ++i)
        s << "; " << rows[i]->instance << " " << rows[i]->check << ": " << rows[i]->computed;
    return s.str();
}

Outcome from_report(const VerificationReport& r) {
    const auto bad = gating_failures(r);
    return {bad.empty(), bad.empty() ? std::to_string(r.instances().size()) + " rows" : describe(bad)};
}

bool has(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

// Independent oracle for criterion 10: Hochster's formula with a dense
// rank computation modulo a large prime, written separately from the engine.
std::map<std::pair<int, int>, long long> brute_force_betti_cycle(int n) {
    const long long p = 1000000007LL;
    auto adjacent = [n](int a, int b) { return (a + 1) % n == b || (b + 1) % n == a; };
    auto independent = [&](unsigned s) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if ((s >> a & 1) && (s >> b & 1) && adjacent(a, b)) return false;
        return true;
    };
    auto rank_mod = [p](std::vector<std::vector<long long>> m) {
        int r = 0;
        const int rows = static_cast<int>(m.size());
        const int cols = rows ? static_cast<int>(m[0].size()) : 0;
        for (int c = 0; c < cols && r < rows; ++c) {
            int piv = -1;
            for (int i = r; i < rows; ++i)
                if (m[i][c] % p) piv = i;
            if (piv < 0) continue;
            std::swap(m[r], m[piv]);
            long long inv = 1, base = ((m[r][c] % p) + p) % p;
            for (long long e = p - 2; e; e >>= 1, base = base * base % p)
                if (e & 1) inv = inv * base % p;
            for (int i = 0; i < rows; ++i) {
                if (i == r || m[i][c] % p == 0) continue;
                const long long f = (m[i][c] % p + p) % p * inv % p;
                for (int j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
            }
            ++r;
        }
        return r;
    };
    std::map<std::pair<int, int>, long long> betti;
    for (unsigned w = 0; w < (1u << n); ++w) {
        // faces of the independence complex restricted to w, by size
        std::vector<std::vector<unsigned>> faces(static_cast<std::size_t>(n) + 2);
        for (unsigned s = w;; s = (s - 1) & w) {
            if (independent(s)) faces[static_cast<std::size_t>(__builtin_popcount(s))].push_back(s);
            if (s == 0) break;
        }
        for (auto& f : faces) std::sort(f.begin(), f.end());
        std::vector<long long> ranks(faces.size() + 1, 0);
        for (std::size_t c = 1; c < faces.size(); ++c) {
            if (faces[c].empty() || faces[c - 1].empty()) continue;
            std::vector<std::vector<long long>> m(faces[c].size(), std::vector<long long>(faces[c - 1].size(), 0));
            for (std::size_t i = 0; i < faces[c].size(); ++i) {
                long long sign = 1;
                for (int v = 0; v < n; ++v)
                    if (faces[c][i] >> v & 1) {
                        const unsigned side = faces[c][i] & ~(1u << v);
                        const auto it = std::lower_bound(faces[c - 1].begin(), faces[c - 1].end(), side);
                        m[i][static_cast<std::size_t>(it - faces[c - 1].begin())] = sign;
                        sign = -sign;
                    }
            }
            ranks[c] = rank_mod(m);
        }
        const int j = __builtin_popcount(w);
        for (std::size_t c = 0; c < faces.size(); ++c) {
            const long long h = static_cast<long long>(faces[c].size()) - ranks[c] - ranks[c + 1];
            const int t = static_cast<int>(c) - 1;
            if (h > 0) betti[{j - t - 1, j}] += h;
        }
    }
    return betti;
}

}  // namespace

int main() {
    CampaignOptions opts;

    const VerificationReport path_report = verify_path_formula({});
    report(1, "path-power formula: im search (n<=16, d<=6) and forced Hochster (n<=13, d<=5)", from_report(path_report));

    const VerificationReport cycle_report = verify_cycle_theorem({});
    {
        Outcome o = from_report(cycle_report);
        // d = 1 needs Q, GF2 and lcm rows all present and agreeing.
        int three_way = 0;
        for (const auto& r : cycle_report.instances())
            if (r.instance.ends_with("^1") && r.check == "betti table lcm vs hochster" &&
                !r.skipped && r.agree)
                ++three_way;
        if (three_way != 12) {
            o.pass = false;
            o.detail += "; d=1 lcm agreement on " + std::to_string(three_way) + "/12";
        }
        int info = 0;
        for (std::size_t i : cycle_report.discrepancies())
            if (!cycle_report.instances()[i].gating) ++info;
        o.detail += "; " + std::to_string(info) + " informational d=1 formula mismatches recorded";
        report(2, "cycle theorem: forced Hochster = closed form for 3<=n<=14, 2<=d<=5; d=1 three-way engine agreement",
               o);
    }

    ForestParams fp;
    fp.trials = 200;
    fp.n_max = 12;
    fp.seed = 1;
    report(3, "forest theorem: 200 random forests, powers chordal and reg weakly decreasing",
           from_report(verify_forest_theorem(fp)));

    ImMonotoneParams ip;
    ip.trials = 300;
    ip.n_max = 12;
    ip.d_max = 4;
    ip.seed = 1;
    const VerificationReport im_report = verify_im_monotone(ip);
    {
        Outcome o = from_report(im_report);
        const auto lemma = gating_failures(im_report, [](const InstanceResult& r) {
            return r.check == "distance witness lemma";
        });
        o.detail += "; witness-disjointness lemma failures: " + std::to_string(lemma.size());
        report(4, "im monotonicity on 300 random graphs, d=1..4, with distance-witness lemma", o);
    }

    report(5, "sunflower example: im=3, reg=3, chordal, square not chordal, reg of square=2",
           from_report(verify_sunflower_example()));

    {
        const VerificationReport a = verify_critical_case(2, 2);
        const VerificationReport b = verify_critical_case(3, 2);
        const VerificationReport c = verify_critical_case(1, 2);
        auto bad = gating_failures(a);
        const auto more = gating_failures(b);
        bad.insert(bad.end(), more.begin(), more.end());
        Outcome o{bad.empty(), describe(bad, 2)};
        o.detail += "; (d,k)=(1,2) informational discrepancies: " + std::to_string(c.discrepancies().size());
        report(6, "critical decomposition identities and regularity lemmas at (2,2) and (3,2)", o);
    }

    {
        const VerificationReport r = verify_reduction_sequences(2, 2);
        // The criterion covers G_d, G_{i-1}\N[i], chordality and im of F and T,
        // and the L-sequence base identity.
        const auto bad = gating_failures(r, [](const InstanceResult& row) {
            const bool f_or_t = has(row.instance, " F_") || has(row.instance, " T");
            return has(row.check, "G_d = P_") || has(row.check, "G \\ N[") ||
                   (f_or_t && (row.check == "chordal" || row.check == "im <= k-1")) ||
                   row.check == "L_{2d-1} = x_n*I(G \\ N[{1,n}])";
        });
        report(7, "reduction sequences at (2,2): G_d, G_{i-1}\\N[i], F and T, L base case", {bad.empty(), describe(bad)});
    }

    report(8, "ideal lemmas: 1000 identity instances, 200 per regularity inequality",
           from_report(verify_ideal_lemmas({})));

    {
        const std::uint64_t before = euler_checks_performed();
        const VerificationReport e = verify_engine_consistency({});
        Outcome o = from_report(e);
        std::size_t field_rows = 0;
        std::vector<const InstanceResult*> field_bad;
        for (const auto* rep : {&path_report, &cycle_report})
            for (const auto& r : rep->instances())
                if (r.check == "betti table GF2 vs Q") {
                    ++field_rows;
                    if (!r.agree) field_bad.push_back(&r);
                }
        if (!field_bad.empty()) o.pass = false;
        o.detail += "; Q vs GF2 rows " + std::to_string(field_rows) + ", mismatches " +
                    std::to_string(field_bad.size()) + "; Euler checks " +
                    std::to_string(euler_checks_performed() - before);
        report(9, "engine self-consistency: Hochster vs lcm, Q vs GF2, irrelevant variables, Euler identity", o);
    }

    {
        const BettiTable t = betti_table_hochster(edge_ideal(cycle(5)));
        const auto oracle = brute_force_betti_cycle(5);
        const std::map<std::pair<int, int>, long long> expected{{{0, 0}, 1}, {{1, 2}, 5}, {{2, 3}, 5}, {{3, 5}, 1}};
        const bool ok = t.entries() == expected && oracle == expected && t.regularity() == 2;
        std::ostringstream d;
        d << "engine";
        for (const auto& [ij, b] : t.entries()) d << " (" << ij.first << "," << ij.second << "," << b << ")";
        d << ", reg " << t.regularity();
        report(10, "Betti table of R/I(C5)", {ok, d.str()});
    }

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return std::min(failures, 125);
}
