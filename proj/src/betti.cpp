#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <thread>

#include "edgereg/homology.hpp"
#include "homology_internal.hpp"

namespace edgereg {

namespace {

void require_proper(const MonomialIdeal& a) {
    if (a.is_unit()) throw std::invalid_argument("Betti tables of R/I need a proper ideal; got the unit ideal");
}

// Runs body(begin, end, local_table) over [0, count) split into contiguous
// chunks and sums the partial tables.
template <class Body>
BettiTable fan_out(std::size_t count, const EngineOptions& options, Body body) {
    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(count / 64 + 1)));
    std::vector<BettiTable> partial(workers, BettiTable(options.field));
    if (workers == 1) {
        body(std::size_t{0}, count, partial[0]);
    } else {
        std::vector<std::jthread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = count * w / workers;
            const std::size_t end = count * (w + 1) / workers;
            pool.emplace_back([&, w, begin, end] {
                try {
                    body(begin, end, partial[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        pool.clear();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    BettiTable total(options.field);
    for (const auto& p : partial) total += p;
    return total;
}

}  // namespace

BettiTable betti_table_hochster(const MonomialIdeal& a, const EngineOptions& options) {
    require_proper(a);
    const VertexSet supp = support(a);
    if (supp.size() > kMaxHochsterSupport)
        throw CapacityError("Hochster sum supports at most " + std::to_string(kMaxHochsterSupport) +
                            " support variables, got " + std::to_string(supp.size()));
    const SimplicialComplex delta = stanley_reisner_complex(a);

    // Every W ⊆ supp, the empty set included (it contributes beta_{0,0}).
    std::vector<VertexSet> subsets;
    subsets.reserve(std::size_t{1} << supp.size());
    const std::uint64_t s = supp.mask();
    for (std::uint64_t w = s;; w = (w - 1) & s) {
        subsets.push_back(VertexSet::from_mask(w));
        if (w == 0) break;
    }
    std::sort(subsets.begin(), subsets.end());

    return fan_out(subsets.size(), options, [&](std::size_t begin, std::size_t end, BettiTable& table) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            const VertexSet w = subsets[idx];
            const SimplicialComplex part = restrict(delta, w);
            if (part.cone_point() != 0) continue;
            const HomologyRanks h = reduced_homology(part, options.field);
            const int j = w.size();
            for (int t = -1; t <= h.max_degree(); ++t)
                if (const long long r = h.at(t)) table.add(j - t - 1, j, r);
        }
    });
}

BettiTable betti_table_lcm_lattice(const MonomialIdeal& a, const EngineOptions& options) {
    require_proper(a);
    const auto& gens = a.generators();
    const int g = static_cast<int>(gens.size());
    if (g > kMaxLcmGenerators)
        throw CapacityError("lcm-lattice route supports at most " + std::to_string(kMaxLcmGenerators) +
                            " generators, got " + std::to_string(g));

    BettiTable table(options.field);
    table.add(0, 0, 1);
    if (g == 0) return table;

    // lcm of every subset of generators, indexed by the subset bitmask.
    const std::uint32_t full = g == 32 ? ~0u : (1u << g) - 1;
    std::vector<std::uint64_t> lcm(std::size_t{full} + 1, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        const int low = std::countr_zero(s);
        lcm[s] = lcm[s & (s - 1)] | gens[static_cast<std::size_t>(low)].mask();
    }
    std::map<std::uint64_t, std::vector<std::uint32_t>> by_lcm;
    for (std::uint32_t s = 1; s <= full; ++s) by_lcm[lcm[s]].push_back(s);

    std::vector<std::pair<std::uint64_t, const std::vector<std::uint32_t>*>> lattice;
    for (const auto& [m, sets] : by_lcm) lattice.emplace_back(m, &sets);

    // For m in the lattice, the open interval (0, m) is homotopy equivalent to
    // its atom crosscut Gamma_m = { S ⊆ atoms(m) : lcm(S) != m }. Its Alexander
    // dual on the t atoms below m has faces atoms(m) \ S with lcm(S) = m, and
    // H~_{i-2}(Gamma_m) = H~_{t-i-1}(dual).
    const BettiTable body_table =
        fan_out(lattice.size(), options, [&](std::size_t begin, std::size_t end, BettiTable& local) {
            for (std::size_t idx = begin; idx < end; ++idx) {
                const std::uint64_t m = lattice[idx].first;
                const auto& sets = *lattice[idx].second;
                std::uint32_t atoms = 0;
                for (int i = 0; i < g; ++i)
                    if ((gens[static_cast<std::size_t>(i)].mask() & ~m) == 0) atoms |= 1u << i;
                const int t = std::popcount(atoms);

                // Reindex atoms to 1..t.
                auto compress = [atoms](std::uint32_t subset) {
                    std::uint64_t out = 0;
                    int pos = 0;
                    for (std::uint32_t rest = atoms; rest; rest &= rest - 1, ++pos)
                        if (subset & (rest & -rest)) out |= std::uint64_t{1} << pos;
                    return VertexSet::from_mask(out);
                };
                std::vector<std::vector<VertexSet>> faces(static_cast<std::size_t>(t) + 1);
                std::size_t used = 0;
                for (std::uint32_t s : sets) {
                    const VertexSet face = compress(atoms & ~s);
                    faces[static_cast<std::size_t>(face.size())].push_back(face);
                    used = std::max(used, static_cast<std::size_t>(face.size()) + 1);
                }
                faces.resize(used);
                for (auto& group : faces) std::sort(group.begin(), group.end());

                const HomologyRanks h = detail::homology_from_faces(t, faces, options.field);
                const int degree = std::popcount(m);
                for (int e = -1; e <= h.max_degree(); ++e)
                    if (const long long r = h.at(e)) local.add(t - 1 - e, degree, r);
            }
        });
    table += body_table;
    return table;
}

int regularity(const MonomialIdeal& a, const EngineOptions& options) {
    require_proper(a);
    if (a.is_zero()) return 0;
    return betti_table_hochster(a, options).regularity();
}

int ideal_regularity(const MonomialIdeal& a, const EngineOptions& options) {
    if (a.is_zero()) throw std::invalid_argument("reg(I) is undefined for the zero ideal");
    return regularity(a, options) + 1;
}

}  // namespace edgereg
