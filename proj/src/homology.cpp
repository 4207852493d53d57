#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "edgereg/homology.hpp"
#include "homology_internal.hpp"

namespace edgereg {

long long HomologyRanks::at(int t) const {
    if (t < -1 || t + 1 >= static_cast<int>(ranks_.size())) return 0;
    return ranks_[static_cast<std::size_t>(t + 1)];
}

void HomologyRanks::set(int t, long long rank) {
    if (t < -1 || t + 1 >= static_cast<int>(ranks_.size())) throw std::out_of_range("homology degree out of range");
    ranks_[static_cast<std::size_t>(t + 1)] = rank;
}

bool HomologyRanks::all_zero() const {
    return std::all_of(ranks_.begin(), ranks_.end(), [](long long r) { return r == 0; });
}

namespace {
std::atomic<std::uint64_t> euler_checks{0};
}  // namespace

std::uint64_t euler_checks_performed() { return euler_checks.load(std::memory_order_relaxed); }

namespace detail {

SparseMatrix boundary_matrix(const std::vector<VertexSet>& faces, const std::vector<VertexSet>& facets_below) {
    SparseMatrix m(static_cast<int>(faces.size()), static_cast<int>(facets_below.size()));
    for (std::size_t r = 0; r < faces.size(); ++r) {
        auto& row = m.data[r];
        std::int64_t sign = 1;
        for (int v : faces[r]) {
            const VertexSet side = faces[r] - VertexSet::of({v});
            auto it = std::lower_bound(facets_below.begin(), facets_below.end(), side);
            if (it == facets_below.end() || *it != side) throw std::logic_error("face set is not downward closed");
            row.emplace_back(static_cast<int>(it - facets_below.begin()), sign);
            sign = -sign;
        }
        std::sort(row.begin(), row.end());
    }
    return m;
}

HomologyRanks homology_from_faces(int ground, const std::vector<std::vector<VertexSet>>& faces, Field field) {
    HomologyRanks out(ground, field);
    if (faces.empty()) return out;  // void complex

    // ranks[c] = rank of the boundary from faces with c vertices to c-1.
    std::vector<long long> ranks(faces.size() + 1, 0);
    for (std::size_t c = 1; c < faces.size(); ++c)
        ranks[c] = static_cast<long long>(rank(boundary_matrix(faces[c], faces[c - 1]), field));

    long long euler_faces = 0;
    long long euler_homology = 0;
    for (std::size_t c = 0; c < faces.size(); ++c) {
        const int t = static_cast<int>(c) - 1;
        const long long chains = static_cast<long long>(faces[c].size());
        const long long h = chains - ranks[c] - ranks[c + 1];
        if (h < 0) throw std::logic_error("negative homology rank: boundary ranks are inconsistent");
        out.set(t, h);
        const long long sign = (t % 2 == 0) ? 1 : -1;
        euler_faces += sign * chains;
        euler_homology += sign * h;
    }
    if (euler_faces != euler_homology) throw std::logic_error("Euler characteristic mismatch in homology computation");
    euler_checks.fetch_add(1, std::memory_order_relaxed);
    return out;
}

}  // namespace detail

HomologyRanks reduced_homology(const SimplicialComplex& c, Field field) {
    if (c.vertices().size() > kMaxHomologyVertices)
        throw CapacityError("reduced_homology supports at most " + std::to_string(kMaxHomologyVertices) +
                            " vertices, got " + std::to_string(c.vertices().size()));
    if (c.is_void()) return HomologyRanks(c.ground(), field);
    if (c.cone_point() != 0) return HomologyRanks(c.ground(), field);
    return detail::homology_from_faces(c.ground(), c.faces_by_size(), field);
}

long long BettiTable::at(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, long long value) {
    if (value < 0) throw std::invalid_argument("Betti numbers are nonnegative");
    if (value == 0) return;
    entries_[{i, j}] += value;
}

int BettiTable::regularity() const {
    int reg = 0;
    for (const auto& [key, value] : entries_)
        if (value != 0) reg = std::max(reg, key.second - key.first);
    return reg;
}

int BettiTable::projective_dimension() const {
    int pd = 0;
    for (const auto& [key, value] : entries_)
        if (value != 0) pd = std::max(pd, key.first);
    return pd;
}

BettiTable& BettiTable::operator+=(const BettiTable& other) {
    for (const auto& [key, value] : other.entries_) add(key.first, key.second, value);
    return *this;
}

std::string BettiTable::to_json() const {
    nlohmann::ordered_json j;
    j["field"] = field_.name();
    j["entries"] = nlohmann::json::array();
    for (const auto& [key, value] : entries_) j["entries"].push_back({key.first, key.second, value});
    j["reg"] = regularity();
    return j.dump();
}

BettiTable BettiTable::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    BettiTable table(Field::parse(j.at("field").get<std::string>()));
    for (const auto& e : j.at("entries")) table.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<long long>());
    if (j.contains("reg") && j.at("reg").get<int>() != table.regularity())
        throw std::invalid_argument("serialized regularity does not match the entries");
    return table;
}

std::string BettiTable::to_text() const {
    const int pd = projective_dimension();
    const int reg = regularity();
    std::ostringstream out;
    out << "       ";
    for (int i = 0; i <= pd; ++i) out << ' ' << std::setw(5) << i;
    out << '\n';
    out << "total:";
    for (int i = 0; i <= pd; ++i) {
        long long total = 0;
        for (const auto& [key, value] : entries_)
            if (key.first == i) total += value;
        out << ' ' << std::setw(5) << total;
    }
    out << '\n';
    for (int r = 0; r <= reg; ++r) {
        out << std::setw(5) << r << ": ";
        for (int i = 0; i <= pd; ++i) {
            const long long v = at(i, i + r);
            out << ' ' << std::setw(5) << (v == 0 ? std::string(".") : std::to_string(v));
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace edgereg
