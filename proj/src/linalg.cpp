#include "edgereg/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace edgereg {

Field Field::prime(std::uint32_t p) {
    if (p < 2 || p >= (1u << 31)) throw std::invalid_argument("field characteristic must be a prime below 2^31");
    for (std::uint32_t q = 2; q * q <= p; ++q)
        if (p % q == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
    return Field(p);
}

Field Field::parse(const std::string& name) {
    if (name == "Q" || name == "QQ") return rationals();
    if (name.size() > 2 && name.substr(0, 2) == "GF") {
        const std::string digits = name.substr(2);
        if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 10)
            return prime(static_cast<std::uint32_t>(std::stoul(digits)));
    }
    throw std::invalid_argument("unknown field '" + name + "' (expected Q or GF<p>)");
}

namespace {

struct Overflow {};

// Arithmetic shims so one elimination routine serves int64 and mpz_class.
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r) || r == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
    return r;
}
inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline bool is_unit(std::int64_t a) { return a == 1 || a == -1; }
inline std::int64_t magnitude(std::int64_t a) { return a < 0 ? -a : a; }

inline mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
inline mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
inline mpz_class gcd_of(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}
inline bool is_unit(const mpz_class& a) { return a == 1 || a == -1; }
inline mpz_class magnitude(const mpz_class& a) { return abs(a); }

template <class Int>
using Row = std::vector<std::pair<int, Int>>;

template <class Int>
const Int* find_entry(const Row<Int>& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const std::pair<int, Int>& e, int c) { return e.first < c; });
    return it != row.end() && it->first == col ? &it->second : nullptr;
}

// a*s - b*r, merged over sorted columns.
template <class Int>
Row<Int> combine(const Int& a, const Row<Int>& s, const Int& b, const Row<Int>& r) {
    Row<Int> out;
    out.reserve(s.size() + r.size());
    std::size_t i = 0, j = 0;
    while (i < s.size() || j < r.size()) {
        if (j == r.size() || (i < s.size() && s[i].first < r[j].first)) {
            out.emplace_back(s[i].first, mul(a, s[i].second));
            ++i;
        } else if (i == s.size() || r[j].first < s[i].first) {
            out.emplace_back(r[j].first, sub(Int(0), mul(b, r[j].second)));
            ++j;
        } else {
            Int v = sub(mul(a, s[i].second), mul(b, r[j].second));
            if (v != 0) out.emplace_back(s[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

template <class Int>
void divide_by_content(Row<Int>& row) {
    Int g(0);
    for (const auto& e : row) {
        g = gcd_of(g, e.second);
        if (is_unit(g)) return;
    }
    if (g > 1)
        for (auto& e : row) e.second /= g;
}

template <class Int>
std::size_t rank_fraction_free(const SparseMatrix& m) {
    std::vector<Row<Int>> rows;
    rows.reserve(m.data.size());
    for (const auto& r : m.data) {
        Row<Int> row;
        for (auto [c, v] : r)
            if (v != 0) row.emplace_back(c, Int(v));
        if (!row.empty()) rows.push_back(std::move(row));
    }

    std::size_t rank = 0;
    while (!rows.empty()) {
        // Pivot: a unit entry in the shortest row that has one; otherwise the
        // smallest-magnitude entry of the shortest row.
        std::size_t best_row = rows.size();
        std::size_t best_idx = 0;
        bool best_unit = false;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& row = rows[i];
            std::size_t unit_idx = row.size();
            for (std::size_t k = 0; k < row.size(); ++k)
                if (is_unit(row[k].second)) {
                    unit_idx = k;
                    break;
                }
            const bool unit = unit_idx != row.size();
            if (best_row == rows.size() || (unit && !best_unit) ||
                (unit == best_unit && row.size() < rows[best_row].size())) {
                best_row = i;
                best_unit = unit;
                if (unit) {
                    best_idx = unit_idx;
                } else {
                    best_idx = 0;
                    for (std::size_t k = 1; k < row.size(); ++k)
                        if (magnitude(row[k].second) < magnitude(row[best_idx].second)) best_idx = k;
                }
            }
        }

        Row<Int> pivot_row = std::move(rows[best_row]);
        rows[best_row] = std::move(rows.back());
        rows.pop_back();
        const int col = pivot_row[best_idx].first;
        const Int pivot = pivot_row[best_idx].second;

        std::vector<Row<Int>> next;
        next.reserve(rows.size());
        for (auto& row : rows) {
            const Int* hit = find_entry(row, col);
            if (!hit) {
                next.push_back(std::move(row));
                continue;
            }
            Row<Int> reduced;
            if (is_unit(pivot)) {
                reduced = combine(Int(1), row, mul(*hit, pivot), pivot_row);
            } else {
                const Int g = gcd_of(pivot, *hit);
                reduced = combine(Int(pivot / g), row, Int(*hit / g), pivot_row);
                divide_by_content(reduced);
            }
            if (!reduced.empty()) next.push_back(std::move(reduced));
        }
        rows = std::move(next);
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t rank_rational(const SparseMatrix& m) {
    try {
        return rank_fraction_free<std::int64_t>(m);
    } catch (const Overflow&) {
        return rank_fraction_free<mpz_class>(m);
    }
}

std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p) {
    using Entry = std::pair<int, std::uint64_t>;
    auto reduce = [p](std::int64_t v) {
        const std::int64_t r = v % static_cast<std::int64_t>(p);
        return static_cast<std::uint64_t>(r < 0 ? r + p : r);
    };
    auto inverse = [p](std::uint64_t a) {
        std::uint64_t result = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    };

    std::vector<std::vector<Entry>> rows;
    for (const auto& r : m.data) {
        std::vector<Entry> row;
        for (auto [c, v] : r)
            if (auto x = reduce(v)) row.emplace_back(c, x);
        if (!row.empty()) rows.push_back(std::move(row));
    }

    std::size_t rank = 0;
    while (!rows.empty()) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (rows[i].size() < rows[best].size()) best = i;
        std::vector<Entry> pivot_row = std::move(rows[best]);
        rows[best] = std::move(rows.back());
        rows.pop_back();
        const int col = pivot_row.front().first;
        const std::uint64_t inv = inverse(pivot_row.front().second);

        std::vector<std::vector<Entry>> next;
        next.reserve(rows.size());
        for (auto& row : rows) {
            auto it = std::lower_bound(row.begin(), row.end(), col,
                                       [](const Entry& e, int c) { return e.first < c; });
            if (it == row.end() || it->first != col) {
                next.push_back(std::move(row));
                continue;
            }
            const std::uint64_t factor = it->second * inv % p;
            std::vector<Entry> out;
            out.reserve(row.size() + pivot_row.size());
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < pivot_row.size()) {
                if (j == pivot_row.size() || (i < row.size() && row[i].first < pivot_row[j].first)) {
                    out.push_back(row[i++]);
                } else if (i == row.size() || pivot_row[j].first < row[i].first) {
                    out.emplace_back(pivot_row[j].first, (p - factor * pivot_row[j].second % p) % p);
                    ++j;
                } else {
                    const std::uint64_t v = (row[i].second + p - factor * pivot_row[j].second % p) % p;
                    if (v) out.emplace_back(row[i].first, v);
                    ++i;
                    ++j;
                }
            }
            if (!out.empty()) next.push_back(std::move(out));
        }
        rows = std::move(next);
        ++rank;
    }
    return rank;
}

std::size_t rank(const SparseMatrix& m, Field field) {
    return field.is_rational() ? rank_rational(m) : rank_mod_p(m, field.characteristic());
}

}  // namespace edgereg
