#ifndef EDGEREG_LINALG_HPP
#define EDGEREG_LINALG_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace edgereg {

/// Coefficient field for homology: the rationals or a prime field GF(p).
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint32_t p);
    static Field gf2() { return prime(2); }
    /// "Q", "GF2", "GF3", ...
    static Field parse(const std::string& name);

    bool is_rational() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }
    std::string name() const { return p_ == 0 ? "Q" : "GF" + std::to_string(p_); }
    bool operator==(const Field&) const = default;

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

/// Integer matrix stored as sorted sparse rows.
struct SparseMatrix {
    using Row = std::vector<std::pair<int, std::int64_t>>;

    int rows = 0;
    int cols = 0;
    std::vector<Row> data;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r)) {}
};

/// Exact rank over Q. Fraction-free elimination on integers: unit pivots are
/// preferred, otherwise rows are cross-multiplied and divided by their
/// content. Runs on 64-bit integers and restarts on GMP integers on overflow.
std::size_t rank_rational(const SparseMatrix& m);
std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p);
std::size_t rank(const SparseMatrix& m, Field field);

}  // namespace edgereg

#endif
