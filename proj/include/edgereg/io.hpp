#ifndef EDGEREG_IO_HPP
#define EDGEREG_IO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "edgereg/graph.hpp"
#include "edgereg/ideal.hpp"

namespace edgereg {

/// Malformed input; line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// "n m" then m lines "u v" with 1 <= u < v <= n.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

/// "ring <n>" then one generator per line, space-separated variable indices.
MonomialIdeal parse_ideal(const std::string& text);
std::string format_ideal(const MonomialIdeal& a);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

enum class FamilyKind { Path, Cycle, Complete, Star, Sunflower6, Tree, Forest, Block, Random };

/// Family spec strings:
///   path:<n>  cycle:<n>  complete:<n>  star:<leaves>  sunflower6
///   tree:<n>:<seed>  forest:<n>:<seed>  block:<n>:<seed>
///   random:<n>:<percent>:<seed>
/// with an optional "@<d>" suffix for the d-th power.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Path;
    int n = 0;
    std::uint64_t seed = 0;
    int percent = 0;  // edge probability for random graphs
    int power = 1;

    Graph build() const;
    std::string to_string() const;
    bool operator==(const FamilySpec&) const = default;
};

FamilySpec parse_family_spec(const std::string& text);

}  // namespace edgereg

#endif
