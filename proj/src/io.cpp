#include "edgereg/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace edgereg {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string text;
    int column;
};

std::vector<Token> split_line(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

long long to_int(const Token& t, int line) {
    long long value = 0;
    const char* end = t.text.data() + t.text.size();
    auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
    if (ec != std::errc() || ptr != end) throw ParseError(line, t.column, "expected an integer, got '" + t.text + "'");
    return value;
}

// Non-blank lines with their 1-based numbers; '#' starts a comment.
std::vector<std::pair<int, std::vector<Token>>> logical_lines(const std::string& text) {
    std::vector<std::pair<int, std::vector<Token>>> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto tokens = split_line(line);
        if (!tokens.empty()) out.emplace_back(number, std::move(tokens));
    }
    return out;
}

}  // namespace

Graph parse_graph(const std::string& text) {
    const auto lines = logical_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "empty graph file");
    const auto& [hline, header] = lines.front();
    if (header.size() != 2) throw ParseError(hline, header.front().column, "header must be 'n m'");
    const long long n = to_int(header[0], hline);
    const long long m = to_int(header[1], hline);
    if (n < 0 || n > kMaxVertices)
        throw ParseError(hline, header[0].column, "vertex count must be in 0.." + std::to_string(kMaxVertices));
    if (m < 0) throw ParseError(hline, header[1].column, "edge count must be nonnegative");
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw ParseError(lines.back().first, 1,
                         "header announces " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
    std::vector<Edge> edges;
    VertexSet seen_rows[kMaxVertices];
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& [ln, tok] = lines[k];
        if (tok.size() != 2) throw ParseError(ln, tok.front().column, "edge line must be 'u v'");
        const long long u = to_int(tok[0], ln);
        const long long v = to_int(tok[1], ln);
        if (u < 1 || u > n) throw ParseError(ln, tok[0].column, "vertex out of range");
        if (v < 1 || v > n) throw ParseError(ln, tok[1].column, "vertex out of range");
        if (u >= v) throw ParseError(ln, tok[1].column, "edge must satisfy u < v");
        if (seen_rows[u - 1].contains(static_cast<int>(v))) throw ParseError(ln, tok[0].column, "duplicate edge");
        seen_rows[u - 1].insert(static_cast<int>(v));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    const auto edges = g.edges();
    out << g.vertex_count() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

MonomialIdeal parse_ideal(const std::string& text) {
    const auto lines = logical_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "empty ideal file");
    const auto& [hline, header] = lines.front();
    if (header.size() != 2 || header[0].text != "ring")
        throw ParseError(hline, header.front().column, "header must be 'ring <n>'");
    const long long n = to_int(header[1], hline);
    if (n < 0 || n > kMaxVertices)
        throw ParseError(hline, header[1].column, "ring size must be in 0.." + std::to_string(kMaxVertices));
    std::vector<VertexSet> gens;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& [ln, tok] = lines[k];
        VertexSet gen;
        for (const Token& t : tok) {
            const long long i = to_int(t, ln);
            if (i < 1 || i > n) throw ParseError(ln, t.column, "variable index out of range");
            if (gen.contains(static_cast<int>(i))) throw ParseError(ln, t.column, "repeated variable (squarefree only)");
            gen.insert(static_cast<int>(i));
        }
        gens.push_back(gen);
    }
    return MonomialIdeal(static_cast<int>(n), std::move(gens));
}

std::string format_ideal(const MonomialIdeal& a) {
    std::ostringstream out;
    out << "ring " << a.ground() << '\n';
    for (VertexSet g : a.generators()) {
        bool first = true;
        for (int v : g) {
            out << (first ? "" : " ") << v;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << contents;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

namespace {

struct KindName {
    FamilyKind kind;
    const char* name;
    int fields;  // numeric fields after the name
};

constexpr KindName kKinds[] = {
    {FamilyKind::Path, "path", 1},     {FamilyKind::Cycle, "cycle", 1},   {FamilyKind::Complete, "complete", 1},
    {FamilyKind::Star, "star", 1},     {FamilyKind::Sunflower6, "sunflower6", 0},
    {FamilyKind::Tree, "tree", 2},     {FamilyKind::Forest, "forest", 2}, {FamilyKind::Block, "block", 2},
    {FamilyKind::Random, "random", 3},
};

const KindName& lookup(FamilyKind k) {
    for (const auto& e : kKinds)
        if (e.kind == k) return e;
    throw std::logic_error("unknown family kind");
}

}  // namespace

std::string FamilySpec::to_string() const {
    const KindName& e = lookup(kind);
    std::string out = e.name;
    if (e.fields >= 1) out += ':' + std::to_string(n);
    if (kind == FamilyKind::Random) out += ':' + std::to_string(percent);
    if (e.fields >= 2) out += ':' + std::to_string(seed);
    if (power != 1) out += '@' + std::to_string(power);
    return out;
}

Graph FamilySpec::build() const {
    Graph g;
    switch (kind) {
        case FamilyKind::Path: g = path(n); break;
        case FamilyKind::Cycle: g = cycle(n); break;
        case FamilyKind::Complete: g = complete(n); break;
        case FamilyKind::Star: g = star(n); break;
        case FamilyKind::Sunflower6: g = sunflower6(); break;
        case FamilyKind::Tree: g = random_tree(n, seed); break;
        case FamilyKind::Forest: g = random_forest(n, seed); break;
        case FamilyKind::Block: g = random_block_graph(n, seed); break;
        case FamilyKind::Random: g = random_graph(n, percent / 100.0, seed); break;
    }
    return power == 1 ? g : edgereg::power(g, power);
}

FamilySpec parse_family_spec(const std::string& text) {
    // Column positions refer to the single-line spec string.
    std::string body = text;
    FamilySpec spec;
    if (auto at = text.find('@'); at != std::string::npos) {
        body = text.substr(0, at);
        const Token t{text.substr(at + 1), static_cast<int>(at) + 2};
        if (t.text.empty()) throw ParseError(1, t.column, "missing power after '@'");
        const long long d = to_int(t, 1);
        if (d < 1) throw ParseError(1, t.column, "power must be at least 1");
        spec.power = static_cast<int>(d);
    }
    std::vector<Token> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t colon = body.find(':', start);
        parts.push_back({body.substr(start, colon - start), static_cast<int>(start) + 1});
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    const KindName* kind = nullptr;
    for (const auto& e : kKinds)
        if (parts[0].text == e.name) kind = &e;
    if (!kind) {
        std::string names;
        for (const auto& e : kKinds) names += std::string(names.empty() ? "" : ", ") + e.name;
        throw ParseError(1, 1, "unknown family '" + parts[0].text + "' (known: " + names + ")");
    }
    if (static_cast<int>(parts.size()) - 1 != kind->fields)
        throw ParseError(1, 1, std::string("family '") + kind->name + "' takes " + std::to_string(kind->fields) +
                                   " numeric field(s)");
    spec.kind = kind->kind;
    auto field = [&](std::size_t i, long long lo, long long hi, const char* what) {
        const long long v = to_int(parts[i], 1);
        if (v < lo || v > hi)
            throw ParseError(1, parts[i].column,
                             std::string(what) + " must be in " + std::to_string(lo) + ".." + std::to_string(hi));
        return v;
    };
    const long long max_n = kMaxVertices;
    switch (kind->kind) {
        case FamilyKind::Sunflower6: break;
        case FamilyKind::Cycle: spec.n = static_cast<int>(field(1, 3, max_n, "n")); break;
        case FamilyKind::Star: spec.n = static_cast<int>(field(1, 0, max_n - 1, "leaf count")); break;
        case FamilyKind::Random:
            spec.n = static_cast<int>(field(1, 1, max_n, "n"));
            spec.percent = static_cast<int>(field(2, 0, 100, "percent"));
            spec.seed = static_cast<std::uint64_t>(field(3, 0, std::numeric_limits<long long>::max(), "seed"));
            break;
        default:
            spec.n = static_cast<int>(field(1, 1, max_n, "n"));
            if (kind->fields == 2)
                spec.seed = static_cast<std::uint64_t>(field(2, 0, std::numeric_limits<long long>::max(), "seed"));
    }
    return spec;
}

}  // namespace edgereg
