#include <stdexcept>
#include <string>

#include "edgereg/ideal.hpp"

namespace edgereg {

int critical_multiplier(int n, int d) {
    if (d < 1) return 0;
    const int rest = n - (d + 1);
    if (rest <= 0 || rest % (d + 2) != 0) return 0;
    const int k = rest / (d + 2);
    return k >= 2 ? k : 0;
}

CriticalDecomposition critical_decomposition(int n, int d) {
    const int k = critical_multiplier(n, d);
    if (k == 0 || n > kMaxVertices)
        throw std::invalid_argument("(n, d) = (" + std::to_string(n) + ", " + std::to_string(d) +
                                    ") is not of the form n = k(d+2) + d + 1 with k >= 2");
    CriticalDecomposition dec;
    dec.n = n;
    dec.d = d;
    dec.k = k;
    dec.graph = power(cycle(n), d);
    const Graph& g = dec.graph;
    const VertexSet all = g.vertices();
    const VertexSet one_two = VertexSet::of({1, 2});

    dec.I = edge_ideal(g);
    dec.J = edge_ideal_on(g, all - VertexSet::of({1}));
    dec.K = MonomialIdeal::variables(n, g.neighbors(1));

    for (int j = 2; j <= n; ++j) {
        const VertexSet excluded = j == 2 ? VertexSet::of({1}) : one_two;
        dec.A[j] = MonomialIdeal::variables(n, g.neighbors(j) - excluded);
        dec.B[j] = edge_ideal_on(g, all - g.closed_neighborhood(VertexSet::of({1, j})));
    }

    MonomialIdeal L = MonomialIdeal::zero(n);
    auto add_term = [&](int j) { L = L + multiply(dec.A[j] + dec.B[j], SquarefreeMonomial::variable(j)); };
    for (int j = 3; j <= d + 1; ++j) add_term(j);
    for (int j = n - d + 1; j <= n; ++j) add_term(j);
    dec.L = L;
    dec.M = dec.A[2] + dec.B[2];
    return dec;
}

MonomialIdeal lm_intersection_formula(const CriticalDecomposition& dec) {
    const int n = dec.n;
    const int d = dec.d;
    const Graph& g = dec.graph;
    auto x = [](int i) { return SquarefreeMonomial::variable(i); };
    auto term = [&](int j) { return multiply(dec.A.at(j) + dec.B.at(j), x(j)); };

    MonomialIdeal out = MonomialIdeal::zero(n);
    for (int j = n - d + 2; j <= n; ++j) out = out + term(j);
    for (int j = 3; j <= d + 1; ++j) out = out + term(j);

    const MonomialIdeal tail = MonomialIdeal::variables(n, VertexSet::range(n - d + 2, n));
    const MonomialIdeal bridge = multiply(
        MonomialIdeal::variables(n, VertexSet::range(n - 2 * d + 1, n - d) | VertexSet::range(d + 3, 2 * d + 2)),
        x(d + 2));
    const MonomialIdeal path_part = edge_ideal_on(g, VertexSet::range(d + 3, n - d));
    out = out + multiply(tail + bridge + path_part, x(n - d + 1));
    return out;
}

}  // namespace edgereg
