#pragma once

// Brute-force reference computations on dense integer tables.  Nothing here
// uses the library; tests compare library output against these.

#include <algorithm>
#include <array>
#include <map>
#include <vector>

namespace oracle {

struct FiniteGroup {
    int n = 0;
    std::vector<std::vector<int>> mul;
    std::vector<int> inv;
    int e = 0;
};

inline FiniteGroup cyclic(int n)
{
    FiniteGroup g;
    g.n = n;
    g.mul.assign(n, std::vector<int>(n));
    g.inv.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
        g.inv[a] = (n - a) % n;
    }
    return g;
}

// Permutations of {0,1,2} in lexicographic order; (pq)(i) = p(q(i)).
inline FiniteGroup s3()
{
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto index = [&](const std::array<int, 3>& q) {
        return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    FiniteGroup g;
    g.n = 6;
    g.mul.assign(6, std::vector<int>(6));
    g.inv.assign(6, 0);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> c{};
            for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
            g.mul[a][b] = index(c);
            if (g.mul[a][b] == 0) g.inv[a] = b;
        }
    return g;
}

inline int conjugacy_classes(const FiniteGroup& g)
{
    std::vector<int> cls(g.n, -1);
    int k = 0;
    for (int x = 0; x < g.n; ++x) {
        if (cls[x] >= 0) continue;
        for (int q = 0; q < g.n; ++q) cls[g.mul[g.mul[q][x]][g.inv[q]]] = k;
        ++k;
    }
    return k;
}

// Structure constants c[i][j][k] of a finite algebra on basis 0..dim-1.
struct Dense {
    int dim = 0;
    std::vector<std::vector<std::vector<long>>> c;

    explicit Dense(int d = 0) : dim(d), c(d, std::vector<std::vector<long>>(d, std::vector<long>(d, 0))) {}
};

// CG: λ_a λ_b = λ_ab.
inline Dense group_algebra(const FiniteGroup& g)
{
    Dense A(g.n);
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) A.c[a][b][g.mul[a][b]] = 1;
    return A;
}

// K(G): δ_a δ_b = [a=b] δ_a.
inline Dense function_algebra(const FiniteGroup& g)
{
    Dense A(g.n);
    for (int a = 0; a < g.n; ++a) A.c[a][a][a] = 1;
    return A;
}

// E_ij E_kl = [j=k] E_il with E_ij at index i*n + j.
inline Dense matrix_units(int n)
{
    Dense M(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) M.c[i * n + j][j * n + l][i * n + l] = 1;
    return M;
}

// alpha[q][x] = coordinates of α_q(e_x) in R.
using GroupAction = std::vector<std::vector<std::vector<long>>>;

inline GroupAction translation(const FiniteGroup& g)
{
    GroupAction al(g.n, std::vector<std::vector<long>>(g.n, std::vector<long>(g.n, 0)));
    for (int q = 0; q < g.n; ++q)
        for (int p = 0; p < g.n; ++p) al[q][p][g.mul[q][p]] = 1;
    return al;
}

inline GroupAction conjugation(const FiniteGroup& g)
{
    GroupAction al(g.n, std::vector<std::vector<long>>(g.n, std::vector<long>(g.n, 0)));
    for (int q = 0; q < g.n; ++q)
        for (int p = 0; p < g.n; ++p) al[q][p][g.mul[g.mul[q][p]][g.inv[q]]] = 1;
    return al;
}

// Functions ξ: G → R with (ξη)(p) = Σ_q ξ(q) α_q(η(q⁻¹p)).  The basis
// function "x at q" has index x*|G| + q.
inline Dense twisted_convolution(const FiniteGroup& g, const Dense& R, const GroupAction& alpha)
{
    const int n = g.n, d = R.dim;
    using Fn = std::vector<std::vector<long>>;  // f[p][x]
    auto basis_fn = [&](int x, int q) {
        Fn f(n, std::vector<long>(d, 0));
        f[q][x] = 1;
        return f;
    };
    Dense out(d * n);
    for (int i = 0; i < d * n; ++i)
        for (int j = 0; j < d * n; ++j) {
            Fn xi = basis_fn(i / n, i % n), eta = basis_fn(j / n, j % n);
            Fn prod(n, std::vector<long>(d, 0));
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    const auto& y = eta[g.mul[g.inv[q]][p]];
                    std::vector<long> ay(d, 0);
                    for (int t = 0; t < d; ++t)
                        if (y[t])
                            for (int u = 0; u < d; ++u) ay[u] += y[t] * alpha[q][t][u];
                    for (int s = 0; s < d; ++s)
                        if (xi[q][s])
                            for (int t = 0; t < d; ++t)
                                if (ay[t])
                                    for (int u = 0; u < d; ++u) prod[p][u] += xi[q][s] * ay[t] * R.c[s][t][u];
                }
            for (int p = 0; p < n; ++p)
                for (int u = 0; u < d; ++u) out.c[i][j][u * n + p] = prod[p][u];
        }
    return out;
}

}  // namespace oracle
