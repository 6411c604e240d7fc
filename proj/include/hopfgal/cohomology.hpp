#pragma once
// Coboundary solving, second cohomology, cyclic third cohomology and
// non-degeneracy of 2-cocycles.
//
// Cochains are solved for in reduced coordinates: fix a generating set S and
// a breadth-first spanning tree of the Cayley graph rooted at the identity.
// A normalized 2-cochain w with prescribed coboundary c is determined by the
// values u(g, s), s in S, through
//     w(g, k s) = w(g, k) + w(g k, s) - w(k, s) + c(g, k, s)
// along tree edges (k, k s). The remaining equations are the non-tree edges.

#include <map>
#include <random>

#include "cochain.hpp"

namespace hopfgal {

struct SolveOptions {
    i64 lift = 0;             // multiplier for triviality over k^x; 0 means |G|
    int max_unknowns = 4000;  // beyond this a solve is reported infeasible
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

// Spanning tree of the Cayley graph with all generators at depth one.
struct CayleyFrame {
    const FiniteGroup* G = nullptr;
    std::vector<int> gens;
    std::vector<int> slot;                            // element -> column block, -1 for identity
    std::vector<std::vector<std::pair<int, int>>> path;  // element k -> tree edges (k_{i-1}, generator index)
    std::vector<std::pair<int, int>> nontree;          // edges (h, generator index) with h != e

    explicit CayleyFrame(const FiniteGroup& group) : G(&group) {
        gens = generating_set(group);
        int n = group.order(), e = group.identity();
        slot.assign(n, -1);
        int next = 0;
        for (int g = 0; g < n; ++g)
            if (g != e) slot[g] = next++;
        path.assign(n, {});
        std::vector<char> seen(n, 0);
        std::vector<char> tree_edge(static_cast<size_t>(n) * gens.size(), 0);
        std::vector<int> queue{e};
        seen[e] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int k = queue[qi];
            for (int si = 0; si < static_cast<int>(gens.size()); ++si) {
                int ks = group.mul(k, gens[si]);
                if (seen[ks]) continue;
                seen[ks] = 1;
                path[ks] = path[k];
                path[ks].emplace_back(k, si);
                tree_edge[static_cast<size_t>(k) * gens.size() + si] = 1;
                queue.push_back(ks);
            }
        }
        for (int h = 0; h < n; ++h) {
            if (h == e) continue;
            for (int si = 0; si < static_cast<int>(gens.size()); ++si)
                if (!tree_edge[static_cast<size_t>(h) * gens.size() + si]) nontree.emplace_back(h, si);
        }
    }

    int nvars2() const { return (G->order() - 1) * static_cast<int>(gens.size()); }
    int var(int g, int si) const { return slot[g] < 0 ? -1 : slot[g] * static_cast<int>(gens.size()) + si; }
};

namespace detail {

// Accumulate +/- w(g, k) in reduced coordinates; returns the constant part.
template <class C>
i64 add_w_expr(const CayleyFrame& fr, int g, int k, i64 sign, SparseRow& row, const C& cval) {
    const FiniteGroup& G = *fr.G;
    if (g == G.identity()) return 0;
    i64 konst = 0;
    for (auto [prev, si] : fr.path[k]) {
        int v1 = fr.var(G.mul(g, prev), si);
        int v2 = fr.var(prev, si);
        if (v1 >= 0) row.emplace_back(v1, sign);
        if (v2 >= 0) row.emplace_back(v2, -sign);
        konst += sign * cval(g, prev, fr.gens[si]);
    }
    return konst;
}

// Emit the non-tree-edge equations e(g, h, t) = 0 of the reduced system.
template <class C, class Sink>
void emit_degree3_rows(const CayleyFrame& fr, const C& cval, i64 M, Sink&& sink) {
    const FiniteGroup& G = *fr.G;
    int n = G.order(), e = G.identity();
    SparseRow row;
    for (int g = 0; g < n; ++g) {
        if (g == e) continue;
        for (auto [h, ti] : fr.nontree) {
            int t = fr.gens[ti];
            row.clear();
            // dw(g,h,t) = w(h,t) - w(gh,t) + w(g,ht) - w(g,h)
            i64 konst = 0;
            int v = fr.var(h, ti);
            if (v >= 0) row.emplace_back(v, 1);
            int gh = G.mul(g, h);
            v = fr.var(gh, ti);
            if (v >= 0) row.emplace_back(v, -1);
            konst += add_w_expr(fr, g, G.mul(h, t), 1, row, cval);
            konst += add_w_expr(fr, g, h, -1, row, cval);
            i64 rhs = posmod(cval(g, h, t) - konst, M);
            sink(row, rhs);
        }
    }
}

// Dense sketch of a row stream: every row is added, with random unit-ish
// coefficients, into a few of K accumulator rows over Z/p^e.
template <class Emit>
std::vector<std::vector<i64>> sketch_rows(int ncols, i64 pe, int K, int per_row, std::uint64_t seed, Emit& emit) {
    std::vector<std::vector<i64>> acc(K, std::vector<i64>(ncols + 1, 0));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, K - 1);
    std::uniform_int_distribution<i64> coef(1, pe - 1);
    emit([&](const SparseRow& row, i64 rhs) {
        for (int d = 0; d < per_row; ++d) {
            auto& a = acc[pick(rng)];
            i64 f = coef(rng);
            for (auto [c, v] : row) a[c] = (a[c] + f * posmod(v, pe)) % pe;
            a[ncols] = (a[ncols] + f * posmod(rhs, pe)) % pe;
        }
    });
    return acc;
}

template <class Emit>
bool residual_zero(const std::vector<i64>& x, i64 M, Emit& emit) {
    bool ok = true;
    emit([&](const SparseRow& row, i64 rhs) {
        if (!ok) return;
        i64 s = -rhs;
        for (auto [c, v] : row) s = (s + posmod(v, M) * x[c]) % M;
        if (posmod(s, M) != 0) ok = false;
    });
    return ok;
}

template <class Emit>
i64 count_rows(Emit& emit) {
    i64 n = 0;
    emit([&](const SparseRow&, i64) { ++n; });
    return n;
}

}  // namespace detail

// Solve a sparse system over Z/M. Large systems are first compressed by a
// random sketch (a set of consequences of the equations): inconsistency of the
// sketch is conclusive, and a sketch solution is accepted only after it
// satisfies every original equation. Small systems, and sketches that fail
// verification twice, are solved by direct insertion.
template <class Emit>
std::optional<std::vector<i64>> sketch_solve(int ncols, i64 M, Emit&& emit, std::uint64_t seed) {
    if (ncols == 0) {
        std::vector<i64> none;
        return detail::residual_zero(none, M, emit) ? std::optional<std::vector<i64>>(none) : std::nullopt;
    }
    i64 nrows = detail::count_rows(emit);
    if (nrows > 2 * static_cast<i64>(ncols) + 64) {
        for (int attempt = 0; attempt < 2; ++attempt) {
            std::vector<i64> x(ncols, 0);
            i64 acc_mod = 1;
            bool inconsistent = false;
            for (auto [p, e] : factorize(M)) {
                LocalEchelon ech(p, e, ncols);
                i64 pe = ech.modulus();
                auto sk = detail::sketch_rows(ncols, pe, ncols + 48 + 32 * attempt, attempt ? 8 : 3,
                                              seed + 7919 * attempt + p, emit);
                for (auto& r : sk) ech.insert_dense(std::move(r));
                auto sol = ech.solve();
                if (!sol) {
                    inconsistent = true;
                    break;
                }
                i64 inv = inv_mod(acc_mod % pe, pe);
                for (int j = 0; j < ncols; ++j) x[j] += acc_mod * posmod(((*sol)[j] - x[j]) % pe * inv, pe);
                acc_mod *= pe;
            }
            if (inconsistent) return std::nullopt;
            for (auto& v : x) v = posmod(v, M);
            if (detail::residual_zero(x, M, emit)) return x;
        }
    }
    auto x = solve_mod(ncols, M, emit);
    if (x && !detail::residual_zero(*x, M, emit)) throw std::logic_error("linear solve produced a non-solution");
    return x;
}

inline i64 lift_modulus(const Cochain& c, bool lift, const SolveOptions& opt) {
    if (!lift) return c.modulus();
    i64 n = c.group().order();
    i64 mult = opt.lift ? opt.lift : n;
    if (mult % n != 0)
        throw InfeasibleError("lift multiplier " + std::to_string(mult) + " is not a multiple of |G| = " +
                              std::to_string(n) + "; triviality over k^x is not decided");
    return c.modulus() * mult;
}

// Sum over k of c(g, g^k, g): zero on coboundaries at every modulus, and the
// full invariant of the restriction to <g>.
inline i64 cyclic_invariant(const Cochain& c, int g) {
    const FiniteGroup& G = c.group();
    i64 s = 0;
    int x = G.identity();
    do {
        s += c(g, x, g);
        x = G.mul(x, g);
    } while (x != G.identity());
    return posmod(s, c.modulus());
}

// A cheap proof of non-triviality: some cyclic restriction is nontrivial.
inline bool cyclic_obstruction(const Cochain& c) {
    for (int g = 0; g < c.group().order(); ++g)
        if (cyclic_invariant(c, g) != 0) return true;
    return false;
}

// Witness w with dw = c (at the lifted modulus when lift is set), or nothing.
inline std::optional<Cochain> trivialize(const Cochain& c, bool lift = true, const SolveOptions& opt = {}) {
    if (c.degree() != 2 && c.degree() != 3) throw DomainError("trivialize expects degree 2 or 3");
    const FiniteGroup& G = c.group();
    int n = G.order(), e = G.identity();
    i64 M2 = lift_modulus(c, lift, opt);
    i64 f = M2 / c.modulus();
    CayleyFrame fr(G);

    if (c.degree() == 2) {
        int ncols = n - 1;
        if (ncols > opt.max_unknowns) throw InfeasibleError("coboundary system too large");
        auto emit = [&](auto&& sink) {
            SparseRow row;
            for (int g = 0; g < n; ++g) {
                if (g == e) continue;
                for (int s : fr.gens) {
                    row.clear();
                    int gs = G.mul(g, s);
                    if (fr.slot[s] >= 0) row.emplace_back(fr.slot[s], 1);
                    if (fr.slot[gs] >= 0) row.emplace_back(fr.slot[gs], -1);
                    row.emplace_back(fr.slot[g], 1);
                    sink(row, c(g, s) * f);
                }
            }
        };
        auto x = sketch_solve(ncols, M2, emit, opt.seed);
        if (!x) return std::nullopt;
        Cochain w(1, c.group_ptr(), M2);
        for (int g = 0; g < n; ++g)
            if (g != e) w.set(g, (*x)[fr.slot[g]]);
        Cochain target = c.lifted(M2);
        if (!(coboundary(w) == target)) throw std::logic_error("degree-2 witness failed verification");
        return w;
    }

    if (lift && cyclic_obstruction(c)) return std::nullopt;
    int ncols = fr.nvars2();
    if (ncols > opt.max_unknowns)
        throw InfeasibleError("coboundary system with " + std::to_string(ncols) + " unknowns exceeds the cap");
    auto cval = [&](int a, int b, int d) { return c(a, b, d) * f; };
    auto emit = [&](auto&& sink) { detail::emit_degree3_rows(fr, cval, M2, sink); };
    auto x = sketch_solve(ncols, M2, emit, opt.seed);
    if (!x) return std::nullopt;
    // Expand u to the full 2-cochain along the tree.
    Cochain w(2, c.group_ptr(), M2);
    auto u = [&](int g, int si) -> i64 {
        int v = fr.var(g, si);
        return v < 0 ? 0 : (*x)[v];
    };
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return fr.path[a].size() < fr.path[b].size(); });
    for (int g = 0; g < n; ++g) {
        if (g == e) continue;
        for (int k : order) {
            if (k == e) continue;
            auto [prev, si] = fr.path[k].back();
            w.set(g, k, w(g, prev) + u(G.mul(g, prev), si) - u(prev, si) + cval(g, prev, fr.gens[si]));
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = G.mul(a, b);
            for (int d = 0; d < n; ++d)
                if (posmod(w(b, d) - w(ab, d) + w(a, G.mul(b, d)) - w(a, b) - cval(a, b, d), M2) != 0)
                    throw std::logic_error("degree-3 witness failed verification");
        }
    return w;
}

inline bool is_trivial_class(const Cochain& c, const SolveOptions& opt = {}) { return trivialize(c, true, opt).has_value(); }

// ---------------------------------------------------------------------------
// Second cohomology with coefficients in k^x.
//
// In reduced coordinates the normalized 2-cocycles over an abelian group A
// are the kernel of an integer matrix R. Over Q/Z the kernel is the direct sum
// of its divisible part and the cyclic groups Z/d_i for the nonzero non-unit
// invariant factors d_i of R; the coboundaries form the divisible part since
// H^2 is finite, so H^2(G, k^x) is the sum of the Z/d_i.

struct H2Description {
    GroupPtr group;
    i64 modulus = 1;
    std::vector<i64> invariant_factors;  // d_1 | d_2 | ..., all > 1
    std::vector<Cochain> generators;     // one per invariant factor
    std::vector<Cochain> representatives;  // one per class, the first being zero

    i64 order() const {
        i64 o = 1;
        for (auto d : invariant_factors) o *= d;
        return o;
    }
};

namespace detail {

// Columns of B paired with the p-part of an invariant factor of R.
struct LocalGenerator {
    int k;                    // p^k
    std::vector<i64> column;  // mod p^E
};

template <class Emit>
std::vector<LocalGenerator> local_h2(int ncols, i64 p, int E, Emit& emit, i64 nrows, std::uint64_t seed) {
    i64 pe = ipow(p, E);
    for (int attempt = 0; attempt < 3; ++attempt) {
        LocalEchelon ech(p, E, ncols);
        if (attempt < 2 && nrows > 2 * static_cast<i64>(ncols) + 64) {
            auto sk = sketch_rows(ncols, pe, ncols + 48 + 32 * attempt, attempt ? 8 : 3, seed + 104729 * attempt, emit);
            for (auto& r : sk) ech.insert_dense(std::move(r));
        } else {
            attempt = 2;
            emit([&](const SparseRow& row, i64) { ech.insert(row, 0); });
        }
        auto gensA = ech.generators();
        LocalSmith sm = local_smith(gensA, ncols, p, E);
        // Kernel generators of the compressed matrix must annihilate every row.
        std::vector<std::vector<i64>> kern;
        std::vector<LocalGenerator> out;
        for (int i = 0; i < ncols; ++i) {
            int k = sm.diag_val[i];
            std::vector<i64> col(ncols);
            i64 scale = ipow(p, E - std::min(k, E));
            for (int r = 0; r < ncols; ++r) col[r] = sm.B[r][i] * scale % pe;
            if (k > 0) kern.push_back(col);
            if (k > 0 && k < E) {
                std::vector<i64> raw(ncols);
                for (int r = 0; r < ncols; ++r) raw[r] = sm.B[r][i];
                out.push_back({k, std::move(raw)});
            }
        }
        bool ok = true;
        std::vector<i64> acc(kern.size());
        emit([&](const SparseRow& row, i64) {
            if (!ok) return;
            std::fill(acc.begin(), acc.end(), 0);
            for (auto [c, v] : row)
                for (size_t j = 0; j < kern.size(); ++j) acc[j] += v * kern[j][c];
            for (auto a : acc)
                if (posmod(a, pe) != 0) ok = false;
        });
        if (ok) return out;
    }
    throw std::logic_error("local second cohomology failed verification");
}

}  // namespace detail

// Expand reduced coordinates of a 2-cocycle into the full table.
inline Cochain expand_2cocycle(const CayleyFrame& fr, GroupPtr G, const std::vector<i64>& u, i64 M) {
    int n = G->order(), e = G->identity();
    Cochain w(2, G, M);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return fr.path[a].size() < fr.path[b].size(); });
    auto uu = [&](int g, int si) -> i64 {
        int v = fr.var(g, si);
        return v < 0 ? 0 : u[v];
    };
    for (int g = 0; g < n; ++g) {
        if (g == e) continue;
        for (int k : order) {
            if (k == e) continue;
            auto [prev, si] = fr.path[k].back();
            w.set(g, k, w(g, prev) + uu(G->mul(g, prev), si) - uu(prev, si));
        }
    }
    return w;
}

inline H2Description h2(GroupPtr G, i64 M, const SolveOptions& opt = {}) {
    if (M % exponent(*G) != 0) throw DomainError("h2 modulus must be a multiple of the group exponent");
    H2Description out;
    out.group = G;
    out.modulus = M;
    CayleyFrame fr(*G);
    int ncols = fr.nvars2();
    if (ncols > opt.max_unknowns) throw InfeasibleError("second cohomology system too large");
    auto zero = [](int, int, int) -> i64 { return 0; };
    auto emit = [&](auto&& sink) { detail::emit_degree3_rows(fr, zero, 1, sink); };
    i64 nrows = detail::count_rows(emit);

    // per prime: list of (k, cocycle of order p^k)
    std::vector<std::vector<std::pair<int, Cochain>>> per_prime;
    for (auto [p, v] : factorize(G->order())) {
        int E = 2 * v + 2;
        auto gens = detail::local_h2(ncols, p, E, emit, nrows, opt.seed + p);
        std::vector<std::pair<int, Cochain>> local;
        for (auto& lg : gens) {
            i64 pk = ipow(p, lg.k);
            if (M % pk != 0) throw DomainError("h2 modulus too small for a class of order " + std::to_string(pk));
            std::vector<i64> u(ncols);
            for (int r = 0; r < ncols; ++r) u[r] = posmod((M / pk) * (lg.column[r] % pk), M);
            local.emplace_back(lg.k, expand_2cocycle(fr, G, u, M));
        }
        std::stable_sort(local.begin(), local.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
        std::vector<std::pair<int, Cochain>> tagged;
        for (auto& [k, c] : local) tagged.emplace_back(static_cast<int>(ipow(p, k)), std::move(c));
        per_prime.push_back(std::move(tagged));
    }
    // Combine the largest factors of each prime, then the next, and so on.
    size_t rounds = 0;
    for (auto& l : per_prime) rounds = std::max(rounds, l.size());
    std::vector<i64> factors;
    std::vector<Cochain> gens;
    for (size_t r = 0; r < rounds; ++r) {
        i64 d = 1;
        Cochain g(2, G, M);
        for (auto& l : per_prime)
            if (r < l.size()) {
                d *= l[r].first;
                g += l[r].second;
            }
        factors.push_back(d);
        gens.push_back(std::move(g));
    }
    std::reverse(factors.begin(), factors.end());
    std::reverse(gens.begin(), gens.end());
    out.invariant_factors = factors;
    out.generators = gens;
    i64 total = out.order();
    if (total > 100000) throw InfeasibleError("too many second cohomology classes to list");
    for (i64 idx = 0; idx < total; ++idx) {
        Cochain rep(2, G, M);
        i64 rest = idx;
        for (size_t i = factors.size(); i-- > 0;) {
            i64 a = rest % factors[i];
            rest /= factors[i];
            if (a) rep += gens[i].scaled(a);
        }
        out.representatives.push_back(std::move(rep));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cyclic groups.

// The standard 3-cocycle theta^{l [(n+m)/N]} on a cyclic group with the given
// generator, theta = exp(2 pi i theta_exp / N), at a modulus divisible by N.
inline Cochain cyclic_standard_cocycle(GroupPtr H, int generator, i64 theta_exp, i64 M) {
    int N = H->order();
    if (M % N != 0) throw DomainError("modulus must be a multiple of the cyclic order");
    std::vector<int> expo(N, -1);
    int x = H->identity();
    for (int k = 0; k < N; ++k) {
        expo[x] = k;
        x = H->mul(x, generator);
    }
    for (int v : expo)
        if (v < 0) throw DomainError("element does not generate the group");
    Cochain c(3, H, M);
    i64 unit = M / N * posmod(theta_exp, N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            if ((expo[a] + expo[b]) < N) continue;
            for (int d = 0; d < N; ++d) c.set(a, b, d, unit * expo[d]);
        }
    return c;
}

inline int smallest_generator(const FiniteGroup& G, const Subgroup& L) {
    for (int x : L.elements)
        if (G.element_order(x) == L.order()) return x;
    throw DomainError("subgroup is not cyclic");
}

// theta-exponent in Z/|L| classifying the restriction of omega to cyclic L.
inline i64 cyclic_h3_class(const Cochain& omega, const Subgroup& L, int generator = -1, const SolveOptions& opt = {}) {
    const FiniteGroup& G = omega.group();
    if (generator < 0) generator = smallest_generator(G, L);
    int N = L.order();
    GroupPtr H = subgroup_group(G, L);
    i64 M2 = lcm64(omega.modulus(), N);
    Cochain res = restrict_to(omega, L, H).lifted(M2);
    int hg = L.index_of(generator);
    i64 s = cyclic_invariant(res, hg);
    i64 unit = M2 / N;
    std::vector<i64> order;
    if (s % unit == 0) order.push_back(s / unit);
    for (i64 t = 0; t < N; ++t)
        if (order.empty() || t != order.front()) order.push_back(t);
    for (i64 t : order) {
        Cochain diff = res - cyclic_standard_cocycle(H, hg, t, M2);
        if (cyclic_invariant(diff, hg) != 0) continue;
        if (trivialize(diff, true, opt)) return t;
    }
    throw std::logic_error("no cyclic class matches the restriction");
}

// ---------------------------------------------------------------------------
// Non-degeneracy on abelian subgroups: the alternating form
// b(x, y) = beta(x, y) - beta(y, x) has trivial radical.

inline bool is_nondegenerate(const Cochain& beta, const Subgroup& A) {
    const FiniteGroup& G = beta.group();
    if (!is_abelian(G, A)) throw DomainError("non-degeneracy is only decided on abelian subgroups");
    i64 M = beta.modulus();
    for (int x : A.elements) {
        if (x == G.identity()) continue;
        bool radical = true;
        for (int y : A.elements)
            if (posmod(beta(x, y) - beta(y, x), M) != 0) {
                radical = false;
                break;
            }
        if (radical) return false;
    }
    return true;
}

inline bool is_nondegenerate(const Cochain& beta) { return is_nondegenerate(beta, whole_group(beta.group())); }

// For abelian groups a 2-cocycle is a coboundary over k^x iff it is symmetric.
inline bool is_symmetric(const Cochain& beta) {
    int n = beta.group().order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (beta(a, b) != beta(b, a)) return false;
    return true;
}

}  // namespace hopfgal
