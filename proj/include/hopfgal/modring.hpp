#pragma once
// Exact arithmetic over Z/M: primes, CRT, Howell-form solving over Z/p^e
// and a local Smith form used for second cohomology.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopfgal {

using i64 = std::int64_t;

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline i64 posmod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 lcm64(i64 a, i64 b) { return a / std::gcd(a, b) * b; }

inline i64 pow_mod(i64 b, i64 e, i64 m) {
    i64 r = 1 % m;
    b = posmod(b, m);
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

// Inverse of a unit modulo m.
inline i64 inv_mod(i64 a, i64 m) {
    i64 g = m, x = 0, r = posmod(a, m), y = 1;
    while (r != 0) {
        i64 q = g / r;
        g -= q * r;
        std::swap(g, r);
        x -= q * y;
        std::swap(x, y);
    }
    if (g != 1) throw std::logic_error("inv_mod: not a unit");
    return posmod(x, m);
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::pair<i64, int>> factorize(i64 n) {
    std::vector<std::pair<i64, int>> out;
    for (i64 d = 2; d * d <= n; ++d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline i64 ipow(i64 b, int e) {
    i64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline int valuation(i64 a, i64 p) {
    if (a == 0) return 1 << 20;
    int v = 0;
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    return v;
}

// Multiplicative order of a modulo m (a a unit), or 0 when a is not a unit.
inline i64 mult_order(i64 a, i64 m) {
    a = posmod(a, m);
    if (std::gcd(a, m) != 1) return 0;
    i64 x = a % m, k = 1;
    while (x != 1 % m) {
        x = x * a % m;
        ++k;
    }
    return k;
}

using SparseRow = std::vector<std::pair<int, i64>>;

// Row module over the chain ring Z/p^e kept in Howell form, so that greedy
// back-substitution decides consistency and yields a solution.
class LocalEchelon {
public:
    LocalEchelon(i64 p, int e, int ncols)
        : p_(p), e_(e), pe_(ipow(p, e)), ncols_(ncols), pivot_(ncols, -1) {}

    void insert(const SparseRow& row, i64 rhs) {
        std::vector<i64> r(ncols_ + 1, 0);
        for (auto [c, v] : row) r[c] = posmod(r[c] + v, pe_);
        r[ncols_] = posmod(rhs, pe_);
        queue_.push_back(std::move(r));
        drain();
    }

    void insert_dense(std::vector<i64> r) {
        for (auto& v : r) v = posmod(v, pe_);
        queue_.push_back(std::move(r));
        drain();
    }

    bool inconsistent() const { return inconsistent_; }

    std::optional<std::vector<i64>> solve() const {
        if (inconsistent_) return std::nullopt;
        std::vector<i64> x(ncols_, 0);
        for (int c = ncols_ - 1; c >= 0; --c) {
            if (pivot_[c] < 0) continue;
            const auto& r = rows_[pivot_[c]];
            i64 acc = r[ncols_];
            for (int j = c + 1; j < ncols_; ++j)
                if (r[j] && x[j]) acc = posmod(acc - r[j] * x[j], pe_);
            i64 pk = r[c];
            if (acc % pk != 0) return std::nullopt;
            x[c] = acc / pk;
        }
        return x;
    }

    // Generators of the row module (coefficient parts), for Smith reduction.
    std::vector<std::vector<i64>> generators() const {
        std::vector<std::vector<i64>> out;
        for (int c = 0; c < ncols_; ++c)
            if (pivot_[c] >= 0)
                out.emplace_back(rows_[pivot_[c]].begin(), rows_[pivot_[c]].begin() + ncols_);
        return out;
    }

    i64 modulus() const { return pe_; }

private:
    void drain() {
        while (!queue_.empty()) {
            std::vector<i64> r = std::move(queue_.back());
            queue_.pop_back();
            place(std::move(r));
        }
    }

    void place(std::vector<i64> r) {
        for (int c = 0; c < ncols_; ++c) {
            if (r[c] == 0) continue;
            int v = valuation(r[c], p_);
            int pr = pivot_[c];
            if (pr >= 0) {
                auto& P = rows_[pr];
                int k = valuation(P[c], p_);
                if (v >= k) {
                    i64 f = r[c] / P[c];
                    for (int j = c; j <= ncols_; ++j)
                        if (P[j]) r[j] = posmod(r[j] - f * P[j], pe_);
                    continue;
                }
                normalize(r, c, v);
                std::vector<i64> old = std::move(P);
                i64 f = old[c] / r[c];
                for (int j = c; j <= ncols_; ++j)
                    if (r[j]) old[j] = posmod(old[j] - f * r[j], pe_);
                P = r;
                queue_.push_back(std::move(old));
                push_annihilated(P, v);
                return;
            }
            normalize(r, c, v);
            pivot_[c] = static_cast<int>(rows_.size());
            rows_.push_back(r);
            push_annihilated(rows_.back(), v);
            return;
        }
        if (r[ncols_] != 0) inconsistent_ = true;
    }

    void normalize(std::vector<i64>& r, int c, int v) {
        i64 pv = ipow(p_, v);
        i64 unit = r[c] / pv;
        i64 u = inv_mod(unit, pe_);
        for (int j = c; j <= ncols_; ++j)
            if (r[j]) r[j] = r[j] * u % pe_;
    }

    void push_annihilated(const std::vector<i64>& r, int v) {
        if (v == 0) return;
        i64 f = ipow(p_, e_ - v);
        std::vector<i64> s(ncols_ + 1, 0);
        bool any = false;
        for (int j = 0; j <= ncols_; ++j) {
            s[j] = r[j] * f % pe_;
            any = any || s[j];
        }
        if (any) queue_.push_back(std::move(s));
    }

    i64 p_;
    int e_;
    i64 pe_;
    int ncols_;
    std::vector<int> pivot_;
    std::vector<std::vector<i64>> rows_;
    std::vector<std::vector<i64>> queue_;
    bool inconsistent_ = false;
};

// Solve A x = b over Z/M by CRT over the prime-power factors of M.
// Rows are produced on demand by `emit(sink)` so that each local solve
// sees the same system without materializing it twice.
template <class Emit>
std::optional<std::vector<i64>> solve_mod(int ncols, i64 M, Emit&& emit) {
    std::vector<i64> x(ncols, 0);
    i64 acc_mod = 1;
    for (auto [p, e] : factorize(M)) {
        LocalEchelon ech(p, e, ncols);
        emit([&](const SparseRow& row, i64 rhs) { ech.insert(row, rhs); });
        if (ech.inconsistent()) return std::nullopt;
        auto sol = ech.solve();
        if (!sol) return std::nullopt;
        i64 pe = ech.modulus();
        // combine x (mod acc_mod) with sol (mod pe)
        i64 inv = inv_mod(acc_mod % pe, pe);
        for (int j = 0; j < ncols; ++j) {
            i64 t = posmod(((*sol)[j] - x[j]) % pe * inv, pe);
            x[j] = x[j] + acc_mod * t;
        }
        acc_mod *= pe;
    }
    for (auto& v : x) v = posmod(v, M);
    return x;
}

// Smith form over Z/p^e: returns the diagonal valuations (e meaning zero) and
// the column transform B with A*B equivalent to the diagonal form by rows.
struct LocalSmith {
    std::vector<int> diag_val;            // one per column
    std::vector<std::vector<i64>> B;      // ncols x ncols, column i pairs with diag_val[i]
};

inline LocalSmith local_smith(std::vector<std::vector<i64>> A, int ncols, i64 p, int e) {
    i64 pe = ipow(p, e);
    int nrows = static_cast<int>(A.size());
    std::vector<std::vector<i64>> B(ncols, std::vector<i64>(ncols, 0));
    for (int i = 0; i < ncols; ++i) B[i][i] = 1;
    LocalSmith out;
    out.diag_val.assign(ncols, e);
    int t = 0;
    for (; t < std::min(nrows, ncols); ++t) {
        int br = -1, bc = -1, bv = e;
        for (int r = t; r < nrows && bv > 0; ++r)
            for (int c = t; c < ncols; ++c) {
                if (A[r][c] == 0) continue;
                int v = valuation(A[r][c], p);
                if (v < bv) {
                    bv = v;
                    br = r;
                    bc = c;
                    if (v == 0) break;
                }
            }
        if (br < 0) break;
        std::swap(A[t], A[br]);
        if (bc != t) {
            for (auto& row : A) std::swap(row[t], row[bc]);
            for (auto& row : B) std::swap(row[t], row[bc]);
        }
        i64 pv = ipow(p, bv);
        i64 u = inv_mod(A[t][t] / pv, pe);
        for (int c = t; c < ncols; ++c) A[t][c] = A[t][c] * u % pe;
        for (int r = t + 1; r < nrows; ++r) {
            if (A[r][t] == 0) continue;
            i64 f = A[r][t] / pv;
            for (int c = t; c < ncols; ++c)
                if (A[t][c]) A[r][c] = posmod(A[r][c] - f * A[t][c], pe);
        }
        for (int c = t + 1; c < ncols; ++c) {
            if (A[t][c] == 0) continue;
            i64 f = A[t][c] / pv;
            // column c -= f * column t, applied to A (only row t is nonzero in column t now) and B
            A[t][c] = 0;
            for (int r = 0; r < ncols; ++r)
                if (B[r][t]) B[r][c] = posmod(B[r][c] - f * B[r][t], pe);
        }
        out.diag_val[t] = bv;
    }
    out.B = std::move(B);
    return out;
}

}  // namespace hopfgal
