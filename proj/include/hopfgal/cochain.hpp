#pragma once
// Normalized cochains with values in Z/M, read as exponents of a fixed
// primitive M-th root of unity.

#include <cstdint>
#include <json.hpp>
#include <random>

#include "group.hpp"

namespace hopfgal {

class Cochain {
public:
    Cochain() = default;
    Cochain(int degree, GroupPtr group, i64 modulus) : deg_(degree), group_(std::move(group)), mod_(modulus) {
        if (deg_ < 0 || deg_ > 3) throw DomainError("cochain degree must be 0..3");
        if (mod_ < 1) throw DomainError("cochain modulus must be positive");
        size_t n = group_->order(), sz = 1;
        for (int i = 0; i < deg_; ++i) sz *= n;
        vals_.assign(sz, 0);
    }

    int degree() const { return deg_; }
    i64 modulus() const { return mod_; }
    const FiniteGroup& group() const { return *group_; }
    const GroupPtr& group_ptr() const { return group_; }
    const std::vector<std::uint32_t>& values() const { return vals_; }

    i64 operator()(int a) const { return vals_[a]; }
    i64 operator()(int a, int b) const { return vals_[static_cast<size_t>(a) * n() + b]; }
    i64 operator()(int a, int b, int c) const { return vals_[(static_cast<size_t>(a) * n() + b) * n() + c]; }

    void set(int a, i64 v) { vals_[a] = static_cast<std::uint32_t>(posmod(v, mod_)); }
    void set(int a, int b, i64 v) { vals_[static_cast<size_t>(a) * n() + b] = static_cast<std::uint32_t>(posmod(v, mod_)); }
    void set(int a, int b, int c, i64 v) {
        vals_[(static_cast<size_t>(a) * n() + b) * n() + c] = static_cast<std::uint32_t>(posmod(v, mod_));
    }
    void set_flat(size_t i, i64 v) { vals_[i] = static_cast<std::uint32_t>(posmod(v, mod_)); }

    bool is_zero() const {
        for (auto v : vals_)
            if (v) return false;
        return true;
    }

    bool is_normalized() const {
        int e = group_->identity(), N = n();
        for (size_t i = 0; i < vals_.size(); ++i) {
            if (!vals_[i]) continue;
            size_t r = i;
            for (int k = 0; k < deg_; ++k) {
                if (static_cast<int>(r % N) == e) return false;
                r /= N;
            }
        }
        return true;
    }

    // Same root of unity read in a modulus that M divides.
    Cochain lifted(i64 new_mod) const {
        if (new_mod % mod_ != 0) throw DomainError("lift modulus must be a multiple of the cochain modulus");
        Cochain out(deg_, group_, new_mod);
        i64 f = new_mod / mod_;
        for (size_t i = 0; i < vals_.size(); ++i) out.vals_[i] = static_cast<std::uint32_t>(vals_[i] * f);
        return out;
    }

    bool operator==(const Cochain& o) const {
        return deg_ == o.deg_ && mod_ == o.mod_ && group_->order() == o.group_->order() && vals_ == o.vals_;
    }

    Cochain& operator+=(const Cochain& o) {
        check_same(o);
        for (size_t i = 0; i < vals_.size(); ++i) vals_[i] = static_cast<std::uint32_t>((vals_[i] + o.vals_[i]) % mod_);
        return *this;
    }
    Cochain& operator-=(const Cochain& o) {
        check_same(o);
        for (size_t i = 0; i < vals_.size(); ++i)
            vals_[i] = static_cast<std::uint32_t>((vals_[i] + mod_ - o.vals_[i]) % mod_);
        return *this;
    }
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    Cochain operator-() const {
        Cochain out(deg_, group_, mod_);
        for (size_t i = 0; i < vals_.size(); ++i) out.vals_[i] = static_cast<std::uint32_t>((mod_ - vals_[i]) % mod_);
        return out;
    }
    Cochain scaled(i64 k) const {
        Cochain out(deg_, group_, mod_);
        for (size_t i = 0; i < vals_.size(); ++i) out.vals_[i] = static_cast<std::uint32_t>(posmod(k * vals_[i], mod_));
        return out;
    }

private:
    int n() const { return group_->order(); }
    void check_same(const Cochain& o) const {
        if (deg_ != o.deg_ || mod_ != o.mod_ || group_->order() != o.group_->order())
            throw DomainError("cochains live in different spaces");
    }

    int deg_ = 0;
    GroupPtr group_;
    i64 mod_ = 1;
    std::vector<std::uint32_t> vals_;
};

// Bring two cochains to a common modulus.
inline std::pair<Cochain, Cochain> common_modulus(const Cochain& a, const Cochain& b) {
    i64 M = lcm64(a.modulus(), b.modulus());
    return {a.lifted(M), b.lifted(M)};
}

inline Cochain coboundary(const Cochain& c) {
    const FiniteGroup& G = c.group();
    int n = G.order();
    Cochain d(c.degree() + 1, c.group_ptr(), c.modulus());
    switch (c.degree()) {
        case 0:
            break;
        case 1:
            for (int g = 0; g < n; ++g)
                for (int h = 0; h < n; ++h) d.set(g, h, c(h) - c(G.mul(g, h)) + c(g));
            break;
        case 2:
            for (int g = 0; g < n; ++g)
                for (int h = 0; h < n; ++h) {
                    int gh = G.mul(g, h);
                    for (int k = 0; k < n; ++k)
                        d.set(g, h, k, c(h, k) - c(gh, k) + c(g, G.mul(h, k)) - c(g, h));
                }
            break;
        default:
            throw DomainError("coboundary is implemented for degrees 0..2");
    }
    return d;
}

// The cocycle identity, checked with the last argument restricted to the
// identity and a generating set; the full identity follows by induction on
// word length of the last argument.
inline bool is_cocycle(const Cochain& c) {
    const FiniteGroup& G = c.group();
    int n = G.order();
    i64 M = c.modulus();
    std::vector<int> last = generating_set(G);
    last.push_back(G.identity());
    switch (c.degree()) {
        case 1:
            for (int g = 0; g < n; ++g)
                for (int s : last)
                    if (posmod(c(s) - c(G.mul(g, s)) + c(g), M)) return false;
            return true;
        case 2:
            for (int g = 0; g < n; ++g)
                for (int h = 0; h < n; ++h) {
                    int gh = G.mul(g, h);
                    for (int s : last)
                        if (posmod(c(h, s) - c(gh, s) + c(g, G.mul(h, s)) - c(g, h), M)) return false;
                }
            return true;
        case 3:
            for (int g = 0; g < n; ++g)
                for (int h = 0; h < n; ++h) {
                    int gh = G.mul(g, h);
                    for (int k = 0; k < n; ++k) {
                        int hk = G.mul(h, k);
                        for (int s : last) {
                            i64 v = c(h, k, s) - c(gh, k, s) + c(g, hk, s) - c(g, h, G.mul(k, s)) + c(g, h, k);
                            if (posmod(v, M)) return false;
                        }
                    }
                }
            return true;
        default:
            return true;
    }
}

// The subgroup as a group in its own right, indexed by position in L.elements.
inline GroupPtr subgroup_group(const FiniteGroup& G, const Subgroup& L) {
    std::vector<std::string> labels;
    for (int x : L.elements) labels.push_back(G.label(x));
    return make_group(
        L.order(), [&](int a, int b) { return L.index_of(G.mul(L.elements[a], L.elements[b])); }, labels);
}

inline Cochain restrict_to(const Cochain& c, const Subgroup& L, GroupPtr Lgroup = nullptr) {
    if (!Lgroup) Lgroup = subgroup_group(c.group(), L);
    int m = L.order();
    Cochain r(c.degree(), Lgroup, c.modulus());
    const auto& E = L.elements;
    switch (c.degree()) {
        case 1:
            for (int a = 0; a < m; ++a) r.set(a, c(E[a]));
            break;
        case 2:
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) r.set(a, b, c(E[a], E[b]));
            break;
        case 3:
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b)
                    for (int d = 0; d < m; ++d) r.set(a, b, d, c(E[a], E[b], E[d]));
            break;
        default:
            break;
    }
    return r;
}

// Pull back a 2-cochain on L along conjugation by g: the result lives on
// g^-1 L g and takes (s, t) to beta(g s g^-1, g t g^-1).
struct ConjugatedCochain {
    Subgroup subgroup;
    Cochain cochain;
};

inline ConjugatedCochain conj_cochain(const FiniteGroup& G, const Subgroup& L, const Cochain& beta, int g) {
    Subgroup target = conjugate(G, L, G.inv(g));
    GroupPtr Tg = subgroup_group(G, target);
    int m = target.order();
    Cochain out(beta.degree(), Tg, beta.modulus());
    std::vector<int> img(m);
    for (int a = 0; a < m; ++a) img[a] = L.index_of(G.conj(g, target.elements[a]));
    if (beta.degree() == 2) {
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) out.set(a, b, beta(img[a], img[b]));
    } else if (beta.degree() == 1) {
        for (int a = 0; a < m; ++a) out.set(a, beta(img[a]));
    } else {
        throw DomainError("conj_cochain expects degree 1 or 2");
    }
    return {std::move(target), std::move(out)};
}

// Omega_g(a, b) = w(gag^-1, gbg^-1, g) + w(g, a, b) - w(gag^-1, g, b).
inline Cochain omega_g(const Cochain& omega, int g) {
    const FiniteGroup& G = omega.group();
    int n = G.order();
    Cochain out(2, omega.group_ptr(), omega.modulus());
    for (int a = 0; a < n; ++a) {
        int ca = G.conj(g, a);
        for (int b = 0; b < n; ++b) out.set(a, b, omega(ca, G.conj(g, b), g) + omega(g, a, b) - omega(ca, g, b));
    }
    return out;
}

inline Cochain random_cochain(int degree, GroupPtr G, i64 M, std::mt19937_64& rng) {
    Cochain c(degree, G, M);
    std::uniform_int_distribution<i64> dist(0, M - 1);
    int n = G->order(), e = G->identity();
    size_t sz = c.values().size();
    for (size_t i = 0; i < sz; ++i) {
        size_t r = i;
        bool touches_identity = false;
        for (int k = 0; k < degree; ++k) {
            touches_identity = touches_identity || static_cast<int>(r % n) == e;
            r /= n;
        }
        if (!touches_identity) c.set_flat(i, dist(rng));
    }
    return c;
}

inline nlohmann::json to_json(const Cochain& c) {
    return {{"degree", c.degree()},
            {"modulus", c.modulus()},
            {"group_spec", c.group().spec()},
            {"values", c.values()}};
}

inline Cochain cochain_from_json(const nlohmann::json& j) {
    GroupPtr G = build_group(j.at("group_spec").get<std::string>());
    Cochain c(j.at("degree").get<int>(), G, j.at("modulus").get<i64>());
    auto vals = j.at("values").get<std::vector<i64>>();
    if (vals.size() != c.values().size()) throw ParseError("cochain value table has the wrong length");
    for (size_t i = 0; i < vals.size(); ++i) c.set_flat(i, vals[i]);
    return c;
}

}  // namespace hopfgal
