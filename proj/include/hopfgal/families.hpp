#pragma once
// The concrete families: H_{zeta,lambda} of dimension p^3, B_lambda and A_l
// of dimension pq^2, the Kac-Paljutkin algebra H_8, and the closed-form
// 3-cocycles attached to them.

#include <map>

#include "bicrossed.hpp"
#include "cohomology.hpp"

namespace hopfgal {

enum class Family { Appp, Bpqq, Apqq, H8 };

struct FamilyParams {
    Family family = Family::Appp;
    int p = 3, q = 0;
    i64 zeta_exp = 1, lambda_exp = 0;  // appp
    i64 m = 0, lam = 0;                // bpqq, together with zeta_exp
    i64 h = 0, t = 0, l = 0, eta_exp = 1;  // apqq
    int h8_choice = 0;                 // index into the valid H_8 cocycle pairs

    std::string spec() const {
        std::ostringstream os;
        switch (family) {
            case Family::Appp:
                os << "appp:p=" << p << ",zeta=" << zeta_exp << ",lambda=" << lambda_exp;
                break;
            case Family::Bpqq:
                os << "bpqq:p=" << p << ",q=" << q << ",m=" << m << ",lam=" << lam << ",zeta=" << zeta_exp;
                break;
            case Family::Apqq:
                os << "apqq:p=" << p << ",q=" << q << ",h=" << h << ",t=" << t << ",l=" << l << ",eta=" << eta_exp;
                break;
            case Family::H8:
                os << "h8";
                if (h8_choice) os << ":choice=" << h8_choice;
                break;
        }
        return os.str();
    }
};

// Quadratic nonresidue: smallest one modulo the odd prime p.
inline i64 quadratic_nonresidue(int p) {
    for (i64 t = 2; t < p; ++t)
        if (pow_mod(t, (p - 1) / 2, p) == p - 1) return t;
    throw DomainError("no quadratic nonresidue");
}

// Smallest element of multiplicative order k modulo n.
inline i64 smallest_of_order(i64 k, i64 n) {
    for (i64 a = 2; a < n; ++a)
        if (mult_order(a, n) == k) return a;
    throw DomainError("no element of order " + std::to_string(k) + " modulo " + std::to_string(n));
}

inline void validate(const FamilyParams& fp) {
    switch (fp.family) {
        case Family::Appp:
            if (!is_prime(fp.p) || fp.p == 2) throw DomainError("p must be an odd prime");
            if (fp.zeta_exp < 0 || fp.zeta_exp >= fp.p || fp.lambda_exp < 0 || fp.lambda_exp >= fp.p)
                throw DomainError("zeta and lambda exponents must lie in 0..p-1");
            break;
        case Family::Bpqq:
            check_bgroup_params(fp.p, fp.q, fp.m, fp.lam);
            if (fp.zeta_exp <= 0 || fp.zeta_exp >= fp.q) throw DomainError("zeta must be a primitive q-th root");
            break;
        case Family::Apqq:
            check_agroup_params(fp.p, fp.q, fp.t, fp.h);
            if (fp.l < 0 || fp.l >= fp.q) throw DomainError("l must lie in 0..q-1");
            if (fp.eta_exp <= 0 || fp.eta_exp >= fp.q) throw DomainError("eta must be a primitive q-th root");
            break;
        case Family::H8:
            if (fp.h8_choice < 0) throw DomainError("h8 choice must be nonnegative");
            break;
    }
}

// "appp:p=3,zeta=1,lambda=1", "bpqq:p=2,q=3,m=2,lam=0,zeta=1",
// "apqq:p=3,q=2,h=2,t=2,l=0,eta=1", "h8" (optionally "h8:choice=k").
inline FamilyParams parse_family(const std::string& spec) {
    FamilyParams fp;
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    std::map<std::string, i64> kv;
    if (colon != std::string::npos) {
        std::string rest = spec.substr(colon + 1);
        size_t pos = 0;
        while (pos <= rest.size() && !rest.empty()) {
            size_t comma = rest.find(',', pos);
            std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0) throw ParseError("expected key=value in '" + item + "'");
            std::string key = item.substr(0, eq), val = item.substr(eq + 1);
            try {
                size_t used = 0;
                i64 v = std::stoll(val, &used);
                if (used != val.size()) throw ParseError("bad integer '" + val + "'");
                if (!kv.emplace(key, v).second) throw ParseError("duplicate key '" + key + "'");
            } catch (const std::logic_error&) {
                throw ParseError("bad integer '" + val + "'");
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    auto take = [&](const char* key, bool required, i64 dflt) {
        auto it = kv.find(key);
        if (it == kv.end()) {
            if (required) throw ParseError(std::string("missing parameter '") + key + "'");
            return dflt;
        }
        i64 v = it->second;
        kv.erase(it);
        return v;
    };
    if (head == "appp") {
        fp.family = Family::Appp;
        fp.p = static_cast<int>(take("p", true, 0));
        fp.zeta_exp = take("zeta", false, 1);
        fp.lambda_exp = take("lambda", false, 0);
    } else if (head == "bpqq") {
        fp.family = Family::Bpqq;
        fp.p = static_cast<int>(take("p", true, 0));
        fp.q = static_cast<int>(take("q", true, 0));
        if (fp.p < 2 || fp.q < 2) throw DomainError("p and q must be primes");
        fp.m = take("m", false, 0);
        if (!fp.m && is_prime(fp.q) && fp.q % fp.p == 1) fp.m = smallest_of_order(fp.p, fp.q);
        fp.lam = take("lam", false, 0);
        fp.zeta_exp = take("zeta", false, 1);
    } else if (head == "apqq") {
        fp.family = Family::Apqq;
        fp.p = static_cast<int>(take("p", true, 0));
        fp.q = static_cast<int>(take("q", true, 0));
        if (fp.p < 2 || fp.q < 2) throw DomainError("p and q must be primes");
        bool ok = is_prime(fp.p) && is_prime(fp.q) && fp.p % fp.q == 1;
        fp.h = take("h", false, ok ? smallest_of_order(fp.q, fp.p) : 0);
        fp.t = take("t", false, ok ? smallest_of_order(fp.q, fp.p) : 0);
        fp.l = take("l", false, 0);
        fp.eta_exp = take("eta", false, 1);
    } else if (head == "h8") {
        fp.family = Family::H8;
        fp.p = 2;
        fp.h8_choice = static_cast<int>(take("choice", false, 0));
    } else {
        throw ParseError("unknown family '" + head + "'");
    }
    if (!kv.empty()) throw ParseError("unknown parameter '" + kv.begin()->first + "'");
    validate(fp);
    return fp;
}

struct FamilyData {
    FamilyParams params;
    MatchedPair mp;
    CocyclePair cp;
    BicrossedProduct hopf;
    DoubleGroup dg;
};

// Floor of N / d for nonnegative N.
inline i64 gauss(i64 N, i64 d) { return N / d; }

inline i64 binom2(i64 n) { return n * (n - 1) / 2; }

// ---------------------------------------------------------------------------
// p^3: F = <a, b> = Z_p^2, Gamma = <x> = Z_p, x |> a = a, x |> b = ab.

inline MatchedPair ppp_matched_pair(int p) {
    GroupPtr F = direct_product(*cyclic_group(p), *cyclic_group(p));
    GroupPtr Gm = cyclic_group(p);
    std::vector<std::string> fl, gl;
    for (int u = 0; u < p * p; ++u) fl.push_back(detail::join_mono({detail::mono("a", u % p), detail::mono("b", u / p)}));
    for (int n = 0; n < p; ++n) gl.push_back(detail::join_mono({detail::mono("x", n)}));
    F = make_group(p * p, [&](int u, int v) { return F->mul(u, v); }, fl, F->spec());
    Gm = make_group(p, [&](int u, int v) { return Gm->mul(u, v); }, gl, Gm->spec());
    return make_matched_pair(
        F, Gm, [p](int n, int u) { return (u % p + n * (u / p)) % p + p * (u / p); }, [](int n, int) { return n; });
}

inline CocyclePair ppp_cocycle_pair(const MatchedPair& mp, int p, i64 zeta_exp, i64 lambda_exp) {
    CocyclePair cp(mp, p);
    for (int n = 0; n < p; ++n)
        for (int u = 0; u < p * p; ++u)
            for (int v = 0; v < p * p; ++v) {
                i64 j = u / p, i2 = v % p, j2 = v / p;
                cp.set_sigma(n, u, v, zeta_exp * (-n * j * i2 - binom2(n) * j * j2));
            }
    for (int u = 0; u < p * p; ++u)
        for (int n = 0; n < p; ++n)
            for (int k = 0; k < p; ++k) cp.set_tau(u, n, k, lambda_exp * (u / p) * gauss(n + k, p));
    return cp;
}

// omega(a^i b^j x^n, a^i' b^j' x^n', a^i'' b^j'' x^n'') on ut3:p.
inline Cochain build_omega_zeta_lambda(int p, i64 zeta_exp, i64 lambda_exp) {
    GroupPtr G = ut3_group(p);
    int n = G->order(), p2 = p * p;
    Cochain w(3, G, p);
    for (int A = 0; A < n; ++A) {
        i64 xn = A / p2;
        for (int B = 0; B < n; ++B) {
            i64 j1 = B / p % p, n1 = B / p2;
            for (int C = 0; C < n; ++C) {
                i64 i2 = C % p, j2 = C / p % p;
                i64 e = zeta_exp * (-xn * j1 * (i2 + n1 * j2) - binom2(xn) * j1 * j2) +
                        lambda_exp * j2 * gauss(xn + n1, p);
                w.set(A, B, C, e);
            }
        }
    }
    return w;
}

// ---------------------------------------------------------------------------
// pq^2, B family: F = <g> = Z_p, Gamma = <a, b> = Z_q^2,
// a <| g^-1 = a^m, b <| g^-1 = b^(m^lambda), trivial |>.

inline MatchedPair bpqq_matched_pair(int p, int q, i64 m, i64 lam) {
    std::vector<std::string> fl, gl;
    for (int k = 0; k < p; ++k) fl.push_back(detail::join_mono({detail::mono("g", k)}));
    for (int u = 0; u < q * q; ++u) gl.push_back(detail::join_mono({detail::mono("a", u % q), detail::mono("b", u / q)}));
    GroupPtr F = make_group(p, [p](int a, int b) { return (a + b) % p; }, fl, "cyclic:" + std::to_string(p));
    GroupPtr Gm = make_group(
        q * q, [q](int u, int v) { return (u % q + v % q) % q + q * ((u / q + v / q) % q); }, gl,
        "product:cyclic:" + std::to_string(q) + ";cyclic:" + std::to_string(q));
    i64 minv = inv_mod(m, q);
    return make_matched_pair(
        F, Gm, [](int, int k) { return k; },
        [=](int u, int k) {
            i64 i = u % q, j = u / q;
            return static_cast<int>(i * pow_mod(minv, k, q) % q + q * (j * pow_mod(minv, lam * k, q) % q));
        });
}

// c_t(n) = 1 + n + ... + n^(t-1) modulo q.
inline i64 geometric_sum(i64 n, i64 t, i64 q) {
    i64 s = 0, pw = 1;
    for (i64 k = 0; k < t; ++k) {
        s = (s + pw) % q;
        pw = pw * posmod(n, q) % q;
    }
    return s;
}

// The per-component root exponent zeta_t for the factor set u^{jk}. The
// base of c_t is read as m^-(lambda+1), the inverse of m^(lambda+1) modulo q,
// which is the reading that satisfies the compatibility condition with the
// action a <| g^-1 = a^m.
inline i64 bpqq_zeta_t(int q, i64 m, i64 lam, i64 zeta_exp, i64 t) {
    i64 base = inv_mod(pow_mod(m, lam + 1, q), q);
    return posmod(zeta_exp * geometric_sum(base, t, q), q);
}

inline CocyclePair bpqq_cocycle_pair(const MatchedPair& mp, int p, int q, i64 m, i64 lam, i64 zeta_exp,
                                     bool literal_base = false) {
    CocyclePair cp(mp, q);
    for (int k = 0; k < p; ++k) {
        i64 zt = literal_base ? posmod(zeta_exp * geometric_sum(pow_mod(m, lam + 1, q), k, q), q)
                              : bpqq_zeta_t(q, m, lam, zeta_exp, k);
        for (int s = 0; s < q * q; ++s)
            for (int t = 0; t < q * q; ++t) {
                i64 j = s / q, i2 = t % q;
                cp.set_tau(k, s, t, zt * j * i2);
            }
    }
    return cp;
}

// ---------------------------------------------------------------------------
// pq^2, A family: F' = <g> = Z_q, Gamma' = <a, b>, a b a^-1 = b^t, a^q = b^p = 1;
// a <| g = a, b <| g = b^h, trivial |>. Gamma' element b^j a^i has index j + p i.

inline MatchedPair apqq_matched_pair(int p, int q, i64 t, i64 h) {
    std::vector<std::string> fl, gl;
    for (int k = 0; k < q; ++k) fl.push_back(detail::join_mono({detail::mono("g", k)}));
    for (int u = 0; u < p * q; ++u) gl.push_back(detail::join_mono({detail::mono("b", u % p), detail::mono("a", u / p)}));
    GroupPtr F = make_group(q, [q](int a, int b) { return (a + b) % q; }, fl, "cyclic:" + std::to_string(q));
    GroupPtr Gm = make_group(
        p * q,
        [=](int u, int v) {
            i64 j = u % p, i = u / p, j2 = v % p, i2 = v / p;
            return static_cast<int>((j + j2 * pow_mod(t, i, p)) % p + p * ((i + i2) % q));
        },
        gl);
    return make_matched_pair(
        F, Gm, [](int, int k) { return k; },
        [=](int u, int k) {
            i64 j = u % p, i = u / p;
            return static_cast<int>(j * pow_mod(h, k, p) % p + p * i);
        });
}

inline CocyclePair apqq_cocycle_pair(const MatchedPair& mp, int p, int q, i64 l, i64 eta_exp) {
    CocyclePair cp(mp, q);
    for (int s = 0; s < p * q; ++s) {
        i64 i = s / p;
        for (int n = 0; n < q; ++n)
            for (int n2 = 0; n2 < q; ++n2) cp.set_sigma(s, n, n2, eta_exp * l * i * gauss(n + n2, q));
    }
    return cp;
}

// upsilon(g^n b^j a^i, g^n' ..., g^n'' ...) = eta^{l i [(n'+n'')/q]} on agroup:p,q,t,h.
inline Cochain build_upsilon(int p, int q, i64 h, i64 t, i64 l, i64 eta_exp) {
    GroupPtr G = agroup(p, q, t, h);
    int n = G->order();
    Cochain w(3, G, q);
    for (int A = 0; A < n; ++A) {
        i64 i = A / (q * p);
        for (int B = 0; B < n; ++B)
            for (int C = 0; C < n; ++C) w.set(A, B, C, eta_exp * l * i * gauss(B % q + C % q, q));
    }
    return w;
}

// ---------------------------------------------------------------------------
// H_8: F = <a, b> = Z_2^2, Gamma = <t> = Z_2, t |> a = b, t |> b = a, trivial <|.
// The cocycle pair is found by search among normalized pairs with values in
// fourth roots of unity, keeping those whose product is noncommutative.

inline MatchedPair h8_matched_pair() {
    std::vector<std::string> fl{"e", "a", "b", "a b"}, gl{"e", "t"};
    GroupPtr F = make_group(4, [](int u, int v) { return u ^ v; }, fl, "product:cyclic:2;cyclic:2");
    GroupPtr Gm = make_group(2, [](int u, int v) { return u ^ v; }, gl, "cyclic:2");
    return make_matched_pair(
        F, Gm, [](int s, int u) { return s ? ((u & 1) << 1 | (u >> 1)) : u; }, [](int s, int) { return s; });
}

inline bool is_commutative(const BicrossedProduct& B) {
    for (int i = 0; i < B.dim; ++i)
        for (int j = i + 1; j < B.dim; ++j) {
            auto x = B.mult(i, j), y = B.mult(j, i);
            if (x.has_value() != y.has_value()) return false;
            if (x && (x->index != y->index || posmod(x->exp - y->exp, B.cp.modulus) != 0)) return false;
        }
    return true;
}

inline bool is_cocommutative(const BicrossedProduct& B) {
    for (int i = 0; i < B.dim; ++i) {
        std::map<std::pair<int, int>, i64> fwd, rev;
        for (auto& t : B.comult(i)) {
            fwd[{t.left, t.right}] = posmod(t.exp, B.cp.modulus);
            rev[{t.right, t.left}] = posmod(t.exp, B.cp.modulus);
        }
        if (fwd != rev) return false;
    }
    return true;
}

// All valid cocycle pairs on the H_8 matched pair at modulus 4 whose
// bicrossed product is noncommutative and noncocommutative, in search order.
inline std::vector<CocyclePair> h8_cocycle_pairs(const MatchedPair& mp) {
    std::vector<CocyclePair> out;
    const int M = 4;
    // free entries: sigma_t(x, y) for x, y != e (9) and tau_x(t, t) for x != e (3)
    std::vector<std::pair<int, int>> sig_slots;
    for (int x = 1; x < 4; ++x)
        for (int y = 1; y < 4; ++y) sig_slots.emplace_back(x, y);
    // Cocycle conditions kill most assignments; enumerate the sigma part first.
    int total_sig = 1;
    for (size_t k = 0; k < sig_slots.size(); ++k) total_sig *= M;
    std::vector<CocyclePair> sig_ok;
    for (int code = 0; code < total_sig; ++code) {
        CocyclePair cp(mp, M);
        int c = code;
        for (auto [x, y] : sig_slots) {
            cp.set_sigma(1, x, y, c % M);
            c /= M;
        }
        auto rep = verify_cocycle_pair(mp, cp);
        if (!rep[0].pass || !rep[2].pass) continue;  // sigma normalized and sigma cocycle
        sig_ok.push_back(cp);
    }
    for (auto& base : sig_ok)
        for (int code = 0; code < M * M * M; ++code) {
            CocyclePair cp = base;
            int c = code;
            for (int x = 1; x < 4; ++x) {
                cp.set_tau(x, 1, 1, c % M);
                c /= M;
            }
            if (!all_pass(verify_cocycle_pair(mp, cp))) continue;
            BicrossedProduct B{mp, cp, 8, std::nullopt};
            if (is_commutative(B) || is_cocommutative(B)) continue;
            out.push_back(cp);
        }
    return out;
}

// ---------------------------------------------------------------------------

inline FamilyData build_family(const FamilyParams& fp) {
    validate(fp);
    FamilyData d;
    d.params = fp;
    switch (fp.family) {
        case Family::Appp:
            d.mp = ppp_matched_pair(fp.p);
            d.cp = ppp_cocycle_pair(d.mp, fp.p, fp.zeta_exp, fp.lambda_exp);
            break;
        case Family::Bpqq:
            d.mp = bpqq_matched_pair(fp.p, fp.q, fp.m, fp.lam);
            d.cp = bpqq_cocycle_pair(d.mp, fp.p, fp.q, fp.m, fp.lam, fp.zeta_exp);
            break;
        case Family::Apqq:
            d.mp = apqq_matched_pair(fp.p, fp.q, fp.t, fp.h);
            d.cp = apqq_cocycle_pair(d.mp, fp.p, fp.q, fp.l, fp.eta_exp);
            break;
        case Family::H8: {
            d.mp = h8_matched_pair();
            auto all = h8_cocycle_pairs(d.mp);
            if (fp.h8_choice >= static_cast<int>(all.size()))
                throw DomainError("h8 choice out of range (" + std::to_string(all.size()) + " pairs)");
            d.cp = all[fp.h8_choice];
            break;
        }
    }
    d.hopf = build_bicrossed(d.mp, d.cp);
    d.dg = double_group(d.mp);
    return d;
}

// ---------------------------------------------------------------------------
// Cyclic 3-cocycles on cyclic:N with generator 1.

enum class CyclicVariant { Standard, Tilde };

inline Cochain build_cyclic_cocycle(int N, i64 exp, CyclicVariant variant) {
    GroupPtr L = cyclic_group(N);
    if (variant == CyclicVariant::Standard) return cyclic_standard_cocycle(L, N > 1 ? 1 : 0, exp, N);
    Cochain w(3, L, N);
    for (i64 n = 0; n < N; ++n)
        for (i64 m = 0; m < N; ++m)
            for (i64 l = 0; l < N; ++l)
                w.set(static_cast<int>(n), static_cast<int>(m), static_cast<int>(l),
                      exp * m * (n * binom2(l) + l * binom2(n) + n * m * l));
    return w;
}

// d = (N-1) N (2N-1) / 6, the exponent relating the two cyclic families.
inline i64 tilde_factor(i64 N) { return (N - 1) * N * (2 * N - 1) / 6; }

}  // namespace hopfgal
