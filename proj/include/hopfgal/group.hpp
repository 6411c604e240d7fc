#pragma once
// Finite groups as dense Cayley tables, subgroups, conjugacy, and the
// group-spec grammar shared with the CLI.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "modring.hpp"

namespace hopfgal {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class FiniteGroup {
public:
    FiniteGroup() = default;

    // mul is order*order, row-major: mul[g*order+h] = gh.
    FiniteGroup(int order, std::vector<int> mul, std::vector<std::string> labels = {}, std::string spec = {})
        : n_(order), mul_(std::move(mul)), labels_(std::move(labels)), spec_(std::move(spec)) {
        if (n_ <= 0 || static_cast<int>(mul_.size()) != n_ * n_)
            throw DomainError("group table has wrong size");
        id_ = -1;
        for (int e = 0; e < n_ && id_ < 0; ++e) {
            bool ok = true;
            for (int g = 0; g < n_ && ok; ++g) ok = mul_[e * n_ + g] == g && mul_[g * n_ + e] == g;
            if (ok) id_ = e;
        }
        if (id_ < 0) throw DomainError("group table has no identity");
        inv_.assign(n_, -1);
        for (int g = 0; g < n_; ++g)
            for (int h = 0; h < n_; ++h)
                if (mul_[g * n_ + h] == id_) {
                    inv_[g] = h;
                    break;
                }
        for (int g = 0; g < n_; ++g)
            if (inv_[g] < 0 || mul_[inv_[g] * n_ + g] != id_) throw DomainError("group table has no inverse");
        if (labels_.empty())
            for (int g = 0; g < n_; ++g) labels_.push_back(std::to_string(g));
    }

    int order() const { return n_; }
    int identity() const { return id_; }
    int mul(int g, int h) const { return mul_[g * n_ + h]; }
    int inv(int g) const { return inv_[g]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv_[g]); }  // g x g^-1
    const std::string& label(int g) const { return labels_[g]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& spec() const { return spec_; }
    void set_spec(std::string s) { spec_ = std::move(s); }
    const std::vector<int>& table() const { return mul_; }

    int power(int g, i64 k) const {
        int r = id_;
        for (i64 i = 0; i < k; ++i) r = mul(r, g);
        return r;
    }

    int element_order(int g) const {
        int k = 1, x = g;
        while (x != id_) {
            x = mul(x, g);
            ++k;
        }
        return k;
    }

    bool is_abelian() const {
        for (int g = 0; g < n_; ++g)
            for (int h = g + 1; h < n_; ++h)
                if (mul(g, h) != mul(h, g)) return false;
        return true;
    }

    // Exhaustive axiom scan; random sampling is not needed at the orders used here.
    bool check_axioms() const {
        for (int g = 0; g < n_; ++g)
            for (int h = 0; h < n_; ++h) {
                int gh = mul(g, h);
                for (int k = 0; k < n_; ++k)
                    if (mul(gh, k) != mul(g, mul(h, k))) return false;
            }
        for (int g = 0; g < n_; ++g)
            if (mul(id_, g) != g || mul(g, id_) != g || mul(g, inv_[g]) != id_ || mul(inv_[g], g) != id_)
                return false;
        return true;
    }

private:
    int n_ = 0;
    int id_ = 0;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
    std::string spec_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr make_group(int order, const std::function<int(int, int)>& mul,
                           std::vector<std::string> labels = {}, std::string spec = {}) {
    std::vector<int> t(static_cast<size_t>(order) * order);
    for (int g = 0; g < order; ++g)
        for (int h = 0; h < order; ++h) t[g * order + h] = mul(g, h);
    return std::make_shared<FiniteGroup>(order, std::move(t), std::move(labels), std::move(spec));
}

struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<int> elements;  // sorted

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(int g) const { return std::binary_search(elements.begin(), elements.end(), g); }
    int index_of(int g) const {
        auto it = std::lower_bound(elements.begin(), elements.end(), g);
        return (it != elements.end() && *it == g) ? static_cast<int>(it - elements.begin()) : -1;
    }
    bool operator==(const Subgroup& o) const { return elements == o.elements; }
    bool operator<(const Subgroup& o) const {
        if (elements.size() != o.elements.size()) return elements.size() < o.elements.size();
        return elements < o.elements;
    }
};

// Permutation action of actor on the elements of space.
struct GroupAction {
    const FiniteGroup* actor = nullptr;
    const FiniteGroup* space = nullptr;
    bool left = true;        // left: act(gh, x) = act(g, act(h, x)); right: act(x, gh) = act(act(x, g), h)
    std::vector<int> table;  // table[g*|space|+x]

    int operator()(int g, int x) const { return table[g * space->order() + x]; }

    bool is_valid() const {
        int na = actor->order(), ns = space->order();
        for (int g = 0; g < na; ++g) {
            std::vector<char> seen(ns, 0);
            for (int x = 0; x < ns; ++x) {
                int y = (*this)(g, x);
                if (y < 0 || y >= ns || seen[y]) return false;
                seen[y] = 1;
            }
        }
        for (int x = 0; x < ns; ++x)
            if ((*this)(actor->identity(), x) != x) return false;
        for (int g = 0; g < na; ++g)
            for (int h = 0; h < na; ++h)
                for (int x = 0; x < ns; ++x) {
                    int lhs = (*this)(actor->mul(g, h), x);
                    int rhs = left ? (*this)(g, (*this)(h, x)) : (*this)(h, (*this)(g, x));
                    if (lhs != rhs) return false;
                }
        return true;
    }
};

inline Subgroup generate(const FiniteGroup& G, const std::vector<int>& gens) {
    std::vector<char> in(G.order(), 0);
    std::vector<int> stack{G.identity()};
    in[G.identity()] = 1;
    std::vector<int> all{G.identity()};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int s : gens) {
            int y = G.mul(x, s);
            if (!in[y]) {
                in[y] = 1;
                all.push_back(y);
                stack.push_back(y);
            }
        }
    }
    std::sort(all.begin(), all.end());
    return Subgroup{&G, std::move(all)};
}

inline Subgroup whole_group(const FiniteGroup& G) {
    std::vector<int> all(G.order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup{&G, std::move(all)};
}

inline Subgroup trivial_subgroup(const FiniteGroup& G) { return Subgroup{&G, {G.identity()}}; }

inline bool is_subgroup(const FiniteGroup& G, const std::vector<int>& elems) {
    Subgroup S{&G, elems};
    std::sort(S.elements.begin(), S.elements.end());
    if (!S.contains(G.identity())) return false;
    for (int a : S.elements) {
        if (!S.contains(G.inv(a))) return false;
        for (int b : S.elements)
            if (!S.contains(G.mul(a, b))) return false;
    }
    return true;
}

inline Subgroup intersect(const Subgroup& A, const Subgroup& B) {
    Subgroup out{A.parent, {}};
    std::set_intersection(A.elements.begin(), A.elements.end(), B.elements.begin(), B.elements.end(),
                          std::back_inserter(out.elements));
    return out;
}

// g S g^-1
inline Subgroup conjugate(const FiniteGroup& G, const Subgroup& S, int g) {
    Subgroup out{&G, {}};
    out.elements.reserve(S.elements.size());
    for (int x : S.elements) out.elements.push_back(G.conj(g, x));
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

// All subgroups (or those of one order), sorted by (order, element set).
// Built as a join-closure of the cyclic subgroups, which reaches every subgroup.
inline std::vector<Subgroup> subgroups(const FiniteGroup& G, int order_filter = 0) {
    if (order_filter < 0 || (order_filter > 0 && G.order() % order_filter != 0))
        throw DomainError("subgroup order must divide the group order");
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> cyc;
    std::vector<int> cyc_gen;
    for (int g = 0; g < G.order(); ++g) {
        Subgroup c = generate(G, {g});
        if (seen.insert(c.elements).second) {
            cyc.push_back(c);
            cyc_gen.push_back(g);
        }
    }
    std::vector<Subgroup> all = cyc;
    std::vector<std::vector<int>> all_gens;
    for (int g : cyc_gen) all_gens.push_back({g});
    for (size_t i = 0; i < all.size(); ++i) {
        for (size_t c = 0; c < cyc.size(); ++c) {
            if (all[i].contains(cyc_gen[c])) continue;
            std::vector<int> gens = all_gens[i];
            gens.push_back(cyc_gen[c]);
            Subgroup j = generate(G, gens);
            if (seen.insert(j.elements).second) {
                all.push_back(std::move(j));
                all_gens.push_back(std::move(gens));
            }
        }
    }
    std::vector<Subgroup> out;
    for (auto& s : all)
        if (order_filter == 0 || s.order() == order_filter) out.push_back(std::move(s));
    std::sort(out.begin(), out.end());
    return out;
}

struct SubgroupClass {
    int representative = 0;           // index into the candidate list
    std::vector<int> members;         // candidate indices, ascending
    std::vector<int> witnesses;       // witness[i] * rep * witness[i]^-1 = members[i]
};

inline std::vector<SubgroupClass> conjugacy_classes_of_subgroups(const FiniteGroup& G,
                                                                 const std::vector<Subgroup>& candidates) {
    std::map<std::vector<int>, int> where;
    for (int i = 0; i < static_cast<int>(candidates.size()); ++i) where.emplace(candidates[i].elements, i);
    std::vector<int> cls(candidates.size(), -1);
    std::vector<SubgroupClass> out;
    for (int i = 0; i < static_cast<int>(candidates.size()); ++i) {
        if (cls[i] >= 0) continue;
        SubgroupClass c;
        c.representative = i;
        cls[i] = static_cast<int>(out.size());
        std::map<int, int> wit{{i, G.identity()}};
        for (int g = 0; g < G.order(); ++g) {
            auto it = where.find(conjugate(G, candidates[i], g).elements);
            if (it == where.end() || (cls[it->second] >= 0 && it->second != i)) continue;
            cls[it->second] = cls[i];
            wit.emplace(it->second, g);
        }
        for (auto [m, w] : wit) {
            c.members.push_back(m);
            c.witnesses.push_back(w);
        }
        out.push_back(std::move(c));
    }
    return out;
}

inline Subgroup center(const FiniteGroup& G) {
    Subgroup z{&G, {}};
    for (int x = 0; x < G.order(); ++x) {
        bool central = true;
        for (int g = 0; g < G.order() && central; ++g) central = G.mul(x, g) == G.mul(g, x);
        if (central) z.elements.push_back(x);
    }
    return z;
}

inline i64 exponent(const FiniteGroup& G) {
    i64 e = 1;
    for (int g = 0; g < G.order(); ++g) e = lcm64(e, G.element_order(g));
    return e;
}

inline i64 exponent(const FiniteGroup& G, const Subgroup& S) {
    i64 e = 1;
    for (int g : S.elements) e = lcm64(e, G.element_order(g));
    return e;
}

inline bool is_cyclic(const FiniteGroup& G, const Subgroup& S) { return exponent(G, S) == S.order(); }

inline bool is_abelian(const FiniteGroup& G, const Subgroup& S) {
    for (int a : S.elements)
        for (int b : S.elements)
            if (G.mul(a, b) != G.mul(b, a)) return false;
    return true;
}

// True iff the element-set product A*B is all of G.
inline bool product_is_whole(const FiniteGroup& G, const Subgroup& A, const Subgroup& B) {
    std::vector<char> hit(G.order(), 0);
    int count = 0;
    for (int a : A.elements)
        for (int b : B.elements) {
            int x = G.mul(a, b);
            if (!hit[x]) {
                hit[x] = 1;
                ++count;
            }
        }
    return count == G.order();
}

inline bool is_exact_factorization(const FiniteGroup& G, const Subgroup& A, const Subgroup& B) {
    return static_cast<i64>(A.order()) * B.order() == G.order() && intersect(A, B).order() == 1;
}

// A small generating set, found greedily in element order after preferring
// elements of larger order.
inline std::vector<int> generating_set(const FiniteGroup& G, const Subgroup& S) {
    std::vector<int> cand(S.elements);
    std::stable_sort(cand.begin(), cand.end(),
                     [&](int a, int b) { return G.element_order(a) > G.element_order(b); });
    std::vector<int> gens;
    Subgroup cur = trivial_subgroup(G);
    for (int g : cand) {
        if (cur.order() == S.order()) break;
        if (cur.contains(g)) continue;
        gens.push_back(g);
        cur = generate(G, gens);
    }
    return gens;
}

inline std::vector<int> generating_set(const FiniteGroup& G) { return generating_set(G, whole_group(G)); }

// Brute-force isomorphism search: map a generating set to same-order images
// and check that the induced map is a well-defined bijective homomorphism.
inline std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& A, const FiniteGroup& B) {
    if (A.order() != B.order()) return std::nullopt;
    std::vector<int> gens = generating_set(A);
    std::vector<std::vector<int>> choices;
    for (int g : gens) {
        std::vector<int> c;
        for (int h = 0; h < B.order(); ++h)
            if (B.element_order(h) == A.element_order(g)) c.push_back(h);
        choices.push_back(std::move(c));
    }
    std::vector<int> pick(gens.size(), 0);
    std::function<std::optional<std::vector<int>>(size_t)> rec = [&](size_t d) -> std::optional<std::vector<int>> {
        if (d == gens.size()) {
            std::vector<int> phi(A.order(), -1);
            phi[A.identity()] = B.identity();
            std::vector<int> order{A.identity()};
            for (size_t k = 0; k < order.size(); ++k) {
                int x = order[k];
                for (size_t i = 0; i < gens.size(); ++i) {
                    int y = A.mul(x, gens[i]);
                    int img = B.mul(phi[x], choices[i][pick[i]]);
                    if (phi[y] < 0) {
                        phi[y] = img;
                        order.push_back(y);
                    } else if (phi[y] != img) {
                        return std::nullopt;
                    }
                }
            }
            std::vector<char> used(B.order(), 0);
            for (int v : phi) {
                if (v < 0 || used[v]) return std::nullopt;
                used[v] = 1;
            }
            for (int x = 0; x < A.order(); ++x)
                for (int y = 0; y < A.order(); ++y)
                    if (phi[A.mul(x, y)] != B.mul(phi[x], phi[y])) return std::nullopt;
            return phi;
        }
        for (pick[d] = 0; pick[d] < static_cast<int>(choices[d].size()); ++pick[d])
            if (auto r = rec(d + 1)) return r;
        return std::nullopt;
    };
    return rec(0);
}

// ---------------------------------------------------------------------------
// Concrete groups

inline GroupPtr cyclic_group(int n) {
    if (n < 1) throw DomainError("cyclic group order must be positive");
    std::vector<std::string> labels;
    for (int k = 0; k < n; ++k) labels.push_back(k == 0 ? "e" : "c^" + std::to_string(k));
    return make_group(n, [n](int a, int b) { return (a + b) % n; }, labels, "cyclic:" + std::to_string(n));
}

// Index a + |A| * b for the pair (a, b).
inline GroupPtr direct_product(const FiniteGroup& A, const FiniteGroup& B) {
    int na = A.order(), nb = B.order();
    std::vector<std::string> labels;
    for (int j = 0; j < nb; ++j)
        for (int i = 0; i < na; ++i) labels.push_back("(" + A.label(i) + "," + B.label(j) + ")");
    return make_group(
        na * nb,
        [&](int x, int y) { return A.mul(x % na, y % na) + na * B.mul(x / na, y / na); },
        labels, "product:" + A.spec() + ";" + B.spec());
}

namespace detail {
inline std::string mono(const char* sym, i64 e) {
    if (e == 0) return "";
    return e == 1 ? std::string(sym) : std::string(sym) + "^" + std::to_string(e);
}
inline std::string join_mono(std::initializer_list<std::string> parts) {
    std::string s;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        if (!s.empty()) s += " ";
        s += p;
    }
    return s.empty() ? "e" : s;
}
}  // namespace detail

// a^i b^j x^n at index i + p j + p^2 n; x b x^-1 = a b, a central.
inline GroupPtr ut3_group(int p) {
    if (!is_prime(p)) throw DomainError("ut3 needs a prime");
    int n = p * p * p;
    std::vector<std::string> labels;
    for (int g = 0; g < n; ++g)
        labels.push_back(detail::join_mono(
            {detail::mono("a", g % p), detail::mono("b", g / p % p), detail::mono("x", g / (p * p))}));
    return make_group(
        n,
        [p](int u, int v) {
            int i = u % p, j = u / p % p, k = u / (p * p);
            int i2 = v % p, j2 = v / p % p, k2 = v / (p * p);
            int ni = (i + i2 + k * j2) % p;
            return ni + p * ((j + j2) % p) + p * p * ((k + k2) % p);
        },
        labels, "ut3:" + std::to_string(p));
}

// c^i d^n at index i + p^2 n, d c d^-1 = c^(1+p).
inline GroupPtr t_group(int p) {
    if (!is_prime(p)) throw DomainError("t needs a prime");
    int p2 = p * p, n = p2 * p;
    std::vector<std::string> labels;
    for (int g = 0; g < n; ++g)
        labels.push_back(detail::join_mono({detail::mono("c", g % p2), detail::mono("d", g / p2)}));
    return make_group(
        n,
        [p, p2](int u, int v) {
            int i = u % p2, k = u / p2, i2 = v % p2, k2 = v / p2;
            i64 tw = pow_mod(1 + p, k, p2);
            return static_cast<int>((i + i2 * tw) % p2) + p2 * ((k + k2) % p);
        },
        labels, "t:" + std::to_string(p));
}

// r^k s^m at index k + half*m, s r s^-1 = r^-1.
inline GroupPtr dihedral_group(int n) {
    if (n < 2 || n % 2) throw DomainError("dihedral order must be even");
    int half = n / 2;
    std::vector<std::string> labels;
    for (int g = 0; g < n; ++g)
        labels.push_back(detail::join_mono({detail::mono("r", g % half), detail::mono("s", g / half)}));
    return make_group(
        n,
        [half](int u, int v) {
            int k = u % half, m = u / half, k2 = v % half, m2 = v / half;
            int nk = static_cast<int>(posmod(k + (m ? -k2 : k2), half));
            return nk + half * ((m + m2) % 2);
        },
        labels, "dihedral:" + std::to_string(n));
}

inline void check_bgroup_params(int p, int q, i64 m, i64 lambda) {
    if (!is_prime(p) || !is_prime(q) || p == q) throw DomainError("p and q must be distinct primes");
    if (q % p != 1) throw DomainError("need q = 1 mod p");
    if (mult_order(m, q) != p) throw DomainError("m must have order p modulo q");
    if (lambda < 0 || lambda >= p) throw DomainError("lambda must lie in 0..p-1");
    if ((lambda + 1) % p == 0) throw DomainError("lambda must not be -1 mod p");
}

// g^k a^i b^j at index k + p (i + q j); a^i g^k = g^k a^(i m^-k), b^j g^k = g^k b^(j m^(-lambda k)).
inline GroupPtr bgroup(int p, int q, i64 m, i64 lambda) {
    check_bgroup_params(p, q, m, lambda);
    int n = p * q * q;
    i64 minv = inv_mod(m, q);
    std::vector<std::string> labels;
    for (int g = 0; g < n; ++g)
        labels.push_back(detail::join_mono(
            {detail::mono("g", g % p), detail::mono("a", g / p % q), detail::mono("b", g / (p * q))}));
    std::ostringstream sp;
    sp << "bgroup:" << p << "," << q << "," << m << "," << lambda;
    return make_group(
        n,
        [=](int u, int v) {
            i64 k = u % p, i = u / p % q, j = u / (p * q);
            i64 k2 = v % p, i2 = v / p % q, j2 = v / (p * q);
            i64 ni = (i * pow_mod(minv, k2, q) + i2) % q;
            i64 nj = (j * pow_mod(minv, lambda * k2, q) + j2) % q;
            return static_cast<int>((k + k2) % p + p * (ni + q * nj));
        },
        labels, sp.str());
}

inline void check_agroup_params(int p, int q, i64 t, i64 h) {
    if (!is_prime(p) || !is_prime(q) || p == q) throw DomainError("p and q must be distinct primes");
    if (p % q != 1) throw DomainError("need p = 1 mod q");
    if (mult_order(t, p) != q) throw DomainError("t must have order q modulo p");
    if (mult_order(h, p) != q) throw DomainError("h must have order q modulo p");
}

// g^n b^j a^i at index n + q (j + p i); a b a^-1 = b^t, b g = g b^h, a g = g a.
inline GroupPtr agroup(int p, int q, i64 t, i64 h) {
    check_agroup_params(p, q, t, h);
    int n = q * p * q;
    std::vector<std::string> labels;
    for (int g = 0; g < n; ++g)
        labels.push_back(detail::join_mono(
            {detail::mono("g", g % q), detail::mono("b", g / q % p), detail::mono("a", g / (q * p))}));
    std::ostringstream sp;
    sp << "agroup:" << p << "," << q << "," << t << "," << h;
    return make_group(
        n,
        [=](int u, int v) {
            i64 k = u % q, j = u / q % p, i = u / (q * p);
            i64 k2 = v % q, j2 = v / q % p, i2 = v / (q * p);
            i64 nj = (j * pow_mod(h, k2, p) + j2 * pow_mod(t, i, p)) % p;
            return static_cast<int>((k + k2) % q + q * (nj + p * ((i + i2) % q)));
        },
        labels, sp.str());
}

namespace detail {

inline std::vector<i64> parse_ints(const std::string& s, size_t want, const std::string& what) {
    std::vector<i64> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw ParseError("bad integer");
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + tok + "' in " + what);
        }
    }
    if (out.size() != want) throw ParseError(what + " expects " + std::to_string(want) + " parameters");
    return out;
}

inline GroupPtr parse_group(const std::string& s, size_t& pos) {
    size_t colon = s.find(':', pos);
    if (colon == std::string::npos) throw ParseError("group spec needs 'tag:args': " + s.substr(pos));
    std::string tag = s.substr(pos, colon - pos);
    pos = colon + 1;
    if (tag == "product") {
        GroupPtr a = parse_group(s, pos);
        if (pos >= s.size() || s[pos] != ';') throw ParseError("product spec needs ';'");
        ++pos;
        GroupPtr b = parse_group(s, pos);
        return direct_product(*a, *b);
    }
    size_t end = s.find(';', pos);
    if (end == std::string::npos) end = s.size();
    std::string args = s.substr(pos, end - pos);
    pos = end;
    if (tag == "cyclic") return cyclic_group(static_cast<int>(parse_ints(args, 1, tag)[0]));
    if (tag == "ut3") return ut3_group(static_cast<int>(parse_ints(args, 1, tag)[0]));
    if (tag == "t") return t_group(static_cast<int>(parse_ints(args, 1, tag)[0]));
    if (tag == "dihedral") return dihedral_group(static_cast<int>(parse_ints(args, 1, tag)[0]));
    if (tag == "bgroup") {
        auto v = parse_ints(args, 4, tag);
        return bgroup(static_cast<int>(v[0]), static_cast<int>(v[1]), v[2], v[3]);
    }
    if (tag == "agroup") {
        auto v = parse_ints(args, 4, tag);
        return agroup(static_cast<int>(v[0]), static_cast<int>(v[1]), v[2], v[3]);
    }
    throw ParseError("unknown group tag '" + tag + "'");
}

}  // namespace detail

inline GroupPtr build_group(const std::string& spec) {
    size_t pos = 0;
    GroupPtr g = detail::parse_group(spec, pos);
    if (pos != spec.size()) throw ParseError("trailing characters in group spec: " + spec.substr(pos));
    return g;
}

}  // namespace hopfgal
