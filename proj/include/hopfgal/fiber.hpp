#pragma once
// Fiber functors on group-theoretical categories C(G, omega, F, alpha):
// pairs (L, beta) with omega|_L = d beta, G = L F and alpha - beta
// non-degenerate on F n L, up to the conjugation relation twisted by Omega_g.
// Counts of right Galois objects for the families follow from these.

#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "families.hpp"

namespace hopfgal {

struct CategoryData {
    GroupPtr G;
    Cochain omega;  // degree 3 on G
    Subgroup F;
    Cochain alpha;  // degree 2 on G, only values on F x F are used
    std::string omega_ref;
};

// Zero outside L x L; values of c (a cochain on the group of L) inside.
inline Cochain extend_from_subgroup(const Cochain& c, const Subgroup& L, GroupPtr G) {
    Cochain out(c.degree(), std::move(G), c.modulus());
    int m = L.order();
    if (c.degree() == 1) {
        for (int a = 0; a < m; ++a) out.set(L.elements[a], c(a));
    } else if (c.degree() == 2) {
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) out.set(L.elements[a], L.elements[b], c(a, b));
    } else {
        throw DomainError("extend_from_subgroup expects degree 1 or 2");
    }
    return out;
}

inline void check_category(const CategoryData& cat) {
    if (cat.omega.degree() != 3 || cat.alpha.degree() != 2) throw DomainError("category data has wrong degrees");
    if (!is_cocycle(cat.omega)) throw DomainError("omega is not a 3-cocycle");
    if (!is_subgroup(*cat.G, cat.F.elements)) throw DomainError("F is not a subgroup");
    GroupPtr FG = subgroup_group(*cat.G, cat.F);
    auto [w, a] = common_modulus(restrict_to(cat.omega, cat.F, FG), restrict_to(cat.alpha, cat.F, FG));
    if (!(coboundary(a) == w)) throw DomainError("d alpha differs from the restriction of omega to F");
}

inline CategoryData make_category(GroupPtr G, Cochain omega, Subgroup F, std::string ref) {
    Cochain alpha(2, G, omega.modulus());
    CategoryData cat{std::move(G), std::move(omega), std::move(F), std::move(alpha), std::move(ref)};
    return cat;
}

enum class Verdict { Pass, OmegaNontrivial, NotFactorization, Degenerate };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::OmegaNontrivial: return "fails (i): omega|L nontrivial";
        case Verdict::NotFactorization: return "fails (ii): LF != G";
        case Verdict::Degenerate: return "fails (iii): degenerate on F n L";
    }
    return "";
}

struct Candidate {
    int subgroup = 0;     // index into the report's subgroup list
    int beta_class = -1;  // index of the H^2(L) representative, -1 when no beta was formed
    std::optional<Cochain> beta;  // on G, supported on L x L, with d beta = omega on L
    Verdict verdict = Verdict::Pass;
    i64 h2_order = 0;
};

struct PairClass {
    int representative = 0;            // candidate index
    std::vector<int> members;          // candidate indices
    std::vector<int> witnesses;        // g with L_member = g L_rep g^-1
    std::vector<std::optional<Cochain>> certificates;  // 1-cochain trivializing the comparison cocycle
};

struct FiberFunctorReport {
    CategoryData category;
    std::vector<Subgroup> subgroups;
    std::vector<int> subgroup_class;  // conjugacy class index of each subgroup
    std::vector<Candidate> candidates;
    std::vector<PairClass> classes;
    int count = 0;
};

struct EnumerateOptions {
    SolveOptions solve;
    int jobs = 1;
    std::uint64_t reshuffle_seed = 0;  // nonzero: shift each beta by a random coboundary
};

namespace detail {

inline bool is_square(i64 n) {
    i64 r = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(n))));
    return r * r == n;
}

template <class Fn>
void parallel_for(int n, int jobs, Fn&& fn) {
    if (jobs <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min(jobs, n); ++t)
        pool.emplace_back([&] {
            for (int i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace detail

// alpha - beta restricted to K = F n L, tested for non-degeneracy.
inline bool condition_iii(const CategoryData& cat, const Subgroup& K, const Cochain& beta) {
    if (K.order() == 1) return true;
    const FiniteGroup& G = *cat.G;
    if (!detail::is_square(K.order()) || is_cyclic(G, K)) return false;
    if (!is_abelian(G, K)) throw DomainError("non-degeneracy on a non-abelian F n L is not supported");
    auto [a, b] = common_modulus(cat.alpha, beta);
    return is_nondegenerate(a - b, K);
}

inline FiberFunctorReport enumerate_fiber_functor_pairs(const CategoryData& cat, const EnumerateOptions& opt = {}) {
    check_category(cat);
    const FiniteGroup& G = *cat.G;
    FiberFunctorReport rep{cat, subgroups(G), {}, {}, {}, 0};
    int ns = static_cast<int>(rep.subgroups.size());
    rep.subgroup_class.assign(ns, -1);
    auto classes = conjugacy_classes_of_subgroups(G, rep.subgroups);
    for (int c = 0; c < static_cast<int>(classes.size()); ++c)
        for (int m : classes[c].members) rep.subgroup_class[m] = c;

    // Conditions (ii) and the beta-independent part of (iii).
    enum Stage { Done, NeedsOmega };
    std::vector<Stage> stage(ns, Done);
    std::vector<Verdict> early(ns, Verdict::Pass);
    for (int i = 0; i < ns; ++i) {
        const Subgroup& L = rep.subgroups[i];
        if (!product_is_whole(G, L, cat.F)) {
            early[i] = Verdict::NotFactorization;
            continue;
        }
        Subgroup K = intersect(cat.F, L);
        if (K.order() > 1 && (!detail::is_square(K.order()) || is_cyclic(G, K))) {
            early[i] = Verdict::Degenerate;
            continue;
        }
        stage[i] = NeedsOmega;
    }

    // Condition (i) once per conjugacy class: the class of omega|_L is
    // invariant under conjugation.
    std::vector<int> omega_trivial(classes.size(), -1);
    std::vector<std::optional<Cochain>> psi(ns);
    for (int i = 0; i < ns; ++i) {
        if (stage[i] != NeedsOmega) continue;
        int c = rep.subgroup_class[i];
        if (omega_trivial[c] >= 0) continue;
        const Subgroup& L = rep.subgroups[i];
        psi[i] = trivialize(restrict_to(cat.omega, L), true, opt.solve);
        omega_trivial[c] = psi[i].has_value() ? 1 : 0;
    }

    std::vector<std::vector<Candidate>> per(ns);
    detail::parallel_for(ns, opt.jobs, [&](int i) {
        if (stage[i] == Done) {
            Candidate cd;
            cd.subgroup = i;
            cd.verdict = early[i];
            per[i].push_back(std::move(cd));
            return;
        }
        if (!omega_trivial[rep.subgroup_class[i]]) {
            Candidate cd;
            cd.subgroup = i;
            cd.verdict = Verdict::OmegaNontrivial;
            per[i].push_back(std::move(cd));
            return;
        }
        const Subgroup& L = rep.subgroups[i];
        GroupPtr LG = subgroup_group(G, L);
        Cochain psiL = psi[i] ? *psi[i] : *trivialize(restrict_to(cat.omega, L, LG), true, opt.solve);
        i64 ML = lcm64(psiL.modulus(), exponent(G, L));
        psiL = psiL.lifted(ML);
        H2Description h = h2(LG, ML, opt.solve);
        Subgroup K = intersect(cat.F, L);
        std::mt19937_64 rng(opt.reshuffle_seed + 7919 * static_cast<std::uint64_t>(i));
        for (int r = 0; r < static_cast<int>(h.representatives.size()); ++r) {
            Cochain bL = psiL + h.representatives[r];
            if (opt.reshuffle_seed) bL += coboundary(random_cochain(1, LG, ML, rng));
            Candidate cd;
            cd.subgroup = i;
            cd.beta_class = r;
            cd.h2_order = h.order();
            cd.beta = extend_from_subgroup(bL, L, cat.G);
            cd.verdict = condition_iii(cat, K, *cd.beta) ? Verdict::Pass : Verdict::Degenerate;
            per[i].push_back(std::move(cd));
        }
    });
    for (auto& v : per)
        for (auto& c : v) rep.candidates.push_back(std::move(c));
    return rep;
}

// Omega_g(a, b) for a, b in L.
inline Cochain omega_g_on(const Cochain& omega, int g, const Subgroup& L) {
    const FiniteGroup& G = omega.group();
    Cochain out(2, omega.group_ptr(), omega.modulus());
    for (int a : L.elements) {
        int ca = G.conj(g, a);
        for (int b : L.elements) out.set(a, b, omega(ca, G.conj(g, b), g) + omega(g, a, b) - omega(ca, g, b));
    }
    return out;
}

// The comparison cocycle on L for L' = g L g^-1:
// gamma(s, t) = beta'(g s g^-1, g t g^-1) - beta(s, t) + Omega_g(s, t).
// d Omega_g = omega - omega o conj_g, so d gamma = 0 on L whenever
// d beta = omega|_L and d beta' = omega|_L'.
inline Cochain comparison_cocycle(const Cochain& omega, const Subgroup& L, const Cochain& beta, const Cochain& beta2,
                                  int g) {
    const FiniteGroup& G = omega.group();
    i64 M = lcm64(lcm64(beta.modulus(), beta2.modulus()), omega.modulus());
    Cochain b1 = beta.lifted(M), b2 = beta2.lifted(M);
    Cochain Om = omega_g_on(omega.lifted(M), g, L);
    GroupPtr LG = subgroup_group(G, L);
    Cochain out(2, LG, M);
    int m = L.order();
    for (int a = 0; a < m; ++a) {
        int s = L.elements[a], cs = G.conj(g, s);
        for (int b = 0; b < m; ++b) {
            int t = L.elements[b];
            out.set(a, b, b2(cs, G.conj(g, t)) - b1(s, t) + Om(s, t));
        }
    }
    return out;
}

inline bool trivial_2cocycle(const Cochain& gamma, const SolveOptions& opt) {
    if (gamma.group().is_abelian()) return is_symmetric(gamma);
    return trivialize(gamma, true, opt).has_value();
}

inline void classify_pairs(FiberFunctorReport& rep, const EnumerateOptions& opt = {}) {
    const FiniteGroup& G = *rep.category.G;
    rep.classes.clear();
    std::vector<int> passing;
    for (int i = 0; i < static_cast<int>(rep.candidates.size()); ++i)
        if (rep.candidates[i].verdict == Verdict::Pass) passing.push_back(i);
    for (int ci : passing) {
        const Candidate& cand = rep.candidates[ci];
        const Subgroup& L2 = rep.subgroups[cand.subgroup];
        bool merged = false;
        for (auto& cls : rep.classes) {
            const Candidate& r = rep.candidates[cls.representative];
            if (rep.subgroup_class[r.subgroup] != rep.subgroup_class[cand.subgroup]) continue;
            const Subgroup& L = rep.subgroups[r.subgroup];
            for (int g = 0; g < G.order() && !merged; ++g) {
                if (!(conjugate(G, L, g) == L2)) continue;
                Cochain gamma = comparison_cocycle(rep.category.omega, L, *r.beta, *cand.beta, g);
                bool triv = cand.h2_order == 1 || trivial_2cocycle(gamma, opt.solve);
                if (!triv) continue;
                auto cert = trivialize(gamma, true, opt.solve);
                if (!cert) throw std::logic_error("comparison cocycle classified trivial without a witness");
                cls.members.push_back(ci);
                cls.witnesses.push_back(g);
                cls.certificates.push_back(std::move(cert));
                merged = true;
            }
            if (merged) break;
        }
        if (!merged) {
            PairClass pc;
            pc.representative = ci;
            pc.members = {ci};
            pc.witnesses = {G.identity()};
            pc.certificates = {std::nullopt};
            rep.classes.push_back(std::move(pc));
        }
    }
    rep.count = static_cast<int>(rep.classes.size());
}

inline FiberFunctorReport fiber_functors(const CategoryData& cat, const EnumerateOptions& opt = {}) {
    auto rep = enumerate_fiber_functor_pairs(cat, opt);
    classify_pairs(rep, opt);
    return rep;
}

// ---------------------------------------------------------------------------
// Categories attached to the families.

// Rep of k^Gamma #_sigma kF is C(F x Gamma, omega, F, 1); its fiber functors
// count the right Galois objects of the dual Hopf algebra.
inline CategoryData category_of_rep(const MatchedPair& mp, const CocyclePair& cp, const std::string& ref) {
    DoubleGroup dg = double_group(mp);
    Cochain w = kac_omega(mp, cp, dg);
    return make_category(dg.group, std::move(w), dg.F_image, ref);
}

// C(G, omega, F, 1) with omega cohomologically trivial, rewritten as
// C(G, 0, F, alpha) with alpha = -psi|_F where d psi = omega.
inline CategoryData untwist_category(const CategoryData& cat, const SolveOptions& opt = {}) {
    auto psi = trivialize(cat.omega, true, opt);
    if (!psi) throw DomainError("omega is not cohomologically trivial");
    i64 M = psi->modulus();
    Cochain alpha(2, cat.G, M);
    for (int a : cat.F.elements)
        for (int b : cat.F.elements) alpha.set(a, b, -(*psi)(a, b));
    Cochain zero(3, cat.G, M);
    return CategoryData{cat.G, std::move(zero), cat.F, std::move(alpha), cat.omega_ref + ", untwisted"};
}

struct GaloisCount {
    std::string algebra;
    std::string category;
    FiberFunctorReport report;
    int count = 0;
};

inline std::string algebra_name(const FamilyParams& fp, bool dual) {
    std::string s;
    switch (fp.family) {
        case Family::Appp: s = fp.lambda_exp == 0 ? "A_{zeta,1}" : "A_{zeta,g}"; break;
        case Family::Bpqq: s = "B_lambda"; break;
        case Family::Apqq: s = "A_l"; break;
        case Family::H8: s = "H_8"; break;
    }
    return dual ? s + "*" : s;
}

// The category whose fiber functors are the right Galois objects of the
// named algebra (or of its dual).
inline std::pair<CategoryData, std::string> galois_category(const FamilyParams& fp, bool dual,
                                                            const SolveOptions& opt = {}) {
    FamilyData fd = build_family(fp);
    auto via_dual = [&] {
        DualData K = dual_bicrossed(fd.mp, fd.cp);
        build_bicrossed(K.mp, K.cp);
        return category_of_rep(K.mp, K.cp, "kac omega of the dual bicrossed product");
    };
    switch (fp.family) {
        case Family::Appp:
            if (!dual) {
                GroupPtr G = ut3_group(fp.p);
                Subgroup F{G.get(), {}};
                for (int u = 0; u < fp.p * fp.p; ++u) F.elements.push_back(u);
                return {make_category(G, build_omega_zeta_lambda(fp.p, fp.zeta_exp, fp.lambda_exp), F,
                                      "omega_{zeta,lambda}"),
                        "C(ut3, omega_{zeta,lambda}, F, 1)"};
            }
            return {via_dual(), "C(F' x Gamma', omega_K, F', 1) for the dual bicrossed product"};
        case Family::Bpqq:
            if (!dual) return {via_dual(), "C(Gamma x| F, omega_K, Gamma, 1) via the dual bicrossed product"};
            return {untwist_category(category_of_rep(fd.mp, fd.cp, "kac omega"), opt),
                    "C(F x| Gamma, 1, F, alpha), alpha = -psi|_F with d psi = omega"};
        case Family::Apqq:
            if (!dual) {
                GroupPtr G = agroup(fp.p, fp.q, fp.t, fp.h);
                Subgroup F{G.get(), {}};
                for (int k = 0; k < fp.q; ++k) F.elements.push_back(k);
                return {make_category(G, build_upsilon(fp.p, fp.q, fp.h, fp.t, fp.l, fp.eta_exp), F, "upsilon"),
                        "C(F' x| Gamma', upsilon, F', 1)"};
            }
            return {via_dual(), "C(F'' x Gamma'', omega_K, F'', 1) for the dual bicrossed product"};
        case Family::H8:
            if (!dual) return {category_of_rep(fd.mp, fd.cp, "kac omega"), "C(F x| Gamma, omega, F, 1)"};
            return {via_dual(), "C(F' x Gamma', omega_K, F', 1) for the dual bicrossed product"};
    }
    throw DomainError("unknown family");
}

inline GaloisCount count_galois(const FamilyParams& fp, bool dual, const EnumerateOptions& opt = {}) {
    auto [cat, desc] = galois_category(fp, dual, opt.solve);
    GaloisCount out;
    out.algebra = algebra_name(fp, dual);
    out.category = desc;
    out.report = fiber_functors(cat, opt);
    out.count = out.report.count;
    return out;
}

// Expected counts, used by the CLI expected-count table and the acceptance tests.
inline int expected_galois_count(const FamilyParams& fp, bool dual) {
    switch (fp.family) {
        case Family::Appp:
            if (dual) return -1;
            if (fp.p == 3) return fp.lambda_exp == 0 ? 1 : 2;
            return fp.lambda_exp == 0 ? fp.p : 1;
        case Family::Bpqq:
            return dual ? (fp.p + fp.q - 1) / fp.p : 1;
        case Family::Apqq:
            return fp.l == 0 ? fp.q : 1;
        case Family::H8:
            return 1;
    }
    return -1;
}

// ---------------------------------------------------------------------------

inline std::vector<int> subgroup_generators(const FiniteGroup& G, const Subgroup& L) { return generating_set(G, L); }

inline nlohmann::json to_json(const FiberFunctorReport& rep, bool with_candidates = true) {
    const FiniteGroup& G = *rep.category.G;
    auto gens_json = [&](const Subgroup& L) {
        nlohmann::json a = nlohmann::json::array();
        for (int g : subgroup_generators(G, L)) a.push_back(G.label(g));
        return a;
    };
    nlohmann::json j;
    j["category"] = {{"group_spec", G.spec()},
                     {"group_order", G.order()},
                     {"omega_ref", rep.category.omega_ref},
                     {"F_generators", gens_json(rep.category.F)}};
    if (with_candidates) {
        nlohmann::json cands = nlohmann::json::array();
        for (auto& c : rep.candidates) {
            const Subgroup& L = rep.subgroups[c.subgroup];
            cands.push_back({{"subgroup_generators", gens_json(L)},
                             {"subgroup_order", L.order()},
                             {"beta_class_index", c.beta_class},
                             {"verdict", verdict_name(c.verdict)}});
        }
        j["candidates"] = cands;
    }
    nlohmann::json cls = nlohmann::json::array();
    for (auto& pc : rep.classes) {
        const Candidate& r = rep.candidates[pc.representative];
        nlohmann::json members = nlohmann::json::array();
        for (size_t k = 0; k < pc.members.size(); ++k) {
            const Candidate& m = rep.candidates[pc.members[k]];
            members.push_back({{"subgroup_generators", gens_json(rep.subgroups[m.subgroup])},
                               {"beta_class_index", m.beta_class},
                               {"witness", G.label(pc.witnesses[k])}});
        }
        cls.push_back({{"subgroup_generators", gens_json(rep.subgroups[r.subgroup])},
                       {"beta_class_index", r.beta_class},
                       {"members", members}});
    }
    j["classes"] = cls;
    j["galois_object_count"] = rep.count;
    return j;
}

}  // namespace hopfgal
