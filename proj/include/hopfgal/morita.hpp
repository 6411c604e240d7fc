#pragma once
// Invariants used to tell apart categorical Morita classes of the
// semisimple Hopf algebras of dimension p^3. Targets are
//   dual:<group spec>   the function algebra k^L, with Rep k^L = C(L, 1)
//   group:<group spec>  the group algebra kL
//   appp:...            A_{zeta,lambda}, Morita equivalent to C(ut3, omega_{zeta,lambda})
// Pairs that no computed invariant separates are reported as such, never
// as equivalent.

#include <array>

#include "fiber.hpp"

namespace hopfgal {

struct FeasibilityCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MoritaOptions {
    int omega_cap = 3;  // largest p for which omega_{zeta,lambda} is solved for directly
    EnumerateOptions enumerate;
};

// True iff omega_{zeta,lambda} on ut3:p is not a coboundary over k^x.
inline bool check_omega_nontrivial(int p, i64 zeta_exp, i64 lambda_exp, const MoritaOptions& opt = {}) {
    if (!is_prime(p) || p == 2) throw DomainError("p must be an odd prime");
    if (p > opt.omega_cap)
        throw FeasibilityCapError("direct solve for omega on ut3:" + std::to_string(p) + " exceeds the cap p = " +
                                  std::to_string(opt.omega_cap));
    return !trivialize(build_omega_zeta_lambda(p, zeta_exp, lambda_exp), true, opt.enumerate.solve).has_value();
}

// The five-factor combination over (i, i', j, j', l), evaluated on the given
// 3-cochain on ut3:p:
//   w(b^i x^j, a^l, a^-l) + w(b^i' x^j', a^l, a^-l) + w(a^l, b^j' x^i', a^-ji')
//   - w(b^i' x^j', a^l, a^-ji') - w(b^i' x^j', a^(l-ji'), a^-l) = 0.
inline bool nu_factor_identity_check(const Cochain& omega, int p) {
    if (omega.group().order() != p * p * p) throw DomainError("cochain is not on ut3:p");
    i64 M = omega.modulus();
    auto elt = [p](i64 ai, i64 bj, i64 xn) {
        return static_cast<int>(posmod(ai, p) + p * posmod(bj, p) + p * p * posmod(xn, p));
    };
    for (int i = 0; i < p; ++i)
        for (int i2 = 0; i2 < p; ++i2)
            for (int j = 0; j < p; ++j)
                for (int j2 = 0; j2 < p; ++j2)
                    for (int l = 0; l < p; ++l) {
                        int al = elt(l, 0, 0), aml = elt(-l, 0, 0), amji = elt(-j * i2, 0, 0);
                        int u = elt(0, i, j), v = elt(0, i2, j2), w = elt(0, j2, i2);
                        i64 e = omega(u, al, aml) + omega(v, al, aml) + omega(al, w, amji) - omega(v, al, amji) -
                                omega(v, elt(l - j * i2, 0, 0), aml);
                        if (posmod(e, M) != 0) return false;
                    }
    return true;
}

inline bool nu_factor_identity_check(int p, i64 zeta_exp, i64 lambda_exp) {
    if (!is_prime(p) || p == 2) throw DomainError("p must be an odd prime");
    return nu_factor_identity_check(build_omega_zeta_lambda(p, zeta_exp, lambda_exp), p);
}

struct InvariantVector {
    std::string label;
    std::optional<i64> group_exponent;
    std::optional<int> fiber_functor_count;
    std::optional<bool> omega_class_trivial;
    // Invertible objects of the center of Vec_L: |Z(L)| |L^ab|.
    std::optional<i64> center_invertibles;
    // Order-p cyclic subgroups on which the class of omega is trivial, a
    // nonzero square, a non-square (classes taken up to the choice of generator).
    std::optional<std::array<int, 3>> cyclic_profile;
    std::string note;
};

inline Subgroup commutator_subgroup(const FiniteGroup& G) {
    std::vector<int> gens;
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b) gens.push_back(G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return generate(G, gens);
}

inline i64 center_invertibles(const FiniteGroup& G) {
    return static_cast<i64>(center(G).order()) * (G.order() / commutator_subgroup(G).order());
}

inline std::array<int, 3> cyclic_profile(const Cochain& omega, int p, const SolveOptions& opt = {}) {
    const FiniteGroup& G = omega.group();
    std::array<int, 3> out{0, 0, 0};
    std::vector<bool> is_square(p, false);
    for (i64 k = 1; k < p; ++k) is_square[k * k % p] = true;
    for (const Subgroup& L : subgroups(G, p)) {
        i64 c = posmod(cyclic_h3_class(omega, L, -1, opt), p);
        ++out[c == 0 ? 0 : (is_square[c] ? 1 : 2)];
    }
    return out;
}

inline InvariantVector compute_invariants(const std::string& target, const MoritaOptions& opt = {}) {
    InvariantVector v;
    v.label = target;
    auto starts = [&](const char* pre) { return target.rfind(pre, 0) == 0; };
    if (starts("dual:") || starts("group:")) {
        GroupPtr L = build_group(target.substr(target.find(':') + 1));
        v.group_exponent = exponent(*L);
        v.center_invertibles = center_invertibles(*L);
        v.omega_class_trivial = true;
        return v;
    }
    FamilyParams fp = parse_family(target);
    if (fp.family != Family::Appp) throw DomainError("Morita targets are dual:, group: or appp: specs");
    v.fiber_functor_count = count_galois(fp, false, opt.enumerate).count;
    Cochain w = build_omega_zeta_lambda(fp.p, fp.zeta_exp, fp.lambda_exp);
    v.cyclic_profile = cyclic_profile(w, fp.p, opt.enumerate.solve);
    if ((*v.cyclic_profile)[1] + (*v.cyclic_profile)[2] > 0) {
        v.omega_class_trivial = false;  // a restriction to a cyclic subgroup is already nontrivial
        return v;
    }
    try {
        v.omega_class_trivial = !check_omega_nontrivial(fp.p, fp.zeta_exp, fp.lambda_exp, opt);
    } catch (const FeasibilityCapError& e) {
        v.note = e.what();
    }
    return v;
}

struct SeparatedPair {
    int first = 0, second = 0;
    std::vector<std::string> by;
};

struct SeparationReport {
    std::vector<InvariantVector> invariants;
    std::vector<SeparatedPair> separated;
    std::vector<std::pair<int, int>> unseparated;
};

inline std::vector<std::string> separating_invariants(const InvariantVector& a, const InvariantVector& b) {
    std::vector<std::string> by;
    auto cmp = [&](const auto& x, const auto& y, const char* name) {
        if (x && y && *x != *y) by.push_back(name);
    };
    cmp(a.group_exponent, b.group_exponent, "group_exponent");
    cmp(a.fiber_functor_count, b.fiber_functor_count, "fiber_functor_count");
    cmp(a.omega_class_trivial, b.omega_class_trivial, "omega_class_trivial");
    cmp(a.center_invertibles, b.center_invertibles, "center_invertibles");
    cmp(a.cyclic_profile, b.cyclic_profile, "cyclic_profile");
    return by;
}

inline SeparationReport morita_invariants(const std::vector<std::string>& targets, const MoritaOptions& opt = {}) {
    SeparationReport rep;
    rep.invariants.resize(targets.size());
    MoritaOptions inner = opt;
    inner.enumerate.jobs = 1;
    detail::parallel_for(static_cast<int>(targets.size()), opt.enumerate.jobs,
                         [&](int i) { rep.invariants[i] = compute_invariants(targets[i], inner); });
    int n = static_cast<int>(targets.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto by = separating_invariants(rep.invariants[i], rep.invariants[j]);
            if (by.empty())
                rep.unseparated.push_back({i, j});
            else
                rep.separated.push_back({i, j, std::move(by)});
        }
    return rep;
}

// Representatives of the p + 6 classes, plus kG and kT, whose classes are
// those of k^G and k^T.
inline std::vector<std::string> morita_suite_targets(int p) {
    if (!is_prime(p) || p == 2) throw DomainError("p must be an odd prime");
    std::string c = "cyclic:" + std::to_string(p);
    std::vector<std::string> t = {
        "dual:product:" + c + ";product:" + c + ";" + c,
        "dual:product:" + c + ";cyclic:" + std::to_string(p * p),
        "dual:cyclic:" + std::to_string(p * p * p),
        "dual:ut3:" + std::to_string(p),
        "dual:t:" + std::to_string(p),
    };
    std::string head = "appp:p=" + std::to_string(p);
    t.push_back(head + ",zeta=1,lambda=0");
    t.push_back(head + ",zeta=" + std::to_string(quadratic_nonresidue(p)) + ",lambda=0");
    for (int z = 1; z < p; ++z) t.push_back(head + ",zeta=" + std::to_string(z) + ",lambda=1");
    t.push_back("group:ut3:" + std::to_string(p));
    t.push_back("group:t:" + std::to_string(p));
    return t;
}

inline nlohmann::json to_json(const InvariantVector& v) {
    nlohmann::json j;
    j["label"] = v.label;
    auto put = [&](const char* k, const auto& x) {
        if (x) j[k] = *x;
    };
    put("group_exponent", v.group_exponent);
    put("fiber_functor_count", v.fiber_functor_count);
    put("omega_class_trivial", v.omega_class_trivial);
    put("center_invertibles", v.center_invertibles);
    put("cyclic_profile", v.cyclic_profile);
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

inline nlohmann::json to_json(const SeparationReport& rep) {
    nlohmann::json j;
    j["targets"] = nlohmann::json::array();
    j["invariants"] = nlohmann::json::array();
    for (auto& v : rep.invariants) {
        j["targets"].push_back(v.label);
        j["invariants"].push_back(to_json(v));
    }
    j["separated_pairs"] = nlohmann::json::array();
    for (auto& s : rep.separated)
        j["separated_pairs"].push_back(
            {{"a", rep.invariants[s.first].label}, {"b", rep.invariants[s.second].label}, {"by", s.by}});
    j["unseparated_pairs"] = nlohmann::json::array();
    for (auto& [a, b] : rep.unseparated)
        j["unseparated_pairs"].push_back(
            {{"a", rep.invariants[a].label}, {"b", rep.invariants[b].label}, {"status", "not separated here"}});
    return j;
}

}  // namespace hopfgal
