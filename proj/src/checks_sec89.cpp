#include "checks_registry.hpp"

#include <algorithm>

// Sections 8 and 9: further new identities, including the t = 0 theorem.

namespace qtsym::detail {

namespace {

SymFunc em_Xkq7(const VarListPtr& V, int m, int k) {
    if (m < 0) return SymFunc(V);
    return plethysm(e_basis(V, m), Alphabet::scaled_X(qint(V, k)));
}

// Delta'_{e_{k-1}} e_{m+k} |_{t=0}
SymFunc deltat0(MacBasis& B, const VarListPtr& V, int k, int m) {
    if (k < 1 || m + k < 0) return SymFunc(V);
    return subst_t0(delta_eh(B, 'e', k - 1, e_basis(V, m + k), true));
}

}  // namespace

void add_sec89_checks(std::vector<Check>& out) {
    out.push_back(Check{
        "delta-theta-eHk", "sec8",
        "eq:DeltaThetaeHk — \"We can extend \\eqref{eq:nablaThetaejHi}\"",
        "r <= j <= N, s <= min(r, k-1), 1 <= k <= N, l <= N with l-r+s >= 0",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int j = 0; j <= b.N; ++j)
                for (int r = 0; r <= j; ++r)
                    for (int k = 1; k <= b.N; ++k) {
                        v.push_back({lbl("j=", j, " r=", r, " k=", k),
                                     [j, r, k, b]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars();
                            MacBasis& B = mac_basis();
                            for (int s = 0; s <= std::min(r, k - 1); ++s)
                                for (int l = r - s; l <= b.N; ++l) {
                                    if (l < 0) continue;
                                    SymFunc lhs = delta_eh(
                                        B, 'e', j - r,
                                        theta_eh(B, 'e', l - r + s,
                                                 B.H(Partition::single(k - s))));
                                    SymFunc rhs(V);
                                    for (int a = 0; a <= k - s; ++a)
                                        for (int bb = 1; bb <= j - r + a; ++bb) {
                                            RatQT coef =
                                                qpow(V, choose2(a)) * qbinom(V, k - s, a) *
                                                qbinom(V, bb - 1, k - s - 1) *
                                                qpow(V, choose2(k - s) -
                                                            static_cast<long>(a) * (k - s - 1));
                                            if (coef.is_zero()) continue;
                                            rhs += theta_eh(B, 'e', l + k - j - a,
                                                            delta_enk(B, V, j - r + a, bb))
                                                       .scale(coef);
                                        }
                                    if (auto c = expect_eq(lbl("j=", j, " r=", r, " l=", l,
                                                               " s=", s, " k=", k),
                                                           lhs, rhs))
                                        return c;
                                }
                            return std::nullopt;
                        }});
                    }
            return v;
        }});

    out.push_back(Check{
        "general-summation", "sec8",
        "eq:newsummationhjperp — \"We can now extend our\"",
        "j, m <= N, 1 <= k <= N, min(j,k) <= l <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int k = 1; k <= b.N; ++k)
                for (int l = 0; l <= b.N; ++l) {
                    v.push_back({lbl("k=", k, " l=", l), [k, l, b]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars();
                        MacBasis& B = mac_basis();
                        for (int m = 0; m <= b.N; ++m) {
                            SymFunc Hk = B.H(Partition::single(k));
                            SymFunc inner =
                                (l >= 1 && m >= 1)
                                    ? theta_chain(B, {e_basis(V, m), e_basis(V, l)}, Hk)
                                    : theta_eh(B, 'e', m, theta_eh(B, 'e', l, Hk));
                            for (int j = 0; j <= b.N; ++j) {
                                if (l < std::min(j, k)) continue;
                                SymFunc lhs = perp(h_basis(V, j), inner);
                                SymFunc rhs(V);
                                for (int r = 0; r <= j; ++r) {
                                    RatQT kr = qbinom(V, k, r);
                                    if (kr.is_zero()) continue;
                                    for (int a = 0; a <= k; ++a)
                                        for (int bb = 1; bb <= j - r + a; ++bb) {
                                            RatQT c1 = kr * qpow(V, choose2(k - r - a)) *
                                                       qbinom(V, bb - 1, a) *
                                                       qbinom(V, bb + r - a - 1, k - a - 1);
                                            RatQT c2 = kr * qpow(V, choose2(k - r - a + 1)) *
                                                       qbinom(V, bb - 1, a - 1) *
                                                       qbinom(V, bb + r - a, k - a);
                                            RatQT coef = c1 + c2;
                                            if (coef.is_zero()) continue;
                                            SymFunc dE = delta_enk(B, V, j - r + a, bb);
                                            if (dE.is_zero()) continue;
                                            rhs += theta_eh(B, 'e', m - j + r,
                                                            theta_eh(B, 'e', l + k - j - a, dE))
                                                       .scale(coef);
                                        }
                                }
                                if (auto c = expect_eq(lbl("j=", j, " m=", m, " l=", l, " k=", k),
                                                       lhs, rhs))
                                    return c;
                            }
                        }
                        return std::nullopt;
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "gen-sum-corollary", "sec8",
        "§8 corollary — \"is a reformulation of \\cite[Theorem~7.6]\"",
        "1 <= m <= N, j, k, l <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int m = 1; m <= b.N; ++m)
                for (int k = 0; k <= b.N; ++k)
                    for (int l = 0; l <= b.N; ++l) {
                        v.push_back({lbl("m=", m, " k=", k, " l=", l),
                                     [m, k, l, b]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars();
                            MacBasis& B = mac_basis();
                            RatQT t = RatQT::variable(V, "t");
                            SymFunc base = delta_eh(B, 'e', l, em_Xkq7(V, m, k));
                            for (int j = 0; j <= b.N; ++j) {
                                SymFunc lhs = perp(h_basis(V, j), base);
                                SymFunc rhs(V);
                                for (int a = 0; a <= k; ++a)
                                    for (int bb = 1; bb <= j + a; ++bb) {
                                        RatQT coef = qpow(V, choose2(k - a)) * qbinom(V, k, a) *
                                                     qbinom(V, bb - 1, k - 1) * t.pow(j + a - bb);
                                        if (coef.is_zero()) continue;
                                        rhs += delta_eh(B, 'h', j + a - bb,
                                                        delta_eh(B, 'e', l + k - j - a,
                                                                 em_Xkq7(V, m - j, bb)))
                                                   .scale(coef);
                                    }
                                if (auto c = expect_eq(lbl("m=", m, " k=", k, " l=", l, " j=", j),
                                                       lhs, rhs))
                                    return c;
                            }
                            return std::nullopt;
                        }});
                    }
            return v;
        }});

    out.push_back(Check{
        "gen-delta-push", "sec9",
        "eq:thmimplygenDelta — \"We start with the following new identity\"",
        "j, m, p <= N, 1 <= k <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int k = 1; k <= b.N; ++k)
                for (int p = 0; p <= b.N; ++p) {
                    v.push_back({lbl("k=", k, " p=", p), [k, p, b]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars();
                        MacBasis& B = mac_basis();
                        RatQT t = RatQT::variable(V, "t");
                        for (int m = 0; m <= b.N; ++m) {
                            SymFunc Hk = B.H(Partition::single(k));
                            SymFunc inner =
                                (p >= 1 && m >= 1)
                                    ? pi_op(B, star_f(h_basis(V, p)) * star_f(e_basis(V, m)) *
                                                   pi_op(B, Hk, true))
                                    : theta_eh(B, 'h', p, theta_eh(B, 'e', m, Hk));
                            inner = inner.scale(t.pow(p));
                            for (int j = 0; j <= b.N; ++j) {
                                SymFunc lhs = perp(h_basis(V, j), inner);
                                SymFunc rhs(V);
                                for (int s = 0; s <= j; ++s)
                                    for (int r = 0; r <= std::min(s, k); ++r) {
                                        if (p - j + s < 0) continue;
                                        RatQT coef = t.pow(j - s) * qpow(V, choose2(s - r)) *
                                                     qbinom(V, k - r, s - r) * qbinom(V, k, r) *
                                                     t.pow(p - j + s);
                                        if (coef.is_zero()) continue;
                                        SymFunc term = theta_eh(
                                            B, 'h', p - j + s,
                                            theta_eh(B, 'e', m - s + r,
                                                     B.H(Partition::single(k - r))));
                                        rhs += delta_eh(B, 'h', j - s, term).scale(coef);
                                    }
                                if (auto c = expect_eq(lbl("j=", j, " m=", m, " p=", p, " k=", k),
                                                       lhs, rhs))
                                    return c;
                            }
                        }
                        return std::nullopt;
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "gen-delta-enk", "sec9",
        "cor:genDeltaId — \"can be used to deduce a combinatorial interpretation\"",
        "j, m, p <= N, 1 <= k <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int k = 1; k <= b.N; ++k)
                for (int p = 0; p <= b.N; ++p) {
                    v.push_back({lbl("k=", k, " p=", p), [k, p, b]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars();
                        MacBasis& B = mac_basis();
                        RatQT t = RatQT::variable(V, "t");
                        for (int m = 0; m <= b.N; ++m) {
                            SymFunc base = theta_eh(B, 'e', m, delta_enk(B, V, p + k, k));
                            for (int j = 0; j <= b.N; ++j) {
                                SymFunc lhs = perp(h_basis(V, j), base);
                                SymFunc rhs(V);
                                for (int s = 0; s <= j; ++s)
                                    for (int r = 0; r <= std::min(s, k); ++r) {
                                        RatQT coef = t.pow(j - s) * qpow(V, choose2(s - r)) *
                                                     qbinom(V, k - r, s - r) * qbinom(V, k, r);
                                        if (coef.is_zero()) continue;
                                        SymFunc term = theta_eh(
                                            B, 'e', m - s + r,
                                            delta_enk(B, V, p - j + s + k - r, k - r));
                                        rhs += delta_eh(B, 'h', j - s, term).scale(coef);
                                    }
                                if (auto c = expect_eq(lbl("j=", j, " m=", m, " p=", p, " k=", k),
                                                       lhs, rhs))
                                    return c;
                            }
                        }
                        return std::nullopt;
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "delta-t0", "sec9",
        "eq:Deltat0 — \"The following theorem seems new\"",
        "m <= N, 1 <= k <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int m = 0; m <= b.N; ++m)
                for (int k = 1; k <= b.N; ++k) {
                    v.push_back({lbl("m=", m, " k=", k), [m, k]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars();
                        MacBasis& B = mac_basis();
                        SymFunc lhs = theta_eh(B, 'e', m, B.H(Partition::single(k)));
                        SymFunc rhs = deltat0(B, V, k, m);
                        return expect_eq(lbl("m=", m, " k=", k), lhs, rhs);
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "delta-t0-recursion", "sec9",
        "§9 corollary — \"is a reformulation of \\cite[Proposition~9.2]\"",
        "j, m <= N, 1 <= k <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int k = 1; k <= b.N; ++k)
                for (int j = 0; j <= b.N; ++j) {
                    v.push_back({lbl("k=", k, " j=", j), [k, j, b]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars();
                        MacBasis& B = mac_basis();
                        for (int m = 0; m <= b.N; ++m) {
                            SymFunc lhs = perp(h_basis(V, j), deltat0(B, V, k, m));
                            SymFunc rhs(V);
                            for (int r = 0; r <= j; ++r) {
                                RatQT coef = qpow(V, choose2(j - r)) * qbinom(V, k - r, j - r) *
                                             qbinom(V, k, r);
                                if (coef.is_zero()) continue;
                                rhs += deltat0(B, V, k - r, m - j + k - (k - r))
                                           .scale(coef);
                            }
                            if (auto c = expect_eq(lbl("j=", j, " m=", m, " k=", k), lhs, rhs))
                                return c;
                        }
                        return std::nullopt;
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "hrs-advances", "sec9",
        "\"first appeared in \\cite[Lemma~3.7]\" — Haglund-Rhoades-Shimozono recursion",
        "m, j <= N, 1 <= k <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int k = 1; k <= b.N; ++k)
                for (int j = 0; j <= b.N; ++j) {
                    v.push_back({lbl("k=", k, " j=", j), [k, j, b]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars();
                        MacBasis& B = mac_basis();
                        for (int m = 0; m <= b.N; ++m) {
                            SymFunc lhs = perp(e_basis(V, j), omega_bar(deltat0(B, V, k, m)))
                                              .scale(qpow(V, choose2(m + k) - choose2(m + 1)));
                            SymFunc rhs(V);
                            for (int r = 0; r <= j; ++r) {
                                RatQT coef =
                                    qpow(V, choose2(j) + static_cast<long>(r) * (m - j + r)) *
                                    qbinom(V, k - r, j - r) * qbinom(V, k, r) *
                                    qpow(V, choose2(m + k - j) - choose2(m - j + r + 1));
                                if (coef.is_zero()) continue;
                                rhs += omega_bar(deltat0(B, V, k - r, m + k - j - (k - r)))
                                           .scale(coef);
                            }
                            if (auto c = expect_eq(lbl("j=", j, " m=", m, " k=", k), lhs, rhs))
                                return c;
                        }
                        return std::nullopt;
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "hrs-schur", "sec9",
        "\"first appered in \\cite[Lemma~3.1]\" — Schur-Delta recursion",
        "m, j <= N, 1 <= k <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int k = 1; k <= b.N; ++k)
                for (int j = 0; j <= b.N; ++j) {
                    v.push_back({lbl("k=", k, " j=", j), [k, j, b]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars();
                        MacBasis& B = mac_basis();
                        for (int m = 0; m <= b.N; ++m) {
                            SymFunc lhs = perp(e_basis(V, j), deltat0(B, V, k, m));
                            SymFunc rhs(V);
                            for (int r = 0; r <= j; ++r) {
                                RatQT coef = qpow(V, choose2(r)) * qbinom(V, k, r) *
                                             qbinom(V, k + j - r - 1, j - r);
                                if (coef.is_zero()) continue;
                                rhs += deltat0(B, V, k - r, m + k - j - (k - r)).scale(coef);
                            }
                            if (auto c = expect_eq(lbl("j=", j, " m=", m, " k=", k), lhs, rhs))
                                return c;
                        }
                        return std::nullopt;
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "gendelta-3-4", "sec9",
        "\"first appeared in \\cite[Theorem~3.4]\" — p-deformed Schroeder sum",
        "1 <= m <= N, k, l, j, p <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int m = 1; m <= b.N; ++m)
                for (int k = 0; k <= b.N; ++k)
                    for (int l = 0; l <= b.N; ++l) {
                        v.push_back({lbl("m=", m, " k=", k, " l=", l),
                                     [m, k, l, b]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars();
                            MacBasis& B = mac_basis();
                            RatQT t = RatQT::variable(V, "t");
                            SymFunc base = delta_eh(B, 'e', l, em_Xkq7(V, m, k));
                            for (int j = 0; j <= b.N; ++j)
                                for (int p = 0; p <= b.N; ++p) {
                                    RatQT lhs = t.pow(p) *
                                                hall(delta_eh(B, 'h', p, base),
                                                     e_basis(V, j) * h_basis(V, m - j));
                                    RatQT rhs(V);
                                    for (int r = 0; r <= k; ++r)
                                        for (int bb = 1; bb <= j + r; ++bb) {
                                            RatQT coef = qpow(V, choose2(r)) * qbinom(V, k, r) *
                                                         qbinom(V, k - r + bb - 1, k - 1) *
                                                         t.pow(j + r - bb);
                                            if (coef.is_zero()) continue;
                                            rhs += coef *
                                                   hall(delta_eh(B, 'h', j + r - bb,
                                                                 delta_eh(B, 'e', m - j - r,
                                                                          em_Xkq7(V, p + l, bb))),
                                                        e_basis(V, p) * h_basis(V, l));
                                        }
                                    rhs = t.pow(p) * rhs;
                                    if (auto c = expect_eq(lbl("m=", m, " k=", k, " l=", l,
                                                               " j=", j, " p=", p),
                                                           lhs, rhs))
                                        return c;
                                }
                            return std::nullopt;
                        }});
                    }
            return v;
        }});
}

}  // namespace qtsym::detail
