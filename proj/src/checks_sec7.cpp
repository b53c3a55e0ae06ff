#include "checks_registry.hpp"

// Section 7: the simplified treatment of known summations.

namespace qtsym::detail {

namespace {

// e_m[X [k]_q]
SymFunc em_Xkq(const VarListPtr& V, int m, int k) {
    if (m < 0) return SymFunc(V);
    return plethysm(e_basis(V, m), Alphabet::scaled_X(qint(V, k)));
}

}  // namespace

void add_sec7_checks(std::vector<Check>& out) {
    out.push_back(Check{
        "perp-Hn", "sec7",
        "eq:ejperpHn, eq:hjperpHn — \"For any n,j∈ℕ we have\"",
        "n <= N, 0 <= j <= n",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 1; n <= b.N; ++n) {
                v.push_back({lbl("n=", n), [n]() -> std::optional<Counterexample> {
                    VarListPtr V = qt_vars();
                    MacBasis& B = mac_basis();
                    for (int j = 0; j <= n; ++j) {
                        SymFunc Hnj = B.H(Partition::single(n - j));
                        SymFunc le = perp(e_basis(V, j), B.H(Partition::single(n)));
                        SymFunc re = Hnj.scale(qpow(V, choose2(j)) * qbinom(V, n, j));
                        if (auto c = expect_eq(lbl("n=", n, " j=", j, " (e)"), le, re)) return c;
                        SymFunc lh = perp(h_basis(V, j), B.H(Partition::single(n)));
                        SymFunc rh = Hnj.scale(qbinom(V, n, j));
                        if (auto c = expect_eq(lbl("n=", n, " j=", j, " (h)"), lh, rh)) return c;
                    }
                    return std::nullopt;
                }});
            }
            return v;
        }});

    out.push_back(Check{
        "theta-Hj", "sec7",
        "eq:thetaHj — \"which is a reformulation of\"",
        "1 <= j <= k <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int k = 1; k <= b.N; ++k)
                for (int j = 1; j <= k; ++j) {
                    v.push_back({lbl("k=", k, " j=", j), [k, j]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars();
                        MacBasis& B = mac_basis();
                        SymFunc lhs = theta_eh(B, 'e', k - j, B.H(Partition::single(j)));
                        SymFunc rhs(V);
                        for (int r = 0; r <= j; ++r) {
                            RatQT coef = qpow(V, static_cast<long>(r) - static_cast<long>(j) * r +
                                                     choose2(r)) *
                                         qbinom(V, j, r);
                            if ((j - r) % 2 != 0) coef = -coef;
                            rhs += em_Xkq(V, k, r).scale(coef);
                        }
                        return expect_eq(lbl("k=", k, " j=", j), lhs, rhs);
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "nabla-Enk", "sec7",
        "eq:nablaEnk — \"is due to Haglund\"",
        "1 <= j <= k <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int k = 1; k <= b.N; ++k)
                for (int j = 1; j <= k; ++j) {
                    v.push_back({lbl("k=", k, " j=", j), [k, j]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars();
                        MacBasis& B = mac_basis();
                        RatQT t = RatQT::variable(V, "t");
                        SymFunc lhs = delta_op(B, e_basis(V, k), enk(V, k, j));
                        SymFunc rhs = theta_eh(B, 'h', k - j, B.H(Partition::single(j)))
                                          .scale(t.pow(k - j));
                        return expect_eq(lbl("k=", k, " j=", j), lhs, rhs);
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "nabla-theta-Hi", "sec7",
        "eq:nablaThetaejHi — \"first appeared in \\cite[Proposition~4.9]\"",
        "1 <= k, j <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int k = 1; k <= b.N; ++k)
                for (int j = 1; j <= b.N; ++j) {
                    v.push_back({lbl("k=", k, " j=", j), [k, j]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars();
                        MacBasis& B = mac_basis();
                        RatQT t = RatQT::variable(V, "t");
                        SymFunc lhs = delta_eh(
                            B, 'e', k, theta_eh(B, 'e', k - j, B.H(Partition::single(j))));
                        SymFunc rhs(V);
                        for (int s = 1; s <= k; ++s)
                            rhs += theta_eh(B, 'h', k - s, B.H(Partition::single(s)))
                                       .scale(qpow(V, choose2(j)) * qbinom(V, s - 1, j - 1) *
                                              t.pow(k - s));
                        return expect_eq(lbl("k=", k, " j=", j), lhs, rhs);
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "my-summation", "sec7",
        "eq:mysummation — \"a theorem of Haglund\" extended",
        "1 <= m <= N, 0 <= k, l <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int k = 0; k <= b.N; ++k)
                for (int l = 0; l <= b.N; ++l) {
                    v.push_back({lbl("k=", k, " l=", l), [k, l, b]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars();
                        MacBasis& B = mac_basis();
                        RatQT t = RatQT::variable(V, "t");
                        for (int m = 1; m <= b.N; ++m) {
                            SymFunc Hk = B.H(Partition::single(k));
                            SymFunc inner =
                                (l >= 1 && k >= 1)
                                    ? theta_chain(B, {e_basis(V, m), e_basis(V, l)}, Hk)
                                    : theta_eh(B, 'e', m, theta_eh(B, 'e', l, Hk));
                            SymFunc lhs = perp(h_basis(V, k + l), inner);
                            SymFunc rhs(V);
                            for (int r = 0; r <= k; ++r)
                                for (int bb = 1; bb <= l + r; ++bb) {
                                    RatQT coef = qpow(V, choose2(r)) * qbinom(V, k, r) *
                                                 qbinom(V, k - r + bb - 1, k - 1) *
                                                 t.pow(l + r - bb);
                                    if (coef.is_zero()) continue;
                                    SymFunc term = theta_eh(
                                        B, 'h', l + r - bb,
                                        theta_eh(B, 'e', m - l - r, B.H(Partition::single(bb))));
                                    rhs += term.scale(coef);
                                }
                            if (auto c = expect_eq(lbl("m=", m, " k=", k, " l=", l), lhs, rhs))
                                return c;
                        }
                        return std::nullopt;
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "cor-delta-elem", "sec7",
        "eq:corDeltaelemXk — \"Δ_{e_ℓ}e_m[X[k]_q]\"",
        "1 <= m <= N, 0 <= k, l <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int m = 1; m <= b.N; ++m)
                for (int k = 0; k <= b.N; ++k)
                    for (int l = 0; l <= b.N; ++l) {
                        v.push_back({lbl("m=", m, " k=", k, " l=", l),
                                     [m, k, l]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars();
                            MacBasis& B = mac_basis();
                            SymFunc lhs = delta_eh(B, 'e', l, em_Xkq(V, m, k));
                            SymFunc rhs(V);
                            for (int r = 0; r <= k; ++r)
                                for (int bb = 1; bb <= l + r; ++bb) {
                                    RatQT coef = qpow(V, choose2(r)) * qbinom(V, k, r) *
                                                 qbinom(V, k - r + bb - 1, k - 1);
                                    if (coef.is_zero()) continue;
                                    rhs += theta_eh(B, 'e', m - l - r,
                                                    delta_enk(B, V, l + r, bb))
                                               .scale(coef);
                                }
                            return expect_eq(lbl("m=", m, " k=", k, " l=", l), lhs, rhs);
                        }});
                    }
            return v;
        }});

    out.push_back(Check{
        "gendelta-schroeder-3-7", "sec7",
        "\"first appeared in \\cite[Theorem~3.7]\" — generalized Schroeder sum",
        "s, l, j <= N, 1 <= m <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int s = 0; s <= b.N; ++s)
                for (int l = 0; l <= b.N; ++l)
                    for (int j = 0; j <= b.N; ++j) {
                        v.push_back({lbl("s=", s, " l=", l, " j=", j),
                                     [s, l, j, b]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars();
                            MacBasis& B = mac_basis();
                            RatQT t = RatQT::variable(V, "t");
                            for (int m = 1; m <= b.N; ++m) {
                                RatQT lhs(V);
                                for (int k = 1; k <= s; ++k)
                                    lhs += t.pow(s - k) *
                                           hall(delta_eh(B, 'h', s - k,
                                                         delta_eh(B, 'e', l, em_Xkq(V, m, k))),
                                                e_basis(V, j) * h_basis(V, m - j));
                                RatQT rhs = hall(
                                    delta_eh(B, 'h', j,
                                             delta_eh(B, 'e', s - 1, e_basis(V, s + l), true)),
                                    e_basis(V, m - j) * h_basis(V, s + l + j - m));
                                if (auto c = expect_eq(lbl("s=", s, " l=", l, " m=", m, " j=", j),
                                                       lhs, rhs))
                                    return c;
                            }
                            return std::nullopt;
                        }});
                    }
            return v;
        }});

    out.push_back(Check{
        "delta-square-4-7", "sec7",
        "\"first appeared in \\cite[Theorem~4.7]\" — square-version sum",
        "1 <= s <= N, l, j <= N, 1 <= m <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int s = 1; s <= b.N; ++s)
                for (int l = 0; l <= b.N; ++l)
                    for (int j = 0; j <= b.N; ++j) {
                        v.push_back({lbl("s=", s, " l=", l, " j=", j),
                                     [s, l, j, b]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars();
                            MacBasis& B = mac_basis();
                            RatQT t = RatQT::variable(V, "t");
                            for (int m = 1; m <= b.N; ++m) {
                                RatQT lhs(V);
                                for (int k = 1; k <= s; ++k)
                                    lhs += (qint(V, s + l, "q") / qint(V, k, "q")) * t.pow(s - k) *
                                           hall(delta_eh(B, 'h', s - k,
                                                         delta_eh(B, 'e', l, em_Xkq(V, m, k))),
                                                e_basis(V, j) * h_basis(V, m - j));
                                RatQT rhs = (qint(V, s, "t") / qint(V, s + l, "t")) *
                                            hall(delta_eh(B, 'h', j,
                                                          delta_eh(B, 'e', s,
                                                                   omega(p_basis(V, s + l)))),
                                                 e_basis(V, m - j) * h_basis(V, s + l + j - m));
                                if (auto c = expect_eq(lbl("s=", s, " l=", l, " m=", m, " j=", j),
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
