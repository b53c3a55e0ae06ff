#include "checks_registry.hpp"

// The main identity and its direct consequences (sections 2-4).

namespace qtsym::detail {

namespace {

// spanning inputs for an operator identity on Lambda^(n): the Macdonald
// basis, plus e_n and one deterministic p_lambda as extra spot inputs
std::vector<std::pair<std::string, SymFunc>> spanning_inputs(const VarListPtr& V, int n,
                                                             const std::string& seed) {
    std::vector<std::pair<std::string, SymFunc>> out;
    for (const Partition& mu : partitions_of(n))
        out.emplace_back("H" + mu.bracketed(), H_of(mu, V));
    out.emplace_back(lbl("e", n), e_basis(V, n));
    const auto& parts = partitions_of(n);
    const Partition& la = parts[det_pick(seed + std::to_string(n), parts.size())];
    out.emplace_back("p" + la.bracketed(), p_basis(V, la));
    return out;
}

}  // namespace

void add_main_checks(std::vector<Check>& out) {
    out.push_back(Check{
        "main-identity", "main",
        "eq:mainidentity — \"the main result of this article\"",
        "z-order k <= N, |mu| <= N-k, full u and rational v; v->1 cross-checked against Theta",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int k = 0; k <= b.N; ++k)
                for (int n = 0; n <= b.N - k; ++n)
                    for (const Partition& mu : partitions_of(n)) {
                        v.push_back({lbl("k=", k, " mu=", mu.bracketed()),
                                     [k, mu]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars_plus({"v", "u"});
                            MacBasis& B = mac_basis();
                            RatQT one = RatQT::integer(V, 1);
                            RatQT u = RatQT::variable(V, "u"), vv = RatQT::variable(V, "v");
                            RatQT M = M_poly(V);
                            SymFunc F = H_of(mu, V);
                            // z^k of Theta~(z,v)^{-1} T_u Theta~(z,v)
                            SymFunc lhs(V);
                            for (int k2 = 0; k2 <= k; ++k2) {
                                SymFunc a = theta_tilde(B, F, k2);
                                a = translate(a, Alphabet::scalar(u));
                                lhs += theta_tilde(B, a, k - k2, true);
                            }
                            // z^k of Exp[uz(v-1)/M] Delta_{uzv} T_u
                            SymFunc TuF = translate(F, Alphabet::scalar(u));
                            SymFunc rhs(V);
                            for (int i = 0; i <= k; ++i) {
                                int nn = k - i;
                                RatQT ci = plethysm_scalar(h_basis(V, i), u * (vv - one) / M);
                                SymFunc dt = delta_eh(B, 'e', nn, TuF);
                                RatQT fac = (u * vv).pow(nn);
                                if (nn % 2 != 0) fac = -fac;
                                rhs += dt.scale(ci * fac);
                            }
                            if (auto c = expect_eq(lbl("k=", k, " mu=", mu.bracketed()), lhs, rhs))
                                return c;
                            // v -> 1 must reproduce the Theta combination computed
                            // through Pi directly (the inverse factor limits to
                            // Theta_{h_k}, the direct one to (-1)^k Theta_{e_k})
                            SymFunc lim = subst_v1(lhs);
                            SymFunc expect(V);
                            for (int k2 = 0; k2 <= k; ++k2) {
                                SymFunc a = theta_eh(B, 'e', k2, F);
                                a = translate(a, Alphabet::scalar(u));
                                a = theta_eh(B, 'h', k - k2, a);
                                if (k2 % 2 != 0) a = -a;
                                expect += a;
                            }
                            return expect_eq(lbl("k=", k, " mu=", mu.bracketed(), " (v->1)"),
                                             lim, expect);
                        }});
                    }
            return v;
        }});

    out.push_back(Check{
        "tesler-theta", "main",
        "eq:vThetareciprocity — \"For any k∈ℕ and any μ⊢k\"",
        "mu |- k <= N, z-order s <= N, v adjoined",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int k = 0; k <= b.N; ++k)
                for (const Partition& mu : partitions_of(k)) {
                    v.push_back({lbl("mu=", mu.bracketed()), [k, mu, b]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars_plus({"v"});
                        MacBasis& B = mac_basis();
                        RatQT one = RatQT::integer(V, 1);
                        RatQT vv = RatQT::variable(V, "v");
                        RatQT M = M_poly(V);
                        SymFunc F = H_of(mu, V);
                        RatQT arg = -(vv * D_of(mu, V) + one) / M;
                        for (int s = 0; s <= b.N; ++s) {
                            SymFunc lhs(V);
                            for (int i = 0; i <= std::min(k, s); ++i) {
                                RatQT ci = plethysm_scalar(h_basis(V, i), (one - vv) / M);
                                lhs += perp(h_basis(V, k - i), theta_tilde(B, F, s - i)).scale(ci);
                            }
                            SymFunc rhs = plethysm(h_basis(V, s), Alphabet::scaled_X(arg));
                            if (auto c = expect_eq(lbl("mu=", mu.bracketed(), " z^", s), lhs, rhs))
                                return c;
                        }
                        return std::nullopt;
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "theta-reciprocity", "main",
        "eq:Thetareciprocity — \"The following result is extremely useful\"",
        "mu |- k <= N, m <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int k = 0; k <= b.N; ++k)
                for (const Partition& mu : partitions_of(k))
                    for (int m = 0; m <= b.N; ++m) {
                        v.push_back({lbl("mu=", mu.bracketed(), " m=", m),
                                     [k, mu, m]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars();
                            MacBasis& B = mac_basis();
                            SymFunc lhs = perp(h_basis(V, k), theta_eh(B, 'e', m, H_of(mu, V)));
                            SymFunc rhs = plethysm(e_basis(V, m), Alphabet::scaled_X(B_of(mu, V)));
                            return expect_eq(lbl("mu=", mu.bracketed(), " m=", m), lhs, rhs);
                        }});
                    }
            return v;
        }});

    out.push_back(Check{
        "mac-koornwinder", "main",
        "eq:vMacRec — \"a version of the Macdonald-Koornwinder reciprocity\"",
        "lambda |- m <= N, mu |- k <= N, v adjoined",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int m = 0; m <= b.N; ++m)
                for (const Partition& la : partitions_of(m))
                    for (int k = 0; k <= b.N; ++k)
                        for (const Partition& mu : partitions_of(k)) {
                            if (mu < la) continue;  // symmetric statement, skip duplicates
                            v.push_back({lbl("lambda=", la.bracketed(), " mu=", mu.bracketed()),
                                         [la, mu]() -> std::optional<Counterexample> {
                                VarListPtr V = qt_vars_plus({"v"});
                                RatQT one = RatQT::integer(V, 1);
                                RatQT vv = RatQT::variable(V, "v");
                                RatQT q = RatQT::variable(V, "q"), t = RatQT::variable(V, "t");
                                auto side = [&](const Partition& a, const Partition& bb) {
                                    Alphabet A(V);
                                    A.add(vv * D_of(bb, V) + one, false);
                                    RatQT r = plethysm(H_of(a, V), A).constant_term();
                                    for (const auto& c : bb.cells())
                                        r *= one - vv * q.pow(c.coarm) * t.pow(c.coleg);
                                    return r;
                                };
                                return expect_eq(lbl("lambda=", la.bracketed(), " mu=", mu.bracketed()),
                                                 side(la, mu), side(mu, la));
                            }});
                        }
            return v;
        }});

    out.push_back(Check{
        "mac-reciprocity", "main",
        "eq:MacRec — \"Divide \\eqref{eq:vMacRec} by 1−v\"",
        "nonempty lambda, mu with sizes <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int m = 1; m <= b.N; ++m)
                for (const Partition& la : partitions_of(m))
                    for (int k = 1; k <= b.N; ++k)
                        for (const Partition& mu : partitions_of(k)) {
                            if (mu < la) continue;
                            v.push_back({lbl("lambda=", la.bracketed(), " mu=", mu.bracketed()),
                                         [la, mu]() -> std::optional<Counterexample> {
                                VarListPtr V = qt_vars();
                                RatQT M = M_poly(V);
                                auto side = [&](const Partition& a, const Partition& bb) {
                                    return Pi_of(bb, V) *
                                           plethysm_scalar(H_of(a, V), M * B_of(bb, V));
                                };
                                return expect_eq(lbl("lambda=", la.bracketed(), " mu=", mu.bracketed()),
                                                 side(la, mu), side(mu, la));
                            }});
                        }
            return v;
        }});

    out.push_back(Check{
        "theta-commutation-h-e", "main",
        "eq:hjek, eq:ejek, eq:hjhk — \"contains some of the main consequences\"",
        "j, k <= N on spanning inputs of degree <= N - max(0, k-j)",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int j = 0; j <= b.N; ++j)
                for (int k = 0; k <= b.N; ++k) {
                    int nmax = b.N - std::max(0, k - j);
                    for (int n = 0; n <= nmax; ++n) {
                        v.push_back({lbl("j=", j, " k=", k, " deg=", n),
                                     [j, k, n]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars();
                            MacBasis& B = mac_basis();
                            for (auto& [name, F] : spanning_inputs(V, n, lbl("hjek", j, k))) {
                                SymFunc l1 = perp(h_basis(V, j), theta_eh(B, 'e', k, F));
                                SymFunc r1(V);
                                for (int r = 0; r <= j; ++r)
                                    r1 += theta_eh(B, 'e', k - j + r,
                                                   delta_eh(B, 'e', j - r, perp(h_basis(V, r), F)));
                                if (auto c = expect_eq(lbl("j=", j, " k=", k, " F=", name, " (hjek)"),
                                                       l1, r1))
                                    return c;
                                SymFunc l2 = perp(e_basis(V, j), theta_eh(B, 'e', k, F));
                                SymFunc r2(V);
                                for (int r = 0; r <= j; ++r)
                                    r2 += theta_eh(B, 'e', k - j + r,
                                                   perp(e_basis(V, r), delta_eh(B, 'h', j - r, F)));
                                if (auto c = expect_eq(lbl("j=", j, " k=", k, " F=", name, " (ejek)"),
                                                       l2, r2))
                                    return c;
                                SymFunc l3 = perp(h_basis(V, j), theta_eh(B, 'h', k, F));
                                SymFunc r3(V);
                                for (int r = 0; r <= j; ++r)
                                    r3 += delta_eh(B, 'h', j - r,
                                                   theta_eh(B, 'h', k - j + r, perp(h_basis(V, r), F)));
                                if (auto c = expect_eq(lbl("j=", j, " k=", k, " F=", name, " (hjhk)"),
                                                       l3, r3))
                                    return c;
                            }
                            return std::nullopt;
                        }});
                    }
                }
            return v;
        }});

    out.push_back(Check{
        "theta-commutation-inverse", "main",
        "eq:TmuThetaz, eq:TuThetamz — \"We deduce the following important identities\"",
        "z-order k <= N, |mu| <= N-k, full u and rational v",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int k = 0; k <= b.N; ++k)
                for (int n = 0; n <= b.N - k; ++n)
                    for (const Partition& mu : partitions_of(n)) {
                        v.push_back({lbl("k=", k, " mu=", mu.bracketed()),
                                     [k, mu]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars_plus({"v", "u"});
                            MacBasis& B = mac_basis();
                            RatQT one = RatQT::integer(V, 1);
                            RatQT u = RatQT::variable(V, "u"), vv = RatQT::variable(V, "v");
                            RatQT M = M_poly(V);
                            SymFunc F = H_of(mu, V);
                            // eq:TmuThetaz at z^k
                            SymFunc lhs = translate(theta_tilde(B, F, k), Alphabet::scalar(-u));
                            SymFunc rhs(V);
                            for (int i = 0; i + 0 <= k; ++i) {
                                RatQT ci = plethysm_scalar(h_basis(V, i), u * (one - vv) / M);
                                for (int nn = 0; i + nn <= k; ++nn) {
                                    int m = k - i - nn;
                                    SymFunc x = delta_eh(B, 'h', nn, F).scale((u * vv).pow(nn));
                                    x = translate(x, Alphabet::scalar(-u));
                                    x = theta_tilde(B, x, m);
                                    rhs += x.scale(ci);
                                }
                            }
                            if (auto c = expect_eq(lbl("k=", k, " mu=", mu.bracketed(), " (TmuThetaz)"),
                                                   lhs, rhs))
                                return c;
                            // eq:TuThetamz at z^k
                            SymFunc lhs2 = translate(theta_tilde(B, F, k, true), Alphabet::scalar(u));
                            SymFunc rhs2(V);
                            SymFunc TuF = translate(F, Alphabet::scalar(u));
                            for (int i = 0; i <= k; ++i) {
                                RatQT ci = plethysm_scalar(h_basis(V, i), u * (one - vv) / M);
                                for (int nn = 0; i + nn <= k; ++nn) {
                                    int m = k - i - nn;
                                    SymFunc x = theta_tilde(B, TuF, m, true);
                                    x = delta_eh(B, 'h', nn, x).scale((u * vv).pow(nn));
                                    rhs2 += x.scale(ci);
                                }
                            }
                            return expect_eq(lbl("k=", k, " mu=", mu.bracketed(), " (TuThetamz)"),
                                             lhs2, rhs2);
                        }});
                    }
            return v;
        }});

    out.push_back(Check{
        "theta-right-perp", "main",
        "eq:Thkej, eq:Thkhj, eq:Tekej — \"deduce the ``inverse'' identities\"",
        "j, k <= N on spanning inputs of degree <= N - max(0, k-j)",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int j = 0; j <= b.N; ++j)
                for (int k = 0; k <= b.N; ++k) {
                    int nmax = b.N - std::max(0, k - j);
                    for (int n = 0; n <= nmax; ++n) {
                        v.push_back({lbl("j=", j, " k=", k, " deg=", n),
                                     [j, k, n]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars();
                            MacBasis& B = mac_basis();
                            for (auto& [name, F] : spanning_inputs(V, n, lbl("thk", j, k))) {
                                SymFunc l1 = theta_eh(B, 'h', k, perp(e_basis(V, j), F));
                                SymFunc r1(V);
                                for (int r = 0; r <= j; ++r) {
                                    SymFunc term = perp(
                                        e_basis(V, r),
                                        delta_eh(B, 'h', j - r, theta_eh(B, 'h', k - j + r, F)));
                                    if ((j - r) % 2 != 0) term = -term;
                                    r1 += term;
                                }
                                if (auto c = expect_eq(lbl("j=", j, " k=", k, " F=", name, " (Thkej)"),
                                                       l1, r1))
                                    return c;
                                SymFunc l2 = theta_eh(B, 'h', k, perp(h_basis(V, j), F));
                                SymFunc r2(V);
                                for (int r = 0; r <= j; ++r) {
                                    SymFunc term = delta_eh(
                                        B, 'e', j - r,
                                        perp(h_basis(V, r), theta_eh(B, 'h', k - j + r, F)));
                                    if ((j - r) % 2 != 0) term = -term;
                                    r2 += term;
                                }
                                if (auto c = expect_eq(lbl("j=", j, " k=", k, " F=", name, " (Thkhj)"),
                                                       l2, r2))
                                    return c;
                                SymFunc l3 = theta_eh(B, 'e', k, perp(e_basis(V, j), F));
                                SymFunc r3(V);
                                for (int r = 0; r <= j; ++r) {
                                    SymFunc term = perp(
                                        e_basis(V, r),
                                        theta_eh(B, 'e', k - j + r, delta_eh(B, 'e', j - r, F)));
                                    if ((j - r) % 2 != 0) term = -term;
                                    r3 += term;
                                }
                                if (auto c = expect_eq(lbl("j=", j, " k=", k, " F=", name, " (Tekej)"),
                                                       l3, r3))
                                    return c;
                            }
                            return std::nullopt;
                        }});
                    }
                }
            return v;
        }});
}

}  // namespace qtsym::detail
