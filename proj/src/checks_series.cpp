#include "checks_registry.hpp"

// Series and plethystic-operator identities of section 1.6.  Translation
// series are finite on bounded degree; multiplication series are compared
// per degree-raising order, which keeps every comparison exact.

namespace qtsym::detail {

namespace {

// h_j[zeta X] f for a scalar multiplier zeta: the z^j coefficient of P_Z f
SymFunc pz_coeff(const RatQT& zeta, int j, const SymFunc& f) {
    return plethysm(h_basis(f.vars(), j), Alphabet::scaled_X(zeta)) * f;
}

}  // namespace

void add_series_checks(std::vector<Check>& out) {
    out.push_back(Check{
        "ty-pz-commutation", "series",
        "eq:translationmultiplication — \"for any two expressions $Y$ and $Z$\"",
        "Y = u, Z in {z/M, z(1+t)}; |mu| <= N; orders <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int zi = 0; zi < 2; ++zi)
                for (int n = 0; n <= b.N; ++n)
                    for (const Partition& mu : partitions_of(n)) {
                        v.push_back({lbl("Z#", zi, " mu=", mu.bracketed()),
                                     [zi, mu, b]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars_plus({"u"});
                            MacBasis& B = mac_basis();
                            RatQT one = RatQT::integer(V, 1);
                            RatQT u = RatQT::variable(V, "u");
                            RatQT t = RatQT::variable(V, "t");
                            RatQT zeta = zi == 0 ? one / M_poly(V) : one + t;
                            SymFunc F = H_of(mu, V);
                            SymFunc TF = translate(F, Alphabet::scalar(u));
                            for (int j = 0; j <= b.N; ++j) {
                                SymFunc lhs = translate(pz_coeff(zeta, j, F), Alphabet::scalar(u));
                                SymFunc rhs(V);
                                for (int i = 0; i <= j; ++i)
                                    rhs += pz_coeff(zeta, j - i, TF)
                                               .scale(plethysm_scalar(h_basis(V, i), u * zeta));
                                if (auto c = expect_eq(lbl("Z#", zi, " mu=", mu.bracketed(),
                                                           " z-order=", j), lhs, rhs))
                                    return c;
                            }
                            return std::nullopt;
                        }});
                    }
            return v;
        }});

    out.push_back(Check{
        "ty-pz-expansions", "series",
        "eq:defTY, eq:defPZ, eq:defTu, eq:defPu — \"The following formulas are proved in\"",
        "Y = u(1+q), Z = (1+t)/M; u monomial forms; |mu| <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 0; n <= b.N; ++n)
                for (const Partition& mu : partitions_of(n)) {
                    v.push_back({lbl("mu=", mu.bracketed()), [mu, b]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars_plus({"u"});
                        MacBasis& B = mac_basis();
                        RatQT one = RatQT::integer(V, 1);
                        RatQT u = RatQT::variable(V, "u");
                        RatQT q = RatQT::variable(V, "q"), t = RatQT::variable(V, "t");
                        SymFunc F = H_of(mu, V);
                        int nF = mu.size();
                        // T_Y = sum s_nu[Y] s_nu^perp with Y = u(1+q)
                        RatQT Y = u * (one + q);
                        SymFunc lhs = translate(F, Alphabet::scalar(Y));
                        SymFunc rhs(V);
                        for (int d = 0; d <= nF; ++d)
                            for (const Partition& nu : partitions_of(d))
                                rhs += perp(s_basis(V, nu), F)
                                           .scale(plethysm_scalar(s_basis(V, nu), Y));
                        if (auto c = expect_eq(lbl("mu=", mu.bracketed(), " (defTY)"), lhs, rhs))
                            return c;
                        // P_Z = sum s_nu[Z] s_nu with Z = (1+t)/M, per order j
                        RatQT Z = (one + t) / M_poly(V);
                        for (int j = 0; j <= b.N; ++j) {
                            SymFunc l2 = pz_coeff(Z, j, F);
                            SymFunc r2(V);
                            for (const Partition& nu : partitions_of(j))
                                r2 += (s_basis(V, nu) * F).scale(plethysm_scalar(s_basis(V, nu), Z));
                            if (auto c = expect_eq(lbl("mu=", mu.bracketed(), " (defPZ) j=", j),
                                                   l2, r2))
                                return c;
                        }
                        // T_u = sum u^k h_k^perp
                        SymFunc l3 = translate(F, Alphabet::scalar(u));
                        SymFunc r3(V);
                        for (int k = 0; k <= nF; ++k)
                            r3 += perp(h_basis(V, k), F).scale(u.pow(k));
                        if (auto c = expect_eq(lbl("mu=", mu.bracketed(), " (defTu)"), l3, r3))
                            return c;
                        // P_{-u/M} = sum (-u)^k e_k^*, per order k
                        for (int k = 0; k <= b.N; ++k) {
                            SymFunc l4 = pz_coeff(-u / M_poly(V), k, F);
                            SymFunc r4 = (star_f(e_basis(V, k)) * F).scale((-u).pow(k));
                            if (auto c = expect_eq(lbl("mu=", mu.bracketed(), " (defPu) k=", k),
                                                   l4, r4))
                                return c;
                        }
                        return std::nullopt;
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "five-term", "series",
        "eq:5trel — \"For any two monomials\"",
        "|mu| <= N; u, v adjoined, exact rational comparison",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 0; n <= b.N; ++n)
                for (const Partition& mu : partitions_of(n)) {
                    v.push_back({lbl("mu=", mu.bracketed()), [mu]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars_plus({"u", "v"});
                        MacBasis& B = mac_basis();
                        RatQT u = RatQT::variable(V, "u"), vv = RatQT::variable(V, "v");
                        SymFunc F = H_of(mu, V);
                        SymFunc lhs = nabla(B, translate(nabla(B, F), Alphabet::scalar(u * vv)), true);
                        SymFunc rhs = delta_v_series(
                            B, vv,
                            translate(delta_v_series(B, vv, translate(F, Alphabet::scalar(-u))),
                                      Alphabet::scalar(u)),
                            true);
                        return expect_eq(lbl("mu=", mu.bracketed()), lhs, rhs);
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "five-term-dual", "series",
        "eq:dual5trel — \"For any two monomials\" (dual form)",
        "|mu| <= N; per u-order <= N, v adjoined",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 0; n <= b.N; ++n)
                for (const Partition& mu : partitions_of(n)) {
                    v.push_back({lbl("mu=", mu.bracketed()), [mu, b]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars_plus({"u", "v"});
                        MacBasis& B = mac_basis();
                        RatQT one = RatQT::integer(V, 1);
                        RatQT u = RatQT::variable(V, "u"), vv = RatQT::variable(V, "v");
                        RatQT M = M_poly(V);
                        SymFunc F = H_of(mu, V);
                        SymFunc ninvF = nabla(B, F, true);
                        SymFunc dinvF = delta_v_series(B, vv, F, true);
                        for (int j = 0; j <= b.N; ++j) {
                            // u^j of nabla P_{-uv/M} nabla^{-1}
                            SymFunc lhs = nabla(B, pz_coeff(-vv / M, j, ninvF)).scale(u.pow(j));
                            // u^j of P_{u/M} Delta_v P_{-u/M} Delta_v^{-1}
                            SymFunc rhs(V);
                            for (int j2 = 0; j2 <= j; ++j2) {
                                SymFunc mid = delta_v_series(B, vv, pz_coeff(-one / M, j2, dinvF));
                                rhs += pz_coeff(one / M, j - j2, mid);
                            }
                            rhs = rhs.scale(u.pow(j));
                            if (auto c = expect_eq(lbl("mu=", mu.bracketed(), " u-order=", j),
                                                   lhs, rhs))
                                return c;
                        }
                        return std::nullopt;
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "sinverse-deltaprime", "series",
        "eq:SinverseDeltaprime — \"For any symmetric function $F$\" (plus its w-inserted form)",
        "|mu| <= N; u-order <= N; compared below the truncation degree",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 0; n <= b.N; ++n)
                for (const Partition& mu : partitions_of(n)) {
                    v.push_back({lbl("mu=", mu.bracketed()), [mu, b]() -> std::optional<Counterexample> {
                        MacBasis& B = mac_basis();
                        int nmu = mu.size();
                        int cap = nmu + b.N;  // compare components below cap - N
                        {
                            // stated form, over {q,t,u}
                            VarListPtr V = qt_vars_plus({"u"});
                            RatQT one = RatQT::integer(V, 1);
                            RatQT u = RatQT::variable(V, "u");
                            RatQT M = M_poly(V);
                            SymFunc F = H_of(mu, V);
                            SymFunc T1F = translate(F, Alphabet::scalar(one));
                            SymFunc G = mult_series(Alphabet::scalar(-one / M), T1F, cap);
                            SymFunc nG = nabla(B, G);
                            for (int k = 0; k <= b.N; ++k) {
                                SymFunc lhs = nabla(B, perp(h_basis(V, k), nG), true);
                                // Delta'_u = Exp[u/M] Delta_u, u^k coefficient
                                SymFunc Ak(V);
                                for (int i = 0; i <= k; ++i) {
                                    RatQT ci = plethysm_scalar(h_basis(V, i), one / M);
                                    SymFunc dterm = delta_eh(B, 'e', k - i, F);
                                    if ((k - i) % 2 != 0) dterm = -dterm;
                                    Ak += dterm.scale(ci);
                                }
                                SymFunc rhs = mult_series(Alphabet::scalar(-one / M),
                                                          translate(Ak, Alphabet::scalar(one)),
                                                          cap - k);
                                if (auto c = expect_eq(lbl("mu=", mu.bracketed(), " u^", k),
                                                       lhs.truncate(cap - b.N).scale(u.pow(k)),
                                                       rhs.truncate(cap - b.N).scale(u.pow(k))))
                                    return c;
                            }
                        }
                        {
                            // w-inserted form nabla^{-1} T_{u/w} nabla P_{-w/M} T_{1/w}
                            //   = P_{-w/M} T_{1/w} Delta'_u
                            VarListPtr V = qt_vars_plus({"u", "w"});
                            RatQT one = RatQT::integer(V, 1);
                            RatQT u = RatQT::variable(V, "u");
                            RatQT w = RatQT::variable(V, "w");
                            RatQT M = M_poly(V);
                            SymFunc F = H_of(mu, V);
                            SymFunc TwF = translate(F, Alphabet::scalar(one / w));
                            SymFunc G = mult_series(Alphabet::scalar(-w / M), TwF, cap);
                            SymFunc nG = nabla(B, G);
                            for (int k = 0; k <= b.N; ++k) {
                                SymFunc lhs = nabla(B, perp(h_basis(V, k), nG), true)
                                                  .scale((u / w).pow(k));
                                SymFunc Ak(V);
                                for (int i = 0; i <= k; ++i) {
                                    RatQT ci = plethysm_scalar(h_basis(V, i), one / M);
                                    SymFunc dterm = delta_eh(B, 'e', k - i, F);
                                    if ((k - i) % 2 != 0) dterm = -dterm;
                                    Ak += dterm.scale(ci);
                                }
                                Ak = Ak.scale(u.pow(k));
                                SymFunc rhs = mult_series(Alphabet::scalar(-w / M),
                                                          translate(Ak, Alphabet::scalar(one / w)),
                                                          cap - k);
                                if (auto c = expect_eq(lbl("mu=", mu.bracketed(), " u^", k, " (w form)"),
                                                       lhs.truncate(cap - b.N),
                                                       rhs.truncate(cap - b.N)))
                                    return c;
                            }
                        }
                        return std::nullopt;
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "tesler", "series",
        "eq:TeslerId — \"For any monomial z and any partition\"",
        "|mu| <= N, truncated at total degree N + |mu|; z adjoined",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 0; n <= b.N; ++n)
                for (const Partition& mu : partitions_of(n)) {
                    v.push_back({lbl("mu=", mu.bracketed()), [mu, b]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars_plus({"z"});
                        MacBasis& B = mac_basis();
                        RatQT one = RatQT::integer(V, 1);
                        RatQT z = RatQT::variable(V, "z");
                        RatQT M = M_poly(V);
                        int nmu = mu.size();
                        int D = nmu + b.N;
                        // Exp[-z X D_mu / M] up to degree D
                        Alphabet A = Alphabet::scaled_X(-z * D_of(mu, V) / M);
                        SymFunc S(V);
                        for (int j = 0; j <= D; ++j) S += plethysm(h_basis(V, j), A);
                        SymFunc G = mult_series(Alphabet::scalar(z / M), nabla(B, S, true), D);
                        // the series collapses above |mu|
                        for (int m = nmu + 1; m <= D; ++m) {
                            if (!G.component(m).is_zero())
                                return Counterexample{lbl("mu=", mu.bracketed()),
                                                      G.component(m).str(), "0",
                                                      lbl("nonvanishing component at degree ", m)};
                        }
                        // T_{-1/z} = sum (-1/z)^k e_k^perp
                        SymFunc R(V);
                        for (int k = 0; k <= nmu; ++k)
                            R += perp(e_basis(V, k), G).scale((-(one / z)).pow(k));
                        // every term must sit at z-power = degree >= 0
                        for (const auto& [la, c] : R.coeffs()) {
                            RatQT expected_power = z.pow(la.size());
                            SymFunc unit = SymFunc::p(V, la, c / expected_power);
                            for (const auto& [la2, c2] : unit.coeffs())
                                if (c2.depends_on("z"))
                                    return Counterexample{lbl("mu=", mu.bracketed()),
                                                          R.str(), "z^deg * H~_mu",
                                                          "residual z-power at " + la.bracketed()};
                        }
                        SymFunc rhs = H_of(mu, V).map_coeffs(
                            [&](const RatQT& c) { return c * z.pow(nmu); });
                        return expect_eq(lbl("mu=", mu.bracketed()), R, rhs);
                    }});
                }
            return v;
        }});
}

}  // namespace qtsym::detail
