#include "checks_registry.hpp"

// Basic Macdonald-polynomial facts of sections 1.2-1.5.

namespace qtsym::detail {

void add_macbasics_checks(std::vector<Check>& out) {
    out.push_back(Check{
        "mac-normalization", "mac-basics",
        "eq:MacNormal — \"Recall the normalization given for all\"",
        "|mu| <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 0; n <= b.N; ++n)
                for (const Partition& mu : partitions_of(n)) {
                    v.push_back({lbl("mu=", mu.bracketed()), [mu, n]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars();
                        SymFunc lhs = perp(h_basis(V, n), mac_basis().H(mu));
                        return expect_eq(lbl("mu=", mu.bracketed()), lhs, SymFunc::one(V));
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "mac-orthogonality", "mac-basics",
        "eq:H_orthogonality — \"orthogonal with respect to the star scalar product\"",
        "|lambda| = |mu| <= N, all pairs",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 0; n <= b.N; ++n)
                for (const Partition& la : partitions_of(n)) {
                    v.push_back({lbl("lambda=", la.bracketed()), [la, n]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars();
                        for (const Partition& mu : partitions_of(n)) {
                            RatQT sp = star(mac_basis().H(la), mac_basis().H(mu));
                            RatQT expect = la == mu ? w_of(mu, V) : RatQT(V);
                            if (auto c = expect_eq(lbl("lambda=", la.bracketed(), " mu=", mu.bracketed()),
                                                   sp, expect))
                                return c;
                        }
                        return std::nullopt;
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "mac-cauchy", "mac-basics",
        "eq:Mac_Cauchy — \"give the following Cauchy identity\"",
        "n <= N, paired against every H~_nu in the second alphabet",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 1; n <= b.N; ++n)
                for (const Partition& nu : partitions_of(n)) {
                    v.push_back({lbl("n=", n, " nu=", nu.bracketed()), [n, nu]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars();
                        MacBasis& B = mac_basis();
                        // <e_n[XY/M], H~_nu[Y]>_*,Y = sum_la c_la <p_la,H~_nu>_* p_la[X] / M^(la)
                        SymFunc lhs(V);
                        SymFunc en = e_basis(V, n);
                        for (const auto& [la, c] : en.coeffs()) {
                            RatQT Mla = RatQT::integer(V, 1);
                            for (int p : la.parts())
                                Mla *= M_poly(V).substitute_powers(static_cast<unsigned>(p));
                            RatQT pair = star(p_basis(V, la), B.H(nu));
                            lhs += SymFunc::p(V, la, c * pair / Mla);
                        }
                        // sum_mu H~_mu <H~_mu, H~_nu>_*/w_mu, computed honestly
                        SymFunc rhs(V);
                        for (const Partition& mu : partitions_of(n))
                            rhs += B.H(mu).scale(star(B.H(mu), B.H(nu)) / w_of(mu, V));
                        return expect_eq(lbl("n=", n, " nu=", nu.bracketed()), lhs, rhs);
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "mac-row", "mac-basics",
        "eq:Hnhn — \"The following basic identity is well known\"",
        "n <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 1; n <= b.N; ++n) {
                v.push_back({lbl("n=", n), [n]() -> std::optional<Counterexample> {
                    VarListPtr V = qt_vars();
                    RatQT one = RatQT::integer(V, 1);
                    RatQT q = RatQT::variable(V, "q");
                    SymFunc rhs = plethysm(h_basis(V, n), Alphabet::scaled_X(one / (one - q)))
                                      .scale(qrising(q, static_cast<unsigned>(n)));
                    return expect_eq(lbl("n=", n), mac_basis().H(Partition::single(n)), rhs);
                }});
            }
            return v;
        }});

    out.push_back(Check{
        "mac-1mv", "mac-basics",
        "eq:H1mv — \"Just take μ to be the empty partition\"",
        "|lambda| <= N, v adjoined",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 0; n <= b.N; ++n)
                for (const Partition& la : partitions_of(n)) {
                    v.push_back({lbl("lambda=", la.bracketed()), [la]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars_plus({"v"});
                        RatQT one = RatQT::integer(V, 1);
                        RatQT vv = RatQT::variable(V, "v");
                        RatQT q = RatQT::variable(V, "q"), t = RatQT::variable(V, "t");
                        Alphabet A(V);
                        A.add(one, false).add(-vv, false);
                        RatQT lhs = plethysm(H_of(la, V), A).constant_term();
                        RatQT rhs = one;
                        for (const auto& c : la.cells())
                            rhs *= one - vv * q.pow(c.coarm) * t.pow(c.coleg);
                        return expect_eq(lbl("lambda=", la.bracketed()), lhs, rhs);
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "mac-hooks", "mac-basics",
        "cor:ehMacId — \"Given n,k∈ℕ, n≥k, for any partition\"",
        "|lambda| <= N, 0 <= k <= n",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 1; n <= b.N; ++n)
                for (const Partition& la : partitions_of(n)) {
                    v.push_back({lbl("lambda=", la.bracketed()), [la, n]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars();
                        RatQT one = RatQT::integer(V, 1);
                        SymFunc HH = H_of(la, V);
                        for (int k = 0; k + 1 <= n; ++k) {
                            std::vector<int> hook{n - k};
                            hook.insert(hook.end(), static_cast<std::size_t>(k), 1);
                            RatQT lhs = hall(HH, s_basis(V, Partition(hook)));
                            RatQT rhs = plethysm_scalar(e_basis(V, k), B_of(la, V) - one);
                            if (auto c = expect_eq(lbl("lambda=", la.bracketed(), " k=", k, " (hook)"),
                                                   lhs, rhs))
                                return c;
                        }
                        for (int k = 0; k <= n; ++k) {
                            RatQT lhs = hall(HH, e_basis(V, k) * h_basis(V, n - k));
                            RatQT rhs = plethysm_scalar(e_basis(V, k), B_of(la, V));
                            if (auto c = expect_eq(lbl("lambda=", la.bracketed(), " k=", k, " (ekh)"),
                                                   lhs, rhs))
                                return c;
                        }
                        return std::nullopt;
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "nabla-omegabar", "mac-basics",
        "eq:nablaomegabar — \"deduced from Macdonald's duality\"",
        "|mu| <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 0; n <= b.N; ++n)
                for (const Partition& mu : partitions_of(n)) {
                    v.push_back({lbl("mu=", mu.bracketed()), [mu, n]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars();
                        SymFunc lhs = nabla(mac_basis(), omega_bar(mac_basis().H(mu)));
                        SymFunc rhs = n % 2 == 0 ? mac_basis().H(mu) : -mac_basis().H(mu);
                        return expect_eq(lbl("mu=", mu.bracketed()), lhs, rhs);
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "pi-omegabar", "mac-basics",
        "eq:PiomegabarPi — \"The following property is easy to check\"",
        "1 <= |mu| <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 1; n <= b.N; ++n)
                for (const Partition& mu : partitions_of(n)) {
                    v.push_back({lbl("mu=", mu.bracketed()), [mu]() -> std::optional<Counterexample> {
                        MacBasis& B = mac_basis();
                        SymFunc F = B.H(mu);
                        SymFunc lhs = omega_bar(pi_op(B, omega_bar(F)));
                        SymFunc rhs = -nabla(B, pi_op(B, F), true);
                        return expect_eq(lbl("mu=", mu.bracketed()), lhs, rhs);
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "pi-family", "mac-basics",
        "eq:Pien, eq:Pienen, eq:Pienhn, eq:omegapn — \"It is well known and easy to show\"",
        "1 <= n <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 1; n <= b.N; ++n) {
                v.push_back({lbl("n=", n), [n]() -> std::optional<Counterexample> {
                    VarListPtr V = qt_vars();
                    MacBasis& B = mac_basis();
                    RatQT M = M_poly(V);
                    RatQT alpha = RatQT::integer(V, n % 2 == 0 ? -1 : 1) /
                                  (qint(V, n, "q") * qint(V, n, "t"));
                    SymFunc pien = pi_op(B, star_f(e_basis(V, n)));
                    if (auto c = expect_eq(lbl("n=", n, " (Pien = omega pn*)"), pien,
                                           omega(star_f(p_basis(V, n)))))
                        return c;
                    if (auto c = expect_eq(lbl("n=", n, " (Pien = alpha pn/M)"), pien,
                                           p_basis(V, n).scale(alpha / M)))
                        return c;
                    if (auto c = expect_eq(lbl("n=", n, " (Pienen)"),
                                           delta_op(B, e_basis(V, 1), pien),
                                           e_basis(V, n).scale(RatQT::integer(V, 1) / M)))
                        return c;
                    // (-qt)^{n-1} Delta_{e_n}^{-1} Delta_{e_{n-1}} Pi e_n* = h_n/M;
                    // the exponent 1-n printed in the paper is a typo: the
                    // paper's own proof of the (-qt)-corollary in section 5
                    // substitutes the n-1 form, which the computation confirms.
                    RatQT qt = RatQT::variable(V, "q") * RatQT::variable(V, "t");
                    SymFunc lhs = delta_op(B, e_basis(V, n),
                                           delta_eh(B, 'e', n - 1, pien), false, true)
                                      .scale((-qt).pow(n - 1));
                    if (auto c = expect_eq(lbl("n=", n, " (Pienhn)"), lhs,
                                           h_basis(V, n).scale(RatQT::integer(V, 1) / M)))
                        return c;
                    SymFunc wpn = omega(p_basis(V, n));
                    if (auto c = expect_eq(lbl("n=", n, " (omegapn product form)"), wpn,
                                           pien.scale(qint(V, n, "q") * qint(V, n, "t") * M)))
                        return c;
                    SymFunc enksum(V);
                    for (int k = 1; k <= n; ++k)
                        enksum += enk(V, n, k).scale(qint(V, n, "q") / qint(V, k, "q"));
                    return expect_eq(lbl("n=", n, " (omegapn Enk sum)"), wpn, enksum);
                }});
            }
            return v;
        }});

    out.push_back(Check{
        "enk-def", "mac-basics",
        "eq:Enkdef — \"uniquely determined\"",
        "n <= N, z adjoined",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 1; n <= b.N; ++n) {
                v.push_back({lbl("n=", n), [n]() -> std::optional<Counterexample> {
                    VarListPtr V = qt_vars_plus({"z"});
                    RatQT one = RatQT::integer(V, 1);
                    RatQT q = RatQT::variable(V, "q"), z = RatQT::variable(V, "z");
                    SymFunc lhs = plethysm(e_basis(V, n), Alphabet::scaled_X((one - z) / (one - q)));
                    SymFunc rhs(V);
                    for (int k = 1; k <= n; ++k)
                        rhs += enk(V, n, k).scale(qrising(z, static_cast<unsigned>(k)) /
                                                  qrising(q, static_cast<unsigned>(k)));
                    return expect_eq(lbl("n=", n), lhs, rhs);
                }});
            }
            return v;
        }});

    out.push_back(Check{
        "enk-substitution", "mac-basics",
        "eq:enEnkformula — \"getting immediately the formula\"",
        "n <= N, 0 <= j <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 1; n <= b.N; ++n)
                for (int j = 0; j <= b.N; ++j) {
                    v.push_back({lbl("n=", n, " j=", j), [n, j]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars();
                        SymFunc lhs = plethysm(e_basis(V, n), Alphabet::scaled_X(qint(V, j)));
                        SymFunc rhs(V);
                        for (int k = 1; k <= n; ++k)
                            rhs += enk(V, n, k).scale(qbinom(V, k + j - 1, k));
                        return expect_eq(lbl("n=", n, " j=", j), lhs, rhs);
                    }});
                }
            return v;
        }});
}

}  // namespace qtsym::detail
