#include "checks_registry.hpp"

#include <algorithm>

// Consequences of the Theta reciprocity (section 5).

namespace qtsym::detail {

void add_sec5_checks(std::vector<Check>& out) {
    out.push_back(Check{
        "theta-MBmu", "sec5",
        "eq:ThetaMBmu — \"crucial in all the other applications\"",
        "mu |- k <= N, F = H~_nu with |nu| = n <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int k = 0; k <= b.N; ++k)
                for (const Partition& mu : partitions_of(k))
                    for (int n = 0; n <= b.N; ++n) {
                        v.push_back({lbl("mu=", mu.bracketed(), " n=", n),
                                     [k, mu, n]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars();
                            MacBasis& B = mac_basis();
                            RatQT MB = M_poly(V) * B_of(mu, V);
                            SymFunc base = perp(h_basis(V, k), theta_eh(B, 'e', n, H_of(mu, V)));
                            for (const Partition& nu : partitions_of(n)) {
                                SymFunc F = H_of(nu, V);
                                if (auto c = expect_eq(
                                        lbl("mu=", mu.bracketed(), " F=H", nu.bracketed()),
                                        star(base, F), plethysm_scalar(F, MB)))
                                    return c;
                            }
                            return std::nullopt;
                        }});
                    }
            return v;
        }});

    out.push_back(Check{
        "aperp-delta", "sec5",
        "eq:AperpDeltaomegaA — \"Given m,d∈ℕ, for any A\"",
        "d, m <= N, A = H~_alpha (alpha |- d), F = H~_gamma (gamma |- k <= N)",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int d = 0; d <= b.N; ++d)
                for (int m = 0; m <= b.N; ++m)
                    for (int k = 0; k <= b.N; ++k)
                        for (const Partition& al : partitions_of(d)) {
                            v.push_back({lbl("d=", d, " m=", m, " k=", k, " alpha=", al.bracketed()),
                                         [d, m, k, al]() -> std::optional<Counterexample> {
                                VarListPtr V = qt_vars();
                                MacBasis& B = mac_basis();
                                SymFunc A = H_of(al, V);
                                for (const Partition& ga : partitions_of(k)) {
                                    SymFunc F = H_of(ga, V);
                                    SymFunc lhs =
                                        perp(A, perp(h_basis(V, k), theta_eh(B, 'e', m, F)));
                                    SymFunc inner = m - d < 0
                                                        ? SymFunc(V)
                                                        : theta_eh(B, 'e', m - d,
                                                                   delta_op(B, omega(A), F));
                                    SymFunc rhs = perp(h_basis(V, k), inner);
                                    if (auto c = expect_eq(lbl("alpha=", al.bracketed(),
                                                               " gamma=", ga.bracketed(),
                                                               " m=", m),
                                                           lhs, rhs))
                                        return c;
                                }
                                return std::nullopt;
                            }});
                        }
            return v;
        }});

    out.push_back(Check{
        "theta-factor", "sec5",
        "eq:newthm — \"Given k,m,ℓ∈ℕ, m≥1\"",
        "k, l <= N, 1 <= m <= N, G = H~_gamma (gamma |- k), F = H~_phi (phi |- l)",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int m = 1; m <= b.N; ++m)
                for (int k = 0; k <= b.N; ++k)
                    for (int l = 0; l <= b.N; ++l)
                        for (const Partition& ph : partitions_of(l)) {
                            v.push_back({lbl("m=", m, " k=", k, " phi=", ph.bracketed()),
                                         [m, k, l, ph]() -> std::optional<Counterexample> {
                                VarListPtr V = qt_vars();
                                MacBasis& B = mac_basis();
                                SymFunc F = H_of(ph, V);
                                for (const Partition& ga : partitions_of(k)) {
                                    SymFunc G = H_of(ga, V);
                                    SymFunc thFG =
                                        (l >= 1 && k >= 1)
                                            ? theta_chain(B, {e_basis(V, m), F}, G)
                                            : theta_eh(B, 'e', m, theta(B, F, G));
                                    SymFunc lhs = perp(h_basis(V, k + l), thFG);
                                    SymFunc rhs = delta_op(
                                        B, F, perp(h_basis(V, k), theta_eh(B, 'e', m, G)));
                                    if (auto c = expect_eq(lbl("m=", m, " phi=", ph.bracketed(),
                                                               " gamma=", ga.bracketed()),
                                                           lhs, rhs))
                                        return c;
                                }
                                return std::nullopt;
                            }});
                        }
            return v;
        }});

    out.push_back(Check{
        "deltaF-pi-em", "sec5",
        "eq:DeltaFPiemstar — \"Given postive m,k∈ℕ\"",
        "1 <= m, k <= N, F = H~_phi (phi |- k)",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int m = 1; m <= b.N; ++m)
                for (int k = 1; k <= b.N; ++k)
                    for (const Partition& ph : partitions_of(k)) {
                        v.push_back({lbl("m=", m, " phi=", ph.bracketed()),
                                     [m, k, ph]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars();
                            MacBasis& B = mac_basis();
                            SymFunc F = H_of(ph, V);
                            SymFunc lhs = perp(h_basis(V, k),
                                               theta_eh(B, 'e', m, pi_op(B, star_f(F))));
                            SymFunc rhs = delta_op(B, F, pi_op(B, star_f(e_basis(V, m))));
                            return expect_eq(lbl("m=", m, " phi=", ph.bracketed()), lhs, rhs);
                        }});
                    }
            return v;
        }});

    out.push_back(Check{
        "deltaF-em", "sec5",
        "eq:DeltaFem — \"is an easy extension of Theorem\"",
        "mu |- k <= N, F = H~_phi (phi |- l <= N), 1 <= m <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int m = 1; m <= b.N; ++m)
                for (int k = 0; k <= b.N; ++k)
                    for (int l = 0; l <= b.N; ++l)
                        for (const Partition& mu : partitions_of(k)) {
                            v.push_back({lbl("m=", m, " l=", l, " mu=", mu.bracketed()),
                                         [m, k, l, mu]() -> std::optional<Counterexample> {
                                VarListPtr V = qt_vars();
                                MacBasis& B = mac_basis();
                                SymFunc Hmu = H_of(mu, V);
                                SymFunc em_XB = plethysm(e_basis(V, m),
                                                         Alphabet::scaled_X(B_of(mu, V)));
                                for (const Partition& ph : partitions_of(l)) {
                                    SymFunc F = H_of(ph, V);
                                    SymFunc thFH = (l >= 1 && k >= 1)
                                                       ? theta_chain(B, {e_basis(V, m), F}, Hmu)
                                                       : theta_eh(B, 'e', m, theta(B, F, Hmu));
                                    SymFunc lhs = perp(h_basis(V, k + l), thFH);
                                    SymFunc rhs = delta_op(B, F, em_XB);
                                    if (auto c = expect_eq(lbl("m=", m, " mu=", mu.bracketed(),
                                                               " phi=", ph.bracketed()),
                                                           lhs, rhs))
                                        return c;
                                }
                                return std::nullopt;
                            }});
                        }
            return v;
        }});

    out.push_back(Check{
        "pieri-reciprocity", "sec5",
        "§5.1 first corollary — \"For every non empty partition\"",
        "nu |- k (1 <= k <= N), A = H~_alpha (alpha |- d <= N), F = H~_phi (phi |- m, 1 <= m <= N)",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int k = 1; k <= b.N; ++k)
                for (int d = 0; d <= b.N; ++d)
                    for (int m = 1; m <= b.N; ++m)
                        for (const Partition& nu : partitions_of(k)) {
                            v.push_back({lbl("nu=", nu.bracketed(), " d=", d, " m=", m),
                                         [k, d, m, nu]() -> std::optional<Counterexample> {
                                VarListPtr V = qt_vars();
                                MacBasis& B = mac_basis();
                                RatQT M = M_poly(V);
                                for (const Partition& al : partitions_of(d)) {
                                    SymFunc A = H_of(al, V);
                                    // Pieri coefficients of A^* against H~_nu
                                    auto dcoef = mac_expand(B, star_f(A) * H_of(nu, V));
                                    for (const Partition& ph : partitions_of(m)) {
                                        SymFunc F = H_of(ph, V);
                                        RatQT lhs(V);
                                        for (const auto& [mu, dmn] : dcoef)
                                            lhs += Pi_of(mu, V) * dmn *
                                                   plethysm_scalar(F, M * B_of(mu, V));
                                        RatQT rhs = Pi_of(nu, V) *
                                                    plethysm_scalar(delta_op(B, A, F),
                                                                    M * B_of(nu, V));
                                        if (auto c = expect_eq(
                                                lbl("nu=", nu.bracketed(), " alpha=",
                                                    al.bracketed(), " phi=", ph.bracketed()),
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
        "haglund-rec", "sec5",
        "eq:HaglundRec — \"Given positive n,k∈ℕ, for every P\"",
        "1 <= n, k <= N, P = H~_rho (rho |- n), Q = H~_kappa (kappa |- k)",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 1; n <= b.N; ++n)
                for (int k = 1; k <= b.N; ++k)
                    for (const Partition& rho : partitions_of(n)) {
                        v.push_back({lbl("n=", n, " k=", k, " rho=", rho.bracketed()),
                                     [n, k, rho]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars();
                            MacBasis& B = mac_basis();
                            SymFunc P = H_of(rho, V);
                            for (const Partition& ka : partitions_of(k)) {
                                SymFunc Q = H_of(ka, V);
                                SymFunc lhs =
                                    perp(h_basis(V, k), delta_op(B, P, pi_op(B, star_f(Q))));
                                SymFunc rhs =
                                    perp(h_basis(V, n), delta_op(B, Q, pi_op(B, star_f(P))));
                                if (auto c = expect_eq(lbl("rho=", rho.bracketed(),
                                                           " kappa=", ka.bracketed()),
                                                       lhs, rhs))
                                    return c;
                            }
                            return std::nullopt;
                        }});
                    }
            return v;
        }});

    out.push_back(Check{
        "ghr-thm1", "sec5",
        "\"Δ_P α_k p_k\" — reciprocity of Garsia-Haglund-Romero (Theorem 1)",
        "1 <= n, k <= N, P = H~_rho (rho |- n), Q = H~_kappa (kappa |- k)",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 1; n <= b.N; ++n)
                for (int k = 1; k <= b.N; ++k)
                    for (const Partition& rho : partitions_of(n)) {
                        v.push_back({lbl("n=", n, " k=", k, " rho=", rho.bracketed()),
                                     [n, k, rho]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars();
                            MacBasis& B = mac_basis();
                            auto alpha = [&](int j) {
                                return RatQT::integer(V, j % 2 == 0 ? -1 : 1) /
                                       (qint(V, j, "q") * qint(V, j, "t"));
                            };
                            SymFunc P = H_of(rho, V);
                            for (const Partition& ka : partitions_of(k)) {
                                SymFunc Q = H_of(ka, V);
                                RatQT lhs = hall(
                                    delta_op(B, P, p_basis(V, k).scale(alpha(k))), omega(Q));
                                RatQT rhs = hall(
                                    delta_op(B, Q, p_basis(V, n).scale(alpha(n))), omega(P));
                                if (auto c = expect_eq(lbl("rho=", rho.bracketed(),
                                                           " kappa=", ka.bracketed()),
                                                       lhs, rhs))
                                    return c;
                            }
                            return std::nullopt;
                        }});
                    }
            return v;
        }});

    out.push_back(Check{
        "haglund-lem", "sec5",
        "eq:HaglundLem — \"first appeared in \\cite{Haglund-Schroeder-2004}\"",
        "1 <= n, k <= N, Q = H~_kappa (kappa |- n)",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 1; n <= b.N; ++n)
                for (int k = 1; k <= b.N; ++k) {
                    v.push_back({lbl("n=", n, " k=", k), [n, k]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars();
                        MacBasis& B = mac_basis();
                        for (const Partition& ka : partitions_of(n)) {
                            SymFunc Q = H_of(ka, V);
                            RatQT lhs = hall(delta_eh(B, 'e', k - 1, e_basis(V, n)), omega(Q));
                            RatQT rhs = hall(delta_op(B, Q, e_basis(V, k)), h_basis(V, k));
                            if (auto c = expect_eq(lbl("n=", n, " k=", k, " kappa=", ka.bracketed()),
                                                   lhs, rhs))
                                return c;
                        }
                        return std::nullopt;
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "delta-prime-hh", "sec5",
        "eq:scalarDeltaprimehh — \"Given m,n,k∈ℕ with n≥k\"",
        "0 <= k <= min(m, n), 1 <= n, m <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int k = 0; k <= b.N; ++k)
                for (int n = std::max(1, k); n <= b.N; ++n)
                    for (int m = std::max(1, k); m <= b.N; ++m) {
                        v.push_back({lbl("m=", m, " n=", n, " k=", k),
                                     [m, n, k]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars();
                            MacBasis& B = mac_basis();
                            RatQT lhs = hall(
                                delta_eh(B, 'h', n, delta_eh(B, 'e', m - k, e_basis(V, m + 1), true)),
                                h_basis(V, m + 1));
                            RatQT rhs = hall(
                                delta_eh(B, 'e', m + n - k - 1, e_basis(V, m + n), true),
                                h_basis(V, m) * h_basis(V, n));
                            return expect_eq(lbl("m=", m, " n=", n, " k=", k), lhs, rhs);
                        }});
                    }
            return v;
        }});

    out.push_back(Check{
        "ghr-cor2", "sec5",
        "\"(−qt)^{k−1}⟨Δ_Q h_k,e_k⟩\" — Garsia-Haglund-Romero Corollary 2",
        "1 <= n, k <= N, Q = H~_kappa (kappa |- n)",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 1; n <= b.N; ++n)
                for (int k = 1; k <= b.N; ++k) {
                    v.push_back({lbl("n=", n, " k=", k), [n, k]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars();
                        MacBasis& B = mac_basis();
                        RatQT qt = RatQT::variable(V, "q") * RatQT::variable(V, "t");
                        for (const Partition& ka : partitions_of(n)) {
                            SymFunc Q = H_of(ka, V);
                            RatQT lhs = hall(delta_eh(B, 'h', k - 1, e_basis(V, n)), omega(Q));
                            // the (-qt) power follows the corrected Pienhn
                            // exponent (n-1, not 1-n); see pi-family
                            RatQT rhs = (-qt).pow(1 - k) *
                                        hall(delta_op(B, Q, h_basis(V, k)), e_basis(V, k));
                            if (auto c = expect_eq(lbl("n=", n, " k=", k, " kappa=", ka.bracketed()),
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
