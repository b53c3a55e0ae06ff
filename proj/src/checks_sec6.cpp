#include "checks_registry.hpp"

// Consequences of the inverse commutation identities (section 6).

namespace qtsym::detail {

void add_sec6_checks(std::vector<Check>& out) {
    out.push_back(Check{
        "hkperp-zero", "sec6",
        "lem:hkperpThetamFzero — \"with m≥1 and k>ℓ\"",
        "1 <= m <= N, l < k <= N, F = H~_phi (phi |- l)",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int m = 1; m <= b.N; ++m)
                for (int k = 1; k <= b.N; ++k)
                    for (int l = 0; l < k; ++l) {
                        v.push_back({lbl("m=", m, " k=", k, " l=", l),
                                     [m, k, l]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars();
                            MacBasis& B = mac_basis();
                            for (const Partition& ph : partitions_of(l)) {
                                SymFunc lhs =
                                    perp(h_basis(V, k), theta_eh(B, 'e', m, H_of(ph, V)));
                                if (auto c = expect_eq(lbl("m=", m, " k=", k,
                                                           " phi=", ph.bracketed()),
                                                       lhs, SymFunc(V)))
                                    return c;
                            }
                            return std::nullopt;
                        }});
                    }
            return v;
        }});

    out.push_back(Check{
        "theta-delta-h", "sec6",
        "eq:lemThetaekDeltahk — \"first appeared in \\cite[Lemma~6.1]\"",
        "l <= n <= N, 0 <= k <= n, F = H~_phi (phi |- n-l)",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 0; n <= b.N; ++n)
                for (int l = 0; l <= n; ++l)
                    for (int k = 0; k <= n; ++k) {
                        v.push_back({lbl("n=", n, " l=", l, " k=", k),
                                     [n, l, k]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars();
                            MacBasis& B = mac_basis();
                            for (const Partition& ph : partitions_of(n - l)) {
                                SymFunc F = H_of(ph, V);
                                RatQT lhs = hall(theta_eh(B, 'e', l, F),
                                                 h_basis(V, k) * e_basis(V, n - k));
                                RatQT rhs = hall(delta_eh(B, 'h', l, F),
                                                 h_basis(V, k) * e_basis(V, n - k - l));
                                if (auto c = expect_eq(lbl("n=", n, " l=", l, " k=", k,
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
        "hperp-basics", "sec6",
        "eq:hrperppn, eq:hrperpen — \"follows immediately from the well-know formula\"",
        "r, n <= N + 2",
        [](const Bounds& b) {
            std::vector<Instance> v;
            v.push_back({"all", [b]() -> std::optional<Counterexample> {
                VarListPtr V = qt_vars();
                for (int r = 2; r <= b.N + 2; ++r)
                    for (int n = 1; n <= b.N + 2; ++n) {
                        SymFunc lhs = perp(h_basis(V, r), p_basis(V, n));
                        SymFunc rhs = r == n ? SymFunc::one(V) : SymFunc(V);
                        if (auto c = expect_eq(lbl("r=", r, " n=", n, " (p)"), lhs, rhs)) return c;
                    }
                for (int r = 1; r <= b.N + 2; ++r)
                    for (int n = 1; n <= b.N + 2; ++n) {
                        SymFunc lhs = perp(h_basis(V, r), e_basis(V, n));
                        SymFunc rhs = r == 1 ? e_basis(V, n - 1) : SymFunc(V);
                        if (auto c = expect_eq(lbl("r=", r, " n=", n, " (e)"), lhs, rhs)) return c;
                    }
                return std::nullopt;
            }});
            return v;
        }});

    out.push_back(Check{
        "hk-theta-en", "sec6",
        "eq:hkThetaemen — \"Given k,m,n∈ℕ, n≥1\"",
        "k, m <= N, 1 <= n <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int k = 0; k <= b.N; ++k)
                for (int m = 0; m <= b.N; ++m)
                    for (int n = 1; n <= b.N; ++n) {
                        v.push_back({lbl("k=", k, " m=", m, " n=", n),
                                     [k, m, n]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars();
                            MacBasis& B = mac_basis();
                            SymFunc lhs = perp(h_basis(V, k), theta_eh(B, 'e', m, e_basis(V, n)));
                            SymFunc rhs(V);
                            if (m - k >= 0)
                                rhs += theta_eh(B, 'e', m - k, delta_eh(B, 'e', k, e_basis(V, n)));
                            if (m - k + 1 >= 0)
                                rhs += theta_eh(B, 'e', m - k + 1,
                                                delta_eh(B, 'e', k - 1, e_basis(V, n - 1)));
                            return expect_eq(lbl("k=", k, " m=", m, " n=", n), lhs, rhs);
                        }});
                    }
            return v;
        }});

    out.push_back(Check{
        "delta-prime-en", "sec6",
        "eq:Deltaprimeen — \"first appeared in \\cite[Theorem~3.1]\"",
        "0 <= k < n <= N, both displayed identities",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 1; n <= b.N; ++n)
                for (int k = 0; k < n; ++k) {
                    v.push_back({lbl("n=", n, " k=", k), [n, k]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars();
                        MacBasis& B = mac_basis();
                        {
                            // the left side reads Delta_{e_{n-k-1}} e_n: the
                            // paper's derivation produces it with this index
                            // (its display drops the -1)
                            SymFunc lhs1 = delta_eh(B, 'e', n - k - 1, e_basis(V, n));
                            SymFunc rhs1 =
                                theta_eh(B, 'e', k, delta_eh(B, 'e', n - k, e_basis(V, n - k))) +
                                theta_eh(B, 'e', k + 1,
                                         delta_eh(B, 'e', n - k - 1, e_basis(V, n - k - 1)));
                            if (auto c = expect_eq(lbl("n=", n, " k=", k, " (unprimed)"), lhs1, rhs1))
                                return c;
                        }
                        SymFunc lhs2 = delta_eh(B, 'e', n - k - 1, e_basis(V, n), true);
                        SymFunc rhs2 =
                            theta_eh(B, 'e', k, delta_eh(B, 'e', n - k, e_basis(V, n - k)));
                        return expect_eq(lbl("n=", n, " k=", k, " (primed)"), lhs2, rhs2);
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "delta-pn", "sec6",
        "eq:Deltapn — \"We take the chance to give a reformulation\"",
        "0 <= k < n <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 1; n <= b.N; ++n)
                for (int k = 0; k < n; ++k) {
                    v.push_back({lbl("n=", n, " k=", k), [n, k]() -> std::optional<Counterexample> {
                        VarListPtr V = qt_vars();
                        MacBasis& B = mac_basis();
                        SymFunc lhs = delta_eh(B, 'e', n - k, pi_op(B, star_f(e_basis(V, n))));
                        SymFunc rhs = theta_eh(
                            B, 'e', k,
                            delta_eh(B, 'e', n - k, pi_op(B, star_f(e_basis(V, n - k)))));
                        return expect_eq(lbl("n=", n, " k=", k), lhs, rhs);
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "hkperp-theta-pi", "sec6",
        "eq:hkperpThetaem — \"The following lemma will be useful\"",
        "k <= N, 1 <= m, n <= N",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int k = 0; k <= b.N; ++k)
                for (int m = 1; m <= b.N; ++m)
                    for (int n = 1; n <= b.N; ++n) {
                        v.push_back({lbl("k=", k, " m=", m, " n=", n),
                                     [k, m, n]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars();
                            MacBasis& B = mac_basis();
                            SymFunc lhs = perp(
                                h_basis(V, k),
                                theta_eh(B, 'e', m, pi_op(B, star_f(e_basis(V, n)))));
                            SymFunc prod = star_f(h_basis(V, k)) * star_f(e_basis(V, m - k)) *
                                           star_f(e_basis(V, n - k));
                            SymFunc rhs = prod.is_zero() ? SymFunc(V) : pi_op(B, prod);
                            return expect_eq(lbl("k=", k, " m=", m, " n=", n), lhs, rhs);
                        }});
                    }
            return v;
        }});

    out.push_back(Check{
        "newdinv-4-4", "sec6",
        "\"first appeared in \\cite[Theorem~4.4]\" — scalar consequence",
        "k < m <= N, k <= n <= N, n >= 1",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int k = 0; k <= b.N; ++k)
                for (int m = k + 1; m <= b.N; ++m)
                    for (int n = std::max(1, k); n <= b.N; ++n) {
                        v.push_back({lbl("m=", m, " n=", n, " k=", k),
                                     [m, n, k]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars();
                            MacBasis& B = mac_basis();
                            RatQT lhs = hall(
                                delta_eh(B, 'e', m + n - k, e_basis(V, m + n - k)),
                                e_basis(V, k) * h_basis(V, n - k) * h_basis(V, m - k));
                            RatQT rhs = hall(
                                delta_eh(B, 'h', n,
                                         delta_eh(B, 'e', m - k, e_basis(V, m + 1), true)),
                                h_basis(V, m + 1));
                            return expect_eq(lbl("m=", m, " n=", n, " k=", k), lhs, rhs);
                        }});
                    }
            return v;
        }});

    out.push_back(Check{
        "bible-4-22", "sec6",
        "\"Given positive a,b,k∈ℕ with a≥k\" — Delta-pairs of the Bible",
        "1 <= k <= a <= N, 1 <= b <= N, both identities",
        [](const Bounds& bo) {
            std::vector<Instance> v;
            for (int a = 1; a <= bo.N; ++a)
                for (int k = 1; k <= a; ++k)
                    for (int b = 1; b <= bo.N; ++b) {
                        v.push_back({lbl("a=", a, " b=", b, " k=", k),
                                     [a, b, k]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars();
                            MacBasis& B = mac_basis();
                            RatQT l1 = hall(
                                delta_eh(B, 'e', a,
                                         delta_eh(B, 'e', a + b - k - 1, e_basis(V, a + b), true)),
                                h_basis(V, a + b));
                            RatQT r1 = hall(
                                delta_eh(B, 'h', k, delta_eh(B, 'e', a - k, e_basis(V, a + b - k))),
                                e_basis(V, a + b - k));
                            if (auto c = expect_eq(lbl("a=", a, " b=", b, " k=", k, " (first)"),
                                                   l1, r1))
                                return c;
                            RatQT l2 = hall(
                                delta_eh(B, 'e', a,
                                         delta_eh(B, 'e', a + b - k - 1, e_basis(V, a + b), true),
                                         true),
                                h_basis(V, a + b));
                            RatQT r2 = hall(
                                delta_eh(B, 'h', k,
                                         delta_eh(B, 'e', a - k, e_basis(V, a + b - k), true)),
                                e_basis(V, a + b - k));
                            return expect_eq(lbl("a=", a, " b=", b, " k=", k, " (primed)"), l2, r2);
                        }});
                    }
            return v;
        }});

    out.push_back(Check{
        "ghr-thm2", "sec6",
        "eq:GHRthm2 — \"h_j^⊥Δ_{e_{n−k}}α_n p_n\"",
        "1 <= j < n <= N, 1 <= k <= n",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 1; n <= b.N; ++n)
                for (int k = 1; k <= n; ++k)
                    for (int j = 1; j < n; ++j) {
                        v.push_back({lbl("n=", n, " k=", k, " j=", j),
                                     [n, k, j]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars();
                            MacBasis& B = mac_basis();
                            auto alpha = [&](int jj) {
                                return RatQT::integer(V, jj % 2 == 0 ? -1 : 1) /
                                       (qint(V, jj, "q") * qint(V, jj, "t"));
                            };
                            SymFunc lhs = perp(
                                h_basis(V, j),
                                delta_eh(B, 'e', n - k, p_basis(V, n).scale(alpha(n))));
                            SymFunc sub = e_basis(V, n - k - j) * h_basis(V, j);
                            SymFunc rhs = sub.is_zero()
                                              ? SymFunc(V)
                                              : delta_op(B, sub,
                                                         p_basis(V, n - j).scale(alpha(n - j)));
                            return expect_eq(lbl("n=", n, " k=", k, " j=", j), lhs, rhs);
                        }});
                    }
            return v;
        }});

    out.push_back(Check{
        "ghr-thm3", "sec6",
        "\"h_j^⊥Δ_{h_{n−k}}α_n p_n\" — Garsia-Haglund-Romero Theorem 3",
        "1 <= j < n <= N, 1 <= k <= n",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 1; n <= b.N; ++n)
                for (int k = 1; k <= n; ++k)
                    for (int j = 1; j < n; ++j) {
                        v.push_back({lbl("n=", n, " k=", k, " j=", j),
                                     [n, k, j]() -> std::optional<Counterexample> {
                            VarListPtr V = qt_vars();
                            MacBasis& B = mac_basis();
                            auto alpha = [&](int jj) {
                                return RatQT::integer(V, jj % 2 == 0 ? -1 : 1) /
                                       (qint(V, jj, "q") * qint(V, jj, "t"));
                            };
                            SymFunc lhs = perp(
                                h_basis(V, j),
                                delta_eh(B, 'h', n - k, p_basis(V, n).scale(alpha(n))));
                            SymFunc inner = delta_eh(
                                B, 'h', j,
                                delta_eh(B, 'e', n - k - j,
                                         p_basis(V, 2 * n - k - j).scale(alpha(2 * n - k - j))));
                            SymFunc rhs = perp(h_basis(V, n - k), inner);
                            return expect_eq(lbl("n=", n, " k=", k, " j=", j), lhs, rhs);
                        }});
                    }
            return v;
        }});
}

}  // namespace qtsym::detail
