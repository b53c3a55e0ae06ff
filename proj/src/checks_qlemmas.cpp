#include "checks_registry.hpp"

#include <algorithm>

// The pure q-polynomial identities of section 1.1 and the appendix; every
// check compares canonical forms of both sides over all parameters up to
// the q-bound.

namespace qtsym::detail {

namespace {

VarListPtr qvars() { return qt_vars(); }

}  // namespace

void add_qlemma_checks(std::vector<Check>& out) {
    out.push_back(Check{
        "q-recurrence", "q-lemmas",
        "eq:qrecurrence — \"Recall the well-known recurrence\"",
        "0 <= k <= n <= qbound (n >= 1), both forms",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 1; n <= b.qbound; ++n) {
                v.push_back({lbl("n=", n), [n]() -> std::optional<Counterexample> {
                    VarListPtr V = qvars();
                    for (int k = 0; k <= n; ++k) {
                        RatQT lhs = qbinom(V, n, k);
                        RatQT r1 = qpow(V, k) * qbinom(V, n - 1, k) + qbinom(V, n - 1, k - 1);
                        RatQT r2 = qbinom(V, n - 1, k) + qpow(V, n - k) * qbinom(V, n - 1, k - 1);
                        if (auto c = expect_eq(lbl("n=", n, " k=", k), lhs, r1)) return c;
                        if (auto c = expect_eq(lbl("n=", n, " k=", k, " (second form)"), lhs, r2)) return c;
                    }
                    return std::nullopt;
                }});
            }
            return v;
        }});

    out.push_back(Check{
        "q-binomial-thm", "q-lemmas",
        "eq:qbinom — \"q-binomial theorem\"",
        "n <= qbound, x adjoined",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int n = 0; n <= b.qbound; ++n) {
                v.push_back({lbl("n=", n), [n]() -> std::optional<Counterexample> {
                    VarListPtr V = qt_vars_plus({"x"});
                    RatQT x = RatQT::variable(V, "x");
                    RatQT lhs(V);
                    for (int j = 0; j <= n; ++j) {
                        RatQT term = (-x).pow(j) * qpow(V, choose2(j)) * qbinom(V, n, j);
                        lhs += term;
                    }
                    return expect_eq(lbl("n=", n), lhs, qrising(x, static_cast<unsigned>(n)));
                }});
            }
            return v;
        }});

    out.push_back(Check{
        "q-chu-vandermonde", "q-lemmas",
        "eq:qChuVander — \"q-Chu-Vandermonde\"",
        "m, n, k <= qbound",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int m = 0; m <= b.qbound; ++m)
                for (int n = 0; n <= b.qbound; ++n) {
                    v.push_back({lbl("m=", m, " n=", n), [m, n, b]() -> std::optional<Counterexample> {
                        VarListPtr V = qvars();
                        for (int k = 0; k <= b.qbound; ++k) {
                            RatQT lhs(V);
                            for (int j = 0; j <= k; ++j)
                                lhs += qpow(V, static_cast<long>(n - j) * (k - j)) *
                                       qbinom(V, n, j) * qbinom(V, m, k - j);
                            if (auto c = expect_eq(lbl("m=", m, " n=", n, " k=", k), lhs,
                                                   qbinom(V, m + n, k)))
                                return c;
                        }
                        return std::nullopt;
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "lemma-1-4-11", "q-lemmas",
        "eq:first_qlemma — \"For i≥1, a≥−i and s≥0\"",
        "1 <= i <= qbound, -i <= a <= qbound, 0 <= s <= qbound with s + a >= 0",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int i = 1; i <= b.qbound; ++i)
                for (int a = -i; a <= b.qbound; ++a) {
                    v.push_back({lbl("i=", i, " a=", a), [i, a, b]() -> std::optional<Counterexample> {
                        VarListPtr V = qvars();
                        for (int s = std::max(0, -a); s <= b.qbound; ++s) {
                            RatQT lhs(V);
                            for (int r = 1; r <= i; ++r) {
                                RatQT term = qbinom(V, i - 1, r - 1) *
                                             qbinom(V, r + s + a - 1, s - 1) *
                                             qpow(V, choose2(r) + r - static_cast<long>(i) * r);
                                if ((i - r) % 2 != 0) term = -term;
                                lhs += term;
                            }
                            RatQT rhs = qpow(V, choose2(i) + static_cast<long>(i - 1) * a) *
                                        qbinom(V, s + a, i + a);
                            if (auto c = expect_eq(lbl("i=", i, " a=", a, " s=", s), lhs, rhs))
                                return c;
                        }
                        return std::nullopt;
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "lemma-elem", "q-lemmas",
        "eq:lemmaelem — \"Given i,a,b∈ℕ, b≥1\"",
        "0 <= a <= i <= qbound, max(1,a) <= b <= qbound",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int i = 0; i <= b.qbound; ++i)
                for (int a = 0; a <= i; ++a) {
                    v.push_back({lbl("i=", i, " a=", a), [i, a, b]() -> std::optional<Counterexample> {
                        VarListPtr V = qvars();
                        for (int bb = std::max(1, a); bb <= b.qbound; ++bb) {
                            RatQT lhs(V);
                            for (int c = a; c <= i; ++c) {
                                RatQT term = qbinom(V, i - a, i - c) *
                                             qbinom(V, c - a + bb - 1, c - 1) *
                                             qpow(V, choose2(c) + c - static_cast<long>(i) * c);
                                if ((i - c) % 2 != 0) term = -term;
                                lhs += term;
                            }
                            RatQT rhs = qbinom(V, bb - 1, i - 1) *
                                        qpow(V, choose2(i) - static_cast<long>(a) * (i - 1));
                            if (auto c2 = expect_eq(lbl("i=", i, " a=", a, " b=", bb), lhs, rhs))
                                return c2;
                        }
                        return std::nullopt;
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "lemma-elem2", "q-lemmas",
        "eq:lemelem2 — \"Given r,k,a,b∈ℕ we have\"",
        "r, k, a, b <= qbound",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int r = 0; r <= b.qbound; ++r)
                for (int k = 0; k <= b.qbound; ++k) {
                    v.push_back({lbl("r=", r, " k=", k), [r, k, b]() -> std::optional<Counterexample> {
                        VarListPtr V = qvars();
                        for (int a = 0; a <= b.qbound; ++a)
                            for (int bb = 0; bb <= b.qbound; ++bb) {
                                RatQT lhs(V);
                                for (int s = 0; s <= r; ++s) {
                                    lhs += qpow(V, choose2(r - s)) * qbinom(V, r, r - s) *
                                           qpow(V, choose2(a)) * qbinom(V, k - s, a) *
                                           qpow(V, choose2(k - s) -
                                                       static_cast<long>(a) * (k - s - 1)) *
                                           qbinom(V, bb - 1, k - s - 1);
                                }
                                RatQT rhs = qpow(V, choose2(k - r - a)) * qbinom(V, bb - 1, a) *
                                                qbinom(V, bb + r - a - 1, k - a - 1) +
                                            qpow(V, choose2(k - r - a + 1)) *
                                                qbinom(V, bb - 1, a - 1) *
                                                qbinom(V, bb + r - a, k - a);
                                if (auto c = expect_eq(
                                        lbl("r=", r, " k=", k, " a=", a, " b=", bb), lhs, rhs))
                                    return c;
                            }
                        return std::nullopt;
                    }});
                }
            return v;
        }});

    out.push_back(Check{
        "lemma-elem3", "q-lemmas",
        "eq:lemelem3 — \"Given k,a,b∈ℕ we have\"",
        "k, a, b <= qbound",
        [](const Bounds& b) {
            std::vector<Instance> v;
            for (int k = 0; k <= b.qbound; ++k) {
                v.push_back({lbl("k=", k), [k, b]() -> std::optional<Counterexample> {
                    VarListPtr V = qvars();
                    for (int a = 0; a <= b.qbound; ++a)
                        for (int bb = 0; bb <= b.qbound; ++bb) {
                            RatQT lhs = qpow(V, choose2(k - a)) * qbinom(V, bb - 1, a) *
                                            qbinom(V, bb - a - 1, k - a - 1) +
                                        qpow(V, choose2(k - a + 1)) * qbinom(V, bb - 1, a - 1) *
                                            qbinom(V, bb - a, k - a);
                            RatQT rhs = qpow(V, choose2(k - a)) * qbinom(V, k, a) *
                                        qbinom(V, bb - 1, k - 1);
                            if (auto c = expect_eq(lbl("k=", k, " a=", a, " b=", bb), lhs, rhs))
                                return c;
                        }
                    return std::nullopt;
                }});
            }
            return v;
        }});
}

}  // namespace qtsym::detail
