#include "qtsym/intpoly.hpp"

#include <algorithm>
#include <vector>

// Multivariate gcd over Z[vars] via primitive subresultant PRS, recursing on
// polynomial contents.  Exponential in the worst case but the polynomials in
// this library stay small (a handful of variables, moderate degrees).

namespace qtsym {
namespace {

// Dense univariate view in one variable, coefficients in the remaining ones
// (kept over the full variable list with the main exponent zeroed).
struct UPoly {
    std::vector<IntPoly> c;  // c[i] is the coefficient of x^i

    int deg() const {
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
            if (!c[static_cast<std::size_t>(i)].is_zero()) return i;
        return -1;
    }
    const IntPoly& lc() const { return c[static_cast<std::size_t>(deg())]; }
    bool is_zero() const { return deg() < 0; }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

UPoly to_upoly(const IntPoly& f, std::size_t var) {
    UPoly u;
    u.c.assign(f.degree_in(var) + 1, IntPoly(f.vars()));
    for (const auto& t : f.terms()) {
        IntPoly::Term nt = t;
        unsigned e = nt.ex.e[var];
        nt.ex.e[var] = 0;
        nt.ex.tot -= e;
        u.c[e] = u.c[e] + IntPoly::monomial(f.vars(), nt.ex, nt.c);
    }
    return u;
}

IntPoly from_upoly(const UPoly& u, std::size_t var, const VarListPtr& vars) {
    IntPoly r(vars);
    for (std::size_t i = 0; i < u.c.size(); ++i) {
        if (u.c[i].is_zero()) continue;
        Expo ex{};
        ex.e[var] = static_cast<std::uint16_t>(i);
        ex.recount();
        r = r + u.c[i].mul_monomial(ex, 1);
    }
    return r;
}

IntPoly upoly_content(const UPoly& u) {
    IntPoly g(u.c.empty() ? qt_vars() : u.c[0].vars());
    for (const auto& ci : u.c) {
        if (ci.is_zero()) continue;
        g = poly_gcd(g, ci);
        if (g.is_one()) break;
    }
    return g;
}

UPoly upoly_div_coeff(const UPoly& u, const IntPoly& d) {
    UPoly r;
    r.c.reserve(u.c.size());
    for (const auto& ci : u.c) {
        auto q = ci.divexact(d);
        if (!q) throw std::logic_error("gcd: inexact content division");
        r.c.push_back(std::move(*q));
    }
    return r;
}

UPoly upoly_scale(const UPoly& u, const IntPoly& s) {
    UPoly r;
    r.c.reserve(u.c.size());
    for (const auto& ci : u.c) r.c.push_back(ci * s);
    return r;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b.
UPoly prem(UPoly a, const UPoly& b) {
    int db = b.deg();
    if (db < 0) throw std::invalid_argument("prem by zero");
    int da = a.deg();
    if (da < db) return a;
    const IntPoly& lb = b.lc();
    int steps = da - db + 1;
    while (true) {
        da = a.deg();
        if (da < db) break;
        IntPoly la = a.lc();
        // a <- lb*a - la * x^(da-db) * b
        for (auto& ci : a.c) ci = ci * lb;
        for (int i = 0; i <= db; ++i) {
            std::size_t k = static_cast<std::size_t>(da - db + i);
            a.c[k] = a.c[k] - la * b.c[static_cast<std::size_t>(i)];
        }
        a.trim();
        --steps;
        if (a.is_zero()) break;
    }
    // keep the classical normalization lb^(da0-db+1) * a0 mod b
    for (; steps > 0; --steps)
        for (auto& ci : a.c) ci = ci * lb;
    return a;
}

// Subresultant PRS gcd of two primitive (w.r.t. var) univariate views.
UPoly prs_gcd(UPoly f, UPoly g, const VarListPtr& vars) {
    if (f.deg() < g.deg()) std::swap(f, g);
    IntPoly one = IntPoly::constant(vars, 1);
    IntPoly co = one;  // divisor coefficient, lc(previous f)
    IntPoly h = one;
    while (true) {
        int d = f.deg() - g.deg();
        UPoly r = prem(f, g);
        if (r.is_zero()) break;
        if (r.deg() == 0) {
            UPoly u;
            u.c.push_back(one);
            return u;
        }
        IntPoly divisor = co * h.pow(static_cast<unsigned>(d));
        f = std::move(g);
        g = upoly_div_coeff(r, divisor);
        co = f.lc();
        if (d == 1) {
            h = co;
        } else if (d > 1) {
            auto q = co.pow(static_cast<unsigned>(d)).divexact(h.pow(static_cast<unsigned>(d - 1)));
            if (!q) throw std::logic_error("gcd: subresultant h update failed");
            h = std::move(*q);
        }
    }
    return g;
}

Expo expo_min(const Expo& a, const Expo& b) {
    Expo m;
    for (std::size_t k = 0; k < VarList::max_vars; ++k) m.e[k] = std::min(a.e[k], b.e[k]);
    m.recount();
    return m;
}

IntPoly normalize_sign(IntPoly p) {
    if (!p.is_zero() && p.leading().c < 0) return -p;
    return p;
}

// ------------------------------------------------------------ GCDHEU
// Heuristic gcd (Char-Geddes-Gonnet): evaluate one variable at a large
// integer, recurse, and lift the result back through balanced base-xi
// digits.  A successful trial division certifies the result; otherwise the
// evaluation point grows, and after a few misses we fall back to the PRS.

mpz_class height(const IntPoly& f) {
    mpz_class h = 0;
    for (const auto& t : f.terms()) {
        mpz_class a = abs(t.c);
        if (a > h) h = a;
    }
    return h;
}

IntPoly eval_var_mpz(const IntPoly& f, std::size_t var, const mpz_class& xi) {
    std::vector<mpz_class> powers{1};
    std::vector<IntPoly::Term> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        unsigned e = t.ex.e[var];
        while (powers.size() <= e) powers.push_back(powers.back() * xi);
        IntPoly::Term nt = t;
        nt.ex.e[var] = 0;
        nt.ex.tot -= e;
        nt.c *= powers[e];
        out.push_back(std::move(nt));
    }
    return IntPoly::from_terms(f.vars(), std::move(out));
}

// interpret gamma as a polynomial in x via balanced base-xi digits
IntPoly genpoly(IntPoly gamma, std::size_t var, const mpz_class& xi) {
    const VarListPtr& vars = gamma.vars();
    IntPoly result(vars);
    mpz_class half = xi / 2;
    unsigned i = 0;
    while (!gamma.is_zero()) {
        if (i > 0xffff) throw std::overflow_error("genpoly: runaway degree");
        std::vector<IntPoly::Term> digit;
        std::vector<IntPoly::Term> rest;
        for (const auto& t : gamma.terms()) {
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), t.c.get_mpz_t(), xi.get_mpz_t());
            if (r > half) r -= xi;
            if (r != 0) {
                IntPoly::Term d = t;
                d.c = r;
                d.ex.e[var] = static_cast<std::uint16_t>(i);
                d.ex.recount();
                digit.push_back(std::move(d));
            }
            mpz_class rem = t.c - r;
            mpz_divexact(rem.get_mpz_t(), rem.get_mpz_t(), xi.get_mpz_t());
            if (rem != 0) rest.push_back({t.ex, std::move(rem)});
        }
        result = result + IntPoly::from_terms(vars, std::move(digit));
        gamma = IntPoly::from_terms(vars, std::move(rest));
        ++i;
    }
    return result;
}

// Full gcd including the integer content.  The content must be split off
// and recombined at every level: factors of the true gcd that involve only
// the evaluated variable surface as integer content of the images.
std::optional<IntPoly> gcd_heuristic(const IntPoly& f, const IntPoly& g, int depth) {
    const VarListPtr& vars = f.vars();
    // smallest-degree active variable
    int var = -1;
    unsigned best = ~0u;
    for (std::size_t v = 0; v < vars->size(); ++v) {
        unsigned da = f.degree_in(v), db = g.degree_in(v);
        if (da == 0 && db == 0) continue;
        unsigned score = std::max(da, db);
        if (score < best) { best = score; var = static_cast<int>(v); }
    }
    mpz_class ic;
    mpz_gcd(ic.get_mpz_t(), f.content().get_mpz_t(), g.content().get_mpz_t());
    if (var < 0) return IntPoly::constant(vars, ic);
    if (depth > 12) return std::nullopt;
    std::size_t x = static_cast<std::size_t>(var);

    IntPoly fp = f.div_scalar_exact(f.content());
    IntPoly gp = g.div_scalar_exact(g.content());
    mpz_class xi = 2 * std::min(height(fp), height(gp)) + 2;
    if (xi < 32) xi = 32;
    for (int attempt = 0; attempt < 6; ++attempt) {
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) * std::max(fp.degree_in(x), gp.degree_in(x)) > 60000)
            return std::nullopt;
        IntPoly f1 = eval_var_mpz(fp, x, xi);
        IntPoly g1 = eval_var_mpz(gp, x, xi);
        if (!f1.is_zero() && !g1.is_zero()) {
            auto h1 = gcd_heuristic(f1, g1, depth + 1);
            if (h1 && !h1->is_zero()) {
                IntPoly h = genpoly(std::move(*h1), x, xi);
                if (!h.is_zero()) {
                    mpz_class hc = h.content();
                    if (hc > 1) h = h.div_scalar_exact(hc);
                    if (fp.divexact(h) && gp.divexact(h)) return h.mul_scalar(ic);
                }
            }
        }
        // next evaluation point: irrational-ratio growth keeps points spread
        xi = (xi * 73794) / 27011 + 7;
    }
    return std::nullopt;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.vars() != b.vars()) throw std::invalid_argument("poly_gcd: mixed variable lists");
    const VarListPtr& vars = a.vars();
    if (a.is_zero()) return normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);

    // common monomial factor
    Expo mono = expo_min(a.monomial_content(), b.monomial_content());
    IntPoly f = a, g = b;
    if (mono.total() > 0) {
        IntPoly m = IntPoly::monomial(vars, mono, 1);
        f = *f.divexact(m);
        g = *g.divexact(m);
    }

    mpz_class ic;
    mpz_gcd(ic.get_mpz_t(), f.content().get_mpz_t(), g.content().get_mpz_t());
    f = f.div_scalar_exact(f.content());
    g = g.div_scalar_exact(g.content());

    IntPoly result(vars);
    bool done = false;
    if (f == g || f == -g) {
        result = f;
        done = true;
    } else if (f.is_constant() || g.is_constant()) {
        result = IntPoly::constant(vars, 1);
        done = true;
    } else if (auto heu = gcd_heuristic(f, g, 0)) {
        result = std::move(*heu);
        done = true;
    }
    if (!done) {
        // pick the active variable minimizing the larger degree
        int best = -1;
        unsigned best_score = ~0u;
        for (std::size_t v = 0; v < vars->size(); ++v) {
            unsigned da = f.degree_in(v), db = g.degree_in(v);
            if (da == 0 && db == 0) continue;
            if (da == 0 || db == 0) {
                // variable in only one of them: it cannot appear in the gcd;
                // treated through contents below if chosen as main var.
                continue;
            }
            unsigned score = std::max(da, db);
            if (score < best_score) { best_score = score; best = static_cast<int>(v); }
        }
        if (best < 0) {
            // no variable common to both: gcd of contents only
            result = IntPoly::constant(vars, 1);
        } else {
            std::size_t var = static_cast<std::size_t>(best);
            UPoly uf = to_upoly(f, var), ug = to_upoly(g, var);
            IntPoly cf = upoly_content(uf), cg = upoly_content(ug);
            uf = upoly_div_coeff(uf, cf);
            ug = upoly_div_coeff(ug, cg);
            UPoly raw = prs_gcd(std::move(uf), std::move(ug), vars);
            IntPoly pp = from_upoly(raw, var, vars);
            // primitive part of the PRS output
            pp = pp.div_scalar_exact(pp.content());
            UPoly upp = to_upoly(pp, var);
            IntPoly ppc = upoly_content(upp);
            if (!ppc.is_one()) pp = *pp.divexact(ppc);
            result = poly_gcd(cf, cg) * pp;
        }
    }

    result = result.mul_scalar(ic);
    if (mono.total() > 0) result = result.mul_monomial(mono, 1);
    return normalize_sign(result);
}

}  // namespace qtsym
