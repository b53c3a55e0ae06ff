#include "qtsym/operators.hpp"

#include <atomic>

namespace qtsym {

namespace {
std::atomic<Mutation> g_mutation{Mutation::none};
}

void set_mutation(Mutation m) { g_mutation.store(m); }
Mutation current_mutation() { return g_mutation.load(); }

SymFunc nabla(MacBasis& B, const SymFunc& f, bool inverse) {
    const VarListPtr& V = f.vars();
    SymFunc out(V);
    bool flip = current_mutation() == Mutation::nabla_sign_flip;
    for (const auto& [mu, c] : mac_expand(B, f)) {
        RatQT eig = stats(mu).T.embed(V);
        if (!flip && mu.size() % 2 != 0) eig = -eig;
        out += B.H(mu).embed(V).scale(inverse ? c / eig : c * eig);
    }
    return out;
}

SymFunc delta_op(MacBasis& B, const SymFunc& f, const SymFunc& F, bool primed, bool inverse) {
    const VarListPtr& V = F.vars();
    SymFunc fV = f.vars() == V ? f : f.embed(V);
    SymFunc out(V);
    RatQT one = RatQT::integer(V, 1);
    for (const auto& [mu, c] : mac_expand(B, F)) {
        RatQT arg = stats(mu).B.embed(V);
        if (primed) arg -= one;
        RatQT eig = plethysm_scalar(fV, arg);
        if (inverse) {
            if (eig.is_zero())
                throw std::domain_error("delta_op: zero eigenvalue at " + mu.bracketed() +
                                        ", operator not invertible there");
            out += B.H(mu).embed(V).scale(c / eig);
        } else if (!eig.is_zero()) {
            out += B.H(mu).embed(V).scale(c * eig);
        }
    }
    return out;
}

SymFunc pi_op(MacBasis& B, const SymFunc& F, bool inverse) {
    const VarListPtr& V = F.vars();
    if (inverse && !F.constant_term().is_zero())
        throw std::domain_error("pi_op: inverse undefined on constants");
    SymFunc out(V);
    for (const auto& [mu, c] : mac_expand(B, F)) {
        RatQT eig = stats(mu).Pi.embed(V);
        out += B.H(mu).embed(V).scale(inverse ? c / eig : c * eig);
    }
    return out;
}

SymFunc theta(MacBasis& B, const SymFunc& f, const SymFunc& F) {
    const VarListPtr& V = F.vars();
    SymFunc fV = f.vars() == V ? f : f.embed(V);
    SymFunc out(V);
    RatQT f0 = fV.constant_term();
    RatQT F0 = F.constant_term();
    // constant-degree cases of the definition
    if (!f0.is_zero() && !F0.is_zero()) out += SymFunc::constant(f0 * F0);
    SymFunc fpos = fV - SymFunc::constant(f0);
    SymFunc Fpos = F - SymFunc::constant(F0);
    if (!F0.is_zero() && !fpos.is_zero()) {
        // Theta_{f+} of a constant is 0; nothing to add
    }
    if (!Fpos.is_zero()) {
        if (!f0.is_zero()) out += Fpos.scale(f0);  // Theta_{const} acts by multiplication
        if (!fpos.is_zero())
            out += pi_op(B, star_f(fpos) * pi_op(B, Fpos, true));
    }
    return out;
}

SymFunc theta_chain(MacBasis& B, const std::vector<SymFunc>& fs, const SymFunc& F) {
    for (const auto& f : fs)
        if (!f.constant_term().is_zero() || f.is_zero())
            throw std::invalid_argument("theta_chain: factors must have positive degree");
    if (F.is_zero()) return F;
    SymFunc Fpos = F - SymFunc::constant(F.constant_term());
    if (Fpos.is_zero()) return SymFunc(F.vars());  // Theta_f kills constants
    SymFunc inner = pi_op(B, Fpos, true);
    for (const auto& f : fs)
        inner = star_f(f.vars() == F.vars() ? f : f.embed(F.vars())) * inner;
    return pi_op(B, inner);
}

SymFunc delta_v_series(MacBasis& B, const RatQT& monomial, const SymFunc& F, bool inverse) {
    const VarListPtr& V = F.vars();
    RatQT one = RatQT::integer(V, 1);
    RatQT q = RatQT::variable(V, "q"), t = RatQT::variable(V, "t");
    SymFunc out(V);
    for (const auto& [mu, c] : mac_expand(B, F)) {
        RatQT eig = one;
        for (const auto& cell : mu.cells())
            eig *= one - monomial * q.pow(cell.coarm) * t.pow(cell.coleg);
        out += B.H(mu).embed(V).scale(inverse ? c / eig : c * eig);
    }
    return out;
}

namespace {

// Delta_v with the corner (1-v) factor of the spectrum dropped: used by the
// mutation hook to break the v -> 1 cancellation in Theta~.
SymFunc delta_v_mutated(MacBasis& B, const RatQT& monomial, const SymFunc& F) {
    const VarListPtr& V = F.vars();
    RatQT one = RatQT::integer(V, 1);
    RatQT q = RatQT::variable(V, "q"), t = RatQT::variable(V, "t");
    SymFunc out(V);
    for (const auto& [mu, c] : mac_expand(B, F)) {
        RatQT eig = one;
        for (const auto& cell : mu.cells()) {
            if (cell.coarm == 0 && cell.coleg == 0) continue;
            eig *= one - monomial * q.pow(cell.coarm) * t.pow(cell.coleg);
        }
        out += B.H(mu).embed(V).scale(c * eig);
    }
    return out;
}

}  // namespace

SymFunc theta_tilde(MacBasis& B, const SymFunc& F, int z_power, bool inverse,
                    const std::string& v) {
    if (z_power < 0) throw std::invalid_argument("theta_tilde: negative z power");
    const VarListPtr& V = F.vars();
    if (V->index_of(v) < 0)
        throw std::invalid_argument("theta_tilde: variable " + v + " not in field");
    RatQT vv = RatQT::variable(V, v);
    // z^k coefficient of Delta_v P_{-z/M} Delta_v^{-1} is
    // (-1)^k Delta_v (e_k^* .) Delta_v^{-1}; in the inverse series
    // Delta_v P_{z/M} Delta_v^{-1} it is Delta_v (h_k^* .) Delta_v^{-1}.
    SymFunc g = delta_v_series(B, vv, F, true);
    g = star_f(inverse ? h_basis(V, z_power) : e_basis(V, z_power)) * g;
    g = current_mutation() == Mutation::theta_tilde_drop_corner
            ? delta_v_mutated(B, vv, g)
            : delta_v_series(B, vv, g, false);
    if (!inverse && z_power % 2 != 0) g = -g;
    return g;
}

SymFunc subst_v1(const SymFunc& f, const std::string& v) {
    return f.map_coeffs([&](const RatQT& c) { return c.eval_var(v, 1); });
}

SymFunc subst_t0(const SymFunc& f) {
    return f.map_coeffs([](const RatQT& c) { return c.eval_var("t", 0); });
}

}  // namespace qtsym
