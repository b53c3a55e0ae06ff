#include "qtsym/symfunc.hpp"

namespace qtsym {

namespace {

struct PkImage {
    RatQT with_X;   // coefficient of p_k
    RatQT scalar;   // constant contribution
};

PkImage pk_image(const Alphabet& A, int k) {
    const VarListPtr& V = A.vars();
    PkImage im{RatQT(V), RatQT(V)};
    for (const auto& t : A.terms()) {
        RatQT v = t.scalar.substitute_powers(static_cast<unsigned>(k));
        if (t.eps && (k % 2 != 0)) v = -v;
        if (t.uses_X)
            im.with_X += v;
        else
            im.scalar += v;
    }
    return im;
}

}  // namespace

SymFunc plethysm(const SymFunc& f, const Alphabet& A) {
    if (f.vars() != A.vars()) throw std::invalid_argument("plethysm: mixed variable lists");
    const VarListPtr& V = f.vars();

    std::vector<PkImage> images(static_cast<std::size_t>(f.degree()) + 1, PkImage{RatQT(V), RatQT(V)});
    for (int k = 1; k <= f.degree(); ++k)
        images[static_cast<std::size_t>(k)] = pk_image(A, k);

    SymFunc out(V);
    for (const auto& [la, c] : f.coeffs()) {
        // expand prod_i (alpha_i p_{la_i} + beta_i)
        SymFunc acc = SymFunc::constant(c);
        for (int part : la.parts()) {
            const PkImage& im = images[static_cast<std::size_t>(part)];
            SymFunc next(V);
            for (const auto& [mu, x] : acc.coeffs()) {
                if (!im.with_X.is_zero())
                    next.add_coeff(partition_union(mu, Partition::single(part)), x * im.with_X);
                if (!im.scalar.is_zero())
                    next.add_coeff(mu, x * im.scalar);
            }
            acc = std::move(next);
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    return out;
}

RatQT plethysm_scalar(const SymFunc& f, const RatQT& a) {
    if (f.vars() != a.vars()) throw std::invalid_argument("plethysm_scalar: mixed variable lists");
    const VarListPtr& V = f.vars();
    std::vector<RatQT> pk(static_cast<std::size_t>(f.degree()) + 1, RatQT(V));
    for (int k = 1; k <= f.degree(); ++k)
        pk[static_cast<std::size_t>(k)] = a.substitute_powers(static_cast<unsigned>(k));
    RatQT out(V);
    for (const auto& [la, c] : f.coeffs()) {
        RatQT term = c;
        for (int part : la.parts()) term *= pk[static_cast<std::size_t>(part)];
        out += term;
    }
    return out;
}

SymFunc omega(const SymFunc& f) {
    SymFunc r(f.vars());
    for (const auto& [la, c] : f.coeffs()) {
        if ((la.size() - la.length()) % 2 != 0)
            r.set_coeff(la, -c);
        else
            r.set_coeff(la, c);
    }
    return r;
}

SymFunc omega_bar(const SymFunc& f) {
    return omega(f).map_coeffs([](const RatQT& c) { return c.invert_qt(); });
}

SymFunc translate(const SymFunc& f, const Alphabet& Y) {
    return plethysm(f, Alphabet::X(f.vars()) + Y);
}

SymFunc star_f(const SymFunc& f) { return plethysm(f, Alphabet::X_over_M(f.vars())); }

SymFunc phi_f(const SymFunc& f) { return plethysm(f, Alphabet::X_times_M(f.vars())); }

SymFunc exp_pleth(const Alphabet& A, int maxdeg) {
    SymFunc r(A.vars());
    for (int n = 0; n <= maxdeg; ++n) r += plethysm(h_basis(A.vars(), n), A);
    return r;
}

SymFunc mult_series(const Alphabet& Z, const SymFunc& f, int maxdeg) {
    const VarListPtr& V = f.vars();
    Alphabet ZX(V);
    for (const auto& t : Z.terms()) {
        if (t.uses_X)
            throw std::invalid_argument("mult_series: multiplier must be X-free");
        ZX.add(t.scalar, true, t.eps);
    }
    SymFunc out(V);
    int lo = f.is_zero() ? 0 : f.min_degree();
    for (int n = 0; n + lo <= maxdeg; ++n) {
        SymFunc hn = plethysm(h_basis(V, n), ZX);
        out += (hn * f).truncate(maxdeg);
    }
    return out;
}

}  // namespace qtsym
