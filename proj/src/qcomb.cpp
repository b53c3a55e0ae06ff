#include "qtsym/qcomb.hpp"

namespace qtsym {

RatQT qint(VarListPtr vars, long n, const std::string& var) {
    IntPoly p(vars);
    if (n < 0) throw std::invalid_argument("qint: negative argument");
    int idx = vars->index_of(var);
    if (idx < 0) throw std::invalid_argument("qint: unknown variable " + var);
    std::vector<IntPoly::Term> terms;
    for (long i = 0; i < n; ++i) {
        Expo ex{};
        ex.e[static_cast<std::size_t>(idx)] = static_cast<std::uint16_t>(i);
        ex.recount();
        terms.push_back({ex, 1});
    }
    return RatQT(IntPoly::from_terms(std::move(vars), std::move(terms)));
}

RatQT qfactorial(VarListPtr vars, long n, const std::string& var) {
    RatQT r = RatQT::integer(vars, 1);
    for (long i = 2; i <= n; ++i) r *= qint(vars, i, var);
    return r;
}

RatQT qbinom(VarListPtr vars, long n, long k, const std::string& var) {
    if (k < 0 || n < k) return RatQT(std::move(vars));
    if (k == 0 || k == n) return RatQT::integer(std::move(vars), 1);
    if (k > n - k) k = n - k;
    // [n]!/([k]![n-k]!) computed incrementally; normalization clears the
    // denominator since the result is a polynomial in q.
    RatQT r = RatQT::integer(vars, 1);
    for (long i = 0; i < k; ++i)
        r = r * qint(vars, n - i, var) / qint(vars, i + 1, var);
    return r;
}

RatQT qrising(const RatQT& a, unsigned s, const std::string& var) {
    const VarListPtr& vars = a.vars();
    RatQT one = RatQT::integer(vars, 1);
    RatQT r = one;
    for (unsigned i = 0; i < s; ++i)
        r *= one - qpow(vars, static_cast<long>(i), var) * a;
    return r;
}

RatQT qpow(VarListPtr vars, long k, const std::string& var) {
    return RatQT::variable(std::move(vars), var, 1).pow(static_cast<int>(k));
}

}  // namespace qtsym
