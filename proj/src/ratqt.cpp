#include "qtsym/ratqt.hpp"

#include <sstream>

namespace qtsym {

RatQT::RatQT(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.vars() != den_.vars()) throw std::invalid_argument("RatQT: mixed variable lists");
    normalize();
}

RatQT::RatQT(IntPoly num)
    : num_(std::move(num)), den_(IntPoly::constant(num_.vars(), 1)) {}

RatQT RatQT::integer(VarListPtr vars, long v) {
    return RatQT(IntPoly::constant(std::move(vars), mpz_class(v)));
}

RatQT RatQT::integer(VarListPtr vars, const mpz_class& v) {
    return RatQT(IntPoly::constant(std::move(vars), v));
}

RatQT RatQT::rational(VarListPtr vars, long num, long den) {
    return RatQT(IntPoly::constant(vars, mpz_class(num)), IntPoly::constant(vars, mpz_class(den)));
}

RatQT RatQT::variable(VarListPtr vars, const std::string& name, int power) {
    if (power >= 0)
        return RatQT(IntPoly::variable(std::move(vars), name, static_cast<unsigned>(power)));
    return RatQT(IntPoly::constant(vars, 1),
                 IntPoly::variable(vars, name, static_cast<unsigned>(-power)));
}

void RatQT::normalize() {
    if (den_.is_zero()) throw std::domain_error("RatQT: division by zero");
    if (num_.is_zero()) {
        den_ = IntPoly::constant(num_.vars(), 1);
        return;
    }
    if (!den_.is_one()) {
        IntPoly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = *num_.divexact(g);
            den_ = *den_.divexact(g);
        }
        mpz_class ic;
        mpz_gcd(ic.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
        if (ic > 1) {
            num_ = num_.div_scalar_exact(ic);
            den_ = den_.div_scalar_exact(ic);
        }
    }
    if (den_.leading().c < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatQT RatQT::operator-() const {
    RatQT r(vars());
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatQT RatQT::operator+(const RatQT& o) const {
    if (vars() != o.vars()) throw std::invalid_argument("RatQT: mixed variable lists");
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    RatQT r(vars());
    if (den_ == o.den_) {
        IntPoly n = num_ + o.num_;
        if (n.is_zero()) return RatQT(vars());
        r.num_ = std::move(n);
        r.den_ = den_;
        r.normalize();
        return r;
    }
    // classical gcd-limited fraction addition
    IntPoly g = poly_gcd(den_, o.den_);
    if (g.is_one()) {
        r.num_ = num_ * o.den_ + o.num_ * den_;
        r.den_ = den_ * o.den_;
        if (r.num_.is_zero()) return RatQT(vars());
        // denominators coprime: only integer content can appear
        mpz_class ic;
        mpz_gcd(ic.get_mpz_t(), r.num_.content().get_mpz_t(), r.den_.content().get_mpz_t());
        if (ic > 1) {
            r.num_ = r.num_.div_scalar_exact(ic);
            r.den_ = r.den_.div_scalar_exact(ic);
        }
        if (r.den_.leading().c < 0) { r.num_ = -r.num_; r.den_ = -r.den_; }
        return r;
    }
    IntPoly db = *den_.divexact(g);
    IntPoly dd = *o.den_.divexact(g);
    IntPoly t = num_ * dd + o.num_ * db;
    if (t.is_zero()) return RatQT(vars());
    IntPoly h = poly_gcd(t, g);
    if (h.is_one()) {
        r.num_ = std::move(t);
        r.den_ = den_ * dd;
    } else {
        r.num_ = *t.divexact(h);
        r.den_ = db * *o.den_.divexact(h);
    }
    mpz_class ic;
    mpz_gcd(ic.get_mpz_t(), r.num_.content().get_mpz_t(), r.den_.content().get_mpz_t());
    if (ic > 1) {
        r.num_ = r.num_.div_scalar_exact(ic);
        r.den_ = r.den_.div_scalar_exact(ic);
    }
    if (r.den_.leading().c < 0) { r.num_ = -r.num_; r.den_ = -r.den_; }
    return r;
}

RatQT RatQT::operator-(const RatQT& o) const { return *this + (-o); }

RatQT RatQT::operator*(const RatQT& o) const {
    if (vars() != o.vars()) throw std::invalid_argument("RatQT: mixed variable lists");
    if (is_zero() || o.is_zero()) return RatQT(vars());
    RatQT r(vars());
    IntPoly g1 = poly_gcd(num_, o.den_);
    IntPoly g2 = poly_gcd(o.num_, den_);
    IntPoly n1 = g1.is_one() ? num_ : *num_.divexact(g1);
    IntPoly d2 = g1.is_one() ? o.den_ : *o.den_.divexact(g1);
    IntPoly n2 = g2.is_one() ? o.num_ : *o.num_.divexact(g2);
    IntPoly d1 = g2.is_one() ? den_ : *den_.divexact(g2);
    r.num_ = n1 * n2;
    r.den_ = d1 * d2;
    if (r.den_.leading().c < 0) { r.num_ = -r.num_; r.den_ = -r.den_; }
    return r;
}

RatQT RatQT::inverse() const {
    if (is_zero()) throw std::domain_error("RatQT: inverse of zero");
    RatQT r(vars());
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.leading().c < 0) { r.num_ = -r.num_; r.den_ = -r.den_; }
    return r;
}

RatQT RatQT::operator/(const RatQT& o) const { return *this * o.inverse(); }

RatQT RatQT::pow(int k) const {
    if (k == 0) return RatQT::integer(vars(), 1);
    if (k < 0) return inverse().pow(-k);
    RatQT r(vars());
    r.num_ = num_.pow(static_cast<unsigned>(k));
    r.den_ = den_.pow(static_cast<unsigned>(k));
    return r;
}

RatQT RatQT::substitute_powers(unsigned k) const {
    return RatQT(num_.substitute_powers(k), den_.substitute_powers(k));
}

RatQT RatQT::invert_qt() const {
    RatQT r = invert_var("q");
    if (vars()->index_of("t") >= 0) r = r.invert_var("t");
    return r;
}

RatQT RatQT::invert_var(const std::string& name) const {
    int idx = vars()->index_of(name);
    if (idx < 0) return *this;
    std::size_t v = static_cast<std::size_t>(idx);
    unsigned dn = num_.degree_in(v), dd = den_.degree_in(v);
    unsigned d = std::max(dn, dd);
    IntPoly n = num_.reverse_var(v, d);
    IntPoly den = den_.reverse_var(v, d);
    return RatQT(std::move(n), std::move(den));
}

RatQT RatQT::eval_var(const std::string& name, long value) const {
    int idx = vars()->index_of(name);
    if (idx < 0) return *this;
    std::size_t v = static_cast<std::size_t>(idx);
    IntPoly d = den_.eval_var(v, value);
    if (d.is_zero())
        throw std::domain_error("RatQT: pole at " + name + " = " + std::to_string(value));
    return RatQT(num_.eval_var(v, value), std::move(d));
}

bool RatQT::depends_on(const std::string& name) const {
    int idx = vars()->index_of(name);
    if (idx < 0) return false;
    std::size_t v = static_cast<std::size_t>(idx);
    return num_.degree_in(v) > 0 || den_.degree_in(v) > 0;
}

std::vector<RatQT> RatQT::coeffs_in(const std::string& name) const {
    int idx = vars()->index_of(name);
    if (idx < 0) return {*this};
    std::size_t v = static_cast<std::size_t>(idx);
    if (den_.degree_in(v) > 0)
        throw std::domain_error("RatQT: not polynomial in " + name);
    std::vector<std::vector<IntPoly::Term>> buckets(num_.degree_in(v) + 1);
    for (const auto& t : num_.terms()) {
        IntPoly::Term nt = t;
        unsigned e = nt.ex.e[v];
        nt.ex.e[v] = 0;
        nt.ex.tot -= e;
        buckets[e].push_back(std::move(nt));
    }
    std::vector<RatQT> out;
    out.reserve(buckets.size());
    for (auto& b : buckets)
        out.push_back(RatQT(IntPoly::from_terms(vars(), std::move(b)), den_));
    return out;
}

RatQT RatQT::embed(const VarListPtr& newvars) const {
    if (newvars == vars()) return *this;
    RatQT r(newvars);
    r.num_ = num_.embed(newvars);
    r.den_ = den_.embed(newvars);
    return r;
}

RatQT balanced_sum(std::vector<RatQT> xs, const VarListPtr& vars) {
    if (xs.empty()) return RatQT(vars);
    while (xs.size() > 1) {
        std::vector<RatQT> next;
        next.reserve(xs.size() / 2 + 1);
        for (std::size_t i = 0; i + 1 < xs.size(); i += 2) next.push_back(xs[i] + xs[i + 1]);
        if (xs.size() % 2) next.push_back(xs.back());
        xs = std::move(next);
    }
    return xs[0];
}

std::string RatQT::str() const {
    if (den_.is_one()) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ")/(" << den_.str() << ")";
    return os.str();
}

}  // namespace qtsym
