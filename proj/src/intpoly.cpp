#include "qtsym/intpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace qtsym {

// ---------------------------------------------------------------- VarList

VarList::VarList(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > max_vars)
        throw std::invalid_argument("VarList: too many variables");
}

VarListPtr VarList::get(std::vector<std::string> names) {
    static std::mutex mu;
    static std::unordered_map<std::string, VarListPtr> interned;
    std::string key;
    for (const auto& n : names) { key += n; key += ','; }
    std::lock_guard<std::mutex> lock(mu);
    auto it = interned.find(key);
    if (it != interned.end()) return it->second;
    VarListPtr p(new VarList(std::move(names)));
    interned.emplace(std::move(key), p);
    return p;
}

int VarList::index_of(const std::string& n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == n) return static_cast<int>(i);
    return -1;
}

VarListPtr qt_vars() {
    static VarListPtr v = VarList::get({"q", "t"});
    return v;
}

VarListPtr qt_vars_plus(const std::vector<std::string>& extras) {
    std::vector<std::string> names{"q", "t"};
    names.insert(names.end(), extras.begin(), extras.end());
    return VarList::get(std::move(names));
}

// ---------------------------------------------------------------- IntPoly

IntPoly IntPoly::constant(VarListPtr vars, const mpz_class& c) {
    IntPoly p(std::move(vars));
    if (c != 0) p.terms_.push_back({Expo{}, c});
    return p;
}

IntPoly IntPoly::variable(VarListPtr vars, const std::string& name, unsigned power) {
    int idx = vars->index_of(name);
    if (idx < 0) throw std::invalid_argument("IntPoly::variable: unknown variable " + name);
    Expo ex{};
    ex.e[static_cast<std::size_t>(idx)] = static_cast<std::uint16_t>(power);
    ex.recount();
    return monomial(std::move(vars), ex, 1);
}

IntPoly IntPoly::monomial(VarListPtr vars, const Expo& ex, const mpz_class& c) {
    IntPoly p(std::move(vars));
    if (c != 0) p.terms_.push_back({ex, c});
    return p;
}

IntPoly IntPoly::from_terms(VarListPtr vars, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return cmp_grlex(a.ex, b.ex) > 0; });
    IntPoly p(std::move(vars));
    for (auto& t : terms) {
        if (t.c == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().ex == t.ex)
            p.terms_.back().c += t.c;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
    }
    return p;
}

bool IntPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].ex.total() == 0 && terms_[0].c == 1;
}

mpz_class IntPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::logic_error("IntPoly::constant_value on non-constant");
    return terms_[0].c;
}

unsigned IntPoly::total_degree() const {
    return terms_.empty() ? 0 : terms_.front().ex.total();
}

unsigned IntPoly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, static_cast<unsigned>(t.ex.e[var]));
    return d;
}

const IntPoly::Term& IntPoly::leading() const {
    if (terms_.empty()) throw std::logic_error("IntPoly::leading on zero polynomial");
    return terms_.front();
}

bool IntPoly::equal_terms(const IntPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].ex == o.terms_[i].ex) || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

IntPoly IntPoly::operator-() const {
    IntPoly r(vars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.ex, -t.c});
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("IntPoly: mixed variable lists");
    IntPoly r(vars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = cmp_grlex(terms_[i].ex, o.terms_[j].ex);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            mpz_class s = terms_[i].c + o.terms_[j].c;
            if (s != 0) r.terms_.push_back({terms_[i].ex, std::move(s)});
            ++i; ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("IntPoly: mixed variable lists");
    if (terms_.empty() || o.terms_.empty()) return IntPoly(vars_);
    if (o.terms_.size() == 1) return mul_monomial(o.terms_[0].ex, o.terms_[0].c);
    if (terms_.size() == 1) return o.mul_monomial(terms_[0].ex, terms_[0].c);

    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Expo ex;
            for (std::size_t k = 0; k < VarList::max_vars; ++k) {
                unsigned s = static_cast<unsigned>(a.ex.e[k]) + b.ex.e[k];
                if (s > 0xffff) throw std::overflow_error("IntPoly: exponent overflow");
                ex.e[k] = static_cast<std::uint16_t>(s);
            }
            ex.tot = a.ex.tot + b.ex.tot;
            prod.push_back({ex, a.c * b.c});
        }
    }
    std::sort(prod.begin(), prod.end(),
              [](const Term& a, const Term& b) { return cmp_grlex(a.ex, b.ex) > 0; });
    std::vector<Term> out;
    out.reserve(prod.size());
    for (auto& t : prod) {
        if (!out.empty() && out.back().ex == t.ex)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c == 0) out.pop_back();
    }
    IntPoly r(vars_);
    r.terms_ = std::move(out);
    return r;
}

IntPoly IntPoly::mul_scalar(const mpz_class& c) const {
    if (c == 0) return IntPoly(vars_);
    IntPoly r(vars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.ex, t.c * c});
    return r;
}

IntPoly IntPoly::mul_monomial(const Expo& ex, const mpz_class& c) const {
    if (c == 0) return IntPoly(vars_);
    IntPoly r(vars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Expo e2;
        for (std::size_t k = 0; k < VarList::max_vars; ++k) {
            unsigned s = static_cast<unsigned>(t.ex.e[k]) + ex.e[k];
            if (s > 0xffff) throw std::overflow_error("IntPoly: exponent overflow");
            e2.e[k] = static_cast<std::uint16_t>(s);
        }
        e2.tot = t.ex.tot + ex.tot;
        r.terms_.push_back({e2, t.c * c});
    }
    return r;
}

IntPoly IntPoly::pow(unsigned k) const {
    IntPoly r = IntPoly::constant(vars_, 1);
    IntPoly base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return r;
}

std::optional<IntPoly> IntPoly::divexact(const IntPoly& o) const {
    if (o.is_zero()) throw std::invalid_argument("IntPoly::divexact by zero");
    if (is_zero()) return IntPoly(vars_);
    if (o.is_one()) return *this;
    IntPoly rem = *this;
    std::vector<Term> quo;
    const Term& dlt = o.leading();
    while (!rem.is_zero()) {
        const Term& rlt = rem.leading();
        Expo ex;
        for (std::size_t k = 0; k < VarList::max_vars; ++k) {
            if (rlt.ex.e[k] < dlt.ex.e[k]) return std::nullopt;
            ex.e[k] = static_cast<std::uint16_t>(rlt.ex.e[k] - dlt.ex.e[k]);
        }
        ex.tot = rlt.ex.tot - dlt.ex.tot;
        mpz_class qc, rc;
        mpz_tdiv_qr(qc.get_mpz_t(), rc.get_mpz_t(), rlt.c.get_mpz_t(), dlt.c.get_mpz_t());
        if (rc != 0) return std::nullopt;
        quo.push_back({ex, qc});
        rem = rem - o.mul_monomial(ex, qc);
    }
    IntPoly q(vars_);
    q.terms_ = std::move(quo);
    std::sort(q.terms_.begin(), q.terms_.end(),
              [](const Term& a, const Term& b) { return cmp_grlex(a.ex, b.ex) > 0; });
    return q;
}

IntPoly IntPoly::div_scalar_exact(const mpz_class& c) const {
    if (c == 0) throw std::invalid_argument("IntPoly::div_scalar_exact by zero");
    IntPoly r(vars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        mpz_class qc;
        mpz_divexact(qc.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
        r.terms_.push_back({t.ex, std::move(qc)});
    }
    return r;
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Expo IntPoly::monomial_content() const {
    if (terms_.empty()) return Expo{};
    Expo m = terms_[0].ex;
    for (const auto& t : terms_)
        for (std::size_t k = 0; k < VarList::max_vars; ++k)
            m.e[k] = std::min(m.e[k], t.ex.e[k]);
    m.recount();
    return m;
}

IntPoly IntPoly::substitute_powers(unsigned k) const {
    if (k == 1) return *this;
    IntPoly r(vars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Expo ex;
        for (std::size_t i = 0; i < VarList::max_vars; ++i) {
            unsigned long s = static_cast<unsigned long>(t.ex.e[i]) * k;
            if (s > 0xffff) throw std::overflow_error("IntPoly: exponent overflow");
            ex.e[i] = static_cast<std::uint16_t>(s);
        }
        ex.tot = t.ex.tot * k;
        r.terms_.push_back({ex, t.c});
    }
    // substitution preserves the graded-lex order
    return r;
}

IntPoly IntPoly::eval_var(std::size_t var, long value) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term nt = t;
        unsigned e = nt.ex.e[var];
        nt.ex.e[var] = 0;
        nt.ex.tot -= e;
        if (e > 0) {
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(std::abs(value)), e);
            if (value < 0 && (e & 1u)) p = -p;
            nt.c *= p;
        }
        out.push_back(std::move(nt));
    }
    return from_terms(vars_, std::move(out));
}

IntPoly IntPoly::reverse_var(std::size_t var, unsigned maxdeg) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term nt = t;
        if (t.ex.e[var] > maxdeg) throw std::logic_error("IntPoly::reverse_var: degree bound too small");
        nt.ex.e[var] = static_cast<std::uint16_t>(maxdeg - t.ex.e[var]);
        nt.ex.recount();
        out.push_back(std::move(nt));
    }
    return from_terms(vars_, std::move(out));
}

IntPoly IntPoly::embed(const VarListPtr& newvars) const {
    if (newvars == vars_) return *this;
    std::array<int, VarList::max_vars> remap{};
    for (std::size_t i = 0; i < vars_->size(); ++i) {
        int j = newvars->index_of(vars_->name(i));
        if (j < 0) throw std::invalid_argument("IntPoly::embed: variable " + vars_->name(i) + " missing in target");
        remap[i] = j;
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Expo ex{};
        for (std::size_t i = 0; i < vars_->size(); ++i)
            ex.e[static_cast<std::size_t>(remap[i])] = t.ex.e[i];
        ex.tot = t.ex.tot;
        out.push_back({ex, t.c});
    }
    return from_terms(newvars, std::move(out));
}

std::string IntPoly::str() const {
    if (terms_.empty()) return "0";
    // ascending total degree; within a degree, descending lex (q before t)
    std::vector<const Term*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
        unsigned ta = a->ex.total(), tb = b->ex.total();
        if (ta != tb) return ta < tb;
        return cmp_grlex(a->ex, b->ex) > 0;
    });
    std::ostringstream os;
    bool first = true;
    for (const Term* t : order) {
        mpz_class c = t->c;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string monos;
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            unsigned e = t->ex.e[i];
            if (e == 0) continue;
            if (!monos.empty()) monos += "*";
            monos += vars_->name(i);
            if (e > 1) monos += "^" + std::to_string(e);
        }
        if (monos.empty()) {
            os << c.get_str();
        } else if (c == 1) {
            os << monos;
        } else {
            os << c.get_str() << "*" << monos;
        }
    }
    return os.str();
}

}  // namespace qtsym
