#include "qtsym/symfunc.hpp"

#include <algorithm>
#include <sstream>

namespace qtsym {

// ---------------------------------------------------------------- Alphabet

Alphabet& Alphabet::add(RatQT scalar, bool uses_X, bool eps) {
    if (!scalar.is_zero()) terms_.push_back({std::move(scalar), uses_X, eps});
    return *this;
}

Alphabet Alphabet::operator+(const Alphabet& o) const {
    Alphabet r = *this;
    for (const auto& t : o.terms_) r.terms_.push_back(t);
    return r;
}

Alphabet Alphabet::X(VarListPtr vars) {
    Alphabet a(vars);
    a.add(RatQT::integer(vars, 1), true);
    return a;
}

Alphabet Alphabet::minus_X(VarListPtr vars) {
    Alphabet a(vars);
    a.add(RatQT::integer(vars, -1), true);
    return a;
}

Alphabet Alphabet::minus_eps_X(VarListPtr vars) {
    Alphabet a(vars);
    a.add(RatQT::integer(vars, -1), true, true);
    return a;
}

Alphabet Alphabet::scaled_X(const RatQT& f) {
    Alphabet a(f.vars());
    a.add(f, true);
    return a;
}

Alphabet Alphabet::scalar(const RatQT& f) {
    Alphabet a(f.vars());
    a.add(f, false);
    return a;
}

Alphabet Alphabet::X_over_M(VarListPtr vars) {
    return scaled_X(RatQT::integer(vars, 1) / M_poly(vars));
}

Alphabet Alphabet::X_times_M(VarListPtr vars) { return scaled_X(M_poly(vars)); }

Alphabet Alphabet::minus_MX(VarListPtr vars) { return scaled_X(-M_poly(vars)); }

RatQT M_poly(const VarListPtr& vars) {
    RatQT one = RatQT::integer(vars, 1);
    return (one - RatQT::variable(vars, "q")) * (one - RatQT::variable(vars, "t"));
}

// ---------------------------------------------------------------- SymFunc

SymFunc SymFunc::constant(const RatQT& c) {
    SymFunc f(c.vars());
    if (!c.is_zero()) f.coeffs_.emplace(Partition(), c);
    return f;
}

SymFunc SymFunc::p(VarListPtr vars, const Partition& la, RatQT coeff) {
    SymFunc f(std::move(vars));
    if (!coeff.is_zero()) f.coeffs_.emplace(la, std::move(coeff));
    return f;
}

RatQT SymFunc::coeff(const Partition& la) const {
    auto it = coeffs_.find(la);
    return it == coeffs_.end() ? RatQT(vars_) : it->second;
}

void SymFunc::set_coeff(const Partition& la, RatQT c) {
    if (c.is_zero())
        coeffs_.erase(la);
    else
        coeffs_[la] = std::move(c);
}

void SymFunc::add_coeff(const Partition& la, const RatQT& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(la);
    if (it == coeffs_.end()) {
        coeffs_.emplace(la, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

SymFunc SymFunc::operator-() const {
    SymFunc r(vars_);
    for (const auto& [la, c] : coeffs_) r.coeffs_.emplace(la, -c);
    return r;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    SymFunc r = *this;
    r += o;
    return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (vars_ != o.vars_) throw std::invalid_argument("SymFunc: mixed variable lists");
    for (const auto& [la, c] : o.coeffs_) add_coeff(la, c);
    return *this;
}

SymFunc SymFunc::operator-(const SymFunc& o) const { return *this + (-o); }

SymFunc SymFunc::operator*(const SymFunc& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("SymFunc: mixed variable lists");
    SymFunc r(vars_);
    for (const auto& [la, ca] : coeffs_)
        for (const auto& [mu, cb] : o.coeffs_)
            r.add_coeff(partition_union(la, mu), ca * cb);
    return r;
}

SymFunc SymFunc::scale(const RatQT& c) const {
    SymFunc r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [la, x] : coeffs_) r.coeffs_.emplace(la, x * c);
    return r;
}

int SymFunc::degree() const {
    int d = 0;
    for (const auto& [la, c] : coeffs_) d = std::max(d, la.size());
    return d;
}

int SymFunc::min_degree() const {
    if (coeffs_.empty()) return 0;
    int d = coeffs_.begin()->first.size();
    for (const auto& [la, c] : coeffs_) d = std::min(d, la.size());
    return d;
}

bool SymFunc::is_homogeneous() const {
    return coeffs_.empty() || degree() == min_degree();
}

SymFunc SymFunc::component(int n) const {
    SymFunc r(vars_);
    for (const auto& [la, c] : coeffs_)
        if (la.size() == n) r.coeffs_.emplace(la, c);
    return r;
}

std::vector<int> SymFunc::support_degrees() const {
    std::vector<int> out;
    for (const auto& [la, c] : coeffs_) {
        int n = la.size();
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SymFunc SymFunc::truncate(int maxdeg) const {
    SymFunc r(vars_);
    for (const auto& [la, c] : coeffs_)
        if (la.size() <= maxdeg) r.coeffs_.emplace(la, c);
    return r;
}

SymFunc SymFunc::embed(const VarListPtr& newvars) const {
    if (newvars == vars_) return *this;
    SymFunc r(newvars);
    for (const auto& [la, c] : coeffs_) r.coeffs_.emplace(la, c.embed(newvars));
    return r;
}

SymFunc SymFunc::map_coeffs(const std::function<RatQT(const RatQT&)>& f) const {
    SymFunc r(vars_);
    for (const auto& [la, c] : coeffs_) {
        RatQT v = f(c);
        if (!v.is_zero()) r.coeffs_.emplace(la, std::move(v));
    }
    return r;
}

std::vector<SymFunc> SymFunc::coeffs_in(const std::string& var) const {
    std::vector<SymFunc> out;
    for (const auto& [la, c] : coeffs_) {
        auto cs = c.coeffs_in(var);
        if (cs.size() > out.size()) out.resize(cs.size(), SymFunc(vars_));
        for (std::size_t k = 0; k < cs.size(); ++k)
            if (!cs[k].is_zero()) out[k].add_coeff(la, cs[k]);
    }
    if (out.empty()) out.push_back(SymFunc(vars_));
    return out;
}

std::string SymFunc::serialize() const {
    std::ostringstream os;
    os << "basis=p;\n";
    for (const auto& [la, c] : coeffs_)
        os << la.dotted() << " : " << c.str() << "\n";
    return os.str();
}

std::string SymFunc::str(const std::string& basis_letter) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [la, c] : coeffs_) {
        if (!first) os << "\n";
        first = false;
        os << basis_letter << la.bracketed() << " : " << c.str();
    }
    return os.str();
}

}  // namespace qtsym
