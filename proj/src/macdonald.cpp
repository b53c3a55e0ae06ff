#include "qtsym/macdonald.hpp"

#include "qtsym/qcomb.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>

namespace qtsym {

const PartitionStats& stats(const Partition& mu) {
    static std::mutex guard;
    static std::unordered_map<Partition, PartitionStats, PartitionHash> cache;
    std::lock_guard<std::mutex> lock(guard);
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;

    VarListPtr V = qt_vars();
    RatQT one = RatQT::integer(V, 1);
    RatQT q = RatQT::variable(V, "q"), t = RatQT::variable(V, "t");
    PartitionStats st{RatQT(V), RatQT(V), one, one, one, mu.n_stat()};
    for (const auto& c : mu.cells()) {
        RatQT cell = q.pow(c.coarm) * t.pow(c.coleg);
        st.B += cell;
        st.T *= cell;
        if (c.coarm != 0 || c.coleg != 0) st.Pi *= one - cell;
        st.w *= (q.pow(mu.arm(c)) - t.pow(mu.leg(c) + 1)) *
                (t.pow(mu.leg(c)) - q.pow(mu.arm(c) + 1));
    }
    st.D = M_poly(V) * st.B - one;
    return cache.emplace(mu, std::move(st)).first->second;
}

namespace {

// deformed Hall form: <p_la, p_la>_{q,t} = z_la prod (1-q^{la_i})/(1-t^{la_i})
const RatQT& qt_weight(const Partition& mu) {
    static std::mutex guard;
    static std::map<Partition, RatQT> cache;
    std::lock_guard<std::mutex> lock(guard);
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;
    VarListPtr V = qt_vars();
    RatQT q = RatQT::variable(V, "q"), t = RatQT::variable(V, "t");
    RatQT one = RatQT::integer(V, 1);
    RatQT w = RatQT::integer(V, static_cast<long>(mu.z()));
    for (int p : mu.parts())
        w *= (one - q.pow(p)) / (one - t.pow(p));
    return cache.emplace(mu, std::move(w)).first->second;
}

RatQT qt_hall(const SymFunc& f, const SymFunc& g) {
    std::vector<RatQT> terms;
    auto ia = f.coeffs().begin();
    auto ib = g.coeffs().begin();
    while (ia != f.coeffs().end() && ib != g.coeffs().end()) {
        if (ia->first < ib->first) ++ia;
        else if (ib->first < ia->first) ++ib;
        else {
            terms.push_back(ia->second * ib->second * qt_weight(ia->first));
            ++ia; ++ib;
        }
    }
    return balanced_sum(std::move(terms), f.vars());
}

// Vector of p-basis coordinates over a single polynomial denominator; the
// Gram-Schmidt loop stays in Z[q,t] this way, with one normalization per
// finished vector.
struct ScaledVec {
    std::map<Partition, IntPoly> num;
    IntPoly den;
};

ScaledVec to_scaled(const SymFunc& f) {
    ScaledVec v{{}, IntPoly::constant(f.vars(), 1)};
    for (const auto& [la, c] : f.coeffs()) {
        IntPoly g = poly_gcd(v.den, c.den());
        IntPoly extra = *c.den().divexact(g);
        if (!extra.is_one()) {
            for (auto& [k, n] : v.num) n = n * extra;
            v.den = v.den * extra;
        }
        v.num.emplace(la, c.num() * *v.den.divexact(c.den()));
    }
    return v;
}

SymFunc from_scaled(const ScaledVec& v, const VarListPtr& V) {
    SymFunc f(V);
    for (const auto& [la, n] : v.num) f.add_coeff(la, RatQT(n, v.den));
    return f;
}

// z_la prod (1-q^{la_i})(1-t^{la_i})... cleared of denominators: the weight
// times clear = z_la prod (1-q^{la_i}) prod_{k in clear multiset minus la}(1-t^k)
struct DegreeWeights {
    std::vector<IntPoly> w;   // cleared weight per partition index
    IntPoly clear;            // common denominator prod_k (1-t^k)^{floor(n/k)}
};

DegreeWeights qt_weights_cleared(int n) {
    VarListPtr V = qt_vars();
    RatQT one = RatQT::integer(V, 1);
    RatQT t = RatQT::variable(V, "t");
    IntPoly clear = IntPoly::constant(V, 1);
    for (int k = 1; k <= n; ++k)
        clear = clear * (one - t.pow(k)).num().pow(static_cast<unsigned>(n / k));
    DegreeWeights dw;
    dw.clear = clear;
    for (const Partition& la : partitions_of(n)) {
        RatQT w = qt_weight(la) * RatQT(clear);
        if (!w.is_polynomial()) throw std::logic_error("qt_weights_cleared: residual denominator");
        dw.w.push_back(w.num());
    }
    return dw;
}

// <a, b>_qt as an exact fraction, numerator accumulated in Z[q,t]
RatQT qt_hall_scaled(const ScaledVec& a, const ScaledVec& b, int n, const DegreeWeights& dw) {
    IntPoly acc(a.den.vars());
    const auto& parts = partitions_of(n);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto ia = a.num.find(parts[i]);
        if (ia == a.num.end()) continue;
        auto ib = b.num.find(parts[i]);
        if (ib == b.num.end()) continue;
        acc = acc + ia->second * ib->second * dw.w[i];
    }
    return RatQT(std::move(acc), a.den * b.den * dw.clear);
}

}  // namespace

std::map<Partition, SymFunc> MacBasis::gram_schmidt_degree(int n, bool reverse_ties) const {
    VarListPtr V = qt_vars();
    // lexicographic order refines dominance; process in increasing order
    std::vector<Partition> order = partitions_of(n);
    // partitions_of lists lex-descending from (n); increasing order is the reverse
    std::reverse(order.begin(), order.end());
    if (reverse_ties) {
        // a different linear extension of dominance: descending lex on the
        // conjugates (incomparable pairs flip relative to plain lex)
        std::sort(order.begin(), order.end(), [](const Partition& a, const Partition& b) {
            return a.conjugate().parts() > b.conjugate().parts();
        });
    }

    std::vector<SymFunc> P;
    std::vector<Partition> built;
    std::vector<RatQT> norms;
    std::map<Partition, SymFunc> out;
    for (const Partition& mu : order) {
        // <m_mu, P_nu> vanishes unless nu < mu in dominance, so projections
        // are needed only against dominated predecessors; this also makes
        // the result independent of how ties were broken.
        SymFunc m_mu = m_basis(V, mu);
        std::map<Partition, std::vector<RatQT>> acc;
        for (const auto& [la, c] : m_mu.coeffs()) acc[la].push_back(c);
        for (std::size_t j = 0; j < P.size(); ++j) {
            if (!built[j].dominated_by(mu)) continue;
            RatQT c = qt_hall(m_mu, P[j]);
            if (c.is_zero()) continue;
            RatQT r = c / norms[j];
            for (const auto& [la, x] : P[j].coeffs()) acc[la].push_back(-(r * x));
        }
        SymFunc v(V);
        for (auto& [la, xs] : acc)
            v.set_coeff(la, balanced_sum(std::move(xs), V));
        norms.push_back(qt_hall(v, v));
        if (norms.back().is_zero())
            throw std::logic_error("gram_schmidt_degree: degenerate form");
        P.push_back(v);
        built.push_back(mu);
        out.emplace(mu, std::move(v));
    }
    return out;
}

SymFunc MacBasis::compute_H_from_P(const Partition& mu, const SymFunc& P) const {
    VarListPtr V = qt_vars();
    RatQT q = RatQT::variable(V, "q"), t = RatQT::variable(V, "t");
    RatQT one = RatQT::integer(V, 1);
    // integral form J_mu = P_mu * prod_cells (1 - q^a t^{l+1})
    RatQT cmu = one;
    for (const auto& c : mu.cells())
        cmu *= one - q.pow(mu.arm(c)) * t.pow(mu.leg(c) + 1);
    SymFunc J = P.scale(cmu);
    // H~_mu = t^{n(mu)} J_mu[X/(1 - 1/t); q, 1/t]:
    // invert t in the coefficients, then p_la picks prod_i 1/(1 - t^{-la_i}).
    SymFunc H(V);
    for (const auto& [la, c] : J.coeffs()) {
        RatQT coeff = c.invert_var("t");
        for (int p : la.parts())
            coeff *= -t.pow(p) / (one - t.pow(p));  // 1/(1 - t^{-p})
        H.add_coeff(la, coeff);
    }
    return H.scale(t.pow(static_cast<int>(mu.n_stat())));
}

void MacBasis::build_degree(int n) {
    if (n > max_degree_)
        throw std::domain_error("MacBasis: degree " + std::to_string(n) +
                                " exceeds the configured maximum " + std::to_string(max_degree_));
    {
        std::shared_lock lock(mu_);
        if (degree_done_[static_cast<std::size_t>(n)]) return;
    }
    std::unique_lock lock(mu_);
    if (degree_done_[static_cast<std::size_t>(n)]) return;
    if (n == 0) {
        table_.emplace(Partition(), SymFunc::one(qt_vars()));
        degree_done_[0] = true;
        return;
    }
    // Above the symbolic threshold the same pipeline runs over Q at a grid
    // of prime evaluation points and the coefficients are interpolated;
    // see gram_schmidt_interpolated.
    std::map<Partition, SymFunc> Hs;
    if (n <= 5) {
        auto Ps = gram_schmidt_degree(n, false);
        for (const auto& [mu, P] : Ps) Hs.emplace(mu, compute_H_from_P(mu, P));
    } else {
        Hs = gram_schmidt_interpolated(n);
    }
    for (auto& [mu, H] : Hs) {
        RatQT sum(qt_vars());
        for (const auto& [la, c] : H.coeffs()) sum += c;
        if (!sum.is_one())
            throw std::logic_error("build_degree: normalization failed for " + mu.bracketed());
        if (!table_.count(mu)) table_.emplace(mu, std::move(H));
    }
    degree_done_[static_cast<std::size_t>(n)] = true;
}

std::map<Partition, SymFunc> MacBasis::build_degree_reversed_ties(int n) {
    auto Ps = gram_schmidt_degree(n, true);
    std::map<Partition, SymFunc> out;
    for (const auto& [mu, P] : Ps) out.emplace(mu, compute_H_from_P(mu, P));
    return out;
}

const SymFunc& MacBasis::H(const Partition& mu) {
    {
        std::shared_lock lock(mu_);
        auto it = table_.find(mu);
        if (it != table_.end()) return it->second;
    }
    build_degree(mu.size());
    std::shared_lock lock(mu_);
    return table_.at(mu);
}

MacBasis& mac_basis() {
    static MacBasis basis;
    return basis;
}

SymFunc enk(VarListPtr vars, int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("enk: need 1 <= k <= n");
    RatQT one = RatQT::integer(vars, 1);
    RatQT q = RatQT::variable(vars, "q");
    SymFunc acc(vars);
    for (int r = 0; r <= k; ++r) {
        RatQT coeff = qpow(vars, k + choose2(r)) * qbinom(vars, k, r);
        if (r % 2 != 0) coeff = -coeff;
        Alphabet A = Alphabet::scaled_X((one - q.pow(-r)) / (one - q));
        acc += plethysm(e_basis(vars, n), A).scale(coeff);
    }
    return acc;
}

std::map<Partition, RatQT> mac_expand(MacBasis& basis, const SymFunc& f) {
    std::map<Partition, RatQT> out;
    const VarListPtr& V = f.vars();
    for (int n : f.support_degrees()) {
        SymFunc fn = f.component(n);
        basis.build_degree(n);
        for (const Partition& mu : partitions_of(n)) {
            SymFunc Hmu = basis.H(mu).embed(V);
            RatQT c = star(fn, Hmu) / stats(mu).w.embed(V);
            if (!c.is_zero()) out.emplace(mu, std::move(c));
        }
    }
    return out;
}

SymFunc mac_resum(MacBasis& basis, const std::map<Partition, RatQT>& coeffs,
                  const VarListPtr& vars) {
    SymFunc acc(vars);
    for (const auto& [mu, c] : coeffs)
        acc += basis.H(mu).embed(vars).scale(c);
    return acc;
}

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace qtsym
