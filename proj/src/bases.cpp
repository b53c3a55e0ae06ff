#include "qtsym/symfunc.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

namespace qtsym {

namespace {

std::shared_mutex& cache_mutex() {
    static std::shared_mutex mu;
    return mu;
}

// e_n and h_n over the base field via the Newton recurrences
//   n e_n = sum_{i=1..n} (-1)^{i-1} p_i e_{n-i},
//   n h_n = sum_{i=1..n} p_i h_{n-i}.
const SymFunc& eh_cached(int n, bool elementary) {
    static std::map<std::pair<int, bool>, SymFunc> cache;
    auto key = std::make_pair(n, elementary);
    {
        std::shared_lock lock(cache_mutex());
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::unique_lock lock(cache_mutex());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    VarListPtr V = qt_vars();
    std::vector<SymFunc> seq;
    seq.push_back(SymFunc::one(V));
    for (int m = 1; m <= n; ++m) {
        SymFunc acc(V);
        for (int i = 1; i <= m; ++i) {
            RatQT sign = RatQT::integer(V, (elementary && i % 2 == 0) ? -1 : 1);
            acc += (seq[static_cast<std::size_t>(m - i)] *
                    SymFunc::p(V, Partition::single(i), sign));
        }
        seq.push_back(acc.scale(RatQT::rational(V, 1, m)));
        cache.emplace(std::make_pair(m, elementary), seq.back());
    }
    cache.emplace(std::make_pair(0, elementary), seq[0]);
    return cache.at(key);
}

std::vector<int> beta_set(const Partition& la, int len) {
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        beta[static_cast<std::size_t>(i)] = la.part(i) + (len - 1 - i);
    return beta;
}

Partition from_beta(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
        int p = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

}  // namespace

SymFunc e_basis(VarListPtr vars, int n) {
    if (n < 0) return SymFunc(std::move(vars));
    return eh_cached(n, true).embed(vars);
}

SymFunc h_basis(VarListPtr vars, int n) {
    if (n < 0) return SymFunc(std::move(vars));
    return eh_cached(n, false).embed(vars);
}

SymFunc p_basis(VarListPtr vars, int n) {
    if (n < 0) return SymFunc(std::move(vars));
    if (n == 0) return SymFunc::one(vars);
    return SymFunc::p(vars, Partition::single(n), RatQT::integer(vars, 1));
}

SymFunc e_basis(VarListPtr vars, const Partition& la) {
    SymFunc r = SymFunc::one(vars);
    for (int p : la.parts()) r *= e_basis(vars, p);
    return r;
}

SymFunc h_basis(VarListPtr vars, const Partition& la) {
    SymFunc r = SymFunc::one(vars);
    for (int p : la.parts()) r *= h_basis(vars, p);
    return r;
}

SymFunc p_basis(VarListPtr vars, const Partition& la) {
    RatQT one = RatQT::integer(vars, 1);
    return SymFunc::p(std::move(vars), la, std::move(one));
}

// Murnaghan-Nakayama through beta sets: removing a border strip of size r
// is a move beta_i -> beta_i - r landing outside the set; its height is the
// number of beta values jumped over.
mpz_class sym_character(const Partition& la, const Partition& mu) {
    static std::map<std::pair<Partition, Partition>, mpz_class> cache;
    if (la.size() != mu.size()) throw std::invalid_argument("sym_character: size mismatch");
    if (la.empty()) return 1;
    auto key = std::make_pair(la, mu);
    {
        std::shared_lock lock(cache_mutex());
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    int r = mu.part(0);
    Partition mu_rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
    int len = la.length();
    std::vector<int> beta = beta_set(la, len);
    mpz_class sum = 0;
    for (int i = 0; i < len; ++i) {
        int target = beta[static_cast<std::size_t>(i)] - r;
        if (target < 0) continue;
        bool occupied = false;
        int height = 0;
        for (int j = 0; j < len; ++j) {
            if (j == i) continue;
            int bj = beta[static_cast<std::size_t>(j)];
            if (bj == target) { occupied = true; break; }
            if (bj > target && bj < beta[static_cast<std::size_t>(i)]) ++height;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[static_cast<std::size_t>(i)] = target;
        mpz_class chi = sym_character(from_beta(std::move(nb)), mu_rest);
        sum += (height % 2 == 0) ? chi : -chi;
    }

    std::unique_lock lock(cache_mutex());
    return cache.emplace(key, std::move(sum)).first->second;
}

SymFunc s_basis(VarListPtr vars, const Partition& la) {
    static std::map<Partition, SymFunc> cache;
    {
        std::shared_lock lock(cache_mutex());
        auto it = cache.find(la);
        if (it != cache.end()) {
            SymFunc f = it->second;
            lock.unlock();
            return f.embed(vars);
        }
    }
    VarListPtr V = qt_vars();
    SymFunc f(V);
    for (const Partition& mu : partitions_of(la.size())) {
        mpz_class chi = sym_character(la, mu);
        if (chi == 0) continue;
        f.add_coeff(mu, RatQT(IntPoly::constant(V, chi),
                              IntPoly::constant(V, mpz_class(mu.z()))));
    }
    {
        std::unique_lock lock(cache_mutex());
        cache.emplace(la, f);
    }
    return f.embed(vars);
}

// ------------------------------------------------- monomial basis

namespace {

// Number of maps from the slots of mu's parts onto the positions of la
// with the prescribed sums: iterate the positions of la, choosing which
// sub-multiset of mu goes to each.
void count_maps(const std::vector<int>& la, std::size_t pos,
                std::vector<int>& mult,  // mult[v] = remaining parts equal v
                const mpz_class& ways, mpz_class& total);

void choose_for_pos(const std::vector<int>& la, std::size_t pos,
                    std::vector<int>& mult, std::size_t v, int remaining,
                    const mpz_class& weight, mpz_class& total) {
    if (remaining == 0) {
        count_maps(la, pos + 1, mult, weight, total);
        return;
    }
    if (v == 0) return;
    int maxs = std::min(mult[v], remaining / static_cast<int>(v));
    for (int s = 0; s <= maxs; ++s) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(mult[v]),
                     static_cast<unsigned long>(s));
        mult[v] -= s;
        choose_for_pos(la, pos, mult, v - 1, remaining - s * static_cast<int>(v),
                       weight * b, total);
        mult[v] += s;
    }
}

void count_maps(const std::vector<int>& la, std::size_t pos,
                std::vector<int>& mult, const mpz_class& ways, mpz_class& total) {
    if (pos == la.size()) {
        for (int m : mult)
            if (m != 0) return;
        total += ways;
        return;
    }
    choose_for_pos(la, pos, mult, mult.size() - 1, la[pos], ways, total);
}

}  // namespace

SymFunc m_basis(VarListPtr vars, const Partition& la) {
    static std::map<Partition, SymFunc> cache;
    {
        std::shared_lock lock(cache_mutex());
        auto it = cache.find(la);
        if (it != cache.end()) {
            SymFunc f = it->second;
            lock.unlock();
            return f.embed(vars);
        }
    }
    int n = la.size();
    const auto& parts = partitions_of(n);
    std::size_t N = parts.size(), idx_la = 0;
    // R[i][j] = coefficient of m_{parts[i]} in p_{parts[j]}
    std::vector<std::vector<mpq_class>> A(N, std::vector<mpq_class>(2 * N, 0));
    for (std::size_t i = 0; i < N; ++i) {
        if (parts[i] == la) idx_la = i;
        for (std::size_t j = 0; j < N; ++j) {
            const Partition& mu = parts[j];
            std::vector<int> mult(static_cast<std::size_t>(n) + 1, 0);
            for (int p : mu.parts()) ++mult[static_cast<std::size_t>(p)];
            mpz_class total = 0;
            std::vector<int> m2 = mult;
            count_maps(parts[i].parts(), 0, m2, 1, total);
            A[i][j] = mpq_class(total);
        }
        A[i][N + i] = 1;
    }
    // invert R^T... solve m = (R^T)^{-1} p by Gaussian elimination on [R | I]
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t piv = col;
        while (piv < N && A[piv][col] == 0) ++piv;
        if (piv == N) throw std::logic_error("m_basis: singular transition matrix");
        std::swap(A[piv], A[col]);
        mpq_class d = A[col][col];
        for (auto& x : A[col]) x /= d;
        for (std::size_t r = 0; r < N; ++r) {
            if (r == col || A[r][col] == 0) continue;
            mpq_class f = A[r][col];
            for (std::size_t c = col; c < 2 * N; ++c) A[r][c] -= f * A[col][c];
        }
    }
    // Now A[:, N..] = R^{-1}; m_la = sum_mu (R^{-1})_{mu,la} p_mu.
    VarListPtr V = qt_vars();
    SymFunc f(V);
    for (std::size_t j = 0; j < N; ++j) {
        mpq_class c = A[j][N + idx_la];
        if (c == 0) continue;
        f.add_coeff(parts[j], RatQT(IntPoly::constant(V, c.get_num()),
                                    IntPoly::constant(V, c.get_den())));
    }
    {
        std::unique_lock lock(cache_mutex());
        cache.emplace(la, f);
    }
    return f.embed(vars);
}

SymFunc basis_element(char basis, VarListPtr vars, const Partition& la) {
    switch (basis) {
        case 'e': return e_basis(std::move(vars), la);
        case 'h': return h_basis(std::move(vars), la);
        case 'p': return p_basis(std::move(vars), la);
        case 's': return s_basis(std::move(vars), la);
        case 'm': return m_basis(std::move(vars), la);
        default: throw std::invalid_argument("basis_element: unknown basis");
    }
}

std::map<Partition, RatQT> to_schur(const SymFunc& f) {
    // <f, s_la> with <p_mu, s_la> = chi^la(mu)
    std::map<Partition, RatQT> out;
    for (int n : f.support_degrees()) {
        SymFunc fn = f.component(n);
        for (const Partition& la : partitions_of(n)) {
            RatQT c(f.vars());
            for (const auto& [mu, x] : fn.coeffs()) {
                mpz_class chi = sym_character(la, mu);
                if (chi != 0) c += x * RatQT::integer(f.vars(), chi);
            }
            if (!c.is_zero()) out.emplace(la, std::move(c));
        }
    }
    return out;
}

std::map<Partition, RatQT> to_m(const SymFunc& f) {
    std::map<Partition, RatQT> out;
    for (int n : f.support_degrees()) {
        SymFunc fn = f.component(n);
        for (const Partition& la : partitions_of(n)) {
            RatQT c = hall(fn, h_basis(f.vars(), la));
            if (!c.is_zero()) out.emplace(la, std::move(c));
        }
    }
    return out;
}

std::map<Partition, RatQT> to_e(const SymFunc& f) {
    // <f, m-dual>: expand through omega and h: e_la coefficient of f equals
    // the m_la coefficient of... simplest exact route: solve per degree
    // against the e_la basis using the Hall pairing with the forgotten
    // basis; instead we reuse to_m(omega(f)) and conjugation:
    //   f = sum c_la e_la  <=>  omega(f) = sum c_la h_la.
    std::map<Partition, RatQT> out;
    SymFunc g = omega(f);
    // h_la coefficients of g: <g, m_la> under duality <h_la, m_mu> = delta
    for (int n : g.support_degrees()) {
        SymFunc gn = g.component(n);
        for (const Partition& la : partitions_of(n)) {
            RatQT c = hall(gn, m_basis(g.vars(), la));
            if (!c.is_zero()) out.emplace(la, std::move(c));
        }
    }
    return out;
}

std::map<Partition, RatQT> to_h(const SymFunc& f) {
    std::map<Partition, RatQT> out;
    for (int n : f.support_degrees()) {
        SymFunc fn = f.component(n);
        for (const Partition& la : partitions_of(n)) {
            RatQT c = hall(fn, m_basis(f.vars(), la));
            if (!c.is_zero()) out.emplace(la, std::move(c));
        }
    }
    return out;
}

std::map<Partition, RatQT> to_basis(char basis, const SymFunc& f) {
    switch (basis) {
        case 'e': return to_e(f);
        case 'h': return to_h(f);
        case 'p': {
            std::map<Partition, RatQT> out;
            for (const auto& [la, c] : f.coeffs()) out.emplace(la, c);
            return out;
        }
        case 's': return to_schur(f);
        case 'm': return to_m(f);
        default: throw std::invalid_argument("to_basis: unknown basis");
    }
}

// --------------------------------------------------- scalar products

RatQT hall(const SymFunc& f, const SymFunc& g) {
    if (f.vars() != g.vars()) throw std::invalid_argument("hall: mixed variable lists");
    std::vector<RatQT> terms;
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) ++ia;
        else if (ib->first < ia->first) ++ib;
        else {
            terms.push_back(ia->second * ib->second *
                            RatQT::integer(f.vars(), static_cast<long>(ia->first.z())));
            ++ia; ++ib;
        }
    }
    return balanced_sum(std::move(terms), f.vars());
}

// <p_mu, p_mu>_* weight, cached per partition and variable list
const RatQT& star_weight(const Partition& mu, const VarListPtr& V) {
    static std::map<std::pair<Partition, const VarList*>, RatQT> cache;
    auto key = std::make_pair(mu, V.get());
    {
        std::shared_lock lock(cache_mutex());
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    RatQT q = RatQT::variable(V, "q"), t = RatQT::variable(V, "t");
    RatQT one = RatQT::integer(V, 1);
    RatQT w = RatQT::integer(V, static_cast<long>(mu.z()));
    for (int p : mu.parts())
        w *= (one - q.pow(p)) * (one - t.pow(p));
    if ((mu.size() - mu.length()) % 2 != 0) w = -w;
    std::unique_lock lock(cache_mutex());
    return cache.emplace(key, std::move(w)).first->second;
}

RatQT star(const SymFunc& f, const SymFunc& g) {
    if (f.vars() != g.vars()) throw std::invalid_argument("star: mixed variable lists");
    const VarListPtr& V = f.vars();
    std::vector<RatQT> terms;
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) ++ia;
        else if (ib->first < ia->first) ++ib;
        else {
            terms.push_back(ia->second * ib->second * star_weight(ia->first, V));
            ++ia; ++ib;
        }
    }
    return balanced_sum(std::move(terms), V);
}

RatQT star_mod(const SymFunc& f, const SymFunc& g) {
    return hall(plethysm(f, Alphabet::minus_MX(f.vars())), g);
}

SymFunc perp(const SymFunc& f, const SymFunc& g) {
    if (f.vars() != g.vars()) throw std::invalid_argument("perp: mixed variable lists");
    SymFunc out(f.vars());
    for (const auto& [la, cf] : f.coeffs()) {
        auto la_mult = la.multiplicities();
        for (const auto& [mu, cg] : g.coeffs()) {
            if (!la.contained_as_multiset(mu)) continue;
            auto mu_mult = mu.multiplicities();
            // p_k^perp = k d/dp_k applied multiplicatively
            mpz_class factor = 1;
            std::vector<int> rest_mult = mu_mult;
            for (std::size_t k = 1; k < la_mult.size(); ++k) {
                for (int a = 0; a < la_mult[k]; ++a) {
                    factor *= static_cast<long>(k) *
                              static_cast<long>(rest_mult[k] - a);
                }
                rest_mult[k] -= la_mult[k];
            }
            std::vector<int> parts;
            for (int v = static_cast<int>(rest_mult.size()) - 1; v >= 1; --v)
                for (int c = 0; c < rest_mult[static_cast<std::size_t>(v)]; ++c)
                    parts.push_back(v);
            out.add_coeff(Partition(std::move(parts)),
                          cf * cg * RatQT::integer(f.vars(), factor));
        }
    }
    return out;
}

}  // namespace qtsym
