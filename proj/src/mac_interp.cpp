#include "qtsym/macdonald.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

// Evaluation-interpolation arithmetic for the Gram-Schmidt construction.
// At a point (q0, t0) with q0, t0 distinct primes no weight, norm or
// integral-form factor can vanish (q0^a t0^-b = 1 forces a = b = 0), so the
// numeric pipeline is total and agrees with the specialization of the
// symbolic one.

namespace qtsym {
namespace {

using Vec = std::vector<mpq_class>;

const std::vector<long>& primes_pool() {
    static std::vector<long> ps = [] {
        std::vector<long> out;
        for (long c = 2; out.size() < 100; ++c) {
            bool prime = true;
            for (long d = 2; d * d <= c; ++d)
                if (c % d == 0) { prime = false; break; }
            if (prime) out.push_back(c);
        }
        return out;
    }();
    return ps;
}

mpq_class qpow_mpq(const mpq_class& x, int e) {
    mpq_class r(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

// numeric m-basis matrix: row i = p-coordinates of m_{parts[i]}
std::vector<Vec> numeric_m_matrix(int n, const std::vector<Partition>& parts) {
    std::vector<Vec> M(parts.size(), Vec(parts.size(), 0));
    VarListPtr V = qt_vars();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        SymFunc m = m_basis(V, parts[i]);
        for (const auto& [la, c] : m.coeffs()) {
            std::size_t j = static_cast<std::size_t>(
                std::find(parts.begin(), parts.end(), la) - parts.begin());
            M[i][j] = mpq_class(c.num().constant_value(), c.den().constant_value());
        }
    }
    return M;
}

// All H~_mu p-coordinate vectors at q = q0, t = t0 (so the P/J stage runs
// at parameters (q0, 1/t0)).
std::vector<Vec> point_H(int n, const std::vector<Partition>& parts,
                         const std::vector<std::size_t>& order_idx,
                         const std::vector<std::vector<std::size_t>>& proj_sets,
                         const std::vector<Vec>& M, long q0, long t0) {
    std::size_t N = parts.size();
    mpq_class q(q0);
    mpq_class tau(1, t0);

    Vec weight(N);
    for (std::size_t i = 0; i < N; ++i) {
        mpq_class w(static_cast<long>(parts[i].z()));
        for (int p : parts[i].parts())
            w *= (1 - qpow_mpq(q, p)) / (1 - qpow_mpq(tau, p));
        weight[i] = w;
    }

    auto dot = [&](const Vec& a, const Vec& b) {
        mpq_class s(0);
        for (std::size_t k = 0; k < N; ++k)
            if (a[k] != 0 && b[k] != 0) s += a[k] * b[k] * weight[k];
        return s;
    };

    std::vector<Vec> P(N);
    std::vector<mpq_class> norms(N);
    for (std::size_t step = 0; step < N; ++step) {
        std::size_t mi = order_idx[step];
        Vec v = M[mi];
        for (std::size_t pj : proj_sets[step]) {
            mpq_class c = dot(M[mi], P[pj]);
            if (c == 0) continue;
            c /= norms[pj];
            for (std::size_t k = 0; k < N; ++k)
                if (P[pj][k] != 0) v[k] -= c * P[pj][k];
        }
        norms[step] = dot(v, v);
        if (norms[step] == 0)
            throw std::logic_error("point_H: degenerate norm at a prime point");
        P[step] = std::move(v);
    }

    // J_mu = c_mu P_mu, then the modified plethystic substitution
    std::vector<Vec> H(N, Vec(N, 0));
    for (std::size_t step = 0; step < N; ++step) {
        const Partition& mu = parts[order_idx[step]];
        mpq_class cmu(1);
        for (const auto& c : mu.cells())
            cmu *= 1 - qpow_mpq(q, mu.arm(c)) * qpow_mpq(tau, mu.leg(c) + 1);
        mpq_class tpow = qpow_mpq(mpq_class(t0), static_cast<int>(mu.n_stat()));
        Vec& out = H[order_idx[step]];
        for (std::size_t k = 0; k < N; ++k) {
            if (P[step][k] == 0) continue;
            mpq_class c = P[step][k] * cmu * tpow;
            for (int p : parts[k].parts()) c /= 1 - qpow_mpq(tau, p);
            out[k] = c;
        }
    }
    return H;
}

// monomial coefficients of the interpolating polynomial through
// (xs[i], ys[i]) via Newton divided differences
Vec interp_newton(const std::vector<long>& xs, const Vec& ys) {
    std::size_t k = ys.size();
    Vec dd = ys;
    for (std::size_t level = 1; level < k; ++level)
        for (std::size_t i = k - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / mpq_class(xs[i] - xs[i - level]);
    // expand the Newton form
    Vec coef(k, 0);
    Vec base(k, 0);  // current product (x - x0)...(x - x_{j-1})
    base[0] = 1;
    std::size_t blen = 1;
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < blen; ++i) coef[i] += dd[j] * base[i];
        if (j + 1 < k) {
            // base *= (x - xs[j])
            Vec nb(k, 0);
            for (std::size_t i = 0; i < blen; ++i) {
                nb[i + 1] += base[i];
                nb[i] -= mpq_class(xs[j]) * base[i];
            }
            base = std::move(nb);
            ++blen;
        }
    }
    return coef;
}

}  // namespace

std::map<Partition, SymFunc> MacBasis::gram_schmidt_interpolated(int n) const {
    VarListPtr V = qt_vars();
    const auto& parts = partitions_of(n);
    std::size_t N = parts.size();

    // processing order (lex increasing) and dominance projection sets
    std::vector<std::size_t> order_idx(N);
    for (std::size_t i = 0; i < N; ++i) order_idx[i] = N - 1 - i;
    std::vector<std::vector<std::size_t>> proj_sets(N);
    for (std::size_t s = 0; s < N; ++s)
        for (std::size_t j = 0; j < s; ++j)
            if (parts[order_idx[j]].dominated_by(parts[order_idx[s]]))
                proj_sets[s].push_back(j);

    std::vector<Vec> M = numeric_m_matrix(n, parts);

    std::vector<int> nq(N), nt(N);
    int max_nq = 0, max_nt = 0;
    for (std::size_t i = 0; i < N; ++i) {
        nq[i] = static_cast<int>(parts[i].conjugate().n_stat());
        nt[i] = static_cast<int>(parts[i].n_stat());
        max_nq = std::max(max_nq, nq[i]);
        max_nt = std::max(max_nt, nt[i]);
    }

    // disjoint prime evaluation points for q and t
    const auto& pool = primes_pool();
    std::vector<long> qpts(pool.begin(), pool.begin() + (max_nq + 1));
    std::vector<long> tpts(pool.begin() + (max_nq + 1),
                           pool.begin() + (max_nq + 1) + (max_nt + 1));

    // grid[i][j][mu][la]
    std::vector<std::vector<std::vector<Vec>>> grid(
        static_cast<std::size_t>(max_nq + 1),
        std::vector<std::vector<Vec>>(static_cast<std::size_t>(max_nt + 1)));
    {
        std::vector<std::pair<std::size_t, std::size_t>> cells;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(max_nq); ++i)
            for (std::size_t j = 0; j <= static_cast<std::size_t>(max_nt); ++j)
                cells.emplace_back(i, j);
        std::atomic<std::size_t> next{0};
        unsigned workers = std::max(1u, std::thread::hardware_concurrency());
        workers = std::min<unsigned>(workers, cells.size());
        std::vector<std::thread> pool_threads;
        std::exception_ptr err;
        std::mutex err_mu;
        for (unsigned w = 0; w < workers; ++w) {
            pool_threads.emplace_back([&] {
                for (;;) {
                    std::size_t k = next.fetch_add(1);
                    if (k >= cells.size()) break;
                    auto [i, j] = cells[k];
                    try {
                        grid[i][j] = point_H(n, parts, order_idx, proj_sets, M,
                                             qpts[i], tpts[j]);
                    } catch (...) {
                        std::lock_guard<std::mutex> lk(err_mu);
                        if (!err) err = std::current_exception();
                    }
                }
            });
        }
        for (auto& th : pool_threads) th.join();
        if (err) std::rethrow_exception(err);
    }

    std::map<Partition, SymFunc> out;
    int qidx = V->index_of("q"), tidx = V->index_of("t");
    for (std::size_t m = 0; m < N; ++m) {
        int dq = nq[m], dt = nt[m];
        SymFunc H(V);
        for (std::size_t la = 0; la < N; ++la) {
            // interpolate in t along each q-column, then in q per t-power
            std::vector<Vec> tcoef(static_cast<std::size_t>(dq + 1));
            bool all_zero = true;
            for (int i = 0; i <= dq; ++i) {
                Vec ys(static_cast<std::size_t>(dt + 1));
                for (int j = 0; j <= dt; ++j) {
                    ys[static_cast<std::size_t>(j)] =
                        grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][m][la];
                    if (ys[static_cast<std::size_t>(j)] != 0) all_zero = false;
                }
                tcoef[static_cast<std::size_t>(i)] =
                    interp_newton(std::vector<long>(tpts.begin(), tpts.begin() + dt + 1), ys);
            }
            if (all_zero) continue;
            // coefficients a_{j,k} over a common integer denominator
            mpz_class den(1);
            std::vector<Vec> qcoef(static_cast<std::size_t>(dt + 1));
            for (int k = 0; k <= dt; ++k) {
                Vec ys(static_cast<std::size_t>(dq + 1));
                for (int i = 0; i <= dq; ++i) ys[static_cast<std::size_t>(i)] = tcoef[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                qcoef[static_cast<std::size_t>(k)] =
                    interp_newton(std::vector<long>(qpts.begin(), qpts.begin() + dq + 1), ys);
                for (const auto& a : qcoef[static_cast<std::size_t>(k)]) {
                    mpz_class l;
                    mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), a.get_den().get_mpz_t());
                    den = l;
                }
            }
            std::vector<IntPoly::Term> terms;
            for (int k = 0; k <= dt; ++k) {
                for (int j = 0; j <= dq; ++j) {
                    mpq_class a = qcoef[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                    if (a == 0) continue;
                    Expo ex{};
                    ex.e[static_cast<std::size_t>(qidx)] = static_cast<std::uint16_t>(j);
                    ex.e[static_cast<std::size_t>(tidx)] = static_cast<std::uint16_t>(k);
                    ex.recount();
                    terms.push_back({ex, mpz_class(a.get_num() * (den / a.get_den()))});
                }
            }
            H.set_coeff(parts[la], RatQT(IntPoly::from_terms(V, std::move(terms)),
                                         IntPoly::constant(V, den)));
        }
        out.emplace(parts[m], std::move(H));
    }
    return out;
}

}  // namespace qtsym
