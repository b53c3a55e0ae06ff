#include "qtsym/macdonald.hpp"

namespace qtsym {

// Linear solve of the triangularity characterization: the unknowns are the
// Schur coefficients K_la of H~_mu, constrained by
//   [s_nu] H~_mu[X(1-q)] = 0  unless  nu >= mu      (dominance),
//   [s_nu] H~_mu[X(1-t)] = 0  unless  nu >= mu',
//   K_(n) = 1.
// The system is overdetermined; Gaussian elimination plus a consistency
// sweep gives the unique solution.
SymFunc MacBasis::H_by_axioms(const Partition& mu) {
    VarListPtr V = qt_vars();
    int n = mu.size();
    if (n == 0) return SymFunc::one(V);

    const auto& lams = partitions_of(n);
    std::size_t N = lams.size();
    RatQT one = RatQT::integer(V, 1), zero(V);
    RatQT q = RatQT::variable(V, "q"), t = RatQT::variable(V, "t");

    Alphabet Xq(V), Xt(V);
    Xq.add(one - q, true);
    Xt.add(one - t, true);

    // A[nu][la] = [s_nu] s_la[X(1-q)], likewise B with (1-t)
    std::vector<std::map<Partition, RatQT>> Aq(N), At(N);
    for (std::size_t j = 0; j < N; ++j) {
        Aq[j] = to_schur(plethysm(s_basis(V, lams[j]), Xq));
        At[j] = to_schur(plethysm(s_basis(V, lams[j]), Xt));
    }

    Partition muc = mu.conjugate();
    std::vector<std::vector<RatQT>> rows;
    std::vector<RatQT> rhs;
    for (std::size_t i = 0; i < N; ++i) {
        const Partition& nu = lams[i];
        if (!mu.dominated_by(nu)) {
            std::vector<RatQT> row;
            row.reserve(N);
            for (std::size_t j = 0; j < N; ++j) {
                auto it = Aq[j].find(nu);
                row.push_back(it == Aq[j].end() ? zero : it->second);
            }
            rows.push_back(std::move(row));
            rhs.push_back(zero);
        }
        if (!muc.dominated_by(nu)) {
            std::vector<RatQT> row;
            row.reserve(N);
            for (std::size_t j = 0; j < N; ++j) {
                auto it = At[j].find(nu);
                row.push_back(it == At[j].end() ? zero : it->second);
            }
            rows.push_back(std::move(row));
            rhs.push_back(zero);
        }
    }
    {
        // normalization row: K_(n) = 1
        std::vector<RatQT> row(N, zero);
        for (std::size_t j = 0; j < N; ++j)
            if (lams[j] == Partition::single(n)) row[j] = one;
        rows.push_back(std::move(row));
        rhs.push_back(one);
    }

    // Gaussian elimination over Q(q,t)
    std::size_t nrows = rows.size();
    std::vector<int> pivot_col(nrows, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < N && rank < nrows; ++col) {
        std::size_t piv = nrows;
        for (std::size_t r = rank; r < nrows; ++r)
            if (!rows[r][col].is_zero()) { piv = r; break; }
        if (piv == nrows) continue;
        std::swap(rows[rank], rows[piv]);
        std::swap(rhs[rank], rhs[piv]);
        RatQT d = rows[rank][col];
        for (std::size_t c = col; c < N; ++c) rows[rank][c] /= d;
        rhs[rank] /= d;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            RatQT f = rows[r][col];
            for (std::size_t c = col; c < N; ++c) rows[r][c] -= f * rows[rank][c];
            rhs[r] -= f * rhs[rank];
        }
        pivot_col[rank] = static_cast<int>(col);
        ++rank;
    }
    if (rank != N)
        throw std::logic_error("H_by_axioms: system does not determine H~ for " + mu.bracketed());
    for (std::size_t r = rank; r < nrows; ++r)
        if (!rhs[r].is_zero())
            throw std::logic_error("H_by_axioms: inconsistent system for " + mu.bracketed());

    std::vector<RatQT> K(N, zero);
    for (std::size_t r = 0; r < rank; ++r)
        K[static_cast<std::size_t>(pivot_col[r])] = rhs[r];

    SymFunc H(V);
    for (std::size_t j = 0; j < N; ++j)
        if (!K[j].is_zero()) H += s_basis(V, lams[j]).scale(K[j]);
    return H;
}

}  // namespace qtsym
