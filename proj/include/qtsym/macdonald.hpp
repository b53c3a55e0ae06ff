#pragma once

#include "qtsym/symfunc.hpp"

#include <filesystem>
#include <shared_mutex>
#include <unordered_map>

namespace qtsym {

// The six classical statistics of a partition, over the base field {q,t}.
struct PartitionStats {
    RatQT B;      // sum of q^a' t^l'
    RatQT D;      // M*B - 1
    RatQT T;      // prod of q^a' t^l'
    RatQT Pi;     // prod over noncorner cells of (1 - q^a' t^l')
    RatQT w;      // prod of (q^a - t^(l+1))(t^l - q^(a+1))
    long n_stat;  // sum mu_i (i-1)
};

const PartitionStats& stats(const Partition& mu);

// Modified Macdonald basis with memoization and an optional disk cache.
// Construction: Gram-Schmidt of the monomial basis in dominance order
// (lex-refined) under the (q,t)-deformed Hall form gives P_mu; the integral
// form J_mu and the plethystic substitution X -> X/(1 - 1/t), t -> 1/t give
// H_mu.  All returned values live over the base field {q,t}.
class MacBasis {
public:
    explicit MacBasis(int max_degree = 16) : max_degree_(max_degree) {}

    int max_degree() const { return max_degree_; }

    // H~_mu; throws when |mu| exceeds the configured max degree.
    const SymFunc& H(const Partition& mu);

    // every H~_mu with mu |- n
    void build_degree(int n);

    // test hook: rebuild one degree with the lex tie order reversed and
    // return the resulting H~ family (no caching).
    std::map<Partition, SymFunc> build_degree_reversed_ties(int n);

    // independent construction from the triangularity axioms
    //   H~_mu[X(1-q)] in span{s_la : la >= mu},
    //   H~_mu[X(1-t)] in span{s_la : la >= mu'},  <H~_mu, s_(n)> = 1,
    // solved as a linear system over Q(q,t).
    SymFunc H_by_axioms(const Partition& mu);

    // ---- disk cache ------------------------------------------------
    // One file per partition ("3-1.sym") plus a manifest with the max
    // degree and a content hash per entry.
    struct CacheStatus {
        int loaded = 0;
        int stored = 0;
        std::vector<std::string> rejected;  // partition names that failed validation
    };
    CacheStatus cache_load(const std::filesystem::path& dir);
    CacheStatus cache_store(const std::filesystem::path& dir);

private:
    SymFunc compute_H_from_P(const Partition& mu, const SymFunc& P) const;
    std::map<Partition, SymFunc> gram_schmidt_degree(int n, bool reverse_ties) const;
    // Same pipeline run over Q at a grid of prime evaluation points, with
    // the (q,t)-coefficients recovered by Newton interpolation inside the
    // known degree bounds deg_q <= n(mu'), deg_t <= n(mu).
    std::map<Partition, SymFunc> gram_schmidt_interpolated(int n) const;

    int max_degree_;
    mutable std::shared_mutex mu_;
    std::unordered_map<Partition, SymFunc, PartitionHash> table_;
    std::vector<bool> degree_done_ = std::vector<bool>(64, false);
};

// Process-wide basis instance shared by operators and checks.
MacBasis& mac_basis();

// E_{n,k} of Garsia-Haglund: requires 1 <= k <= n.
SymFunc enk(VarListPtr vars, int n, int k);

// Expansion f = sum c_mu H~_mu through star-orthogonality; exact.
std::map<Partition, RatQT> mac_expand(MacBasis& basis, const SymFunc& f);

// Rebuild sum c_mu H~_mu (inverse of mac_expand).
SymFunc mac_resum(MacBasis& basis, const std::map<Partition, RatQT>& coeffs,
                  const VarListPtr& vars);

// 64-bit FNV-1a, used for cache content hashes.
std::uint64_t fnv1a(const std::string& data);

}  // namespace qtsym
