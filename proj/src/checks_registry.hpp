#pragma once

#include "qtsym/checks.hpp"
#include "qtsym/qcomb.hpp"

#include <sstream>

namespace qtsym::detail {

void add_qlemma_checks(std::vector<Check>& out);
void add_macbasics_checks(std::vector<Check>& out);
void add_series_checks(std::vector<Check>& out);
void add_main_checks(std::vector<Check>& out);
void add_sec5_checks(std::vector<Check>& out);
void add_sec6_checks(std::vector<Check>& out);
void add_sec7_checks(std::vector<Check>& out);
void add_sec89_checks(std::vector<Check>& out);

// shared shorthand used by the check implementations
inline SymFunc H_of(const Partition& mu, const VarListPtr& V) {
    return mac_basis().H(mu).embed(V);
}
inline RatQT B_of(const Partition& mu, const VarListPtr& V) { return stats(mu).B.embed(V); }
inline RatQT T_of(const Partition& mu, const VarListPtr& V) { return stats(mu).T.embed(V); }
inline RatQT Pi_of(const Partition& mu, const VarListPtr& V) { return stats(mu).Pi.embed(V); }
inline RatQT w_of(const Partition& mu, const VarListPtr& V) { return stats(mu).w.embed(V); }
inline RatQT D_of(const Partition& mu, const VarListPtr& V) { return stats(mu).D.embed(V); }

// Theta_{b_idx} F with the e/h basis letter, honoring the index conventions
// (negative index kills the term, index 0 is the identity).
inline SymFunc theta_eh(MacBasis& B, char basis, int idx, const SymFunc& F) {
    if (idx < 0) return SymFunc(F.vars());
    if (idx == 0) return F;
    return theta(B, basis == 'e' ? e_basis(F.vars(), idx) : h_basis(F.vars(), idx), F);
}

inline SymFunc delta_eh(MacBasis& B, char basis, int idx, const SymFunc& F, bool primed = false) {
    if (idx < 0) return SymFunc(F.vars());
    if (idx == 0) return F;
    return delta_op(B, basis == 'e' ? e_basis(F.vars(), idx) : h_basis(F.vars(), idx), F, primed);
}

// Delta_{e_n} E_{n,k} with the boundary conventions E_{0,0} = 1 and
// E_{n,0} = 0 for n >= 1 (from the q^k-formula at k = 0).
inline SymFunc delta_enk(MacBasis& B, const VarListPtr& V, int n, int k) {
    if (k == 0) return n == 0 ? SymFunc::one(V) : SymFunc(V);
    if (k < 0 || n < k) return SymFunc(V);
    return delta_op(B, e_basis(V, n), enk(V, n, k));
}

template <typename... Args>
std::string lbl(Args&&... args) {
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

}  // namespace qtsym::detail
