#pragma once

#include "qtsym/partition.hpp"
#include "qtsym/ratqt.hpp"

#include <functional>
#include <map>

namespace qtsym {

// Formal plethystic alphabet: a finite sum of terms
//   scalar * (X or 1), optionally twisted by epsilon,
// defining p_k[A] = sum over terms of
//   substitute_powers(scalar, k) * (-1)^(k * eps) * (p_k if uses_X else 1).
// The scalar is a rational function of the field variables; its monomials
// are raised to the k-th power with coefficients kept, which matches the
// plethystic conventions (so scalar -1 encodes the plethystic minus sign).
class Alphabet {
public:
    struct Term {
        RatQT scalar;
        bool uses_X = false;
        bool eps = false;
    };

    explicit Alphabet(VarListPtr vars) : vars_(std::move(vars)) {}

    const VarListPtr& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }

    Alphabet& add(RatQT scalar, bool uses_X, bool eps = false);
    Alphabet operator+(const Alphabet& o) const;

    // presets
    static Alphabet X(VarListPtr vars);                       // X
    static Alphabet minus_X(VarListPtr vars);                 // -X (plethystic)
    static Alphabet minus_eps_X(VarListPtr vars);             // -eps X
    static Alphabet scaled_X(const RatQT& f);                 // f * X
    static Alphabet scalar(const RatQT& f);                   // f (no X)
    static Alphabet X_over_M(VarListPtr vars);                // X/M
    static Alphabet X_times_M(VarListPtr vars);               // MX
    static Alphabet minus_MX(VarListPtr vars);                // -MX

private:
    VarListPtr vars_;
    std::vector<Term> terms_;
};

// M = (1-q)(1-t) in the given field.
RatQT M_poly(const VarListPtr& vars);

// Element of the ring of symmetric functions over the field, stored as a
// finitely supported map partition -> coefficient in the power-sum basis.
class SymFunc {
public:
    SymFunc() : vars_(qt_vars()) {}
    explicit SymFunc(VarListPtr vars) : vars_(std::move(vars)) {}

    static SymFunc zero(VarListPtr vars) { return SymFunc(std::move(vars)); }
    static SymFunc constant(const RatQT& c);
    static SymFunc one(VarListPtr vars) { return constant(RatQT::integer(vars, 1)); }
    static SymFunc p(VarListPtr vars, const Partition& la, RatQT coeff);

    const VarListPtr& vars() const { return vars_; }
    const std::map<Partition, RatQT>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    RatQT coeff(const Partition& la) const;
    void set_coeff(const Partition& la, RatQT c);
    void add_coeff(const Partition& la, const RatQT& c);

    SymFunc operator-() const;
    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc operator*(const SymFunc& o) const;
    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o) { *this = *this - o; return *this; }
    SymFunc& operator*=(const SymFunc& o) { *this = *this * o; return *this; }
    SymFunc scale(const RatQT& c) const;
    bool operator==(const SymFunc& o) const { return vars_ == o.vars_ && coeffs_ == o.coeffs_; }
    bool operator!=(const SymFunc& o) const { return !(*this == o); }

    // degree of the top homogeneous component (0 for the zero function)
    int degree() const;
    int min_degree() const;
    bool is_homogeneous() const;
    bool is_constant() const { return degree() == 0; }
    RatQT constant_term() const { return coeff(Partition()); }
    SymFunc component(int n) const;
    std::vector<int> support_degrees() const;
    SymFunc truncate(int maxdeg) const;

    SymFunc embed(const VarListPtr& newvars) const;
    SymFunc map_coeffs(const std::function<RatQT(const RatQT&)>& f) const;

    // Coefficients of powers of a field variable (polynomial dependence).
    std::vector<SymFunc> coeffs_in(const std::string& var) const;

    // Canonical serialization: "basis=p;" then one "<partition> : <coeff>"
    // line per term in the canonical partition order.
    std::string serialize() const;
    static SymFunc deserialize(const std::string& text, const VarListPtr& vars);

    std::string str(const std::string& basis_letter = "p") const;

private:
    VarListPtr vars_;
    std::map<Partition, RatQT> coeffs_;
};

// ------------------------------------------------------------- bases

// e_n, h_n, p_n as power-sum expansions; n < 0 gives 0, n = 0 gives 1.
SymFunc e_basis(VarListPtr vars, int n);
SymFunc h_basis(VarListPtr vars, int n);
SymFunc p_basis(VarListPtr vars, int n);
SymFunc e_basis(VarListPtr vars, const Partition& la);
SymFunc h_basis(VarListPtr vars, const Partition& la);
SymFunc p_basis(VarListPtr vars, const Partition& la);
SymFunc s_basis(VarListPtr vars, const Partition& la);
SymFunc m_basis(VarListPtr vars, const Partition& la);
SymFunc basis_element(char basis, VarListPtr vars, const Partition& la);

// Murnaghan-Nakayama character chi^la(mu) (integers, cached).
mpz_class sym_character(const Partition& la, const Partition& mu);

// Exact Schur expansion; round-trips with s_basis.
std::map<Partition, RatQT> to_schur(const SymFunc& f);
// Monomial expansion read off through <f, h_la> = coefficient of m_la.
std::map<Partition, RatQT> to_m(const SymFunc& f);
std::map<Partition, RatQT> to_e(const SymFunc& f);
std::map<Partition, RatQT> to_h(const SymFunc& f);
std::map<Partition, RatQT> to_basis(char basis, const SymFunc& f);

// --------------------------------------------------- scalar products

RatQT hall(const SymFunc& f, const SymFunc& g);
RatQT star(const SymFunc& f, const SymFunc& g);
RatQT star_mod(const SymFunc& f, const SymFunc& g);

// f^perp g: adjoint of multiplication by f under the Hall product.
SymFunc perp(const SymFunc& f, const SymFunc& g);

// ------------------------------------------------------- plethysm etc.

SymFunc plethysm(const SymFunc& f, const Alphabet& A);
// Plethysm into a scalar alphabet, returning the field element.
RatQT plethysm_scalar(const SymFunc& f, const RatQT& a);

SymFunc omega(const SymFunc& f);
SymFunc omega_bar(const SymFunc& f);

// f[X + Y]
SymFunc translate(const SymFunc& f, const Alphabet& Y);
// f[X/M] and f[MX]
SymFunc star_f(const SymFunc& f);
SymFunc phi_f(const SymFunc& f);

// Exp[A] = sum_{n <= maxdeg} h_n[A]
SymFunc exp_pleth(const Alphabet& A, int maxdeg);
// P_Z f = Exp[ZX] f truncated to total degree maxdeg; Z is given by its
// scalar terms (each gets an X attached).
SymFunc mult_series(const Alphabet& Z, const SymFunc& f, int maxdeg);

}  // namespace qtsym
