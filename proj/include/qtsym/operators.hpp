#pragma once

#include "qtsym/macdonald.hpp"

namespace qtsym {

// Test hooks: deliberate spec-breaking mutations used to prove the checks
// are not vacuous.
enum class Mutation { none, nabla_sign_flip, theta_tilde_drop_corner };
void set_mutation(Mutation m);
Mutation current_mutation();

// nabla: H~_mu -> (-1)^{|mu|} T_mu H~_mu (this paper's sign convention).
SymFunc nabla(MacBasis& B, const SymFunc& f, bool inverse = false);

// Delta operators: f[B_mu] (primed: f[B_mu - 1]) acting diagonally.
SymFunc delta_op(MacBasis& B, const SymFunc& f, const SymFunc& F,
                 bool primed = false, bool inverse = false);

// Pi: H~_mu -> Pi_mu H~_mu; the inverse requires a zero constant term.
SymFunc pi_op(MacBasis& B, const SymFunc& F, bool inverse = false);

// Theta operator: 0 / f*F / Pi f* Pi^{-1} F by homogeneous components.
SymFunc theta(MacBasis& B, const SymFunc& f, const SymFunc& F);
// Theta_{f_1} Theta_{f_2} ... applied at once (single Pi conjugation when
// every factor and component has positive degree).
SymFunc theta_chain(MacBasis& B, const std::vector<SymFunc>& fs, const SymFunc& F);

// Delta_v = sum (-v)^n Delta_{e_n} and its inverse sum v^n Delta_{h_n},
// taken for an arbitrary monomial m in the coefficient field: H~_mu is
// scaled by prod_{c in mu} (1 - m q^{a'} t^{l'})^{+-1}, which is the exact
// rational form of the series.
SymFunc delta_v_series(MacBasis& B, const RatQT& monomial, const SymFunc& F,
                       bool inverse = false);

// coefficient of z^k in Theta~(z,v) = Delta_v P_{-z/M} Delta_v^{-1}
// (inverse: in Delta_v P_{z/M} Delta_v^{-1}), applied to F; v names the
// adjoined field variable.
SymFunc theta_tilde(MacBasis& B, const SymFunc& F, int z_power,
                    bool inverse = false, const std::string& v = "v");

// substitute v = 1 in every coefficient (after normalization the (1-v)
// factors must have cancelled; a residual pole throws).
SymFunc subst_v1(const SymFunc& f, const std::string& v = "v");
// substitute t = 0
SymFunc subst_t0(const SymFunc& f);

// named linear operator built from composable atoms
class LinearOp {
public:
    using Fn = std::function<SymFunc(MacBasis&, const SymFunc&)>;

    LinearOp(std::string name, int degree_shift, Fn fn)
        : name_(std::move(name)), shift_(degree_shift), fn_(std::move(fn)) {}

    static LinearOp identity();
    static LinearOp nabla_op(bool inverse = false);
    static LinearOp delta(const SymFunc& f, bool primed = false, bool inverse = false,
                          const std::string& label = "");
    static LinearOp pi(bool inverse = false);
    static LinearOp theta_(const SymFunc& f, const std::string& label = "");
    static LinearOp mult(const SymFunc& f, const std::string& label = "");
    static LinearOp skew(const SymFunc& f, const std::string& label = "");
    static LinearOp pleth_conj(const std::string& which);  // "omega" or "omegabar"
    static LinearOp scalar(const RatQT& c);

    const std::string& name() const { return name_; }
    int degree_shift() const { return shift_; }
    SymFunc operator()(MacBasis& B, const SymFunc& F) const { return fn_(B, F); }

    // composition: (a * b)(F) = a(b(F))
    LinearOp operator*(const LinearOp& o) const;

private:
    std::string name_;
    int shift_;
    Fn fn_;
};

// Atom grammar for operator words (used by op_from_word and the CLI):
//   nabla, nabla^-1, delta(f), delta^-1(f), delta'(f), pi, pi^-1,
//   theta(f), mult(f), skew(f), omega, omegabar, scalar(c)
// where f is a basis element like e2, h[2,1], p3, s[3,1], m[2], or H[2,1],
// and composition is juxtaposition or '.'.
LinearOp op_from_word(const std::string& word, const VarListPtr& vars);

// Expression = operator word applied to an operand (last token), e.g.
// "theta(e1) e1" or "nabla H[2,1]".
SymFunc eval_expression(MacBasis& B, const std::string& expr, const VarListPtr& vars);

}  // namespace qtsym
