#pragma once

#include <optional>
#include <vector>

#include "acs/form.hpp"

namespace acs {

/// Structure equations of a Lie algebra with an almost complex structure,
/// given through the differentials of a (1,0)-coframe phi^1..phi^m:
///
///   d phi^j = sum_{p<q} C^j_{pq} phi^{pq} + sum_{p,q} C^j_{p qbar} phi^{p qbar}
///             + sum_{p<q} C^j_{pbar qbar} phi^{pbar qbar},
///
/// all constants exact Gaussian rationals.  d phi^{jbar} = conj(d phi^j).
struct StructureEquations {
    int m = 0;
    std::vector<Form> d_phi; // d_phi[j-1] = d phi^j, a constant 2-form

    /// Validates shape only (degree-2, constant coefficients); the Jacobi
    /// identity is checked separately so that corrupted tables can be
    /// built and detected in tests.
    static StructureEquations make(int m, std::vector<Form> d_phi);

    /// d of a single generator; barred generators go through conjugation.
    Form d_generator(GeneratorIndex g) const;
};

/// Extends d to arbitrary forms with function coefficients:
/// antiderivation on generators, Leibniz on coefficients with derivative
/// symbols in the xi frame.  Throws SecondDerivative when a coefficient
/// already carries derivative symbols.
Form d_extend(const StructureEquations& s, const Form& a);

/// d(d phi^j) == 0 for every generator.
bool jacobi_check(const StructureEquations& s);
/// Index j of the first generator with d(d phi^j) != 0, for diagnostics.
std::optional<int> jacobi_failure(const StructureEquations& s);

/// Lie brackets of the complexified dual frame xi_1..xi_m, xi_1bar..,
/// recovered from the sign convention  d alpha(X, Y) = -alpha([X, Y]).
/// Directions are indexed by GeneratorIndex.
class BracketTable {
public:
    BracketTable(int m, std::vector<Coeff> table);

    int m() const { return m_; }
    /// Component of [x, y] along frame direction z (a structure constant).
    const Coeff& component(GeneratorIndex x, GeneratorIndex y, GeneratorIndex z) const;
    /// tr ad_x over the full complexified basis.
    Coeff adjoint_trace(GeneratorIndex x) const;
    /// sum over cyclic permutations of [[x,y],z]; zero when d^2 = 0.
    bool jacobi_identity_holds() const;

private:
    std::size_t flat(GeneratorIndex g) const;

    int m_;
    std::vector<Coeff> table_; // [x][y][z], dense (2m)^3
};

/// Builds the bracket table from the structure equations and asserts
/// antisymmetry and the reality condition conj [x,y] = [xbar, ybar].
BracketTable brackets_from_d(const StructureEquations& s);

/// tr ad_x = 0 for every complexified frame direction.
bool unimodularity_check(const StructureEquations& s);

/// No (0,2) component in any d phi^j (the structure is integrable, i.e.
/// the coframe is holomorphic for an honest complex structure).
bool integrability_check(const StructureEquations& s);

/// The (0,1) torsion form gamma with  dbar(phi^{1..m}) = gamma ^ phi^{1..m}.
/// Computed two independent ways -- the closed formula
/// gamma_qbar = -sum_j C^j_{j qbar} and the extended differential followed
/// by (m,1) projection and factoring -- and cross-asserted; disagreement
/// raises InternalInconsistency.
Form gamma_of(const StructureEquations& s);

/// gamma via the closed formula only (one leg of the dual path).
Form gamma_closed_formula(const StructureEquations& s);
/// gamma via d_extend + (m,1) projection + factoring (the other leg).
Form gamma_via_differential(const StructureEquations& s);

/// True iff gamma vanishes (the top form phi^{1..m} is dbar-closed).
bool pseudoholomorphic_check(const StructureEquations& s);

/// Given an (m,1)-form T, returns the (0,1)-form g with T = g ^ phi^{1..m},
/// asserting the factorization exactly.
Form factor_out_top(const Form& t);

/// Trace-type combinations of the (2,0) constants, one value for each
/// j = 2..m:  sum_{2<=q<j} C^q_{qj} - sum_{j<q<=m} C^q_{jq}.
/// These vanish for unimodular algebras with a splitting coframe.
std::vector<Scalar> holomorphic_adjoint_traces(const StructureEquations& s);

} // namespace acs
