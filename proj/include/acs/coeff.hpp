#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "acs/indices.hpp"
#include "acs/scalar.hpp"

namespace acs {

/// A formal smooth function f or its conjugate.
struct FuncSymbol {
    std::string name;
    bool conjugated = false;

    FuncSymbol conj() const { return {name, !conjugated}; }
    friend auto operator<=>(const FuncSymbol&, const FuncSymbol&) = default;

    std::string str() const { return conjugated ? "~" + name : name; }
};

/// First derivative of a function symbol along one frame direction,
/// e.g. psi_2(f) or xi_c1(~f).  Only first derivatives exist in the
/// calculus; differentiating one of these again is an error.
struct DerivSymbol {
    FuncSymbol base;
    FrameTag frame = FrameTag::Xi;
    GeneratorIndex direction;

    /// conj(psi_p(f)) = psi_{p bar}(~f): bar flips on both the function
    /// and the direction, the frame tag is unchanged.
    DerivSymbol conj() const { return {base.conj(), frame, direction.conj()}; }
    friend auto operator<=>(const DerivSymbol&, const DerivSymbol&) = default;

    std::string str() const;
};

using Atom = std::variant<FuncSymbol, DerivSymbol>;

/// Fixed total order on atoms: lexicographic on
/// (symbol name, symbol bar flag, frame tag, frame direction), with plain
/// function symbols ordered before any of their derivatives.
bool atom_less(const Atom& a, const Atom& b);
bool atom_equal(const Atom& a, const Atom& b);
std::string atom_str(const Atom& a);
Atom atom_conj(const Atom& a);

/// A commutative word of atoms, kept sorted (repetitions allowed).
struct CoeffMonomial {
    std::vector<Atom> atoms;

    static CoeffMonomial unit() { return {}; }
    bool is_unit() const { return atoms.empty(); }
    CoeffMonomial merged(const CoeffMonomial& o) const;
    CoeffMonomial conj() const;
    bool operator<(const CoeffMonomial& o) const;
    bool operator==(const CoeffMonomial& o) const;

    std::string str() const;
};

/// Element of the coefficient ring: a Gaussian-rational polynomial in
/// function symbols and their first derivatives, kept in canonical form
/// (terms sorted, zero coefficients dropped).  Two elements are equal
/// exactly when their canonical forms coincide.
class Coeff {
public:
    Coeff() = default;
    Coeff(long v) : Coeff(Scalar(v)) {}
    Coeff(const Scalar& s);

    static Coeff symbol(const FuncSymbol& f);
    static Coeff symbol(const std::string& name) { return symbol(FuncSymbol{name, false}); }
    static Coeff deriv(const DerivSymbol& d);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The scalar value of a constant element; requires is_constant().
    Scalar constant_value() const;

    Coeff operator-() const;
    Coeff& operator+=(const Coeff& o);
    Coeff& operator-=(const Coeff& o);
    Coeff operator*(const Coeff& o) const;

    friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
    friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
    friend bool operator==(const Coeff& a, const Coeff& b) { return a.terms_ == b.terms_; }

    Coeff conj() const;

    /// Simultaneous substitution of atoms by ring elements: every atom is
    /// looked up in the original rule set only, so rules never act on
    /// each other's output.
    Coeff substitute(const std::map<Atom, Coeff, bool (*)(const Atom&, const Atom&)>& rules) const;

    /// Formal first derivative along a frame direction, by the Leibniz
    /// rule.  Throws SecondDerivative when a derivative atom is present.
    Coeff differentiate(GeneratorIndex direction, FrameTag frame) const;

    /// True when some atom is a derivative symbol.
    bool has_derivatives() const;

    const std::map<CoeffMonomial, Scalar>& terms() const { return terms_; }

    std::string str() const;
    /// Rendering suitable to the left of "*": parenthesized when the
    /// element is a sum or has a mixed real/imaginary scalar.
    std::string str_factor() const;

private:
    void add_term(const CoeffMonomial& mono, const Scalar& s);

    std::map<CoeffMonomial, Scalar> terms_;
};

/// Convenience substitution-rule container with the atom order baked in.
using SubstitutionRules = std::map<Atom, Coeff, bool (*)(const Atom&, const Atom&)>;
SubstitutionRules make_rules();

} // namespace acs
