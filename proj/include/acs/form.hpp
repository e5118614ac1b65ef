#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acs/coeff.hpp"
#include "acs/indices.hpp"

namespace acs {

/// A wedge word of distinct generators in canonical order (strictly
/// increasing: unbarred 1..m, then barred 1..m).
struct FormMonomial {
    std::vector<GeneratorIndex> gens;

    int degree() const { return static_cast<int>(gens.size()); }
    /// (#unbarred, #barred)
    std::pair<int, int> bidegree() const;
    bool operator<(const FormMonomial& o) const;
    bool operator==(const FormMonomial& o) const { return gens == o.gens; }
};

/// Sorts `gens` into canonical order.  Returns the permutation sign, or
/// nullopt when a generator repeats (the wedge vanishes).
std::optional<int> sort_with_sign(std::vector<GeneratorIndex>& gens);

/// How generator letters render: {"p","c"} prints p1/c1 (the undeformed
/// coframe), {"w","cw"} prints w1/cw1 (a deformed one).
struct GeneratorLetters {
    std::string unbarred = "p";
    std::string barred = "c";
};

inline const GeneratorLetters kPhiLetters{"p", "c"};
inline const GeneratorLetters kOmegaLetters{"w", "cw"};

std::string generator_str(GeneratorIndex g, const GeneratorLetters& letters = kPhiLetters);

/// An element of the complexified exterior algebra on m generators and
/// their conjugates, with coefficients in the formal function ring.
/// Canonical form: monomials sorted, zero coefficients dropped.
class Form {
public:
    explicit Form(int m) : m_(m) {}

    static Form zero(int m) { return Form(m); }
    static Form scalar(int m, const Coeff& c);
    static Form generator(int m, GeneratorIndex g);
    /// phi^{g1} ^ phi^{g2} ^ ... for distinct generators, with sign.
    static Form monomial(int m, std::vector<GeneratorIndex> gens, const Coeff& c = Coeff(1));
    /// The top unbarred form phi^{1...m}.
    static Form top_unbarred(int m);
    /// phi^{1...j-1} ^ phi^{j+1...m}.
    static Form top_unbarred_omitting(int m, int j);

    int ambient() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    /// Degree when homogeneous; nullopt for 0 or mixed degrees.
    std::optional<int> homogeneous_degree() const;

    const std::map<FormMonomial, Coeff>& terms() const { return terms_; }
    Coeff coefficient(const FormMonomial& mono) const;

    Form operator-() const;
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend bool operator==(const Form& a, const Form& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }

    Form scaled(const Coeff& c) const;
    friend Form operator*(const Coeff& c, const Form& f) { return f.scaled(c); }

    /// Complex conjugation: conjugates coefficients and flips every
    /// generator bar, re-sorting with the permutation sign.
    Form conj() const;

    /// Projection onto bidegree (p, q); the projectors over all (p, q)
    /// with p + q = degree resolve the identity.
    Form project(int p, int q) const;

    /// Replaces each generator by a form and extends multiplicatively;
    /// used for coframe changes.  The image ambient dimension is taken
    /// from the map's values.
    Form substitute_generators(const std::function<const Form&(GeneratorIndex)>& image) const;

    void add_term(FormMonomial mono, const Coeff& c);

    std::string str(const GeneratorLetters& letters = kPhiLetters) const;

private:
    int m_;
    std::map<FormMonomial, Coeff> terms_;
};

/// Exterior product.  Throws DimMismatch when ambient dimensions differ.
Form wedge(const Form& a, const Form& b);

/// Derivative 1-form of a coefficient in the given frame:
/// sum_p  d_p(c) phi^p + sum_p d_{p bar}(c) phi^{p bar}.
Form coefficient_differential(int m, const Coeff& c, FrameTag frame);

/// Evaluates a 2-form on a pair of dual-frame directions.
Coeff evaluate_two_form(const Form& f, GeneratorIndex x, GeneratorIndex y);

} // namespace acs
