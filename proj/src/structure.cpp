#include "acs/structure.hpp"

#include "acs/errors.hpp"

namespace acs {

StructureEquations StructureEquations::make(int m, std::vector<Form> d_phi) {
    if (m < 1) throw DimMismatch("ambient dimension must be >= 1");
    if (static_cast<int>(d_phi.size()) != m)
        throw DimMismatch("expected " + std::to_string(m) + " coframe differentials");
    for (const auto& f : d_phi) {
        if (f.ambient() != m)
            throw DimMismatch("coframe differential over wrong ambient dimension");
        for (const auto& [mono, c] : f.terms()) {
            if (mono.degree() != 2)
                throw DimMismatch("coframe differential has a non-2-form term");
            if (!c.is_constant())
                throw DimMismatch("structure constants must be scalar");
        }
    }
    return StructureEquations{m, std::move(d_phi)};
}

Form StructureEquations::d_generator(GeneratorIndex g) const {
    const Form& d = d_phi[static_cast<std::size_t>(g.index - 1)];
    return g.barred ? d.conj() : d;
}

Form d_extend(const StructureEquations& s, const Form& a) {
    if (a.ambient() != s.m) throw DimMismatch("form over wrong ambient dimension");
    Form result(s.m);
    for (const auto& [mono, c] : a.terms()) {
        if (c.has_derivatives())
            throw SecondDerivative(
                "d on a coefficient that already carries derivative symbols");
        // d(c phi^M) = dc ^ phi^M + c d(phi^M), the latter by the
        // antiderivation rule.
        Form base = Form::monomial(s.m, mono.gens);
        result += wedge(coefficient_differential(s.m, c, FrameTag::Xi), base);
        for (std::size_t t = 0; t < mono.gens.size(); ++t) {
            std::vector<GeneratorIndex> prefix(mono.gens.begin(),
                                               mono.gens.begin() + static_cast<long>(t));
            std::vector<GeneratorIndex> suffix(mono.gens.begin() + static_cast<long>(t) + 1,
                                               mono.gens.end());
            Form piece = wedge(wedge(Form::monomial(s.m, std::move(prefix)),
                                     s.d_generator(mono.gens[t])),
                               Form::monomial(s.m, std::move(suffix)));
            result += piece.scaled(c);
        }
    }
    return result;
}

bool jacobi_check(const StructureEquations& s) { return !jacobi_failure(s).has_value(); }

std::optional<int> jacobi_failure(const StructureEquations& s) {
    for (int j = 1; j <= s.m; ++j)
        if (!d_extend(s, s.d_phi[static_cast<std::size_t>(j - 1)]).is_zero()) return j;
    return std::nullopt;
}

BracketTable::BracketTable(int m, std::vector<Coeff> table) : m_(m), table_(std::move(table)) {
    if (table_.size() != static_cast<std::size_t>(8 * m * m * m))
        throw InternalInconsistency("bracket table has wrong size");
}

std::size_t BracketTable::flat(GeneratorIndex g) const {
    return static_cast<std::size_t>(g.index - 1 + (g.barred ? m_ : 0));
}

const Coeff& BracketTable::component(GeneratorIndex x, GeneratorIndex y,
                                     GeneratorIndex z) const {
    std::size_t n = static_cast<std::size_t>(2 * m_);
    return table_[(flat(x) * n + flat(y)) * n + flat(z)];
}

namespace {

std::vector<GeneratorIndex> all_directions(int m) {
    std::vector<GeneratorIndex> dirs;
    for (int j = 1; j <= m; ++j) dirs.push_back(gen(j));
    for (int j = 1; j <= m; ++j) dirs.push_back(gen_bar(j));
    return dirs;
}

} // namespace

Coeff BracketTable::adjoint_trace(GeneratorIndex x) const {
    Coeff tr;
    for (auto z : all_directions(m_)) tr += component(x, z, z);
    return tr;
}

bool BracketTable::jacobi_identity_holds() const {
    auto dirs = all_directions(m_);
    for (auto x : dirs)
        for (auto y : dirs)
            for (auto z : dirs) {
                // [[x,y],z] + [[y,z],x] + [[z,x],y], component along w.
                for (auto w : dirs) {
                    Coeff total;
                    for (auto u : dirs) {
                        total += component(x, y, u) * component(u, z, w);
                        total += component(y, z, u) * component(u, x, w);
                        total += component(z, x, u) * component(u, y, w);
                    }
                    if (!total.is_zero()) return false;
                }
            }
    return true;
}

BracketTable brackets_from_d(const StructureEquations& s) {
    auto dirs = all_directions(s.m);
    std::size_t n = dirs.size();
    std::vector<Coeff> table(n * n * n);
    for (std::size_t xi = 0; xi < n; ++xi) {
        for (std::size_t yi = 0; yi < n; ++yi) {
            for (std::size_t zi = 0; zi < n; ++zi) {
                // alpha^z([x, y]) = -d(alpha^z)(x, y)
                Coeff v = -evaluate_two_form(s.d_generator(dirs[zi]), dirs[xi], dirs[yi]);
                table[(xi * n + yi) * n + zi] = v;
            }
        }
    }
    BracketTable bt(s.m, std::move(table));
    for (auto x : dirs)
        for (auto y : dirs)
            for (auto z : dirs) {
                if (!(bt.component(x, y, z) + bt.component(y, x, z)).is_zero())
                    throw InternalInconsistency("bracket table is not antisymmetric");
                if (!(bt.component(x.conj(), y.conj(), z.conj()) -
                      bt.component(x, y, z).conj())
                         .is_zero())
                    throw InternalInconsistency("bracket table violates the reality condition");
            }
    return bt;
}

bool unimodularity_check(const StructureEquations& s) {
    BracketTable bt = brackets_from_d(s);
    for (auto x : all_directions(s.m))
        if (!bt.adjoint_trace(x).is_zero()) return false;
    return true;
}

bool integrability_check(const StructureEquations& s) {
    for (const auto& d : s.d_phi)
        if (!d.project(0, 2).is_zero()) return false;
    return true;
}

Form gamma_closed_formula(const StructureEquations& s) {
    Form gamma(s.m);
    for (int q = 1; q <= s.m; ++q) {
        Coeff sum;
        for (int j = 1; j <= s.m; ++j)
            sum += s.d_phi[static_cast<std::size_t>(j - 1)].coefficient(
                FormMonomial{{gen(j), gen_bar(q)}});
        if (!sum.is_zero()) gamma.add_term(FormMonomial{{gen_bar(q)}}, -sum);
    }
    return gamma;
}

Form factor_out_top(const Form& t) {
    int m = t.ambient();
    Form top = Form::top_unbarred(m);
    Form g(m);
    // phi^{qbar} ^ phi^{1..m} = (-1)^m phi^{1..m,qbar} in canonical order.
    int sign = m % 2 == 0 ? 1 : -1;
    for (int q = 1; q <= m; ++q) {
        std::vector<GeneratorIndex> gens;
        for (int j = 1; j <= m; ++j) gens.push_back(gen(j));
        gens.push_back(gen_bar(q));
        Coeff c = t.coefficient(FormMonomial{std::move(gens)});
        if (!c.is_zero())
            g.add_term(FormMonomial{{gen_bar(q)}}, sign == 1 ? c : -c);
    }
    if (!(wedge(g, top) == t))
        throw InternalInconsistency(
            "form does not factor through the top form: " + t.str());
    return g;
}

Form gamma_via_differential(const StructureEquations& s) {
    Form top = Form::top_unbarred(s.m);
    Form dbar_top = d_extend(s, top).project(s.m, 1);
    return factor_out_top(dbar_top);
}

Form gamma_of(const StructureEquations& s) {
    Form closed = gamma_closed_formula(s);
    Form derived = gamma_via_differential(s);
    if (!(closed == derived))
        throw InternalInconsistency("torsion form mismatch: closed formula " + closed.str() +
                                    " vs differential " + derived.str());
    return closed;
}

bool pseudoholomorphic_check(const StructureEquations& s) { return gamma_of(s).is_zero(); }

std::vector<Scalar> holomorphic_adjoint_traces(const StructureEquations& s) {
    std::vector<Scalar> traces;
    for (int j = 2; j <= s.m; ++j) {
        Coeff a;
        for (int q = 2; q < j; ++q)
            a += s.d_phi[static_cast<std::size_t>(q - 1)].coefficient(
                FormMonomial{{gen(q), gen(j)}});
        for (int q = j + 1; q <= s.m; ++q)
            a -= s.d_phi[static_cast<std::size_t>(q - 1)].coefficient(
                FormMonomial{{gen(j), gen(q)}});
        traces.push_back(a.constant_value());
    }
    return traces;
}

} // namespace acs
