#include "acs/catalog.hpp"

namespace acs {

namespace {

Form two_form(int m, std::initializer_list<std::pair<Scalar, std::pair<GeneratorIndex, GeneratorIndex>>> terms) {
    Form f(m);
    for (const auto& [s, gens] : terms)
        f += Form::monomial(m, {gens.first, gens.second}, Coeff(s));
    return f;
}

StructureEquations torus(int m) {
    return StructureEquations::make(m, std::vector<Form>(static_cast<std::size_t>(m), Form(m)));
}

const Scalar kHalf = Scalar::rational(1, 2);
const Scalar kQuarter = Scalar::rational(1, 4);
const Scalar kHalfI = Scalar::imaginary(1, 2);

CatalogEntry make_torus(const std::string& name, int m) {
    CatalogEntry e;
    e.name = name;
    e.m = m;
    e.k = 1;
    e.equations = torus(m);
    e.provenance = "flat torus, all differentials zero";
    e.expected.deformed_gamma_minus = "-psi_" + std::to_string(m) + "(f1)*cw1";
    return e;
}

CatalogEntry make_fls96_j1() {
    CatalogEntry e;
    e.name = "fls96_j1";
    e.m = 3;
    e.k = 1;
    // d phi^2 = -1/2 (phi^{1 2bar} + phi^{1bar 2bar})
    // d phi^3 = -1/2 (phi^{1 3bar} + phi^{1bar 3bar}) + i/2 (phi^{12} - phi^{1bar 2})
    std::vector<Form> d;
    d.push_back(Form(3));
    d.push_back(two_form(3, {{-kHalf, {gen(1), gen_bar(2)}}, {-kHalf, {gen_bar(1), gen_bar(2)}}}));
    d.push_back(two_form(3, {{-kHalf, {gen(1), gen_bar(3)}},
                             {-kHalf, {gen_bar(1), gen_bar(3)}},
                             {kHalfI, {gen(1), gen(2)}},
                             {-kHalfI, {gen_bar(1), gen(2)}}}));
    e.equations = StructureEquations::make(3, std::move(d));
    e.provenance =
        "Fernandez-de Leon-Saralegui six-dimensional solvmanifold, first compatible coframe";
    e.expected.integrable = false;
    e.expected.deformed_gamma_minus = "-psi_3(f1)*cw1";
    return e;
}

CatalogEntry make_fls96_j2() {
    CatalogEntry e;
    e.name = "fls96_j2";
    e.m = 3;
    e.k = 1;
    // d phi^2 = -1/4 (phi^{12} + phi^{1 2bar} + 3 phi^{1bar 2} - phi^{1bar 2bar})
    // d phi^3 = 1/4 (3 phi^{13} - phi^{1 3bar} + phi^{1bar 3} + phi^{1bar 3bar})
    // The (0,2) coefficient of d phi^3 is +1/4: that is what the real
    // structure equations give, and the only sign for which the Jacobi
    // identity holds.
    std::vector<Form> d;
    d.push_back(Form(3));
    d.push_back(two_form(3, {{-kQuarter, {gen(1), gen(2)}},
                             {-kQuarter, {gen(1), gen_bar(2)}},
                             {Scalar::rational(-3, 4), {gen_bar(1), gen(2)}},
                             {kQuarter, {gen_bar(1), gen_bar(2)}}}));
    d.push_back(two_form(3, {{Scalar::rational(3, 4), {gen(1), gen(3)}},
                             {-kQuarter, {gen(1), gen_bar(3)}},
                             {kQuarter, {gen_bar(1), gen(3)}},
                             {kQuarter, {gen_bar(1), gen_bar(3)}}}));
    e.equations = StructureEquations::make(3, std::move(d));
    e.provenance =
        "Fernandez-de Leon-Saralegui six-dimensional solvmanifold, second compatible coframe";
    e.expected.integrable = false;
    e.expected.pseudoholomorphic = false;
    e.expected.gamma = "-1/2*c1";
    e.expected.witness_kind = "base_mode";
    e.expected.witness_mode = {0, -1};
    // Not pseudoholomorphic: the deformation constructions do not apply.
    e.expected.deformed_gamma_minus = "";
    return e;
}

CatalogEntry make_solv8() {
    CatalogEntry e;
    e.name = "solv8";
    e.m = 4;
    e.k = 1;
    std::vector<Form> d;
    d.push_back(Form(4));
    d.push_back(two_form(4, {{Scalar(1), {gen(1), gen(2)}}}));
    d.push_back(two_form(4, {{Scalar(-1), {gen(1), gen(3)}}}));
    d.push_back(two_form(4, {{Scalar(-1), {gen(2), gen(3)}}}));
    e.equations = StructureEquations::make(4, std::move(d));
    e.provenance = "eight-dimensional completely solvable example, torus fiber over a two-torus base";
    e.expected.deformed_gamma_minus = "-psi_4(f1)*cw1";
    return e;
}

CatalogEntry make_iwasawa() {
    CatalogEntry e;
    e.name = "iwasawa";
    e.m = 3;
    e.k = 1;
    std::vector<Form> d;
    d.push_back(Form(3));
    d.push_back(Form(3));
    d.push_back(two_form(3, {{Scalar(-1), {gen(1), gen(2)}}}));
    e.equations = StructureEquations::make(3, std::move(d));
    e.provenance = "Iwasawa manifold (complex Heisenberg group); standard equations, engine-validated";
    e.expected.deformed_gamma_minus = "-psi_3(f1)*cw1";
    return e;
}

CatalogEntry make_nakamura_hp() {
    CatalogEntry e;
    e.name = "nakamura_hp";
    e.m = 3;
    e.k = 1;
    std::vector<Form> d;
    d.push_back(Form(3));
    d.push_back(two_form(3, {{Scalar(-1), {gen(1), gen(2)}}}));
    d.push_back(two_form(3, {{Scalar(1), {gen(1), gen(3)}}}));
    e.equations = StructureEquations::make(3, std::move(d));
    e.provenance =
        "Nakamura manifold, holomorphically parallelizable family; standard equations, engine-validated";
    e.expected.deformed_gamma_minus = "-psi_3(f1)*cw1";
    return e;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;
    entries.push_back(make_torus("torus_4", 2));
    entries.push_back(make_torus("torus_6", 3));
    entries.push_back(make_torus("torus_8", 4));
    entries.push_back(make_fls96_j1());
    entries.push_back(make_fls96_j2());
    entries.push_back(make_solv8());
    entries.push_back(make_iwasawa());
    entries.push_back(make_nakamura_hp());
    return entries;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

} // namespace acs
