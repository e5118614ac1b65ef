#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "acs/errors.hpp"
#include "acs/form.hpp"

using namespace acs;

namespace {

// Independent parity oracle: sign of the permutation sorting `gens`,
// computed by counting inversions pairwise (no shared code with the
// insertion sort inside the library).
int inversion_sign(const std::vector<GeneratorIndex>& gens) {
    int inversions = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (gens[j] < gens[i]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

bool has_duplicate(std::vector<GeneratorIndex> gens) {
    std::sort(gens.begin(), gens.end());
    return std::adjacent_find(gens.begin(), gens.end()) != gens.end();
}

Form random_form(std::mt19937& rng, int m, int max_terms = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> degree(0, 2 * m);
    std::uniform_int_distribution<int> index(1, m);
    std::uniform_int_distribution<int> coin(0, 1);
    static const std::vector<Scalar> scalars = {
        Scalar(1), Scalar(-1), Scalar::rational(1, 2), Scalar::rational(-1, 2),
        Scalar::imaginary(1, 2), Scalar(2), Scalar::i(),
    };
    std::uniform_int_distribution<std::size_t> sc(0, scalars.size() - 1);
    Form f(m);
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        int deg = degree(rng);
        std::vector<GeneratorIndex> gens;
        for (int d = 0; d < deg; ++d) gens.push_back({index(rng), coin(rng) == 1});
        if (has_duplicate(gens)) continue;
        f += Form::monomial(m, std::move(gens), Coeff(scalars[sc(rng)]));
    }
    return f;
}

} // namespace

TEST_CASE("wedge matches hand values and the parity oracle") {
    int m = 3;
    Form p1 = Form::generator(m, gen(1));
    Form p2 = Form::generator(m, gen(2));

    CHECK(wedge(p1, p2) == Form::monomial(m, {gen(1), gen(2)}));
    CHECK(wedge(p2, p1) == -Form::monomial(m, {gen(1), gen(2)}));
    CHECK(wedge(p1, p1).is_zero());

    // phi^{1bar} ^ phi^{123}: three transpositions move the barred
    // generator to the end.
    Form lhs = wedge(Form::generator(m, gen_bar(1)), Form::top_unbarred(m));
    std::vector<GeneratorIndex> word = {gen_bar(1), gen(1), gen(2), gen(3)};
    CHECK(inversion_sign(word) == -1);
    CHECK(lhs == -Form::monomial(m, {gen(1), gen(2), gen(3), gen_bar(1)}));

    CHECK_THROWS_AS(wedge(Form::generator(2, gen(1)), Form::generator(3, gen(1))),
                    DimMismatch);
}

TEST_CASE("random wedge words agree with the inversion-count oracle") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> mdist(1, 4);
    std::uniform_int_distribution<int> len(0, 4);
    int done = 0;
    while (done < 1000) {
        int m = mdist(rng);
        std::uniform_int_distribution<int> index(1, m);
        std::uniform_int_distribution<int> coin(0, 1);
        std::vector<GeneratorIndex> word;
        int n = len(rng);
        for (int j = 0; j < n; ++j) word.push_back({index(rng), coin(rng) == 1});

        Form built(m);
        built.add_term(FormMonomial{}, Coeff(1));
        for (auto g : word) built = wedge(built, Form::generator(m, g));

        if (has_duplicate(word)) {
            CHECK(built.is_zero());
        } else {
            std::vector<GeneratorIndex> sorted = word;
            std::sort(sorted.begin(), sorted.end());
            Form expected(m);
            expected.add_term(FormMonomial{sorted}, Coeff(Scalar(inversion_sign(word))));
            CHECK(built == expected);
        }
        ++done;
    }
}

TEST_CASE("exterior algebra laws on random forms") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> mdist(1, 4);
    for (int n = 0; n < 400; ++n) {
        int m = mdist(rng);
        Form a = random_form(rng, m), b = random_form(rng, m), c = random_form(rng, m);
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
        CHECK(wedge(a + b, c) == wedge(a, c) + wedge(b, c));
        // Graded commutativity for homogeneous factors.
        if (auto da = a.homogeneous_degree()) {
            if (auto db = b.homogeneous_degree()) {
                Form ba = wedge(b, a);
                CHECK(wedge(a, b) == ((*da * *db) % 2 == 0 ? ba : -ba));
            }
        }
        CHECK(wedge(a, b).conj() == wedge(a.conj(), b.conj()));
        CHECK(a.conj().conj() == a);
    }
}

TEST_CASE("bidegree projectors are idempotent and resolve the identity") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> mdist(1, 4);
    for (int n = 0; n < 300; ++n) {
        int m = mdist(rng);
        Form a = random_form(rng, m, 4);
        Form sum(m);
        for (int p = 0; p <= m; ++p) {
            for (int q = 0; q <= m; ++q) {
                Form piece = a.project(p, q);
                CHECK(piece.project(p, q) == piece);
                if (p != q) CHECK(piece.project(q, p).is_zero());
                sum += piece;
            }
        }
        CHECK(sum == a);
    }
}

TEST_CASE("conjugation flips bidegree") {
    int m = 3;
    Form f = Form::monomial(m, {gen(1), gen_bar(2)}, Coeff(Scalar::i())) +
             Form::monomial(m, {gen(1), gen(2)}, Coeff(2));
    CHECK(f.project(1, 1).conj() == f.conj().project(1, 1));
    CHECK(f.project(2, 0).conj() == f.conj().project(0, 2));
}

TEST_CASE("rendering matches the surface syntax") {
    int m = 3;
    Form f = Form::monomial(m, {gen(1), gen_bar(2)}, Coeff(Scalar::rational(-1, 2)));
    CHECK(f.str() == "-1/2*p1^c2");
    CHECK(Form(m).str() == "0");
    CHECK(Form::top_unbarred(m).str() == "p1^p2^p3");
    Form g = Form::monomial(m, {gen_bar(1)},
                            -Coeff::deriv(DerivSymbol{FuncSymbol{"f1", false},
                                                      FrameTag::Psi, gen(3)}));
    CHECK(g.str(kOmegaLetters) == "-psi_3(f1)*cw1");
}
