#pragma once

#include <random>
#include <vector>

#include "acs/structure.hpp"

namespace acs::testsupport {

inline const std::vector<Scalar>& structure_constant_pool() {
    static const std::vector<Scalar> pool = {
        Scalar(1),  Scalar(-1), Scalar::rational(1, 2), Scalar::rational(-1, 2),
        Scalar::imaginary(1, 2), Scalar::imaginary(-1, 2),
    };
    return pool;
}

/// One random candidate table: m in {2,3,4}, up to three sparse terms
/// drawn from the small Gaussian-rational pool.  Not necessarily Jacobi.
inline StructureEquations random_candidate(std::mt19937& rng) {
    std::uniform_int_distribution<int> mdist(2, 4);
    int m = mdist(rng);
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<int> jdist(1, m);
    std::uniform_int_distribution<int> kind(0, 2);
    const auto& pool = structure_constant_pool();
    std::uniform_int_distribution<std::size_t> cdist(0, pool.size() - 1);

    std::vector<Form> d(static_cast<std::size_t>(m), Form(m));
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        int j = jdist(rng);
        int p = jdist(rng), q = jdist(rng);
        GeneratorIndex a, b;
        switch (kind(rng)) {
        case 0: // (2,0)
            if (p == q) continue;
            a = gen(std::min(p, q));
            b = gen(std::max(p, q));
            break;
        case 1: // (1,1)
            a = gen(p);
            b = gen_bar(q);
            break;
        default: // (0,2)
            if (p == q) continue;
            a = gen_bar(std::min(p, q));
            b = gen_bar(std::max(p, q));
            break;
        }
        d[static_cast<std::size_t>(j - 1)] +=
            Form::monomial(m, {a, b}, Coeff(pool[cdist(rng)]));
    }
    return StructureEquations::make(m, std::move(d));
}

/// Rejection-samples a structure satisfying the Jacobi identity.
inline StructureEquations random_jacobi_structure(std::mt19937& rng) {
    for (;;) {
        StructureEquations s = random_candidate(rng);
        if (jacobi_check(s)) return s;
    }
}

} // namespace acs::testsupport
