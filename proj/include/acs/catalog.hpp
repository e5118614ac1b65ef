#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acs/structure.hpp"

namespace acs {

/// Values an entry is expected to reproduce; verify-all recomputes
/// everything and compares.
struct ExpectedResults {
    bool jacobi = true;
    bool unimodular = true;
    bool integrable = true;
    bool pseudoholomorphic = true;
    std::string gamma = "0"; // rendered over p/c letters
    std::string verdict = "zero";
    long l0 = 1;
    std::string witness_kind = "invariant_top_form";
    std::vector<long> witness_mode;         // for base-mode witnesses
    /// Residual of the kappa-zero deformation under its constraints
    /// (only meaningful when the entry satisfies that construction's
    /// hypotheses); rendered over w/cw letters.
    std::string deformed_gamma_zero = "0";
    /// Residual of the kappa-minus-infinity deformation, w/cw letters.
    std::string deformed_gamma_minus;
};

struct CatalogEntry {
    std::string name;
    int m = 0;
    int k = 1; // default splitting: base indices 1..k
    StructureEquations equations;
    std::string provenance;
    ExpectedResults expected;
};

/// The built-in entries, in a fixed order.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry* catalog_find(const std::string& name);

} // namespace acs
