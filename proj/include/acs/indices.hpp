#pragma once

#include <compare>

namespace acs {

/// Index of a coframe generator or of the dual frame direction: 1..m,
/// optionally conjugated.  The canonical generator order places all
/// unbarred indices before all barred ones.
struct GeneratorIndex {
    int index = 0;
    bool barred = false;

    friend constexpr auto operator<=>(const GeneratorIndex& a, const GeneratorIndex& b) {
        if (auto c = a.barred <=> b.barred; c != 0) return c;
        return a.index <=> b.index;
    }
    friend constexpr bool operator==(const GeneratorIndex&, const GeneratorIndex&) = default;

    constexpr GeneratorIndex conj() const { return {index, !barred}; }
};

constexpr GeneratorIndex gen(int index) { return {index, false}; }
constexpr GeneratorIndex gen_bar(int index) { return {index, true}; }

/// Names the frame whose dual derivations a derivative symbol refers to:
/// xi for the undeformed coframe, psi for a deformed one.
enum class FrameTag { Xi, Psi };

} // namespace acs
