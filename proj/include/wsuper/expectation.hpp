#pragma once

#include <string>
#include <vector>

#include "wsuper/algebra.hpp"

namespace wsuper {

// Expected outer-derivation dimensions, as data: every cell is zero except
// (even, degree 0), which carries d2 (s=0) or d4 (s=1/2) for every lambda and
// additionally d1 / d3 exactly when lambda = 0.
struct OuterRule {
    int s_twice;
    const char* label;
    bool only_lambda_zero;
};

inline constexpr OuterRule kOuterRules[] = {
    {0, "d1", true},
    {0, "d2", false},
    {1, "d3", true},
    {1, "d4", false},
};

inline bool lambda_is_zero(const ScalarMode& mode) {
    return !mode.is_symbolic() && mode.lambda0().is_zero();
}

inline std::vector<std::string> expected_outer_labels(HalfInt s, const ScalarMode& mode, Parity p,
                                                      HalfInt degree) {
    std::vector<std::string> out;
    if (p != Parity::Even || degree != HalfInt(0))
        return out;
    for (const OuterRule& rule : kOuterRules)
        if (rule.s_twice == s.twice && (!rule.only_lambda_zero || lambda_is_zero(mode)))
            out.push_back(rule.label);
    return out;
}

inline int expected_dim_outer(HalfInt s, const ScalarMode& mode, Parity p, HalfInt degree) {
    return static_cast<int>(expected_outer_labels(s, mode, p, degree).size());
}

} // namespace wsuper
