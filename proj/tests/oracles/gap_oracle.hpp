#pragma once

// Three-distance oracle for the intercept interval of a rotation hallway.
//
// The intercepts of slope-alpha lines agreeing with the hallway on doorways
// 0..N form the gap of the circle partition {-i*alpha mod 1 : 0 <= i <= N}
// that contains the intercept (the gap just above it when the intercept is
// itself a cut point, which is where a plus-side line sits). The points are
// computed in 128-bit MPFR arithmetic, independently of the exact layer.

#include <algorithm>
#include <vector>

#include <mpfr.h>

#include "oracles/interval_oracle.hpp"

namespace oracle {

struct GapReport {
    long double width = 0;
    /// Distinct gap lengths of the whole partition, up to 1e-15.
    std::size_t distinct_lengths = 0;
};

inline GapReport rotation_gap(const doorways::ExactReal& alpha, const doorways::ExactReal& beta, std::size_t n) {
    Enclosure a;
    enclose(alpha, a);
    Enclosure b;
    enclose(beta, b);
    mpfr_t x, one, bf;
    mpfr_inits2(kPrecision, x, one, bf, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_ui(one, 1, MPFR_RNDN);
    mpfr_frac(bf, b.lo(), MPFR_RNDN);
    if (mpfr_sgn(bf) < 0) mpfr_add(bf, bf, one, MPFR_RNDN);

    std::vector<long double> cuts;
    for (std::size_t i = 0; i <= n; ++i) {
        mpfr_mul_ui(x, a.lo(), static_cast<unsigned long>(i), MPFR_RNDN);
        mpfr_neg(x, x, MPFR_RNDN);
        mpfr_frac(x, x, MPFR_RNDN);
        if (mpfr_sgn(x) < 0) mpfr_add(x, x, one, MPFR_RNDN);
        cuts.push_back(mpfr_get_ld(x, MPFR_RNDN));
    }
    const long double target = mpfr_get_ld(bf, MPFR_RNDN);
    mpfr_clears(x, one, bf, static_cast<mpfr_ptr>(nullptr));

    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(cuts.front() + 1.0L);
    GapReport report;
    std::vector<long double> lengths;
    constexpr long double kEps = 1e-15L;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const long double g = cuts[k + 1] - cuts[k];
        if (g <= kEps) continue;
        lengths.push_back(g);
        if (target + kEps >= cuts[k] && target + kEps < cuts[k + 1]) report.width = g;
    }
    std::sort(lengths.begin(), lengths.end());
    for (std::size_t k = 0; k < lengths.size(); ++k) {
        if (k == 0 || lengths[k] - lengths[k - 1] > 1e-15L) ++report.distinct_lengths;
    }
    return report;
}

}  // namespace oracle
