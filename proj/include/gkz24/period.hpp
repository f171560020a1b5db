#pragma once

#include "gkz24/gkz.hpp"
#include "gkz24/weyl.hpp"

#include <optional>
#include <vector>

namespace gkz24 {

/// Configuration of a principal-period expansion: the factor polytopes (one
/// for a single hypersurface), the truncation level, and per factor the
/// designated expansion point whose coefficient gets inverted. Default point:
/// the origin when it is a lattice point of the factor, otherwise the
/// lexicographically smallest lattice point.
struct PeriodConfig {
    std::vector<std::vector<std::vector<Int>>> factor_points;
    int k_max = 3;
    std::vector<std::optional<std::vector<Int>>> expansion_points;  // per factor, optional

    static PeriodConfig hypersurface(const GkzContext& ctx, int k_max);
    static PeriodConfig complete_intersection(const CiContext& ctx, int k_max);
};

/// Constant-term expansion of 1/f around the designated point:
/// sum_k (-1)^k b0^{-(k+1)} CT[(sum_{mu != 0} b_mu t^mu)^k], each level a sum
/// over multisets with the multinomial coefficient.
TruncatedSeries principal_period(const PeriodConfig& cfg, SpacePtr space);

/// Product expansion of 1/(sigma_1 ... sigma_s) with the joint constant term.
TruncatedSeries ci_principal_period(const PeriodConfig& cfg, SpacePtr space);

/// apply_to_series restricted to determined levels; zero iff A annihilates
/// the series up to the truncation.
TruncatedSeries annihilation_residual(const WeylOperator& A, const TruncatedSeries& s);

}  // namespace gkz24
