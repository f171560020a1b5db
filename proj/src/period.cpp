#include "gkz24/period.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gkz24 {

PeriodConfig PeriodConfig::hypersurface(const GkzContext& ctx, int k_max) {
    if (!ctx.delta.origin_interior())
        throw std::invalid_argument("period: origin is not interior to the polytope");
    if (k_max < 2) throw std::invalid_argument("period: k_max >= 2 required");
    PeriodConfig cfg;
    cfg.factor_points = {ctx.points};
    cfg.k_max = k_max;
    cfg.expansion_points = {std::nullopt};
    return cfg;
}

PeriodConfig PeriodConfig::complete_intersection(const CiContext& ctx, int k_max) {
    if (k_max < 2) throw std::invalid_argument("period: k_max >= 2 required");
    PeriodConfig cfg;
    cfg.factor_points = ctx.factor_points;
    cfg.k_max = k_max;
    cfg.expansion_points.assign(ctx.s, std::nullopt);
    return cfg;
}

static std::vector<Int> pick_expansion_point(const std::vector<std::vector<Int>>& pts,
                                             const std::optional<std::vector<Int>>& chosen) {
    if (chosen) {
        if (std::find(pts.begin(), pts.end(), *chosen) == pts.end())
            throw std::invalid_argument("expansion point is not a lattice point of the factor");
        return *chosen;
    }
    std::vector<Int> zero(pts.empty() ? 0 : pts[0].size(), 0);
    if (std::find(pts.begin(), pts.end(), zero) != pts.end()) return zero;
    if (pts.empty()) throw std::invalid_argument("factor polytope has no lattice points");
    return pts[0];  // lex smallest; lattice_points() is ordered
}

static Rat multiset_multinomial(const std::vector<int>& pick) {
    // k! / prod multiplicity!
    Int num;
    mpz_fac_ui(num.get_mpz_t(), pick.size());
    Int den = 1;
    size_t i = 0;
    while (i < pick.size()) {
        size_t j = i;
        while (j < pick.size() && pick[j] == pick[i]) ++j;
        Int f;
        mpz_fac_ui(f.get_mpz_t(), j - i);
        den *= f;
        i = j;
    }
    return Rat(num) / Rat(den);
}

TruncatedSeries ci_principal_period(const PeriodConfig& cfg, SpacePtr space) {
    const int s = static_cast<int>(cfg.factor_points.size());
    const int dim = static_cast<int>(cfg.factor_points[0][0].size());
    // designated points and the nonzero coordinate lists per factor
    std::vector<std::vector<Int>> m0(s);
    std::vector<std::vector<std::vector<Int>>> rest(s);
    std::vector<std::vector<int>> rest_var(s);  // variable index per rest point
    std::vector<int> inverted(s);
    std::vector<int> var_factor(space->size(), -1);

    auto var_of = [&](int factor, const std::vector<Int>& p) {
        VarLabel l;
        l.factor = factor;
        for (const auto& x : p) l.pt.push_back(static_cast<int>(x.get_si()));
        int v = space->find(l);
        if (v < 0) {  // plain (untagged) spaces for the single-factor case
            l.factor = -1;
            v = space->find(l);
        }
        if (v < 0) throw std::invalid_argument("period: point missing from space");
        return v;
    };

    for (int f = 0; f < s; ++f) {
        m0[f] = pick_expansion_point(cfg.factor_points[f],
                                     f < static_cast<int>(cfg.expansion_points.size())
                                         ? cfg.expansion_points[f]
                                         : std::nullopt);
        inverted[f] = var_of(f, m0[f]);
        for (const auto& p : cfg.factor_points[f]) {
            if (p == m0[f]) continue;
            rest[f].push_back(p);
            rest_var[f].push_back(var_of(f, p));
        }
        for (const auto& p : cfg.factor_points[f])
            var_factor[var_of(f, p)] = f;
    }

    TruncatedSeries out(space, cfg.k_max, inverted, var_factor);

    // joint constant term: sum over levels (k_1..k_s), total <= k_max, of
    // multisets per factor with sum_f sum_j mu_fj = sum_f (k_f + 1) m0_f
    std::vector<int> ks(s, 0);
    std::function<void(int, int)> levels = [&](int f, int used) {
        if (f == s) {
            std::vector<Int> target(dim, 0);
            for (int g = 0; g < s; ++g)
                for (int c = 0; c < dim; ++c) target[c] += Int(ks[g] + 1) * m0[g][c];
            // recursive per-factor multiset enumeration against the target
            std::vector<std::vector<int>> picks(s);
            std::function<void(int, std::vector<Int>&)> emit_factor = [&](int g, std::vector<Int>& acc) {
                if (g == s) {
                    if (!std::equal(acc.begin(), acc.end(), target.begin())) return;
                    Rat coeff(1);
                    int total = 0;
                    for (int h = 0; h < s; ++h) {
                        coeff *= multiset_multinomial(picks[h]);
                        total += ks[h];
                    }
                    if (total % 2) coeff = -coeff;
                    SeriesKey key;
                    key.e.resize(s);
                    for (int h = 0; h < s; ++h) key.e[h] = -(ks[h] + 1);
                    Monomial restm;
                    for (int h = 0; h < s; ++h)
                        for (int idx : picks[h]) restm = restm.times(rest_var[h][idx], 1);
                    key.rest = restm;
                    out.add_term(key, coeff);
                    return;
                }
                // all multisets of size ks[g] from this factor, accumulated
                std::vector<int> pick;
                std::function<void(int, int)> rec = [&](int start, int left) {
                    if (left == 0) {
                        picks[g] = pick;
                        emit_factor(g + 1, acc);
                        return;
                    }
                    for (int i = start; i < static_cast<int>(rest[g].size()); ++i) {
                        pick.push_back(i);
                        for (int c = 0; c < dim; ++c) acc[c] += rest[g][i][c];
                        rec(i, left - 1);
                        for (int c = 0; c < dim; ++c) acc[c] -= rest[g][i][c];
                        pick.pop_back();
                    }
                };
                rec(0, ks[g]);
            };
            std::vector<Int> acc(dim, 0);
            emit_factor(0, acc);
            return;
        }
        for (int k = 0; used + k <= cfg.k_max; ++k) {
            ks[f] = k;
            levels(f + 1, used + k);
        }
    };
    levels(0, 0);
    return out;
}

TruncatedSeries principal_period(const PeriodConfig& cfg, SpacePtr space) {
    if (cfg.factor_points.size() != 1)
        throw std::invalid_argument("principal_period: single factor expected");
    return ci_principal_period(cfg, space);
}

TruncatedSeries annihilation_residual(const WeylOperator& A, const TruncatedSeries& s) {
    return apply_to_series(A, s);
}

}  // namespace gkz24
