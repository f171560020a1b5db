#include "gkz24/gkz.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>

namespace gkz24 {

using nlohmann::json;

std::vector<const Generator*> OperatorSystem::with_tag(const std::string& tag) const {
    std::vector<const Generator*> out;
    for (const auto& g : generators)
        if (g.tag == tag) out.push_back(&g);
    return out;
}

int GkzContext::point_index(const std::vector<Int>& m) const {
    auto it = std::lower_bound(points.begin(), points.end(), m);
    if (it == points.end() || *it != m) return -1;
    return static_cast<int>(it - points.begin());
}

GkzContext make_gkz_context(const Fan& fan) {
    std::vector<Int> ones(fan.rays.size(), 1);
    GkzContext ctx{fan, LatticePolytope::from_divisor(fan, ones), {}, nullptr, {}, -1};
    if (!is_reflexive(ctx.delta))
        throw std::invalid_argument("gkz context: anticanonical polytope is not reflexive");
    ctx.points = ctx.delta.lattice_points();
    ctx.space = make_space("Y", ctx.points);
    ctx.root_list = roots(fan);
    std::vector<Int> zero(fan.dim, 0);
    ctx.origin_index = ctx.point_index(zero);
    if (ctx.origin_index < 0) throw std::runtime_error("gkz context: origin not in Delta");
    return ctx;
}

WeylOperator torus_operator_char(const GkzContext& ctx, const std::vector<Int>& n) {
    WeylOperator op(ctx.space);
    for (size_t i = 0; i < ctx.points.size(); ++i) {
        Int c = dot(ctx.points[i], n);
        if (c != 0)
            op.add_term(Monomial::var(static_cast<int>(i)), Monomial::var(static_cast<int>(i)),
                        TPoly(Rat(c)));
    }
    return op;
}

WeylOperator torus_operator(const GkzContext& ctx, int j) {
    if (j < 0 || j >= ctx.fan.dim) throw std::invalid_argument("torus_operator: bad axis");
    std::vector<Int> n(ctx.fan.dim, 0);
    n[j] = 1;
    return torus_operator_char(ctx, n);
}

WeylOperator euler_operator(const GkzContext& ctx) {
    WeylOperator op(ctx.space);
    for (size_t i = 0; i < ctx.points.size(); ++i)
        op.add_term(Monomial::var(static_cast<int>(i)), Monomial::var(static_cast<int>(i)), TPoly(1));
    op.add_term(Monomial::one(), Monomial::one(), TPoly(1));
    return op;
}

WeylOperator scaling_operator(const GkzContext& ctx, int ray_index) {
    WeylOperator op(ctx.space);
    for (size_t i = 0; i < ctx.points.size(); ++i) {
        Int c = dot(ctx.points[i], ctx.fan.rays[ray_index]) + 1;
        if (c != 0)
            op.add_term(Monomial::var(static_cast<int>(i)), Monomial::var(static_cast<int>(i)),
                        TPoly(Rat(c)));
    }
    op.add_term(Monomial::one(), Monomial::one(), TPoly(1));
    return op;
}

WeylOperator root_operator(const GkzContext& ctx, const Root& alpha) {
    // accept only actual roots of the fan
    bool known = false;
    for (const auto& r : ctx.root_list)
        if (r.alpha == alpha.alpha) known = true;
    if (!known) throw std::invalid_argument("root_operator: not a root of the fan");
    const auto& rho = ctx.fan.rays[alpha.ray_index];
    WeylOperator op(ctx.space);
    for (size_t i = 0; i < ctx.points.size(); ++i) {
        int target = ctx.point_index(vec_add(ctx.points[i], alpha.alpha));
        if (target < 0) continue;
        Int c = dot(vec_sub(ctx.points[i], alpha.alpha), rho);
        if (c != 0) op.add_term(Monomial::var(static_cast<int>(i)), Monomial::var(target), TPoly(Rat(c)));
    }
    return op;
}

// multisets of points of given size with their sums, grouped
static void enumerate_relations(const std::vector<std::vector<Int>>& pts, int degree,
                                const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> idx(degree, 0);
    const int n = static_cast<int>(pts.size());
    if (n == 0) return;
    while (true) {
        emit(idx);
        int k = degree - 1;
        while (k >= 0 && idx[k] == n - 1) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < degree; ++j) idx[j] = idx[k];
    }
}

std::vector<WeylOperator> box_operators(const GkzContext& ctx, int max_degree) {
    if (max_degree < 2) throw std::invalid_argument("box_operators: max_degree >= 2 required");
    std::vector<WeylOperator> out;
    for (int deg = 2; deg <= max_degree; ++deg) {
        std::map<std::vector<Int>, std::vector<std::vector<int>>> by_sum;
        enumerate_relations(ctx.points, deg, [&](const std::vector<int>& idx) {
            std::vector<Int> s(ctx.fan.dim, 0);
            for (int i : idx) s = vec_add(s, ctx.points[i]);
            by_sum[s].push_back(idx);
        });
        for (const auto& [s, group] : by_sum) {
            for (size_t i = 0; i < group.size(); ++i) {
                for (size_t j = i + 1; j < group.size(); ++j) {
                    WeylOperator op(ctx.space);
                    Monomial d1, d2;
                    for (int v : group[i]) d1 = d1.times(v, 1);
                    for (int v : group[j]) d2 = d2.times(v, 1);
                    op.add_term(Monomial::one(), d1, TPoly(1));
                    op.add_term(Monomial::one(), d2, TPoly(Rat(-1)));
                    if (!op.is_zero()) out.push_back(std::move(op));
                }
            }
        }
    }
    return out;
}

OperatorSystem extended_gkz_system(const GkzContext& ctx, int box_degree) {
    OperatorSystem sys;
    sys.name = "extended_gkz";
    sys.space = ctx.space;
    for (int j = 0; j < ctx.fan.dim; ++j) {
        std::vector<Int> n(ctx.fan.dim, 0);
        n[j] = 1;
        sys.generators.push_back({"torus", "e_" + std::to_string(j + 1), torus_operator(ctx, j)});
    }
    sys.generators.push_back({"euler", "scaling", euler_operator(ctx)});
    for (const auto& r : ctx.root_list)
        sys.generators.push_back({"root", vec_to_string(r.alpha), root_operator(ctx, r)});
    int k = 0;
    for (auto& op : box_operators(ctx, box_degree))
        sys.generators.push_back({"binomial", "relation_" + std::to_string(k++), std::move(op)});
    return sys;
}

int CiContext::var_index(int factor, const std::vector<Int>& m) const {
    VarLabel l;
    l.factor = factor;
    for (const auto& x : m) l.pt.push_back(static_cast<int>(x.get_si()));
    return space->find(l);
}

CiContext make_ci_context(const Fan& fan, const std::vector<int>& degrees,
                          const std::vector<std::vector<Int>>& a) {
    CiContext ctx{make_gkz_context(fan), static_cast<int>(degrees.size()), degrees, a, {}, {}, nullptr};
    const int nrays = static_cast<int>(fan.rays.size());
    if (static_cast<int>(a.size()) != ctx.s) throw std::invalid_argument("ci: one coefficient row per factor");
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != nrays) throw std::invalid_argument("ci: row length mismatch");
    for (int j = 0; j < nrays; ++j) {
        Int colsum = 0;
        for (int i = 0; i < ctx.s; ++i) colsum += a[i][j];
        if (colsum != 1) throw std::invalid_argument("ci: column sums must all equal 1");
    }
    int degsum = 0;
    for (int d : degrees) degsum += d;
    if (degsum != fan.dim) throw std::invalid_argument("ci: degrees must sum to n");
    // class of row i must be n_i / n of the anticanonical class
    auto q = quotient_data(fan);
    std::array<Int, 2> antik{0, 0};
    for (int j = 0; j < nrays; ++j) {
        antik[0] += q.grading[j][0];
        antik[1] += q.grading[j][1];
    }
    for (int i = 0; i < ctx.s; ++i) {
        std::array<Int, 2> cls{0, 0};
        for (int j = 0; j < nrays; ++j) {
            cls[0] += a[i][j] * q.grading[j][0];
            cls[1] += a[i][j] * q.grading[j][1];
        }
        if (cls[0] * degsum != antik[0] * degrees[i] || cls[1] * degsum != antik[1] * degrees[i])
            throw std::invalid_argument("ci: row class does not match its degree");
    }
    for (int i = 0; i < ctx.s; ++i) {
        LatticePolytope P = LatticePolytope::from_divisor(fan, a[i]);
        ctx.factor_points.push_back(P.lattice_points());
        ctx.factor_polytopes.push_back(std::move(P));
    }
    ctx.space = make_ci_space("CI", ctx.factor_points);
    return ctx;
}

WeylOperator ci_torus_operator(const CiContext& ctx, int j) {
    std::vector<Int> n(ctx.base.fan.dim, 0);
    n[j] = 1;
    WeylOperator op(ctx.space);
    for (int i = 0; i < ctx.s; ++i)
        for (const auto& mu : ctx.factor_points[i]) {
            Int c = dot(mu, n);
            if (c == 0) continue;
            int v = ctx.var_index(i, mu);
            op.add_term(Monomial::var(v), Monomial::var(v), TPoly(Rat(c)));
        }
    return op;
}

WeylOperator ci_euler_operator(const CiContext& ctx, int factor) {
    WeylOperator op(ctx.space);
    for (const auto& mu : ctx.factor_points[factor]) {
        int v = ctx.var_index(factor, mu);
        op.add_term(Monomial::var(v), Monomial::var(v), TPoly(1));
    }
    op.add_term(Monomial::one(), Monomial::one(), TPoly(1));
    return op;
}

WeylOperator ci_root_operator(const CiContext& ctx, const Root& alpha) {
    const int k = alpha.ray_index;
    const auto& rho = ctx.base.fan.rays[k];
    WeylOperator op(ctx.space);
    for (int i = 0; i < ctx.s; ++i) {
        std::set<std::vector<Int>> pts(ctx.factor_points[i].begin(), ctx.factor_points[i].end());
        for (const auto& mu : ctx.factor_points[i]) {
            auto nu = vec_add(mu, alpha.alpha);
            if (!pts.count(nu)) continue;
            // <mu - a_ik alpha, rho_k>
            std::vector<Int> shifted = mu;
            for (size_t c = 0; c < shifted.size(); ++c) shifted[c] -= ctx.a[i][k] * alpha.alpha[c];
            Int coeff = dot(shifted, rho);
            if (coeff != 0)
                op.add_term(Monomial::var(ctx.var_index(i, mu)), Monomial::var(ctx.var_index(i, nu)),
                            TPoly(Rat(coeff)));
        }
    }
    return op;
}

std::vector<WeylOperator> ci_box_operators(const CiContext& ctx) {
    std::vector<WeylOperator> out;
    // degree-2 relations within and across factors
    for (int i = 0; i < ctx.s; ++i) {
        for (int j = i; j < ctx.s; ++j) {
            std::map<std::vector<Int>, std::vector<std::pair<int, int>>> by_sum;
            for (size_t p = 0; p < ctx.factor_points[i].size(); ++p) {
                size_t q0 = (i == j) ? p : 0;
                for (size_t q = q0; q < ctx.factor_points[j].size(); ++q) {
                    auto s = vec_add(ctx.factor_points[i][p], ctx.factor_points[j][q]);
                    by_sum[s].emplace_back(static_cast<int>(p), static_cast<int>(q));
                }
            }
            for (const auto& [s, group] : by_sum) {
                for (size_t u = 0; u < group.size(); ++u)
                    for (size_t v = u + 1; v < group.size(); ++v) {
                        WeylOperator op(ctx.space);
                        Monomial d1, d2;
                        d1 = d1.times(ctx.var_index(i, ctx.factor_points[i][group[u].first]), 1);
                        d1 = d1.times(ctx.var_index(j, ctx.factor_points[j][group[u].second]), 1);
                        d2 = d2.times(ctx.var_index(i, ctx.factor_points[i][group[v].first]), 1);
                        d2 = d2.times(ctx.var_index(j, ctx.factor_points[j][group[v].second]), 1);
                        op.add_term(Monomial::one(), d1, TPoly(1));
                        op.add_term(Monomial::one(), d2, TPoly(Rat(-1)));
                        if (!op.is_zero()) out.push_back(std::move(op));
                    }
            }
        }
    }
    return out;
}

OperatorSystem ci_system(const CiContext& ctx) {
    OperatorSystem sys;
    sys.name = "ci_tautological";
    sys.space = ctx.space;
    for (int j = 0; j < ctx.base.fan.dim; ++j)
        sys.generators.push_back({"torus", "e_" + std::to_string(j + 1), ci_torus_operator(ctx, j)});
    for (int i = 0; i < ctx.s; ++i)
        sys.generators.push_back({"euler", "factor_" + std::to_string(i), ci_euler_operator(ctx, i)});
    for (const auto& r : ctx.base.root_list)
        sys.generators.push_back({"root", vec_to_string(r.alpha), ci_root_operator(ctx, r)});
    int k = 0;
    for (auto& op : ci_box_operators(ctx))
        sys.generators.push_back({"binomial", "relation_" + std::to_string(k++), std::move(op)});
    return sys;
}

std::string system_to_json(const OperatorSystem& sys) {
    json j;
    j["name"] = sys.name;
    j["space"] = sys.space->name;
    auto& gens = j["generators"] = json::array();
    for (const auto& g : sys.generators) {
        json e;
        e["tag"] = g.tag;
        e["provenance"] = g.provenance;
        e["operator"] = g.op.to_text();
        gens.push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

}  // namespace gkz24
