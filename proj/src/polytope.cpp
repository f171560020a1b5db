#include "gkz24/polytope.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>

namespace gkz24 {

using nlohmann::json;

LatticePolytope::LatticePolytope(int dim, std::vector<Inequality> ineqs)
    : dim_(dim), ineqs_(std::move(ineqs)) {
    for (const auto& iq : ineqs_)
        if (static_cast<int>(iq.ray.size()) != dim_)
            throw std::invalid_argument("inequality dimension mismatch");
}

// recession cone {x : <x, rho_i> >= 0} must be {0} for boundedness
static bool rays_bound(const std::vector<Inequality>& ineqs, int dim) {
    // feasibility of {<x,rho_i> >= 0, s*x_j >= 1} for any j, sign -> unbounded
    for (int j = 0; j < dim; ++j) {
        for (int s : {1, -1}) {
            std::vector<std::vector<Rat>> rows;
            for (const auto& iq : ineqs) {
                std::vector<Rat> r(dim + 1);
                for (int k = 0; k < dim; ++k) r[k] = Rat(iq.ray[k]);
                rows.push_back(std::move(r));
            }
            std::vector<Rat> pick(dim + 1);
            pick[j] = s;
            pick[dim] = -1;
            rows.push_back(std::move(pick));
            // Fourier-Motzkin
            auto feas = [&]() {
                auto rs = rows;
                for (int v = 0; v < dim; ++v) {
                    std::vector<std::vector<Rat>> pos, neg, zero;
                    for (auto& r : rs) {
                        if (r[v] > 0) pos.push_back(r);
                        else if (r[v] < 0) neg.push_back(r);
                        else zero.push_back(r);
                    }
                    std::vector<std::vector<Rat>> next = zero;
                    for (const auto& p : pos)
                        for (const auto& n : neg) {
                            std::vector<Rat> r(p.size());
                            for (size_t k = 0; k < p.size(); ++k) r[k] = p[k] * (-n[v]) + n[k] * p[v];
                            next.push_back(std::move(r));
                        }
                    rs = std::move(next);
                }
                for (const auto& r : rs)
                    if (r[dim] < 0) return false;
                return true;
            };
            if (feas()) return false;
        }
    }
    return true;
}

LatticePolytope LatticePolytope::from_divisor(const Fan& fan, const std::vector<Int>& coeffs) {
    if (coeffs.size() != fan.rays.size())
        throw std::invalid_argument("from_divisor: one coefficient per ray required");
    std::vector<Inequality> ineqs;
    for (size_t i = 0; i < fan.rays.size(); ++i) ineqs.push_back({fan.rays[i], coeffs[i]});
    if (!rays_bound(ineqs, fan.dim))
        throw std::invalid_argument("from_divisor: polytope is unbounded (fan not complete?)");
    return LatticePolytope(fan.dim, std::move(ineqs));
}

bool LatticePolytope::contains(const std::vector<Int>& m) const {
    for (const auto& iq : ineqs_)
        if (dot(m, iq.ray) < -iq.a) return false;
    return true;
}

bool LatticePolytope::contains(const std::vector<Rat>& m) const {
    for (const auto& iq : ineqs_) {
        Rat s = 0;
        for (int i = 0; i < dim_; ++i) s += m[i] * Rat(iq.ray[i]);
        if (s < -Rat(iq.a)) return false;
    }
    return true;
}

// solve the dim x dim system given by the selected inequalities at equality
static std::optional<std::vector<Rat>> solve_active(const std::vector<Inequality>& ineqs,
                                                    const std::vector<int>& sel, int dim) {
    std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(dim + 1));
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) m[r][c] = Rat(ineqs[sel[r]].ray[c]);
        m[r][dim] = -Rat(ineqs[sel[r]].a);
    }
    int rank = 0;
    std::vector<int> piv;
    for (int c = 0; c < dim; ++c) {
        int pr = -1;
        for (int r = rank; r < dim; ++r)
            if (m[r][c] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(m[rank], m[pr]);
        Rat pv = m[rank][c];
        for (auto& x : m[rank]) x /= pv;
        for (int r = 0; r < dim; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rat f = m[r][c];
            for (int k = 0; k <= dim; ++k) m[r][k] -= f * m[rank][k];
        }
        piv.push_back(c);
        ++rank;
    }
    if (rank < dim) return std::nullopt;
    std::vector<Rat> x(dim);
    for (int i = 0; i < dim; ++i) x[piv[i]] = m[i][dim];
    return x;
}

const std::vector<std::vector<Rat>>& LatticePolytope::vertices() const {
    if (verts_) return *verts_;
    std::vector<std::vector<Rat>> vs;
    const int n = static_cast<int>(ineqs_.size());
    std::vector<int> sel(dim_);
    // all dim-subsets of inequalities
    std::vector<int> comb(dim_);
    for (int i = 0; i < dim_; ++i) comb[i] = i;
    if (n >= dim_) {
        while (true) {
            auto x = solve_active(ineqs_, comb, dim_);
            if (x && contains(*x)) {
                if (std::find(vs.begin(), vs.end(), *x) == vs.end()) vs.push_back(*x);
            }
            int k = dim_ - 1;
            while (k >= 0 && comb[k] == n - dim_ + k) --k;
            if (k < 0) break;
            ++comb[k];
            for (int j = k + 1; j < dim_; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    std::sort(vs.begin(), vs.end());
    verts_ = std::move(vs);
    return *verts_;
}

const std::vector<std::vector<Int>>& LatticePolytope::lattice_points() const {
    if (points_) return *points_;
    const auto& vs = vertices();
    if (vs.empty()) {
        points_ = std::vector<std::vector<Int>>{};
        return *points_;
    }
    std::vector<Int> lo(dim_), hi(dim_);
    for (int i = 0; i < dim_; ++i) {
        Rat mn = vs[0][i], mx = vs[0][i];
        for (const auto& v : vs) {
            if (v[i] < mn) mn = v[i];
            if (v[i] > mx) mx = v[i];
        }
        mpz_fdiv_q(lo[i].get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
        mpz_cdiv_q(hi[i].get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
    }
    std::vector<std::vector<Int>> pts;
    std::vector<Int> cur(dim_);
    // box scan in lexicographic order
    std::function<void(int)> rec = [&](int i) {
        if (i == dim_) {
            if (contains(cur)) pts.push_back(cur);
            return;
        }
        for (Int v = lo[i]; v <= hi[i]; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    points_ = std::move(pts);
    return *points_;
}

std::set<int> LatticePolytope::active_set(const std::vector<Rat>& x) const {
    std::set<int> out;
    for (size_t i = 0; i < ineqs_.size(); ++i) {
        Rat s = 0;
        for (int k = 0; k < dim_; ++k) s += x[k] * Rat(ineqs_[i].ray[k]);
        if (s == -Rat(ineqs_[i].a)) out.insert(static_cast<int>(i));
    }
    return out;
}

std::set<int> LatticePolytope::active_set(const std::vector<Int>& x) const {
    std::vector<Rat> q(x.size());
    for (size_t i = 0; i < x.size(); ++i) q[i] = Rat(x[i]);
    return active_set(q);
}

bool LatticePolytope::origin_interior() const {
    for (const auto& iq : ineqs_)
        if (iq.a <= 0) return false;  // 0 must satisfy every inequality strictly
    return true;
}

std::vector<Root> roots(const Fan& fan) {
    std::vector<Int> ones(fan.rays.size(), 1);
    LatticePolytope antiK = LatticePolytope::from_divisor(fan, ones);
    std::vector<Root> out;
    for (const auto& m : antiK.lattice_points()) {
        int neg = -1;
        bool ok = true;
        std::vector<Int> ps(fan.rays.size());
        for (size_t i = 0; i < fan.rays.size(); ++i) {
            ps[i] = dot(m, fan.rays[i]);
            if (ps[i] == -1) {
                if (neg >= 0) { ok = false; break; }
                neg = static_cast<int>(i);
            } else if (ps[i] < -1) {
                ok = false;
                break;
            }
        }
        if (!ok || neg < 0) continue;
        Root r;
        r.alpha = m;
        r.ray_index = neg;
        r.wD = ps;
        r.wD[neg] = 0;
        out.push_back(std::move(r));
    }
    return out;  // lattice_points() is lex ordered, so roots are too
}

bool is_normal(const LatticePolytope& P, int r_max) {
    if (r_max < 2) throw std::invalid_argument("is_normal: r_max >= 2 required");
    const auto& base = P.lattice_points();
    std::set<std::vector<Int>> cur(base.begin(), base.end());
    for (int r = 2; r <= r_max; ++r) {
        std::vector<Inequality> scaled = P.inequalities();
        for (auto& iq : scaled) iq.a *= r;
        LatticePolytope rP(P.dim(), scaled);
        std::set<std::vector<Int>> sums;
        for (const auto& x : cur)
            for (const auto& y : base) sums.insert(vec_add(x, y));
        const auto& rpts = rP.lattice_points();
        if (sums != std::set<std::vector<Int>>(rpts.begin(), rpts.end())) return false;
        cur = std::move(sums);
    }
    return true;
}

LatticePolytope dual_polytope(const LatticePolytope& P) {
    if (!P.origin_interior()) throw std::invalid_argument("dual_polytope: origin not interior");
    std::vector<Inequality> ineqs;
    for (const auto& v : P.vertices()) {
        // <v, y> >= -1, cleared to integer data
        Int den = 1;
        for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        std::vector<Int> row(P.dim());
        for (int i = 0; i < P.dim(); ++i) {
            Rat s = v[i] * Rat(den);
            row[i] = s.get_num();  // denominator divides den
        }
        ineqs.push_back({std::move(row), den});
    }
    return LatticePolytope(P.dim(), std::move(ineqs));
}

static bool all_vertices_integral(const LatticePolytope& P) {
    for (const auto& v : P.vertices())
        for (const auto& x : v)
            if (x.get_den() != 1) return false;
    return true;
}

bool is_reflexive(const LatticePolytope& P) {
    if (!P.origin_interior()) return false;
    if (!all_vertices_integral(P)) return false;
    LatticePolytope D = dual_polytope(P);
    if (!all_vertices_integral(D)) return false;
    // unique interior lattice point = 0, both sides
    const LatticePolytope* sides[2] = {&P, &D};
    for (const LatticePolytope* Q : sides) {
        long interior = 0;
        for (const auto& m : Q->lattice_points())
            if (Q->active_set(m).empty()) ++interior;
        if (interior != 1) return false;
    }
    return true;
}

std::vector<Face> faces(const LatticePolytope& P) {
    const auto& vs = P.vertices();
    std::vector<std::set<int>> vact;
    for (const auto& v : vs) vact.push_back(P.active_set(v));
    // candidate faces: for every subset S of inequalities, the vertices
    // containing S; distinct faces keyed by their vertex sets
    const int n = static_cast<int>(P.inequalities().size());
    std::map<std::vector<int>, std::set<int>> seen;  // vertex index list -> common active set
    for (long mask = 0; mask < (1L << n); ++mask) {
        std::set<int> S;
        for (int i = 0; i < n; ++i)
            if (mask & (1L << i)) S.insert(i);
        std::vector<int> fv;
        for (size_t k = 0; k < vs.size(); ++k) {
            bool inc = std::includes(vact[k].begin(), vact[k].end(), S.begin(), S.end());
            if (inc) fv.push_back(static_cast<int>(k));
        }
        if (fv.empty()) continue;
        std::set<int> common = vact[fv[0]];
        for (size_t k = 1; k < fv.size(); ++k) {
            std::set<int> tmp;
            std::set_intersection(common.begin(), common.end(), vact[fv[k]].begin(), vact[fv[k]].end(),
                                  std::inserter(tmp, tmp.begin()));
            common = std::move(tmp);
        }
        seen.emplace(std::move(fv), std::move(common));
    }
    std::vector<Face> out;
    for (const auto& [fv, act] : seen) {
        Face f;
        f.active = act;
        for (int k : fv) f.vertices.push_back(vs[k]);
        // affine dimension
        if (f.vertices.size() <= 1) {
            f.dim = 0;
        } else {
            std::vector<std::vector<Rat>> m;
            for (size_t k = 1; k < f.vertices.size(); ++k) {
                std::vector<Rat> row(P.dim());
                for (int c = 0; c < P.dim(); ++c) row[c] = f.vertices[k][c] - f.vertices[0][c];
                m.push_back(std::move(row));
            }
            int rank = 0;
            for (int c = 0; c < P.dim(); ++c) {
                int pr = -1;
                for (size_t r = rank; r < m.size(); ++r)
                    if (m[r][c] != 0) { pr = static_cast<int>(r); break; }
                if (pr < 0) continue;
                std::swap(m[rank], m[pr]);
                Rat pv = m[rank][c];
                for (auto& x : m[rank]) x /= pv;
                for (size_t r = 0; r < m.size(); ++r) {
                    if (static_cast<int>(r) == rank || m[r][c] == 0) continue;
                    Rat fac = m[r][c];
                    for (int k2 = 0; k2 < P.dim(); ++k2) m[r][k2] -= fac * m[rank][k2];
                }
                ++rank;
            }
            f.dim = rank;
        }
        out.push_back(std::move(f));
    }
    return out;
}

long face_interior_points(const LatticePolytope& P, const Face& f) {
    long count = 0;
    for (const auto& m : P.lattice_points())
        if (P.active_set(m) == f.active) ++count;
    return count;
}

long nonpoly_h1_dimension(const LatticePolytope& P) {
    if (!is_reflexive(P)) throw std::invalid_argument("nonpoly_h1_dimension: polytope not reflexive");
    LatticePolytope D = dual_polytope(P);
    auto fl = faces(P);
    auto dl = faces(D);
    long total = 0;
    for (const auto& th : fl) {
        if (th.dim != P.dim() - 2) continue;
        long l1 = face_interior_points(P, th);
        // dual face: vertices y of D with <x,y> = -1 for every vertex x of th
        std::vector<std::vector<Rat>> dverts;
        for (const auto& y : D.vertices()) {
            bool all = true;
            for (const auto& x : th.vertices) {
                Rat s = 0;
                for (int c = 0; c < P.dim(); ++c) s += x[c] * y[c];
                if (s != -1) { all = false; break; }
            }
            if (all) dverts.push_back(y);
        }
        long l2 = 0;  // l*(empty face) = 0
        if (!dverts.empty()) {
            std::sort(dverts.begin(), dverts.end());
            const Face* match = nullptr;
            for (const auto& g : dl)
                if (g.vertices == dverts) { match = &g; break; }
            if (!match) throw std::runtime_error("nonpoly_h1_dimension: dual face not found");
            l2 = face_interior_points(D, *match);
        }
        total += l1 * l2;
    }
    return total;
}

std::string polytope_to_json(const LatticePolytope& P, bool with_points) {
    json j;
    j["dimension"] = P.dim();
    auto& iq = j["inequalities"] = json::array();
    for (const auto& i : P.inequalities()) {
        json row;
        row["ray"] = json::array();
        for (const auto& x : i.ray) row["ray"].push_back(x.get_si());
        row["a"] = i.a.get_si();
        iq.push_back(row);
    }
    if (with_points) {
        auto& pts = j["lattice_points"] = json::array();
        for (const auto& p : P.lattice_points()) {
            json row = json::array();
            for (const auto& x : p) row.push_back(x.get_si());
            pts.push_back(row);
        }
    }
    return j.dump(2) + "\n";
}

LatticePolytope polytope_from_json(const std::string& text) {
    json j = json::parse(text);
    int dim = j.at("dimension").get<int>();
    std::vector<Inequality> ineqs;
    for (const auto& row : j.at("inequalities")) {
        Inequality iq;
        for (const auto& x : row.at("ray")) iq.ray.emplace_back(x.get<long>());
        iq.a = Int(row.at("a").get<long>());
        ineqs.push_back(std::move(iq));
    }
    return LatticePolytope(dim, std::move(ineqs));
}

}  // namespace gkz24
