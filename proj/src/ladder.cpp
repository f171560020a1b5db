#include "gkz24/ladder.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace gkz24 {

using nlohmann::json;

LadderDiagram build_ladder_24() {
    LadderDiagram d;
    // solid grid coordinates: columns 0..2, rows 0..2 (y up)
    d.edges = {
        {1, true, 0, 1},   // e1: column 0, rows [1,2]
        {2, false, 0, 1},  // e2: row 1, columns [0,1]
        {3, true, 0, 0},   // e3: column 0, rows [0,1]
        {4, true, 1, 0},   // e4: column 1, rows [0,1]
        {5, false, 0, 0},  // e5: row 0, columns [0,1]
        {6, false, 1, 0},  // e6: row 0, columns [1,2]
    };
    d.dots = {{"A", {0, 1}}, {"B", {0, 0}}, {"C", {1, 1}}, {"D", {1, 0}}};
    d.roof = {1, 2, 4, 6};
    // positive paths run on the dotted grid, shifted by (-1/2,-1/2): a dotted
    // vertex (i,j) sits at solid (i-1/2, j-1/2)
    d.origin_O = {2, 2};
    d.origin_O0 = {0, 0};
    d.grid_w = 2;
    d.grid_h = 2;
    return d;
}

std::map<int, LatticeVector> boundary_delta(const LadderDiagram& d) {
    auto dot_index = [&](int x, int y) -> int {
        for (size_t k = 0; k < d.dots.size(); ++k)
            if (d.dots[k].second[0] == x && d.dots[k].second[1] == y) return static_cast<int>(k);
        return -1;
    };
    std::map<int, LatticeVector> out;
    const int n = static_cast<int>(d.dots.size());
    for (const auto& e : d.edges) {
        std::vector<Int> v(n, 0);
        int hx, hy, tx, ty;
        if (e.vertical) {  // oriented downward: tail (x, y+1), head (x, y)
            tx = e.x; ty = e.y + 1; hx = e.x; hy = e.y;
        } else {  // oriented rightward: tail (x, y), head (x+1, y)
            tx = e.x; ty = e.y; hx = e.x + 1; hy = e.y;
        }
        int hi = dot_index(hx, hy), ti = dot_index(tx, ty);
        if (hi >= 0) v[hi] += 1;
        if (ti >= 0) v[ti] -= 1;
        out.emplace(e.id, LatticeVector(std::move(v), Space::N));
    }
    return out;
}

std::vector<PositivePath> positive_paths(const LadderDiagram& d) {
    std::vector<PositivePath> out;
    const int nsteps = d.grid_w + d.grid_h;
    // enumerate step sequences; bit set = left step. order: lexicographic by
    // left-step positions, which matches the pi_{ij} labels.
    std::vector<std::vector<int>> leftsets;
    std::vector<int> idx(d.grid_w);
    // all increasing index pairs over 1..nsteps
    std::vector<int> comb(d.grid_w);
    for (int i = 0; i < d.grid_w; ++i) comb[i] = i;
    while (true) {
        leftsets.push_back(comb);
        int k = d.grid_w - 1;
        while (k >= 0 && comb[k] == nsteps - d.grid_w + k) --k;
        if (k < 0) break;
        ++comb[k];
        for (int j = k + 1; j < d.grid_w; ++j) comb[j] = comb[j - 1] + 1;
    }
    for (const auto& ls : leftsets) {
        PositivePath p;
        p.i = ls[0] + 1;
        p.j = ls[1] + 1;
        int x = d.origin_O[0], y = d.origin_O[1];
        for (int s = 0; s < nsteps; ++s) {
            bool left = std::find(ls.begin(), ls.end(), s) != ls.end();
            if (left) {
                // dotted step (x,y) -> (x-1,y) crosses the vertical edge in
                // column x-1 spanning rows [y-1, y]
                for (const auto& e : d.edges)
                    if (e.vertical && e.x == x - 1 && e.y == y - 1) p.edges.insert(e.id);
                --x;
            } else {
                // dotted step (x,y) -> (x,y-1) crosses the horizontal edge in
                // row y-1 spanning columns [x-1, x]
                for (const auto& e : d.edges)
                    if (!e.vertical && e.y == y - 1 && e.x == x - 1) p.edges.insert(e.id);
                --y;
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

FanFromLadder fan_from_ladder(const LadderDiagram& d) {
    FanFromLadder out;
    auto delta = boundary_delta(d);
    out.fan.dim = static_cast<int>(d.dots.size());
    for (const auto& e : d.edges) {
        const auto& v = delta.at(e.id).entries;
        out.fan.rays.push_back(v);
    }
    out.paths = positive_paths(d);
    for (const auto& p : out.paths) {
        std::vector<int> cone, mono;
        for (size_t k = 0; k < d.edges.size(); ++k) {
            int id = d.edges[k].id;
            if (p.edges.count(id))
                mono.push_back(static_cast<int>(k));
            else
                cone.push_back(static_cast<int>(k));
        }
        out.fan.max_cones.push_back(cone);
        out.cone_monomials.push_back(mono);
    }
    return out;
}

Fan small_resolution_24(const Fan& sigma) {
    Fan expect = fan_from_ladder(build_ladder_24()).fan;
    if (!(sigma == expect)) throw std::invalid_argument("small_resolution_24: input is not the (2,4) fan");
    Fan out;
    out.dim = sigma.dim;
    out.rays = sigma.rays;
    // refinements from the conifold pattern, 0-based ray indices
    const std::vector<int> sing1 = {0, 1, 2, 3, 4};  // {e1..e5}
    const std::vector<int> sing2 = {1, 2, 3, 4, 5};  // {e2..e6}
    for (const auto& c : sigma.max_cones) {
        if (c == sing1) {
            out.max_cones.push_back({0, 1, 2, 3});
            out.max_cones.push_back({0, 1, 3, 4});
        } else if (c == sing2) {
            out.max_cones.push_back({1, 3, 4, 5});
            out.max_cones.push_back({1, 2, 3, 5});
        } else {
            out.max_cones.push_back(c);
        }
    }
    return out;
}

bool fan_is_smooth(const Fan& f) {
    for (const auto& c : f.max_cones) {
        if (static_cast<int>(c.size()) != f.dim) return false;
        std::vector<std::vector<Int>> rows;
        for (int i : c) rows.push_back(f.rays[i]);
        if (abs_determinant(rows) != 1) return false;
    }
    return true;
}

// exact Fourier-Motzkin feasibility for { x : rows[i] . x + const_i >= 0 }
static bool fm_feasible(std::vector<std::vector<Rat>> rows, int nvars) {
    for (int v = 0; v < nvars; ++v) {
        std::vector<std::vector<Rat>> pos, negs, zero;
        for (auto& r : rows) {
            if (r[v] > 0) pos.push_back(r);
            else if (r[v] < 0) negs.push_back(r);
            else zero.push_back(r);
        }
        std::vector<std::vector<Rat>> next = zero;
        for (const auto& p : pos)
            for (const auto& n : negs) {
                // p scaled by -n[v], n scaled by p[v]; the v-entry cancels
                std::vector<Rat> r(p.size());
                for (size_t k = 0; k < p.size(); ++k) r[k] = p[k] * (-n[v]) + n[k] * p[v];
                next.push_back(std::move(r));
            }
        rows = std::move(next);
    }
    for (const auto& r : rows)
        if (r[nvars] < 0) return false;
    return true;
}

bool cone_contains(const Fan& f, int cone_index, const std::vector<Rat>& x) {
    const auto& c = f.max_cones[cone_index];
    // lambda_i >= 0 with sum lambda_i ray_i = x; encode equalities as two
    // inequalities and run Fourier-Motzkin on the lambdas
    const int n = static_cast<int>(c.size());
    std::vector<std::vector<Rat>> rows;
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> r(n + 1);
        r[i] = 1;
        rows.push_back(r);
    }
    for (int j = 0; j < f.dim; ++j) {
        std::vector<Rat> eq(n + 1);
        for (int i = 0; i < n; ++i) eq[i] = Rat(f.rays[c[i]][j]);
        eq[n] = -x[j];
        rows.push_back(eq);
        for (auto& v : eq) v = -v;
        rows.push_back(eq);
    }
    return fm_feasible(std::move(rows), n);
}

QuotientData quotient_data(const Fan& f) {
    // left kernel of the ray matrix = Cl-grading of the Cox variables
    std::vector<std::vector<Int>> cols;  // transpose: kernel of rays^T
    for (const auto& r : f.rays) cols.push_back(r);
    IntegerMatrix At = IntegerMatrix::from_columns(cols);
    auto ker = integer_kernel(At);
    if (ker.size() != 2) throw std::runtime_error("quotient_data: expected Cl of rank 2");
    const int n = static_cast<int>(f.rays.size());
    // normalize: first pair of variables (i,j) such that mapping deg(w_i),
    // deg(w_j) to the standard basis leaves all degrees nonnegative
    auto apply = [&](const std::array<std::array<Int, 2>, 2>& T) {
        std::vector<std::array<Int, 2>> deg(n);
        for (int v = 0; v < n; ++v) {
            deg[v][0] = T[0][0] * ker[0][v] + T[0][1] * ker[1][v];
            deg[v][1] = T[1][0] * ker[0][v] + T[1][1] * ker[1][v];
        }
        return deg;
    };
    QuotientData out;
    bool found = false;
    for (int i = 0; i < n && !found; ++i) {
        for (int j = 0; j < n && !found; ++j) {
            if (i == j) continue;
            // T * [deg_i deg_j] = I  =>  T = [deg_i deg_j]^{-1}
            Int a = ker[0][i], b = ker[0][j], c = ker[1][i], dd = ker[1][j];
            Int det = a * dd - b * c;
            if (det != 1 && det != -1) continue;
            std::array<std::array<Int, 2>, 2> T = {{{dd / det, -b / det}, {-c / det, a / det}}};
            auto deg = apply(T);
            bool nonneg = true;
            for (const auto& g : deg)
                if (g[0] < 0 || g[1] < 0) nonneg = false;
            if (nonneg) {
                out.grading = deg;
                found = true;
            }
        }
    }
    if (!found) throw std::runtime_error("quotient_data: no nonnegative normalization found");
    for (const auto& cone : f.max_cones) {
        std::vector<int> mono;
        std::set<int> in(cone.begin(), cone.end());
        for (int v = 0; v < n; ++v)
            if (!in.count(v)) mono.push_back(v);
        out.irrelevant_gens.push_back(mono);
    }
    std::sort(out.irrelevant_gens.begin(), out.irrelevant_gens.end());
    out.irrelevant_gens.erase(std::unique(out.irrelevant_gens.begin(), out.irrelevant_gens.end()),
                              out.irrelevant_gens.end());
    return out;
}

std::string QuotientData::h_description() const {
    std::ostringstream os;
    os << "{(";
    for (size_t i = 0; i < grading.size(); ++i) {
        if (i) os << ", ";
        bool wrote = false;
        const char* gens[2] = {"l", "m"};
        for (int g = 0; g < 2; ++g) {
            if (grading[i][g] == 0) continue;
            if (wrote) os << " ";
            if (grading[i][g] == 1) os << gens[g];
            else os << gens[g] << "^" << grading[i][g].get_str();
            wrote = true;
        }
        if (!wrote) os << "1";
    }
    os << ")}";
    return os.str();
}

std::vector<Int> ample_divisor_from_roof(const LadderDiagram& d, int edge_id) {
    if (std::find(d.roof.begin(), d.roof.end(), edge_id) == d.roof.end())
        throw std::invalid_argument("ample_divisor_from_roof: edge not on the roof");
    const LadderEdge* e = nullptr;
    for (const auto& ed : d.edges)
        if (ed.id == edge_id) e = &ed;
    std::vector<Int> coeffs(d.edges.size(), 0);
    for (size_t k = 0; k < d.edges.size(); ++k) {
        const auto& f = d.edges[k];
        bool in_U = f.id == edge_id;
        if (!in_U && !e->vertical && !f.vertical && f.x == e->x && f.y < e->y) in_U = true;  // directly below
        if (!in_U && e->vertical && f.vertical && f.y == e->y && f.x < e->x) in_U = true;    // directly left
        if (in_U) coeffs[k] = 1;
    }
    return coeffs;
}

std::string fan_to_json(const Fan& f) {
    json j;
    j["dimension"] = f.dim;
    auto& rays = j["rays"] = json::array();
    for (const auto& r : f.rays) {
        json row = json::array();
        for (const auto& x : r) row.push_back(x.get_si());
        rays.push_back(row);
    }
    j["maximal_cones"] = f.max_cones;
    return j.dump(2) + "\n";
}

Fan fan_from_json(const std::string& text) {
    json j = json::parse(text);
    Fan f;
    f.dim = j.at("dimension").get<int>();
    for (const auto& row : j.at("rays")) {
        std::vector<Int> r;
        for (const auto& x : row) r.emplace_back(x.get<long>());
        f.rays.push_back(std::move(r));
    }
    f.max_cones = j.at("maximal_cones").get<std::vector<std::vector<int>>>();
    return f;
}

}  // namespace gkz24
