#include "gkz24/bridge.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gkz24 {

using nlohmann::json;

bool Report::all_pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.pass; });
}

void Report::add(std::string check, std::string expected, std::string got, bool pass) {
    entries.push_back({std::move(check), std::move(expected), std::move(got), pass});
}

std::string Report::to_json() const {
    json j;
    j["name"] = name;
    j["pass"] = all_pass();
    auto& es = j["checks"] = json::array();
    for (const auto& e : entries) {
        json row;
        row["check"] = e.check;
        row["expected"] = e.expected;
        row["got"] = e.got;
        row["pass"] = e.pass;
        es.push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

std::string Report::summary() const {
    std::ostringstream os;
    for (const auto& e : entries)
        os << (e.pass ? "[pass] " : "[FAIL] ") << name << ": " << e.check
           << " (expected " << e.expected << ", got " << e.got << ")\n";
    return os.str();
}

std::array<int, 4> phi_closed_form(const std::array<int, 6>& I) {
    return {I[0] - 1, 2 - I[2] - I[4] - I[5], 2 - I[3] - I[4] - I[5], 1 - I[5]};
}

std::vector<Int> Bridge::phi_point(int quartic_index) const { return y.points[phi[quartic_index]]; }

Bridge make_bridge() {
    Bridge br;
    Fan sigma = fan_from_ladder(build_ladder_24()).fan;
    br.y = make_gkz_context(small_resolution_24(sigma));
    br.x = &QuarticIndexSet::instance();
    br.phi.resize(br.x->indices.size());
    br.fiber.resize(br.y.points.size());
    for (size_t i = 0; i < br.x->indices.size(); ++i) {
        auto J = phi_closed_form(br.x->indices[i]);
        std::vector<Int> pt(J.begin(), J.end());
        int idx = br.y.point_index(pt);
        if (idx < 0) throw std::runtime_error("bridge: Phi image outside Delta");
        br.phi[i] = idx;
        br.fiber[idx].push_back(static_cast<int>(i));
    }
    return br;
}

std::vector<Pushforward> pushforward_groups(const Bridge& br, const WeylOperator& A) {
    if (A.has_t()) throw std::invalid_argument("pushforward: specialize t first");
    // collect (I, K, coeff) terms, grouped by the Delta-side shift
    struct Term { int I, K; Rat c; };
    std::map<std::vector<Int>, std::vector<Term>> by_shift;
    Rat constant(0);
    for (const auto& [key, tp] : A.terms()) {
        Rat c = tp.coeff(0);
        if (key.poly.ve.empty() && key.der.ve.empty()) {
            constant += c;
            continue;
        }
        if (key.poly.ve.size() != 1 || key.poly.ve[0].second != 1 || key.der.ve.size() != 1 ||
            key.der.ve[0].second != 1)
            throw std::invalid_argument("pushforward: operator is not first order in a b d shape");
        int I = key.poly.ve[0].first, K = key.der.ve[0].first;
        auto shift = vec_sub(br.y.points[br.phi[K]], br.y.points[br.phi[I]]);
        by_shift[shift].push_back({I, K, c});
    }
    std::vector<Pushforward> out;
    for (const auto& [shift, terms] : by_shift) {
        // per quartic index, total coefficient (all K's in the group map to
        // the same target point)
        std::map<int, Rat> by_I;
        for (const auto& t : terms) by_I[t.I] += t.c;
        // fiber-constancy with witness
        std::map<int, Rat> by_J;
        for (const auto& [I, c] : by_I) {
            int J = br.phi[I];
            auto it = by_J.find(J);
            if (it == by_J.end()) {
                by_J.emplace(J, c);
            } else if (it->second != c) {
                std::ostringstream os;
                os << "pushforward: fiber over " << vec_to_string(br.y.points[J])
                   << " not constant: coefficient " << c.get_str() << " at a["
                   << br.x->space->labels[I].to_string() << "] vs " << it->second.get_str();
                throw std::runtime_error(os.str());
            }
        }
        for (const auto& [J, c] : by_J) {
            if (c == 0) continue;
            for (int I : br.fiber[J]) {
                if (!by_I.count(I)) {
                    std::ostringstream os;
                    os << "pushforward: fiber over " << vec_to_string(br.y.points[J])
                       << " not constant: coefficient 0 at a[" << br.x->space->labels[I].to_string()
                       << "] vs " << c.get_str();
                    throw std::runtime_error(os.str());
                }
            }
        }
        Pushforward pf{shift, WeylOperator(br.y.space)};
        for (const auto& [J, c] : by_J) {
            int tgt = br.y.point_index(vec_add(br.y.points[J], shift));
            if (tgt < 0) throw std::runtime_error("pushforward: shifted point outside Delta");
            pf.op.add_term(Monomial::var(J), Monomial::var(tgt), TPoly(c));
        }
        if (!pf.op.is_zero()) out.push_back(std::move(pf));
    }
    if (constant != 0) {
        // attach the constant to the zero-shift group
        std::vector<Int> zero(br.y.fan.dim, 0);
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const Pushforward& p) { return p.shift == zero; });
        if (it == out.end()) {
            out.push_back({zero, WeylOperator(br.y.space)});
            it = out.end() - 1;
        }
        it->op.add_term(Monomial::one(), Monomial::one(), TPoly(constant));
    }
    return out;
}

Pushforward pushforward(const Bridge& br, const WeylOperator& A) {
    if (A.has_t()) throw std::invalid_argument("pushforward: specialize t first");
    // a single common shift is required before any fiber inspection
    std::set<std::vector<Int>> shifts;
    for (const auto& [key, tp] : A.terms()) {
        if (key.poly.ve.empty() && key.der.ve.empty()) continue;
        if (key.poly.ve.size() == 1 && key.der.ve.size() == 1) {
            int I = key.poly.ve[0].first, K = key.der.ve[0].first;
            shifts.insert(vec_sub(br.y.points[br.phi[K]], br.y.points[br.phi[I]]));
        }
    }
    if (shifts.size() > 1) {
        auto it = shifts.begin();
        std::string a = vec_to_string(*it++);
        throw std::runtime_error("pushforward: mixed shifts " + a + " and " + vec_to_string(*it));
    }
    auto groups = pushforward_groups(br, A);
    if (groups.empty()) {
        std::vector<Int> zero(br.y.fan.dim, 0);
        return {zero, WeylOperator(br.y.space)};
    }
    return groups[0];
}

const std::vector<TableRow>& correspondence_table() {
    static const std::vector<TableRow> rows = {
        {"E11-E22", true, {-1, 0, 2, -1}},
        {"E11-E33", true, {1, -1, 1, 1}},
        {"E11-E44", true, {0, 1, 1, 0}},
        {"E12", false, {0, 0, 1, 0}},
        {"E13", false, {0, 0, 1, 1}},
        {"E14", false, {0, 1, 1, 1}},
        {"E23", false, {0, 0, 0, 1}},
        {"E24", false, {0, 1, 0, 1}},
        {"E34", false, {0, 1, 0, 0}},
        {"E21", false, {0, 0, -1, 0}},
        {"E31", false, {-1, 0, -1, 0}},
        {"E41", false, {-1, -1, -1, 0}},
        {"E32", false, {-1, 0, 0, 0}},
        {"E42", false, {-1, -1, 0, 0}},
        {"E43", false, {0, -1, 0, 0}},
    };
    return rows;
}

static const Root& find_root(const GkzContext& ctx, const std::vector<Int>& alpha) {
    for (const auto& r : ctx.root_list)
        if (r.alpha == alpha) return r;
    throw std::invalid_argument("not a root: " + vec_to_string(alpha));
}

static const Sl4Element& basis_element(const std::string& label) {
    for (const auto& x : sl4_basis())
        if (x.label == label) return x;
    throw std::invalid_argument("unknown sl4 basis label " + label);
}

// compare b-side operators up to sign; returns +1, -1 or nullopt
static std::optional<int> equal_up_to_sign(const WeylOperator& a, const WeylOperator& b) {
    if (a == b) return 1;
    WeylOperator neg = b.scaled(TPoly(Rat(-1)));
    if (a == neg) return -1;
    return std::nullopt;
}

Report verify_correspondence_table(const Bridge& br) {
    Report rep;
    rep.name = "correspondence_table";
    for (const auto& row : correspondence_table()) {
        const auto& x = basis_element(row.sl4_label);
        WeylOperator limit = sl4_operator(x).specialize_t(0);
        std::string check = row.sl4_label + " -> " +
                            (row.is_torus ? "torus " : "root ") + vec_to_string(row.value);
        try {
            auto pf = pushforward(br, limit);
            if (row.is_torus) {
                WeylOperator expect = torus_operator_char(br.y, row.value);
                bool ok = pf.op == expect && std::all_of(pf.shift.begin(), pf.shift.end(),
                                                         [](const Int& v) { return v == 0; });
                rep.add(check, "torus operator, shift 0", ok ? "match" : "mismatch", ok);
            } else {
                const Root& r = find_root(br.y, row.value);
                bool shift_ok = pf.shift == row.value;
                auto sgn = equal_up_to_sign(pf.op, root_operator(br.y, r));
                bool ok = shift_ok && sgn.has_value();
                rep.add(check, "Z_alpha up to sign",
                        ok ? ("match, sign " + std::to_string(*sgn)) : "mismatch", ok);
            }
        } catch (const std::exception& e) {
            rep.add(check, "pushforward defined", e.what(), false);
        }
    }

    // worked example: diagonal action, coefficient i1+i2-i3-i4 on a_I d_I
    {
        const auto& qs = *br.x;
        WeylOperator expect(qs.space);
        for (int i = 0; i < static_cast<int>(qs.indices.size()); ++i) {
            const auto& I = qs.indices[i];
            int c = I[1] + I[2] - I[3] - I[4];
            if (c) expect.add_term(Monomial::var(i), Monomial::var(i), TPoly(Rat(c)));
        }
        bool ok = sl4_operator(basis_element("E11-E22")).specialize_t(1) == expect;
        rep.add("worked example E11-E22", "sum (i1+i2-i3-i4) a_I d_I", ok ? "match" : "mismatch", ok);
    }
    // worked example: E12 gives i3, i4 shifts
    {
        const auto& qs = *br.x;
        WeylOperator expect(qs.space);
        for (int i = 0; i < static_cast<int>(qs.indices.size()); ++i) {
            const auto& I = qs.indices[i];
            if (I[3] > 0) {
                auto K = I; K[1] += 1; K[3] -= 1;
                expect.add_term(Monomial::var(i), Monomial::var(qs.find(K)), TPoly(Rat(I[3])));
            }
            if (I[4] > 0) {
                auto K = I; K[2] += 1; K[4] -= 1;
                expect.add_term(Monomial::var(i), Monomial::var(qs.find(K)), TPoly(Rat(I[4])));
            }
        }
        bool ok = sl4_operator(basis_element("E12")) == expect;
        rep.add("worked example E12", "a_I (i3 d_{I+(0,1,0,-1,0,0)} + i4 d_{I+(0,0,1,0,-1,0)})",
                ok ? "match" : "mismatch", ok);
    }
    // worked example: E14 gives -t i4 and -i5 shifts
    {
        const auto& qs = *br.x;
        WeylOperator expect(qs.space);
        for (int i = 0; i < static_cast<int>(qs.indices.size()); ++i) {
            const auto& I = qs.indices[i];
            if (I[4] > 0) {
                auto K = I; K[0] += 1; K[4] -= 1;
                expect.add_term(Monomial::var(i), Monomial::var(qs.find(K)), TPoly::t(1, Rat(-I[4])));
            }
            if (I[5] > 0) {
                auto K = I; K[1] += 1; K[5] -= 1;
                expect.add_term(Monomial::var(i), Monomial::var(qs.find(K)), TPoly(Rat(-I[5])));
            }
        }
        bool ok = sl4_operator(basis_element("E14")) == expect;
        rep.add("worked example E14", "-a_I (t i4 d_{I+(1,0,0,0,-1,0)} + i5 d_{I+(0,1,0,0,0,-1)})",
                ok ? "match" : "mismatch", ok);
    }
    return rep;
}

bool moves_exceptional_fiber(const Bridge& br, const Root& alpha) {
    find_root(br.y, alpha.alpha);  // validate
    // fiber loci of the small resolution over the singular strata
    static const std::vector<std::set<int>> loci = {{1, 3, 5}, {0, 1, 3}};  // {w2,w4,w6}, {w1,w2,w4}
    for (const auto& ideal : loci) {
        if (!ideal.count(alpha.ray_index)) continue;  // substitution fixes every generator
        // w_rho -> w_rho + lambda w^D stays in the ideal iff some ideal
        // variable divides w^D
        bool divisible = false;
        for (int i : ideal)
            if (alpha.wD[i] > 0) divisible = true;
        if (!divisible) return true;
    }
    return false;
}

Mat6 root_z_matrix(const Bridge& br, const Root& alpha) {
    find_root(br.y, alpha.alpha);
    Mat6 N = mat6_zero();
    for (int a = 0; a < 6; ++a) {
        auto we = PlueckerSpace::w_exponents(a);
        if (we[alpha.ray_index] == 0) continue;
        auto img = we;
        img[alpha.ray_index] -= 1;
        for (int i = 0; i < 6; ++i) img[i] += static_cast<int>(alpha.wD[i].get_si());
        int b = PlueckerSpace::coord_with_w_exponents(img);
        if (b < 0) throw std::runtime_error("root_z_matrix: image is not a z-monomial");
        N[a][b] += TPoly(Rat(we[alpha.ray_index]));
    }
    return N;
}

// ---- exact linear algebra over operator coefficient vectors ----

static std::vector<std::vector<Rat>> vectorize(const std::vector<const WeylOperator*>& ops) {
    std::set<TermKey> keys;
    for (const auto* op : ops) {
        if (op->has_t()) throw std::invalid_argument("span: specialize t first");
        for (const auto& [k, c] : op->terms()) keys.insert(k);
    }
    std::vector<TermKey> keyv(keys.begin(), keys.end());
    std::map<TermKey, int> kidx;
    for (size_t i = 0; i < keyv.size(); ++i) kidx[keyv[i]] = static_cast<int>(i);
    std::vector<std::vector<Rat>> m(ops.size(), std::vector<Rat>(keyv.size(), Rat(0)));
    for (size_t i = 0; i < ops.size(); ++i)
        for (const auto& [k, c] : ops[i]->terms()) m[i][kidx[k]] = c.coeff(0);
    return m;
}

static int matrix_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    const int nc = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < nc && r < static_cast<int>(m.size()); ++c) {
        int pr = -1;
        for (int i = r; i < static_cast<int>(m.size()); ++i)
            if (m[i][c] != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(m[r], m[pr]);
        Rat pv = m[r][c];
        for (auto& x : m[r]) x /= pv;
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int k = c; k < nc; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

int operator_span_rank(const std::vector<const WeylOperator*>& ops) {
    return matrix_rank(vectorize(ops));
}

bool operator_spans_equal(const std::vector<const WeylOperator*>& a,
                          const std::vector<const WeylOperator*>& b) {
    std::vector<const WeylOperator*> u = a;
    u.insert(u.end(), b.begin(), b.end());
    int ra = operator_span_rank(a), rb = operator_span_rank(b), ru = operator_span_rank(u);
    return ra == rb && rb == ru;
}

VariantSystem variant_system_Y(const Bridge& br) {
    VariantSystem out{OperatorSystem{}, {}, {}, {}, {}};
    out.system.name = "variant_tautological_Y";
    out.system.space = br.x->space;
    out.checks.name = "variant_system_Y";
    const auto& qs = *br.x;

    // type 1a: the six w_i-scaling operators pulled back through Phi
    for (int i = 0; i < 6; ++i) {
        WeylOperator op(qs.space);
        for (int idx = 0; idx < static_cast<int>(qs.indices.size()); ++idx) {
            Int c = dot(br.y.points[br.phi[idx]], br.y.fan.rays[i]) + 1;
            if (c != 0) op.add_term(Monomial::var(idx), Monomial::var(idx), TPoly(Rat(c)));
        }
        op.add_term(Monomial::one(), Monomial::one(), TPoly(1));
        out.system.generators.push_back({"scaling", "w_" + std::to_string(i + 1), op});
        out.type1.push_back(std::move(op));
    }
    // type 1b: the twelve retained root actions
    for (const auto& r : br.y.root_list) {
        if (moves_exceptional_fiber(br, r)) continue;
        WeylOperator op = substitution_operator(root_z_matrix(br, r));
        out.system.generators.push_back({"root", vec_to_string(r.alpha), op});
        out.type1.push_back(std::move(op));
    }

    // type 2: kernel of the linear extension of Phi on quartics
    IntegerMatrix phi_mat(static_cast<int>(br.y.points.size()), static_cast<int>(qs.indices.size()));
    for (int i = 0; i < static_cast<int>(qs.indices.size()); ++i) phi_mat.at(br.phi[i], i) = 1;
    auto kernel = integer_kernel(phi_mat);
    for (size_t k = 0; k < kernel.size(); ++k) {
        WeylOperator op(qs.space);
        for (int i = 0; i < static_cast<int>(qs.indices.size()); ++i)
            if (kernel[k][i] != 0) op.add_term(Monomial::one(), Monomial::var(i), TPoly(Rat(kernel[k][i])));
        out.system.generators.push_back({"polynomial", "ker_phi_" + std::to_string(k), op});
        out.type2.push_back(std::move(op));
    }
    out.checks.add("type-1 generators", "6 scalings + 12 retained roots = 18",
                   std::to_string(out.type1.size()), out.type1.size() == 18);
    out.checks.add("type-2 dimension", "21", std::to_string(out.type2.size()), out.type2.size() == 21);

    // kernel equals q0 * Sym^2
    std::vector<WeylOperator> q0sym;
    for (const auto& op : q4_operators_at(0)) q0sym.push_back(op);
    std::vector<const WeylOperator*> ka, kb;
    for (const auto& op : out.type2) ka.push_back(&op);
    for (const auto& op : q0sym) kb.push_back(&op);
    bool equal = operator_spans_equal(ka, kb);
    out.checks.add("ker(Phi) = q0*Sym2", "equal spans of dim 21", equal ? "equal" : "different", equal);

    // type 3: Veronese binomials
    int k = 0;
    for (auto& op : veronese_binomials()) {
        out.system.generators.push_back({"binomial", "veronese_" + std::to_string(k++), op});
        out.type3.push_back(std::move(op));
    }
    return out;
}

// extract the torus character of a diagonal z-substitution: solve
// d_a = sum_i c_i wexp_i(a), return n = sum_i c_i rho_i
static std::optional<std::vector<Int>> diag_character(const Bridge& br, const Mat6& K) {
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (i != j && !K[i][j].is_zero()) return std::nullopt;
    std::vector<std::vector<Rat>> m(6, std::vector<Rat>(7, Rat(0)));
    for (int a = 0; a < 6; ++a) {
        auto we = PlueckerSpace::w_exponents(a);
        for (int i = 0; i < 6; ++i) m[a][i] = Rat(we[i]);
        if (K[a][a].degree() > 0) return std::nullopt;
        m[a][6] = K[a][a].coeff(0);
    }
    // solve (underdetermined is fine, any solution gives the same character)
    int r = 0;
    std::vector<int> piv;
    for (int c = 0; c < 6; ++c) {
        int pr = -1;
        for (int i = r; i < 6; ++i)
            if (m[i][c] != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(m[r], m[pr]);
        Rat pv = m[r][c];
        for (auto& x : m[r]) x /= pv;
        for (int i = 0; i < 6; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int k2 = 0; k2 <= 6; ++k2) m[i][k2] -= f * m[r][k2];
        }
        piv.push_back(c);
        ++r;
    }
    for (int i = r; i < 6; ++i)
        if (m[i][6] != 0) return std::nullopt;
    std::vector<Rat> c(6, Rat(0));
    for (int i = 0; i < r; ++i) c[piv[i]] = m[i][6];
    // any solution c gives the same character since the gauge directions of
    // the w-torus map to zero in N
    std::vector<Rat> nq(br.y.fan.dim, Rat(0));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < br.y.fan.dim; ++j) nq[j] += c[i] * Rat(br.y.fan.rays[i][j]);
    std::vector<Int> n(br.y.fan.dim, 0);
    for (int j = 0; j < br.y.fan.dim; ++j) {
        if (nq[j].get_den() != 1) return std::nullopt;
        n[j] = nq[j].get_num();
    }
    return n;
}

Report degenerate_check(const Bridge& br) {
    Report rep;
    rep.name = "degenerate";
    auto variant = variant_system_Y(br);
    for (const auto& e : variant.checks.entries) rep.entries.push_back(e);

    // (a) every t->0 symmetry operator lands on an extended GKZ generator
    for (const auto& x : sl4_basis()) {
        WeylOperator limit = sl4_operator(x).specialize_t(0);
        std::string check = "t->0 of " + x.label;
        try {
            auto pf = pushforward(br, limit);
            bool zero_shift = std::all_of(pf.shift.begin(), pf.shift.end(),
                                          [](const Int& v) { return v == 0; });
            if (zero_shift) {
                // expect a torus character; recover it from coefficients at
                // the basis points +/- e_j
                Mat6 fam = family_action(x);
                auto n = diag_character(br, fam);
                bool ok = n && pf.op == torus_operator_char(br.y, *n);
                rep.add(check, "torus generator", ok ? "torus " + vec_to_string(*n) : "mismatch", ok);
            } else {
                const Root& r = find_root(br.y, pf.shift);
                auto sgn = equal_up_to_sign(pf.op, root_operator(br.y, r));
                bool ok = sgn.has_value() && !moves_exceptional_fiber(br, r);
                rep.add(check, "retained root generator",
                        ok ? "root " + vec_to_string(pf.shift) + " sign " + std::to_string(*sgn)
                           : "mismatch",
                        ok);
            }
        } catch (const std::exception& e) {
            rep.add(check, "generator of extended GKZ", e.what(), false);
        }
    }

    // (b) t->0 of the q4 operators spans the type-2 space
    {
        auto q0 = q4_operators_at(0);
        std::vector<const WeylOperator*> a, b;
        for (const auto& op : q0) a.push_back(&op);
        for (const auto& op : variant.type2) b.push_back(&op);
        int ra = operator_span_rank(a);
        bool ok = ra == 21 && operator_spans_equal(a, b);
        rep.add("q4(t=0) span = type-2 span", "dim 21, equal",
                "dim " + std::to_string(ra) + (ok ? ", equal" : ", different"), ok);
    }

    // (c) Veronese binomials are literally the same on both sides
    {
        auto xs = veronese_binomials();
        bool ok = xs.size() == variant.type3.size();
        for (size_t i = 0; ok && i < xs.size(); ++i) ok = xs[i] == variant.type3[i];
        rep.add("veronese binomials identical", std::to_string(xs.size()) + " binomials",
                ok ? "identical" : "different", ok);
    }

    // (d) the H-scaling combination w1 w2 w4 w6 gives 4 * Euler
    {
        const auto& qs = *br.x;
        WeylOperator sum(qs.space);
        for (int i : {0, 1, 3, 5}) sum += variant.type1[i];
        WeylOperator four_euler = quartic_euler().scaled(TPoly(Rat(4)));
        bool ok = sum == four_euler;
        // and on the Delta side through the pushforward
        bool ok2 = false;
        try {
            auto pf = pushforward(br, sum);
            ok2 = pf.op == euler_operator(br.y).scaled(TPoly(Rat(4)));
        } catch (const std::exception&) {
        }
        rep.add("scaling combination = 4*Euler", "equal on both sides",
                ok && ok2 ? "equal" : "different", ok && ok2);
    }
    return rep;
}

RootExtension extend_root_to_family(const Bridge& br, const Root& alpha) {
    if (moves_exceptional_fiber(br, alpha))
        throw std::invalid_argument("extend_root_to_family: excluded root " + vec_to_string(alpha.alpha));
    Mat6 N0 = root_z_matrix(br, alpha);
    Mat6 A = PlueckerSpace::quadric_matrix();
    // split A = a0 + t a1 and read everything off as plain rationals
    Rat a0[6][6], a1[6][6], n0[6][6];
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            a0[i][j] = A[i][j].coeff(0);
            a1[i][j] = A[i][j].coeff(1);
            n0[i][j] = N0[i][j].coeff(0);
        }
    Mat6 A0 = mat6_zero();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) A0[i][j] = TPoly(a0[i][j]);
    auto c0opt = conformal_factor(N0, A0);
    if (!c0opt || c0opt->degree() > 0)
        throw std::runtime_error("extend_root_to_family: base action is not conformal");
    Rat c0 = c0opt->coeff(0);

    // t-coefficient of the family equation:
    //   E1: N1^T a0 + a0 N1 - c1 a0 = c0 a1 - (N0^T a1 + a1 N0)
    // t^2 coefficient:
    //   E2: N1^T a1 + a1 N1 - c1 a1 = 0
    Rat rhs1[6][6];
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            Rat s = c0 * a1[i][j];
            for (int k = 0; k < 6; ++k) s -= n0[k][i] * a1[k][j] + a1[i][k] * n0[k][j];
            rhs1[i][j] = s;
        }

    // unknowns: optional single entry x = N1[a][b], plus c1
    auto try_support = [&](std::optional<std::pair<int, int>> entry)
        -> std::optional<std::pair<Rat, Rat>> {
        std::vector<std::array<Rat, 3>> m;  // cx * x + cc * c1 = rv
        for (int eq = 0; eq < 2; ++eq) {
            const auto& aq = (eq == 0) ? a0 : a1;
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) {
                    Rat cx(0);
                    if (entry) {
                        auto [a, b] = *entry;
                        if (b == i) cx += aq[a][j];
                        if (b == j) cx += aq[i][a];
                    }
                    Rat cc = -aq[i][j];
                    Rat rv = (eq == 0) ? rhs1[i][j] : Rat(0);
                    if (cx != 0 || cc != 0 || rv != 0) m.push_back({cx, cc, rv});
                }
        }
        int r = 0;
        std::vector<int> piv;
        for (int c = 0; c < 2; ++c) {
            int pr = -1;
            for (int i = r; i < static_cast<int>(m.size()); ++i)
                if (m[i][c] != 0) { pr = i; break; }
            if (pr < 0) continue;
            std::swap(m[r], m[pr]);
            Rat pv = m[r][c];
            for (auto& x : m[r]) x /= pv;
            for (int i = 0; i < static_cast<int>(m.size()); ++i) {
                if (i == r || m[i][c] == 0) continue;
                Rat f = m[i][c];
                for (int k = 0; k < 3; ++k) m[i][k] -= f * m[r][k];
            }
            piv.push_back(c);
            ++r;
        }
        for (int i = r; i < static_cast<int>(m.size()); ++i)
            if (m[i][2] != 0) return std::nullopt;
        Rat x(0), c1(0);
        for (int i = 0; i < r; ++i) {
            if (piv[i] == 0) x = m[i][2];
            else c1 = m[i][2];
        }
        return std::make_pair(x, c1);
    };

    Mat6 Afull = PlueckerSpace::quadric_matrix();
    RootExtension out{alpha, N0, TPoly(c0), false};
    if (auto sol = try_support(std::nullopt)) {
        auto c = conformal_factor(out.family, Afull);
        if (c) {
            out.conformal = *c;
            return out;
        }
    }
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            auto sol = try_support(std::make_pair(a, b));
            if (!sol || sol->first == 0) continue;
            RootExtension cand = out;
            cand.family[a][b] += TPoly::t(1, sol->first);
            cand.extended = true;
            auto c = conformal_factor(cand.family, Afull);
            if (!c) continue;
            cand.conformal = *c;
            return cand;
        }
    throw std::runtime_error("extend_root_to_family: no single-entry extension for " +
                             vec_to_string(alpha.alpha));
}

Report reconstruct_X_system(const Bridge& br) {
    Report rep;
    rep.name = "reconstruct";

    // (i) drop the moving roots
    std::vector<Root> retained;
    int moving = 0;
    for (const auto& r : br.y.root_list) {
        if (moves_exceptional_fiber(br, r)) ++moving;
        else retained.push_back(r);
    }
    rep.add("moving roots removed", "2", std::to_string(moving), moving == 2);
    rep.add("retained roots", "12", std::to_string(retained.size()), retained.size() == 12);

    // (ii) extend every retained root into the family
    std::vector<RootExtension> ext;
    bool all_ok = true;
    int nontrivial = 0;
    for (const auto& r : retained) {
        try {
            ext.push_back(extend_root_to_family(br, r));
            if (ext.back().extended) ++nontrivial;
        } catch (const std::exception& e) {
            all_ok = false;
            rep.add("extension of " + vec_to_string(r.alpha), "solvable", e.what(), false);
        }
    }
    rep.add("extensions solvable", "12 (8 with a t-term)",
            std::to_string(ext.size()) + " (" + std::to_string(nontrivial) + " with a t-term)",
            all_ok && ext.size() == 12 && nontrivial == 8);
    for (const auto& e : ext) {
        if (!(e.root.alpha == std::vector<Int>{0, 0, 1, 1})) continue;
        // the worked extension: z34 -> z34 + l z14 needs z23 -> z23 - t l z12
        bool ok = e.family[5][2] == TPoly(1) && e.family[3][0] == TPoly::t(1, Rat(-1));
        rep.add("worked extension (0,0,1,1)", "z34 <- z14 with z23 <- -t z12",
                ok ? "match" : "mismatch", ok);
    }

    // (iii) commutators of extended pairs generate the torus directions
    std::vector<std::vector<Int>> chars;
    std::vector<Mat6> diag_comms;
    for (size_t i = 0; i < ext.size(); ++i)
        for (size_t j = i + 1; j < ext.size(); ++j) {
            Mat6 Ni = ext[i].family, Nj = ext[j].family;
            // evaluate at t=1
            Mat6 Ni1 = mat6_zero(), Nj1 = mat6_zero();
            for (int a = 0; a < 6; ++a)
                for (int b = 0; b < 6; ++b) {
                    Ni1[a][b] = TPoly(Ni[a][b].eval(1));
                    Nj1[a][b] = TPoly(Nj[a][b].eval(1));
                }
            Mat6 K = mat6_commutator(Ni1, Nj1);
            if (mat6_is_zero(K)) continue;
            auto n = diag_character(br, K);
            if (n) {
                chars.push_back(*n);
                diag_comms.push_back(K);
            }
        }
    {
        std::vector<std::vector<Rat>> m;
        for (const auto& n : chars) {
            std::vector<Rat> row;
            for (const auto& v : n) row.emplace_back(v);
            m.push_back(std::move(row));
        }
        auto rank_vecs = [](std::vector<std::vector<Rat>> mm) {
            int r = 0;
            if (mm.empty()) return 0;
            const int nc = static_cast<int>(mm[0].size());
            for (int c = 0; c < nc && r < static_cast<int>(mm.size()); ++c) {
                int pr = -1;
                for (int i = r; i < static_cast<int>(mm.size()); ++i)
                    if (mm[i][c] != 0) { pr = i; break; }
                if (pr < 0) continue;
                std::swap(mm[r], mm[pr]);
                for (int i = 0; i < static_cast<int>(mm.size()); ++i) {
                    if (i == r || mm[i][c] == 0) continue;
                    Rat f = mm[i][c] / mm[r][c];
                    for (int k = 0; k < nc; ++k) mm[i][k] -= f * mm[r][k];
                }
                ++r;
            }
            return r;
        };
        std::vector<std::vector<Rat>> target = {
            {Rat(-1), Rat(0), Rat(2), Rat(-1)}, {Rat(1), Rat(-1), Rat(1), Rat(1)},
            {Rat(1), Rat(0), Rat(0), Rat(1)}};
        auto uni = m;
        uni.insert(uni.end(), target.begin(), target.end());
        bool ok = rank_vecs(m) == 3 && rank_vecs(target) == 3 && rank_vecs(uni) == 3;
        rep.add("commutator torus span", "3-dim, = span{(-1,0,2,-1),(1,-1,1,1),(1,0,0,1)}",
                "dim " + std::to_string(rank_vecs(m)) + (ok ? ", equal" : ", different"), ok);
    }

    // (iv) t=1 spans match the tautological system on X
    {
        std::vector<WeylOperator> recon;
        for (const auto& e : ext) recon.push_back(substitution_operator(e.family).specialize_t(1));
        for (const auto& K : diag_comms) recon.push_back(substitution_operator(K));
        recon.push_back(quartic_euler());
        std::vector<WeylOperator> target;
        for (const auto& x : sl4_basis()) target.push_back(sl4_operator(x).specialize_t(1));
        target.push_back(quartic_euler());
        std::vector<const WeylOperator*> a, b;
        for (const auto& op : recon) a.push_back(&op);
        for (const auto& op : target) b.push_back(&op);
        int ra = operator_span_rank(a), rb = operator_span_rank(b);
        bool ok = ra == 16 && rb == 16 && operator_spans_equal(a, b);
        rep.add("t=1 symmetry span", "16-dim (15 symmetries + Euler), equal",
                "dim " + std::to_string(ra) + " vs " + std::to_string(rb) +
                    (ok ? ", equal" : ", different"),
                ok);
        rep.add("symmetry count", "15",
                std::to_string(ext.size() + 3), ext.size() + 3 == 15);
    }

    // type-2 reinstatement: solve each ker(Phi) vector as q0 * (deg-2 form),
    // reinstate t z12 z34 * (same form), compare the t=1 span with Q4
    {
        auto variant = variant_system_Y(br);
        auto q0ops = q4_operators_at(0);   // q0 * z^K basis
        auto qtops = q4_operators();       // q_t * z^K
        // express each type-2 vector in the q0 basis by exact elimination
        std::vector<const WeylOperator*> basis;
        for (const auto& op : q0ops) basis.push_back(&op);
        // build matrix of basis + unknown rhs per type-2 op
        std::set<TermKey> keys;
        for (const auto* op : basis)
            for (const auto& [k, c] : op->terms()) keys.insert(k);
        for (const auto& op : variant.type2)
            for (const auto& [k, c] : op.terms()) keys.insert(k);
        std::vector<TermKey> keyv(keys.begin(), keys.end());
        std::map<TermKey, int> kidx;
        for (size_t i = 0; i < keyv.size(); ++i) kidx[keyv[i]] = static_cast<int>(i);
        const int nb = static_cast<int>(basis.size());
        std::vector<WeylOperator> reinstated;
        bool solvable = true;
        for (const auto& target : variant.type2) {
            // solve sum_k x_k q0ops[k] = target
            std::vector<std::vector<Rat>> m(keyv.size(), std::vector<Rat>(nb + 1, Rat(0)));
            for (int k = 0; k < nb; ++k)
                for (const auto& [key, c] : basis[k]->terms()) m[kidx[key]][k] = c.coeff(0);
            for (const auto& [key, c] : target.terms()) m[kidx[key]][nb] = c.coeff(0);
            // gaussian
            int r = 0;
            std::vector<int> piv;
            for (int c = 0; c < nb && r < static_cast<int>(m.size()); ++c) {
                int pr = -1;
                for (int i = r; i < static_cast<int>(m.size()); ++i)
                    if (m[i][c] != 0) { pr = i; break; }
                if (pr < 0) continue;
                std::swap(m[r], m[pr]);
                Rat pv = m[r][c];
                for (auto& x : m[r]) x /= pv;
                for (int i = 0; i < static_cast<int>(m.size()); ++i) {
                    if (i == r || m[i][c] == 0) continue;
                    Rat f = m[i][c];
                    for (int k = 0; k <= nb; ++k) m[i][k] -= f * m[r][k];
                }
                piv.push_back(c);
                ++r;
            }
            for (int i = r; i < static_cast<int>(m.size()); ++i)
                if (m[i][nb] != 0) solvable = false;
            if (!solvable) break;
            WeylOperator rt(br.x->space);
            for (int i = 0; i < r; ++i) {
                if (m[i][nb] == 0) continue;
                rt += qtops[piv[i]].scaled(TPoly(m[i][nb]));
            }
            reinstated.push_back(rt.specialize_t(1));
        }
        std::vector<const WeylOperator*> a, b;
        for (const auto& op : reinstated) a.push_back(&op);
        auto q1ops = q4_operators_at(1);
        for (const auto& op : q1ops) b.push_back(&op);
        bool ok = solvable && operator_span_rank(a) == 21 && operator_spans_equal(a, b);
        rep.add("reinstated type-2 span at t=1", "Q4 (dim 21)",
                std::string(solvable ? "" : "not expressible in q0*Sym2; ") + "dim " +
                    std::to_string(operator_span_rank(a)) + (ok ? ", equal" : ", different"),
                ok);
    }
    return rep;
}

}  // namespace gkz24
