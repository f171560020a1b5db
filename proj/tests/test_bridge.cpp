#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gkz24/bridge.hpp"

using namespace gkz24;

static std::vector<Int> iv(std::initializer_list<long> e) {
    std::vector<Int> v;
    for (long x : e) v.emplace_back(x);
    return v;
}

static const Bridge& br() {
    static Bridge b = make_bridge();
    return b;
}

TEST_CASE("phi on the printed examples") {
    CHECK(phi_closed_form({4, 0, 0, 0, 0, 0}) == std::array<int, 4>{3, 2, 2, 1});
    CHECK(phi_closed_form({0, 0, 0, 0, 0, 4}) == std::array<int, 4>{-1, -2, -2, -3});
    CHECK(phi_closed_form({0, 1, 0, 0, 1, 2}) == phi_closed_form({0, 0, 1, 1, 0, 2}));
}

TEST_CASE("phi closed form agrees with the vertex formula on all 126 indices") {
    const std::array<std::array<int, 4>, 6> v = {{{0, 0, 0, 0},
                                                  {-1, 0, 0, 0},
                                                  {-1, -1, 0, 0},
                                                  {-1, 0, -1, 0},
                                                  {-1, -1, -1, 0},
                                                  {-1, -1, -1, -1}}};
    for (const auto& I : br().x->indices) {
        std::array<int, 4> sum = {3, 2, 2, 1};
        for (int k = 0; k < 6; ++k)
            for (int c = 0; c < 4; ++c) sum[c] += I[k] * v[k][c];
        CHECK(sum == phi_closed_form(I));
    }
}

TEST_CASE("phi is surjective with kernel of dimension 21") {
    // every point hit
    for (const auto& f : br().fiber) CHECK(!f.empty());
    CHECK(br().y.points.size() == 105);
    // 126 - 21 cross-check through the fibers
    size_t excess = 0;
    for (const auto& f : br().fiber) excess += f.size() - 1;
    CHECK(excess == 21);
    // fibers differ by multiples of (0,1,-1,-1,1,0) in the middle coordinates
    for (const auto& f : br().fiber)
        for (size_t k = 1; k < f.size(); ++k) {
            const auto& a = br().x->indices[f[0]];
            const auto& b = br().x->indices[f[k]];
            CHECK(a[0] == b[0]);
            CHECK(a[5] == b[5]);
            int l = b[1] - a[1];
            CHECK(b[1] - a[1] == l);
            CHECK(b[2] - a[2] == -l);
            CHECK(b[3] - a[3] == -l);
            CHECK(b[4] - a[4] == l);
        }
}

TEST_CASE("pushforward of the diagonal symmetry") {
    auto pf = pushforward(br(), sl4_operator(Sl4Element::H(1, 2)).specialize_t(1));
    CHECK(pf.shift == iv({0, 0, 0, 0}));
    CHECK(pf.op == torus_operator_char(br().y, iv({-1, 0, 2, -1})));
}

TEST_CASE("pushforward of E12 is the root operator") {
    auto pf = pushforward(br(), sl4_operator(Sl4Element::E(1, 2)).specialize_t(1));
    CHECK(pf.shift == iv({0, 0, 1, 0}));
    for (const auto& r : br().y.root_list)
        if (r.alpha == pf.shift) CHECK(pf.op == root_operator(br().y, r));
}

TEST_CASE("pushforward of the degenerate E14 is minus the root operator") {
    auto pf = pushforward(br(), sl4_operator(Sl4Element::E(1, 4)).specialize_t(0));
    CHECK(pf.shift == iv({0, 1, 1, 1}));
    for (const auto& r : br().y.root_list)
        if (r.alpha == pf.shift)
            CHECK(pf.op == root_operator(br().y, r).scaled(TPoly(Rat(-1))));
}

TEST_CASE("mixed shifts at t=1 are reported") {
    CHECK_THROWS_WITH_AS(pushforward(br(), sl4_operator(Sl4Element::E(1, 4)).specialize_t(1)),
                         doctest::Contains("mixed shifts"), std::runtime_error);
}

TEST_CASE("fiber-constancy witness on a broken operator") {
    // perturb one coefficient of a pushable operator inside a fat fiber
    WeylOperator op = sl4_operator(Sl4Element::H(1, 2)).specialize_t(1);
    int fat = -1;
    for (size_t j = 0; j < br().fiber.size(); ++j)
        if (br().fiber[j].size() >= 2) fat = static_cast<int>(j);
    REQUIRE(fat >= 0);
    int I = br().fiber[fat][0];
    op.add_term(Monomial::var(I), Monomial::var(I), TPoly(Rat(1, 7)));
    CHECK_THROWS_WITH_AS(pushforward(br(), op), doctest::Contains("not constant"),
                         std::runtime_error);
}

TEST_CASE("fiber constancy of every matched operator") {
    // the t -> 0 limit of every basis element pushes forward: its coefficient
    // function is constant on the fibers of Phi (the i1+i2-i3-i4 identity and
    // its analogues)
    for (const auto& x : sl4_basis()) CHECK_NOTHROW(pushforward(br(), sl4_operator(x).specialize_t(0)));
    // elements without a t-twist push forward at every specialization; the
    // twisted ones lose the correspondence away from t = 0 (mixed shifts or a
    // fiber-varying coefficient), which is why the theorems degenerate first
    for (const Rat& t : {Rat(1), Rat(5, 7)}) {
        for (const auto& x : sl4_basis()) {
            auto op = sl4_operator(x);
            if (!op.has_t()) {
                CHECK_NOTHROW(pushforward(br(), op.specialize_t(t)));
            } else {
                CHECK_THROWS_AS(pushforward(br(), op.specialize_t(t)), std::runtime_error);
            }
        }
    }
}

TEST_CASE("correspondence table verifies") {
    auto rep = verify_correspondence_table(br());
    for (const auto& e : rep.entries) {
        INFO(e.check, " expected ", e.expected, " got ", e.got);
        CHECK(e.pass);
    }
    CHECK(rep.entries.size() == 18);  // 15 rows + 3 worked examples
    CHECK(rep.all_pass());
}

TEST_CASE("exactly the two diagonal roots move the exceptional fibers") {
    int moving = 0;
    for (const auto& r : br().y.root_list) {
        bool m = moves_exceptional_fiber(br(), r);
        if (m) ++moving;
        bool is_diag = r.alpha == iv({1, 1, 1, 1}) || r.alpha == iv({-1, -1, -1, -1});
        CHECK(m == is_diag);
    }
    CHECK(moving == 2);
    Root fake;
    fake.alpha = iv({3, 0, 0, 0});
    CHECK_THROWS_AS(moves_exceptional_fiber(br(), fake), std::invalid_argument);
}

TEST_CASE("root actions on the z-coordinates") {
    // (0,0,1,0): w4 -> w4 + l w2 gives z23 <- z13 and z24 <- z14
    for (const auto& r : br().y.root_list) {
        if (r.alpha == iv({0, 0, 1, 0})) {
            auto N = root_z_matrix(br(), r);
            CHECK(N[3][1] == TPoly(1));
            CHECK(N[4][2] == TPoly(1));
        }
        if (r.alpha == iv({1, 1, 1, 1})) {
            auto N = root_z_matrix(br(), r);  // w6 -> w6 + l w1: z34 <- z12
            CHECK(N[5][0] == TPoly(1));
        }
        if (r.alpha == iv({0, 0, 1, 1})) {
            auto N = root_z_matrix(br(), r);  // w6 -> w6 + l w2w5: z34 <- z14
            CHECK(N[5][2] == TPoly(1));
        }
    }
}

TEST_CASE("variant tautological system") {
    auto vs = variant_system_Y(br());
    CHECK(vs.checks.all_pass());
    CHECK(vs.type1.size() == 18);  // 6 scalings + 12 retained roots
    CHECK(vs.type2.size() == 21);
    CHECK(vs.type3.size() == 28155);
    // each type-1 root pullback pushes forward onto +Z_alpha
    int root_like = 0;
    for (const auto& g : vs.system.generators) {
        if (g.tag != "root") continue;
        ++root_like;
        auto pf = pushforward(br(), g.op);
        for (const auto& r : br().y.root_list)
            if (vec_to_string(r.alpha) == g.provenance) {
                CHECK(pf.shift == r.alpha);
                CHECK(pf.op == root_operator(br().y, r));
            }
    }
    CHECK(root_like == 12);
    // scaling pullbacks push onto the scaling operators
    int scalings = 0;
    for (const auto& g : vs.system.generators) {
        if (g.tag != "scaling") continue;
        auto pf = pushforward(br(), g.op);
        CHECK(pf.op == scaling_operator(br().y, scalings++));
    }
    CHECK(scalings == 6);
}

TEST_CASE("degeneration check passes") {
    auto rep = degenerate_check(br());
    for (const auto& e : rep.entries) {
        INFO(e.check, " expected ", e.expected, " got ", e.got);
        CHECK(e.pass);
    }
}

TEST_CASE("root extensions") {
    auto root_at = [&](std::initializer_list<long> a) -> const Root& {
        auto v = iv(a);
        for (const auto& r : br().y.root_list)
            if (r.alpha == v) return r;
        REQUIRE(false);
        static Root dummy;
        return dummy;
    };
    // semi-simple root: nothing to extend
    auto e1 = extend_root_to_family(br(), root_at({0, 0, 1, 0}));
    CHECK_FALSE(e1.extended);
    CHECK(e1.conformal.is_zero());
    // the worked example (0,0,1,1): z34 -> z34 + l z14 needs z23 -> z23 - t l z12
    auto e2 = extend_root_to_family(br(), root_at({0, 0, 1, 1}));
    CHECK(e2.extended);
    CHECK(e2.family[5][2] == TPoly(1));
    CHECK(e2.family[3][0] == TPoly::t(1, Rat(-1)));
    CHECK(e2.conformal.is_zero());
    // excluded roots are rejected
    CHECK_THROWS_AS(extend_root_to_family(br(), root_at({1, 1, 1, 1})), std::invalid_argument);
}

TEST_CASE("pushforward of limits commutes with brackets on all basis pairs") {
    // compare push(limit([A,B])) with [push(limit A), push(limit B)] whenever
    // the left side is defined; all 105 pairs match
    const auto& basis = sl4_basis();
    std::vector<WeylOperator> full, lim;
    std::vector<Pushforward> pf;
    for (const auto& x : basis) {
        full.push_back(sl4_operator(x));
        lim.push_back(full.back().specialize_t(0));
        pf.push_back(pushforward(br(), lim.back()));
    }
    int checked = 0;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            auto bracket_t = op_commutator(full[i], full[j]);
            auto lhs = pushforward(br(), bracket_t.specialize_t(0));
            auto rhs = op_commutator(pf[i].op, pf[j].op);
            CHECK(lhs.op == rhs);
            ++checked;
        }
    CHECK(checked == 105);
}

TEST_CASE("reconstruction check passes") {
    auto rep = reconstruct_X_system(br());
    for (const auto& e : rep.entries) {
        INFO(e.check, " expected ", e.expected, " got ", e.got);
        CHECK(e.pass);
    }
}

TEST_CASE("retained roots are exactly the table root actions") {
    std::set<std::vector<Int>> retained;
    for (const auto& r : br().y.root_list)
        if (!moves_exceptional_fiber(br(), r)) retained.insert(r.alpha);
    std::set<std::vector<Int>> table;
    for (const auto& row : correspondence_table())
        if (!row.is_torus) table.insert(row.value);
    CHECK(retained.size() == 12);
    CHECK(retained == table);
}

TEST_CASE("report serialization") {
    Report rep;
    rep.name = "demo";
    rep.add("a", "1", "1", true);
    rep.add("b", "2", "3", false);
    CHECK_FALSE(rep.all_pass());
    CHECK(rep.to_json().find("\"pass\": false") != std::string::npos);
    CHECK(rep.summary().find("[FAIL] demo: b") != std::string::npos);
}
