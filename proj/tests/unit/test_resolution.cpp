#include "doctest.h"
#include "tac/complex_ops.hpp"
#include "tac/homotopy.hpp"
#include "tac/resolution.hpp"

using namespace tac;

namespace {

const PrimeField K(32003);

QuotientRing ring2(const std::vector<std::string>& gens,
                   const std::vector<std::string>& vars = {"x", "y"}) {
    QuotientRing a = QuotientRing::polynomial_ring(K, vars);
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(a.parse(g));
    return QuotientRing(K, vars, ps);
}

ModulePresentation md(const QuotientRing& r, const std::string& rel) {
    return ModulePresentation(parse_matrix(r, rel));
}

ChainComplex example_window(const QuotientRing& r) {
    std::map<int, std::size_t> ranks{{-2, 2}, {-1, 1}, {0, 1}, {1, 2}, {2, 3}};
    std::map<int, FreeMap> diffs;
    diffs.emplace(-1, parse_matrix(r, "[[x],[y]]"));
    diffs.emplace(0, parse_matrix(r, "[[x*y]]"));
    diffs.emplace(1, parse_matrix(r, "[[x,y]]"));
    diffs.emplace(2, parse_matrix(r, "[[x,0,-y],[0,y,x]]"));
    return ChainComplex(r, -2, 2, std::move(ranks), std::move(diffs));
}

ChainComplex x_periodic(const QuotientRing& r) {
    std::map<int, std::size_t> ranks{{0, 1}, {1, 1}};
    std::map<int, FreeMap> diffs;
    diffs.emplace(1, parse_matrix(r, "[[x]]"));
    return ChainComplex(r, 0, 1, std::move(ranks), std::move(diffs), Periodicity{1, 0, 1});
}

}  // namespace

TEST_CASE("restrict_scalars rewrites a presentation over the smaller ring") {
    auto q = ring2({"x^2"});
    RingMap phi(q, {q.parse("y^2")});
    const QuotientRing& r = phi.tgt;

    auto res = restrict_scalars(md(r, "[[x,y]]"), phi);
    CHECK(res.ring().same_ring(q));
    CHECK(res.gens() == 1);
    // the appended column y^2 is already in the span of x and y
    CHECK(print_matrix(res.relations()) == "[[x,y]]");

    auto rx = restrict_scalars(md(r, "[[x]]"), phi);
    CHECK(print_matrix(rx.relations()) == "[[x,y^2]]");

    auto ry = restrict_scalars(md(r, "[[y]]"), phi);
    CHECK(print_matrix(ry.relations()) == "[[y]]");

    CHECK_THROWS_AS(restrict_scalars(md(q, "[[x]]"), phi), RingError);
}

TEST_CASE("minimal resolution of k over the hypersurface alternates") {
    auto q = ring2({"x^2"});
    auto r = minimal_free_resolution(md(q, "[[x,y]]"), 6);
    CHECK(r.c.lo() == 0);
    CHECK(r.c.hi() == 6);
    CHECK(r.c.rank(0) == 1);
    for (int n = 1; n <= 6; ++n) CHECK(r.c.rank(n) == 2);
    CHECK(print_matrix(r.c.diff(1)) == "[[x,y]]");
    CHECK(print_matrix(r.c.diff(2)) == "[[x,-y],[0,x]]");
    CHECK(print_matrix(r.c.diff(3)) == "[[x,y],[0,x]]");
    CHECK(r.c.diff(4) == r.c.diff(2));
    CHECK(r.c.diff(5) == r.c.diff(3));
    CHECK(r.minimal);
    ensure_valid(r.c, "test");

    auto aug = r.c.augmentation();
    CHECK(aug.element_is_zero({q.parse("x")}));
    CHECK(aug.element_is_zero({q.parse("y")}));
    CHECK(!aug.element_is_zero({q.parse("1")}));
}

TEST_CASE("resolution of k over the Artinian quotient grows linearly") {
    auto r = ring2({"x^2", "y^2"});
    auto res = minimal_free_resolution(md(r, "[[x,y]]"), 5);
    for (int n = 0; n <= 5; ++n) CHECK(res.c.rank(n) == static_cast<std::size_t>(n) + 1);
    CHECK(res.minimal);
    ensure_valid(res.c, "test");
}

TEST_CASE("presentations are pruned before resolving") {
    auto r = ring2({"x^2", "y^2"});
    // 1*g0 + y*g1 = 0 eliminates g0, leaving a free module
    ModulePresentation m(r, 2, parse_matrix(r, "[[1],[y]]"));
    auto res = minimal_free_resolution(m, 3);
    CHECK(res.c.rank(0) == 1);
    CHECK(res.c.rank(1) == 0);
    CHECK(res.c.rank(2) == 0);
    CHECK(res.proj.compose(res.incl).is_identity());
    CHECK(res.incl.rows() == 2);
    CHECK(res.incl.cols() == 1);
}

TEST_CASE("periodicity detection finds the smallest period and onset") {
    auto q = ring2({"x^2"});
    auto f = minimal_free_resolution(md(q, "[[x,y]]"), 6);
    auto per = detect_periodicity(f.c);
    REQUIRE(per.has_value());
    CHECK(per->period == 2);
    CHECK(per->onset == 2);

    auto a = ring2({"x^2"}, {"x"});
    auto g = minimal_free_resolution(md(a, "[[x]]"), 5);
    auto pg = detect_periodicity(g.c);
    REQUIRE(pg.has_value());
    CHECK(pg->period == 1);
    CHECK(pg->onset == 1);

    auto p = ring2({});
    auto h = minimal_free_resolution(md(p, "[[x,y]]"), 5);
    CHECK(h.c.rank(2) == 1);  // Koszul complex on two variables
    CHECK(h.c.rank(3) == 0);
    CHECK(!detect_periodicity(h.c).has_value());
}

TEST_CASE("mcm syzygy shifts past the number of variables") {
    auto r = ring2({"x^2", "y^2"});
    auto s = mcm_syzygy(md(r, "[[x,y]]"));
    CHECK(s.shift == 3);
    CHECK(s.pres.gens() == 4);
    CHECK(s.pres.relations().cols() == 5);
}

TEST_CASE("lifts through resolutions exist and are unique up to homotopy") {
    auto q = ring2({"x^2"});
    auto f = minimal_free_resolution(md(q, "[[x,y]]"), 6).c;

    auto lifted = lift_through(FreeMap::identity(q, 1), f, f);
    lifted.ensure_chain_map(1, 6, "test");
    CHECK(lifted.component(0).is_identity());
    auto s = find_homotopy(lifted, ChainMap::identity(f, 0, 6), 0, 5);
    REQUIRE(s.has_value());
    CHECK(s->certifies(lifted, ChainMap::identity(f, 0, 6), 0, 5));

    // multiplication by x induces zero on k, so its lift is null homotopic
    auto xmap = lift_through(FreeMap::scalar(q, 1, q.parse("x")), f, f);
    xmap.ensure_chain_map(1, 6, "test");
    auto z = ChainMap::zero(f, f);
    auto sx = find_homotopy(xmap, z, 0, 5);
    REQUIRE(sx.has_value());
    CHECK(sx->certifies_null(xmap, 0, 5));

    // the identity does not lift zero, and no window homotopy pretends it does
    CHECK(!find_homotopy(ChainMap::identity(f, 0, 6), z, 0, 5).has_value());
}

TEST_CASE("morphisms of totally acyclic complexes extend downward") {
    auto q = ring2({"x^2"});
    auto c = x_periodic(q);
    std::map<int, FreeMap> comps;
    for (int n = 2; n <= 5; ++n) comps.emplace(n, FreeMap::identity(q, 1));
    ChainMap top(c, c, std::move(comps));
    auto full = extend_morphism(top, -3);
    CHECK(full.lo() == -3);
    full.ensure_chain_map(-2, 5, "test");
    for (int n = 2; n <= 5; ++n) CHECK(full.component(n).is_identity());
}

TEST_CASE("periodic difference gets a periodic homotopy") {
    auto r = ring2({"x^2", "y^2"});
    auto c = x_periodic(r);
    std::map<int, FreeMap> xc, zc;
    for (int n = 0; n <= 1; ++n) {
        xc.emplace(n, FreeMap::scalar(r, 1, r.parse("x")));
        zc.emplace(n, FreeMap::zero(r, 1, 1));
    }
    ChainMap f(c, c, std::move(xc), Periodicity{1, 0, 1});
    ChainMap z(c, c, std::move(zc), Periodicity{1, 0, 1});
    auto s = find_homotopy(f, z, -3, 3);
    REQUIRE(s.has_value());
    CHECK(s->periodicity().has_value());
    // a periodic certificate works arbitrarily far from the search window
    CHECK(s->certifies_null(f, -9, 9));
}

TEST_CASE("complete resolution over the hypersurface extends the periodic tail") {
    auto q = ring2({"x^2"});
    auto cr = complete_resolution(md(q, "[[x,y]]"));
    CHECK(!cr.pd.has_value());
    CHECK(cr.agreement == 1);
    REQUIRE(cr.u.periodicity().has_value());
    CHECK(cr.u.periodicity()->period == 2);
    // the stable comparison is bijective only from the agreement degree up
    CHECK(cr.u.rank(0) == 2);
    CHECK(cr.f.rank(0) == 1);
    CHECK(cr.u.rank(-7) == 2);
    CHECK(cr.rho.component(1).is_identity());
    CHECK(cr.rho.component(6).is_identity());
    CHECK(print_matrix(cr.rho.component(0)) == "[[1,0]]");
    cr.rho.ensure_chain_map(0, 8, "test");
    CHECK(total_acyclicity_check(cr.u, -6, 6).ok);
}

TEST_CASE("finite projective dimension yields the zero complete resolution") {
    auto q = ring2({"x^2"});
    auto cr = complete_resolution(md(q, "[[y]]"));
    CHECK(cr.u.is_zero());
    REQUIRE(cr.pd.has_value());
    CHECK(*cr.pd == 1);
    CHECK(cr.agreement == 2);
    CHECK(cr.f.rank(0) == 1);
    CHECK(cr.f.rank(1) == 1);
    CHECK(cr.f.rank(2) == 0);

    // the zero module has nothing to resolve
    auto zr = complete_resolution(md(q, "[[1]]"));
    CHECK(zr.u.is_zero());
    CHECK(*zr.pd == -1);
}

TEST_CASE("the restricted x-multiplication module is two-periodic with y^2") {
    auto q = ring2({"x^2"});
    auto res = minimal_free_resolution(md(q, "[[x,y^2]]"), 6);
    CHECK(print_matrix(res.c.diff(2)) == "[[x,-y^2],[0,x]]");
    CHECK(print_matrix(res.c.diff(3)) == "[[x,y^2],[0,x]]");
    auto per = detect_periodicity(res.c);
    REQUIRE(per.has_value());
    CHECK(per->period == 2);
    CHECK(per->onset == 2);

    auto cr = complete_resolution(md(q, "[[x,y^2]]"));
    CHECK(cr.agreement == 1);
    CHECK(cr.u.rank(3) == 2);
    CHECK(total_acyclicity_check(cr.u, -5, 5).ok);
}

TEST_CASE("splice and periodic extension agree over k[x]/(x^2)") {
    auto a = ring2({"x^2"}, {"x"});
    auto m = md(a, "[[x]]");
    auto p = complete_resolution(m, 8);
    REQUIRE(p.u.periodicity().has_value());
    CHECK(p.u.periodicity()->period == 1);
    CHECK(p.agreement == 0);

    auto s = complete_resolution_by_splice(m, 8);
    CHECK(s.u.lo() == -9);
    CHECK(s.u.hi() == 8);
    for (int n = -5; n <= 5; ++n) CHECK(s.u.rank(n) == 1);
    CHECK(print_matrix(s.u.diff(0)) == "[[x]]");
    CHECK(print_matrix(s.u.diff(-3)) == "[[x]]");

    auto eq = homotopy_equivalent(p.u, s.u, -3, 3);
    REQUIRE(eq.has_value());
    eq->fwd.ensure_chain_map(-2, 3, "test");
    eq->bwd.ensure_chain_map(-2, 3, "test");
    CHECK(eq->fwd_bwd.certifies(eq->fwd.compose(eq->bwd), ChainMap::identity(s.u, -3, 3), -3, 3));
    CHECK(eq->bwd_fwd.certifies(eq->bwd.compose(eq->fwd), ChainMap::identity(p.u, -3, 3), -3, 3));
}

TEST_CASE("splice over the Artinian quotient reproduces the displayed window") {
    auto r = ring2({"x^2", "y^2"});
    auto sp = complete_resolution_by_splice(md(r, "[[x,y]]"), 6);
    CHECK(sp.u.rank(0) == 1);
    CHECK(sp.u.rank(1) == 2);
    CHECK(sp.u.rank(2) == 3);
    CHECK(sp.u.rank(-1) == 1);
    CHECK(sp.u.rank(-2) == 2);
    CHECK(sp.u.rank(-3) == 3);
    // the evaluation seam is multiplication into the socle
    CHECK(print_matrix(sp.u.diff(0)) == "[[x*y]]");
    CHECK(print_matrix(sp.u.diff(-1)) == "[[x],[y]]");
    CHECK(sp.agreement == 0);
    sp.rho.ensure_chain_map(0, 6, "test");

    auto eq = homotopy_equivalent(sp.u, example_window(r), -1, 1);
    REQUIRE(eq.has_value());
}

TEST_CASE("distinct stable modules are not identified") {
    auto q = ring2({"x^2"});
    auto u1 = complete_resolution(md(q, "[[x,y]]")).u;
    auto u2 = complete_resolution(md(q, "[[x,y^2]]")).u;
    CHECK(!homotopy_equivalent(u1, u2, -2, 2).has_value());
}

TEST_CASE("pruning collapses the cone of the identity") {
    auto r = ring2({"x^2", "y^2"});
    auto c = example_window(r);
    auto cn = cone(ChainMap::identity(c, -2, 2));
    auto pr = prune_complex(cn, -2, 3);
    for (int n = -2; n <= 3; ++n) CHECK(pr.c.rank(n) == 0);

    // and the identity of a contractible complex is null homotopic
    auto idc = ChainMap::identity(cn, -2, 3);
    auto zc = ChainMap::zero(cn, cn);
    auto s = find_homotopy(idc, zc, -1, 2);
    REQUIRE(s.has_value());
    CHECK(s->certifies_null(idc, -1, 2));
}

TEST_CASE("pruning leaves a minimal complex alone") {
    auto q = ring2({"x^2"});
    auto f = minimal_free_resolution(md(q, "[[x,y]]"), 4).c;
    auto pr = prune_complex(f, 0, 4);
    CHECK(complexes_equal(pr.c, f, 0, 4));
    CHECK(pr.incl.component(2).is_identity());
    CHECK(pr.proj.component(3).is_identity());
    pr.incl.ensure_chain_map(1, 4, "test");
    pr.proj.ensure_chain_map(1, 4, "test");

    std::map<int, std::size_t> ranks{{0, 1}, {1, 1}};
    std::map<int, FreeMap> du;
    du.emplace(1, parse_matrix(q, "[[1]]"));
    auto unit = ChainComplex(q, 0, 1, ranks, std::move(du));
    auto pu = prune_complex(unit, 0, 1);
    CHECK(pu.c.rank(0) == 0);
    CHECK(pu.c.rank(1) == 0);
}

TEST_CASE("module isomorphism search matches presentations up to pruning") {
    auto r = ring2({"x^2", "y^2"});
    auto a = md(r, "[[x,y]]");
    // k with a redundant second generator
    ModulePresentation b(r, 2, parse_matrix(r, "[[x,y,0],[0,0,1]]"));
    auto iso = find_module_iso(a, b);
    REQUIRE(iso.has_value());
    const auto& [u, v] = *iso;
    CHECK(u.rows() == 2);
    CHECK(u.cols() == 1);
    FreeMap vu = v.compose(u);
    CHECK(a.element_is_zero({sub(K, vu.entry(0, 0), r.parse("1"))}));

    // R/(x) is not k: y acts nontrivially
    CHECK(!find_module_iso(a, md(r, "[[x]]")).has_value());
}
