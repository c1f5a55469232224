#include "tac/homotopy.hpp"

#include <limits>
#include <random>

#include "tac/errors.hpp"
#include "tac/linsolve.hpp"
#include "tac/presentation.hpp"

namespace tac {

ChainMap lift_through(const FreeMap& a, const ChainComplex& f, const ChainComplex& g,
                      std::optional<int> want) {
    if (a.rows() != g.rank(0) || a.cols() != f.rank(0))
        throw ShapeError("lift_through: degree 0 component shape");
    int top = want ? *want : std::min(f.hi(), g.hi());
    std::map<int, FreeMap> comps;
    comps.emplace(0, a);
    for (int n = 1; n <= top; ++n) {
        FreeMap w = comps.at(n - 1).compose(f.diff(n));
        auto x = g.diff(n).solve_right(w);
        if (!x)
            throw SolveError("lift_through: no lift at degree " + std::to_string(n) +
                             "; target is not exact there");
        comps.emplace(n, std::move(*x));
    }
    return ChainMap(f, g, std::move(comps));
}

ChainMap extend_morphism(const ChainMap& f, int lo) {
    const ChainComplex& src = f.source();
    const ChainComplex& tgt = f.target();
    std::map<int, FreeMap> comps;
    for (int n = f.lo(); n <= f.hi(); ++n) comps.emplace(n, f.component(n));
    for (int s = f.lo() - 1; s >= lo; --s) {
        // X with X * d^src_{s+1} = d^tgt_{s+1} * f_{s+1}; solvable because
        // Hom(src, tgt_s) is exact when src is totally acyclic
        FreeMap w = tgt.diff(s + 1).compose(comps.at(s + 1));
        auto x = src.diff(s + 1).solve_left(w);
        if (!x)
            throw SolveError("extend_morphism: no extension at degree " + std::to_string(s) +
                             "; source is not totally acyclic");
        comps.emplace(s, std::move(*x));
    }
    return ChainMap(src, tgt, std::move(comps));
}

namespace {

bool certified(const std::optional<Homotopy>& s, const ChainMap& f, const ChainMap& g, int lo,
               int hi) {
    return s && s->certifies(f, g, lo, hi);
}

// upward lifting from the bottom of a bounded below source
std::optional<Homotopy> homotopy_upward(const ChainMap& h, int hi) {
    const ChainComplex& src = h.source();
    const ChainComplex& tgt = h.target();
    int b = src.lo();
    std::map<int, FreeMap> sigma;
    for (int n = b; n <= hi; ++n) {
        FreeMap rhs = h.component(n);
        if (n > b) rhs = rhs.sub(sigma.at(n - 1).compose(src.diff(n)));
        auto x = tgt.diff(n + 1).solve_right(rhs);
        if (!x) return std::nullopt;
        sigma.emplace(n, std::move(*x));
    }
    return Homotopy(src, tgt, std::move(sigma));
}

// zero seed above the support of h, extended downward through the source
std::optional<Homotopy> homotopy_downward(const ChainMap& h, int lo, int hi) {
    const ChainComplex& src = h.source();
    const ChainComplex& tgt = h.target();
    int top = std::max(hi + 1, h.hi());
    if (h.periodicity()) top += h.periodicity()->period;
    int d = top + 1;
    while (d - 1 >= lo && h.component(d - 1).is_zero()) --d;
    if (d > hi + 1) return std::nullopt;  // support reaches the top; no zero seed
    std::map<int, FreeMap> sigma;
    sigma.emplace(d - 1, FreeMap::zero(src.ring(), tgt.rank(d), src.rank(d - 1)));
    for (int s = d - 2; s >= lo - 1; --s) {
        FreeMap w = h.component(s + 1).sub(tgt.diff(s + 2).compose(sigma.at(s + 1)));
        auto x = src.diff(s + 1).solve_left(w);
        if (!x) return std::nullopt;
        sigma.emplace(s, std::move(*x));
    }
    return Homotopy(src, tgt, std::move(sigma));
}

// one period with wraparound, when source, target and difference are all
// periodic with the same period; certifies every window
std::optional<Homotopy> homotopy_cyclic(const ChainMap& h, int lo, int hi) {
    const ChainComplex& src = h.source();
    const ChainComplex& tgt = h.target();
    auto sp = src.periodicity(), tp = tgt.periodicity();
    if (!sp || !tp || sp->period != tp->period) return std::nullopt;
    if (!sp->below || !sp->above || !tp->below || !tp->above) return std::nullopt;
    int p = sp->period;
    for (int n = lo - 1; n <= std::max(hi, h.hi()); ++n)
        if (!(h.component(n + p) == h.component(n))) return std::nullopt;
    std::vector<MatrixUnknown> unk;
    for (int k = 0; k < p; ++k) unk.push_back({tgt.rank(k + 1), src.rank(k)});
    std::vector<MatrixEquation> eqs;
    for (int e = 0; e < p; ++e) {
        // degree e+1: sigma_e * d_{e+1} + d_{e+2} * sigma_{e+1} = h_{e+1}
        MatrixEquation eq{{{static_cast<std::size_t>(e), std::nullopt, src.diff(e + 1), false},
                           {static_cast<std::size_t>((e + 1) % p), tgt.diff(e + 2), std::nullopt,
                            false}},
                          h.component(e + 1)};
        eqs.push_back(std::move(eq));
    }
    auto sol = solve_matrix_system(src.ring(), unk, eqs);
    if (!sol) return std::nullopt;
    std::map<int, FreeMap> sigma;
    for (int k = 0; k < p; ++k) sigma.emplace(k, (*sol)[k]);
    return Homotopy(src, tgt, std::move(sigma), Periodicity{p, 0, 0});
}

// all components over the window at once; failure here means no homotopy
// certifies the window at all
std::optional<Homotopy> homotopy_windowed(const ChainMap& h, int lo, int hi) {
    const ChainComplex& src = h.source();
    const ChainComplex& tgt = h.target();
    std::vector<MatrixUnknown> unk;
    for (int s = lo - 1; s <= hi; ++s) unk.push_back({tgt.rank(s + 1), src.rank(s)});
    auto idx = [&](int s) { return static_cast<std::size_t>(s - (lo - 1)); };
    std::vector<MatrixEquation> eqs;
    for (int n = lo; n <= hi; ++n) {
        MatrixEquation eq{{{idx(n - 1), std::nullopt, src.diff(n), false},
                           {idx(n), tgt.diff(n + 1), std::nullopt, false}},
                          h.component(n)};
        eqs.push_back(std::move(eq));
    }
    auto sol = solve_matrix_system(src.ring(), unk, eqs);
    if (!sol) return std::nullopt;
    std::map<int, FreeMap> sigma;
    for (int s = lo - 1; s <= hi; ++s) sigma.emplace(s, (*sol)[idx(s)]);
    return Homotopy(src, tgt, std::move(sigma));
}

}  // namespace

std::optional<Homotopy> find_homotopy(const ChainMap& f, const ChainMap& g, int lo, int hi) {
    if (lo > hi) throw ShapeError("find_homotopy: empty window");
    ChainMap h = f.sub(g);
    const ChainComplex& src = f.source();
    const ChainComplex& tgt = f.target();

    bool zero = true;
    for (int n = lo; n <= hi && zero; ++n) zero = h.component(n).is_zero();
    if (zero) return Homotopy::zero(src, tgt);

    if (!src.periodicity() || !src.periodicity()->below) {
        auto s = homotopy_upward(h, hi);
        if (certified(s, f, g, lo, hi)) return s;
    }
    {
        auto s = homotopy_downward(h, lo, hi);
        if (certified(s, f, g, lo, hi)) return s;
    }
    {
        auto s = homotopy_cyclic(h, lo, hi);
        if (certified(s, f, g, lo, hi)) return s;
    }
    auto s = homotopy_windowed(h, lo, hi);
    if (certified(s, f, g, lo, hi)) return s;
    return std::nullopt;
}

namespace {

// candidate module maps A -> B: generators of the solution space of
// H * rel_A = rel_B * Y in the unknowns (H, Y)
std::vector<FreeMap> hom_space(const ModulePresentation& a, const ModulePresentation& b) {
    const QuotientRing& ring = a.ring();
    std::vector<MatrixUnknown> unk{{b.gens(), a.gens()},
                                   {b.relations().cols(), a.relations().cols()}};
    std::vector<MatrixEquation> eqs;
    MatrixEquation eq{{{0, std::nullopt, a.relations(), false},
                       {1, b.relations(), std::nullopt, true}},
                      FreeMap::zero(ring, b.gens(), a.relations().cols())};
    eqs.push_back(std::move(eq));
    std::vector<FreeMap> out;
    for (auto& sol : matrix_system_kernel(ring, unk, eqs)) out.push_back(std::move(sol[0]));
    return out;
}

// v with v well defined, v*u = id mod rel_a and u*v = id mod rel_b
std::optional<FreeMap> two_sided_inverse(const FreeMap& u, const ModulePresentation& a,
                                         const ModulePresentation& b) {
    const QuotientRing& ring = a.ring();
    std::size_t ga = a.gens(), gb = b.gens();
    std::size_t ra = a.relations().cols(), rb = b.relations().cols();
    std::vector<MatrixUnknown> unk{{ga, gb}, {ra, rb}, {ra, ga}, {rb, gb}};
    std::vector<MatrixEquation> eqs;
    eqs.push_back({{{0, std::nullopt, b.relations(), false},
                    {1, a.relations(), std::nullopt, true}},
                   FreeMap::zero(ring, ga, rb)});
    eqs.push_back({{{0, std::nullopt, u, false}, {2, a.relations(), std::nullopt, true}},
                   FreeMap::identity(ring, ga)});
    eqs.push_back({{{0, u, std::nullopt, false}, {3, b.relations(), std::nullopt, true}},
                   FreeMap::identity(ring, gb)});
    auto sol = solve_matrix_system(ring, unk, eqs);
    if (!sol) return std::nullopt;
    return (*sol)[0];
}

}  // namespace

std::optional<std::pair<FreeMap, FreeMap>> find_module_iso(const ModulePresentation& a,
                                                           const ModulePresentation& b) {
    if (!a.ring().same_ring(b.ring())) throw RingError("find_module_iso: different rings");
    const QuotientRing& ring = a.ring();
    PrunedPresentation pa = prune_presentation(a), pb = prune_presentation(b);
    std::size_t g = pa.pres.gens();
    if (g != pb.pres.gens()) return std::nullopt;

    auto transport = [&](const FreeMap& umin, const FreeMap& vmin) {
        FreeMap u = pb.incl.compose(umin).compose(pa.proj);
        FreeMap v = pa.incl.compose(vmin).compose(pb.proj);
        return std::make_pair(std::move(u), std::move(v));
    };

    if (pa.pres.relations().cols() == 0 || pb.pres.relations().cols() == 0) {
        // a minimal presentation without relations is a free module
        if (pa.pres.relations().cols() != pb.pres.relations().cols()) return std::nullopt;
        return transport(FreeMap::identity(ring, g), FreeMap::identity(ring, g));
    }

    std::vector<FreeMap> basis = hom_space(pa.pres, pb.pres);
    std::vector<FreeMap> candidates;
    for (const FreeMap& h : basis) candidates.push_back(h);
    std::mt19937 rng(9176);
    const PrimeField& k = ring.field();
    auto random_combos = [&](const std::vector<FreeMap>& fam) {
        for (int t = 0; t < 8 && fam.size() > 1; ++t) {
            FreeMap m = FreeMap::zero(ring, g, g);
            for (const FreeMap& h : fam)
                m = m.add(h.scale(k.from_int(static_cast<long long>(rng() % k.characteristic()))));
            candidates.push_back(std::move(m));
        }
    };
    random_combos(basis);
    // over a non-local ring an invertible constant part is not enough, so
    // random combinations of all generators rarely stay invertible away
    // from the origin; combinations of the constant-entry generators are
    // isomorphisms exactly when their scalar matrix is, which the
    // confirmation below certifies either way
    std::vector<FreeMap> cbasis;
    for (const FreeMap& h : basis) {
        auto cm = h.constant_matrix();
        std::vector<Polynomial> ce;
        ce.reserve(g * g);
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j)
                ce.push_back(Polynomial::constant(k, static_cast<long long>(cm[i][j]),
                                                  ring.nvars()));
        if (h == FreeMap(ring, g, g, std::move(ce))) cbasis.push_back(h);
    }
    random_combos(cbasis);
    for (const FreeMap& u : candidates) {
        if (!scalar_invertible(k, u.constant_matrix())) continue;
        auto v = two_sided_inverse(u, pa.pres, pb.pres);
        if (v) return transport(u, *v);
    }
    return std::nullopt;
}

namespace {

struct Mat {
    std::size_t r = 0, c = 0;
    std::vector<Polynomial> e;
    Polynomial& at(std::size_t i, std::size_t j) { return e[i * c + j]; }
    const Polynomial& at(std::size_t i, std::size_t j) const { return e[i * c + j]; }
    static Mat from(const FreeMap& f) {
        Mat m{f.rows(), f.cols(), {}};
        m.e.resize(m.r * m.c);
        for (std::size_t i = 0; i < m.r; ++i)
            for (std::size_t j = 0; j < m.c; ++j) m.at(i, j) = f.entry(i, j);
        return m;
    }
    static Mat id(const QuotientRing& ring, std::size_t n) {
        Mat m{n, n, {}};
        m.e.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = Polynomial::constant(ring.field(), 1, ring.nvars());
        return m;
    }
    FreeMap to_map(const QuotientRing& ring) const {
        return FreeMap(ring, r, c, e);
    }
    void col_add(const QuotientRing& ring, std::size_t l, std::size_t j, const Polynomial& al) {
        const PrimeField& k = ring.field();
        for (std::size_t i = 0; i < r; ++i)
            at(i, l) = ring.nf(add(k, at(i, l), mul(k, al, at(i, j))));
    }
    void row_add(const QuotientRing& ring, std::size_t t, std::size_t i, const Polynomial& bt) {
        const PrimeField& k = ring.field();
        for (std::size_t j = 0; j < c; ++j)
            at(t, j) = ring.nf(add(k, at(t, j), mul(k, bt, at(i, j))));
    }
    void drop_row(std::size_t i) {
        std::vector<Polynomial> ne;
        ne.reserve((r - 1) * c);
        for (std::size_t t = 0; t < r; ++t)
            if (t != i)
                for (std::size_t j = 0; j < c; ++j) ne.push_back(at(t, j));
        e = std::move(ne);
        --r;
    }
    void drop_col(std::size_t j) {
        std::vector<Polynomial> ne;
        ne.reserve(r * (c - 1));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t l = 0; l < c; ++l)
                if (l != j) ne.push_back(at(i, l));
        e = std::move(ne);
        --c;
    }
};

}  // namespace

PrunedComplex prune_complex(const ChainComplex& c, int lo, int hi) {
    if (lo > hi) throw ShapeError("prune_complex: empty window");
    const QuotientRing& ring = c.ring();
    const PrimeField& k = ring.field();

    std::map<int, Mat> d;        // differentials over (lo, hi]
    std::map<int, Mat> incl;     // reduced basis in original coordinates
    std::map<int, Mat> proj;     // original basis in reduced coordinates
    std::map<int, std::size_t> rk;
    for (int n = lo; n <= hi; ++n) {
        rk[n] = c.rank(n);
        incl[n] = Mat::id(ring, rk[n]);
        proj[n] = Mat::id(ring, rk[n]);
    }
    for (int n = lo + 1; n <= hi; ++n) d[n] = Mat::from(c.diff(n));

    for (;;) {
        int fn = 0;
        std::size_t fi = 0, fj = 0;
        bool found = false;
        for (int n = lo + 1; n <= hi && !found; ++n)
            for (std::size_t i = 0; i < d[n].r && !found; ++i)
                for (std::size_t j = 0; j < d[n].c && !found; ++j)
                    if (!d[n].at(i, j).is_zero() && ring.is_unit(d[n].at(i, j))) {
                        fn = n;
                        fi = i;
                        fj = j;
                        found = true;
                    }
        if (!found) break;
        int n = fn;
        Polynomial ainv = ring.unit_inverse(d[n].at(fi, fj));

        // clear row fi with column operations (basis change of degree n)
        for (std::size_t l = 0; l < d[n].c; ++l) {
            if (l == fj || d[n].at(fi, l).is_zero()) continue;
            Polynomial al = ring.nf(negate(k, mul(k, ainv, d[n].at(fi, l))));
            d[n].col_add(ring, l, fj, al);
            incl[n].col_add(ring, l, fj, al);
            Polynomial nal = negate(k, al);
            proj[n].row_add(ring, fj, l, nal);
            if (n + 1 <= hi) d[n + 1].row_add(ring, fj, l, nal);
        }
        // clear column fj with row operations (basis change of degree n-1)
        for (std::size_t t = 0; t < d[n].r; ++t) {
            if (t == fi || d[n].at(t, fj).is_zero()) continue;
            Polynomial bt = ring.nf(negate(k, mul(k, ainv, d[n].at(t, fj))));
            d[n].row_add(ring, t, fi, bt);
            proj[n - 1].row_add(ring, t, fi, bt);
            Polynomial nbt = negate(k, bt);
            incl[n - 1].col_add(ring, fi, t, nbt);
            if (n - 1 > lo) d[n - 1].col_add(ring, fi, t, nbt);
        }
        // split off the summand
        d[n].drop_row(fi);
        d[n].drop_col(fj);
        if (n + 1 <= hi) d[n + 1].drop_row(fj);
        if (n - 1 > lo) d[n - 1].drop_col(fi);
        incl[n].drop_col(fj);
        proj[n].drop_row(fj);
        incl[n - 1].drop_col(fi);
        proj[n - 1].drop_row(fi);
        --rk[n];
        --rk[n - 1];
    }

    std::map<int, FreeMap> diffs;
    for (int n = lo + 1; n <= hi; ++n) diffs.emplace(n, d[n].to_map(ring));
    ChainComplex reduced(ring, lo, hi, rk, std::move(diffs));
    ensure_valid(reduced, "prune_complex");

    std::map<int, std::size_t> oranks;
    std::map<int, FreeMap> odiffs;
    for (int n = lo; n <= hi; ++n) oranks[n] = c.rank(n);
    for (int n = lo + 1; n <= hi; ++n) odiffs.emplace(n, c.diff(n));
    ChainComplex window(ring, lo, hi, std::move(oranks), std::move(odiffs));

    std::map<int, FreeMap> icomp, pcomp;
    for (int n = lo; n <= hi; ++n) {
        icomp.emplace(n, incl[n].to_map(ring));
        pcomp.emplace(n, proj[n].to_map(ring));
    }
    ChainMap im(reduced, window, std::move(icomp));
    ChainMap pm(window, reduced, std::move(pcomp));
    return {std::move(reduced), std::move(im), std::move(pm)};
}

std::optional<Equivalence> homotopy_equivalent(const ChainComplex& c, const ChainComplex& d,
                                               int lo, int hi) {
    auto iso = find_module_iso(c.augmentation(), d.augmentation());
    if (!iso) return std::nullopt;
    auto eff = [](const ChainComplex& x) {
        bool total = x.periodicity() && x.periodicity()->above;
        return total ? std::numeric_limits<int>::max() : x.hi();
    };
    // far enough for certification on [lo, hi], but never past real data
    int top = std::min(eff(c), eff(d));
    top = std::min(top, std::max(hi + 1, std::min(c.hi(), d.hi())));
    ChainMap fwd = extend_morphism(lift_through(iso->first, c, d, top), lo);
    ChainMap bwd = extend_morphism(lift_through(iso->second, d, c, top), lo);
    auto h1 = find_homotopy(fwd.compose(bwd), ChainMap::identity(d, lo, hi), lo, hi);
    if (!h1) return std::nullopt;
    auto h2 = find_homotopy(bwd.compose(fwd), ChainMap::identity(c, lo, hi), lo, hi);
    if (!h2) return std::nullopt;
    return Equivalence{std::move(fwd), std::move(bwd), std::move(*h1), std::move(*h2)};
}

}  // namespace tac
