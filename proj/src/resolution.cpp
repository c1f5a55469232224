#include "tac/resolution.hpp"

#include "tac/chainmap.hpp"
#include "tac/complex_ops.hpp"
#include "tac/errors.hpp"

namespace tac {

ModulePresentation restrict_scalars(const ModulePresentation& m, const RingMap& phi) {
    if (!m.ring().same_ring(phi.tgt))
        throw RingError("restrict_scalars: module is not presented over the target ring");
    const QuotientRing& q = phi.src;
    std::size_t g = m.gens();
    const FreeMap& rel = m.relations();
    std::size_t ncols = rel.cols() + phi.extra.size() * g;
    std::vector<Polynomial> e(g * ncols);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < rel.cols(); ++j) e[i * ncols + j] = rel.entry(i, j);
    for (std::size_t t = 0; t < phi.extra.size(); ++t)
        for (std::size_t j = 0; j < g; ++j)
            e[j * ncols + rel.cols() + t * g + j] = phi.extra[t];
    ModulePresentation over_q(q, g, FreeMap(q, g, ncols, std::move(e)));
    return over_q.minimal_relations();
}

Resolution minimal_free_resolution(const ModulePresentation& m, int length) {
    if (length < 0) throw ShapeError("resolution length must be non-negative");
    PrunedPresentation pr = prune_presentation(m);
    const QuotientRing& ring = m.ring();
    std::map<int, std::size_t> ranks;
    std::map<int, FreeMap> diffs;
    ranks[0] = pr.pres.gens();
    bool minimal = true;
    FreeMap prev = pr.pres.relations();
    for (int n = 1; n <= length; ++n) {
        ranks[n] = prev.cols();
        minimal = minimal && prev.entries_in_radical();
        diffs.emplace(n, prev);
        if (n < length) prev = prev.kernel();
    }
    ChainComplex c =
        ChainComplex(ring, 0, length, std::move(ranks), std::move(diffs)).with_augmentation(pr.pres);
    return {std::move(c), std::move(pr.incl), std::move(pr.proj), minimal};
}

std::optional<PeriodInfo> detect_periodicity(const ChainComplex& f) {
    if (f.rank(f.hi()) == 0) return std::nullopt;  // terminates instead
    for (int p = 1; p <= 2; ++p)
        for (int d = f.lo() + 1; d + p <= f.hi(); ++d) {
            bool ok = true;
            for (int n = d; n + p <= f.hi() && ok; ++n) ok = f.diff(n + p) == f.diff(n);
            if (ok) return PeriodInfo{p, d};
        }
    return std::nullopt;
}

McmSyzygy mcm_syzygy(const ModulePresentation& m) {
    int d = static_cast<int>(m.ring().nvars()) + 1;
    Resolution r = minimal_free_resolution(m, d + 1);
    return {ModulePresentation(m.ring(), r.c.rank(d), r.c.diff(d + 1)), d};
}

namespace {

CompleteResolution finite_pd(const QuotientRing& ring, Resolution r) {
    int pd = -1;
    for (int n = 0; n <= r.c.hi(); ++n)
        if (r.c.rank(n) > 0) pd = n;
    ChainComplex z = ChainComplex::zero_complex(ring);
    ChainMap rho = ChainMap::zero(z, r.c);
    return {std::move(z), std::move(rho), std::move(r.c), std::move(r.incl), std::move(r.proj),
            pd + 1, pd};
}

std::optional<CompleteResolution> periodic_extension(const QuotientRing& ring,
                                                     const Resolution& r,
                                                     const PeriodInfo& per) {
    int d = per.onset, p = per.period;
    std::map<int, std::size_t> ranks;
    std::map<int, FreeMap> diffs;
    for (int n = d; n <= d + p; ++n) ranks[n] = r.c.rank(n);
    for (int n = d + 1; n <= d + p; ++n) diffs.emplace(n, r.c.diff(n));
    ChainComplex u(ring, d, d + p, std::move(ranks), std::move(diffs), Periodicity{p, d, d});
    ensure_valid(u, "complete_resolution");
    // a periodic tail of a resolution is only a complete resolution when the
    // doubly infinite extension is exact on both sides; check it outright
    ComplexReport rep = total_acyclicity_check(u, d - 2 * p - 2, d + 2 * p + 2);
    if (!rep.ok) return std::nullopt;
    std::map<int, FreeMap> comps;
    for (int n = d - 1; n <= r.c.hi(); ++n)
        comps.emplace(n, FreeMap::identity(ring, r.c.rank(n)));
    for (int s = d - 2; s >= 0; --s) {
        FreeMap w = r.c.diff(s + 1).compose(comps.at(s + 1));
        auto x = u.diff(s + 1).solve_left(w);
        if (!x) throw SolveError("complete_resolution: comparison map has no extension to degree " +
                                 std::to_string(s));
        comps.emplace(s, std::move(*x));
    }
    ChainMap rho(u, r.c, std::move(comps));
    return CompleteResolution{std::move(u), std::move(rho), r.c, r.incl, r.proj,
                              d - 1, std::nullopt};
}

CompleteResolution splice(const QuotientRing& ring, const Resolution& r, int max_length) {
    if (!ring.is_artinian() || !ring.is_complete_intersection())
        throw RingError("splice construction needs an Artinian complete intersection");
    ModulePresentation mp = r.c.augmentation();
    // Hom(M, Q) sits inside Q^gens as the kernel of the transposed relations
    FreeMap kd = mp.relations().transpose().kernel();
    ModulePresentation dual(ring, kd.cols(), kd.kernel());
    Resolution g = minimal_free_resolution(dual, max_length);
    // evaluation pairing F_0 x G_0 -> Q through M x Hom(M, Q)
    FreeMap seam = kd.compose(g.incl).transpose();

    std::map<int, std::size_t> ranks;
    std::map<int, FreeMap> diffs;
    for (int n = 0; n <= max_length; ++n) ranks[n] = r.c.rank(n);
    for (int n = -max_length - 1; n <= -1; ++n) ranks[n] = g.c.rank(-n - 1);
    for (int n = 1; n <= max_length; ++n) diffs.emplace(n, r.c.diff(n));
    diffs.emplace(0, seam);
    for (int n = -max_length; n <= -1; ++n) diffs.emplace(n, g.c.diff(-n).transpose());
    ChainComplex u(ring, -max_length - 1, max_length, std::move(ranks), std::move(diffs));
    ensure_valid(u, "splice");
    int clo = std::max(-max_length, -4), chi = std::min(max_length - 1, 4);
    ComplexReport rep = total_acyclicity_check(u, clo, chi);
    if (!rep.ok)
        throw SolveError("splice: result is not totally acyclic at degree " +
                         std::to_string(rep.degree) + ": " + rep.what);
    std::map<int, FreeMap> comps;
    for (int n = 0; n <= max_length; ++n)
        comps.emplace(n, FreeMap::identity(ring, r.c.rank(n)));
    ChainMap rho(u, r.c, std::move(comps));
    return {std::move(u), std::move(rho), r.c, r.incl, r.proj, 0, std::nullopt};
}

}  // namespace

CompleteResolution complete_resolution(const ModulePresentation& m, int max_length) {
    if (max_length < 2) throw ShapeError("complete resolution window is too short");
    const QuotientRing& ring = m.ring();
    Resolution r = minimal_free_resolution(m, max_length);
    if (r.c.rank(r.c.hi()) == 0) return finite_pd(ring, std::move(r));
    if (auto per = detect_periodicity(r.c)) {
        auto out = periodic_extension(ring, r, *per);
        if (out) return std::move(*out);
    }
    if (ring.is_artinian() && ring.is_complete_intersection()) return splice(ring, r, max_length);
    throw RingError(
        "complete_resolution: the resolution neither terminates nor becomes periodic, and the "
        "ring is not an Artinian complete intersection; no construction applies");
}

CompleteResolution complete_resolution_by_splice(const ModulePresentation& m, int max_length) {
    if (max_length < 2) throw ShapeError("complete resolution window is too short");
    Resolution r = minimal_free_resolution(m, max_length);
    if (r.c.rank(r.c.hi()) == 0) return finite_pd(m.ring(), std::move(r));
    return splice(m.ring(), r, max_length);
}

}  // namespace tac
