#include "tac/complex_ops.hpp"

#include <algorithm>

#include "tac/errors.hpp"

namespace tac {

FreeMap kron(const FreeMap& a, const FreeMap& b) {
    const QuotientRing& ring = a.ring();
    const PrimeField& kf = ring.field();
    std::size_t rows = a.rows() * b.rows(), cols = a.cols() * b.cols();
    std::vector<Polynomial> e(rows * cols);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.entry(i, j).is_zero()) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q) {
                    e[(i * b.rows() + p) * cols + j * b.cols() + q] =
                        mul(kf, a.entry(i, j), b.entry(p, q));
                }
        }
    return FreeMap(ring, rows, cols, std::move(e));
}

ChainComplex shift(const ChainComplex& c, int k) {
    std::map<int, std::size_t> ranks;
    std::map<int, FreeMap> diffs;
    for (int n = c.lo() + k; n <= c.hi() + k; ++n) {
        ranks[n] = c.rank(n - k);
        if (n > c.lo() + k) {
            FreeMap d = c.diff(n - k);
            diffs.emplace(n, (k % 2 == 0) ? d : d.negate());
        }
    }
    std::optional<Periodicity> per = c.periodicity();
    if (per) {
        if (per->below) *per->below += k;
        if (per->above) *per->above += k;
    }
    return ChainComplex(c.ring(), c.lo() + k, c.hi() + k, std::move(ranks), std::move(diffs),
                        per);
}

ChainMap shift_map(const ChainMap& f, int k) {
    std::map<int, FreeMap> comps;
    for (int n = f.lo() + k; n <= f.hi() + k; ++n) comps.emplace(n, f.component(n - k));
    std::optional<Periodicity> per = f.periodicity();
    if (per) {
        if (per->below) *per->below += k;
        if (per->above) *per->above += k;
    }
    return ChainMap(shift(f.source(), k), shift(f.target(), k), std::move(comps), per);
}

ChainComplex dualize(const ChainComplex& c) {
    std::map<int, std::size_t> ranks;
    std::map<int, FreeMap> diffs;
    int lo = -c.hi(), hi = -c.lo();
    for (int n = lo; n <= hi; ++n) {
        ranks[n] = c.rank(-n);
        if (n > lo) diffs.emplace(n, c.diff(1 - n).transpose());
    }
    std::optional<Periodicity> per;
    if (c.periodicity()) {
        per = Periodicity{c.periodicity()->period, std::nullopt, std::nullopt};
        int p = per->period;
        if (c.periodicity()->above) per->below = 1 - *c.periodicity()->above - p;
        if (c.periodicity()->below) per->above = 1 - *c.periodicity()->below - p;
    }
    return ChainComplex(c.ring(), lo, hi, std::move(ranks), std::move(diffs), per);
}

namespace {

FreeMap cone_diff(const ChainMap& f, int n) {
    const ChainComplex& s = f.source();
    const ChainComplex& t = f.target();
    const QuotientRing& ring = s.ring();
    FreeMap dt = t.diff(n);
    FreeMap ds = s.diff(n - 1);
    FreeMap fc = f.component(n - 1);
    std::size_t rows = dt.rows() + ds.rows(), cols = dt.cols() + ds.cols();
    std::vector<Polynomial> e(rows * cols);
    for (std::size_t i = 0; i < dt.rows(); ++i) {
        for (std::size_t j = 0; j < dt.cols(); ++j) e[i * cols + j] = dt.entry(i, j);
        for (std::size_t j = 0; j < fc.cols(); ++j) e[i * cols + dt.cols() + j] = fc.entry(i, j);
    }
    const PrimeField& kf = ring.field();
    for (std::size_t i = 0; i < ds.rows(); ++i)
        for (std::size_t j = 0; j < ds.cols(); ++j)
            e[(dt.rows() + i) * cols + dt.cols() + j] = negate(kf, ds.entry(i, j));
    return FreeMap(ring, rows, cols, std::move(e));
}

}  // namespace

ChainComplex cone(const ChainMap& f) {
    const ChainComplex& s = f.source();
    const ChainComplex& t = f.target();
    int lo = std::min(t.lo(), s.lo() + 1), hi = std::max(t.hi(), s.hi() + 1);
    f.ensure_chain_map(lo, hi, "cone");
    std::map<int, std::size_t> ranks;
    std::map<int, FreeMap> diffs;
    for (int n = lo; n <= hi; ++n) {
        ranks[n] = t.rank(n) + s.rank(n - 1);
        if (n > lo) diffs.emplace(n, cone_diff(f, n));
    }
    ChainComplex out(s.ring(), lo, hi, std::move(ranks), std::move(diffs));
    ensure_valid(out, "cone");
    return out;
}

ChainMap cone_inclusion(const ChainMap& f) {
    ChainComplex cf = cone(f);
    const ChainComplex& t = f.target();
    std::map<int, FreeMap> comps;
    for (int n = cf.lo(); n <= cf.hi(); ++n) {
        std::size_t rows = cf.rank(n), cols = t.rank(n);
        std::vector<Polynomial> e(rows * cols);
        Polynomial one = Polynomial::constant(t.ring().field(), 1, t.ring().nvars());
        for (std::size_t i = 0; i < cols; ++i) e[i * cols + i] = one;
        comps.emplace(n, FreeMap(t.ring(), rows, cols, std::move(e)));
    }
    return ChainMap(t, cf, std::move(comps));
}

ChainMap cone_projection(const ChainMap& f) {
    ChainComplex cf = cone(f);
    ChainComplex ss = shift(f.source(), 1);
    std::map<int, FreeMap> comps;
    for (int n = cf.lo(); n <= cf.hi(); ++n) {
        std::size_t rows = ss.rank(n), cols = cf.rank(n);
        std::size_t skip = f.target().rank(n);
        std::vector<Polynomial> e(rows * cols);
        Polynomial one = Polynomial::constant(ss.ring().field(), 1, ss.ring().nvars());
        for (std::size_t i = 0; i < rows; ++i) e[i * cols + skip + i] = one;
        comps.emplace(n, FreeMap(ss.ring(), rows, cols, std::move(e)));
    }
    return ChainMap(cf, ss, std::move(comps));
}

ChainComplex truncated_cone(const ChainMap& f) {
    const ChainComplex& s = f.source();
    const ChainComplex& t = f.target();
    const QuotientRing& ring = s.ring();
    if ((s.periodicity() && s.periodicity()->below) ||
        (t.periodicity() && t.periodicity()->below))
        throw ShapeError("truncated cone requires resolutions in nonnegative degrees");
    for (int n = std::min(s.lo(), t.lo()); n < 0; ++n)
        if (s.rank(n) != 0 || t.rank(n) != 0)
            throw ShapeError("truncated cone requires resolutions in nonnegative degrees");
    // surjectivity of f_0 modulo the maximal ideal
    if (scalar_rank(ring.field(), f.component(0).constant_matrix()) != t.rank(0))
        throw Error("truncated cone: degree zero component is not surjective");
    int hi = std::max(t.hi(), s.hi() + 1);
    f.ensure_chain_map(std::min(t.lo(), s.lo() + 1), hi, "truncated cone");

    // free basis of ker(d_1 | f_0) in target_1 (+) source_0
    FreeMap d1 = t.diff(1);
    FreeMap f0 = f.component(0);
    std::size_t cols = d1.cols() + f0.cols();
    std::vector<Polynomial> be(t.rank(0) * cols);
    for (std::size_t i = 0; i < t.rank(0); ++i) {
        for (std::size_t j = 0; j < d1.cols(); ++j) be[i * cols + j] = d1.entry(i, j);
        for (std::size_t j = 0; j < f0.cols(); ++j) be[i * cols + d1.cols() + j] = f0.entry(i, j);
    }
    FreeMap bottom(ring, t.rank(0), cols, std::move(be));
    FreeMap kb = bottom.kernel();

    std::map<int, std::size_t> ranks;
    std::map<int, FreeMap> diffs;
    ranks[1] = kb.cols();
    for (int n = 2; n <= hi; ++n) {
        ranks[n] = t.rank(n) + s.rank(n - 1);
        if (n == 2) {
            auto x = kb.solve_right(cone_diff(f, 2));
            if (!x) throw SolveError("truncated cone: image does not land in the kernel");
            diffs.emplace(2, *x);
        } else {
            diffs.emplace(n, cone_diff(f, n));
        }
    }
    ChainComplex out(ring, 1, std::max(hi, 1), std::move(ranks), std::move(diffs));
    ensure_valid(out, "truncated cone");
    return out;
}

ChainComplex base_change(const ChainComplex& c, const RingMap& phi) {
    if (!c.ring().same_ring(phi.src))
        throw RingError("base change: complex is not over the source ring");
    const QuotientRing& R = phi.tgt;
    std::map<int, std::size_t> ranks;
    std::map<int, FreeMap> diffs;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        ranks[n] = c.rank(n);
        if (n > c.lo()) {
            FreeMap d = c.diff(n);
            std::vector<Polynomial> e;
            e.reserve(d.rows() * d.cols());
            for (std::size_t i = 0; i < d.rows(); ++i)
                for (std::size_t j = 0; j < d.cols(); ++j) e.push_back(d.entry(i, j));
            diffs.emplace(n, FreeMap(R, d.rows(), d.cols(), std::move(e)));
        }
    }
    ChainComplex out(R, c.lo(), c.hi(), std::move(ranks), std::move(diffs), c.periodicity());
    if (c.has_stored_augmentation()) {
        const ModulePresentation& m = c.augmentation();
        std::vector<Polynomial> e;
        for (std::size_t i = 0; i < m.relations().rows(); ++i)
            for (std::size_t j = 0; j < m.relations().cols(); ++j)
                e.push_back(m.relations().entry(i, j));
        out = out.with_augmentation(ModulePresentation(
            R, m.gens(), FreeMap(R, m.relations().rows(), m.relations().cols(), std::move(e))));
    }
    return out;
}

ChainMap base_change_map(const ChainMap& f, const RingMap& phi) {
    const QuotientRing& R = phi.tgt;
    std::map<int, FreeMap> comps;
    for (int n = f.lo(); n <= f.hi(); ++n) {
        FreeMap d = f.component(n);
        std::vector<Polynomial> e;
        e.reserve(d.rows() * d.cols());
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j) e.push_back(d.entry(i, j));
        comps.emplace(n, FreeMap(R, d.rows(), d.cols(), std::move(e)));
    }
    return ChainMap(base_change(f.source(), phi), base_change(f.target(), phi), std::move(comps),
                    f.periodicity());
}

ChainComplex tensor_complexes(const ChainComplex& d, const ChainComplex& k) {
    if (k.periodicity()) throw Error("tensor factor must be bounded");
    if (!d.ring().same_ring(k.ring())) throw RingError("tensor factors over different rings");
    const QuotientRing& ring = d.ring();
    int klo = k.lo(), khi = k.hi();
    int lo = d.lo() + klo, hi = d.hi() + khi;

    auto comp_rank = [&](int n) {
        std::size_t r = 0;
        for (int i = klo; i <= khi; ++i) r += d.rank(n - i) * k.rank(i);
        return r;
    };

    std::map<int, std::size_t> ranks;
    std::map<int, FreeMap> diffs;
    for (int n = lo; n <= hi; ++n) ranks[n] = comp_rank(n);
    for (int n = lo + 1; n <= hi; ++n) {
        std::size_t rows = ranks.at(n - 1), cols = ranks.at(n);
        std::vector<Polynomial> e(rows * cols);
        // column offset of source summand i, row offset of target summand j
        std::size_t coff = 0;
        for (int i = klo; i <= khi; ++i) {
            std::size_t cw = d.rank(n - i) * k.rank(i);
            if (cw != 0) {
                std::size_t roff = 0;
                for (int j = klo; j <= khi; ++j) {
                    std::size_t rw = d.rank(n - 1 - j) * k.rank(j);
                    if (rw != 0) {
                        std::optional<FreeMap> blk;
                        if (j == i) {
                            FreeMap dd = d.diff(n - i);
                            if (i % 2 != 0) dd = dd.negate();
                            blk = kron(dd, FreeMap::identity(ring, k.rank(i)));
                        } else if (j == i - 1) {
                            blk = kron(FreeMap::identity(ring, d.rank(n - i)), k.diff(i));
                        }
                        if (blk && !(blk->rows() == rw && blk->cols() == cw))
                            throw ShapeError("tensor block shape mismatch");
                        if (blk)
                            for (std::size_t r = 0; r < rw; ++r)
                                for (std::size_t c = 0; c < cw; ++c)
                                    e[(roff + r) * cols + coff + c] = blk->entry(r, c);
                    }
                    roff += rw;
                }
            }
            coff += cw;
        }
        diffs.emplace(n, FreeMap(ring, rows, cols, std::move(e)));
    }
    ChainComplex out(ring, lo, hi, std::move(ranks), std::move(diffs));
    ensure_valid(out, "tensor");
    return out;
}

ComplexReport total_acyclicity_check(const ChainComplex& c, int lo, int hi) {
    auto run = [&](const ChainComplex& x, int a, int b, const std::string& side)
        -> ComplexReport {
        for (int n = a; n <= b; ++n) {
            FreeMap dn = x.diff(n);
            FreeMap dnext = x.diff(n + 1);
            const FreeMap& ker = dn.kernel();
            const ModuleGB& im = dnext.column_gb();
            for (std::size_t j = 0; j < ker.cols(); ++j) {
                if (!im.contains(ker.column(j)))
                    return {false, n, side + "homology does not vanish"};
            }
        }
        return {true, 0, ""};
    };
    ComplexReport r = run(c, lo, hi, "");
    if (!r.ok) return r;
    return run(dualize(c), -hi, -lo, "dual ");
}

std::pair<ChainMap, ChainMap> dual_base_change_iso(const ChainComplex& c, const RingMap& phi) {
    ChainComplex a = base_change(dualize(c), phi);
    ChainComplex b = dualize(base_change(c, phi));
    if (!complexes_equal(a, b, a.lo(), a.hi()))
        throw Error("dual base change: canonical identification failed");
    std::map<int, FreeMap> ca, cb;
    for (int n = a.lo(); n <= a.hi(); ++n) {
        ca.emplace(n, FreeMap::identity(a.ring(), a.rank(n)));
        cb.emplace(n, FreeMap::identity(a.ring(), a.rank(n)));
    }
    ChainMap alpha(a, b, std::move(ca), a.periodicity());
    ChainMap beta(b, a, std::move(cb), a.periodicity());
    return {alpha, beta};
}

}  // namespace tac
