#include "tac/groebner.hpp"

#include <algorithm>
#include <set>

#include "tac/errors.hpp"

namespace tac {

int module_term_compare(const ModuleTerm& a, const ModuleTerm& b) {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return Monomial::compare(a.m, b.m);
}

bool vec_is_zero(const VecPoly& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

VecPoly vec_zero(std::size_t rank) { return VecPoly(rank); }

VecPoly vec_add(const PrimeField& k, const VecPoly& a, const VecPoly& b) {
    if (a.size() != b.size()) throw ShapeError("vector rank mismatch");
    VecPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = add(k, a[i], b[i]);
    return r;
}

VecPoly vec_sub(const PrimeField& k, const VecPoly& a, const VecPoly& b) {
    if (a.size() != b.size()) throw ShapeError("vector rank mismatch");
    VecPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = sub(k, a[i], b[i]);
    return r;
}

VecPoly vec_negate(const PrimeField& k, const VecPoly& a) {
    VecPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = negate(k, a[i]);
    return r;
}

VecPoly vec_scale(const PrimeField& k, const VecPoly& a, Coeff c) {
    VecPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = scale(k, a[i], c);
    return r;
}

VecPoly vec_scale_term(const PrimeField& k, const VecPoly& a, const Term& t) {
    VecPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul_term(k, a[i], t);
    return r;
}

VecPoly vec_scale_poly(const PrimeField& k, const VecPoly& a, const Polynomial& p) {
    VecPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(k, a[i], p);
    return r;
}

ModuleTerm vec_leading(const VecPoly& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return ModuleTerm{i, v[i].leading_monomial()};
    throw Error("leading term of the zero vector");
}

Coeff vec_leading_coeff(const VecPoly& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return p.leading_coeff();
    throw Error("leading coefficient of the zero vector");
}

VecPoly vec_nf_ring(const QuotientRing& ring, const VecPoly& v) {
    VecPoly r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = ring.nf(v[i]);
    return r;
}

ModuleGB::ModuleGB(QuotientRing ring, std::size_t rank, std::vector<VecPoly> gens)
    : ring_(std::move(ring)), rank_(rank), orig_(std::move(gens)) {
    for (const auto& g : orig_)
        if (g.size() != rank_) throw ShapeError("generator rank mismatch");
    ext_ = orig_;
    for (const auto& f : ring_.ideal_gens()) {
        for (std::size_t i = 0; i < rank_; ++i) {
            VecPoly row(rank_);
            row[i] = f;
            ext_.push_back(std::move(row));
        }
    }
    compute();
}

VecPoly ModuleGB::divide(VecPoly v, const std::vector<Element>& basis,
                         std::vector<Polynomial>* quotients) const {
    const PrimeField& k = ring_.field();
    if (quotients) quotients->assign(basis.size(), Polynomial::zero());
    VecPoly rem(v.size());
    while (!vec_is_zero(v)) {
        ModuleTerm lt = vec_leading(v);
        Coeff lc = v[lt.comp].leading_coeff();
        bool hit = false;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const VecPoly& g = basis[b].v;
            ModuleTerm lg = vec_leading(g);
            if (lg.comp != lt.comp || !lg.m.divides(lt.m)) continue;
            Term t{k.div(lc, g[lg.comp].leading_coeff()), lt.m.div(lg.m)};
            v = vec_sub(k, v, vec_scale_term(k, g, t));
            if (quotients) (*quotients)[b] = add(k, (*quotients)[b], Polynomial::term(t.c, t.m));
            hit = true;
            break;
        }
        if (!hit) {
            rem[lt.comp] = add(k, rem[lt.comp], Polynomial::term(lc, lt.m));
            v[lt.comp] = sub(k, v[lt.comp], Polynomial::term(lc, lt.m));
        }
    }
    return rem;
}

void ModuleGB::compute() {
    const PrimeField& k = ring_.field();
    std::vector<Element> g;
    for (std::size_t i = 0; i < ext_.size(); ++i) {
        if (vec_is_zero(ext_[i])) continue;
        std::vector<Polynomial> rep(ext_.size());
        rep[i] = Polynomial::constant(k, 1, ring_.nvars());
        // normalize to monic right away
        Coeff c = k.inv(vec_leading_coeff(ext_[i]));
        Element e{vec_scale(k, ext_[i], c), std::move(rep)};
        e.rep[i] = Polynomial::constant(k, c, ring_.nvars());
        g.push_back(std::move(e));
    }

    struct Pair {
        std::size_t i, j;
        int deg;  // total degree of the lcm, for normal selection
    };
    auto make_pair = [&](std::size_t i, std::size_t j) -> std::optional<Pair> {
        ModuleTerm a = vec_leading(g[i].v), b = vec_leading(g[j].v);
        if (a.comp != b.comp) return std::nullopt;
        return Pair{i, j, a.m.lcm(b.m).degree()};
    };
    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> done;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (auto p = make_pair(i, j)) pending.push_back(*p);

    auto is_done = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return done.count({a, b}) > 0;
    };

    while (!pending.empty()) {
        // normal selection: smallest lcm degree, then smallest indices
        std::size_t best = 0;
        for (std::size_t t = 1; t < pending.size(); ++t) {
            const Pair &p = pending[t], &q = pending[best];
            if (p.deg < q.deg || (p.deg == q.deg && (p.i < q.i || (p.i == q.i && p.j < q.j))))
                best = t;
        }
        Pair pr = pending[best];
        pending.erase(pending.begin() + best);
        done.insert({pr.i, pr.j});

        ModuleTerm a = vec_leading(g[pr.i].v), b = vec_leading(g[pr.j].v);
        Monomial l = a.m.lcm(b.m);
        // product criterion: valid for ideals (rank-one ambient data)
        if (rank_ == 1 && a.m.coprime(b.m)) continue;
        // chain criterion: a third element divides the lcm and both
        // subordinate pairs were already treated
        bool skip = false;
        for (std::size_t t = 0; t < g.size() && !skip; ++t) {
            if (t == pr.i || t == pr.j) continue;
            ModuleTerm c = vec_leading(g[t].v);
            if (c.comp == a.comp && c.m.divides(l) && is_done(pr.i, t) && is_done(t, pr.j))
                skip = true;
        }
        if (skip) continue;

        Term ti{1, l.div(a.m)}, tj{1, l.div(b.m)};
        VecPoly s = vec_sub(k, vec_scale_term(k, g[pr.i].v, ti), vec_scale_term(k, g[pr.j].v, tj));
        std::vector<Polynomial> q;
        VecPoly r = divide(std::move(s), g, &q);
        if (vec_is_zero(r)) continue;

        // representation of the remainder over the extended generators
        std::vector<Polynomial> rep(ext_.size());
        for (std::size_t t = 0; t < ext_.size(); ++t) {
            Polynomial acc = sub(k, mul_term(k, g[pr.i].rep[t], ti), mul_term(k, g[pr.j].rep[t], tj));
            for (std::size_t b2 = 0; b2 < g.size(); ++b2)
                acc = sub(k, acc, mul(k, q[b2], g[b2].rep[t]));
            rep[t] = std::move(acc);
        }
        Coeff c = k.inv(vec_leading_coeff(r));
        Element e{vec_scale(k, r, c), {}};
        e.rep.reserve(ext_.size());
        for (auto& p : rep) e.rep.push_back(scale(k, p, c));
        g.push_back(std::move(e));
        std::size_t ni = g.size() - 1;
        for (std::size_t t = 0; t < ni; ++t)
            if (auto p = make_pair(t, ni)) pending.push_back(*p);
    }

    // minimal: drop elements whose leading term another kept element divides
    std::sort(g.begin(), g.end(), [](const Element& x, const Element& y) {
        return module_term_compare(vec_leading(x.v), vec_leading(y.v)) < 0;
    });
    std::vector<Element> kept;
    for (auto& e : g) {
        ModuleTerm le = vec_leading(e.v);
        bool divisible = false;
        for (const auto& h : kept) {
            ModuleTerm lh = vec_leading(h.v);
            if (lh.comp == le.comp && lh.m.divides(le.m)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) kept.push_back(std::move(e));
    }

    // interreduce tails, updating representations
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Element> others;
        others.reserve(kept.size() - 1);
        std::vector<std::size_t> omap;
        for (std::size_t j = 0; j < kept.size(); ++j) {
            if (j == i) continue;
            others.push_back(kept[j]);
            omap.push_back(j);
        }
        std::vector<Polynomial> q;
        VecPoly r = divide(kept[i].v, others, &q);
        for (std::size_t t = 0; t < ext_.size(); ++t) {
            Polynomial acc = kept[i].rep[t];
            for (std::size_t b = 0; b < others.size(); ++b)
                acc = sub(k, acc, mul(k, q[b], kept[omap[b]].rep[t]));
            kept[i].rep[t] = std::move(acc);
        }
        kept[i].v = std::move(r);
    }

    std::sort(kept.begin(), kept.end(), [](const Element& x, const Element& y) {
        return module_term_compare(vec_leading(x.v), vec_leading(y.v)) > 0;
    });
    gb_ = std::move(kept);
    basis_.clear();
    basis_.reserve(gb_.size());
    for (const auto& e : gb_) basis_.push_back(e.v);
}

VecPoly ModuleGB::nf(const VecPoly& v) const {
    if (v.size() != rank_) throw ShapeError("vector rank mismatch");
    return divide(v, gb_, nullptr);
}

std::optional<std::vector<Polynomial>> ModuleGB::witness(const VecPoly& v) const {
    if (v.size() != rank_) throw ShapeError("vector rank mismatch");
    const PrimeField& k = ring_.field();
    std::vector<Polynomial> q;
    VecPoly r = divide(v, gb_, &q);
    if (!vec_is_zero(r)) return std::nullopt;
    std::vector<Polynomial> c(orig_.size());
    for (std::size_t t = 0; t < orig_.size(); ++t) {
        Polynomial acc;
        for (std::size_t j = 0; j < gb_.size(); ++j)
            acc = add(k, acc, mul(k, q[j], gb_[j].rep[t]));
        c[t] = ring_.nf(acc);
    }
    // re-substitution: the defect must lie in (ideal) times the free module
    VecPoly s = vec_negate(k, v);
    for (std::size_t t = 0; t < orig_.size(); ++t)
        s = vec_add(k, s, vec_scale_poly(k, orig_[t], c[t]));
    for (const auto& comp : s)
        if (!ring_.is_zero_mod(comp)) throw Error("witness re-substitution failed");
    return c;
}

std::vector<VecPoly> ModuleGB::syzygies() const {
    const PrimeField& k = ring_.field();
    std::size_t s = gb_.size(), m = ext_.size(), r = orig_.size();

    // each extended generator divided by the basis: quotients with zero remainder
    std::vector<std::vector<Polynomial>> B(m);
    for (std::size_t t = 0; t < m; ++t) {
        VecPoly rem = divide(ext_[t], gb_, &B[t]);
        if (!vec_is_zero(rem)) throw Error("generator does not reduce to zero against its basis");
    }

    std::vector<std::vector<Polynomial>> raw;  // syzygies over the extended generators

    // Schreyer syzygies from every same-component pair of the reduced basis
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = i + 1; j < s; ++j) {
            ModuleTerm a = vec_leading(gb_[i].v), b = vec_leading(gb_[j].v);
            if (a.comp != b.comp) continue;
            Monomial l = a.m.lcm(b.m);
            Term ti{1, l.div(a.m)}, tj{1, l.div(b.m)};
            VecPoly sv =
                vec_sub(k, vec_scale_term(k, gb_[i].v, ti), vec_scale_term(k, gb_[j].v, tj));
            std::vector<Polynomial> q;
            VecPoly rem = divide(std::move(sv), gb_, &q);
            if (!vec_is_zero(rem)) throw Error("S-vector of a Groebner basis did not reduce to zero");
            // syzygy of the basis: ti e_i - tj e_j - q
            std::vector<Polynomial> d(s);
            d[i] = Polynomial::term(1, ti.m);
            d[j] = negate(k, Polynomial::term(1, tj.m));
            for (std::size_t t = 0; t < s; ++t) d[t] = sub(k, d[t], q[t]);
            // push down to the extended generators through the representations
            std::vector<Polynomial> row(m);
            for (std::size_t t = 0; t < m; ++t) {
                Polynomial acc;
                for (std::size_t u = 0; u < s; ++u)
                    acc = add(k, acc, mul(k, d[u], gb_[u].rep[t]));
                row[t] = std::move(acc);
            }
            raw.push_back(std::move(row));
        }
    }

    // rows of I - B A: generator t minus its expression through the basis
    for (std::size_t t = 0; t < m; ++t) {
        std::vector<Polynomial> row(m);
        row[t] = Polynomial::constant(k, 1, ring_.nvars());
        for (std::size_t u = 0; u < m; ++u) {
            Polynomial acc;
            for (std::size_t j = 0; j < s; ++j)
                acc = add(k, acc, mul(k, B[t][j], gb_[j].rep[u]));
            row[u] = sub(k, row[u], acc);
        }
        raw.push_back(std::move(row));
    }

    // keep the coordinates of the original generators, in the quotient ring
    std::vector<VecPoly> out;
    for (const auto& row : raw) {
        VecPoly v(r);
        for (std::size_t t = 0; t < r; ++t) v[t] = ring_.nf(row[t]);
        if (vec_is_zero(v)) continue;
        bool dup = false;
        for (const auto& w : out)
            if (w == v) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(std::move(v));
    }
    return out;
}

}  // namespace tac
