#include "tac/presentation.hpp"

#include "tac/errors.hpp"

namespace tac {

ModulePresentation::ModulePresentation(QuotientRing ring, std::size_t gens, FreeMap relations)
    : ring_(std::move(ring)), gens_(gens), rel_(std::move(relations)) {
    if (rel_.rows() != gens_) throw ShapeError("relation matrix rows must match generator count");
    if (!rel_.ring().same_ring(ring_)) throw RingError("relations over a different ring");
}

ModulePresentation::ModulePresentation(const FreeMap& relations)
    : ModulePresentation(relations.ring(), relations.rows(), relations) {}

bool ModulePresentation::is_zero_module() const {
    if (gens_ == 0) return true;
    const ModuleGB& gb = rel_.column_gb();
    for (std::size_t i = 0; i < gens_; ++i) {
        VecPoly e(gens_);
        e[i] = Polynomial::constant(ring_.field(), 1, ring_.nvars());
        if (!gb.contains(e)) return false;
    }
    return true;
}

ModulePresentation ModulePresentation::minimal_relations() const {
    auto cols = minimal_generator_subset(ring_, gens_, rel_.columns());
    return ModulePresentation(ring_, gens_, FreeMap::from_columns(ring_, gens_, cols));
}

bool ModulePresentation::element_is_zero(const VecPoly& v) const {
    return rel_.column_gb().contains(v);
}

PrunedPresentation prune_presentation(const ModulePresentation& p) {
    QuotientRing ring = p.ring();
    const PrimeField& k = ring.field();
    FreeMap rel = p.relations();
    std::size_t g = p.gens();
    FreeMap incl = FreeMap::identity(ring, g);
    FreeMap proj = FreeMap::identity(ring, g);

    for (;;) {
        // find a unit entry
        std::size_t ui = 0, uj = 0;
        bool found = false;
        for (std::size_t i = 0; i < rel.rows() && !found; ++i)
            for (std::size_t j = 0; j < rel.cols() && !found; ++j)
                if (!rel.entry(i, j).is_zero() && ring.is_unit(rel.entry(i, j))) {
                    ui = i;
                    uj = j;
                    found = true;
                }
        if (!found) break;

        std::size_t ng = rel.rows();
        Polynomial uinv = ring.unit_inverse(rel.entry(ui, uj));

        // e_ui = -uinv * sum over t != ui of rel(t, uj) e_t
        // new generators: all but ui, in order
        std::vector<Polynomial> se(ng * (ng - 1));  // step incl, old x new
        std::vector<Polynomial> sp((ng - 1) * ng);  // step proj, new x old
        Polynomial one = Polynomial::constant(k, 1, ring.nvars());
        std::size_t col = 0;
        for (std::size_t t = 0; t < ng; ++t) {
            if (t == ui) continue;
            se[t * (ng - 1) + col] = one;
            sp[col * ng + t] = one;
            sp[col * ng + ui] =
                ring.nf(negate(k, mul(k, uinv, rel.entry(t, uj))));
            ++col;
        }
        FreeMap step_incl(ring, ng, ng - 1, std::move(se));
        FreeMap step_proj(ring, ng - 1, ng, std::move(sp));

        // clear row ui from the other columns, then delete row ui and column uj
        std::vector<VecPoly> newcols;
        VecPoly cj = rel.column(uj);
        for (std::size_t j = 0; j < rel.cols(); ++j) {
            if (j == uj) continue;
            VecPoly c = rel.column(j);
            Polynomial f = ring.nf(negate(k, mul(k, uinv, c[ui])));
            c = vec_add(k, c, vec_scale_poly(k, cj, f));
            VecPoly c2;
            c2.reserve(ng - 1);
            for (std::size_t t = 0; t < ng; ++t)
                if (t != ui) c2.push_back(ring.nf(c[t]));
            newcols.push_back(std::move(c2));
        }
        rel = FreeMap::from_columns(ring, ng - 1, newcols);
        incl = incl.compose(step_incl);
        proj = step_proj.compose(proj);
    }

    // drop zero and redundant relation columns
    ModulePresentation out(ring, rel.rows(), rel);
    out = out.minimal_relations();
    return PrunedPresentation{out, incl, proj};
}

}  // namespace tac
