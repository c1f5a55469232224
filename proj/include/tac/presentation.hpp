#pragma once

#include "tac/freemap.hpp"

namespace tac {

// Cokernel presentation of a finitely generated module: M = R^gens / im(relations).
// relations is a gens x (number of relations) matrix whose columns are the
// relations.
class ModulePresentation {
public:
    ModulePresentation(QuotientRing ring, std::size_t gens, FreeMap relations);
    // presented by the cokernel of a matrix
    explicit ModulePresentation(const FreeMap& relations);

    const QuotientRing& ring() const { return ring_; }
    std::size_t gens() const { return gens_; }
    const FreeMap& relations() const { return rel_; }

    bool is_zero_module() const;

    // drop redundant relation columns, scanning last to first; keeps order
    ModulePresentation minimal_relations() const;

    // v = 0 in M?
    bool element_is_zero(const VecPoly& v) const;

private:
    QuotientRing ring_;
    std::size_t gens_;
    FreeMap rel_;
};

// result of striking unit entries from a presentation: an isomorphic module
// on fewer generators, with the change of generators in both directions.
// incl expresses the new generators in the old ones (old x new); proj
// expresses the old generators in the new ones (new x old); proj * incl is
// the identity on the nose, incl * proj is the identity modulo relations.
struct PrunedPresentation {
    ModulePresentation pres;
    FreeMap incl;
    FreeMap proj;
};

// eliminate generators against unit entries in the relation matrix until
// none remain, then drop redundant relation columns
PrunedPresentation prune_presentation(const ModulePresentation& p);

}  // namespace tac
