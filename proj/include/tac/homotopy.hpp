#pragma once

#include <optional>
#include <utility>

#include "tac/chainmap.hpp"

namespace tac {

// Comparison machinery: lifting maps through resolutions, extending
// morphisms of totally acyclic complexes downward, and searching for
// homotopies.  Solvability of every step is decided exactly through
// Groebner membership, so a failed search against a complete strategy is a
// certificate of non-existence, not a heuristic miss.

// Chain map F -> G with component a in degree 0, lifted degree by degree
// through the differentials.  F and G must be exact in the degrees the lift
// walks through (resolutions, or non-negative parts of totally acyclic
// complexes).  a maps F_0 to G_0.  The lift stops at top when given, else
// at the smaller of the two stored windows; periodic complexes fold, so a
// top beyond their stored window is fine.  Throws SolveError when a step
// has no solution.
ChainMap lift_through(const FreeMap& a, const ChainComplex& f, const ChainComplex& g,
                      std::optional<int> top = std::nullopt);

// Extend a chain map downward: f commutes in degrees above its window
// bottom; produce components down to degree lo, solving
// X * d^src_{s+1} = d^tgt_{s+1} * f_{s+1} for each new degree s.  The solve
// is guaranteed when the source is totally acyclic and the target is
// degreewise free.  Throws SolveError when a step has no solution.
ChainMap extend_morphism(const ChainMap& f, int lo);

// Homotopy sigma with f - g = d*sigma + sigma*d on [lo, hi], or nullopt
// when none exists over that window.  Strategies, in order: zero
// difference; upward lifting when the source is bounded below; zero seed
// above the top of the difference's support, extended downward; a cyclic
// solve over one period when everything in sight is periodic; and a full
// window solve whose failure is decisive for the window.
std::optional<Homotopy> find_homotopy(const ChainMap& f, const ChainMap& g, int lo, int hi);

// Isomorphism between two presented modules: u expresses A-generators in
// B-generators (B.gens x A.gens) and v the other way, with both composites
// the identity modulo relations.  nullopt when the search is exhausted or
// the minimal generator counts differ.
std::optional<std::pair<FreeMap, FreeMap>> find_module_iso(const ModulePresentation& a,
                                                           const ModulePresentation& b);

// Gaussian reduction of a complex over the window [lo, hi]: repeatedly
// split off unit entries of the differentials.  incl and proj connect the
// reduced complex to the materialized window of the input; proj * incl is
// the identity.
struct PrunedComplex {
    ChainComplex c;
    ChainMap incl;  // reduced -> original window
    ChainMap proj;  // original window -> reduced
};
PrunedComplex prune_complex(const ChainComplex& c, int lo, int hi);

// Homotopy equivalence between totally acyclic complexes, found by
// matching their augmentations, lifting both ways, and certifying both
// composites on [lo, hi].  The windows of c and d must extend a little
// beyond [lo, hi].
struct Equivalence {
    ChainMap fwd;      // c -> d
    ChainMap bwd;      // d -> c
    Homotopy fwd_bwd;  // fwd * bwd ~ id_d
    Homotopy bwd_fwd;  // bwd * fwd ~ id_c
};
std::optional<Equivalence> homotopy_equivalent(const ChainComplex& c, const ChainComplex& d,
                                               int lo, int hi);

}  // namespace tac
