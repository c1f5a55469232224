#pragma once

#include <optional>

#include "tac/chainmap.hpp"
#include "tac/complex.hpp"
#include "tac/ring.hpp"

namespace tac {

// View a module presented over R = Q/(extra) as a module over Q: the same
// generators, with the relations rewritten over Q and the columns g*e_j for
// each extra ideal generator g appended, then reduced to an irredundant set.
ModulePresentation restrict_scalars(const ModulePresentation& m, const RingMap& phi);

// Minimal free resolution of a presented module, as a complex concentrated
// in [0, length] with the pruned presentation stored as augmentation.
// Differentials are produced by the canonical kernel of the previous one,
// so equal input matrices yield bit-equal resolutions.  incl and proj
// translate between the generators of the input presentation and the
// pruned ones in degree 0.  minimal records whether every differential
// entry avoids a unit constant term; it can only fail for presentations
// with non-graded unit-free relation entries.
struct Resolution {
    ChainComplex c;
    FreeMap incl;
    FreeMap proj;
    bool minimal;
};
Resolution minimal_free_resolution(const ModulePresentation& m, int length);

// Smallest p <= 2 with d_{n+p} = d_n bit-exactly from some onset degree on,
// over the stored window.  nullopt when the resolution terminates or never
// repeats.  Because each differential is a pure function of the previous
// one, a single repetition pins down the whole tail.
struct PeriodInfo {
    int period;
    int onset;
};
std::optional<PeriodInfo> detect_periodicity(const ChainComplex& f);

// The d-th syzygy of m with d = nvars + 1, presented by consecutive
// resolution differentials, together with the shift.
struct McmSyzygy {
    ModulePresentation pres;
    int shift;
};
McmSyzygy mcm_syzygy(const ModulePresentation& m);

// A complete resolution of M: a totally acyclic complex u together with a
// comparison rho: u -> f to the minimal free resolution that is the
// identity in all degrees >= agreement.  When M has finite projective
// dimension u is the zero complex, rho is zero and pd records the
// dimension (-1 for the zero module).
//
// Construction: resolve; if the resolution terminates, done.  Otherwise,
// if the tail becomes periodic, extend the period to all degrees and check
// total acyclicity.  Otherwise, over an Artinian complete intersection,
// splice the resolution with the dual of a resolution of the dual module
// (Matlis duality makes every module reflexive there, so no syzygy
// replacement is needed).
struct CompleteResolution {
    ChainComplex u;
    ChainMap rho;
    ChainComplex f;
    FreeMap incl;  // input generators -> pruned degree-0 generators of f
    FreeMap proj;  // and back, proj.compose(incl) = id
    int agreement;
    std::optional<int> pd;
};
CompleteResolution complete_resolution(const ModulePresentation& m, int max_length = 20);

// The splice construction alone, for cross-checking the periodic path on
// rings where both apply.  Requires an Artinian complete intersection.
CompleteResolution complete_resolution_by_splice(const ModulePresentation& m,
                                                 int max_length = 20);

}  // namespace tac
