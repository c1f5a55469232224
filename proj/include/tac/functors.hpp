#pragma once

#include <optional>
#include <utility>

#include "tac/complex_ops.hpp"
#include "tac/homotopy.hpp"
#include "tac/resolution.hpp"

namespace tac {

// The adjoint pair attached to a surjection Q -> R = Q/(extra): base change
// S = - (x)_Q R from complexes over Q to complexes over R, and T sending a
// totally acyclic R-complex to a complete Q-resolution of the cokernel of
// its degree 1 differential.

// Everything T computes on the way to TC.  The counit and T on morphisms
// need the intermediate comparison data, so it all travels together.
struct TImage {
    ChainComplex c;     // the input complex, over R
    ChainComplex tc;    // complete resolution over Q
    ChainMap rho;       // tc -> fres comparison on degrees >= 0
    ChainComplex fres;  // minimal Q-free resolution of the restricted cokernel
    FreeMap incl;       // minimal generators inside the degree 0 basis of c
    FreeMap proj;       // left inverse of incl modulo relations
    int agreement;      // rho is the identity from this degree up
    std::optional<int> pd;  // set when the restricted cokernel has finite
                            // projective dimension (tc is then zero)
};

// TS(D) identified with D (x) K, both directions certified on a window
struct TensorIdentification {
    ChainComplex d;       // the input complex, over Q
    TImage t;             // apply_t(apply_s(d))
    ChainComplex tensor;  // d (x) K, with d's periodicity carried over
    Equivalence eq;       // t.tc <-> tensor
};

struct TowerReport {
    bool s_exact;        // S of the composite equals the composite of S, entrywise
    bool t_equivalent;   // T of the composite is homotopy equivalent to the composite of T
};

class AdjointPair {
public:
    // Resolves R over Q eagerly; throws RingError when that resolution does
    // not terminate within max_length steps (the pair needs pd_Q R finite).
    explicit AdjointPair(RingMap phi, int max_length = 20);

    const RingMap& map() const { return phi_; }
    const QuotientRing& q() const { return phi_.src; }
    const QuotientRing& r() const { return phi_.tgt; }
    const ChainComplex& k() const { return k_; }  // minimal Q-resolution of R
    int pd_r() const { return k_.hi(); }
    int max_length() const { return max_length_; }

    // entrywise reduction to R; the result is checked totally acyclic on a
    // window derived from d and the check's failure throws
    ChainComplex apply_s(const ChainComplex& d) const;
    ChainMap apply_s_map(const ChainMap& f) const;

    TImage apply_t(const ChainComplex& c) const;
    // the map t(a.c) -> t(b.c) induced by f : a.c -> b.c, with components
    // down to degree lo
    ChainMap apply_t_map(const TImage& a, const TImage& b, const ChainMap& f, int lo) const;

    // d (x) K, with d's periodicity reattached (the tensor shifts blocks
    // uniformly, so a periodic d gives a periodic product)
    ChainComplex tensor_with_k(const ChainComplex& d) const;

    // eta: d -> tensor_with_k(d), the degreewise inclusion into the K_0 block
    ChainMap unit(const ChainComplex& d) const;

    // epsilon: S(t.tc) -> t.c, the comparison map reduced to R and extended
    // down to degree lo
    ChainMap counit(const TImage& t, int lo) const;

    // TS(d) ~ d (x) K with both composites certified on [lo, hi]
    TensorIdentification ts_identification(const ChainComplex& d, int lo, int hi) const;

    // adjunction transport: g : d -> tc goes to counit . S[g] : S(d) -> c,
    // and f : S(d) -> c goes to T[f] . eta-tilde : d -> tc, where
    // eta-tilde identifies d (x) K with TS(d) first
    ChainMap adjoint_forward(const TImage& t, const ChainMap& g, int lo) const;
    ChainMap adjoint_backward(const TensorIdentification& sd, const TImage& t, const ChainMap& f,
                              int lo) const;

private:
    RingMap phi_;
    int max_length_;
    ChainComplex k_;
};

// Compare the two ways around a tower Q -> R' -> R: lower is Q -> R' and
// upper is R' -> R.  S composites must agree entrywise; T composites are
// compared by homotopy equivalence on [lo, hi].  d lives over Q, c over R.
TowerReport compose_functors_check(const AdjointPair& lower, const AdjointPair& upper,
                                   const ChainComplex& d, const ChainComplex& c, int lo, int hi);

}  // namespace tac
