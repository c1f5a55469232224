#pragma once

#include <utility>

#include "tac/chainmap.hpp"

namespace tac {

// Kronecker product on the chosen bases: rows and columns of the right
// factor vary fastest
FreeMap kron(const FreeMap& a, const FreeMap& b);

// (shift(C,k))_n = C_{n-k}, differentials scaled by (-1)^k
ChainComplex shift(const ChainComplex& c, int k);
ChainMap shift_map(const ChainMap& f, int k);

// (C*)_n = (C_{-n})*, d_n = transpose of d_{1-n} of C
ChainComplex dualize(const ChainComplex& c);

// cone(f)_n = target_n (+) source_{n-1}, differential [[d, f],[0, -d]]
ChainComplex cone(const ChainMap& f);
ChainMap cone_inclusion(const ChainMap& f);   // target -> cone
ChainMap cone_projection(const ChainMap& f);  // cone -> shift(source, 1)

// the cone with degree zero replaced by a free basis of ker(d_1 | f_0);
// source and target must be minimal resolutions concentrated in
// nonnegative degrees, f_0 surjective modulo the maximal ideal
ChainComplex truncated_cone(const ChainMap& f);

// entries reinterpreted over the target of the ring map
ChainComplex base_change(const ChainComplex& c, const RingMap& phi);
ChainMap base_change_map(const ChainMap& f, const RingMap& phi);

// degree n component (+)_i D_{n-i} tensor K_i, the D-differential carrying
// sign (-1)^i on the K_i block; K must be bounded
ChainComplex tensor_complexes(const ChainComplex& d, const ChainComplex& k);

// ker d_n inside im d_{n+1} for n in [lo, hi], on the complex and its dual
ComplexReport total_acyclicity_check(const ChainComplex& c, int lo, int hi);

// the canonical identification Hom_Q(C,Q) (x)_Q R = Hom_R(C (x)_Q R, R):
// both directions, composites equal to identities on the nose
std::pair<ChainMap, ChainMap> dual_base_change_iso(const ChainComplex& c, const RingMap& phi);

}  // namespace tac
