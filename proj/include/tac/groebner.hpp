#pragma once

#include <optional>
#include <vector>

#include "tac/ring.hpp"

namespace tac {

// dense vector of polynomials; the rank is the length
using VecPoly = std::vector<Polynomial>;

struct ModuleTerm {
    std::size_t comp = 0;
    Monomial m;
};

// position over term: smaller component index is larger, ties by the
// monomial order
int module_term_compare(const ModuleTerm& a, const ModuleTerm& b);

bool vec_is_zero(const VecPoly& v);
VecPoly vec_zero(std::size_t rank);
VecPoly vec_add(const PrimeField& k, const VecPoly& a, const VecPoly& b);
VecPoly vec_sub(const PrimeField& k, const VecPoly& a, const VecPoly& b);
VecPoly vec_negate(const PrimeField& k, const VecPoly& a);
VecPoly vec_scale(const PrimeField& k, const VecPoly& a, Coeff c);
VecPoly vec_scale_term(const PrimeField& k, const VecPoly& a, const Term& t);
VecPoly vec_scale_poly(const PrimeField& k, const VecPoly& a, const Polynomial& p);
// leading module term; the vector must be nonzero
ModuleTerm vec_leading(const VecPoly& v);
Coeff vec_leading_coeff(const VecPoly& v);
VecPoly vec_nf_ring(const QuotientRing& ring, const VecPoly& v);  // componentwise

// Groebner basis of a submodule of a free module over a quotient ring,
// computed over the ambient polynomial ring with ideal-multiple generators
// appended. Stores representations of basis elements in terms of the input
// generators, which back membership witnesses and syzygies.
class ModuleGB {
public:
    ModuleGB(QuotientRing ring, std::size_t rank, std::vector<VecPoly> gens);

    const QuotientRing& ring() const { return ring_; }
    std::size_t rank() const { return rank_; }
    const std::vector<VecPoly>& generators() const { return orig_; }

    // reduced basis of the extended submodule: monic, interreduced,
    // sorted descending by leading module term
    const std::vector<VecPoly>& basis() const { return basis_; }

    // unique remainder against the reduced basis; zero iff v lies in the
    // submodule generated by the generators over the quotient ring
    VecPoly nf(const VecPoly& v) const;
    bool contains(const VecPoly& v) const { return vec_is_zero(nf(v)); }

    // coefficients c over the original generators with v = sum c_i gen_i in
    // the quotient ring, verified by re-substitution; nullopt if not a member
    std::optional<std::vector<Polynomial>> witness(const VecPoly& v) const;

    // generators of the syzygy module of the original generators over the
    // quotient ring (Schreyer construction on the reduced basis)
    std::vector<VecPoly> syzygies() const;

private:
    struct Element {
        VecPoly v;
        std::vector<Polynomial> rep;  // over the extended generators
    };

    void compute();
    // full normal form with quotient tracking against the current basis
    VecPoly divide(VecPoly v, const std::vector<Element>& basis,
                   std::vector<Polynomial>* quotients) const;

    QuotientRing ring_;
    std::size_t rank_ = 0;
    std::vector<VecPoly> orig_;
    std::vector<VecPoly> ext_;  // originals plus ideal generator multiples
    std::vector<Element> gb_;
    std::vector<VecPoly> basis_;  // gb_ without representations
};

}  // namespace tac
