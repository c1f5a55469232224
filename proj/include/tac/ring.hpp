#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tac/polynomial.hpp"

namespace tac {

// A quotient of a polynomial ring over a prime field by an ideal given by
// explicit generators. The ambient ring is the special case of no generators.
// Normal forms, unit tests and the classification flags are computed lazily
// from the reduced Groebner basis of the ideal and cached; the cache is
// write-once and the ring value is immutable.
class QuotientRing {
public:
    QuotientRing(PrimeField field, std::vector<std::string> vars,
                 std::vector<Polynomial> ideal_gens);

    static QuotientRing polynomial_ring(PrimeField field, std::vector<std::string> vars);

    // same variables and field, no ideal
    QuotientRing ambient() const;
    // this ring modulo additional elements
    QuotientRing quotient_by(std::vector<Polynomial> extra) const;

    const PrimeField& field() const;
    std::size_t nvars() const;
    const std::vector<std::string>& vars() const;
    const std::vector<Polynomial>& ideal_gens() const;

    // reduced Groebner basis of the ideal in the ambient ring
    const std::vector<Polynomial>& ideal_basis() const;

    // canonical representative of the residue class
    Polynomial nf(const Polynomial& p) const;
    bool is_zero_mod(const Polynomial& p) const;
    bool is_unit(const Polynomial& p) const;
    // v with p*v = 1 in the ring; p must be a unit
    Polynomial unit_inverse(const Polynomial& p) const;

    bool is_ambient_poly_ring() const;       // zero ideal
    bool is_proper() const;                  // 1 not in the ideal
    bool is_hypersurface() const;            // ideal basis has exactly one element
    bool is_artinian() const;                // finite dimensional over k
    bool is_complete_intersection() const;   // declared generators form a regular sequence

    Polynomial parse(const std::string& text, int line = 0, int col0 = 0) const;
    std::string print(const Polynomial& p) const;

    bool same_ring(const QuotientRing& o) const;
    std::string describe() const;

private:
    struct Data;
    std::shared_ptr<Data> d_;
};

// A surjection Q -> R = Q/(extra) of quotients of the same ambient ring.
struct RingMap {
    QuotientRing src;
    QuotientRing tgt;
    std::vector<Polynomial> extra;  // generators of the kernel, as elements of Q

    RingMap(QuotientRing q, QuotientRing r);
    RingMap(QuotientRing q, std::vector<Polynomial> extra_gens);
};

}  // namespace tac
