#pragma once

#include <cstdint>

#include "tac/errors.hpp"

namespace tac {

// residues are stored in [0, p)
using Coeff = std::uint32_t;

// arithmetic in F_p for a word-sized prime p
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 2) throw Error("field characteristic must be at least 2");
    }

    std::uint32_t characteristic() const { return p_; }

    Coeff from_int(long long n) const {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<Coeff>(r);
    }

    Coeff add(Coeff a, Coeff b) const {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        if (s >= p_) s -= p_;
        return static_cast<Coeff>(s);
    }

    Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : static_cast<Coeff>(a + p_ - b); }

    Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }

    Coeff mul(Coeff a, Coeff b) const {
        return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
    }

    Coeff inv(Coeff a) const {
        if (a == 0) throw Error("division by zero in prime field");
        // extended euclid on (a, p)
        std::int64_t t = 0, newt = 1;
        std::int64_t r = p_, newr = a;
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += p_;
        return static_cast<Coeff>(t);
    }

    Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

private:
    std::uint32_t p_;
};

}  // namespace tac
