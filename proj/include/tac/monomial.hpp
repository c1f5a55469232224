#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "tac/errors.hpp"

namespace tac {

// exponent vector of fixed length; ordered by graded reverse lexicographic
// order with the last variable smallest
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint16_t> exps) : e_(std::move(exps)) {}

    std::size_t nvars() const { return e_.size(); }
    std::uint16_t operator[](std::size_t i) const { return e_[i]; }
    std::uint16_t& operator[](std::size_t i) { return e_[i]; }
    const std::vector<std::uint16_t>& exponents() const { return e_; }

    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

    bool is_one() const {
        for (auto x : e_)
            if (x) return false;
        return true;
    }

    Monomial mul(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // this / o; caller must ensure o divides this
    Monomial div(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (o.e_[i] > r.e_[i]) throw Error("monomial division with nonzero remainder");
            r.e_[i] -= o.e_[i];
        }
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (o.e_[i] > r.e_[i]) r.e_[i] = o.e_[i];
        return r;
    }

    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] && o.e_[i]) return false;
        return true;
    }

    // grevlex: positive if a > b, negative if a < b, zero if equal
    static int compare(const Monomial& a, const Monomial& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = a.e_.size(); i-- > 0;) {
            if (a.e_[i] != b.e_[i]) return a.e_[i] > b.e_[i] ? -1 : 1;
        }
        return 0;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
    std::vector<std::uint16_t> e_;
};

}  // namespace tac
