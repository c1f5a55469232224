#pragma once

#include <string>
#include <vector>

#include "tac/field.hpp"
#include "tac/monomial.hpp"

namespace tac {

struct Term {
    Coeff c = 0;
    Monomial m;
};

// sparse polynomial: terms sorted strictly descending in the monomial order,
// no zero coefficients; the zero polynomial is the empty list
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Term> terms) : t_(std::move(terms)) {}

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const PrimeField& k, long long n, std::size_t nvars);
    static Polynomial variable(std::size_t i, std::size_t nvars);
    static Polynomial term(Coeff c, Monomial m);

    bool is_zero() const { return t_.empty(); }
    const std::vector<Term>& terms() const { return t_; }
    std::size_t nterms() const { return t_.size(); }

    const Term& leading() const;
    const Monomial& leading_monomial() const { return leading().m; }
    Coeff leading_coeff() const { return leading().c; }
    int degree() const { return t_.empty() ? -1 : t_.front().m.degree(); }

    // coefficient of the degree-zero monomial
    Coeff constant_term() const;

    bool operator==(const Polynomial& o) const { return t_ == o.t_; }
    bool operator!=(const Polynomial& o) const { return t_ != o.t_; }

private:
    std::vector<Term> t_;
};

inline bool operator==(const Term& a, const Term& b) { return a.c == b.c && a.m == b.m; }
inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }

Polynomial add(const PrimeField& k, const Polynomial& a, const Polynomial& b);
Polynomial sub(const PrimeField& k, const Polynomial& a, const Polynomial& b);
Polynomial negate(const PrimeField& k, const Polynomial& a);
Polynomial mul(const PrimeField& k, const Polynomial& a, const Polynomial& b);
Polynomial mul_term(const PrimeField& k, const Polynomial& a, const Term& t);
Polynomial scale(const PrimeField& k, const Polynomial& a, Coeff c);
// scale so the leading coefficient becomes 1
Polynomial make_monic(const PrimeField& k, const Polynomial& a);

// text form: terms joined by +/-; a term is coeff*mono, mono, or coeff;
// monomials use * separators and ^ powers, e.g. 3*x^2*y - y + 1.
// coefficients above p/2 print balanced as negatives.
std::string print_polynomial(const PrimeField& k, const Polynomial& a,
                             const std::vector<std::string>& vars);
Polynomial parse_polynomial(const PrimeField& k, const std::string& text,
                            const std::vector<std::string>& vars, int line = 0, int col0 = 0);

}  // namespace tac
