#include "tac/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "tac/errors.hpp"

namespace tac {

Polynomial Polynomial::constant(const PrimeField& k, long long n, std::size_t nvars) {
    Coeff c = k.from_int(n);
    if (c == 0) return zero();
    return Polynomial({Term{c, Monomial(nvars)}});
}

Polynomial Polynomial::variable(std::size_t i, std::size_t nvars) {
    Monomial m(nvars);
    m[i] = 1;
    return Polynomial({Term{1, m}});
}

Polynomial Polynomial::term(Coeff c, Monomial m) {
    if (c == 0) return zero();
    return Polynomial({Term{c, std::move(m)}});
}

const Term& Polynomial::leading() const {
    if (t_.empty()) throw Error("leading term of the zero polynomial");
    return t_.front();
}

Coeff Polynomial::constant_term() const {
    if (t_.empty() || !t_.back().m.is_one()) return 0;
    return t_.back().c;
}

Polynomial add(const PrimeField& k, const Polynomial& a, const Polynomial& b) {
    std::vector<Term> out;
    out.reserve(a.nterms() + b.nterms());
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::size_t i = 0, j = 0;
    while (i < ta.size() && j < tb.size()) {
        int cmp = Monomial::compare(ta[i].m, tb[j].m);
        if (cmp > 0) {
            out.push_back(ta[i++]);
        } else if (cmp < 0) {
            out.push_back(tb[j++]);
        } else {
            Coeff c = k.add(ta[i].c, tb[j].c);
            if (c != 0) out.push_back(Term{c, ta[i].m});
            ++i;
            ++j;
        }
    }
    while (i < ta.size()) out.push_back(ta[i++]);
    while (j < tb.size()) out.push_back(tb[j++]);
    return Polynomial(std::move(out));
}

Polynomial negate(const PrimeField& k, const Polynomial& a) {
    std::vector<Term> out(a.terms());
    for (auto& t : out) t.c = k.neg(t.c);
    return Polynomial(std::move(out));
}

Polynomial sub(const PrimeField& k, const Polynomial& a, const Polynomial& b) {
    return add(k, a, negate(k, b));
}

Polynomial mul_term(const PrimeField& k, const Polynomial& a, const Term& t) {
    if (t.c == 0) return Polynomial::zero();
    std::vector<Term> out;
    out.reserve(a.nterms());
    for (const auto& s : a.terms()) {
        Coeff c = k.mul(s.c, t.c);
        if (c != 0) out.push_back(Term{c, s.m.mul(t.m)});
    }
    return Polynomial(std::move(out));
}

Polynomial mul(const PrimeField& k, const Polynomial& a, const Polynomial& b) {
    Polynomial acc;
    for (const auto& t : b.terms()) acc = add(k, acc, mul_term(k, a, t));
    return acc;
}

Polynomial scale(const PrimeField& k, const Polynomial& a, Coeff c) {
    if (c == 0) return Polynomial::zero();
    std::vector<Term> out(a.terms());
    for (auto& t : out) t.c = k.mul(t.c, c);
    return Polynomial(std::move(out));
}

Polynomial make_monic(const PrimeField& k, const Polynomial& a) {
    if (a.is_zero()) return a;
    return scale(k, a, k.inv(a.leading_coeff()));
}

namespace {

std::string print_coeff(const PrimeField& k, Coeff c) {
    // balanced representatives: residues above p/2 print negative
    if (c > k.characteristic() / 2)
        return "-" + std::to_string(k.characteristic() - c);
    return std::to_string(c);
}

std::string print_monomial(const Monomial& m, const std::vector<std::string>& vars) {
    std::string s;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

}  // namespace

std::string print_polynomial(const PrimeField& k, const Polynomial& a,
                             const std::vector<std::string>& vars) {
    if (a.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : a.terms()) {
        std::string cs = print_coeff(k, t.c);
        bool neg = cs[0] == '-';
        std::string abs = neg ? cs.substr(1) : cs;
        if (first) {
            s += neg ? "-" : "";
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        std::string ms = print_monomial(t.m, vars);
        if (ms.empty()) {
            s += abs;
        } else if (abs == "1") {
            s += ms;
        } else {
            s += abs + "*" + ms;
        }
    }
    return s;
}

namespace {

struct PolyLexer {
    const std::string& text;
    std::size_t pos = 0;
    int line;
    int col0;

    explicit PolyLexer(const std::string& t, int line_, int col0_)
        : text(t), line(line_), col0(col0_) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line, col0 + static_cast<int>(pos));
    }

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    long long number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::stoll(text.substr(start, pos - start));
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected a variable name");
        return text.substr(start, pos - start);
    }
};

}  // namespace

Polynomial parse_polynomial(const PrimeField& k, const std::string& text,
                            const std::vector<std::string>& vars, int line, int col0) {
    PolyLexer lx(text, line, col0);
    std::size_t nvars = vars.size();
    Polynomial result;
    bool first = true;
    while (!lx.eof()) {
        // sign
        Coeff sign = 1;
        if (lx.accept('-')) {
            sign = k.neg(1);
        } else if (lx.accept('+')) {
            if (first) lx.fail("unexpected leading +");
        } else if (!first) {
            lx.fail("expected + or - between terms");
        }
        if (lx.eof()) lx.fail("dangling sign");
        first = false;

        // factors joined by *
        Coeff c = sign;
        Monomial m(nvars);
        bool any = false;
        do {
            char ch = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                c = k.mul(c, k.from_int(lx.number()));
            } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                std::string name = lx.ident();
                auto it = std::find(vars.begin(), vars.end(), name);
                if (it == vars.end()) lx.fail("unknown variable '" + name + "'");
                std::size_t vi = static_cast<std::size_t>(it - vars.begin());
                long long e = 1;
                if (lx.accept('^')) e = lx.number();
                if (e < 0 || e > 0xffff) lx.fail("exponent out of range");
                m[vi] = static_cast<std::uint16_t>(m[vi] + e);
            } else {
                lx.fail("expected a coefficient or variable");
            }
            any = true;
        } while (lx.accept('*'));
        if (!any) lx.fail("empty term");
        result = add(k, result, Polynomial::term(c, m));
    }
    return result;
}

}  // namespace tac
