#include "subheat/poly.hpp"

#include "subheat/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>

namespace subheat {

namespace {

// Recursive-descent parser producing a monomial list. Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := number | var ('^' uint)? | '(' expr ')' | '-' factor
struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    int nvars;

    using Terms = std::vector<Polynomial::Monomial>;

    explicit Parser(const std::string& str, int n) : s(str), nvars(n) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw config_error("polynomial parse error at position " + std::to_string(pos) +
                           " in \"" + s + "\": " + what);
    }

    static Terms mul(const Terms& a, const Terms& b) {
        Terms out;
        for (const auto& ma : a)
            for (const auto& mb : b) {
                Polynomial::Monomial m;
                m.coef = ma.coef * mb.coef;
                m.exps.resize(ma.exps.size());
                for (std::size_t k = 0; k < m.exps.size(); ++k)
                    m.exps[k] = ma.exps[k] + mb.exps[k];
                out.push_back(std::move(m));
            }
        return out;
    }

    Terms one(double c) const {
        Polynomial::Monomial m;
        m.coef = c;
        m.exps.assign(static_cast<std::size_t>(nvars), 0);
        return {m};
    }

    Terms parse_expr() {
        Terms acc = parse_term();
        while (true) {
            const char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                Terms rhs = parse_term();
                for (auto& m : rhs) {
                    if (c == '-') m.coef = -m.coef;
                    acc.push_back(std::move(m));
                }
            } else {
                break;
            }
        }
        return acc;
    }

    Terms parse_term() {
        Terms acc = parse_factor();
        while (eat('*')) acc = mul(acc, parse_factor());
        return acc;
    }

    int var_index() {
        const char c = s[pos];
        if (c == 'x' && pos + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
            ++pos;
            int idx = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                idx = idx * 10 + (s[pos++] - '0');
            return idx - 1;
        }
        static const std::map<char, int> alias = {{'x', 0}, {'y', 1}, {'z', 2}, {'t', 3}};
        const auto it = alias.find(c);
        if (it == alias.end()) fail(std::string("unknown symbol '") + c + "'");
        ++pos;
        return it->second;
    }

    Terms parse_factor() {
        const char c = peek();
        if (c == '-') {
            ++pos;
            Terms t = parse_factor();
            for (auto& m : t) m.coef = -m.coef;
            return t;
        }
        if (c == '(') {
            ++pos;
            Terms t = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return maybe_pow(std::move(t));
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            char* end = nullptr;
            const double v = std::strtod(s.c_str() + pos, &end);
            pos = static_cast<std::size_t>(end - s.c_str());
            return one(v);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const int idx = var_index();
            if (idx < 0 || idx >= nvars)
                fail("variable index out of range for dimension " + std::to_string(nvars));
            Polynomial::Monomial m;
            m.coef = 1.0;
            m.exps.assign(static_cast<std::size_t>(nvars), 0);
            m.exps[static_cast<std::size_t>(idx)] = 1;
            return maybe_pow({m});
        }
        fail("unexpected character");
    }

    Terms maybe_pow(Terms base) {
        if (!eat('^')) return base;
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer exponent after '^'");
        int e = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            e = e * 10 + (s[pos++] - '0');
        Terms acc = one(1.0);
        for (int i = 0; i < e; ++i) acc = mul(acc, base);
        return acc;
    }
};

// Merge monomials with identical exponent vectors and drop zeros.
std::vector<Polynomial::Monomial> normalize(std::vector<Polynomial::Monomial> terms) {
    std::map<std::vector<int>, double> acc;
    for (const auto& m : terms) acc[m.exps] += m.coef;
    std::vector<Polynomial::Monomial> out;
    for (const auto& [exps, coef] : acc)
        if (coef != 0.0) out.push_back({coef, exps});
    return out;
}

} // namespace

Polynomial Polynomial::parse(const std::string& expr, int nvars) {
    Parser p(expr, nvars);
    auto terms = p.parse_expr();
    p.skip_ws();
    if (p.pos != expr.size()) p.fail("trailing characters");
    Polynomial poly;
    poly.nvars_ = nvars;
    poly.terms_ = normalize(std::move(terms));
    return poly;
}

double Polynomial::eval(std::span<const double> x) const {
    double sum = 0.0;
    for (const auto& m : terms_) {
        double v = m.coef;
        for (std::size_t k = 0; k < m.exps.size(); ++k)
            for (int e = 0; e < m.exps[k]; ++e) v *= x[k];
        sum += v;
    }
    return sum;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial out;
    out.nvars_ = nvars_;
    std::vector<Monomial> terms;
    for (const auto& m : terms_) {
        const int e = m.exps[static_cast<std::size_t>(var)];
        if (e == 0) continue;
        Monomial d = m;
        d.coef *= e;
        d.exps[static_cast<std::size_t>(var)] = e - 1;
        terms.push_back(std::move(d));
    }
    out.terms_ = normalize(std::move(terms));
    return out;
}

} // namespace subheat
