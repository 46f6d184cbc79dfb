#include "qplab/laurent.hpp"

#include <cctype>
#include <sstream>

namespace qplab {

std::optional<Var> var_from_char(char c) {
    for (int i = 0; i < kNumVars; ++i)
        if (kVarNames[i] == c)
            return static_cast<Var>(i);
    return std::nullopt;
}

Monomial Monomial::pow(int e) const {
    Monomial r;
    if (e == 0)
        return r;
    if (e < 0) {
        if (coeff != 1 && coeff != -1)
            throw Error("Monomial::pow: negative power of non-unit coefficient");
        Monomial inv;
        inv.coeff = coeff; // +-1 is its own inverse
        for (int i = 0; i < kNumVars; ++i)
            inv.exps[i] = -exps[i];
        return inv.pow(-e);
    }
    r.coeff = int_pow(coeff, e);
    for (int i = 0; i < kNumVars; ++i)
        r.exps[i] = exps[i] * e;
    return r;
}

void LaurentPoly::add_term(const ExpVec& e, const BigInt& c) {
    if (c == 0)
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPoly operator-(const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, c] : p.terms_)
        r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& l, const LaurentPoly& r) {
    LaurentPoly out;
    for (const auto& [el, cl] : l.terms_) {
        for (const auto& [er, cr] : r.terms_) {
            ExpVec e;
            for (int i = 0; i < kNumVars; ++i)
                e[i] = el[i] + er[i];
            out.add_term(e, cl * cr);
        }
    }
    return out;
}

BigInt LaurentPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly LaurentPoly::coeff_of(Var v, int e) const {
    const int vi = static_cast<int>(v);
    LaurentPoly r;
    for (const auto& [ex, c] : terms_) {
        if (ex[vi] != e)
            continue;
        ExpVec stripped = ex;
        stripped[vi] = 0;
        r.add_term(stripped, c);
    }
    return r;
}

LaurentPoly LaurentPoly::substitute(const SubstMap& s) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
        Monomial m = Monomial::constant(c);
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] == 0)
                continue;
            auto it = s.find(static_cast<Var>(i));
            if (it == s.end())
                m *= Monomial::var(static_cast<Var>(i), e[i]);
            else
                m *= it->second.pow(e[i]);
        }
        out.add_term(m.exps, m.coeff);
    }
    return out;
}

int LaurentPoly::min_exp(Var v) const {
    const int vi = static_cast<int>(v);
    bool first = true;
    int m = 0;
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (first || e[vi] < m)
            m = e[vi];
        first = false;
    }
    return m;
}

int LaurentPoly::max_exp(Var v) const {
    const int vi = static_cast<int>(v);
    bool first = true;
    int m = 0;
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (first || e[vi] > m)
            m = e[vi];
        first = false;
    }
    return m;
}

Monomial LaurentPoly::leading_term() const {
    if (terms_.empty())
        throw Error("leading_term of zero polynomial");
    auto it = terms_.rbegin();
    return Monomial(it->second, it->first);
}

std::optional<ExpVec> LaurentPoly::first_difference(const LaurentPoly& l, const LaurentPoly& r) {
    auto il = l.terms_.begin(), ir = r.terms_.begin();
    GrlexLess less;
    while (il != l.terms_.end() && ir != r.terms_.end()) {
        if (less(il->first, ir->first))
            return il->first;
        if (less(ir->first, il->first))
            return ir->first;
        if (il->second != ir->second)
            return il->first;
        ++il;
        ++ir;
    }
    if (il != l.terms_.end())
        return il->first;
    if (ir != r.terms_.end())
        return ir->first;
    return std::nullopt;
}

std::string monomial_key_to_string(const ExpVec& e) {
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < kNumVars; ++i) {
        if (e[i] == 0)
            continue;
        if (any)
            os << '*';
        os << kVarNames[i];
        if (e[i] != 1)
            os << '^' << e[i];
        any = true;
    }
    if (!any)
        return "1";
    return os.str();
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        const BigInt& c = it->second;
        const bool neg = c < 0;
        BigInt mag = neg ? BigInt(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        const std::string vars = monomial_key_to_string(it->first);
        if (vars == "1")
            os << mag.str();
        else if (mag == 1)
            os << vars;
        else
            os << mag.str() << '*' << vars;
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw Error("polynomial parse error at position " + std::to_string(pos) + ": " + msg);
    }

    BigInt parse_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected digit");
        BigInt v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return v;
    }

    int parse_exponent() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        BigInt v = parse_uint();
        if (v > 1000000)
            fail("exponent out of range");
        int e = static_cast<int>(v);
        return neg ? -e : e;
    }

    // term := uint ('*' factors)? | factors
    Monomial parse_term() {
        Monomial m;
        skip_ws();
        bool saw_coeff = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            m.coeff = parse_uint();
            saw_coeff = true;
            skip_ws();
            if (pos < s.size() && s[pos] == '*')
                ++pos;
            else
                return m; // bare integer term
        }
        bool saw_var = false;
        while (true) {
            skip_ws();
            if (pos >= s.size())
                break;
            auto v = var_from_char(s[pos]);
            if (!v)
                break;
            ++pos;
            int e = 1;
            skip_ws();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                e = parse_exponent();
            }
            m.exps[static_cast<int>(*v)] += e;
            saw_var = true;
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!saw_var && !saw_coeff)
            fail("expected term");
        if (saw_coeff && !saw_var)
            fail("dangling '*' after coefficient");
        return m;
    }
};

} // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    Parser p(text);
    LaurentPoly out;
    if (p.eof())
        p.fail("empty input");
    bool neg = false;
    if (p.peek() == '-' || p.peek() == '+') {
        neg = p.peek() == '-';
        ++p.pos;
    }
    while (true) {
        Monomial m = p.parse_term();
        if (neg)
            m.coeff = -m.coeff;
        out.add_term(m.exps, m.coeff);
        if (p.eof())
            break;
        char c = p.peek();
        if (c != '+' && c != '-')
            p.fail("expected '+' or '-'");
        neg = c == '-';
        ++p.pos;
    }
    return out;
}

} // namespace qplab
