#ifndef QPLAB_LAURENT_HPP
#define QPLAB_LAURENT_HPP

#include "qplab/bigint.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qplab {

// Fixed variable alphabet. Every polynomial in the library lives in the
// Laurent ring Z[q±,t±,z±,a±,b±,c±,d±,x±,y±].
enum class Var : int { q = 0, t, z, a, b, c, d, x, y };

inline constexpr int kNumVars = 9;
inline constexpr char kVarNames[kNumVars] = {'q', 't', 'z', 'a', 'b', 'c', 'd', 'x', 'y'};

std::optional<Var> var_from_char(char c);

using ExpVec = std::array<int32_t, kNumVars>;

inline constexpr ExpVec kZeroExp{};

inline long total_degree(const ExpVec& e) {
    long s = 0;
    for (int32_t v : e)
        s += v;
    return s;
}

// Graded lexicographic order: total degree first, then lex on (q,t,z,...).
struct GrlexLess {
    bool operator()(const ExpVec& lhs, const ExpVec& rhs) const {
        long dl = total_degree(lhs), dr = total_degree(rhs);
        if (dl != dr)
            return dl < dr;
        return lhs < rhs;
    }
};

// One term: coefficient times a product of variable powers. Exponents may be
// negative. A Monomial with coefficient 0 is the zero monomial.
struct Monomial {
    BigInt coeff = 1;
    ExpVec exps{};

    Monomial() = default;
    Monomial(BigInt c, ExpVec e) : coeff(std::move(c)), exps(e) {}

    static Monomial constant(BigInt c) { return Monomial(std::move(c), kZeroExp); }
    static Monomial var(Var v, int e = 1) {
        ExpVec ex{};
        ex[static_cast<int>(v)] = e;
        return Monomial(1, ex);
    }

    Monomial& operator*=(const Monomial& o) {
        coeff *= o.coeff;
        for (int i = 0; i < kNumVars; ++i)
            exps[i] += o.exps[i];
        return *this;
    }
    friend Monomial operator*(Monomial l, const Monomial& r) { return l *= r; }
    friend Monomial operator-(Monomial m) {
        m.coeff = -m.coeff;
        return m;
    }

    // m^e; negative e requires coefficient +-1 (the only invertible ones).
    Monomial pow(int e) const;

    int exp(Var v) const { return exps[static_cast<int>(v)]; }
    bool is_zero() const { return coeff == 0; }
    bool is_constant() const { return exps == kZeroExp; }

    friend bool operator==(const Monomial& l, const Monomial& r) {
        return l.coeff == r.coeff && l.exps == r.exps;
    }
    friend bool operator<(const Monomial& l, const Monomial& r) {
        if (l.exps != r.exps)
            return GrlexLess{}(l.exps, r.exps);
        return l.coeff < r.coeff;
    }
};

// Substitution target: each mapped variable is replaced by a monomial,
// unmapped variables are kept. Example: {a -> q*t, b -> q*t^-1}.
using SubstMap = std::map<Var, Monomial>;

// Sparse multivariate Laurent polynomial with exact integer coefficients.
// Terms are kept normalized (no zero coefficients) and iterate in graded
// lexicographic order, which fixes the printed form.
class LaurentPoly {
public:
    using TermMap = std::map<ExpVec, BigInt, GrlexLess>;

    LaurentPoly() = default;
    LaurentPoly(const Monomial& m) {
        if (!m.is_zero())
            terms_[m.exps] = m.coeff;
    }
    LaurentPoly(const BigInt& c) : LaurentPoly(Monomial::constant(c)) {}
    LaurentPoly(int c) : LaurentPoly(BigInt(c)) {}

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(1); }
    static LaurentPoly var(Var v, int e = 1) { return LaurentPoly(Monomial::var(v, e)); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const ExpVec& e, const BigInt& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly l, const LaurentPoly& r) { return l += r; }
    friend LaurentPoly operator-(LaurentPoly l, const LaurentPoly& r) { return l -= r; }
    friend LaurentPoly operator-(const LaurentPoly& p);
    friend LaurentPoly operator*(const LaurentPoly& l, const LaurentPoly& r);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend bool operator==(const LaurentPoly& l, const LaurentPoly& r) {
        return l.terms_ == r.terms_;
    }

    BigInt coeff(const ExpVec& e) const;

    // Coefficient of var^e, as a polynomial in the remaining variables.
    LaurentPoly coeff_of(Var v, int e) const;

    // Simultaneous substitution; unmapped variables are untouched.
    LaurentPoly substitute(const SubstMap& s) const;

    // Min/max exponent of a variable over all terms (0 for the zero poly).
    int min_exp(Var v) const;
    int max_exp(Var v) const;

    // Grlex-largest term; polynomial must be nonzero.
    Monomial leading_term() const;

    // Grlex-least monomial at which the two polynomials differ.
    static std::optional<ExpVec> first_difference(const LaurentPoly& l, const LaurentPoly& r);

    // Canonical text form, grlex-ascending: "1 + q*t + 2*q^2 + q^3*t^-1".
    std::string to_string() const;

    // Inverse of to_string. Throws Error on malformed input.
    static LaurentPoly parse(const std::string& text);

private:
    TermMap terms_;
};

std::string monomial_key_to_string(const ExpVec& e);

} // namespace qplab

#endif
