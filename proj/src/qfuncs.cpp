#include "qplab/qfuncs.hpp"

#include <mutex>
#include <tuple>

namespace qplab {

LaurentPoly pochhammer(const Monomial& a0, const Monomial& base, int L) {
    if (L < 0)
        throw Error("pochhammer: negative length");
    LaurentPoly r = LaurentPoly::one();
    Monomial m = a0;
    for (int n = 0; n < L; ++n) {
        r *= LaurentPoly::one() - LaurentPoly(m);
        m *= base;
    }
    return r;
}

namespace {

// Units of the truncated ring: monomials whose powers eventually fall out of
// the cutoff box, so 1/(1-m) has a finite expansion.
bool vanishes_eventually(const Monomial& m, const Grading& g) {
    const long gr = g.grade(m);
    const int xd = m.exps[static_cast<int>(Var::x)];
    if (gr < 0 || xd < 0)
        return false;
    if (gr > 0)
        return true;
    return g.x_cutoff >= 0 && xd > 0;
}

} // namespace

TruncatedSeries pochhammer_series(const Monomial& a0, const Monomial& base,
                                  std::optional<int> L, const Grading& g) {
    TruncatedSeries r = TruncatedSeries::one(g);
    Monomial m = a0;
    if (!L && !vanishes_eventually(base, g))
        throw Error("pochhammer_series: infinite product with non-increasing factor grade");
    int n = 0;
    while (L ? n < *L : g.keeps(m.exps)) {
        if (g.keeps(m.exps))
            r *= LaurentPoly::one() - LaurentPoly(m);
        m *= base;
        ++n;
    }
    return r;
}

TruncatedSeries pochhammer_inv(const Monomial& a0, const Monomial& base,
                               std::optional<int> L, const Grading& g) {
    TruncatedSeries r = TruncatedSeries::one(g);
    Monomial m = a0;
    if (!L && !vanishes_eventually(base, g))
        throw Error("pochhammer_inv: infinite product with non-increasing factor grade");
    int n = 0;
    while (L ? n < *L : g.keeps(m.exps)) {
        if (m.is_zero() || !g.keeps(m.exps)) {
            m *= base;
            ++n;
            continue;
        }
        if (!vanishes_eventually(m, g))
            throw Error("pochhammer_inv: factor 1 - " + LaurentPoly(m).to_string() +
                        " is not a unit in the truncated ring");
        LaurentPoly geo = LaurentPoly::one();
        Monomial p = m;
        while (g.keeps(p.exps)) {
            geo.add_term(p.exps, p.coeff);
            p *= m;
        }
        r *= geo;
        m *= base;
        ++n;
    }
    return r;
}

namespace {

struct BinomKey {
    int k, n;
    Monomial base;
    bool operator<(const BinomKey& o) const {
        return std::tie(k, n, base) < std::tie(o.k, o.n, o.base);
    }
};

std::mutex g_binom_mutex;
std::map<BinomKey, LaurentPoly> g_binom_memo;

LaurentPoly gaussian_binomial_rec(int k, int n, const Monomial& base) {
    if (n < 0 || k < n)
        return LaurentPoly::zero();
    if (n == 0 || n == k)
        return LaurentPoly::one();
    BinomKey key{k, n, base};
    {
        std::lock_guard<std::mutex> lock(g_binom_mutex);
        auto it = g_binom_memo.find(key);
        if (it != g_binom_memo.end())
            return it->second;
    }
    // [k; n] = [k-1; n-1] + base^n [k-1; n]
    LaurentPoly r = gaussian_binomial_rec(k - 1, n - 1, base) +
                    LaurentPoly(base.pow(n)) * gaussian_binomial_rec(k - 1, n, base);
    std::lock_guard<std::mutex> lock(g_binom_mutex);
    return g_binom_memo.emplace(key, std::move(r)).first->second;
}

} // namespace

LaurentPoly gaussian_binomial(int k, int n, const Monomial& base) {
    return gaussian_binomial_rec(k, n, base);
}

LaurentPoly q_trinomial(int k, int n, int m, const Monomial& base) {
    if (n < 0 || m < 0 || k < n + m)
        return LaurentPoly::zero();
    return gaussian_binomial(k, n, base) * gaussian_binomial(k - n, m, base);
}

LaurentPoly pochhammer_ratio_binomial(int n, int m, const Monomial& base) {
    if (n == 0)
        return LaurentPoly::one();
    return gaussian_binomial(n + m - 1, n, base);
}

LaurentPoly rogers_szego(int N, const Monomial& zm, const Monomial& base) {
    if (N < 0)
        throw Error("rogers_szego: negative degree");
    LaurentPoly r;
    for (int l = 0; l <= N; ++l)
        r += gaussian_binomial(N, l, base) * LaurentPoly(zm.pow(l));
    return r;
}

namespace {

// Smallest exponent per variable, used to strip monomial content before
// polynomial reduction (every monomial is a unit of the Laurent ring).
ExpVec content_exponents(const LaurentPoly& p) {
    ExpVec mins{};
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        (void)c;
        for (int i = 0; i < kNumVars; ++i)
            mins[i] = first ? e[i] : std::min(mins[i], e[i]);
        first = false;
    }
    return mins;
}

LaurentPoly shift(const LaurentPoly& p, const ExpVec& by) {
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) {
        ExpVec s;
        for (int i = 0; i < kNumVars; ++i)
            s[i] = e[i] + by[i];
        r.add_term(s, c);
    }
    return r;
}

} // namespace

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero())
        throw Error("divide_exact: division by zero");
    if (num.is_zero())
        return LaurentPoly::zero();

    const ExpVec cn = content_exponents(num);
    const ExpVec cd = content_exponents(den);
    ExpVec neg_cn{}, neg_cd{}, shift_back{};
    for (int i = 0; i < kNumVars; ++i) {
        neg_cn[i] = -cn[i];
        neg_cd[i] = -cd[i];
        shift_back[i] = cn[i] - cd[i];
    }
    LaurentPoly r = shift(num, neg_cn);
    const LaurentPoly d = shift(den, neg_cd);
    const Monomial lt_d = d.leading_term();

    LaurentPoly quot;
    while (!r.is_zero()) {
        const Monomial lt_r = r.leading_term();
        ExpVec e;
        for (int i = 0; i < kNumVars; ++i) {
            e[i] = lt_r.exps[i] - lt_d.exps[i];
            if (e[i] < 0)
                throw Error("divide_exact: nonzero remainder");
        }
        BigInt c = lt_r.coeff / lt_d.coeff;
        if (c * lt_d.coeff != lt_r.coeff)
            throw Error("divide_exact: nonzero remainder");
        const Monomial t(c, e);
        quot.add_term(t.exps, t.coeff);
        r -= LaurentPoly(t) * d;
    }
    return shift(quot, shift_back);
}

Rational eval_rational(const Monomial& m, const RationalAssignment& at) {
    Rational r(m.coeff);
    for (int i = 0; i < kNumVars; ++i) {
        if (m.exps[i] == 0)
            continue;
        auto it = at.find(static_cast<Var>(i));
        if (it == at.end())
            throw Error(std::string("eval_rational: unassigned variable ") + kVarNames[i]);
        if (it->second == 0 && m.exps[i] < 0)
            throw Error("eval_rational: zero raised to negative power");
        r *= rat_pow(it->second, m.exps[i]);
    }
    return r;
}

Rational eval_rational(const LaurentPoly& p, const RationalAssignment& at) {
    Rational r = 0;
    for (const auto& [e, c] : p.terms())
        r += eval_rational(Monomial(c, e), at);
    return r;
}

Rational pochhammer_rational(const Rational& a0, const Rational& base, int L) {
    if (L < 0)
        throw Error("pochhammer_rational: negative length");
    Rational r = 1, m = a0;
    for (int n = 0; n < L; ++n) {
        r *= Rational(1) - m;
        m *= base;
    }
    return r;
}

Rational phi_terminating(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                         const Rational& base, const Rational& z) {
    if (base == 0)
        throw Error("phi_terminating: zero base");
    constexpr int kMaxK = 512;
    std::optional<int> K;
    {
        Rational pw = 1; // base^-k
        for (int k = 0; k <= kMaxK && !K; ++k) {
            for (const Rational& u : upper)
                if (u == pw) {
                    K = k;
                    break;
                }
            pw /= base;
        }
    }
    if (!K)
        throw Error("phi_terminating: no upper parameter of the form base^-K (non-terminating)");

    const long corr = 1 - static_cast<long>(upper.size()) + static_cast<long>(lower.size());
    Rational sum = 0, term = 1;
    Rational bp = 1; // base^(n-1) while processing term n
    for (int n = 0; n <= *K; ++n) {
        if (n > 0) {
            Rational up = 1;
            for (const Rational& u : upper)
                up *= Rational(1) - u * bp;
            Rational down = Rational(1) - rat_pow(base, n);
            for (const Rational& b : lower)
                down *= Rational(1) - b * bp;
            if (down == 0)
                throw Error("phi_terminating: vanishing denominator factor");
            term *= up / down * z;
            if (corr != 0)
                term *= rat_pow(Rational(-1) * bp, corr); // ((-1) base^(n-1))^corr
            bp *= base;
        }
        sum += term;
    }
    return sum;
}

} // namespace qplab
