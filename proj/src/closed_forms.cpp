#include "qplab/closed_forms.hpp"

#include <atomic>

namespace qplab {
namespace closed_forms {

namespace {

std::atomic<bool> g_mutate{false};

Monomial q_pow(int e) { return Monomial::var(Var::q, e); }

Monomial mono(std::initializer_list<std::pair<Var, int>> factors, BigInt coeff = 1) {
    Monomial m = Monomial::constant(std::move(coeff));
    for (const auto& [v, e] : factors)
        m *= Monomial::var(v, e);
    return m;
}

const Monomial kQ2 = Monomial::var(Var::q, 2);
const Monomial kQ4 = Monomial::var(Var::q, 4);
const Monomial kBigQ = mono({{Var::a, 1}, {Var::b, 1}, {Var::c, 1}, {Var::d, 1}});
const Monomial kAB = mono({{Var::a, 1}, {Var::b, 1}});
const Monomial kAC = mono({{Var::a, 1}, {Var::c, 1}});
const Monomial kABC = mono({{Var::a, 1}, {Var::b, 1}, {Var::c, 1}});

} // namespace

void set_test_mutation(bool enabled) { g_mutate.store(enabled); }
bool test_mutation_enabled() { return g_mutate.load(); }

LaurentPoly p_distinct_closed(int bound, int i, int j) {
    if (i < 0 || j < 0)
        return LaurentPoly::zero();
    const auto [N, nu] = split_bound(bound);
    const LaurentPoly tri = q_trinomial(N + nu, i, j, kQ4);
    if (tri.is_zero())
        return tri;
    const int i_sign = g_mutate.load() ? 1 : -1;
    LaurentPoly r = LaurentPoly(q_pow(2 * i * i + i_sign * i + 2 * j * j + j)) * tri *
                    pochhammer(-kQ2, kQ2, N - i - j + nu);
    if (nu == 1) {
        r *= LaurentPoly::one() - LaurentPoly(q_pow(2 * (N + i - j + 1)));
        r = divide_exact(r, LaurentPoly::one() - LaurentPoly(q_pow(4 * (N + 1))));
    }
    return r;
}

TruncatedSeries p_distinct_limit(int i, int j, int cutoff) {
    const Grading g = Grading::norm(cutoff);
    TruncatedSeries r = pochhammer_series(-kQ2, kQ2, std::nullopt, g);
    r *= q_pow(2 * i * i - i + 2 * j * j + j);
    r *= pochhammer_inv(kQ4, kQ4, i, g);
    r *= pochhammer_inv(kQ4, kQ4, j, g);
    return r;
}

TruncatedSeries gf_1or3_mod4(int k, int mu, int cutoff) {
    if (mu != 0 && mu != 1)
        throw Error("gf_1or3_mod4: mu must be 0 or 1");
    const Grading g = Grading::norm(cutoff);
    const int sign = mu == 0 ? 1 : -1;
    TruncatedSeries r(LaurentPoly(q_pow(2 * k * k + sign * k)), g);
    r *= pochhammer_inv(kQ4, kQ4, k, g);
    return r;
}

TruncatedSeries savage_sills_product(int k, int line, int cutoff) {
    const Grading g = Grading::norm(cutoff);
    TruncatedSeries r = pochhammer_series(-kQ2, kQ2, std::nullopt, g);
    if (line == 1) {
        r *= pochhammer_series(-q_pow(1), kQ4, std::nullopt, g);
        r *= LaurentPoly(q_pow(2 * k * k + k));
    } else if (line == 2) {
        r *= pochhammer_series(-q_pow(3), kQ4, std::nullopt, g);
        r *= LaurentPoly(q_pow(2 * k * k - k));
    } else {
        throw Error("savage_sills_product: line must be 1 or 2");
    }
    r *= pochhammer_inv(kQ4, kQ4, k, g);
    return r;
}

TruncatedSeries sills_product_lhs(int line, int cutoff) {
    const Grading g = Grading::norm(cutoff);
    TruncatedSeries r = pochhammer_series(-kQ2, kQ2, std::nullopt, g);
    if (line == 1)
        r *= pochhammer_series(-q_pow(1), kQ4, std::nullopt, g);
    else if (line == 2)
        r *= pochhammer_series(-q_pow(3), kQ4, std::nullopt, g);
    else
        throw Error("sills_product_lhs: line must be 1 or 2");
    return r;
}

TruncatedSeries little_gollnitz_product(int line, int cutoff) {
    const Grading g = Grading::norm(cutoff);
    const Monomial q8 = q_pow(8);
    TruncatedSeries r = TruncatedSeries::one(g);
    const std::array<int, 3> residues = line == 1 ? std::array<int, 3>{1, 5, 6}
                                                  : std::array<int, 3>{2, 3, 7};
    if (line != 1 && line != 2)
        throw Error("little_gollnitz_product: line must be 1 or 2");
    for (int e : residues)
        r *= pochhammer_inv(q_pow(e), q8, std::nullopt, g);
    return r;
}

LaurentPoly bg_distinct(int bound, int k) {
    const auto [N, nu] = split_bound(bound);
    return LaurentPoly(q_pow(2 * k * k - k)) * gaussian_binomial(2 * N + nu, N + k, kQ2);
}

TruncatedSeries bg_unrestricted(int bound, int k, int cutoff) {
    const Grading g = Grading::norm(cutoff);
    const auto [N, nu] = split_bound(bound);
    if (N + k < 0 || N - k + nu < 0)
        return TruncatedSeries(LaurentPoly::zero(), g);
    TruncatedSeries r(LaurentPoly(q_pow(2 * k * k - k)), g);
    r *= pochhammer_inv(kQ2, kQ2, N + k, g);
    r *= pochhammer_inv(kQ2, kQ2, N - k + nu, g);
    return r;
}

LaurentPoly double_to_single(int bound) {
    const auto [N, nu] = split_bound(bound);
    const Monomial qt = mono({{Var::q, 1}, {Var::t, 1}});
    const Monomial qz = mono({{Var::q, 1}, {Var::z, 1}});
    LaurentPoly r;
    for (int i = 0; i <= N; ++i)
        r += gaussian_binomial(N, i, kQ4) * pochhammer(-qt, kQ4, N - i + nu) *
             pochhammer(-qz, kQ4, i) * LaurentPoly(q_pow(2 * i));
    return r;
}

LaurentPoly new52_lhs(int N, int nu, int i, int j) {
    LaurentPoly r;
    for (int l = 0; l <= N; ++l) {
        const LaurentPoly p = gaussian_binomial(N, l, kQ2) * gaussian_binomial(l + nu, i, kQ2) *
                              gaussian_binomial(N - l, j, kQ2);
        if (p.is_zero())
            continue;
        r += p * LaurentPoly(q_pow(N - l - j));
    }
    return r;
}

LaurentPoly new52_rhs(int N, int nu, int i, int j) {
    const LaurentPoly tri = q_trinomial(N + nu, i, j, kQ2);
    if (tri.is_zero())
        return tri;
    LaurentPoly r = pochhammer(-q_pow(1), q_pow(1), N - i - j + nu) * tri;
    if (nu == 1) {
        r *= LaurentPoly::one() - LaurentPoly(q_pow(N + i - j + 1));
        r = divide_exact(r, LaurentPoly::one() - LaurentPoly(q_pow(2 * (N + 1))));
    }
    return r;
}

LaurentPoly cor43_lhs(int N, int nu, int line) {
    LaurentPoly r;
    for (int k = 0; k <= N + nu; ++k)
        r += line == 1 ? p_distinct_closed(2 * N + nu, 0, k) : p_distinct_closed(2 * N + nu, k, 0);
    return r;
}

LaurentPoly cor43_rhs(int N, int nu, int line) {
    LaurentPoly r;
    for (int k = 0; k <= N; ++k) {
        LaurentPoly term = gaussian_binomial(N, k, kQ4) * LaurentPoly(q_pow(2 * k));
        if (line == 1)
            term *= pochhammer(-q_pow(1), kQ4, k);
        else
            term *= pochhammer(-q_pow(1), kQ4, N - k + nu);
        r += term;
    }
    return r;
}

LaurentPoly connect_side(int N, bool lhs) {
    LaurentPoly r;
    for (int k = 0; k <= N; ++k) {
        LaurentPoly term = gaussian_binomial(N, k, kQ4) * LaurentPoly(q_pow(2 * k));
        term *= lhs ? pochhammer(-q_pow(1), kQ4, k) : pochhammer(-q_pow(3), kQ4, N - k);
        r += term;
    }
    return r;
}

LaurentPoly cigler_side(int N, bool lhs) {
    const Monomial qv = Monomial::var(Var::q);
    const Monomial yv = Monomial::var(Var::y);
    const Monomial yz = mono({{Var::y, 1}, {Var::z, 1}});
    LaurentPoly r;
    for (int k = 0; k <= N; ++k) {
        LaurentPoly term = gaussian_binomial(N, k, qv) * LaurentPoly(Monomial::var(Var::z, k));
        term *= lhs ? pochhammer(yv, qv, k) : pochhammer(yz, qv, N - k);
        r += term;
    }
    return r;
}

LaurentPoly psi_bounded(int bound) {
    const auto [N, nu] = split_bound(bound);
    const Monomial av = Monomial::var(Var::a);
    const Monomial cv = Monomial::var(Var::c);
    LaurentPoly r;
    for (int i = 0; i <= N; ++i)
        r += gaussian_binomial(N, i, kBigQ) * pochhammer(-av, kBigQ, N - i + nu) *
             pochhammer(-cv, kBigQ, i) * LaurentPoly(kAB.pow(i));
    return r;
}

TruncatedSeries phi_bounded(int bound, int cutoff) {
    const Grading g = Grading::norm(cutoff);
    const auto [N, nu] = split_bound(bound);
    TruncatedSeries r(psi_bounded(bound), g);
    r *= pochhammer_inv(kAC, kBigQ, N + nu, g);
    r *= pochhammer_inv(kBigQ, kBigQ, N, g);
    return r;
}

TruncatedSeries psi_limit(int cutoff) {
    const Grading g = Grading::norm(cutoff);
    TruncatedSeries r = pochhammer_series(-Monomial::var(Var::a), kBigQ, std::nullopt, g);
    r *= pochhammer_series(-kABC, kBigQ, std::nullopt, g);
    r *= pochhammer_inv(kAB, kBigQ, std::nullopt, g);
    return r;
}

TruncatedSeries phi_limit(int cutoff) {
    const Grading g = Grading::norm(cutoff);
    TruncatedSeries r = psi_limit(cutoff);
    r *= pochhammer_inv(kAC, kBigQ, std::nullopt, g);
    r *= pochhammer_inv(kBigQ, kBigQ, std::nullopt, g);
    return r;
}

TruncatedSeries psi_x_sum(int nu, int x_cutoff, int cutoff) {
    const Grading g = Grading::norm_with_x(cutoff, x_cutoff);
    TruncatedSeries r(LaurentPoly::zero(), g);
    for (int N = 0; N <= x_cutoff; ++N) {
        TruncatedSeries term(LaurentPoly(Monomial::var(Var::x, N)) * psi_bounded(2 * N + nu), g);
        term *= pochhammer_inv(kBigQ, kBigQ, N, g);
        r += term;
    }
    return r;
}

TruncatedSeries psi_x_product(int nu, int x_cutoff, int cutoff) {
    const Grading g = Grading::norm_with_x(cutoff, x_cutoff);
    const Monomial xv = Monomial::var(Var::x);
    const Monomial axQnu = mono({{Var::a, 1}, {Var::x, 1}}) * kBigQ.pow(nu);
    TruncatedSeries r = pochhammer_series(-axQnu, kBigQ, std::nullopt, g);
    r *= pochhammer_series(-(kABC * xv), kBigQ, std::nullopt, g);
    r *= pochhammer_inv(xv, kBigQ, std::nullopt, g);
    r *= pochhammer_inv(kAB * xv, kBigQ, std::nullopt, g);
    if (nu == 1)
        r *= LaurentPoly::one() + LaurentPoly::var(Var::a);
    return r;
}

LaurentPoly psi_finite_boulet(int bound) {
    const auto [N, nu] = split_bound(bound);
    const Monomial av = Monomial::var(Var::a);
    LaurentPoly r;
    for (int i = 0; i <= N; ++i) {
        // (ac;Q)_{N+nu} / (ac;Q)_{i+nu} telescopes to a genuine polynomial
        LaurentPoly term = gaussian_binomial(N, i, kBigQ) * pochhammer(-av, kBigQ, i + nu) *
                           pochhammer(-kABC, kBigQ, i) *
                           pochhammer(kAC * kBigQ.pow(i + nu), kBigQ, N - i);
        r += term * LaurentPoly(kAB.pow(N - i));
    }
    return r;
}

TruncatedSeries phi_finite_boulet(int bound, int cutoff) {
    const Grading g = Grading::norm(cutoff);
    const auto [N, nu] = split_bound(bound);
    const Monomial av = Monomial::var(Var::a);
    TruncatedSeries r(LaurentPoly::zero(), g);
    for (int i = 0; i <= N; ++i) {
        TruncatedSeries term(gaussian_binomial(N, i, kBigQ) * pochhammer(-av, kBigQ, i + nu) *
                                 pochhammer(-kABC, kBigQ, i) * LaurentPoly(kAB.pow(N - i)),
                             g);
        term *= pochhammer_inv(kAC, kBigQ, i + nu, g);
        r += term;
    }
    r *= pochhammer_inv(kBigQ, kBigQ, N, g);
    return r;
}

LaurentPoly hermite_sum_rhs(int bound) {
    const auto [N, nu] = split_bound(bound);
    const Monomial zq = mono({{Var::z, 1}, {Var::q, 1}});
    const Monomial q_over_z = mono({{Var::q, 1}, {Var::z, -1}});
    LaurentPoly r;
    for (int l = 0; l <= N; ++l)
        r += gaussian_binomial(N, l, kQ4) * pochhammer(-zq, kQ4, N - l + nu) *
             pochhammer(-q_over_z, kQ4, l) * LaurentPoly(zq.pow(2 * l));
    return r;
}

LaurentPoly rs_to_psi_rhs(int bound) {
    const SubstMap sub{
        {Var::a, mono({{Var::z, 1}, {Var::q, 1}})},
        {Var::b, mono({{Var::z, 1}, {Var::q, 1}})},
        {Var::c, mono({{Var::q, 1}, {Var::z, -1}})},
        {Var::d, mono({{Var::q, 1}, {Var::z, -1}})},
    };
    return psi_bounded(bound).substitute(sub);
}

LaurentPoly phi_double_bounded(int bound, int parts_bound) {
    const auto [N, nu] = split_bound(bound);
    if (parts_bound < 0 || parts_bound % 2 != 0)
        throw Error("phi_double_bounded: parts bound must be even and non-negative");
    if (parts_bound == 0)
        return LaurentPoly::one();
    const int M = parts_bound / 2;
    const Monomial av = Monomial::var(Var::a);
    LaurentPoly r;
    for (int l = 0; l <= N; ++l) {
        const LaurentPoly outer =
            gaussian_binomial(N - l + M - 1, N - l, kBigQ) * LaurentPoly(kAB.pow(N - l));
        if (outer.is_zero())
            continue;
        LaurentPoly inner;
        for (int m2 = 0; m2 <= l; ++m2) {
            const LaurentPoly b2 = gaussian_binomial(l, m2, kBigQ);
            if (b2.is_zero())
                continue;
            for (int m1 = 0; m1 <= l + nu; ++m1) {
                const LaurentPoly b1 = gaussian_binomial(l + nu, m1, kBigQ);
                if (b1.is_zero())
                    continue;
                LaurentPoly n_sum;
                for (int n = 0; n <= M - m1 - m2; ++n) {
                    const LaurentPoly bn =
                        gaussian_binomial(M + l - n - m1 - m2, M - n - m1 - m2, kBigQ) *
                        pochhammer_ratio_binomial(n, l + nu, kBigQ);
                    if (bn.is_zero())
                        continue;
                    n_sum += bn * LaurentPoly(kAC.pow(n));
                }
                inner += b2 * b1 * n_sum *
                         LaurentPoly(kABC.pow(m2) * kBigQ.pow(static_cast<int>(choose2(m2))) *
                                     av.pow(m1) * kBigQ.pow(static_cast<int>(choose2(m1))));
            }
        }
        r += outer * inner;
    }
    return r;
}

LaurentPoly phi_double_bounded_yee(int bound, int parts_bound) {
    const auto [N, nu] = split_bound(bound);
    if (parts_bound < 0)
        throw Error("phi_double_bounded_yee: negative parts bound");
    const auto [M, mu] = split_bound(parts_bound);
    if (nu == 1 && mu == 0)
        throw Error("phi_double_bounded_yee: parity combination (1,0) is not covered");
    if (bound == 0)
        return LaurentPoly::one(); // only the empty partition; the sum needs 2N+nu >= 1
    const Monomial av = Monomial::var(Var::a);
    const Monomial cv = Monomial::var(Var::c);
    const LaurentPoly one_plus_numu_a =
        nu * mu == 1 ? LaurentPoly::one() + LaurentPoly(av) : LaurentPoly::one();
    LaurentPoly r;
    for (int k = 0; k <= M; ++k) {
        const LaurentPoly bk = gaussian_binomial(N + k - 1 + nu, k, kBigQ);
        if (bk.is_zero())
            continue;
        LaurentPoly j_sum;
        for (int j = 0; j <= N; ++j) {
            LaurentPoly m1_sum;
            for (int m1 = 0; m1 <= j; ++m1) {
                const LaurentPoly b1 = gaussian_binomial(M - k + mu - nu, m1, kBigQ) *
                                       gaussian_binomial(M - k + j - m1, j - m1, kBigQ);
                if (b1.is_zero())
                    continue;
                m1_sum += b1 * LaurentPoly(av.pow(m1) *
                                           kBigQ.pow(static_cast<int>(choose2(m1)) + nu * mu * m1));
            }
            m1_sum *= one_plus_numu_a;
            LaurentPoly m2_sum;
            for (int m2 = 0; m2 <= N - j; ++m2) {
                const LaurentPoly b2 = gaussian_binomial(M - k, m2, kBigQ) *
                                       pochhammer_ratio_binomial(N - j - m2, M - k + mu, kBigQ);
                if (b2.is_zero())
                    continue;
                m2_sum += b2 * LaurentPoly(cv.pow(m2) * kBigQ.pow(static_cast<int>(choose2(m2))));
            }
            j_sum += LaurentPoly(kAB.pow(N - j)) * m1_sum * m2_sum;
        }
        r += LaurentPoly(kAC.pow(k)) * bk * j_sum;
    }
    return r;
}

LaurentPoly rest_of_phi(int bound, int parts_bound) {
    const auto [N, nu] = split_bound(bound);
    if (parts_bound < 1 || parts_bound % 2 != 1)
        throw Error("rest_of_phi: parts bound must be odd");
    const int M = (parts_bound - 1) / 2;
    const SubstMap swap_pairs{
        {Var::a, Monomial::var(Var::c)},
        {Var::b, Monomial::var(Var::d)},
        {Var::c, Monomial::var(Var::a)},
        {Var::d, Monomial::var(Var::b)},
    };
    const LaurentPoly hi = phi_double_bounded(bound, 2 * (M + 1)).substitute(swap_pairs);
    const LaurentPoly lo = bound == 0
                               ? LaurentPoly::zero()
                               : phi_double_bounded(bound - 1, 2 * (M + 1)).substitute(swap_pairs);
    const Monomial divisor =
        Monomial::var(Var::c, nu) * mono({{Var::c, 1}, {Var::d, 1}}).pow(N);
    const LaurentPoly r = divide_exact(hi - lo, LaurentPoly(divisor));
    for (Var v : {Var::a, Var::b, Var::c, Var::d})
        if (r.min_exp(v) < 0)
            throw Error("rest_of_phi: division left negative exponents");
    return r;
}

LaurentPoly outlook_bg(int bound, int parts_bound) {
    const auto [N, nu] = split_bound(bound);
    const auto [M, mu] = split_bound(parts_bound);
    LaurentPoly r;
    for (int j = -N; j <= N + nu; ++j) {
        const LaurentPoly b = gaussian_binomial(N + M + mu, N + j, kQ2) *
                              gaussian_binomial(N + nu + M, M + j, kQ2);
        if (b.is_zero())
            continue;
        r += b * LaurentPoly(Monomial::var(Var::t, j) * q_pow(2 * j * j - j));
    }
    return r;
}

LaurentPoly outlook_alt(int N, int parts_bound) {
    if (N < 0)
        throw Error("outlook_alt: negative bound");
    const auto [M, mu] = split_bound(parts_bound);
    LaurentPoly r;
    for (int j = 0; j <= N; ++j) {
        const LaurentPoly b = pochhammer_ratio_binomial(j, M + mu, kQ2) *
                              gaussian_binomial(M + N - j, M, kQ2);
        if (b.is_zero())
            continue;
        r += b * LaurentPoly(Monomial::var(Var::z, j) * q_pow(j));
    }
    return r;
}

LaurentPoly refined_distinct(int bound, int i, int j, int m) {
    if (i < 0 || j < 0 || m < 0)
        return LaurentPoly::zero();
    const auto [N, nu] = split_bound(bound);
    const auto parity_sign = [](int e) { return e % 2 == 0 ? 1 : -1; };
    if (i == 0) {
        return LaurentPoly(q_pow(j * (j + 1) + m * (m + 1) - j * parity_sign(m + j))) *
               gaussian_binomial(N + j, j + m, kQ2) * gaussian_binomial((m + j) / 2, j, kQ4);
    }
    if (j != 0)
        throw Error("refined_distinct: closed form requires i=0 or j=0");
    if (nu == 1) {
        return LaurentPoly(q_pow(i * (i + 1) + m * (m + 1) + i * parity_sign(m + i))) *
               gaussian_binomial(N + i, i + m, kQ2) * gaussian_binomial((m + i + 1) / 2, i, kQ4);
    }
    return LaurentPoly(q_pow(i * (i + 1) + m * (m + 1) + i * parity_sign(m + i))) *
               gaussian_binomial(N + i - 1, i + m, kQ2) *
               gaussian_binomial((m + i + 1) / 2, i, kQ4) +
           LaurentPoly(q_pow(i * (i + 1) + m * (m - 1) + i * parity_sign(m + i) + 2 * N)) *
               gaussian_binomial(N + i - 1, i + m - 1, kQ2) *
               gaussian_binomial((m + i - 1) / 2, i, kQ4);
}

} // namespace closed_forms
} // namespace qplab
