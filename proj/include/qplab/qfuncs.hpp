#ifndef QPLAB_QFUNCS_HPP
#define QPLAB_QFUNCS_HPP

#include "qplab/series.hpp"

#include <optional>
#include <vector>

namespace qplab {

// (a0; base)_L = prod_{n=0}^{L-1} (1 - a0*base^n), exact. L >= 0.
LaurentPoly pochhammer(const Monomial& a0, const Monomial& base, int L);

// Same product as a truncated series; L = nullopt means the infinite product,
// of which only factors with grade within the cutoff are expanded.
TruncatedSeries pochhammer_series(const Monomial& a0, const Monomial& base,
                                  std::optional<int> L, const Grading& g);

// 1 / (a0; base)_L as a truncated series. Every factor must be a unit in the
// truncated ring: its monomial needs positive grade (or positive x-degree
// when an x-cutoff is active) so the geometric expansion terminates.
TruncatedSeries pochhammer_inv(const Monomial& a0, const Monomial& base,
                               std::optional<int> L, const Grading& g);

// Gaussian binomial [k; n] in the given base monomial, via the Pascal
// recurrence (memoized). Zero unless k >= n >= 0.
LaurentPoly gaussian_binomial(int k, int n, const Monomial& base);

// [k; n, m] = [k; n] * [k-n; m].
LaurentPoly q_trinomial(int k, int n, int m, const Monomial& base);

// (base^m; base)_n / (base; base)_n, always a polynomial: 1 for n = 0,
// [n+m-1; n] otherwise. Used where closed forms carry this ratio.
LaurentPoly pochhammer_ratio_binomial(int n, int m, const Monomial& base);

// Rogers-Szego polynomial H_N = sum_l [N; l]_base * zm^l.
LaurentPoly rogers_szego(int N, const Monomial& zm, const Monomial& base);

// Exact quotient num/den in the Laurent ring; throws Error when the division
// leaves a remainder. Works by stripping the monomial content of both sides
// and running single-divisor grlex reduction on the resulting polynomials.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

using RationalAssignment = std::map<Var, Rational>;

// Exact evaluation at rational points. Unassigned variables default to
// evaluation failure only if they occur; a variable assigned 0 under a
// negative exponent is an error.
Rational eval_rational(const LaurentPoly& p, const RationalAssignment& at);
Rational eval_rational(const Monomial& m, const RationalAssignment& at);

// (a0; base)_L over rationals.
Rational pochhammer_rational(const Rational& a0, const Rational& base, int L);

// Terminating basic hypergeometric series r_phi_s(upper; lower; base, z) over
// exact rationals. Some upper parameter must equal base^-K for an integer
// K >= 0; the sum then has K+1 terms, including the [(-1)^n base^C(n,2)]
// correction factor raised to 1-r+s. Vanishing denominator factors for
// n <= K are an error.
Rational phi_terminating(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                         const Rational& base, const Rational& z);

} // namespace qplab

#endif
