#ifndef QPLAB_CLOSED_FORMS_HPP
#define QPLAB_CLOSED_FORMS_HPP

#include "qplab/qfuncs.hpp"

namespace qplab {
namespace closed_forms {

// Bound arguments are always the raw bound (largest part or number of
// parts); builders decompose them into (half, parity) internally.
struct HalfBound {
    int half;
    int nu;
};
inline HalfBound split_bound(int bound) {
    if (bound < 0)
        throw Error("split_bound: negative bound");
    return HalfBound{bound / 2, bound % 2};
}

// Generating function for partitions into distinct parts <= bound with i
// odd-indexed and j even-indexed odd parts. For odd bounds the trailing
// rational factor is resolved by exact division; a nonzero remainder would
// signal a transcription bug and throws.
LaurentPoly p_distinct_closed(int bound, int i, int j);

// Unbounded version, truncated at the given norm cutoff.
TruncatedSeries p_distinct_limit(int i, int j, int cutoff);

// Generating function for partitions into k distinct parts congruent to
// 2+(-1)^mu mod 4 (mu=1: class 1, mu=0: class 3).
TruncatedSeries gf_1or3_mod4(int k, int mu, int cutoff);

// Product side of the row sums over distinct partitions: line 1 fixes j=k,
// line 2 fixes i=k.
TruncatedSeries savage_sills_product(int k, int line, int cutoff);

// The two mod-8 product identities: line 1 pairs (-q^2;q^2)(-q;q^4) with
// 1/(q,q^5,q^6;q^8), line 2 pairs (-q^2;q^2)(-q^3;q^4) with 1/(q^2,q^3,q^7;q^8).
TruncatedSeries sills_product_lhs(int line, int cutoff);
TruncatedSeries little_gollnitz_product(int line, int cutoff);

// Distinct partitions with parts <= bound and BG-rank k.
LaurentPoly bg_distinct(int bound, int k);
// All partitions with parts <= bound and BG-rank k, truncated.
TruncatedSeries bg_unrestricted(int bound, int k, int cutoff);

// Single-fold form of sum_{i,j} P_bound(i,j,q) t^i z^j.
LaurentPoly double_to_single(int bound);

// The q-binomial summation behind the single-fold form; both sides exact,
// the right side involves one exact division when nu = 1.
LaurentPoly new52_lhs(int N, int nu, int i, int j);
LaurentPoly new52_rhs(int N, int nu, int i, int j);

// The two bounded little Goellnitz summations; line selects the equation.
LaurentPoly cor43_lhs(int N, int nu, int line);
LaurentPoly cor43_rhs(int N, int nu, int line);

// Two equal single-fold sums (line via lhs flag).
LaurentPoly connect_side(int N, bool lhs);

// Binomial transform with free y,z.
LaurentPoly cigler_side(int N, bool lhs);

// Boulet-Stanley weighted generating functions over distinct (Psi) and all
// (Phi) partitions with parts <= bound, and their unbounded limits.
LaurentPoly psi_bounded(int bound);
TruncatedSeries phi_bounded(int bound, int cutoff);
TruncatedSeries psi_limit(int cutoff);
TruncatedSeries phi_limit(int cutoff);

// x-series over all bounds: sum_N x^N/(Q;Q)_N Psi_{2N+nu} and its product
// form, truncated in norm and in x-degree.
TruncatedSeries psi_x_sum(int nu, int x_cutoff, int cutoff);
TruncatedSeries psi_x_product(int nu, int x_cutoff, int cutoff);

// Alternative bounded Boulet forms; the Pochhammer ratio in the Psi variant
// is built telescopically as a polynomial.
LaurentPoly psi_finite_boulet(int bound);
TruncatedSeries phi_finite_boulet(int bound, int cutoff);

// Sum side of the Rogers-Szego expansion H_bound(zq,q^2).
LaurentPoly hermite_sum_rhs(int bound);

// Psi_bound(zq,zq,q/z,q/z), the alternating-sum specialization.
LaurentPoly rs_to_psi_rhs(int bound);

// Doubly bounded Boulet generating functions: four-fold sum (parts bound
// even), its Yee-style form (rejects part parity nu=1 with parts parity
// mu=0), and the odd-parts-bound form derived by subtraction and exact
// monomial division.
LaurentPoly phi_double_bounded(int bound, int parts_bound);
LaurentPoly phi_double_bounded_yee(int bound, int parts_bound);
LaurentPoly rest_of_phi(int bound, int parts_bound);

// Doubly bounded BG-rank and alternating-sum single-fold forms.
LaurentPoly outlook_bg(int bound, int parts_bound);
LaurentPoly outlook_alt(int N, int parts_bound);

// Refined distinct-part generating function with i odd-indexed odd, j
// even-indexed odd and m even parts; closed forms exist for i=0 or j=0.
LaurentPoly refined_distinct(int bound, int i, int j, int m);

// Test hook: when enabled, p_distinct_closed flips the sign of i in its
// q-power prefactor, so verification must detect the corruption.
void set_test_mutation(bool enabled);
bool test_mutation_enabled();

} // namespace closed_forms
} // namespace qplab

#endif
