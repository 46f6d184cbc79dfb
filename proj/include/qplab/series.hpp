#ifndef QPLAB_SERIES_HPP
#define QPLAB_SERIES_HPP

#include "qplab/laurent.hpp"

namespace qplab {

// Grading rule for truncated series. `weights` assigns a non-negative weight
// to each variable; a monomial's grade is the weighted exponent sum. The
// default is the norm grading: weight 1 on q,a,b,c,d and 0 elsewhere, so the
// grade of a Boulet monomial a^A b^B c^C d^D equals the partition norm.
// `x_cutoff` optionally bounds the raw x-exponent independently of the grade
// (x carries weight 0; the x-expansions are truncated in x-degree instead).
struct Grading {
    std::array<int, kNumVars> weights{1, 0, 0, 1, 1, 1, 1, 0, 0};
    int cutoff = 0;
    int x_cutoff = -1; // -1: no independent x bound

    static Grading norm(int cutoff) {
        Grading g;
        g.cutoff = cutoff;
        return g;
    }
    static Grading norm_with_x(int cutoff, int x_cutoff) {
        Grading g;
        g.cutoff = cutoff;
        g.x_cutoff = x_cutoff;
        return g;
    }

    long grade(const ExpVec& e) const {
        long s = 0;
        for (int i = 0; i < kNumVars; ++i)
            s += static_cast<long>(weights[i]) * e[i];
        return s;
    }
    long grade(const Monomial& m) const { return grade(m.exps); }

    bool keeps(const ExpVec& e) const {
        if (grade(e) > cutoff)
            return false;
        if (x_cutoff >= 0 && e[static_cast<int>(Var::x)] > x_cutoff)
            return false;
        return true;
    }

    friend bool operator==(const Grading& l, const Grading& r) {
        return l.weights == r.weights && l.cutoff == r.cutoff && l.x_cutoff == r.x_cutoff;
    }
};

// A Laurent polynomial known to be exact only up to the grading cutoff.
// All arithmetic re-truncates, so results stay exact within the cutoff.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(LaurentPoly body, Grading g) : grading_(g) { assign(std::move(body)); }
    static TruncatedSeries one(const Grading& g) { return TruncatedSeries(LaurentPoly::one(), g); }

    const LaurentPoly& body() const { return body_; }
    const Grading& grading() const { return grading_; }

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries l, const TruncatedSeries& r) { return l += r; }
    friend TruncatedSeries operator-(TruncatedSeries l, const TruncatedSeries& r) { return l -= r; }
    friend TruncatedSeries operator*(TruncatedSeries l, const TruncatedSeries& r) { return l *= r; }
    TruncatedSeries& operator*=(const LaurentPoly& p) { return *this *= TruncatedSeries(p, grading_); }
    TruncatedSeries& operator*=(const Monomial& m) { return *this *= LaurentPoly(m); }
    friend bool operator==(const TruncatedSeries& l, const TruncatedSeries& r) {
        return l.grading_ == r.grading_ && l.body_ == r.body_;
    }

    // Substitution must not lower grades, otherwise terms already discarded
    // could re-enter below the cutoff and the result would be unsound.
    TruncatedSeries substitute(const SubstMap& s) const;

    TruncatedSeries coeff_of(Var v, int e) const;

    std::string to_string() const { return body_.to_string(); }

private:
    void assign(LaurentPoly p);
    void check_compatible(const TruncatedSeries& o) const;

    LaurentPoly body_;
    Grading grading_;
};

} // namespace qplab

#endif
