#include "qplab/series.hpp"

namespace qplab {

void TruncatedSeries::assign(LaurentPoly p) {
    body_ = LaurentPoly();
    for (const auto& [e, c] : p.terms())
        if (grading_.keeps(e))
            body_.add_term(e, c);
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
    if (!(grading_ == o.grading_))
        throw Error("TruncatedSeries: mixing series with different grading or cutoff");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    check_compatible(o);
    body_ += o.body_;
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    check_compatible(o);
    body_ -= o.body_;
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
    check_compatible(o);
    LaurentPoly out;
    const int xi = static_cast<int>(Var::x);
    for (const auto& [el, cl] : body_.terms()) {
        const long gl = grading_.grade(el);
        for (const auto& [er, cr] : o.body_.terms()) {
            if (gl + grading_.grade(er) > grading_.cutoff)
                continue;
            if (grading_.x_cutoff >= 0 && el[xi] + er[xi] > grading_.x_cutoff)
                continue;
            ExpVec e;
            for (int i = 0; i < kNumVars; ++i)
                e[i] = el[i] + er[i];
            out.add_term(e, cl * cr);
        }
    }
    body_ = std::move(out);
    return *this;
}

TruncatedSeries TruncatedSeries::substitute(const SubstMap& s) const {
    const int xi = static_cast<int>(Var::x);
    for (const auto& [v, img] : s) {
        const int w = grading_.weights[static_cast<int>(v)];
        if (grading_.grade(img) < w)
            throw Error("TruncatedSeries::substitute: image grade below variable weight");
        const int xw = v == Var::x ? 1 : 0;
        if (grading_.x_cutoff >= 0 && img.exps[xi] < xw)
            throw Error("TruncatedSeries::substitute: image lowers x-degree");
    }
    return TruncatedSeries(body_.substitute(s), grading_);
}

TruncatedSeries TruncatedSeries::coeff_of(Var v, int e) const {
    Grading g = grading_;
    g.cutoff -= e * g.weights[static_cast<int>(v)];
    if (v == Var::x && g.x_cutoff >= 0)
        g.x_cutoff = 0;
    return TruncatedSeries(body_.coeff_of(v, e), g);
}

} // namespace qplab
