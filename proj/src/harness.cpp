#include "qplab/harness.hpp"

#include "qplab/bijections.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

namespace qplab {
namespace harness {

std::string mode_name(Mode m) {
    switch (m) {
    case Mode::Exact:
        return "exact";
    case Mode::Truncated:
        return "truncated";
    case Mode::RationalPoints:
        return "rational";
    }
    return "?";
}

std::optional<Mode> mode_from_name(std::string_view name) {
    if (name == "exact")
        return Mode::Exact;
    if (name == "truncated")
        return Mode::Truncated;
    if (name == "rational")
        return Mode::RationalPoints;
    return std::nullopt;
}

std::string status_name(Status s) {
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::Error:
        return "error";
    }
    return "?";
}

std::string IdentityInstance::key() const {
    std::ostringstream os;
    os << id;
    for (const auto& [k, v] : params)
        os << ' ' << k << '=' << v;
    os << " mode=" << mode_name(mode);
    if (mode == Mode::Truncated)
        os << " cutoff=" << cutoff;
    if (mode == Mode::RationalPoints)
        os << " points=" << points << " seed=" << seed;
    return os.str();
}

namespace {

using closed_forms::split_bound;

// ---------------------------------------------------------------------------
// comparison helpers

struct CheckOutcome {
    std::string lhs;
    std::string rhs;
    std::optional<Discrepancy> disc;
};

std::optional<Discrepancy> poly_discrepancy(const LaurentPoly& l, const LaurentPoly& r) {
    auto d = LaurentPoly::first_difference(l, r);
    if (!d)
        return std::nullopt;
    return Discrepancy{monomial_key_to_string(*d), l.coeff(*d).str(), r.coeff(*d).str()};
}

CheckOutcome check_poly(const LaurentPoly& l, const LaurentPoly& r) {
    return CheckOutcome{l.to_string(), r.to_string(), poly_discrepancy(l, r)};
}

CheckOutcome check_series(const TruncatedSeries& l, const TruncatedSeries& r) {
    if (!(l.grading() == r.grading()))
        throw Error("check_series: incompatible gradings");
    return check_poly(l.body(), r.body());
}

CheckOutcome check_count(std::uint64_t l, std::uint64_t r) {
    CheckOutcome o{std::to_string(l), std::to_string(r), std::nullopt};
    if (l != r)
        o.disc = Discrepancy{"count", o.lhs, o.rhs};
    return o;
}

// Chains several named equalities; the first failing one is reported.
CheckOutcome check_all(std::initializer_list<CheckOutcome> outcomes) {
    const CheckOutcome* first = nullptr;
    for (const auto& o : outcomes) {
        if (!first)
            first = &o;
        if (o.disc)
            return o;
    }
    return first ? *first : CheckOutcome{"", "", std::nullopt};
}

// ---------------------------------------------------------------------------
// parameter access

struct Params {
    const std::map<std::string, int>& map;

    int require(const std::string& name) const {
        auto it = map.find(name);
        if (it == map.end())
            throw Error("missing parameter '" + name + "'");
        return it->second;
    }
    std::optional<int> optional(const std::string& name) const {
        auto it = map.find(name);
        if (it == map.end())
            return std::nullopt;
        return it->second;
    }
    int get_or(const std::string& name, int dflt) const { return optional(name).value_or(dflt); }
};

int require_nu(const Params& p) {
    const int nu = p.require("nu");
    if (nu != 0 && nu != 1)
        throw Error("parameter nu must be 0 or 1");
    return nu;
}

int require_line(const Params& p) {
    const int line = p.require("line");
    if (line != 1 && line != 2)
        throw Error("parameter line must be 1 or 2");
    return line;
}

int require_nonneg(const Params& p, const std::string& name) {
    const int v = p.require(name);
    if (v < 0)
        throw Error("parameter " + name + " must be non-negative");
    return v;
}

// ---------------------------------------------------------------------------
// enumeration shorthands

PartitionConstraints distinct_up_to(int bound) {
    PartitionConstraints c;
    c.distinct = true;
    c.max_part = bound;
    return c;
}

PartitionConstraints parts_up_to(int bound) {
    PartitionConstraints c;
    c.max_part = bound;
    return c;
}

LaurentPoly gf_predicate(int max_norm, bool distinct,
                         const std::function<bool(const Partition&)>& pred) {
    PartitionConstraints c;
    c.max_norm = max_norm;
    c.distinct = distinct;
    LaurentPoly sum;
    enumerate(c, [&](const Partition& p) {
        if (pred(p))
            sum.add_term(Monomial::var(Var::q, p.norm()).exps, 1);
    });
    return sum;
}

std::uint64_t count_predicate(int norm, bool distinct,
                              const std::function<bool(const Partition&)>& pred) {
    PartitionConstraints c;
    c.fixed_norm = norm;
    c.distinct = distinct;
    std::uint64_t n = 0;
    enumerate(c, [&](const Partition& p) {
        if (pred(p))
            ++n;
    });
    return n;
}

bool parts_in_residues(const Partition& p, int modulus, std::initializer_list<int> residues) {
    for (int v : p.parts()) {
        bool ok = false;
        for (int r : residues)
            ok = ok || v % modulus == r;
        if (!ok)
            return false;
    }
    return true;
}

// Gap condition of the little Goellnitz class, without the parts > 1 rule:
// adjacent differences >= 2 and no pair of consecutive odd parts.
bool gap_no_consecutive_odds(const Partition& p) {
    const auto& parts = p.parts();
    for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
        if (parts[k] - parts[k + 1] < 2)
            return false;
        if (parts[k] % 2 == 1 && parts[k + 1] % 2 == 1 && parts[k] - parts[k + 1] == 2)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// rational point sampling

class PointSampler {
public:
    explicit PointSampler(std::uint64_t seed) : rng_(seed) {}

    // Numerator and denominator in [2,50]; the value 1 is excluded because
    // every identity here degenerates at base 1.
    Rational next() {
        while (true) {
            const std::uint64_t num = 2 + rng_() % 49;
            const std::uint64_t den = 2 + rng_() % 49;
            if (num != den)
                return Rational(num, den);
        }
    }

private:
    std::mt19937_64 rng_;
};

std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Evaluates both sides at `points` pole-free rational points. A point where
// either side hits a pole or a degenerate parameter is discarded and the
// sampler simply moves on, which keeps the sequence deterministic.
CheckOutcome check_rational_points(
    int points, std::uint64_t seed, int num_vars,
    const std::function<std::pair<Rational, Rational>(const std::vector<Rational>&)>& sides) {
    PointSampler sampler(seed);
    int done = 0, attempts = 0;
    std::string all_lhs, all_rhs;
    while (done < points) {
        if (++attempts > 200 * points + 1000)
            throw Error("rational sampling: too many pole hits");
        std::vector<Rational> vals;
        vals.reserve(num_vars);
        for (int i = 0; i < num_vars; ++i)
            vals.push_back(sampler.next());
        Rational lhs, rhs;
        try {
            auto [l, r] = sides(vals);
            lhs = l;
            rhs = r;
        } catch (const Error&) {
            continue; // pole; resample deterministically
        } catch (const std::overflow_error&) {
            continue; // rational division by zero, also a pole
        }
        if (!all_lhs.empty()) {
            all_lhs += ", ";
            all_rhs += ", ";
        }
        all_lhs += rat_str(lhs);
        all_rhs += rat_str(rhs);
        if (lhs != rhs) {
            std::ostringstream point;
            point << "point#" << done << '(';
            for (int i = 0; i < num_vars; ++i)
                point << (i ? "," : "") << rat_str(vals[i]);
            point << ')';
            return CheckOutcome{all_lhs, all_rhs,
                                Discrepancy{point.str(), rat_str(lhs), rat_str(rhs)}};
        }
        ++done;
    }
    return CheckOutcome{all_lhs, all_rhs, std::nullopt};
}

// ---------------------------------------------------------------------------
// bijection property runs

Monomial boulet_monomial(const Partition& p) {
    return weight_of(stats(p), WeightKind::Boulet);
}

Monomial rho_pair_factor(const Partition& extracted) {
    Monomial f = Monomial::constant(1);
    std::map<int, int> mult;
    for (int v : extracted.parts())
        ++mult[v];
    for (const auto& [v, m] : mult) {
        Monomial pair = v % 2 == 1 ? Monomial::var(Var::a) * Monomial::var(Var::c) *
                                         (Monomial::var(Var::a) * Monomial::var(Var::b) *
                                          Monomial::var(Var::c) * Monomial::var(Var::d))
                                             .pow((v - 1) / 2)
                                   : (Monomial::var(Var::a) * Monomial::var(Var::b) *
                                      Monomial::var(Var::c) * Monomial::var(Var::d))
                                         .pow(v / 2);
        f *= pair.pow(m / 2);
    }
    return f;
}

Monomial rho_star_pair_factor(const Partition& extracted) {
    Monomial f = Monomial::constant(1);
    std::map<int, int> mult;
    const Partition columns = extracted.conjugate();
    for (int h : columns.parts())
        ++mult[h];
    for (const auto& [h, m] : mult) {
        const Monomial pair = Monomial::var(Var::a) * Monomial::var(Var::b) *
                              (Monomial::var(Var::a) * Monomial::var(Var::b) *
                               Monomial::var(Var::c) * Monomial::var(Var::d))
                                  .pow((h - 1) / 2);
        f *= pair.pow(m / 2);
    }
    return f;
}

CheckOutcome check_bijection_props(int max_norm, bool star) {
    PartitionConstraints c;
    c.max_norm = max_norm;
    long checked = 0;
    std::optional<Discrepancy> disc;
    enumerate(c, [&](const Partition& p) {
        if (disc)
            return;
        ++checked;
        const auto img = star ? bijections::rho_star(p) : bijections::rho(p);
        const auto fail = [&](const std::string& what) {
            disc = Discrepancy{p.to_string(), what, "expected to hold"};
        };
        if (!bijections::valid_image(img))
            return fail("image invariants violated");
        if (img.reduced.norm() + img.extracted.norm() != p.norm())
            return fail("norm not additive");
        if (bijections::invert(img) != p)
            return fail("round trip failed");
        const auto max_of = [](const Partition& q) {
            return q.empty() ? 0 : q.part(0);
        };
        if (max_of(img.reduced) > max_of(p) || max_of(img.extracted) > max_of(p))
            return fail("largest part grew");
        if (!star && stats(img.reduced).bg_rank != stats(p).bg_rank)
            return fail("BG-rank changed");
        const Monomial expect = boulet_monomial(img.reduced) *
                                (star ? rho_star_pair_factor(img.extracted)
                                      : rho_pair_factor(img.extracted));
        if (!(boulet_monomial(p) == expect))
            return fail("weight decomposition failed");
    });
    std::ostringstream os;
    os << "checked " << checked << " partitions up to norm " << max_norm;
    CheckOutcome out{os.str(), disc ? "violations found" : os.str(), disc};
    return out;
}

// ---------------------------------------------------------------------------
// per-identity runners

const Monomial kQv = Monomial::var(Var::q);
const Monomial kQ2v = Monomial::var(Var::q, 2);

CheckOutcome run_T1_1(const Params& p, const IdentityInstance&) {
    const int n = require_nonneg(p, "n");
    const int i = require_nonneg(p, "i");
    const int j = require_nonneg(p, "j");
    PartitionConstraints lhs;
    lhs.distinct = true;
    lhs.fixed_norm = n;
    lhs.filter(StatKey::OddIndexedOdd, i).filter(StatKey::EvenIndexedOdd, j);
    PartitionConstraints rhs;
    rhs.distinct = true;
    rhs.fixed_norm = n;
    rhs.filter(StatKey::C1Mod4, i).filter(StatKey::C3Mod4, j);
    return check_count(count_partitions(lhs), count_partitions(rhs));
}

CheckOutcome run_E1_GF13MOD4(const Params& p, const IdentityInstance& inst) {
    const int k = require_nonneg(p, "k");
    const int mu = p.require("mu");
    const int residue = mu == 1 ? 1 : 3;
    const Grading g = Grading::norm(inst.cutoff);
    const LaurentPoly lhs = gf_predicate(inst.cutoff, true, [&](const Partition& q) {
        return q.num_parts() == k && parts_in_residues(q, 4, {residue});
    });
    return check_series(TruncatedSeries(lhs, g), closed_forms::gf_1or3_mod4(k, mu, inst.cutoff));
}

CheckOutcome run_T2_1(const Params& p, const IdentityInstance&) {
    const int bound = require_nonneg(p, "bound");
    const int i = require_nonneg(p, "i");
    const int j = require_nonneg(p, "j");
    PartitionConstraints c = distinct_up_to(bound);
    c.filter(StatKey::OddIndexedOdd, i).filter(StatKey::EvenIndexedOdd, j);
    return check_poly(gf_enumerated(c, WeightKind::Norm),
                      closed_forms::p_distinct_closed(bound, i, j));
}

CheckOutcome run_L2_2(const Params& p, const IdentityInstance&) {
    const int bound = p.require("bound");
    if (bound < 1)
        throw Error("recurrence needs bound >= 1");
    const int i = require_nonneg(p, "i");
    const int j = require_nonneg(p, "j");
    const int nu = bound % 2;
    PartitionConstraints c = distinct_up_to(bound);
    c.filter(StatKey::OddIndexedOdd, i).filter(StatKey::EvenIndexedOdd, j);
    LaurentPoly rhs = closed_forms::p_distinct_closed(bound - 1, i, j);
    if (i >= nu)
        rhs += LaurentPoly(Monomial::var(Var::q, bound)) *
               closed_forms::p_distinct_closed(bound - 1, j, i - nu);
    return check_poly(gf_enumerated(c, WeightKind::Norm), rhs);
}

CheckOutcome run_T2_3(const Params& p, const IdentityInstance& inst) {
    const int k = require_nonneg(p, "k");
    const int line = require_line(p);
    PartitionConstraints c;
    c.distinct = true;
    c.filter(line == 1 ? StatKey::EvenIndexedOdd : StatKey::OddIndexedOdd, k);
    const Grading g = Grading::norm(inst.cutoff);
    return check_series(gf_enumerated(c, WeightKind::Norm, g),
                        closed_forms::savage_sills_product(k, line, inst.cutoff));
}

CheckOutcome run_T2_4(const Params& p, const IdentityInstance&) {
    const int n = require_nonneg(p, "n");
    const int k = require_nonneg(p, "k");
    const int line = require_line(p);
    PartitionConstraints lhs;
    lhs.distinct = true;
    lhs.fixed_norm = n;
    lhs.filter(line == 1 ? StatKey::OddIndexedOdd : StatKey::EvenIndexedOdd, k);
    PartitionConstraints rhs;
    rhs.distinct = true;
    rhs.fixed_norm = n;
    rhs.filter(line == 1 ? StatKey::C1Mod4 : StatKey::C3Mod4, k);
    return check_count(count_partitions(lhs), count_partitions(rhs));
}

CheckOutcome run_E2_PRODSILLS(const Params& p, const IdentityInstance& inst) {
    const int line = require_line(p);
    return check_series(closed_forms::sills_product_lhs(line, inst.cutoff),
                        closed_forms::little_gollnitz_product(line, inst.cutoff));
}

CheckOutcome run_T2_5(const Params& p, const IdentityInstance& inst) {
    const int line = require_line(p);
    const Grading g = Grading::norm(inst.cutoff);
    LaurentPoly lhs;
    if (line == 1) {
        lhs = gf_predicate(inst.cutoff, false, gap_no_consecutive_odds);
    } else {
        PartitionConstraints c;
        c.gollnitz_gap = true;
        lhs = gf_enumerated(c, WeightKind::Norm, g).body();
    }
    return check_series(TruncatedSeries(lhs, g),
                        closed_forms::little_gollnitz_product(line, inst.cutoff));
}

CheckOutcome run_T2_6(const Params& p, const IdentityInstance&) {
    const int n = require_nonneg(p, "n");
    const int line = require_line(p);
    PartitionConstraints lhs;
    lhs.distinct = true;
    lhs.fixed_norm = n;
    lhs.filter(line == 1 ? StatKey::OddIndexedOdd : StatKey::EvenIndexedOdd, 0);
    const std::uint64_t rhs =
        line == 1 ? count_predicate(n, false,
                                    [](const Partition& q) {
                                        return parts_in_residues(q, 8, {2, 3, 7});
                                    })
                  : count_predicate(n, false, [](const Partition& q) {
                        return parts_in_residues(q, 8, {1, 5, 6});
                    });
    return check_count(count_partitions(lhs), rhs);
}

CheckOutcome run_T3_1(const Params& p, const IdentityInstance&) {
    const int bound = require_nonneg(p, "bound");
    const int k = p.require("k");
    PartitionConstraints c = distinct_up_to(bound);
    c.filter(StatKey::BgRank, k);
    return check_poly(gf_enumerated(c, WeightKind::Norm), closed_forms::bg_distinct(bound, k));
}

CheckOutcome run_T3_2(const Params& p, const IdentityInstance& inst) {
    const int bound = require_nonneg(p, "bound");
    const int k = p.require("k");
    PartitionConstraints c = parts_up_to(bound);
    c.filter(StatKey::BgRank, k);
    const Grading g = Grading::norm(inst.cutoff);
    return check_series(gf_enumerated(c, WeightKind::Norm, g),
                        closed_forms::bg_unrestricted(bound, k, inst.cutoff));
}

CheckOutcome run_T3_3(const Params& p, const IdentityInstance&) {
    const int bound = require_nonneg(p, "bound");
    const auto [N, nu] = split_bound(bound);
    const LaurentPoly oracle = gf_enumerated(distinct_up_to(bound), WeightKind::Norm);
    LaurentPoly sum;
    for (int k = -N; k <= N + nu; ++k)
        sum += closed_forms::bg_distinct(bound, k);
    const LaurentPoly product = pochhammer(-kQv, kQv, bound);
    return check_all({check_poly(oracle, sum), check_poly(oracle, product)});
}

CheckOutcome run_C3_4(const Params& p, const IdentityInstance& inst) {
    const int bound = require_nonneg(p, "bound");
    const auto [N, nu] = split_bound(bound);
    const Grading g = Grading::norm(inst.cutoff);
    const TruncatedSeries oracle = gf_enumerated(parts_up_to(bound), WeightKind::Norm, g);
    TruncatedSeries sum(LaurentPoly::zero(), g);
    for (int k = -N; k <= N + nu; ++k)
        sum += closed_forms::bg_unrestricted(bound, k, inst.cutoff);
    const TruncatedSeries product = pochhammer_inv(kQv, kQv, bound, g);
    return check_all({check_series(oracle, sum), check_series(oracle, product)});
}

CheckOutcome run_E3_CHB(const Params& p, const IdentityInstance&) {
    const int n = require_nonneg(p, "n");
    const int m = require_nonneg(p, "m");
    const LaurentPoly lhs = gaussian_binomial(n + m, n, Monomial::var(Var::q, -1));
    const LaurentPoly rhs =
        LaurentPoly(Monomial::var(Var::q, -n * m)) * gaussian_binomial(n + m, n, kQv);
    return check_poly(lhs, rhs);
}

CheckOutcome run_T4_1(const Params& p, const IdentityInstance&) {
    const int bound = require_nonneg(p, "bound");
    return check_poly(gf_enumerated(distinct_up_to(bound), WeightKind::OddTZ),
                      closed_forms::double_to_single(bound));
}

CheckOutcome run_T4_2(const Params& p, const IdentityInstance&) {
    const int N = require_nonneg(p, "N");
    const int nu = require_nu(p);
    const int i = require_nonneg(p, "i");
    const int j = require_nonneg(p, "j");
    return check_poly(closed_forms::new52_lhs(N, nu, i, j), closed_forms::new52_rhs(N, nu, i, j));
}

CheckOutcome run_C4_3(const Params& p, const IdentityInstance&, int line) {
    const int N = require_nonneg(p, "N");
    const int nu = require_nu(p);
    PartitionConstraints c = distinct_up_to(2 * N + nu);
    c.filter(line == 1 ? StatKey::OddIndexedOdd : StatKey::EvenIndexedOdd, 0);
    const LaurentPoly oracle = gf_enumerated(c, WeightKind::Norm);
    return check_all({check_poly(oracle, closed_forms::cor43_lhs(N, nu, line)),
                      check_poly(oracle, closed_forms::cor43_rhs(N, nu, line))});
}

CheckOutcome run_T4_4(const Params& p, const IdentityInstance&) {
    const int N = require_nonneg(p, "N");
    PartitionConstraints c = distinct_up_to(2 * N);
    c.filter(StatKey::OddIndexedOdd, 0);
    const LaurentPoly oracle = gf_enumerated(c, WeightKind::Norm);
    return check_all({check_poly(closed_forms::connect_side(N, true),
                                 closed_forms::connect_side(N, false)),
                      check_poly(oracle, closed_forms::connect_side(N, true))});
}

CheckOutcome run_T4_5(const Params& p, const IdentityInstance&) {
    const int N = require_nonneg(p, "N");
    return check_poly(closed_forms::cigler_side(N, true), closed_forms::cigler_side(N, false));
}

CheckOutcome run_T5_1(const Params&, const IdentityInstance& inst, bool phi) {
    const Grading g = Grading::norm(inst.cutoff);
    PartitionConstraints c;
    c.distinct = !phi;
    const TruncatedSeries lhs = gf_enumerated(c, WeightKind::Boulet, g);
    return check_series(lhs, phi ? closed_forms::phi_limit(inst.cutoff)
                                 : closed_forms::psi_limit(inst.cutoff));
}

CheckOutcome run_T5_2a(const Params& p, const IdentityInstance&) {
    const int bound = require_nonneg(p, "bound");
    return check_poly(gf_enumerated(distinct_up_to(bound), WeightKind::Boulet),
                      closed_forms::psi_bounded(bound));
}

CheckOutcome run_T5_2b(const Params& p, const IdentityInstance& inst) {
    const int bound = require_nonneg(p, "bound");
    const Grading g = Grading::norm(inst.cutoff);
    return check_series(gf_enumerated(parts_up_to(bound), WeightKind::Boulet, g),
                        closed_forms::phi_bounded(bound, inst.cutoff));
}

CheckOutcome run_T5_3(const Params& p, const IdentityInstance& inst) {
    const int nu = require_nu(p);
    const int xmax = require_nonneg(p, "xmax");
    const Grading g = Grading::norm_with_x(inst.cutoff, xmax);
    const Grading gn = Grading::norm(inst.cutoff);
    TruncatedSeries lhs(LaurentPoly::zero(), g);
    const Monomial bigQ = Monomial::var(Var::a) * Monomial::var(Var::b) * Monomial::var(Var::c) *
                          Monomial::var(Var::d);
    for (int N = 0; N <= xmax; ++N) {
        const LaurentPoly psi =
            gf_enumerated(distinct_up_to(2 * N + nu), WeightKind::Boulet, gn).body();
        TruncatedSeries term(LaurentPoly(Monomial::var(Var::x, N)) * psi, g);
        term *= pochhammer_inv(bigQ, bigQ, N, g);
        lhs += term;
    }
    return check_series(lhs, closed_forms::psi_x_product(nu, xmax, inst.cutoff));
}

CheckOutcome run_E5_PSI2PHI(const Params& p, const IdentityInstance& inst) {
    const Grading g = Grading::norm(inst.cutoff);
    const Monomial bigQ = Monomial::var(Var::a) * Monomial::var(Var::b) * Monomial::var(Var::c) *
                          Monomial::var(Var::d);
    const Monomial ac = Monomial::var(Var::a) * Monomial::var(Var::c);
    const auto bound = p.optional("bound");
    PartitionConstraints all, dist;
    dist.distinct = true;
    if (bound) {
        if (*bound < 0)
            throw Error("parameter bound must be non-negative");
        all.max_part = dist.max_part = *bound;
    }
    const TruncatedSeries phi = gf_enumerated(all, WeightKind::Boulet, g);
    TruncatedSeries rhs = gf_enumerated(dist, WeightKind::Boulet, g);
    if (bound) {
        const auto [N, nu] = split_bound(*bound);
        rhs *= pochhammer_inv(ac, bigQ, N + nu, g);
        rhs *= pochhammer_inv(bigQ, bigQ, N, g);
    } else {
        rhs *= pochhammer_inv(ac, bigQ, std::nullopt, g);
        rhs *= pochhammer_inv(bigQ, bigQ, std::nullopt, g);
    }
    return check_series(phi, rhs);
}

CheckOutcome run_T5_4(const Params& p, const IdentityInstance&) {
    const int bound = require_nonneg(p, "bound");
    const Monomial zq = Monomial::var(Var::z) * Monomial::var(Var::q);
    return check_poly(rogers_szego(bound, zq, kQ2v), closed_forms::hermite_sum_rhs(bound));
}

CheckOutcome run_E5_RS2PSI(const Params& p, const IdentityInstance&) {
    const int bound = require_nonneg(p, "bound");
    const Monomial zq = Monomial::var(Var::z) * Monomial::var(Var::q);
    const LaurentPoly oracle = gf_enumerated(distinct_up_to(bound), WeightKind::AltZ);
    return check_all({check_poly(rogers_szego(bound, zq, kQ2v), closed_forms::rs_to_psi_rhs(bound)),
                      check_poly(oracle, closed_forms::rs_to_psi_rhs(bound))});
}

CheckOutcome run_E5_EXTRACT(const Params& p, const IdentityInstance&) {
    const int bound = require_nonneg(p, "bound");
    const int k = require_nonneg(p, "k");
    PartitionConstraints c = distinct_up_to(bound);
    c.filter(StatKey::AltSum, k);
    const LaurentPoly rhs =
        LaurentPoly(Monomial::var(Var::q, k)) * gaussian_binomial(bound, k, kQ2v);
    return check_poly(gf_enumerated(c, WeightKind::Norm), rhs);
}

CheckOutcome run_T5_6(const Params& p, const IdentityInstance&) {
    const int N = require_nonneg(p, "N");
    const int n = require_nonneg(p, "n");
    const int k = require_nonneg(p, "k");
    PartitionConstraints lhs;
    lhs.fixed_norm = n;
    lhs.max_part = std::max(0, 2 * N - 2 * k + 1);
    lhs.filter(StatKey::NumParts, k).filter(StatKey::EvenParts, 0);
    PartitionConstraints rhs = distinct_up_to(N);
    rhs.fixed_norm = n;
    rhs.filter(StatKey::AltSum, k);
    return check_count(count_partitions(lhs), count_partitions(rhs));
}

CheckOutcome run_E5_EXTRACTPHI(const Params& p, const IdentityInstance& inst) {
    const int bound = require_nonneg(p, "bound");
    const int k = require_nonneg(p, "k");
    const Grading g = Grading::norm(inst.cutoff);
    PartitionConstraints c = parts_up_to(bound);
    c.filter(StatKey::AltSum, k);
    TruncatedSeries rhs(LaurentPoly::zero(), g);
    if (k <= bound) {
        rhs = TruncatedSeries(LaurentPoly(Monomial::var(Var::q, k)), g);
        rhs *= pochhammer_inv(kQ2v, kQ2v, k, g);
        rhs *= pochhammer_inv(kQ2v, kQ2v, bound - k, g);
    }
    // cross route: z^k coefficient of the built Phi at (zq,zq,q/z,q/z)
    const SubstMap alt_sub{
        {Var::a, Monomial::var(Var::z) * kQv},
        {Var::b, Monomial::var(Var::z) * kQv},
        {Var::c, kQv * Monomial::var(Var::z, -1)},
        {Var::d, kQv * Monomial::var(Var::z, -1)},
    };
    const TruncatedSeries extracted =
        closed_forms::phi_bounded(bound, inst.cutoff).substitute(alt_sub).coeff_of(Var::z, k);
    return check_all(
        {check_series(gf_enumerated(c, WeightKind::Norm, g), rhs), check_series(extracted, rhs)});
}

CheckOutcome run_T5_7(const Params& p, const IdentityInstance&) {
    const int N = require_nonneg(p, "N");
    const int n = require_nonneg(p, "n");
    const int k = require_nonneg(p, "k");
    PartitionConstraints lhs;
    lhs.max_parts = N;
    lhs.fixed_norm = n;
    lhs.filter(StatKey::OddParts, k);
    PartitionConstraints rhs = parts_up_to(N);
    rhs.fixed_norm = n;
    rhs.filter(StatKey::AltSum, k);
    return check_count(count_partitions(lhs), count_partitions(rhs));
}

CheckOutcome run_T6_1a(const Params& p, const IdentityInstance&) {
    const int bound = require_nonneg(p, "bound");
    return check_poly(gf_enumerated(distinct_up_to(bound), WeightKind::Boulet),
                      closed_forms::psi_finite_boulet(bound));
}

CheckOutcome run_T6_1b(const Params& p, const IdentityInstance& inst) {
    const int bound = require_nonneg(p, "bound");
    const Grading g = Grading::norm(inst.cutoff);
    return check_series(gf_enumerated(parts_up_to(bound), WeightKind::Boulet, g),
                        closed_forms::phi_finite_boulet(bound, inst.cutoff));
}

CheckOutcome run_E6_TRANSFORM(const Params& p, const IdentityInstance& inst) {
    const int N = require_nonneg(p, "N");
    const int nu = require_nu(p);
    return check_rational_points(
        inst.points, inst.seed, 4, [&](const std::vector<Rational>& v) {
            const Rational &a = v[0], &b = v[1], &c = v[2], &d = v[3];
            const Rational Q = a * b * c * d;
            if (Q == 1)
                throw Error("degenerate base Q = 1");
            const Rational Qnu = nu == 1 ? Q : Rational(1);
            const Rational lower2 = -rat_pow(Q, 1 - N) / c;
            const Rational lhs = phi_terminating({rat_pow(Q, -N), -a * Qnu}, {lower2}, Q, -d);
            Rational rhs = rat_pow(-a * Qnu, N) *
                           pochhammer_rational(b * d * rat_pow(Q, -N - nu), Q, N) /
                           pochhammer_rational(lower2, Q, N);
            rhs *= phi_terminating({rat_pow(Q, -N), -a * Qnu, -a * b * c}, {a * c * Qnu}, Q,
                                   rat_pow(Q, N) / (a * b));
            return std::make_pair(lhs, rhs);
        });
}

CheckOutcome run_T6_2(const Params& p, const IdentityInstance&) {
    const int bound = require_nonneg(p, "bound");
    const int parts = require_nonneg(p, "parts");
    PartitionConstraints c;
    c.max_part = bound;
    c.max_parts = parts;
    return check_poly(gf_enumerated(c, WeightKind::Boulet),
                      closed_forms::phi_double_bounded(bound, parts));
}

CheckOutcome run_E6_QBIN(const Params& p, const IdentityInstance&) {
    const int N = require_nonneg(p, "N");
    const int M = require_nonneg(p, "M");
    PartitionConstraints c;
    c.max_part = N;
    c.max_parts = 2 * M;
    const LaurentPoly rhs = gaussian_binomial(N + 2 * M, 2 * M, kQv);
    const SubstMap all_q{{Var::a, kQv}, {Var::b, kQv}, {Var::c, kQv}, {Var::d, kQv}};
    return check_all(
        {check_poly(gf_enumerated(c, WeightKind::Norm), rhs),
         check_poly(closed_forms::phi_double_bounded(N, 2 * M).substitute(all_q), rhs)});
}

CheckOutcome run_E6_RESTPHI(const Params& p, const IdentityInstance&) {
    const int bound = require_nonneg(p, "bound");
    const int parts = require_nonneg(p, "parts");
    PartitionConstraints c;
    c.max_part = bound;
    c.max_parts = parts;
    return check_poly(gf_enumerated(c, WeightKind::Boulet),
                      closed_forms::rest_of_phi(bound, parts));
}

CheckOutcome run_T6_3(const Params& p, const IdentityInstance&) {
    const int bound = require_nonneg(p, "bound");
    const int parts = require_nonneg(p, "parts");
    PartitionConstraints c;
    c.max_part = bound;
    c.max_parts = parts;
    return check_poly(gf_enumerated(c, WeightKind::Boulet),
                      closed_forms::phi_double_bounded_yee(bound, parts));
}

CheckOutcome run_T6_4(const Params& p, const IdentityInstance& inst) {
    const int N = require_nonneg(p, "N");
    const int nu = require_nu(p);
    if (N - 1 + nu < 0)
        throw Error("parameter N must be at least 1 - nu");
    const int d0 = nu == 0 ? 1 : 0; // Kronecker delta(nu, 0)
    return check_rational_points(
        inst.points, inst.seed, 2, [&](const std::vector<Rational>& v) {
            const Rational &a = v[0], &q = v[1];
            const Rational q2 = q * q, q4 = q2 * q2;
            const Rational lower = -rat_pow(q, -4 * (N - d0)) / (a * q);
            const Rational lhs = phi_terminating({rat_pow(q, -4 * N), -a * q}, {lower}, q4,
                                                 -rat_pow(q, 1 + 4 * d0) / a);
            const Rational rhs = pochhammer_rational(-q2, q2, N) *
                                 pochhammer_rational(-a * q * q2, q2, N - 1 + nu) /
                                 pochhammer_rational(-a * q * q4, q4, N - 1 + nu);
            return std::make_pair(lhs, rhs);
        });
}

CheckOutcome run_P7_1(const Params& p, const IdentityInstance&) {
    const int bound = require_nonneg(p, "bound");
    const int parts = require_nonneg(p, "parts");
    PartitionConstraints c;
    c.max_part = bound;
    c.max_parts = parts;
    return check_poly(gf_enumerated(c, WeightKind::BgT), closed_forms::outlook_bg(bound, parts));
}

CheckOutcome run_P7_2(const Params& p, const IdentityInstance&) {
    const int N = require_nonneg(p, "N");
    const int parts = require_nonneg(p, "parts");
    PartitionConstraints c;
    c.max_part = N;
    c.max_parts = parts;
    return check_poly(gf_enumerated(c, WeightKind::AltZ), closed_forms::outlook_alt(N, parts));
}

CheckOutcome run_P7_3(const Params& p, const IdentityInstance&) {
    const int N = require_nonneg(p, "N");
    const int M = require_nonneg(p, "M");
    const int n = require_nonneg(p, "n");
    const int k = require_nonneg(p, "k");
    PartitionConstraints lhs; // A_{M,N}: parts <= M, at most N parts, k odd parts
    lhs.max_part = M;
    lhs.max_parts = N;
    lhs.fixed_norm = n;
    lhs.filter(StatKey::OddParts, k);
    PartitionConstraints rhs; // B_{N,M}: parts <= N, at most M parts, alt sum k
    rhs.max_part = N;
    rhs.max_parts = M;
    rhs.fixed_norm = n;
    rhs.filter(StatKey::AltSum, k);
    return check_count(count_partitions(lhs), count_partitions(rhs));
}

CheckOutcome run_P7_4(const Params& p, const IdentityInstance&) {
    const int bound = require_nonneg(p, "bound");
    const int i = require_nonneg(p, "i");
    const int j = require_nonneg(p, "j");
    const int m = require_nonneg(p, "m");
    if (i != 0 && j != 0)
        throw Error("closed form requires i=0 or j=0");
    PartitionConstraints c = distinct_up_to(bound);
    c.filter(StatKey::OddIndexedOdd, i)
        .filter(StatKey::EvenIndexedOdd, j)
        .filter(StatKey::EvenParts, m);
    return check_poly(gf_enumerated(c, WeightKind::Norm),
                      closed_forms::refined_distinct(bound, i, j, m));
}

CheckOutcome run_RHO_PROPS(const Params& p, const IdentityInstance&) {
    return check_bijection_props(require_nonneg(p, "max_norm"), false);
}

CheckOutcome run_RHOSTAR_PROPS(const Params& p, const IdentityInstance&) {
    return check_bijection_props(require_nonneg(p, "max_norm"), true);
}

// ---------------------------------------------------------------------------
// registry

using Runner = CheckOutcome (*)(const Params&, const IdentityInstance&);

struct Entry {
    IdentityInfo info;
    Runner run;
};

CheckOutcome run_C4_3a(const Params& p, const IdentityInstance& i) { return run_C4_3(p, i, 1); }
CheckOutcome run_C4_3b(const Params& p, const IdentityInstance& i) { return run_C4_3(p, i, 2); }
CheckOutcome run_T5_1a(const Params& p, const IdentityInstance& i) { return run_T5_1(p, i, false); }
CheckOutcome run_T5_1b(const Params& p, const IdentityInstance& i) { return run_T5_1(p, i, true); }

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = [] {
        std::vector<Entry> r;
        const auto add = [&r](std::string id, std::string anchor, std::vector<std::string> params,
                              std::vector<Mode> modes, int default_cutoff, Runner run,
                              std::vector<std::string> optional_params = {}) {
            r.push_back(Entry{IdentityInfo{std::move(id), std::move(anchor), std::move(params),
                                           std::move(optional_params), std::move(modes),
                                           default_cutoff},
                              run});
        };
        add("T1_1", "Thm 1.1: distinct-part counts, positional vs mod-4 classes", {"n", "i", "j"},
            {Mode::Exact}, 0, run_T1_1);
        add("E1_GF13MOD4", "eq (genFunc1or3mod4): k distinct parts in class 2+(-1)^mu mod 4",
            {"k", "mu"}, {Mode::Truncated}, 30, run_E1_GF13MOD4);
        add("T2_1", "Thm 2.1, eqs (Peven)/(Podd): bounded P_N(i,j,q)", {"bound", "i", "j"},
            {Mode::Exact}, 0, run_T2_1);
        add("L2_2", "Lemma 2.2, eq (recursion): largest-part recurrence", {"bound", "i", "j"},
            {Mode::Exact}, 0, run_L2_2);
        add("T2_3", "Thm 2.3, eqs (generalSavageSills1/2): row sums of P(i,j,q)", {"k", "line"},
            {Mode::Truncated}, 30, run_T2_3);
        add("T2_4", "Thm 2.4: fixed count of positional odd parts vs mod-4 classes",
            {"n", "k", "line"}, {Mode::Exact}, 0, run_T2_4);
        add("E2_PRODSILLS", "eqs (prodSills)/(prodSills2): mod-8 product forms", {"line"},
            {Mode::Truncated}, 30, run_E2_PRODSILLS);
        add("T2_5", "Thm 2.5 (Goellnitz): gap condition vs mod-8 classes", {"line"},
            {Mode::Truncated}, 30, run_T2_5);
        add("T2_6", "Thm 2.6 (Savage-Sills): even positional parity vs mod-8 classes",
            {"n", "line"}, {Mode::Exact}, 0, run_T2_6);
        add("T3_1", "Thm 3.1, eq (distinctBGEQN): distinct parts with BG-rank k", {"bound", "k"},
            {Mode::Exact}, 0, run_T3_1);
        add("T3_2", "Thm 3.2: unrestricted partitions with BG-rank k", {"bound", "k"},
            {Mode::Truncated}, 20, run_T3_2);
        add("T3_3", "Thm 3.3, eq (BGgen): BG-rank sum gives (-q;q)_N", {"bound"}, {Mode::Exact},
            0, run_T3_3);
        add("C3_4", "Cor 3.4, eq (unrestrictedBGtermWithoutT): BG-rank sum, unrestricted",
            {"bound"}, {Mode::Truncated}, 20, run_C3_4);
        add("E3_CHB", "eq (chanceofbase): q-binomial under base inversion", {"n", "m"},
            {Mode::Exact}, 0, run_E3_CHB);
        add("T4_1", "Thm 4.1: double sum of P_N(i,j,q) t^i z^j as a single fold", {"bound"},
            {Mode::Exact}, 0, run_T4_1);
        add("T4_2", "Thm 4.2, eq (new5.2): q-binomial summation", {"N", "nu", "i", "j"},
            {Mode::Exact}, 0, run_T4_2);
        add("C4_3a", "Cor 4.3, eq (qNewLittleGollnitz1)", {"N", "nu"}, {Mode::Exact}, 0,
            run_C4_3a);
        add("C4_3b", "Cor 4.3, eq (qNewLittleGollnitz2)", {"N", "nu"}, {Mode::Exact}, 0,
            run_C4_3b);
        add("T4_4", "eq (connect): two single-fold sums agree", {"N"}, {Mode::Exact}, 0,
            run_T4_4);
        add("T4_5", "Cigler's binomial transform with free y,z", {"N"}, {Mode::Exact}, 0,
            run_T4_5);
        add("T5_1a", "Thm 5.1, eq (PSI): Boulet product over distinct partitions", {},
            {Mode::Truncated}, 14, run_T5_1a);
        add("T5_1b", "Thm 5.1, eq (PHI): Boulet product over all partitions", {},
            {Mode::Truncated}, 14, run_T5_1b);
        add("T5_2a", "Thm 5.2, eq (PSI2Nnu): bounded Psi closed form", {"bound"}, {Mode::Exact},
            0, run_T5_2a);
        add("T5_2b", "Thm 5.2, eq (PHI2Nnu): bounded Phi closed form", {"bound"},
            {Mode::Truncated}, 14, run_T5_2b);
        add("T5_3", "x-series over all bounds of Psi_{2N+nu}", {"nu", "xmax"}, {Mode::Truncated},
            12, run_T5_3);
        add("E5_PSI2PHI", "eqs (PSItoPHI)/(PSItoPHI_Bounded): Phi from Psi", {},
            {Mode::Truncated}, 14, run_E5_PSI2PHI, {"bound"});
        add("T5_4", "Thm 5.4, eq (HermiteBerkovich): Rogers-Szego expansion", {"bound"},
            {Mode::Exact}, 0, run_T5_4);
        add("E5_RS2PSI", "eq (RogersSzegoToPSI): H_N(zq,q^2) as a Psi specialization", {"bound"},
            {Mode::Exact}, 0, run_E5_RS2PSI);
        add("E5_EXTRACT", "eq (extraction): alternating-sum slice of H_N", {"bound", "k"},
            {Mode::Exact}, 0, run_E5_EXTRACT);
        add("T5_6", "Thm 5.6: k odd parts vs alternating sum k, distinct side", {"N", "n", "k"},
            {Mode::Exact}, 0, run_T5_6);
        add("E5_EXTRACTPHI", "eq (extractionPHI): alternating-sum slice of Phi_N", {"bound", "k"},
            {Mode::Truncated}, 20, run_E5_EXTRACTPHI);
        add("T5_7", "Thm 5.7: A_N(n,k) = B_N(n,k)", {"N", "n", "k"}, {Mode::Exact}, 0, run_T5_7);
        add("T6_1a", "Thm 6.1, eq (finiteBouletPSI)", {"bound"}, {Mode::Exact}, 0, run_T6_1a);
        add("T6_1b", "Thm 6.1, eq (finiteBouletPHI)", {"bound"}, {Mode::Truncated}, 14,
            run_T6_1b);
        add("E6_TRANSFORM", "eq (transform2Phi1to3Phi1): 2phi1 to 3phi1", {"N", "nu"},
            {Mode::RationalPoints}, 0, run_E6_TRANSFORM);
        add("T6_2", "Thm 6.2, eq (boundedFiniteBouletEQN): doubly bounded Phi",
            {"bound", "parts"}, {Mode::Exact}, 0, run_T6_2);
        add("E6_QBIN", "eq (qBinCoeff): Phi_{N,2M}(q,q,q,q) is a q-binomial", {"N", "M"},
            {Mode::Exact}, 0, run_E6_QBIN);
        add("E6_RESTPHI", "eq (restOfPhi): odd parts bound from even ones", {"bound", "parts"},
            {Mode::Exact}, 0, run_E6_RESTPHI);
        add("T6_3", "Thm 6.3, eq (generalYeeEQN): doubly bounded Phi, Yee form",
            {"bound", "parts"}, {Mode::Exact}, 0, run_T6_3);
        add("T6_4", "Thm 6.4 (Berkovich-Warnaar): terminating 2phi1 evaluation", {"N", "nu"},
            {Mode::RationalPoints}, 0, run_T6_4);
        add("P7_1", "Prop 7.1, eq (BG_double_bdd_eqn): doubly bounded BG-rank form",
            {"bound", "parts"}, {Mode::Exact}, 0, run_P7_1);
        add("P7_2", "Prop 7.2: doubly bounded alternating-sum form", {"N", "parts"},
            {Mode::Exact}, 0, run_P7_2);
        add("P7_3", "Prop 7.3: A_{M,N}(n,k) = B_{N,M}(n,k)", {"N", "M", "n", "k"}, {Mode::Exact},
            0, run_P7_3);
        add("P7_4", "Prop 7.4: refined distinct-part closed forms", {"bound", "i", "j", "m"},
            {Mode::Exact}, 0, run_P7_4);
        add("RHO_PROPS", "map rho: row-pair extraction invariants", {"max_norm"}, {Mode::Exact},
            0, run_RHO_PROPS);
        add("RHOSTAR_PROPS", "map rho*: odd-column-pair extraction invariants", {"max_norm"},
            {Mode::Exact}, 0, run_RHOSTAR_PROPS);
        return r;
    }();
    return entries;
}

const Entry* find_entry(const std::string& id) {
    for (const auto& e : registry())
        if (e.info.id == id)
            return &e;
    return nullptr;
}

} // namespace

const std::vector<IdentityInfo>& list_identities() {
    static const std::vector<IdentityInfo> infos = [] {
        std::vector<IdentityInfo> r;
        for (const auto& e : registry())
            r.push_back(e.info);
        return r;
    }();
    return infos;
}

const IdentityInfo* find_identity(const std::string& id) {
    const Entry* e = find_entry(id);
    return e ? &e->info : nullptr;
}

VerificationReport verify(const IdentityInstance& inst) {
    VerificationReport report;
    report.instance = inst;
    const auto start = std::chrono::steady_clock::now();
    const auto finish = [&] {
        report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
    };
    const Entry* entry = find_entry(inst.id);
    if (!entry) {
        report.status = Status::Error;
        report.error_message = "unknown identity id '" + inst.id + "'";
        finish();
        return report;
    }
    if (std::find(entry->info.modes.begin(), entry->info.modes.end(), inst.mode) ==
        entry->info.modes.end()) {
        report.status = Status::Error;
        report.error_message = "mode " + mode_name(inst.mode) + " not legal for " + inst.id;
        finish();
        return report;
    }
    IdentityInstance effective = inst;
    if (effective.mode == Mode::Truncated && effective.cutoff <= 0)
        effective.cutoff = entry->info.default_cutoff;
    try {
        Params params{effective.params};
        for (const auto& name : entry->info.params)
            params.require(name); // surface missing parameters up front
        for (const auto& [name, value] : effective.params) {
            (void)value;
            const auto& req = entry->info.params;
            const auto& opt = entry->info.optional_params;
            if (std::find(req.begin(), req.end(), name) == req.end() &&
                std::find(opt.begin(), opt.end(), name) == opt.end())
                throw Error("unknown parameter '" + name + "' for " + inst.id);
        }
        const CheckOutcome out = entry->run(params, effective);
        report.lhs_summary = out.lhs;
        report.rhs_summary = out.rhs;
        report.first_discrepancy = out.disc;
        report.status = out.disc ? Status::Fail : Status::Pass;
    } catch (const std::exception& e) {
        report.status = Status::Error;
        report.error_message = e.what();
    }
    finish();
    return report;
}

namespace {

void add_instance(std::vector<IdentityInstance>& out, std::string id,
                  std::map<std::string, int> params, Mode mode = Mode::Exact, int cutoff = 0) {
    IdentityInstance inst;
    inst.id = std::move(id);
    inst.params = std::move(params);
    inst.mode = mode;
    inst.cutoff = cutoff;
    out.push_back(std::move(inst));
}

std::vector<IdentityInstance> smoke_suite() {
    std::vector<IdentityInstance> s;
    add_instance(s, "T1_1", {{"n", 14}, {"i", 1}, {"j", 1}});
    add_instance(s, "T5_7", {{"N", 3}, {"n", 10}, {"k", 2}});
    add_instance(s, "P7_3", {{"N", 3}, {"M", 5}, {"n", 10}, {"k", 2}});
    add_instance(s, "P7_4", {{"bound", 7}, {"i", 0}, {"j", 1}, {"m", 2}});
    add_instance(s, "P7_4", {{"bound", 7}, {"i", 1}, {"j", 0}, {"m", 1}});
    add_instance(s, "P7_4", {{"bound", 6}, {"i", 2}, {"j", 0}, {"m", 1}});
    add_instance(s, "T2_1", {{"bound", 3}, {"i", 1}, {"j", 0}});
    add_instance(s, "T2_1", {{"bound", 7}, {"i", 2}, {"j", 1}});
    add_instance(s, "T3_1", {{"bound", 5}, {"k", -1}});
    add_instance(s, "T3_3", {{"bound", 6}});
    add_instance(s, "T4_1", {{"bound", 5}});
    add_instance(s, "T5_2a", {{"bound", 4}});
    add_instance(s, "T5_4", {{"bound", 5}});
    add_instance(s, "T6_2", {{"bound", 3}, {"parts", 4}});
    add_instance(s, "T6_4", {{"N", 1}, {"nu", 0}}, Mode::RationalPoints);
    add_instance(s, "RHO_PROPS", {{"max_norm", 10}});
    add_instance(s, "RHOSTAR_PROPS", {{"max_norm", 10}});
    return s;
}

std::vector<IdentityInstance> default_suite() {
    std::vector<IdentityInstance> s;
    for (int n : {8, 14})
        for (int i = 0; i <= 1; ++i)
            for (int j = 0; j <= 1; ++j)
                add_instance(s, "T1_1", {{"n", n}, {"i", i}, {"j", j}});
    for (int k = 0; k <= 2; ++k)
        for (int mu = 0; mu <= 1; ++mu)
            add_instance(s, "E1_GF13MOD4", {{"k", k}, {"mu", mu}}, Mode::Truncated);
    for (int bound = 0; bound <= 9; ++bound)
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; j <= 4; ++j)
                add_instance(s, "T2_1", {{"bound", bound}, {"i", i}, {"j", j}});
    for (int bound = 1; bound <= 9; ++bound)
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 3; ++j)
                add_instance(s, "L2_2", {{"bound", bound}, {"i", i}, {"j", j}});
    for (int k = 0; k <= 2; ++k)
        for (int line = 1; line <= 2; ++line)
            add_instance(s, "T2_3", {{"k", k}, {"line", line}}, Mode::Truncated);
    for (int n : {9, 12, 14})
        for (int k = 0; k <= 2; ++k)
            for (int line = 1; line <= 2; ++line)
                add_instance(s, "T2_4", {{"n", n}, {"k", k}, {"line", line}});
    for (int line = 1; line <= 2; ++line) {
        add_instance(s, "E2_PRODSILLS", {{"line", line}}, Mode::Truncated);
        add_instance(s, "T2_5", {{"line", line}}, Mode::Truncated);
    }
    for (int n : {5, 7, 11, 13})
        for (int line = 1; line <= 2; ++line)
            add_instance(s, "T2_6", {{"n", n}, {"line", line}});
    for (int bound = 0; bound <= 8; ++bound)
        for (int k = -5; k <= 6; ++k) {
            add_instance(s, "T3_1", {{"bound", bound}, {"k", k}});
            add_instance(s, "T3_2", {{"bound", bound}, {"k", k}}, Mode::Truncated);
        }
    for (int bound = 0; bound <= 10; ++bound)
        add_instance(s, "T3_3", {{"bound", bound}});
    for (int bound = 0; bound <= 8; ++bound)
        add_instance(s, "C3_4", {{"bound", bound}}, Mode::Truncated);
    for (int n = 0; n <= 6; ++n)
        for (int m = 0; m <= 6; ++m)
            add_instance(s, "E3_CHB", {{"n", n}, {"m", m}});
    for (int bound = 0; bound <= 9; ++bound)
        add_instance(s, "T4_1", {{"bound", bound}});
    for (int N = 0; N <= 4; ++N)
        for (int nu = 0; nu <= 1; ++nu)
            for (int i = 0; i <= 3; ++i)
                for (int j = 0; j <= 3; ++j)
                    add_instance(s, "T4_2", {{"N", N}, {"nu", nu}, {"i", i}, {"j", j}});
    for (int N = 0; N <= 6; ++N)
        for (int nu = 0; nu <= 1; ++nu) {
            add_instance(s, "C4_3a", {{"N", N}, {"nu", nu}});
            add_instance(s, "C4_3b", {{"N", N}, {"nu", nu}});
        }
    for (int N = 0; N <= 6; ++N) {
        add_instance(s, "T4_4", {{"N", N}});
        add_instance(s, "T4_5", {{"N", N}});
    }
    add_instance(s, "T5_1a", {}, Mode::Truncated);
    add_instance(s, "T5_1b", {}, Mode::Truncated);
    for (int bound = 0; bound <= 6; ++bound) {
        add_instance(s, "T5_2a", {{"bound", bound}});
        add_instance(s, "T5_2b", {{"bound", bound}}, Mode::Truncated);
        add_instance(s, "T6_1a", {{"bound", bound}});
        add_instance(s, "T6_1b", {{"bound", bound}}, Mode::Truncated);
    }
    for (int nu = 0; nu <= 1; ++nu)
        add_instance(s, "T5_3", {{"nu", nu}, {"xmax", 4}}, Mode::Truncated);
    add_instance(s, "E5_PSI2PHI", {}, Mode::Truncated);
    for (int bound = 0; bound <= 5; ++bound)
        add_instance(s, "E5_PSI2PHI", {{"bound", bound}}, Mode::Truncated);
    for (int bound = 0; bound <= 10; ++bound) {
        add_instance(s, "T5_4", {{"bound", bound}});
        add_instance(s, "E5_RS2PSI", {{"bound", bound}});
        for (int k = 0; k <= bound; k += 2)
            add_instance(s, "E5_EXTRACT", {{"bound", bound}, {"k", k}});
    }
    for (int n : {6, 10, 12})
        for (int N : {2, 3, 5})
            for (int k = 0; k <= 3; ++k) {
                add_instance(s, "T5_6", {{"N", N}, {"n", n}, {"k", k}});
                add_instance(s, "T5_7", {{"N", N}, {"n", n}, {"k", k}});
            }
    for (int bound = 0; bound <= 6; ++bound)
        for (int k = 0; k <= bound; k += 3)
            add_instance(s, "E5_EXTRACTPHI", {{"bound", bound}, {"k", k}}, Mode::Truncated);
    for (int N = 0; N <= 4; ++N)
        for (int nu = 0; nu <= 1; ++nu)
            add_instance(s, "E6_TRANSFORM", {{"N", N}, {"nu", nu}}, Mode::RationalPoints);
    for (int bound = 0; bound <= 5; ++bound)
        for (int parts = 0; parts <= 5; ++parts) {
            if (parts % 2 == 0)
                add_instance(s, "T6_2", {{"bound", bound}, {"parts", parts}});
            else
                add_instance(s, "E6_RESTPHI", {{"bound", bound}, {"parts", parts}});
            if (!(bound % 2 == 1 && parts % 2 == 0))
                add_instance(s, "T6_3", {{"bound", bound}, {"parts", parts}});
        }
    for (int N = 0; N <= 5; ++N)
        for (int M = 0; M <= 2; ++M)
            add_instance(s, "E6_QBIN", {{"N", N}, {"M", M}});
    for (int nu = 0; nu <= 1; ++nu)
        for (int N = 1 - nu; N <= 4; ++N)
            add_instance(s, "T6_4", {{"N", N}, {"nu", nu}}, Mode::RationalPoints);
    for (int bound = 0; bound <= 6; ++bound)
        for (int parts = 0; parts <= 6; ++parts) {
            add_instance(s, "P7_1", {{"bound", bound}, {"parts", parts}});
            if (parts >= 1)
                add_instance(s, "P7_2", {{"N", bound}, {"parts", parts}});
        }
    for (int n : {8, 10, 14})
        for (int k = 0; k <= 2; ++k)
            add_instance(s, "P7_3", {{"N", 3}, {"M", 5}, {"n", n}, {"k", k}});
    for (int bound = 0; bound <= 6; ++bound)
        for (int m = 0; m <= 2; ++m)
            for (int v = 0; v <= 2; ++v) {
                add_instance(s, "P7_4", {{"bound", bound}, {"i", 0}, {"j", v}, {"m", m}});
                add_instance(s, "P7_4", {{"bound", bound}, {"i", v}, {"j", 0}, {"m", m}});
            }
    add_instance(s, "RHO_PROPS", {{"max_norm", 18}});
    add_instance(s, "RHOSTAR_PROPS", {{"max_norm", 18}});
    return s;
}

std::vector<IdentityInstance> full_suite() {
    std::vector<IdentityInstance> s = default_suite();
    for (int bound = 10; bound <= 12; ++bound)
        for (int i = 0; i <= 5; ++i)
            for (int j = 0; j <= 5; ++j)
                add_instance(s, "T2_1", {{"bound", bound}, {"i", i}, {"j", j}});
    for (int bound = 9; bound <= 10; ++bound)
        for (int k = -6; k <= 7; ++k)
            add_instance(s, "T3_1", {{"bound", bound}, {"k", k}});
    for (int bound = 7; bound <= 8; ++bound) {
        add_instance(s, "T5_2a", {{"bound", bound}});
        add_instance(s, "T6_1a", {{"bound", bound}});
        add_instance(s, "T5_2b", {{"bound", bound}}, Mode::Truncated, 16);
        add_instance(s, "T6_1b", {{"bound", bound}}, Mode::Truncated, 16);
    }
    for (int bound = 11; bound <= 12; ++bound) {
        add_instance(s, "T5_4", {{"bound", bound}});
        add_instance(s, "E5_RS2PSI", {{"bound", bound}});
    }
    for (int nu = 0; nu <= 1; ++nu)
        add_instance(s, "T5_3", {{"nu", nu}, {"xmax", 5}}, Mode::Truncated, 14);
    add_instance(s, "RHO_PROPS", {{"max_norm", 22}});
    add_instance(s, "RHOSTAR_PROPS", {{"max_norm", 22}});
    return s;
}

} // namespace

std::vector<IdentityInstance> suite_instances(const std::string& name) {
    if (name == "smoke")
        return smoke_suite();
    if (name == "default")
        return default_suite();
    if (name == "full")
        return full_suite();
    throw Error("unknown suite '" + name + "' (expected smoke, default or full)");
}

std::pair<std::vector<VerificationReport>, SuiteSummary>
run_instances(const std::vector<IdentityInstance>& instances, int jobs) {
    std::vector<VerificationReport> reports(instances.size());
    if (jobs < 1)
        jobs = 1;
    jobs = std::min(jobs, std::max(static_cast<int>(instances.size()), 1));
    if (jobs == 1) {
        for (std::size_t i = 0; i < instances.size(); ++i)
            reports[i] = verify(instances[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= instances.size())
                        return;
                    reports[i] = verify(instances[i]);
                }
            });
        for (auto& t : workers)
            t.join();
    }
    std::sort(reports.begin(), reports.end(),
              [](const VerificationReport& a, const VerificationReport& b) {
                  return a.instance.key() < b.instance.key();
              });
    SuiteSummary summary;
    for (const auto& r : reports) {
        if (r.status == Status::Pass)
            ++summary.pass;
        else if (r.status == Status::Fail)
            ++summary.fail;
        else
            ++summary.error;
    }
    return {std::move(reports), summary};
}

std::pair<std::vector<VerificationReport>, SuiteSummary>
run_suite(const std::string& name, int jobs) {
    return run_instances(suite_instances(name), jobs);
}

namespace {

nlohmann::json report_json(const VerificationReport& r) {
    nlohmann::json j;
    j["id"] = r.instance.id;
    j["params"] = r.instance.params;
    j["mode"] = mode_name(r.instance.mode);
    if (r.instance.mode == Mode::Truncated)
        j["cutoff"] = r.instance.cutoff;
    if (r.instance.mode == Mode::RationalPoints) {
        j["points"] = r.instance.points;
        j["seed"] = r.instance.seed;
    }
    j["status"] = status_name(r.status);
    j["lhs"] = r.lhs_summary;
    j["rhs"] = r.rhs_summary;
    if (r.first_discrepancy) {
        j["first_discrepancy"] = {{"monomial", r.first_discrepancy->monomial},
                                  {"lhs", r.first_discrepancy->lhs},
                                  {"rhs", r.first_discrepancy->rhs}};
    } else {
        j["first_discrepancy"] = nullptr;
    }
    if (!r.error_message.empty())
        j["error"] = r.error_message;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

} // namespace

std::string report_to_json(const VerificationReport& r) { return report_json(r).dump(2); }

std::string reports_to_json(const std::vector<VerificationReport>& rs, const SuiteSummary& s) {
    nlohmann::json j;
    j["reports"] = nlohmann::json::array();
    for (const auto& r : rs)
        j["reports"].push_back(report_json(r));
    j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"error", s.error}};
    return j.dump(2);
}

} // namespace harness
} // namespace qplab
