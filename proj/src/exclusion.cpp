#include "fppq/exclusion.hpp"

#include <stdexcept>

namespace fppq {

namespace {

void check_m(int m) {
    if (m == 1 || m == 2) return;
    throw std::invalid_argument(
        "exclusion: m = " + std::to_string(m) + " is out of range; E.nu*K_Z = 3m/7 must lie "
        "strictly between 0 and 9/7, so m is 1 or 2");
}

std::size_t var_index(const std::string& name) {
    for (std::size_t i = 0; i < kCandidateVariables.size(); ++i)
        if (name == kCandidateVariables[i]) return i;
    throw std::logic_error("exclusion: unknown variable " + name);
}

LinearForm make_form(std::string label, BigInt constant,
                     std::initializer_list<std::pair<const char*, long long>> terms) {
    LinearForm f;
    f.label = std::move(label);
    f.constant = std::move(constant);
    for (const auto& [name, coeff] : terms) f.coeffs[var_index(name)] = coeff;
    return f;
}

// re-derives a form as pairings in the ambient space: constant from m*M,
// d coefficient from -L, the rest from the curves themselves
LinearForm derive_form(const ResolutionSpace& space, const GlueVector& glue_m,
                       const GlueVector& glue_l, int m, const std::string& label,
                       const QVec& target) {
    LinearForm f;
    f.label = label;
    const Rational constant = Rational(m) * space.pair(glue_m.coeffs, target);
    const Rational d_coeff = -space.pair(glue_l.coeffs, target);
    if (!is_integer(constant) || !is_integer(d_coeff))
        throw std::logic_error("exclusion: fractional coefficient while deriving " + label);
    f.constant = numerator(constant);
    f.coeffs[var_index("d")] = numerator(d_coeff);
    for (std::size_t i = 1; i < kCandidateVariables.size(); ++i) {
        // a2, a3, b1..b3, c1..c3 pair as honest curves
        std::string curve(kCandidateVariables[i]);
        curve[0] = static_cast<char>(curve[0] - 'a' + 'A');
        const Rational coeff = space.pair(space.basis_vector(curve), target);
        if (!is_integer(coeff))
            throw std::logic_error("exclusion: fractional coefficient while deriving " + label);
        f.coeffs[i] = numerator(coeff);
    }
    return f;
}

// combo = sum multiplier_i * form_i; the eliminated variables must cancel
LinearForm combine(const std::vector<std::pair<Rational, const LinearForm*>>& parts,
                   const std::string& label) {
    // exact rational combination; the result must be integral again
    Rational constant = 0;
    std::array<Rational, 9> coeffs{};
    for (const auto& [mult, form] : parts) {
        constant += mult * Rational(form->constant);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            coeffs[i] += mult * Rational(form->coeffs[i]);
    }
    LinearForm out;
    out.label = label;
    // keep the rational data in a scaled integer form: multiply by the lcm
    BigInt scale = denominator(constant);
    for (const auto& c : coeffs) scale = lcm(scale, denominator(c));
    out.constant = numerator(constant * Rational(scale));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        out.coeffs[i] = numerator(coeffs[i] * Rational(scale));
    return out;
}

}  // namespace

std::array<long long, 10> CurveCandidate::basis_coords() const {
    return {m, -d, a2, a3, b1, b2, b3, c1, c2, c3};
}

long long CurveCandidate::variable(std::size_t idx) const {
    switch (idx) {
        case 0: return d;
        case 1: return a2;
        case 2: return a3;
        case 3: return b1;
        case 4: return b2;
        case 5: return b3;
        case 6: return c1;
        case 7: return c2;
        case 8: return c3;
        default: throw std::out_of_range("CurveCandidate: bad variable index");
    }
}

BigInt LinearForm::eval(const CurveCandidate& cand) const {
    BigInt value = constant;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) value += coeffs[i] * cand.variable(i);
    return value;
}

ConstraintSystem build_system(int m) {
    check_m(m);
    ConstraintSystem sys;
    sys.m = m;
    sys.inequalities = {
        make_form("E.A1", 0, {{"a2", 1}}),
        make_form("E.A2", 0, {{"a2", -2}, {"a3", 1}}),
        make_form("E.A3", 0, {{"d", 1}, {"a2", 1}, {"a3", -3}}),
        make_form("E.B1", 0, {{"b1", -2}, {"b2", 1}}),
        make_form("E.B2", 0, {{"b1", 1}, {"b2", -2}, {"b3", 1}}),
        make_form("E.B3", 2 * m, {{"d", 2}, {"b2", 1}, {"b3", -3}}),
        make_form("E.C1", 0, {{"c1", -2}, {"c2", 1}}),
        make_form("E.C2", 0, {{"c1", 1}, {"c2", -2}, {"c3", 1}}),
        make_form("E.C3", -m, {{"d", 4}, {"c2", 1}, {"c3", -3}}),
    };
    sys.equality = make_form("E.K_Y + 1", 1, {{"d", -3}, {"a3", 1}, {"b3", 1}, {"c3", 1}});

    // cross-check every form against the ambient bilinear pairings
    const ResolutionSpace space = make_resolution_space();
    const GlueVector glue_l = canonical_glue_L(space);
    const GlueVector glue_m = canonical_glue_M(space, glue_l);
    const std::array<const char*, 9> targets = {"A1", "A2", "A3", "B1", "B2",
                                                "B3", "C1", "C2", "C3"};
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const LinearForm derived = derive_form(space, glue_m, glue_l, m, sys.inequalities[i].label,
                                               space.basis_vector(targets[i]));
        if (derived.constant != sys.inequalities[i].constant ||
            derived.coeffs != sys.inequalities[i].coeffs)
            throw std::logic_error("build_system: transcription mismatch in " +
                                   sys.inequalities[i].label);
    }
    LinearForm eq = derive_form(space, glue_m, glue_l, m, sys.equality.label,
                                space.canonical_class());
    eq.constant += 1;  // E.K_Y + 1
    if (eq.constant != sys.equality.constant || eq.coeffs != sys.equality.coeffs)
        throw std::logic_error("build_system: transcription mismatch in the equality");

    return sys;
}

Stage1Bounds derive_bounds(const ConstraintSystem& sys) {
    const auto& f = sys.inequalities;
    const auto form = [&](const std::string& label) -> const LinearForm& {
        for (const auto& g : f)
            if (g.label == label) return g;
        throw std::logic_error("derive_bounds: missing form " + label);
    };

    // a bound combo must isolate one variable with negative coefficient and
    // involve nothing else beyond d
    const auto bound_from = [&](const LinearForm& combo, const std::string& var) {
        const std::size_t idx = var_index(var);
        for (std::size_t i = 0; i < combo.coeffs.size(); ++i)
            if (i != 0 && i != idx && combo.coeffs[i] != 0)
                throw std::logic_error("derive_bounds: stray variable survives elimination for " +
                                       var);
        if (combo.coeffs[idx] >= 0)
            throw std::logic_error("derive_bounds: elimination failed to bound " + var);
        const Rational denom(-combo.coeffs[idx]);
        return AffineBound{frac(combo.constant, 1) / denom,
                           frac(combo.coeffs[0], 1) / denom};
    };

    Stage1Bounds bounds;
    bounds.a3_max = bound_from(
        combine({{Rational(1), &form("E.A3")}, {frac(1, 2), &form("E.A2")}}, "a3 combo"), "a3");
    bounds.b3_max = bound_from(combine({{Rational(1), &form("E.B3")},
                                        {frac(2, 3), &form("E.B2")},
                                        {frac(1, 3), &form("E.B1")}},
                                       "b3 combo"),
                               "b3");
    bounds.c3_max = bound_from(combine({{Rational(1), &form("E.C3")},
                                        {frac(2, 3), &form("E.C2")},
                                        {frac(1, 3), &form("E.C1")}},
                                       "c3 combo"),
                               "c3");

    // d >= 5 a2 >= 0: the combination 3 E.A2 + E.A3 leaves d - 5 a2
    const LinearForm d_combo =
        combine({{Rational(3), &form("E.A2")}, {Rational(1), &form("E.A3")}}, "d combo");
    if (d_combo.coeffs[var_index("a3")] != 0 || d_combo.coeffs[var_index("d")] != 1 ||
        d_combo.coeffs[var_index("a2")] >= 0)
        throw std::logic_error("derive_bounds: d lower bound elimination failed");
    bounds.d_min = 0;

    // push the three bounds into the equality 3d - 1 = a3 + b3 + c3
    const Rational slope_gap = Rational(3) - bounds.a3_max.slope - bounds.b3_max.slope -
                               bounds.c3_max.slope;
    const Rational const_gap = Rational(1) + bounds.a3_max.constant + bounds.b3_max.constant +
                               bounds.c3_max.constant;
    if (slope_gap <= 0) throw std::logic_error("derive_bounds: no finite d range");
    bounds.d_max = static_cast<long long>(rational_floor(const_gap / slope_gap));
    return bounds;
}

std::vector<Stage1Tuple> enumerate_stage1(int m) {
    check_m(m);
    const Stage1Bounds bounds = derive_bounds(build_system(m));

    std::vector<Stage1Tuple> tuples;
    for (long long d = bounds.d_max; d >= bounds.d_min; --d) {
        const long long target = 3 * d - 1;  // a3 + b3 + c3
        const long long a3_hi =
            static_cast<long long>(rational_floor(bounds.a3_max.eval(d)));
        const long long b3_hi =
            static_cast<long long>(rational_floor(bounds.b3_max.eval(d)));
        const long long c3_hi =
            static_cast<long long>(rational_floor(bounds.c3_max.eval(d)));
        for (long long a3 = a3_hi; a3 >= 0; --a3) {
            // c3 = target - a3 - b3 <= c3_hi bounds b3 from below; no
            // nonnegativity is imposed on b3 or c3
            const long long b3_lo = target - a3 - c3_hi;
            for (long long b3 = b3_hi; b3 >= b3_lo; --b3)
                tuples.push_back({d, a3, b3, target - a3 - b3});
        }
    }
    return tuples;
}

bool quadratic_test(int m, const Stage1Tuple& t) {
    check_m(m);
    const Rational d(t.d), a3(t.a3), b3(t.b3), c3(t.c3);
    const Rational lhs = Rational(2 * m * m - 1) + 3 * d * d + 2 * d;
    const Rational rhs = frac(-5, 2) * a3 * a3 + frac(-7, 3) * b3 * b3 + frac(-7, 3) * c3 * c3 +
                         (Rational(4 * m) + 2 * d) * b3 + (6 * d - Rational(2 * m)) * c3;
    return lhs <= rhs;
}

ExclusionReport full_verdict(int m) {
    check_m(m);
    ExclusionReport report;
    report.m = m;
    const auto tuples = enumerate_stage1(m);
    report.stage1_count = static_cast<long long>(tuples.size());
    for (const auto& t : tuples) {
        if (quadratic_test(m, t)) {
            ++report.survivors;
            report.surviving_tuples.push_back(t);
        }
    }
    return report;
}

BigInt candidate_self_intersection(const IntegralLattice& picard, const CurveCandidate& cand) {
    const auto coords = cand.basis_coords();
    if (picard.rank() != coords.size())
        throw std::invalid_argument("candidate_self_intersection: rank mismatch");
    BigInt total = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        for (std::size_t j = 0; j < coords.size(); ++j) {
            if (coords[j] == 0) continue;
            total += picard.gram[i][j] * coords[i] * coords[j];
        }
    }
    return total;
}

}  // namespace fppq
