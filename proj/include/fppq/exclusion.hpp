#pragma once

#include "fppq/lattice.hpp"
#include "fppq/picard.hpp"
#include "fppq/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace fppq {

/// Integer coefficient vector of a hypothetical (-1)-curve
///   E = m M - d L + a2 A2 + a3 A3 + b1 B1 + b2 B2 + b3 B3 + c1 C1 + c2 C2 + c3 C3.
/// Candidates are allowed to violate the constraints; that is the point.
struct CurveCandidate {
    int m = 1;
    long long d = 0;
    long long a2 = 0, a3 = 0;
    long long b1 = 0, b2 = 0, b3 = 0;
    long long c1 = 0, c2 = 0, c3 = 0;

    /// coordinates over the basis (M, L, A2, A3, B1, B2, B3, C1, C2, C3)
    std::array<long long, 10> basis_coords() const;
    long long variable(std::size_t idx) const;  // order d, a2, a3, b1..b3, c1..c3
};

inline constexpr std::array<const char*, 9> kCandidateVariables = {
    "d", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3"};

/// Affine form c0 + sum coeff_i * variable_i over the nine candidate unknowns.
struct LinearForm {
    std::string label;
    BigInt constant = 0;
    std::array<BigInt, 9> coeffs{};

    BigInt eval(const CurveCandidate& cand) const;
};

/// The nine pairing inequalities E.A1 >= 0, ..., E.C3 >= 0 and the adjunction
/// equality E.K_Y = -1, stored as the form E.K_Y + 1 required to vanish.
struct ConstraintSystem {
    int m = 1;
    std::vector<LinearForm> inequalities;
    LinearForm equality;
};

/// Hand-coded forms for m in {1, 2}, re-derived entry by entry as bilinear
/// pairings in the ambient resolution space; a mismatch throws, since it can
/// only mean a transcription bug.
ConstraintSystem build_system(int m);

/// Upper bound of the shape c0 + slope * d.
struct AffineBound {
    Rational constant, slope;
    Rational eval(long long d) const { return constant + slope * Rational(d); }
};

struct Stage1Bounds {
    AffineBound a3_max, b3_max, c3_max;
    long long d_min = 0, d_max = 0;
};

/// Eliminates the chain variables from the inequality system:
///   a3 <= (2/5) d,  b3 <= (3/7)(2m + 2d),  c3 <= (3/7)(-m + 4d),
/// and 0 <= d <= 50 (m=1) resp. 65 (m=2). Each elimination is replayed as a
/// nonnegative combination of the system's forms and verified to cancel the
/// intended variables.
Stage1Bounds derive_bounds(const ConstraintSystem& sys);

/// Solution of the equality under the stage-1 bounds.
struct Stage1Tuple {
    long long d = 0, a3 = 0, b3 = 0, c3 = 0;
    friend bool operator==(const Stage1Tuple&, const Stage1Tuple&) = default;
};

/// All integer (d, a3, b3, c3) with a3 + b3 + c3 = 3d - 1, 0 <= a3 within its
/// bound and b3, c3 within theirs (b3 bounded below through the c3 bound, not
/// by zero), ordered by descending d, then descending a3, then descending b3.
std::vector<Stage1Tuple> enumerate_stage1(int m);

/// The quadratic obstruction: true iff
///   2m^2 - 1 + 3d^2 + 2d <= -(5/2)a3^2 - (7/3)b3^2 - (7/3)c3^2
///                            + (4m + 2d) b3 + (6d - 2m) c3
/// holds exactly. A genuine (-1)-curve candidate would have to satisfy it;
/// the classification requires that every stage-1 tuple fails.
bool quadratic_test(int m, const Stage1Tuple& t);

struct ExclusionReport {
    int m = 1;
    long long stage1_count = 0;
    long long survivors = 0;
    std::vector<Stage1Tuple> surviving_tuples;
};

/// Runs both stages for m in {1, 2}. Other values are rejected: E.nu*K_Z
/// equals 3m/7 and must lie strictly between 0 and 9/7.
ExclusionReport full_verdict(int m);

/// E.E computed through the 10x10 Gram matrix of the Picard basis.
BigInt candidate_self_intersection(const IntegralLattice& picard, const CurveCandidate& cand);

}  // namespace fppq
