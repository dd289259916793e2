#pragma once

#include "fppq/quotsing.hpp"
#include "fppq/rational.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace fppq {

/// How many isolated fixed points of each (normalized) local type an
/// automorphism has on the quotient.
struct SingularityProfile {
    std::map<SingularityType, long long> counts;

    long long total() const;
    long long count(const SingularityType& t) const;
    std::string str() const;

    friend bool operator==(const SingularityProfile&, const SingularityProfile&) = default;
    friend auto operator<=>(const SingularityProfile& lhs, const SingularityProfile& rhs) {
        return lhs.counts <=> rhs.counts;
    }
};

/// One-dimensional component of a fixed locus.
struct CurveComponent {
    long long genus = 0;
    long long self_intersection = 0;
};

struct QuotientInvariants {
    long long group_order = 0;
    Rational kz_squared;
    int euler_number = 3;  // e of the quotient surface
    int chi = 1;           // holomorphic Euler characteristic
    std::vector<SingularityType> singularities;
};

/// A rational-homology projective plane with quotient singularities carries at
/// most this many singular points (orbifold Bogomolov-Miyaoka-Yau).
inline constexpr long long kMaxSingularPoints = 5;

/// Full fixed-point side of the holomorphic Lefschetz relation:
///   sum_j [ (1 - g(C_j))/2 + (p+1) C_j^2 / 12 ] + sum_i a_i r_i.
/// The automorphism side equals 1, so callers compare against 1.
Rational lefschetz_lhs(int p, const std::vector<CurveComponent>& curves,
                       const SingularityProfile& profile);

/// All normalized profiles with the prescribed number of isolated fixed
/// points satisfying the Lefschetz relation with no curve components.
std::set<SingularityProfile> enumerate_profiles(int p, long long num_fixed_points);

/// Drops every profile containing the excluded type (normalized first).
std::set<SingularityProfile> apply_type_exclusion(const std::set<SingularityProfile>& profiles,
                                                  const SingularityType& excluded);

/// Isolated fixed point count r from e(X) = p e(Z) - (p-1)(r + e(C)).
/// Throws when r fails to be an integer.
long long hurwitz_fixed_points(int p, long long e_x, long long e_z, long long e_c);

/// Euler number of a smooth curve numerically equivalent to m times the
/// ample generator: e(C) = -(m^2 + 3m), always <= -4.
long long curve_euler_bound(long long m);

/// Classified invariants of the quotient by a group of the given order
/// (3, 7, 9 or 21).
QuotientInvariants quotient_invariants(long long group_order);

/// Noether bookkeeping for a minimal resolution with p_g = q = 0:
/// e = 12 chi - K^2, and b_2 = e - 2.
Rational noether_euler(long long chi, const Rational& k2);
long long second_betti(long long euler_number);

}  // namespace fppq
