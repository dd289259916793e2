#pragma once

#include "fppq/qlinalg.hpp"
#include "fppq/rational.hpp"

#include <string>
#include <vector>

namespace fppq {

/// Cyclic quotient singularity 1/m(1,a): the image of the origin under the
/// diagonal action diag(zeta, zeta^a) of Z/m, gcd(m, a) = 1.
struct SingularityType {
    long long m = 0;
    long long a = 0;

    SingularityType(long long m, long long a);

    /// 1/m(1,a) and 1/m(1,a') are the same singularity when a*a' = 1 mod m;
    /// the canonical representative takes the smaller of the two residues.
    SingularityType normalized() const;

    std::string str() const;

    friend bool operator==(const SingularityType&, const SingularityType&) = default;
    friend auto operator<=>(const SingularityType& lhs, const SingularityType& rhs) {
        if (auto c = lhs.m <=> rhs.m; c != 0) return c;
        return lhs.a <=> rhs.a;
    }
};

/// Exceptional chain E_1 -- E_2 -- ... -- E_k of the minimal resolution,
/// E_i^2 = -b_i with every b_i >= 2, consecutive curves meeting once.
struct HJChain {
    std::vector<long long> self_intersections;  // the b_i
    IMat gram;

    explicit HJChain(std::vector<long long> b);
    std::size_t length() const { return self_intersections.size(); }
    HJChain reversed() const;
};

/// b_i from the ceiling continued fraction m/a = b_1 - 1/(b_2 - 1/(...)).
HJChain hj_expansion(const SingularityType& t);

/// Coefficients d_i of D = sum d_i E_i in K_Y = nu*K_Z - D, plus D.D.
struct DiscrepancyData {
    std::vector<Rational> coefficients;  // each in [0, 1)
    Rational d_squared;
};

/// Solves the adjunction system (-D).E_i = -2 + b_i exactly.
DiscrepancyData discrepancies(const HJChain& chain);
DiscrepancyData discrepancies(const SingularityType& t);

/// K_Y^2 = K_Z^2 + sum of D.D over the singular points: pullback classes are
/// orthogonal to every exceptional curve, so the corrections just add up.
Rational resolved_k2(const Rational& kz2, std::vector<SingularityType> sings);

}  // namespace fppq
