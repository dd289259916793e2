#pragma once

#include "fppq/qlinalg.hpp"
#include "fppq/rational.hpp"

#include <vector>

namespace fppq {

/// Element of the cyclotomic field Q(zeta_p), p an odd prime, stored in the
/// power basis 1, zeta, ..., zeta^{p-2}. The relation
/// zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}) is applied eagerly, so an
/// element is rational exactly when every coordinate above the constant one
/// vanishes.
class Cyclotomic {
public:
    explicit Cyclotomic(int prime);                  // zero
    Cyclotomic(int prime, const Rational& value);    // rational constant

    static Cyclotomic zeta_power(int prime, long long exponent);
    static Cyclotomic from_coords(int prime, QVec coords);

    int prime() const { return prime_; }
    const QVec& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // throws unless is_rational()

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);

    friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
    friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
    friend Cyclotomic operator*(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs *= rhs; }
    friend bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs) {
        return lhs.prime_ == rhs.prime_ && lhs.coords_ == rhs.coords_;
    }

    Cyclotomic inverse() const;  // throws on zero

    /// Field automorphism zeta -> zeta^k, gcd(k, p) = 1.
    Cyclotomic galois(long long k) const;

    std::string str() const;

private:
    int prime_;
    QVec coords_;  // length p-1

    // collapse coefficients indexed by exponent 0..p-1 into the power basis
    static QVec reduce_exponents(int prime, const QVec& by_exponent);
    void check_same_field(const Cyclotomic& rhs) const;
};

}  // namespace fppq
