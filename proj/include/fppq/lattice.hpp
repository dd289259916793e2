#pragma once

#include "fppq/qlinalg.hpp"
#include "fppq/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fppq {

/// Integral lattice with a labeled basis and symmetric Gram matrix.
struct IntegralLattice {
    std::vector<std::string> labels;
    IMat gram;

    IntegralLattice() = default;
    IntegralLattice(std::vector<std::string> labels, IMat gram);

    std::size_t rank() const { return gram.size(); }
};

/// Exact determinant by fraction-free (Bareiss) elimination. Empty matrix
/// has determinant 1.
BigInt determinant(IMat m);
BigInt determinant(const IntegralLattice& lat);

/// U * m * V = D with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1}.
struct SmithNormalForm {
    IMat u, d, v;
    std::vector<BigInt> diagonal() const;
};

SmithNormalForm smith_normal_form(IMat m);

/// Inertia (n_plus, n_minus) of a nondegenerate symmetric rational matrix,
/// computed by exact congruence diagonalization. Throws on a degenerate form.
std::pair<int, int> signature(QMat gram);
std::pair<int, int> signature(const IntegralLattice& lat);

/// disc(N) = Hom(N, Z)/N of a nondegenerate lattice: invariant factors,
/// dual-vector generators, and the finite quadratic form they carry
/// (q modulo 2Z, pairing modulo Z).
class DiscriminantGroup {
public:
    explicit DiscriminantGroup(IntegralLattice lat);

    const std::vector<BigInt>& invariant_factors() const { return factors_; }
    const std::vector<QVec>& generators() const { return generators_; }
    const std::vector<Rational>& generator_q_values() const { return q_values_; }
    const QMat& generator_pairings() const { return pairings_; }

    BigInt order() const;
    std::size_t length() const { return factors_.size(); }

    /// True when v pairs integrally with the whole lattice, i.e. v is in the
    /// dual lattice and so represents a class of the group.
    bool contains(const QVec& v) const;

    /// Class of a dual vector as residues against the invariant factors.
    std::vector<BigInt> class_of(const QVec& v) const;

    /// q(v) = v.v reduced into [0, 2); pairing reduced into [0, 1).
    Rational q_value(const QVec& v) const;
    Rational pairing(const QVec& a, const QVec& b) const;

    const IntegralLattice& lattice() const { return lat_; }

private:
    IntegralLattice lat_;
    QMat gram_q_;
    SmithNormalForm snf_;
    std::vector<std::size_t> positions_;  // indices of diagonal entries > 1
    std::vector<BigInt> factors_;
    std::vector<QVec> generators_;
    std::vector<Rational> q_values_;
    QMat pairings_;
};

DiscriminantGroup discriminant_group(const IntegralLattice& lat);

/// Orthogonal direct sum, concatenating labels.
IntegralLattice orthogonal_sum(const std::vector<IntegralLattice>& parts);

}  // namespace fppq
