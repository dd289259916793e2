#pragma once

#include "fppq/lattice.hpp"
#include "fppq/qlinalg.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace fppq {

/// Rational quadratic space spanned by the pullback class nu*K_Z, with
/// (nu*K_Z)^2 = 9/7, and the three exceptional chains A, B, C of the
/// resolution of the three 1/7(1,3) points (printed orientation
/// (-2)--(-2)--(-3)). Every divisor class handled by this module is a
/// rational vector here, so all intersection numbers come from one
/// bilinear form.
class ResolutionSpace {
public:
    ResolutionSpace();

    const std::vector<std::string>& labels() const { return labels_; }
    const QMat& gram() const { return gram_; }
    std::size_t dim() const { return labels_.size(); }

    std::size_t index(const std::string& label) const;
    QVec basis_vector(const std::string& label) const;

    Rational pair(const QVec& x, const QVec& y) const { return bilinear(gram_, x, y); }
    Rational norm(const QVec& x) const { return pair(x, x); }

    /// (1/7)(X1 + 2X2 + 3X3), the dual generator of one chain.
    QVec chain_dual(char chain) const;

    /// K_Y = nu*K_Z minus the discrepancy divisors of the three chains.
    const QVec& canonical_class() const { return canonical_class_; }

    /// The chain sublattice R spanned by A1..C3, with its labels.
    IntegralLattice chain_sublattice() const;

private:
    std::vector<std::string> labels_;
    QMat gram_;
    QVec canonical_class_;
};

ResolutionSpace make_resolution_space();

/// A candidate generator of an overlattice extension: its coordinates over
/// the ambient basis and the glue residues mod 7 that define it.
struct GlueVector {
    QVec coeffs;
    std::vector<long long> residue;
};

/// All (a,b) in (Z/7)^2 such that
///   L = (1/7)(A1+2A2+3A3) + (a/7)(B1+2B2+3B3) + (b/7)(C1+2C2+3C3)
/// has L.K_Y and L^2 both integral. Exactly {(2,4), (4,2)}.
std::set<std::pair<long long, long long>> search_glue_L(const ResolutionSpace& space);

/// The canonical choice (a,b) = (2,4), fixing the B <-> C interchange.
GlueVector canonical_glue_L(const ResolutionSpace& space);

/// The unique a mod 7 such that
///   M = (1/3)nu*K_Z + a { (3/7)(B1+2B2+3B3) + (2/7)(C1+2C2+3C3) }
/// has M.K_Y integral. Returns 4.
long long search_glue_M(const ResolutionSpace& space, const GlueVector& glue_l);

/// M for the residue above, reduced mod the chain lattice to the symmetric
/// representatives: M = (1/3)nu*K_Z - (2/7)(B1+2B2+3B3) + (1/7)(C1+2C2+3C3).
GlueVector canonical_glue_M(const ResolutionSpace& space, const GlueVector& glue_l);

/// Gram matrix of (M, L, A2, A3, B1, B2, B3, C1, C2, C3). Every pairing must
/// come out an integer; a fractional entry means the glue data is wrong and
/// raises an error.
IntegralLattice build_picard_basis(const ResolutionSpace& space);

}  // namespace fppq
