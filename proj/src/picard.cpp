#include "fppq/picard.hpp"

#include "fppq/quotsing.hpp"

#include <algorithm>
#include <stdexcept>

namespace fppq {

namespace {

constexpr long long kSeven = 7;

// symmetric representative of x mod 7 in [-3, 3]
long long symmetric_mod7(long long x) {
    long long r = ((x % kSeven) + kSeven) % kSeven;
    return r > 3 ? r - kSeven : r;
}

}  // namespace

ResolutionSpace::ResolutionSpace() {
    labels_ = {"nuKZ", "A1", "A2", "A3", "B1", "B2", "B3", "C1", "C2", "C3"};
    const HJChain chain({2, 2, 3});

    gram_.assign(10, QVec(10, Rational(0)));
    gram_[0][0] = frac(9, 7);
    for (int block = 0; block < 3; ++block) {
        const std::size_t off = 1 + 3 * static_cast<std::size_t>(block);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                gram_[off + i][off + j] = Rational(chain.gram[i][j]);
    }

    // K_Y = nu*K_Z - sum of the discrepancy divisors, one per chain
    const DiscrepancyData disc = discrepancies(chain);
    canonical_class_.assign(10, Rational(0));
    canonical_class_[0] = 1;
    for (int block = 0; block < 3; ++block) {
        const std::size_t off = 1 + 3 * static_cast<std::size_t>(block);
        for (std::size_t i = 0; i < 3; ++i)
            canonical_class_[off + i] = -disc.coefficients[i];
    }
}

std::size_t ResolutionSpace::index(const std::string& label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        throw std::invalid_argument("ResolutionSpace: unknown label " + label);
    return static_cast<std::size_t>(it - labels_.begin());
}

QVec ResolutionSpace::basis_vector(const std::string& label) const {
    QVec v(dim(), Rational(0));
    v[index(label)] = 1;
    return v;
}

QVec ResolutionSpace::chain_dual(char chain) const {
    if (chain != 'A' && chain != 'B' && chain != 'C')
        throw std::invalid_argument("ResolutionSpace: chain must be A, B or C");
    QVec v(dim(), Rational(0));
    const std::size_t off = index(std::string(1, chain) + "1");
    for (std::size_t i = 0; i < 3; ++i) v[off + i] = frac(static_cast<long long>(i) + 1, 7);
    return v;
}

IntegralLattice ResolutionSpace::chain_sublattice() const {
    std::vector<std::string> labels(labels_.begin() + 1, labels_.end());
    IMat gram(9, IVec(9, BigInt(0)));
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) {
            const Rational& entry = gram_[i + 1][j + 1];
            gram[i][j] = numerator(entry);  // chain pairings are integers
        }
    return IntegralLattice(std::move(labels), std::move(gram));
}

ResolutionSpace make_resolution_space() { return ResolutionSpace(); }

std::set<std::pair<long long, long long>> search_glue_L(const ResolutionSpace& space) {
    const QVec ua = space.chain_dual('A');
    const QVec ub = space.chain_dual('B');
    const QVec uc = space.chain_dual('C');
    const QVec& ky = space.canonical_class();

    std::set<std::pair<long long, long long>> found;
    for (long long a = 0; a < kSeven; ++a) {
        for (long long b = 0; b < kSeven; ++b) {
            QVec l(space.dim(), Rational(0));
            for (std::size_t k = 0; k < space.dim(); ++k)
                l[k] = ua[k] + Rational(a) * ub[k] + Rational(b) * uc[k];
            if (is_integer(space.pair(l, ky)) && is_integer(space.norm(l)))
                found.insert({a, b});
        }
    }
    return found;
}

GlueVector canonical_glue_L(const ResolutionSpace& space) {
    const auto residues = search_glue_L(space);
    if (residues.find({2, 4}) == residues.end())
        throw std::logic_error("canonical_glue_L: residue (2,4) missing from the scan");
    GlueVector glue;
    glue.residue = {2, 4};
    glue.coeffs.assign(space.dim(), Rational(0));
    const QVec ua = space.chain_dual('A');
    const QVec ub = space.chain_dual('B');
    const QVec uc = space.chain_dual('C');
    for (std::size_t k = 0; k < space.dim(); ++k)
        glue.coeffs[k] = ua[k] + Rational(2) * ub[k] + Rational(4) * uc[k];
    return glue;
}

long long search_glue_M(const ResolutionSpace& space, const GlueVector& glue_l) {
    if (glue_l.residue != std::vector<long long>{2, 4})
        throw std::invalid_argument("search_glue_M: expects the canonical L with (a,b) = (2,4)");

    const QVec ub = space.chain_dual('B');
    const QVec uc = space.chain_dual('C');
    const QVec nu = space.basis_vector("nuKZ");
    const QVec& ky = space.canonical_class();

    long long found = -1;
    for (long long a = 0; a < kSeven; ++a) {
        QVec m(space.dim(), Rational(0));
        for (std::size_t k = 0; k < space.dim(); ++k)
            m[k] = frac(1, 3) * nu[k] + Rational(a) * (Rational(3) * ub[k] + Rational(2) * uc[k]);
        if (!is_integer(space.pair(m, ky))) continue;
        if (found != -1)
            throw std::logic_error("search_glue_M: residue is not unique (setup bug)");
        found = a;
    }
    if (found == -1) throw std::logic_error("search_glue_M: no valid residue (setup bug)");
    return found;
}

GlueVector canonical_glue_M(const ResolutionSpace& space, const GlueVector& glue_l) {
    const long long a = search_glue_M(space, glue_l);

    // reduce the chain-dual multipliers 3a and 2a mod the chain lattice
    const long long b_mult = symmetric_mod7(3 * a);
    const long long c_mult = symmetric_mod7(2 * a);

    GlueVector glue;
    glue.residue = {a};
    glue.coeffs.assign(space.dim(), Rational(0));
    const QVec ub = space.chain_dual('B');
    const QVec uc = space.chain_dual('C');
    const QVec nu = space.basis_vector("nuKZ");
    for (std::size_t k = 0; k < space.dim(); ++k)
        glue.coeffs[k] =
            frac(1, 3) * nu[k] + Rational(b_mult) * ub[k] + Rational(c_mult) * uc[k];
    return glue;
}

IntegralLattice build_picard_basis(const ResolutionSpace& space) {
    const GlueVector l = canonical_glue_L(space);
    const GlueVector m = canonical_glue_M(space, l);

    const std::vector<std::string> labels = {"M",  "L",  "A2", "A3", "B1",
                                             "B2", "B3", "C1", "C2", "C3"};
    std::vector<QVec> vectors;
    vectors.push_back(m.coeffs);
    vectors.push_back(l.coeffs);
    for (std::size_t i = 2; i < labels.size(); ++i)
        vectors.push_back(space.basis_vector(labels[i]));

    IMat gram(labels.size(), IVec(labels.size(), BigInt(0)));
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        for (std::size_t j = 0; j < vectors.size(); ++j) {
            const Rational entry = space.pair(vectors[i], vectors[j]);
            if (!is_integer(entry))
                throw std::runtime_error("build_picard_basis: non-integral pairing " + labels[i] +
                                         "." + labels[j] + " = " + to_string(entry) +
                                         " (wrong glue)");
            gram[i][j] = numerator(entry);
        }
    }
    return IntegralLattice(labels, std::move(gram));
}

}  // namespace fppq
