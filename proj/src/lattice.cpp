#include "fppq/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace fppq {

namespace {

IMat i_identity(std::size_t n) {
    IMat m(n, IVec(n, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

void check_square_symmetric(const IMat& gram) {
    for (const auto& row : gram)
        if (row.size() != gram.size())
            throw std::invalid_argument("lattice: Gram matrix must be square");
    for (std::size_t i = 0; i < gram.size(); ++i)
        for (std::size_t j = i + 1; j < gram.size(); ++j)
            if (gram[i][j] != gram[j][i])
                throw std::invalid_argument("lattice: Gram matrix must be symmetric");
}

}  // namespace

IntegralLattice::IntegralLattice(std::vector<std::string> labels_, IMat gram_)
    : labels(std::move(labels_)), gram(std::move(gram_)) {
    check_square_symmetric(gram);
    if (labels.size() != gram.size())
        throw std::invalid_argument("lattice: one label per basis vector");
}

BigInt determinant(IMat m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant: matrix must be square");
    if (n == 0) return 1;

    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

BigInt determinant(const IntegralLattice& lat) { return determinant(lat.gram); }

std::vector<BigInt> SmithNormalForm::diagonal() const {
    std::vector<BigInt> diag;
    const std::size_t n = std::min(d.size(), d.empty() ? 0 : d[0].size());
    for (std::size_t i = 0; i < n; ++i) diag.push_back(d[i][i]);
    return diag;
}

SmithNormalForm smith_normal_form(IMat a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (const auto& row : a)
        if (row.size() != cols)
            throw std::invalid_argument("smith_normal_form: ragged matrix");

    IMat u = i_identity(rows), v = i_identity(cols);

    const auto row_sub = [&](std::size_t i, std::size_t j, const BigInt& q) {
        for (std::size_t k = 0; k < cols; ++k) a[i][k] -= q * a[j][k];
        for (std::size_t k = 0; k < rows; ++k) u[i][k] -= q * u[j][k];
    };
    const auto col_sub = [&](std::size_t i, std::size_t j, const BigInt& q) {
        for (std::size_t k = 0; k < rows; ++k) a[k][i] -= q * a[k][j];
        for (std::size_t k = 0; k < cols; ++k) v[k][i] -= q * v[k][j];
    };
    const auto row_swap = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    };
    const auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < rows; ++k) std::swap(a[k][i], a[k][j]);
        for (std::size_t k = 0; k < cols; ++k) std::swap(v[k][i], v[k][j]);
    };
    const auto row_negate = [&](std::size_t i) {
        for (std::size_t k = 0; k < cols; ++k) a[i][k] = -a[i][k];
        for (std::size_t k = 0; k < rows; ++k) u[i][k] = -u[i][k];
    };

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block into the pivot
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 &&
                        (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) {
                t = steps;  // trailing block is zero
                break;
            }
            if (pi != t) row_swap(pi, t);
            if (pj != t) col_swap(pj, t);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                row_sub(i, t, a[i][t] / a[t][t]);
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                col_sub(j, t, a[t][j] / a[t][t]);
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;  // remainders are smaller; pick a new pivot

            // pivot must divide the rest of the block for d_i | d_{i+1}
            bool divisible = true;
            for (std::size_t i = t + 1; i < rows && divisible; ++i)
                for (std::size_t j = t + 1; j < cols && divisible; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        row_sub(t, i, BigInt(-1));  // pull row i up and retry
                        divisible = false;
                    }
            if (divisible) break;
        }
        if (t >= steps) break;
        if (a[t][t] < 0) row_negate(t);
    }

    SmithNormalForm result;
    result.u = std::move(u);
    result.d = std::move(a);
    result.v = std::move(v);
    return result;
}

std::pair<int, int> signature(QMat a) {
    for (const auto& row : a)
        if (row.size() != a.size())
            throw std::invalid_argument("signature: matrix must be square");
    const std::size_t n = a.size();
    int plus = 0, minus = 0;

    const auto congruence_add = [&](std::size_t i, std::size_t j, const Rational& f) {
        for (std::size_t k = 0; k < n; ++k) a[i][k] += f * a[j][k];
        for (std::size_t k = 0; k < n; ++k) a[k][i] += f * a[k][j];
    };
    const auto congruence_swap = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        for (std::size_t k = 0; k < n; ++k) std::swap(a[k][i], a[k][j]);
    };

    for (std::size_t t = 0; t < n; ++t) {
        if (a[t][t] == 0) {
            std::size_t j = t + 1;
            while (j < n && a[j][j] == 0) ++j;
            if (j < n) {
                congruence_swap(t, j);
            } else {
                // all trailing diagonal entries vanish; manufacture one
                std::size_t oi = n, oj = n;
                for (std::size_t i = t; i < n && oi == n; ++i)
                    for (std::size_t k = i + 1; k < n; ++k)
                        if (a[i][k] != 0) {
                            oi = i;
                            oj = k;
                            break;
                        }
                if (oi == n) throw std::domain_error("signature: degenerate form");
                congruence_add(oi, oj, Rational(1));  // diagonal picks up 2 a[oi][oj]
                if (oi != t) congruence_swap(t, oi);
            }
        }
        (a[t][t] > 0 ? plus : minus)++;
        for (std::size_t i = t + 1; i < n; ++i) {
            if (a[i][t] == 0) continue;
            congruence_add(i, t, -a[i][t] / a[t][t]);
        }
    }
    return {plus, minus};
}

std::pair<int, int> signature(const IntegralLattice& lat) {
    return signature(to_rational(lat.gram));
}

DiscriminantGroup::DiscriminantGroup(IntegralLattice lat)
    : lat_(std::move(lat)), gram_q_(to_rational(lat_.gram)), snf_(smith_normal_form(lat_.gram)) {
    const auto diag = snf_.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
        if (diag[i] == 0) throw std::domain_error("DiscriminantGroup: degenerate lattice");
        if (diag[i] > 1) {
            positions_.push_back(i);
            factors_.push_back(diag[i]);
        }
    }
    // generator of the Z/d_i summand: (1/d_i) * column i of V, in basis coords
    for (std::size_t idx = 0; idx < positions_.size(); ++idx) {
        const std::size_t i = positions_[idx];
        QVec gen(lat_.rank());
        for (std::size_t r = 0; r < lat_.rank(); ++r)
            gen[r] = frac(snf_.v[r][i], factors_[idx]);
        generators_.push_back(std::move(gen));
    }
    for (const auto& g : generators_) q_values_.push_back(q_value(g));
    pairings_.assign(generators_.size(), QVec(generators_.size(), Rational(0)));
    for (std::size_t i = 0; i < generators_.size(); ++i)
        for (std::size_t j = 0; j < generators_.size(); ++j)
            pairings_[i][j] = pairing(generators_[i], generators_[j]);
}

BigInt DiscriminantGroup::order() const {
    BigInt n = 1;
    for (const auto& f : factors_) n *= f;
    return n;
}

bool DiscriminantGroup::contains(const QVec& v) const {
    if (v.size() != lat_.rank()) return false;
    for (const Rational& x : mat_vec(gram_q_, v))
        if (!is_integer(x)) return false;
    return true;
}

std::vector<BigInt> DiscriminantGroup::class_of(const QVec& v) const {
    if (!contains(v))
        throw std::invalid_argument("DiscriminantGroup: vector is not in the dual lattice");
    const QVec w = mat_vec(gram_q_, v);
    std::vector<BigInt> residues;
    for (std::size_t idx = 0; idx < positions_.size(); ++idx) {
        const std::size_t i = positions_[idx];
        Rational y = 0;
        for (std::size_t k = 0; k < lat_.rank(); ++k) y += Rational(snf_.u[i][k]) * w[k];
        if (!is_integer(y)) throw std::logic_error("DiscriminantGroup: non-integral class");
        BigInt r = numerator(y) % factors_[idx];
        if (r < 0) r += factors_[idx];
        residues.push_back(r);
    }
    return residues;
}

Rational DiscriminantGroup::q_value(const QVec& v) const {
    return mod_interval(bilinear(gram_q_, v, v), 2);
}

Rational DiscriminantGroup::pairing(const QVec& x, const QVec& y) const {
    return mod_interval(bilinear(gram_q_, x, y), 1);
}

DiscriminantGroup discriminant_group(const IntegralLattice& lat) {
    return DiscriminantGroup(lat);
}

IntegralLattice orthogonal_sum(const std::vector<IntegralLattice>& parts) {
    std::vector<std::string> labels;
    std::size_t total = 0;
    for (const auto& p : parts) total += p.rank();
    IMat gram(total, IVec(total, BigInt(0)));
    std::size_t offset = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.rank(); ++i) {
            labels.push_back(p.labels[i]);
            for (std::size_t j = 0; j < p.rank(); ++j) gram[offset + i][offset + j] = p.gram[i][j];
        }
        offset += p.rank();
    }
    return IntegralLattice(std::move(labels), std::move(gram));
}

}  // namespace fppq
