#include "fppq/quotsing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fppq {

SingularityType::SingularityType(long long m_, long long a_) : m(m_), a(a_) {
    if (m < 2) throw std::invalid_argument("SingularityType: order m must be >= 2");
    if (a < 1 || a >= m)
        throw std::invalid_argument("SingularityType: residue a must lie in 1..m-1");
    if (std::gcd(m, a) != 1)
        throw std::invalid_argument("SingularityType: gcd(m, a) must be 1 for " + str());
}

SingularityType SingularityType::normalized() const {
    const long long inv = mod_inverse(a, m);
    return SingularityType(m, std::min(a, inv));
}

std::string SingularityType::str() const {
    return "1/" + std::to_string(m) + "(1," + std::to_string(a) + ")";
}

HJChain::HJChain(std::vector<long long> b) : self_intersections(std::move(b)) {
    for (long long bi : self_intersections)
        if (bi < 2) throw std::invalid_argument("HJChain: every b_i must be >= 2");
    const std::size_t k = self_intersections.size();
    gram.assign(k, IVec(k, BigInt(0)));
    for (std::size_t i = 0; i < k; ++i) {
        gram[i][i] = -self_intersections[i];
        if (i + 1 < k) {
            gram[i][i + 1] = 1;
            gram[i + 1][i] = 1;
        }
    }
}

HJChain HJChain::reversed() const {
    std::vector<long long> b(self_intersections.rbegin(), self_intersections.rend());
    return HJChain(std::move(b));
}

HJChain hj_expansion(const SingularityType& t) {
    std::vector<long long> b;
    long long m = t.m, a = t.a;
    while (a > 0) {
        const long long q = (m + a - 1) / a;  // ceil(m/a)
        b.push_back(q);
        const long long next = q * a - m;     // m/a = q - 1/(a/next)
        m = a;
        a = next;
    }
    return HJChain(std::move(b));
}

DiscrepancyData discrepancies(const HJChain& chain) {
    const std::size_t k = chain.length();
    QVec rhs(k);
    for (std::size_t i = 0; i < k; ++i) rhs[i] = Rational(2 - chain.self_intersections[i]);
    auto sol = solve_linear(to_rational(chain.gram), rhs);
    if (!sol)
        throw std::logic_error("discrepancies: singular adjunction system (bug in chain data)");

    DiscrepancyData data;
    data.coefficients = std::move(*sol);
    for (const Rational& d : data.coefficients)
        if (d < 0 || d >= 1)
            throw std::logic_error("discrepancies: coefficient outside [0,1)");
    data.d_squared = bilinear(to_rational(chain.gram), data.coefficients, data.coefficients);
    return data;
}

DiscrepancyData discrepancies(const SingularityType& t) { return discrepancies(hj_expansion(t)); }

Rational resolved_k2(const Rational& kz2, std::vector<SingularityType> sings) {
    for (auto& t : sings) t = t.normalized();
    std::sort(sings.begin(), sings.end());
    Rational k2 = kz2;
    for (const auto& t : sings) k2 += discrepancies(t).d_squared;
    return k2;
}

}  // namespace fppq
