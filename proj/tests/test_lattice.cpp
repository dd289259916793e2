#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fppq/lattice.hpp"
#include "fppq/quotsing.hpp"

#include <random>

using namespace fppq;

namespace {

IMat imat_mul(const IMat& a, const IMat& b) {
    const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    IMat c(n, IVec(m, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    return c;
}

IntegralLattice chain_lattice(const std::string& prefix, const std::vector<long long>& b) {
    const HJChain chain(b);
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= b.size(); ++i) labels.push_back(prefix + std::to_string(i));
    return IntegralLattice(labels, chain.gram);
}

void check_snf_contract(const IMat& m) {
    const auto snf = smith_normal_form(m);
    CHECK(imat_mul(imat_mul(snf.u, m), snf.v) == snf.d);
    CHECK(abs(determinant(snf.u)) == 1);
    CHECK(abs(determinant(snf.v)) == 1);
    const auto diag = snf.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
        if (diag[i] == 0) CHECK(diag[i + 1] == 0);
    }
    // off-diagonal zero
    for (std::size_t i = 0; i < snf.d.size(); ++i)
        for (std::size_t j = 0; j < snf.d[i].size(); ++j)
            if (i != j) CHECK(snf.d[i][j] == 0);
}

}  // namespace

TEST_CASE("determinants") {
    CHECK(determinant(IMat{}) == 1);
    CHECK(determinant(chain_lattice("E", {2, 2, 3})) == -7);
    CHECK(determinant(chain_lattice("E", {3, 2, 2})) == -7);
    CHECK(determinant(IMat{{2, 0}, {0, 4}}) == 8);
    CHECK(determinant(IMat{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(IMat{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("determinant agrees with the tridiagonal recurrence on chains") {
    for (long long m = 2; m <= 25; ++m) {
        for (long long a = 1; a < m; ++a) {
            if (std::gcd(m, a) != 1) continue;
            const HJChain chain = hj_expansion(SingularityType(m, a));
            BigInt prev = 0, cur = 1;
            for (long long bi : chain.self_intersections) {
                const BigInt next = BigInt(-bi) * cur - prev;
                prev = cur;
                cur = next;
            }
            CHECK(determinant(chain.gram) == cur);
            CHECK(abs(determinant(chain.gram)) == m);
        }
    }
}

TEST_CASE("smith normal form on fixed inputs") {
    const IMat id = {{1, 0}, {0, 1}};
    CHECK(smith_normal_form(id).d == id);

    CHECK(smith_normal_form(IMat{{2, 0}, {0, 4}}).diagonal() == std::vector<BigInt>{2, 4});
    CHECK(smith_normal_form(IMat{{4, 0}, {0, 2}}).diagonal() == std::vector<BigInt>{2, 4});
    CHECK(smith_normal_form(IMat{{2, 1}, {1, 2}}).diagonal() == std::vector<BigInt>{1, 3});

    const auto r = orthogonal_sum({chain_lattice("A", {2, 2, 3}), chain_lattice("B", {2, 2, 3}),
                                   chain_lattice("C", {2, 2, 3})});
    const auto diag = smith_normal_form(r.gram).diagonal();
    CHECK(diag == std::vector<BigInt>{1, 1, 1, 1, 1, 1, 7, 7, 7});
    check_snf_contract(r.gram);
}

TEST_CASE("smith normal form contract on random matrices") {
    std::mt19937_64 rng(977);
    std::uniform_int_distribution<int> entry(-6, 6);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int trial = 0; trial < 60; ++trial) {
        IMat m(dim(rng), IVec(dim(rng), BigInt(0)));
        for (auto& row : m)
            for (auto& x : row) x = entry(rng);
        check_snf_contract(m);
    }
}

TEST_CASE("signature") {
    CHECK(signature(QMat{{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}}) ==
          std::pair<int, int>{1, 1});
    CHECK(signature(chain_lattice("E", {2, 2, 3})) == std::pair<int, int>{0, 3});
    // hyperbolic plane has zero diagonal
    CHECK(signature(QMat{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}) ==
          std::pair<int, int>{1, 1});
    CHECK_THROWS_AS(signature(QMat{{Rational(0)}}), std::domain_error);
}

TEST_CASE("discriminant group of a single chain") {
    const auto lat = chain_lattice("E", {2, 2, 3});
    const DiscriminantGroup disc(lat);
    CHECK(disc.invariant_factors() == std::vector<BigInt>{7});
    CHECK(disc.order() == 7);
    CHECK(disc.length() == 1);

    // the printed dual generator (1/7)(E1 + 2E2 + 3E3)
    const QVec gen = {frac(1, 7), frac(2, 7), frac(3, 7)};
    CHECK(disc.contains(gen));
    const auto cls = disc.class_of(gen);
    REQUIRE(cls.size() == 1);
    CHECK(cls[0] != 0);  // generates Z/7 since 7 is prime
    CHECK(disc.q_value(gen) == mod_interval(frac(-3, 7), 2));
    CHECK(disc.q_value(gen) == frac(11, 7));

    // not in the dual lattice: fails integral pairing
    CHECK(!disc.contains(QVec{frac(1, 7), Rational(0), Rational(0)}));
    CHECK_THROWS_AS(disc.class_of(QVec{frac(1, 7), Rational(0), Rational(0)}),
                    std::invalid_argument);
}

TEST_CASE("discriminant group of the full chain sublattice") {
    const auto r = orthogonal_sum({chain_lattice("A", {2, 2, 3}), chain_lattice("B", {2, 2, 3}),
                                   chain_lattice("C", {2, 2, 3})});
    const DiscriminantGroup disc(r);
    CHECK(disc.invariant_factors() == std::vector<BigInt>{7, 7, 7});
    CHECK(disc.length() == 3);
    CHECK(disc.order() == abs(determinant(r)));

    // generators really generate: their classes span (Z/7)^3
    const auto& gens = disc.generators();
    REQUIRE(gens.size() == 3);
    for (const auto& g : gens) CHECK(disc.contains(g));

    std::set<std::vector<BigInt>> classes;
    for (int x = 0; x < 7; ++x)
        for (int y = 0; y < 7; ++y)
            for (int z = 0; z < 7; ++z) {
                QVec v(r.rank(), Rational(0));
                for (std::size_t k = 0; k < r.rank(); ++k)
                    v[k] = Rational(x) * gens[0][k] + Rational(y) * gens[1][k] +
                           Rational(z) * gens[2][k];
                classes.insert(disc.class_of(v));
            }
    CHECK(classes.size() == 343);
}

TEST_CASE("unimodular lattices have trivial discriminant group") {
    const IntegralLattice u({"e", "f"}, IMat{{0, 1}, {1, 0}});
    const DiscriminantGroup disc(u);
    CHECK(disc.length() == 0);
    CHECK(disc.order() == 1);
}

TEST_CASE("group order equals the determinant") {
    for (const auto& gram :
         {IMat{{2, 1}, {1, 2}}, IMat{{4}}, IMat{{-2, 1}, {1, -2}}, IMat{{6, 2}, {2, 10}}}) {
        std::vector<std::string> labels(gram.size());
        for (std::size_t i = 0; i < gram.size(); ++i) labels[i] = "v" + std::to_string(i);
        const IntegralLattice lat(labels, gram);
        CHECK(DiscriminantGroup(lat).order() == abs(determinant(lat)));
    }
}

TEST_CASE("degenerate lattices are rejected") {
    const IntegralLattice bad({"x", "y"}, IMat{{1, 2}, {2, 4}});
    CHECK_THROWS_AS(discriminant_group(bad), std::domain_error);
    CHECK_THROWS_AS(IntegralLattice({"x"}, IMat{{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(IntegralLattice({"x", "y"}, IMat{{0, 1}, {2, 0}}), std::invalid_argument);
}
