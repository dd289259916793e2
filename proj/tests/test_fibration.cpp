#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fppq/fibration.hpp"
#include "fppq/rational.hpp"

#include <set>

using namespace fppq;

namespace {

std::set<std::vector<long long>> tuples_of(const std::vector<FibreSolution>& sols) {
    std::set<std::vector<long long>> out;
    for (const auto& s : sols) out.insert(s.multiplicities);
    return out;
}

// brute-force oracle: scan r in {2,3,4} and all divisor tuples of n, testing
// the fibre equation with exact rationals
std::set<std::vector<long long>> oracle_scan(long long n) {
    std::vector<long long> divs;
    for (long long d = 2; d <= n; ++d)
        if (n % d == 0) divs.push_back(d);

    std::set<std::vector<long long>> found;
    for (int r = 2; r <= 4; ++r) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
        if (divs.empty()) break;
        for (;;) {
            std::vector<long long> ms;
            for (std::size_t i : idx) ms.push_back(divs[i]);
            if (std::is_sorted(ms.begin(), ms.end())) {
                Rational gap = Rational(r - 1) - frac(1, n);
                for (long long m : ms) gap -= frac(1, m);
                if (gap == 0) found.insert(ms);
            }
            std::size_t pos = idx.size();
            while (pos > 0 && idx[pos - 1] + 1 == divs.size()) --pos;
            if (pos == 0) break;
            const std::size_t next = idx[pos - 1] + 1;
            for (std::size_t i = pos - 1; i < idx.size(); ++i) idx[i] = next;
        }
    }
    return found;
}

}  // namespace

TEST_CASE("multiple-fibre solutions for the printed cases") {
    CHECK(tuples_of(solve_multiplicities(2)) ==
          std::set<std::vector<long long>>{{2, 2, 2}});
    CHECK(tuples_of(solve_multiplicities(3)) == std::set<std::vector<long long>>{{3, 3}});
    CHECK(tuples_of(solve_multiplicities(4)) == std::set<std::vector<long long>>{{2, 4}});
    CHECK(tuples_of(solve_multiplicities(6)) == std::set<std::vector<long long>>{{2, 3}});

    CHECK(solve_multiplicities(1).empty());
    CHECK(solve_multiplicities(5).empty());
    for (long long n = 7; n <= 12; ++n) CHECK(solve_multiplicities(n).empty());
}

TEST_CASE("solver agrees with the divisor-scan oracle up to n = 100") {
    for (long long n = 1; n <= 100; ++n) {
        // the oracle even allows r = 4; divisibility and the equation kill it
        CHECK(tuples_of(solve_multiplicities(n)) == oracle_scan(n));
    }
}

TEST_CASE("every returned solution passes its own validation") {
    for (long long n = 1; n <= 40; ++n) {
        for (const auto& sol : solve_multiplicities(n)) {
            CHECK(sol.n == n);
            for (long long m : sol.multiplicities) CHECK(n % m == 0);
            Rational gap = Rational(static_cast<long long>(sol.multiplicities.size()) - 1) -
                           frac(1, n);
            for (long long m : sol.multiplicities) gap -= frac(1, m);
            CHECK(gap == 0);
        }
    }
    CHECK_THROWS_AS(FibreSolution(6, {3, 2}), std::invalid_argument);   // unsorted
    CHECK_THROWS_AS(FibreSolution(6, {2, 5}), std::invalid_argument);   // 5 does not divide 6
    CHECK_THROWS_AS(FibreSolution(6, {2, 6}), std::invalid_argument);   // wrong sum
    CHECK_THROWS_AS(FibreSolution(6, {2}), std::invalid_argument);      // r < 2
}

TEST_CASE("geometric filter removes exactly the triple-2 solution") {
    auto sols = solve_multiplicities(2);
    CHECK(geometric_filter(sols).empty());

    auto keep = solve_multiplicities(6);
    CHECK(tuples_of(geometric_filter(keep)) == std::set<std::vector<long long>>{{2, 3}});

    CHECK(admissible_multiplicities() ==
          std::vector<std::vector<long long>>{{2, 3}, {2, 4}, {3, 3}});
}

TEST_CASE("kodaira table") {
    CHECK(kodaira_euler(0) == 0);
    CHECK(kodaira_euler(1) == 1);
    CHECK(kodaira_euler(9) == 9);
    CHECK(kodaira_components(0) == 1);
    CHECK(kodaira_components(1) == 1);
    CHECK(kodaira_components(3) == 3);

    CHECK(parse_kodaira_label("I3") == 3);
    CHECK(parse_kodaira_label("I12") == 12);
    CHECK_THROWS_AS(parse_kodaira_label("II"), std::invalid_argument);
    CHECK_THROWS_AS(parse_kodaira_label("IV"), std::invalid_argument);
    CHECK_THROWS_AS(parse_kodaira_label("I0*"), std::invalid_argument);
    CHECK_THROWS_AS(parse_kodaira_label("III"), std::invalid_argument);
}

TEST_CASE("configuration validation") {
    // four I_3 fibres: the 7:3 quotient resolution
    FibreConfiguration four_i3;
    four_i3.fibres = {{3, 4}};
    four_i3.multiplicities = {2, 3};
    CHECK(four_i3.euler_total() == 12);
    CHECK(four_i3.picard_contribution() == 10);
    CHECK(validate_configuration(four_i3).all_pass());

    // three I_1 and one I_9: the order-7 quotient inside the 7:3 group
    FibreConfiguration i9;
    i9.fibres = {{1, 3}, {9, 1}};
    i9.multiplicities = {2, 4};
    CHECK(i9.euler_total() == 12);
    CHECK(i9.picard_contribution() == 10);
    CHECK(validate_configuration(i9).all_pass());

    // deficient Euler sum
    FibreConfiguration three_i3;
    three_i3.fibres = {{3, 3}};
    three_i3.multiplicities = {2, 3};
    CHECK(three_i3.euler_total() == 9);
    const auto report = validate_configuration(three_i3);
    CHECK(!report.all_pass());
    CHECK(!report.checks[0].pass);  // euler
    CHECK(!report.checks[1].pass);  // picard: 2 + 3*2 = 8
    CHECK(report.checks[2].pass);   // multiplicities fine

    // inadmissible multiplicities
    FibreConfiguration bad_mult;
    bad_mult.fibres = {{3, 4}};
    bad_mult.multiplicities = {2, 2, 2};
    const auto report2 = validate_configuration(bad_mult);
    CHECK(report2.checks[0].pass);
    CHECK(!report2.checks[2].pass);
}
