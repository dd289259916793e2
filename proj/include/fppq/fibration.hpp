#pragma once

#include <map>
#include <string>
#include <vector>

namespace fppq {

/// Multiple-fibre data of an elliptic fibration with F ~ n K_Y: multiplicity
/// tuple m_1 <= ... <= m_r (r >= 2, every m_i >= 2) satisfying
///   1/n = r - 1 - sum 1/m_i
/// with every m_i dividing n.
struct FibreSolution {
    long long n = 0;
    std::vector<long long> multiplicities;

    FibreSolution(long long n, std::vector<long long> multiplicities);  // validates

    friend bool operator==(const FibreSolution&, const FibreSolution&) = default;
};

/// Complete solution set for a given n. r ranges over {2, 3} when n = 2 and
/// is 2 for n >= 3; the divisibility constraint empties n = 1 on its own.
std::vector<FibreSolution> solve_multiplicities(long long n);

/// Drops (2,2,2): that solution would force a degree-2 map from the
/// (-3)-curve to the line ramified at 3 points, which cannot exist.
std::vector<FibreSolution> geometric_filter(std::vector<FibreSolution> sols);

/// Multiplicity tuples surviving the filter over all n up to the given limit.
std::vector<std::vector<long long>> admissible_multiplicities(long long n_max = 12);

/// Euler number of a multiplicative fibre I_k (k = 0 is a smooth fibre).
long long kodaira_euler(long long k);

/// Irreducible components of I_k: a cycle of k rational curves for k >= 1.
long long kodaira_components(long long k);

/// "I<k>" -> k; everything outside the multiplicative I-series is rejected.
long long parse_kodaira_label(const std::string& label);

/// Singular-fibre multiset (I_k -> count) with the multiple-fibre tuple.
struct FibreConfiguration {
    std::map<long long, long long> fibres;
    std::vector<long long> multiplicities;

    long long euler_total() const;
    long long picard_contribution() const;  // 2 + sum (components - 1)
};

struct ConfigurationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ConfigurationReport {
    std::vector<ConfigurationCheck> checks;
    bool all_pass() const;
};

/// Euler sum 12, Picard bookkeeping 10, and an admissible multiplicity pair.
ConfigurationReport validate_configuration(const FibreConfiguration& cfg);

}  // namespace fppq
