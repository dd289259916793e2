#include "fppq/fibration.hpp"

#include "fppq/rational.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fppq {

namespace {

std::vector<long long> divisors_at_least_two(long long n) {
    std::vector<long long> divs;
    for (long long d = 2; d <= n; ++d)
        if (n % d == 0) divs.push_back(d);
    return divs;
}

Rational fibre_equation_gap(long long n, const std::vector<long long>& ms) {
    // r - 1 - sum 1/m_i - 1/n
    Rational gap = Rational(static_cast<long long>(ms.size()) - 1) - frac(1, n);
    for (long long m : ms) gap -= frac(1, m);
    return gap;
}

}  // namespace

FibreSolution::FibreSolution(long long n_, std::vector<long long> multiplicities_)
    : n(n_), multiplicities(std::move(multiplicities_)) {
    if (n < 1) throw std::invalid_argument("FibreSolution: n must be positive");
    if (multiplicities.size() < 2)
        throw std::invalid_argument("FibreSolution: at least two multiple fibres");
    if (!std::is_sorted(multiplicities.begin(), multiplicities.end()))
        throw std::invalid_argument("FibreSolution: multiplicities must be sorted");
    for (long long m : multiplicities) {
        if (m < 2) throw std::invalid_argument("FibreSolution: multiplicities are >= 2");
        if (n % m != 0)
            throw std::invalid_argument("FibreSolution: every multiplicity must divide n");
    }
    if (fibre_equation_gap(n, multiplicities) != 0)
        throw std::invalid_argument("FibreSolution: multiplicities do not solve the equation");
}

std::vector<FibreSolution> solve_multiplicities(long long n) {
    if (n < 1) throw std::invalid_argument("solve_multiplicities: n must be positive");
    const std::vector<long long> divs = divisors_at_least_two(n);

    std::vector<FibreSolution> solutions;
    // r = 2 always; sum 1/m_i <= r/2 forces r <= 2 + 2/n, so r = 3 only at n = 2
    const int r_max = n == 2 ? 3 : 2;
    for (int r = 2; r <= r_max; ++r) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
        if (divs.empty()) break;
        for (;;) {
            std::vector<long long> ms;
            for (std::size_t i : idx) ms.push_back(divs[i]);
            if (fibre_equation_gap(n, ms) == 0) solutions.emplace_back(n, ms);

            // next nondecreasing index tuple
            std::size_t pos = idx.size();
            while (pos > 0 && idx[pos - 1] + 1 == divs.size()) --pos;
            if (pos == 0) break;
            const std::size_t next = idx[pos - 1] + 1;
            for (std::size_t i = pos - 1; i < idx.size(); ++i) idx[i] = next;
        }
    }
    return solutions;
}

std::vector<FibreSolution> geometric_filter(std::vector<FibreSolution> sols) {
    const std::vector<long long> forbidden = {2, 2, 2};
    std::erase_if(sols, [&](const FibreSolution& s) { return s.multiplicities == forbidden; });
    return sols;
}

std::vector<std::vector<long long>> admissible_multiplicities(long long n_max) {
    std::vector<std::vector<long long>> tuples;
    for (long long n = 1; n <= n_max; ++n)
        for (const auto& sol : geometric_filter(solve_multiplicities(n)))
            if (std::find(tuples.begin(), tuples.end(), sol.multiplicities) == tuples.end())
                tuples.push_back(sol.multiplicities);
    std::sort(tuples.begin(), tuples.end());
    return tuples;
}

long long kodaira_euler(long long k) {
    if (k < 0) throw std::invalid_argument("kodaira_euler: k must be >= 0");
    return k;
}

long long kodaira_components(long long k) {
    if (k < 0) throw std::invalid_argument("kodaira_components: k must be >= 0");
    return k == 0 ? 1 : k;
}

long long parse_kodaira_label(const std::string& label) {
    if (label.size() >= 2 && label[0] == 'I' && label.find('*') == std::string::npos) {
        const std::string digits = label.substr(1);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos)
            return std::stoll(digits);
    }
    throw std::invalid_argument("parse_kodaira_label: only multiplicative fibres I_k are "
                                "supported, got \"" + label + "\"");
}

long long FibreConfiguration::euler_total() const {
    long long total = 0;
    for (const auto& [k, count] : fibres) total += kodaira_euler(k) * count;
    return total;
}

long long FibreConfiguration::picard_contribution() const {
    long long total = 2;
    for (const auto& [k, count] : fibres) total += (kodaira_components(k) - 1) * count;
    return total;
}

bool ConfigurationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

ConfigurationReport validate_configuration(const FibreConfiguration& cfg) {
    ConfigurationReport report;

    const long long euler = cfg.euler_total();
    report.checks.push_back(
        {"euler sum", euler == 12,
         "sum of fibre Euler numbers is " + std::to_string(euler) + ", needs 12"});

    const long long picard = cfg.picard_contribution();
    report.checks.push_back(
        {"picard rank", picard == 10,
         "2 + sum(components - 1) is " + std::to_string(picard) + ", needs 10"});

    const auto admissible = admissible_multiplicities();
    const bool mult_ok = std::find(admissible.begin(), admissible.end(), cfg.multiplicities) !=
                         admissible.end();
    std::ostringstream os;
    os << "multiplicities (";
    for (std::size_t i = 0; i < cfg.multiplicities.size(); ++i)
        os << (i ? "," : "") << cfg.multiplicities[i];
    os << ") " << (mult_ok ? "are" : "are not") << " admissible";
    report.checks.push_back({"multiplicities", mult_ok, os.str()});

    return report;
}

}  // namespace fppq
