#include "fppq/classify.hpp"

#include "fppq/lefschetz.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace fppq {

long long SingularityProfile::total() const {
    long long n = 0;
    for (const auto& [t, r] : counts) n += r;
    return n;
}

long long SingularityProfile::count(const SingularityType& t) const {
    const auto it = counts.find(t.normalized());
    return it == counts.end() ? 0 : it->second;
}

std::string SingularityProfile::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [t, r] : counts) {
        if (!first) os << ", ";
        os << t.str() << " x" << r;
        first = false;
    }
    os << "}";
    return os.str();
}

Rational lefschetz_lhs(int p, const std::vector<CurveComponent>& curves,
                       const SingularityProfile& profile) {
    Rational lhs = 0;
    for (const auto& c : curves) {
        lhs += frac(1 - c.genus, 2);
        lhs += frac((p + 1) * c.self_intersection, 12);
    }
    for (const auto& [t, r] : profile.counts) {
        if (r == 0) continue;
        if (t.m != p)
            throw std::invalid_argument("lefschetz_lhs: profile type " + t.str() +
                                        " does not match order " + std::to_string(p));
        lhs += lefschetz_coefficient(p, t.a) * Rational(r);
    }
    return lhs;
}

std::set<SingularityProfile> enumerate_profiles(int p, long long num_fixed_points) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("enumerate_profiles: p must be an odd prime");
    if (num_fixed_points < 0)
        throw std::invalid_argument("enumerate_profiles: negative fixed point count");

    std::vector<Rational> weight(p - 1);
    for (long long i = 1; i < p; ++i)
        weight[static_cast<std::size_t>(i - 1)] = lefschetz_coefficient(p, i);

    std::set<SingularityProfile> result;
    std::vector<long long> r(p - 1, 0);

    // walk over all (r_1, ..., r_{p-1}) summing to the prescribed count
    std::function<void(std::size_t, long long, const Rational&)> recurse =
        [&](std::size_t idx, long long remaining, const Rational& acc) {
            if (idx + 1 == r.size()) {
                r[idx] = remaining;
                if (acc + weight[idx] * Rational(remaining) == 1) {
                    SingularityProfile profile;
                    for (std::size_t i = 0; i < r.size(); ++i) {
                        if (r[i] == 0) continue;
                        const auto t =
                            SingularityType(p, static_cast<long long>(i + 1)).normalized();
                        profile.counts[t] += r[i];
                    }
                    result.insert(std::move(profile));
                }
                r[idx] = 0;
                return;
            }
            for (long long k = 0; k <= remaining; ++k) {
                r[idx] = k;
                recurse(idx + 1, remaining - k, acc + weight[idx] * Rational(k));
            }
            r[idx] = 0;
        };

    recurse(0, num_fixed_points, Rational(0));
    return result;
}

std::set<SingularityProfile> apply_type_exclusion(const std::set<SingularityProfile>& profiles,
                                                  const SingularityType& excluded) {
    const SingularityType target = excluded.normalized();
    std::set<SingularityProfile> kept;
    for (const auto& profile : profiles)
        if (profile.count(target) == 0) kept.insert(profile);
    return kept;
}

long long hurwitz_fixed_points(int p, long long e_x, long long e_z, long long e_c) {
    const long long numerator = p * e_z - e_x;
    if (numerator % (p - 1) != 0)
        throw std::invalid_argument("hurwitz_fixed_points: no integral fixed point count");
    return numerator / (p - 1) - e_c;
}

long long curve_euler_bound(long long m) {
    if (m < 1) throw std::invalid_argument("curve_euler_bound: m must be positive");
    return -(m * m + 3 * m);
}

QuotientInvariants quotient_invariants(long long group_order) {
    QuotientInvariants inv;
    inv.group_order = group_order;
    inv.kz_squared = frac(9, group_order);
    const SingularityType third(3, 2), seventh(7, 3);
    switch (group_order) {
        case 3:
            inv.singularities = {third, third, third};
            break;
        case 7:
            inv.singularities = {seventh, seventh, seventh};
            break;
        case 9:
            inv.singularities = {third, third, third, third};
            break;
        case 21:
            inv.singularities = {third, third, third, seventh};
            break;
        case 2:
            throw std::invalid_argument(
                "quotient_invariants: order 2 is impossible; the quotient would have "
                "rational double points only and K^2 = 9/2, not an integer");
        default:
            throw std::invalid_argument("quotient_invariants: unsupported group order " +
                                        std::to_string(group_order));
    }
    return inv;
}

Rational noether_euler(long long chi, const Rational& k2) { return Rational(12 * chi) - k2; }

long long second_betti(long long euler_number) { return euler_number - 2; }

}  // namespace fppq
