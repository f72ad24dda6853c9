#include "spectra/heat/boxspec.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace spectra::heat {
namespace {
constexpr double kPi = 3.14159265358979323846;
}

BoxSpec BoxSpec::from_rational(std::vector<Rational> sides) {
    if (sides.empty()) throw std::domain_error("box needs at least one side");
    BoxSpec b;
    for (const auto& s : sides) {
        if (s <= 0) throw std::domain_error("box sides must be positive");
        b.sides.push_back(static_cast<double>(s));
    }
    b.sides_exact = std::move(sides);
    return b;
}

BoxSpec BoxSpec::from_doubles(std::vector<double> sides) {
    if (sides.empty()) throw std::domain_error("box needs at least one side");
    for (double s : sides)
        if (!(s > 0)) throw std::domain_error("box sides must be positive");
    BoxSpec b;
    b.sides = std::move(sides);
    return b;
}

double BoxSpec::volume() const {
    double v = 1;
    for (double s : sides) v *= s;
    return v;
}

double tuple_lambda(const BoxSpec& box, const std::vector<long long>& m) {
    double sum = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        double q = static_cast<double>(m[i]) / box.sides[i];
        sum += q * q;
    }
    return kPi * kPi * sum;
}

namespace {

long long first_index(BoundaryCondition bc) { return bc == BoundaryCondition::kDirichlet ? 1 : 0; }

template <typename Visit>
void enumerate_tuples(const BoxSpec& box, BoundaryCondition bc, double lambda_max, int level,
                      std::vector<long long>& m, const Visit& visit) {
    const int n = box.dim();
    if (level == n) {
        visit(m);
        return;
    }
    for (long long v = first_index(bc);; ++v) {
        m[level] = v;
        // partial tuple padded with the minimal admissible indices; the
        // padded value is monotone in v, so the first excess ends the level
        for (int j = level + 1; j < n; ++j) m[j] = first_index(bc);
        if (tuple_lambda(box, m) > lambda_max) break;
        enumerate_tuples(box, bc, lambda_max, level + 1, m, visit);
    }
    m[level] = first_index(bc);
}

}  // namespace

std::vector<EigenLine> box_eigenvalues(const BoxSpec& box, BoundaryCondition bc,
                                       double lambda_max) {
    if (lambda_max < 0) throw std::domain_error("box_eigenvalues needs lambda_max >= 0");
    const int n = box.dim();
    std::vector<long long> m(n, first_index(bc));

    if (box.has_exact_sides()) {
        std::map<Rational, EigenLine> groups;
        auto visit = [&](const std::vector<long long>& tuple) {
            if (tuple_lambda(box, tuple) > lambda_max) return;
            Rational key = 0;
            for (int i = 0; i < n; ++i) {
                Rational q = Rational(Int(tuple[i])) / box.sides_exact[i];
                key += q * q;
            }
            EigenLine& line = groups[key];
            line.value = tuple_lambda(box, tuple);
            line.multiplicity += 1;
            line.index_witnesses.push_back(tuple);
        };
        enumerate_tuples(box, bc, lambda_max, 0, m, visit);
        std::vector<EigenLine> out;
        out.reserve(groups.size());
        for (auto& [key, line] : groups) out.push_back(std::move(line));
        return out;
    }

    std::vector<std::pair<double, std::vector<long long>>> all;
    auto visit = [&](const std::vector<long long>& tuple) {
        double v = tuple_lambda(box, tuple);
        if (v <= lambda_max) all.emplace_back(v, tuple);
    };
    enumerate_tuples(box, bc, lambda_max, 0, m, visit);
    std::sort(all.begin(), all.end());
    std::vector<EigenLine> out;
    for (auto& [v, tuple] : all) {
        if (!out.empty() && v - out.back().value <= 1e-12 * std::max(1.0, v)) {
            out.back().multiplicity += 1;
            out.back().index_witnesses.push_back(tuple);
        } else {
            out.push_back(EigenLine{v, 1, {tuple}});
        }
    }
    return out;
}

namespace {

/// Count of admissible values for the last coordinate given the previously
/// fixed ones, reconciled against the shared tuple predicate.
long long last_coordinate_count(const BoxSpec& box, BoundaryCondition bc, double lambda,
                                std::vector<long long>& m) {
    const int n = box.dim();
    const int last = n - 1;
    double partial = 0;
    for (int i = 0; i < last; ++i) {
        double q = static_cast<double>(m[i]) / box.sides[i];
        partial += q * q;
    }
    double room = lambda / (kPi * kPi) - partial;
    if (room < 0) room = 0;
    auto guess = static_cast<long long>(std::floor(box.sides[last] * std::sqrt(room)));
    // reconcile with tuple_lambda so both enumeration paths share one predicate
    m[last] = guess;
    while (guess > 0 && (m[last] = guess, tuple_lambda(box, m) > lambda)) --guess;
    while ((m[last] = guess + 1, tuple_lambda(box, m) <= lambda)) ++guess;
    m[last] = first_index(bc);
    if (bc == BoundaryCondition::kDirichlet) return guess;  // m_last in [1, guess]
    return guess + 1;                                       // m_last in [0, guess]
}

long long count_stripes(const BoxSpec& box, BoundaryCondition bc, double lambda, int level,
                        std::vector<long long>& m) {
    const int n = box.dim();
    if (level == n - 1) return last_coordinate_count(box, bc, lambda, m);
    long long total = 0;
    for (long long v = first_index(bc);; ++v) {
        m[level] = v;
        for (int j = level + 1; j < n; ++j) m[j] = first_index(bc);
        if (tuple_lambda(box, m) > lambda) break;
        total += count_stripes(box, bc, lambda, level + 1, m);
    }
    m[level] = first_index(bc);
    return total;
}

}  // namespace

long long counting_function_serial(const BoxSpec& box, BoundaryCondition bc, double lambda) {
    if (lambda < 0) throw std::domain_error("counting_function needs lambda >= 0");
    const int n = box.dim();
    std::vector<long long> m(n, first_index(bc));
    if (n == 1) return last_coordinate_count(box, bc, lambda, m);
    return count_stripes(box, bc, lambda, 0, m);
}

long long counting_function(const BoxSpec& box, BoundaryCondition bc, double lambda) {
    if (lambda < 0) throw std::domain_error("counting_function needs lambda >= 0");
    const int n = box.dim();
    if (n == 1) return counting_function_serial(box, bc, lambda);

    // fixed stripe decomposition over the first coordinate; chunk sums are
    // integers, so the combination is order independent
    long long first_max = static_cast<long long>(
        std::floor(box.sides[0] * std::sqrt(std::max(0.0, lambda)) / kPi)) + 1;
    long long lo = first_index(bc);
    std::vector<long long> firsts;
    for (long long v = lo; v <= first_max; ++v) firsts.push_back(v);

    long long total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total)
    for (std::size_t idx = 0; idx < firsts.size(); ++idx) {
        std::vector<long long> m(n, first_index(bc));
        m[0] = firsts[idx];
        for (int j = 1; j < n; ++j) m[j] = first_index(bc);
        if (tuple_lambda(box, m) > lambda) continue;
        long long stripe = (n == 2) ? last_coordinate_count(box, bc, lambda, m)
                                    : count_stripes(box, bc, lambda, 1, m);
        total += stripe;
    }
    return total;
}

double weyl_constant(int n, double volume) {
    if (n < 1 || volume <= 0) throw std::domain_error("weyl_constant needs n >= 1, volume > 0");
    double omega_n = std::pow(kPi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
    return omega_n * volume / std::pow(2.0 * kPi, n);
}

namespace {

/// Exact squared-frequency keys sum m_i^2 / l_i^2 of the smallest k_max
/// eigenvalues (with multiplicity) of a rational box.
std::vector<Rational> smallest_keys(const std::vector<Rational>& sides, BoundaryCondition bc,
                                    int k_max) {
    const int n = static_cast<int>(sides.size());
    // initial cutoff from the Weyl volume estimate, then grow until enough
    Rational cutoff = 1;
    for (const auto& s : sides) cutoff += 1 / (s * s);
    cutoff *= 4 * k_max;
    for (;;) {
        std::vector<Rational> keys;
        std::vector<long long> m(n, first_index(bc));
        std::function<void(int, Rational)> rec = [&](int level, Rational partial) {
            if (level == n) {
                keys.push_back(partial);
                return;
            }
            for (long long v = first_index(bc);; ++v) {
                Rational q = Rational(Int(v)) / sides[level];
                Rational next = partial + q * q;
                if (next > cutoff) break;
                rec(level + 1, next);
            }
        };
        rec(0, Rational(0));
        if (static_cast<int>(keys.size()) >= k_max) {
            std::sort(keys.begin(), keys.end());
            keys.resize(k_max);
            return keys;
        }
        cutoff *= 2;
    }
}

}  // namespace

BracketingReport bracketing_check(const BoxSpec& box, const std::vector<SubBox>& partition,
                                  int k_max) {
    if (!box.has_exact_sides())
        throw std::domain_error("bracketing_check requires exact rational sides");
    const int n = box.dim();
    if (partition.empty()) throw std::domain_error("bracketing_check needs a nonempty partition");

    // exact tiling: pieces inside the box, pairwise interior-disjoint,
    // volumes adding up
    Rational box_volume = 1;
    for (const auto& s : box.sides_exact) box_volume *= s;
    Rational total = 0;
    for (const auto& piece : partition) {
        if (static_cast<int>(piece.lo.size()) != n || static_cast<int>(piece.sides.size()) != n)
            throw std::domain_error("partition piece dimension mismatch");
        Rational v = 1;
        for (int i = 0; i < n; ++i) {
            if (piece.sides[i] <= 0) throw std::domain_error("partition piece with empty side");
            if (piece.lo[i] < 0 || piece.lo[i] + piece.sides[i] > box.sides_exact[i])
                throw std::domain_error("partition piece extends outside the box");
            v *= piece.sides[i];
        }
        total += v;
    }
    for (std::size_t a = 0; a < partition.size(); ++a)
        for (std::size_t b = a + 1; b < partition.size(); ++b) {
            bool overlap = true;
            for (int i = 0; i < n && overlap; ++i) {
                const auto& pa = partition[a];
                const auto& pb = partition[b];
                overlap = pa.lo[i] + pa.sides[i] > pb.lo[i] && pb.lo[i] + pb.sides[i] > pa.lo[i];
            }
            if (overlap) throw std::domain_error("partition pieces overlap");
        }
    if (total != box_volume) throw std::domain_error("partition does not tile the box");

    // merged subbox spectra
    std::vector<Rational> merged_neumann, merged_dirichlet;
    for (const auto& piece : partition) {
        auto mu = smallest_keys(piece.sides, BoundaryCondition::kNeumann, k_max);
        auto la = smallest_keys(piece.sides, BoundaryCondition::kDirichlet, k_max);
        merged_neumann.insert(merged_neumann.end(), mu.begin(), mu.end());
        merged_dirichlet.insert(merged_dirichlet.end(), la.begin(), la.end());
    }
    std::sort(merged_neumann.begin(), merged_neumann.end());
    std::sort(merged_dirichlet.begin(), merged_dirichlet.end());
    auto own = smallest_keys(box.sides_exact, BoundaryCondition::kDirichlet, k_max);

    BracketingReport report;
    report.k_checked = k_max;
    report.all_hold = true;
    for (int k = 0; k < k_max; ++k) {
        if (merged_neumann[k] > own[k]) {
            report.all_hold = false;
            report.violations.push_back("k=" + std::to_string(k + 1) +
                                        ": merged Neumann exceeds box Dirichlet");
        }
        if (own[k] > merged_dirichlet[k]) {
            report.all_hold = false;
            report.violations.push_back("k=" + std::to_string(k + 1) +
                                        ": box Dirichlet exceeds merged Dirichlet");
        }
    }
    return report;
}

}  // namespace spectra::heat
