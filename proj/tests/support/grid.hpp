// The shared desk-scale test grid: every valid parameter tuple drawn from
// {0, 1/2, -1/2, 1/3, 2/3, 1/4, -1/3} with m <= 3, degree vectors with
// n_j <= 4, and evaluation points {1, -1, 1/2, 2/3, 2, i}.

#ifndef PADE_TESTS_GRID_HPP
#define PADE_TESTS_GRID_HPP

#include "pade/efunction.hpp"
#include "pade/pade_system.hpp"
#include "pade/quadratic.hpp"

#include <vector>

namespace grid {

using namespace pade;

inline const std::vector<Rational>& lambda_pool() {
    static const std::vector<Rational> pool = [] {
        std::vector<Rational> v;
        auto add = [&v](long n, long d) { v.push_back(Rational(Int(n), Int(d))); };
        add(0, 1);
        add(1, 2);
        add(-1, 2);
        add(1, 3);
        add(2, 3);
        add(1, 4);
        add(-1, 3);
        return v;
    }();
    return pool;
}

inline bool tuple_valid(const std::vector<Rational>& lambdas) {
    for (size_t i = 0; i < lambdas.size(); ++i)
        for (size_t j = i + 1; j < lambdas.size(); ++j)
            if ((lambdas[i] - lambdas[j]).is_integer()) return false;
    return true;
}

/// All valid sorted tuples with 1 <= m <= max_m (51 configs for max_m = 3).
inline std::vector<LambdaConfig> configs(int max_m = 3) {
    const auto& pool = lambda_pool();
    std::vector<LambdaConfig> out;
    const size_t n = pool.size();
    for (size_t i = 0; i < n; ++i) {
        out.push_back(validate_config({pool[i]}));
        if (max_m < 2) continue;
        for (size_t j = i + 1; j < n; ++j) {
            if (!tuple_valid({pool[i], pool[j]})) continue;
            out.push_back(validate_config({pool[i], pool[j]}));
            if (max_m < 3) continue;
            for (size_t k = j + 1; k < n; ++k) {
                if (!tuple_valid({pool[i], pool[j], pool[k]})) continue;
                out.push_back(validate_config({pool[i], pool[j], pool[k]}));
            }
        }
    }
    return out;
}

/// Every degree vector with entries in 1..max_n.
inline std::vector<DegreeVector> degree_vectors(int m, unsigned max_n = 4) {
    std::vector<DegreeVector> out;
    std::vector<unsigned> cur(static_cast<size_t>(m), 1);
    for (;;) {
        out.push_back(DegreeVector::of(cur));
        int pos = m - 1;
        while (pos >= 0) {
            if (cur[static_cast<size_t>(pos)] < max_n) {
                ++cur[static_cast<size_t>(pos)];
                break;
            }
            cur[static_cast<size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

struct AlphaPoint {
    QuadraticInt a, b;
    unsigned long d;
    const char* name;
};

inline std::vector<AlphaPoint> alphas() {
    std::vector<AlphaPoint> out;
    out.push_back({QuadraticInt(Int(1)), QuadraticInt(Int(1)), 0, "1"});
    out.push_back({QuadraticInt(Int(-1)), QuadraticInt(Int(1)), 0, "-1"});
    out.push_back({QuadraticInt(Int(1)), QuadraticInt(Int(2)), 0, "1/2"});
    out.push_back({QuadraticInt(Int(2)), QuadraticInt(Int(3)), 0, "2/3"});
    out.push_back({QuadraticInt(Int(2)), QuadraticInt(Int(1)), 0, "2"});
    out.push_back({QuadraticInt(1, Int(0), Int(1)), QuadraticInt(Int(1)), 1, "i"});
    return out;
}

} // namespace grid

#endif
