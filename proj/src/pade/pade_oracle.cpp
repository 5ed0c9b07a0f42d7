#include "pade/pade_oracle.hpp"

namespace pade {

std::vector<Rational> falling_factorial_row(const Rational& g, size_t width) {
    std::vector<Rational> row(width);
    Rational acc(1);
    for (size_t k = 0; k < width; ++k) {
        row[k] = acc;
        acc *= g - Rational(static_cast<long>(k));
    }
    return row;
}

std::vector<std::vector<Rational>> falling_factorial_matrix(const std::vector<Rational>& gammas, size_t width) {
    std::vector<std::vector<Rational>> m(gammas.size(), std::vector<Rational>(width));
    // Columnwise: col_0 = 1, col_{k+1} = col_k * (g - k).
    std::vector<Rational> col(gammas.size(), Rational(1));
    for (size_t k = 0; k < width; ++k) {
        for (size_t i = 0; i < gammas.size(); ++i) {
            m[i][k] = col[i];
            col[i] *= gammas[i] - Rational(static_cast<long>(k));
        }
    }
    return m;
}

namespace {

// Scales each augmented row to integers; returns the integer matrix.
std::vector<std::vector<Int>> clear_denominators(const LinearSystem& sys) {
    const size_t n = sys.matrix.size();
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        if (sys.matrix[i].size() != n) throw std::invalid_argument("linear system not square");
        Int scale(1);
        for (const Rational& v : sys.matrix[i]) scale = lcm(scale, v.denominator());
        scale = lcm(scale, sys.rhs[i].denominator());
        for (size_t j = 0; j < n; ++j) {
            Rational scaled = Rational(scale) * sys.matrix[i][j];
            a[i][j] = scaled.numerator();
        }
        Rational scaled = Rational(scale) * sys.rhs[i];
        a[i][n] = scaled.numerator();
    }
    return a;
}

// Fraction-free forward elimination in place (Bareiss). Throws when the
// matrix is singular. Row swaps are applied as needed.
void bareiss_eliminate(std::vector<std::vector<Int>>& a) {
    const size_t n = a.size();
    Int prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pivot = k;
        while (pivot < n && sgn(a[pivot][k]) == 0) ++pivot;
        if (pivot == n) throw SingularSystemError("singular system at column " + std::to_string(k));
        if (pivot != k) std::swap(a[pivot], a[k]);
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < a[i].size(); ++j) {
                Int t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    if (sgn(a[n - 1][n - 1]) == 0) throw SingularSystemError("singular system at final pivot");
}

} // namespace

std::vector<Rational> solve_fraction_free(const LinearSystem& sys) {
    const size_t n = sys.matrix.size();
    if (n == 0) return {};
    auto a = clear_denominators(sys);
    bareiss_eliminate(a);
    std::vector<Rational> x(n);
    for (size_t i = n; i-- > 0;) {
        Rational acc(a[i][n]);
        for (size_t j = i + 1; j < n; ++j) acc -= Rational(a[i][j]) * x[j];
        x[i] = acc / Rational(a[i][i]);
    }
    return x;
}

std::vector<Rational> solve_classical(const LinearSystem& sys) {
    const size_t n = sys.matrix.size();
    if (n == 0) return {};
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        if (sys.matrix[i].size() != n) throw std::invalid_argument("linear system not square");
        for (size_t j = 0; j < n; ++j) a[i][j] = sys.matrix[i][j];
        a[i][n] = sys.rhs[i];
    }
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        while (pivot < n && a[pivot][k].is_zero()) ++pivot;
        if (pivot == n) throw SingularSystemError("singular system at column " + std::to_string(k));
        if (pivot != k) std::swap(a[pivot], a[k]);
        for (size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            Rational f = a[i][k] / a[k][k];
            for (size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    std::vector<Rational> x(n);
    for (size_t i = n; i-- > 0;) {
        Rational acc = a[i][n];
        for (size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
    }
    return x;
}

Rational rational_determinant(std::vector<std::vector<Rational>> matrix) {
    const size_t n = matrix.size();
    if (n == 0) return Rational(1);
    // Clear denominators rowwise; divide the integer determinant back out.
    Rational scale_product(1);
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i) {
        if (matrix[i].size() != n) throw std::invalid_argument("rational_determinant: matrix not square");
        Int scale(1);
        for (const Rational& v : matrix[i]) scale = lcm(scale, v.denominator());
        scale_product *= Rational(scale);
        for (size_t j = 0; j < n; ++j) a[i][j] = (Rational(scale) * matrix[i][j]).numerator();
    }
    int sign = 1;
    Int prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pivot = k;
        while (pivot < n && sgn(a[pivot][k]) == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rational det = Rational(a[n - 1][n - 1]) / scale_product;
    return sign < 0 ? -det : det;
}

std::vector<Rational> solve_first_system(const LambdaConfig& cfg, const DegreeVector& deg) {
    const unsigned N = deg.N();
    const std::vector<Rational> g = vanishing_nodes(cfg, deg);
    const Rational aN = -Rational(Int(1), factorial(N));

    LinearSystem sys;
    sys.matrix.resize(N);
    sys.rhs.resize(N);
    for (size_t i = 0; i < N; ++i) {
        std::vector<Rational> row = falling_factorial_row(g[i], N + 1);
        sys.rhs[i] = -aN * row[N];
        row.pop_back();
        sys.matrix[i] = std::move(row);
    }
    std::vector<Rational> a = solve_fraction_free(sys);
    a.push_back(aN);
    return a;
}

std::vector<Rational> solve_second_system(const LambdaConfig& cfg, const DegreeVector& deg, int i) {
    const unsigned N = deg.N();
    const RowNodes nodes = row_nodes(cfg, deg, i);

    LinearSystem sys;
    sys.matrix.resize(N + 1);
    sys.rhs.assign(N + 1, Rational(0));
    sys.matrix[0] = falling_factorial_row(nodes.unit_node, N + 1);
    sys.rhs[0] = Rational(1);
    for (size_t s = 0; s < N; ++s) sys.matrix[s + 1] = falling_factorial_row(nodes.zero_nodes[s], N + 1);
    return solve_fraction_free(sys);
}

Rational vandermonde_delta(const std::vector<Rational>& gammas) {
    Rational acc(1);
    for (size_t i = 0; i < gammas.size(); ++i)
        for (size_t j = i + 1; j < gammas.size(); ++j) acc *= gammas[j] - gammas[i];
    return acc;
}

Rational falling_factorial_determinant(const std::vector<Rational>& gammas) {
    return rational_determinant(falling_factorial_matrix(gammas, gammas.size()));
}

namespace {

// Signed minor of the falling-factorial matrix at (row sigma-1, column k).
Rational signed_minor(const std::vector<std::vector<Rational>>& m, size_t row, size_t col) {
    const size_t n = m.size();
    std::vector<std::vector<Rational>> sub;
    sub.reserve(n - 1);
    for (size_t i = 0; i < n; ++i) {
        if (i == row) continue;
        std::vector<Rational> r;
        r.reserve(n - 1);
        for (size_t j = 0; j < n; ++j)
            if (j != col) r.push_back(m[i][j]);
        sub.push_back(std::move(r));
    }
    Rational d = rational_determinant(std::move(sub));
    return (row + col) % 2 == 0 ? d : -d;
}

} // namespace

CofactorCheck verify_cofactor_identity(const std::vector<Rational>& gammas, int sigma, int k) {
    const size_t N = gammas.size();
    if (sigma < 1 || static_cast<size_t>(sigma) > N) throw std::invalid_argument("verify_cofactor_identity: sigma out of range");
    if (k < 0 || static_cast<size_t>(k) >= N) throw std::invalid_argument("verify_cofactor_identity: k out of range");

    CofactorCheck out;
    out.sigma = sigma;
    out.k = k;

    const Rational delta = vandermonde_delta(gammas);
    const auto matrix = falling_factorial_matrix(gammas, N);
    const size_t row = static_cast<size_t>(sigma - 1);

    const Rational cofactor = signed_minor(matrix, row, static_cast<size_t>(k));
    out.lhs = Rational(factorial(static_cast<unsigned long>(k))) * cofactor / delta;

    Rational rhs(0);
    for (int tau = 0; tau <= k; ++tau) {
        Rational num(1), den(1);
        for (size_t s = 0; s < N; ++s) {
            if (s == row) continue;
            num *= Rational(tau) - gammas[s];
            den *= gammas[row] - gammas[s];
        }
        Rational term = Rational(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(tau))) * num / den;
        rhs += (k - tau) % 2 == 0 ? term : -term;
    }
    out.rhs = rhs;
    out.identity_holds = out.lhs == out.rhs;

    // Row polynomial in the falling-factorial basis against its Lagrange
    // product form, sampled at z = 0..N-1.
    out.lagrange_holds = true;
    std::vector<Rational> cofactors(N);
    for (size_t t = 0; t < N; ++t) cofactors[t] = signed_minor(matrix, row, t);
    for (size_t z = 0; z < N; ++z) {
        const Rational zz(static_cast<long>(z));
        std::vector<Rational> basis = falling_factorial_row(zz, N);
        Rational lhs(0);
        for (size_t t = 0; t < N; ++t) lhs += cofactors[t] * basis[t];
        Rational num(1), den(1);
        for (size_t s = 0; s < N; ++s) {
            if (s == row) continue;
            num *= zz - gammas[s];
            den *= gammas[row] - gammas[s];
        }
        if (!(lhs == delta * num / den)) {
            out.lagrange_holds = false;
            break;
        }
    }
    out.pass = out.identity_holds && out.lagrange_holds;
    return out;
}

} // namespace pade
