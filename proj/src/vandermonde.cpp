#include "swlearn/vandermonde.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace swlearn {

namespace {

using Matrix = std::vector<std::vector<double>>;

// Solves A x = b in place; A is consumed. Throws on a zero pivot.
std::vector<double> gaussian_solve(Matrix a, std::vector<double> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
        }
        if (a[pivot][col] == 0.0) throw Error("linear system is singular");
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = a[r][col] / a[col][col];
            if (factor == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t row = n; row-- > 0;) {
        double acc = b[row];
        for (std::size_t c = row + 1; c < n; ++c) acc -= a[row][c] * x[c];
        x[row] = acc / a[row][row];
    }
    return x;
}

double one_norm(const Matrix& a) {
    if (a.empty()) return 0.0;
    double best = 0.0;
    for (std::size_t col = 0; col < a.size(); ++col) {
        double sum = 0.0;
        for (const auto& row : a) sum += std::fabs(row[col]);
        best = std::max(best, sum);
    }
    return best;
}

// Exact 1-norm of the inverse via column solves; fine at the small orders
// this library works with.
double inverse_one_norm(const Matrix& a) {
    const std::size_t n = a.size();
    Matrix inv_cols(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> e(n, 0.0);
        e[j] = 1.0;
        inv_cols[j] = gaussian_solve(a, std::move(e));
    }
    double best = 0.0;
    for (const auto& col : inv_cols) {
        double sum = 0.0;
        for (double v : col) sum += std::fabs(v);
        best = std::max(best, sum);
    }
    return best;
}

} // namespace

VandermondeSystem VandermondeSystem::canonical(int order, std::vector<double> rhs) {
    if (order < 1) throw Error("Vandermonde order must be at least 1");
    if (static_cast<int>(rhs.size()) != order) {
        throw Error("Vandermonde right-hand side must have one entry per node");
    }
    VandermondeSystem sys;
    sys.nodes.resize(static_cast<std::size_t>(order));
    for (int k = 1; k <= order; ++k) sys.nodes[static_cast<std::size_t>(k - 1)] = k;
    sys.rhs = std::move(rhs);
    return sys;
}

std::vector<std::vector<double>> VandermondeSystem::matrix() const {
    const std::size_t m = nodes.size();
    Matrix a(m, std::vector<double>(m, 0.0));
    for (std::size_t t = 0; t < m; ++t) {
        double power = nodes[t];
        for (std::size_t j = 0; j < m; ++j) {
            a[t][j] = power;
            power *= nodes[t];
        }
    }
    return a;
}

VandermondeSolution solve_vandermonde(const VandermondeSystem& sys) {
    const int m = sys.order();
    if (m < 1) throw Error("Vandermonde order must be at least 1");
    if (static_cast<int>(sys.rhs.size()) != m) {
        throw Error("Vandermonde right-hand side size mismatch");
    }
    for (double node : sys.nodes) {
        if (!std::isfinite(node) || node == 0.0) {
            throw Error("Vandermonde nodes must be finite and nonzero");
        }
    }
    for (std::size_t t = 0; t < sys.nodes.size(); ++t) {
        for (std::size_t u = t + 1; u < sys.nodes.size(); ++u) {
            if (sys.nodes[t] == sys.nodes[u]) throw Error("Vandermonde nodes must be distinct");
        }
    }
    for (double v : sys.rhs) {
        if (!std::isfinite(v)) throw Error("Vandermonde right-hand side is not finite");
    }

    const Matrix a = sys.matrix();
    VandermondeSolution sol;
    sol.coefficients = gaussian_solve(a, sys.rhs);

    // Extended-precision residual, reused for iterative refinement.
    auto residual = [&](const std::vector<double>& x) {
        std::vector<double> r(x.size());
        for (std::size_t t = 0; t < a.size(); ++t) {
            long double acc = 0.0L;
            for (std::size_t j = 0; j < a.size(); ++j) {
                acc += static_cast<long double>(a[t][j]) * static_cast<long double>(x[j]);
            }
            r[t] = static_cast<double>(static_cast<long double>(sys.rhs[t]) - acc);
        }
        return r;
    };
    auto inf_norm = [](const std::vector<double>& v) {
        double n = 0.0;
        for (double e : v) n = std::max(n, std::fabs(e));
        return n;
    };

    // A couple of refinement steps pin the solution to the representable
    // optimum; dyadic-rational inputs land on a residual of exactly zero.
    std::vector<double> r = residual(sol.coefficients);
    for (int pass = 0; pass < 3 && inf_norm(r) > 0.0; ++pass) {
        const std::vector<double> correction = gaussian_solve(a, r);
        std::vector<double> refined = sol.coefficients;
        for (std::size_t j = 0; j < refined.size(); ++j) refined[j] += correction[j];
        std::vector<double> r2 = residual(refined);
        if (inf_norm(r2) >= inf_norm(r)) break;
        sol.coefficients = std::move(refined);
        r = std::move(r2);
    }
    sol.residual_inf = inf_norm(r);

    sol.condition_estimate = one_norm(a) * inverse_one_norm(a);
    sol.ill_conditioned = sol.condition_estimate > kConditionWarnThreshold;
    if (sol.residual_inf > kSolveTolerance) {
        throw Error("Vandermonde solve residual " + std::to_string(sol.residual_inf) +
                    " exceeds tolerance");
    }
    return sol;
}

} // namespace swlearn
