#include "exclusion/linprog.hpp"

#include <cmath>
#include <limits>

#include "exclusion/errors.hpp"
#include "exclusion/tolerances.hpp"

namespace exclusion {

namespace {
constexpr double kPivotEps = 1e-11;
constexpr int kMaxDim = 128;
}  // namespace

std::optional<std::vector<double>> lp_feasible(const std::vector<std::vector<double>>& a,
                                               const std::vector<double>& b,
                                               const std::vector<double>& lb) {
    const int m = static_cast<int>(a.size());
    const int k = m > 0 ? static_cast<int>(a[0].size()) : static_cast<int>(lb.size());
    if (m > kMaxDim || k > kMaxDim) throw DimensionMismatch("lp_feasible: dimensions exceed 128");
    if (static_cast<int>(b.size()) != m) throw DimensionMismatch("lp_feasible: b size mismatch");
    if (static_cast<int>(lb.size()) != k) throw DimensionMismatch("lp_feasible: lb size mismatch");
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != k) throw DimensionMismatch("lp_feasible: ragged A");

    // Shift to u = t - lb >= 0 and flip rows so the right-hand side is
    // nonnegative, then run phase 1 with one artificial per row.
    std::vector<std::vector<double>> tab(m, std::vector<double>(k + m + 1, 0.0));
    for (int r = 0; r < m; ++r) {
        double rhs = b[r];
        for (int c = 0; c < k; ++c) rhs -= a[r][c] * lb[c];
        const double sign = rhs < 0.0 ? -1.0 : 1.0;
        for (int c = 0; c < k; ++c) tab[r][c] = sign * a[r][c];
        tab[r][k + r] = 1.0;
        tab[r][k + m] = sign * rhs;
    }

    std::vector<int> basis(m);
    for (int r = 0; r < m; ++r) basis[r] = k + r;

    // Phase-1 objective: minimize the sum of artificials. Reduced cost row
    // starts as minus the column sums of the constraint rows.
    std::vector<double> obj(k + m + 1, 0.0);
    for (int c = 0; c <= k + m; ++c)
        for (int r = 0; r < m; ++r) obj[c] -= tab[r][c];
    for (int r = 0; r < m; ++r) obj[k + r] = 0.0;

    const long max_pivots = 200L * (k + m) * (k + m) + 1000;
    for (long iter = 0; iter < max_pivots; ++iter) {
        // Bland: entering column is the lowest index with negative reduced cost.
        int enter = -1;
        for (int c = 0; c < k + m; ++c) {
            if (obj[c] < -kPivotEps) {
                enter = c;
                break;
            }
        }
        if (enter < 0) break;

        int leave = -1;
        double best = std::numeric_limits<double>::infinity();
        for (int r = 0; r < m; ++r) {
            if (tab[r][enter] > kPivotEps) {
                const double ratio = tab[r][k + m] / tab[r][enter];
                if (ratio < best - 1e-15 || (std::abs(ratio - best) <= 1e-15 &&
                                             (leave < 0 || basis[r] < basis[leave]))) {
                    best = ratio;
                    leave = r;
                }
            }
        }
        if (leave < 0) break;  // unbounded column; cannot happen in phase 1

        const double piv = tab[leave][enter];
        for (int c = 0; c <= k + m; ++c) tab[leave][c] /= piv;
        for (int r = 0; r < m; ++r) {
            if (r == leave) continue;
            const double f = tab[r][enter];
            if (f == 0.0) continue;
            for (int c = 0; c <= k + m; ++c) tab[r][c] -= f * tab[leave][c];
        }
        const double fo = obj[enter];
        if (fo != 0.0)
            for (int c = 0; c <= k + m; ++c) obj[c] -= fo * tab[leave][c];
        basis[leave] = enter;
    }

    double artificial_sum = 0.0;
    for (int r = 0; r < m; ++r)
        if (basis[r] >= k) artificial_sum += tab[r][k + m];
    if (artificial_sum > 1e-9) return std::nullopt;

    std::vector<double> t(lb);
    for (int r = 0; r < m; ++r)
        if (basis[r] < k) t[basis[r]] += tab[r][k + m];

    // Residual check on the original system.
    double resid = 0.0;
    for (int r = 0; r < m; ++r) {
        double s = -b[r];
        for (int c = 0; c < k; ++c) s += a[r][c] * t[c];
        resid = std::max(resid, std::abs(s));
    }
    if (resid > config().lp_residual) return std::nullopt;
    return t;
}

}  // namespace exclusion
