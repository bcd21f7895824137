#include "lp.hpp"

#include <optional>

namespace sweeprec::detail {

bool lp_feasible(std::vector<Vector> rows, Vector rhs) {
    const std::size_t m = rows.size();
    if (m == 0) return true;
    const std::size_t n = rows.front().size();

    for (std::size_t i = 0; i < m; ++i) {
        if (sgn(rhs[i]) < 0) {
            for (Scalar& x : rows[i]) x = -x;
            rhs[i] = -rhs[i];
        }
    }

    // Columns [0, n) are structural, [n, n + m) artificial. basis[i] is the
    // column basic in row i. objective[j] > 0 means raising column j lowers
    // the artificial sum, which is objective_rhs.
    const std::size_t width = n + m;
    std::vector<Vector> tab(m, Vector(width));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = rows[i][j];
        tab[i][n + i] = 1;
        basis[i] = n + i;
    }
    Vector objective(width);
    Scalar objective_rhs = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) objective[j] += tab[i][j];
        objective_rhs += rhs[i];
    }

    while (sgn(objective_rhs) > 0) {
        std::optional<std::size_t> entering;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(objective[j]) > 0) {
                entering = j;
                break;
            }
        }
        if (!entering) break;
        const std::size_t col = *entering;

        std::optional<std::size_t> leave;
        Scalar best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(tab[i][col]) <= 0) continue;
            Scalar ratio = rhs[i] / tab[i][col];
            if (!leave || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (!leave) break;  // unbounded direction; cannot happen in phase one
        const std::size_t r = *leave;

        const Scalar pivot = tab[r][col];
        for (Scalar& x : tab[r]) x /= pivot;
        rhs[r] /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || sgn(tab[i][col]) == 0) continue;
            const Scalar f = tab[i][col];
            for (std::size_t j = 0; j < width; ++j) {
                if (sgn(tab[r][j]) != 0) tab[i][j] -= f * tab[r][j];
            }
            rhs[i] -= f * rhs[r];
        }
        if (sgn(objective[col]) != 0) {
            const Scalar f = objective[col];
            for (std::size_t j = 0; j < width; ++j) {
                if (sgn(tab[r][j]) != 0) objective[j] -= f * tab[r][j];
            }
            objective_rhs -= f * rhs[r];
        }
        basis[r] = col;
    }
    return sgn(objective_rhs) == 0;
}

}  // namespace sweeprec::detail
