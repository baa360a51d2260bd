#include "magnitude/series.hpp"

#include <cmath>
#include <stdexcept>

namespace mag {

TruncatedSeries::TruncatedSeries(int order, std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != order + 1)
        throw std::invalid_argument("TruncatedSeries: coefficient count must be order+1");
}

TruncatedSeries TruncatedSeries::constant(int order, Int c) {
    TruncatedSeries s(order);
    s.coeff(0) = std::move(c);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int order, int degree, Int c) {
    TruncatedSeries s(order);
    if (degree <= order) s.coeff(degree) = std::move(c);
    return s;
}

bool TruncatedSeries::is_zero() const {
    for (const Int& c : coeffs_)
        if (c != 0) return false;
    return true;
}

namespace {
void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series: truncation order mismatch");
}
}  // namespace

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) r.coeff(i) = a.coeff(i) + b.coeff(i);
    return r;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) r.coeff(i) = a.coeff(i) - b.coeff(i);
    return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; i + j <= a.order(); ++j) {
            if (b.coeff(j) == 0) continue;
            r.coeff(i + j) += a.coeff(i) * b.coeff(j);
        }
    }
    return r;
}

TruncatedSeries series_invert(const TruncatedSeries& a) {
    const Int& c0 = a.coeff(0);
    if (c0 != 1 && c0 != -1)
        throw std::invalid_argument("series_invert: constant term must be a unit (+-1)");
    // b_0 = 1/c_0; b_n = -(1/c_0) * sum_{i=1..n} a_i b_{n-i}
    TruncatedSeries b(a.order());
    b.coeff(0) = c0;  // c0 is its own inverse
    for (int n = 1; n <= a.order(); ++n) {
        Int acc = 0;
        for (int i = 1; i <= n; ++i) acc += a.coeff(i) * b.coeff(n - i);
        b.coeff(n) = -acc * c0;
    }
    return b;
}

SeriesMatrix zeta_matrix(const Graph& g, int order) {
    const int n = g.vertex_count();
    SeriesMatrix z(n, order);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            ExtDistance d = g.distance(u, v);
            if (d.is_finite() && d.value() <= order)
                z(u, v).coeff(static_cast<int>(d.value())) = 1;
            // q^inf = 0; entries beyond the truncation order vanish too.
        }
    return z;
}

TruncatedSeries magnitude_by_inversion(const Graph& g, int order) {
    const int n = g.vertex_count();
    SeriesMatrix z = zeta_matrix(g, order);
    // Solve Z w = 1 (all-ones column); Mag = sum of w. Diagonal pivots
    // keep constant term 1 throughout, so no pivot search is needed.
    std::vector<TruncatedSeries> rhs(static_cast<std::size_t>(n),
                                     TruncatedSeries::constant(order, 1));
    for (int col = 0; col < n; ++col) {
        TruncatedSeries inv = series_invert(z(col, col));
        for (int row = 0; row < n; ++row) {
            if (row == col || z(row, col).is_zero()) continue;
            TruncatedSeries factor = series_mul(z(row, col), inv);
            for (int j = col; j < n; ++j)
                z(row, j) = series_sub(z(row, j), series_mul(factor, z(col, j)));
            rhs[static_cast<std::size_t>(row)] =
                series_sub(rhs[static_cast<std::size_t>(row)],
                           series_mul(factor, rhs[static_cast<std::size_t>(col)]));
        }
    }
    TruncatedSeries mag(order);
    for (int row = 0; row < n; ++row)
        mag = series_add(mag, series_mul(rhs[static_cast<std::size_t>(row)],
                                         series_invert(z(row, row))));
    return mag;
}

std::vector<std::optional<double>> magnitude_function_samples(const Graph& g,
                                                              const std::vector<double>& t_values) {
    const int n = g.vertex_count();
    std::vector<std::optional<double>> out;
    out.reserve(t_values.size());
    constexpr double kSingular = 1e-10;
    for (double t : t_values) {
        if (!(t > 0)) throw std::invalid_argument("magnitude_function_samples: t must be > 0");
        // Dense [e^{-t d(u,v)}]; solve A w = 1 with partial pivoting.
        std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
        std::vector<double> rhs(static_cast<std::size_t>(n), 1.0);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v) {
                ExtDistance d = g.distance(u, v);
                if (d.is_finite()) a[static_cast<std::size_t>(u) * n + v] =
                    std::exp(-t * static_cast<double>(d.value()));
            }
        bool singular = false;
        for (int col = 0; col < n && !singular; ++col) {
            int piv = col;
            for (int r = col + 1; r < n; ++r)
                if (std::abs(a[static_cast<std::size_t>(r) * n + col]) >
                    std::abs(a[static_cast<std::size_t>(piv) * n + col]))
                    piv = r;
            if (std::abs(a[static_cast<std::size_t>(piv) * n + col]) < kSingular) {
                singular = true;
                break;
            }
            if (piv != col) {
                for (int j = 0; j < n; ++j)
                    std::swap(a[static_cast<std::size_t>(piv) * n + j],
                              a[static_cast<std::size_t>(col) * n + j]);
                std::swap(rhs[static_cast<std::size_t>(piv)], rhs[static_cast<std::size_t>(col)]);
            }
            for (int r = 0; r < n; ++r) {
                if (r == col) continue;
                double f = a[static_cast<std::size_t>(r) * n + col] /
                           a[static_cast<std::size_t>(col) * n + col];
                if (f == 0.0) continue;
                for (int j = col; j < n; ++j)
                    a[static_cast<std::size_t>(r) * n + j] -=
                        f * a[static_cast<std::size_t>(col) * n + j];
                rhs[static_cast<std::size_t>(r)] -= f * rhs[static_cast<std::size_t>(col)];
            }
        }
        if (singular) {
            out.push_back(std::nullopt);
            continue;
        }
        double sum = 0.0;
        for (int r = 0; r < n; ++r)
            sum += rhs[static_cast<std::size_t>(r)] / a[static_cast<std::size_t>(r) * n + r];
        out.push_back(sum);
    }
    return out;
}

}  // namespace mag
