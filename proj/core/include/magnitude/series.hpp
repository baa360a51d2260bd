#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "magnitude/graph.hpp"

namespace mag {

using Int = boost::multiprecision::cpp_int;

/// Truncated integer power series: coefficients c_0..c_N of an element
/// of Z[[q]] modulo q^{N+1}. Operands must share the truncation order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {}
    TruncatedSeries(int order, std::vector<Int> coeffs);

    static TruncatedSeries constant(int order, Int c);
    static TruncatedSeries monomial(int order, int degree, Int c);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Int& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    Int& coeff(int i) { return coeffs_[static_cast<std::size_t>(i)]; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Int> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
/// Cauchy product truncated at the shared order; throws on order mismatch.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// Multiplicative inverse; requires constant term ±1.
TruncatedSeries series_invert(const TruncatedSeries& a);

/// Square matrix over the truncated series ring, all entries sharing one order.
class SeriesMatrix {
public:
    SeriesMatrix(int n, int order)
        : n_(n), order_(order),
          data_(static_cast<std::size_t>(n) * n, TruncatedSeries(order)) {}

    int size() const { return n_; }
    int order() const { return order_; }
    const TruncatedSeries& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    TruncatedSeries& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }

private:
    int n_;
    int order_;
    std::vector<TruncatedSeries> data_;
};

/// Zeta matrix Z(u,v) = q^{d(u,v)}, with q^inf = 0.
SeriesMatrix zeta_matrix(const Graph& g, int order);

/// Mag(g) truncated at `order`: the sum of all entries of the inverse
/// zeta matrix, computed by exact elimination with unit diagonal pivots.
TruncatedSeries magnitude_by_inversion(const Graph& g, int order);

/// Real magnitude function at q = e^{-t}; nullopt marks a numerically
/// singular sample (pivot below 1e-10), never a crash.
std::vector<std::optional<double>> magnitude_function_samples(const Graph& g,
                                                              const std::vector<double>& t_values);

}  // namespace mag
