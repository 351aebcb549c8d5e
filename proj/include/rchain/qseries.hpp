#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rchain/checked.hpp"

namespace rchain {

/// Truncated formal power series c_0 + c_1 q + ... + c_N q^N with exact
/// integer coefficients. Binary operations truncate to the smaller order.
class PowerSeries {
public:
    /// The zero series of the given order.
    explicit PowerSeries(int order);
    PowerSeries(std::vector<Integer> coeffs, int order);

    static PowerSeries one(int order) { return monomial(0, 1, order); }
    /// coeff * q^exponent; exponents beyond order vanish.
    static PowerSeries monomial(int exponent, Integer coeff, int order);

    int order() const noexcept { return order_; }
    /// Throws std::out_of_range for n outside 0..order.
    Integer coeff(int n) const;
    Integer operator[](int n) const { return coeff(n); }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

    /// Same coefficients, lower order. Raising the order is not allowed.
    PowerSeries truncated(int order) const;
    /// Multiplies by q^k (k >= 0).
    PowerSeries shifted(int k) const;

    PowerSeries& operator+=(const PowerSeries& other);
    PowerSeries& operator-=(const PowerSeries& other);
    PowerSeries& operator*=(const PowerSeries& other);
    PowerSeries operator-() const;
    /// Scalar multiple.
    PowerSeries scaled(Integer factor) const;

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(PowerSeries a, const PowerSeries& b) { return a *= b; }
    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    int order_;
    std::vector<Integer> coeffs_;
};

/// Multiplicative inverse; the constant term must be +1 or -1.
/// Throws std::domain_error otherwise.
PowerSeries invert(const PowerSeries& a);
/// a * invert(b).
PowerSeries divide(const PowerSeries& a, const PowerSeries& b);

/// `c0 + c1*q + c2*q^2 + ...` with every coefficient 0..N written out.
std::string to_string(const PowerSeries& s);

/// a = sign * q^exponent, the only Pochhammer bases needed here.
struct QMonomial {
    int sign = 1;
    int exponent = 0;
};

/// (a; q^step)_terms = prod_{i<terms} (1 - a q^{step*i}) to the given order.
PowerSeries q_pochhammer(QMonomial a, int step, int terms, int order);
/// (a; q^step)_infinity; factors stop once their exponent exceeds the order.
PowerSeries q_pochhammer_inf(QMonomial a, int step, int order);

/// (q^m; q^k)_n.
PowerSeries poch_finite(int m, int k, int n, int order);
/// (q^m; q^k)_infinity.
PowerSeries poch_inf(int m, int k, int order);

/// Gaussian polynomial [n choose m]_q, returned at order m(n-m) (its degree).
/// Computed as an exact polynomial quotient; throws std::logic_error if the
/// division leaves a remainder.
PowerSeries gauss_binomial(int n, int m);

/// Both sides of sum_n (a;q)_n/(q;q)_n z^n = (az;q)_inf/(z;q)_inf with
/// z = q^z_exponent (z_exponent >= 1) and a = +-q^c, or a = 0 when `a` is empty.
struct QBinomialSides {
    PowerSeries lhs;
    PowerSeries rhs;
    bool agree() const { return lhs == rhs; }
};
QBinomialSides q_binomial_sides(std::optional<QMonomial> a, int z_exponent, int order);

// Generating functions. r is the chain length (r >= 1) unless a modulus is
// named explicitly.

/// (-q;q)_inf^2.
PowerSeries gf_sigma_mex(int order);
/// -(r-1)/(q;q)_inf + (q^{r+1};q^{r+1})_inf/(q;q)_inf * sum_{m=1}^r 1/(q^m;q^{r+1})_inf.
PowerSeries gf_mexr3_rhs(int r, int order);
/// gf_mexr3_rhs + (r-1)/(q;q)_inf, built from the product side directly.
PowerSeries gf_mex_sum_shifted_rhs(int r, int order);
/// (q^{r+1};q^{r+1})_inf/(q;q)_inf * (1 + sum_{n>=1} q^n (1-q^{rn}) / ((1-q^n)(q^{r+1};q^{r+1})_n)).
PowerSeries gf_mexr2_rhs(int r, int order);
/// 1/(q;q)_inf * sum_{n>=1} q^n (q^2;q^2)_{n-1}.
PowerSeries gf_max1_rhs(int order);
/// (q^{r+1};q^{r+1})_inf/(q;q)_inf + 1/(q;q)_inf * sum_{n>=1} q^n (q^{r+1};q^{r+1})_n / (1-q^n).
PowerSeries gf_maxr1_rhs(int r, int order);
/// gf_S(r+1) * gf_W(r+1).
PowerSeries gf_maxr1_product(int r, int order);

/// Partitions with every multiplicity below `modulus`: (q^s;q^s)_inf/(q;q)_inf.
PowerSeries gf_S(int modulus, int order);
/// Partitions where the largest part's multiplicity is not divisible by
/// `modulus` and every other multiplicity is. The empty partition counts once.
PowerSeries gf_M(int modulus, int order);
/// Partitions where only the smallest part may have multiplicity not divisible by `modulus`.
PowerSeries gf_W(int modulus, int order);
/// Sum of largest parts: 1/(q;q)_inf * sum_{n>=1} q^n/(1-q^n).
PowerSeries gf_sigma_L(int order);
/// 1/(q;q)_inf.
PowerSeries gf_partitions(int order);
/// q^{jr}/(1-q^j) * 1/(q^{j+1};q)_inf * prod_{n=1}^{j-1} (1 + q^n + ... + q^{n(r-1)}); r >= 2, j >= 1.
PowerSeries gf_j_parts(int r, int j, int order);

/// Truncated series in z and q with exact integer coefficients c[m][n],
/// 0 <= m <= z_order, 0 <= n <= q_order.
class BivariateSeries {
public:
    BivariateSeries(int z_order, int q_order);

    static BivariateSeries one(int z_order, int q_order);
    /// z^z_exponent * s, truncated.
    static BivariateSeries from_q_series(const PowerSeries& s, int z_exponent, int z_order);

    int z_order() const noexcept { return z_order_; }
    int q_order() const noexcept { return q_order_; }
    /// Throws std::out_of_range outside the truncation box.
    Integer coeff(int m, int n) const;
    /// Adds to c[m][n]; silently drops terms outside the box.
    void add_term(int m, int n, Integer value);

    BivariateSeries& operator+=(const BivariateSeries& other);
    BivariateSeries& operator-=(const BivariateSeries& other);
    BivariateSeries& operator*=(const BivariateSeries& other);
    friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }
    friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) { return a -= b; }
    friend BivariateSeries operator*(BivariateSeries a, const BivariateSeries& b) { return a *= b; }
    friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

    /// Value at z = 1 as a series in q. Exact only when every dropped z^m
    /// term (m > z_order) has q-degree above q_order.
    PowerSeries at_z_one() const;

private:
    std::size_t index(int m, int n) const
    {
        return static_cast<std::size_t>(m) * static_cast<std::size_t>(q_order_ + 1) + static_cast<std::size_t>(n);
    }

    int z_order_;
    int q_order_;
    std::vector<Integer> coeffs_;
};

/// Inverse of a bivariate series with constant term +-1.
BivariateSeries invert(const BivariateSeries& a);

/// Generating function sum_{lambda in P_r^+} z^{maex_r(lambda)} q^{|lambda|}
/// from the closed form z^r sum_n q^{(r+1)(n+1)} (q^{r+1};q^{r+1})_n / ((q;q)_n (zq^{n+1};q)_inf),
/// with 1/(zq^{n+1};q)_inf obtained by inverting the bivariate product.
BivariateSeries przq(int r, int z_order, int q_order);
/// The same series from its double-sum form
/// sum_{m>=r} sum_{l>=1} z^m q^{(m+1)l} / (q;q)_{m-r} * (q^{r+1};q^{r+1})_{l-1} / (q;q)_{l-1}.
BivariateSeries przq_double_sum(int r, int z_order, int q_order);

} // namespace rchain
