#include "rchain/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace rchain {

namespace {

void require_order(int order)
{
    if (order < 0)
        throw ContractError("series order must be >= 0, got " + std::to_string(order));
}

} // namespace

PowerSeries::PowerSeries(int order) : order_(order)
{
    require_order(order);
    coeffs_.assign(static_cast<std::size_t>(order) + 1, 0);
}

PowerSeries::PowerSeries(std::vector<Integer> coeffs, int order) : order_(order), coeffs_(std::move(coeffs))
{
    require_order(order);
    coeffs_.resize(static_cast<std::size_t>(order) + 1, 0);
}

PowerSeries PowerSeries::monomial(int exponent, Integer coeff, int order)
{
    if (exponent < 0)
        throw ContractError("negative exponent in monomial");
    PowerSeries s(order);
    if (exponent <= order)
        s.coeffs_[static_cast<std::size_t>(exponent)] = coeff;
    return s;
}

Integer PowerSeries::coeff(int n) const
{
    if (n < 0 || n > order_)
        throw std::out_of_range("coefficient q^" + std::to_string(n) + " is beyond the truncation order " +
                                std::to_string(order_));
    return coeffs_[static_cast<std::size_t>(n)];
}

PowerSeries PowerSeries::truncated(int order) const
{
    if (order > order_)
        throw ContractError("cannot raise a truncated series from order " + std::to_string(order_) + " to " +
                            std::to_string(order));
    return PowerSeries(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + order + 1), order);
}

PowerSeries PowerSeries::shifted(int k) const
{
    if (k < 0)
        throw ContractError("negative shift");
    PowerSeries out(order_);
    for (int n = k; n <= order_; ++n)
        out.coeffs_[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(n - k)];
    return out;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other)
{
    if (other.order_ < order_)
        *this = truncated(other.order_);
    for (int n = 0; n <= order_; ++n)
        coeffs_[static_cast<std::size_t>(n)] = checked_add(coeffs_[static_cast<std::size_t>(n)], other.coeffs_[static_cast<std::size_t>(n)]);
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other)
{
    if (other.order_ < order_)
        *this = truncated(other.order_);
    for (int n = 0; n <= order_; ++n)
        coeffs_[static_cast<std::size_t>(n)] = checked_sub(coeffs_[static_cast<std::size_t>(n)], other.coeffs_[static_cast<std::size_t>(n)]);
    return *this;
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& other)
{
    const int order = std::min(order_, other.order_);
    std::vector<Integer> out(static_cast<std::size_t>(order) + 1, 0);
    for (int i = 0; i <= order; ++i) {
        const Integer a = coeffs_[static_cast<std::size_t>(i)];
        if (a == 0)
            continue;
        for (int j = 0; i + j <= order; ++j) {
            const Integer b = other.coeffs_[static_cast<std::size_t>(j)];
            if (b != 0)
                out[static_cast<std::size_t>(i + j)] = checked_add(out[static_cast<std::size_t>(i + j)], checked_mul(a, b));
        }
    }
    order_ = order;
    coeffs_ = std::move(out);
    return *this;
}

PowerSeries PowerSeries::operator-() const { return scaled(-1); }

PowerSeries PowerSeries::scaled(Integer factor) const
{
    PowerSeries out(order_);
    for (int n = 0; n <= order_; ++n)
        out.coeffs_[static_cast<std::size_t>(n)] = checked_mul(coeffs_[static_cast<std::size_t>(n)], factor);
    return out;
}

PowerSeries invert(const PowerSeries& a)
{
    const Integer c0 = a.coeff(0);
    if (c0 != 1 && c0 != -1)
        throw std::domain_error("series with constant term " + std::to_string(c0) +
                                " has no inverse over the integers");
    std::vector<Integer> b(static_cast<std::size_t>(a.order()) + 1, 0);
    b[0] = c0; // 1/c0 == c0 for c0 = +-1
    for (int n = 1; n <= a.order(); ++n) {
        Integer acc = 0;
        for (int k = 1; k <= n; ++k)
            acc = checked_add(acc, checked_mul(a.coeff(k), b[static_cast<std::size_t>(n - k)]));
        b[static_cast<std::size_t>(n)] = checked_mul(-c0, acc);
    }
    return PowerSeries(std::move(b), a.order());
}

PowerSeries divide(const PowerSeries& a, const PowerSeries& b) { return a * invert(b); }

std::string to_string(const PowerSeries& s)
{
    std::string out;
    for (int n = 0; n <= s.order(); ++n) {
        if (n > 0)
            out += " + ";
        out += std::to_string(s.coeff(n));
        if (n == 1)
            out += "*q";
        else if (n > 1)
            out += "*q^" + std::to_string(n);
    }
    return out;
}

namespace {

// s * (1 - sign q^e), in place.
void times_binomial(std::vector<Integer>& s, int sign, int e)
{
    const int order = static_cast<int>(s.size()) - 1;
    if (e > order)
        return;
    for (int n = order; n >= e; --n)
        s[static_cast<std::size_t>(n)] = checked_sub(s[static_cast<std::size_t>(n)], checked_mul(sign, s[static_cast<std::size_t>(n - e)]));
}

// s / (1 - sign q^e) for e >= 1, in place (geometric series).
void over_binomial(std::vector<Integer>& s, int sign, int e)
{
    const int order = static_cast<int>(s.size()) - 1;
    for (int n = e; n <= order; ++n)
        s[static_cast<std::size_t>(n)] = checked_add(s[static_cast<std::size_t>(n)], checked_mul(sign, s[static_cast<std::size_t>(n - e)]));
}

PowerSeries over_binomial(PowerSeries s, int e)
{
    auto c = s.coeffs();
    over_binomial(c, 1, e);
    return PowerSeries(std::move(c), s.order());
}

void require_step(int step)
{
    if (step < 1)
        throw ContractError("Pochhammer step must be >= 1, got " + std::to_string(step));
}

void require_monomial(QMonomial a)
{
    if (a.exponent < 0 || (a.sign != 1 && a.sign != -1))
        throw ContractError("Pochhammer base must be +-q^m with m >= 0");
}

// 1/(q^start; q^step)_terms, or the infinite product when terms < 0.
PowerSeries inverse_pochhammer(int start, int step, int terms, int order)
{
    std::vector<Integer> c(static_cast<std::size_t>(order) + 1, 0);
    c[0] = 1;
    for (int i = 0; terms < 0 || i < terms; ++i) {
        const int e = start + step * i;
        if (e > order)
            break;
        over_binomial(c, 1, e);
    }
    return PowerSeries(std::move(c), order);
}

} // namespace

PowerSeries q_pochhammer(QMonomial a, int step, int terms, int order)
{
    require_order(order);
    require_step(step);
    require_monomial(a);
    if (terms < 0)
        throw ContractError("Pochhammer length must be >= 0");
    std::vector<Integer> c(static_cast<std::size_t>(order) + 1, 0);
    c[0] = 1;
    for (int i = 0; i < terms; ++i) {
        const int e = a.exponent + step * i;
        if (e > order)
            break;
        times_binomial(c, a.sign, e);
    }
    return PowerSeries(std::move(c), order);
}

PowerSeries q_pochhammer_inf(QMonomial a, int step, int order)
{
    require_order(order);
    require_step(step);
    require_monomial(a);
    // exponent + step*i > order for every i >= terms
    const int terms = a.exponent > order ? 0 : (order - a.exponent) / step + 1;
    return q_pochhammer(a, step, terms, order);
}

PowerSeries poch_finite(int m, int k, int n, int order) { return q_pochhammer({1, m}, k, n, order); }

PowerSeries poch_inf(int m, int k, int order) { return q_pochhammer_inf({1, m}, k, order); }

PowerSeries gauss_binomial(int n, int m)
{
    if (m < 0 || n < m)
        throw ContractError("gauss_binomial needs n >= m >= 0, got n=" + std::to_string(n) + " m=" + std::to_string(m));
    const int top = n * (n + 1) / 2;
    const int degree = m * (n - m);
    const PowerSeries numerator = poch_finite(1, 1, n, top);
    const PowerSeries denominator = poch_finite(1, 1, m, top) * poch_finite(1, 1, n - m, top);
    const PowerSeries quotient = divide(numerator, denominator);
    for (int e = degree + 1; e <= top; ++e)
        if (quotient.coeff(e) != 0)
            throw std::logic_error("Gaussian binomial quotient has a term beyond its degree");
    if (quotient * denominator != numerator)
        throw std::logic_error("Gaussian binomial division left a remainder");
    return quotient.truncated(degree);
}

QBinomialSides q_binomial_sides(std::optional<QMonomial> a, int z_exponent, int order)
{
    require_order(order);
    if (z_exponent < 1)
        throw ContractError("q-binomial check needs z = q^d with d >= 1");
    if (a)
        require_monomial(*a);

    PowerSeries lhs(order);
    for (int n = 0; n * z_exponent <= order; ++n) {
        PowerSeries numer = a ? q_pochhammer(*a, 1, n, order) : PowerSeries::one(order);
        lhs += (numer * inverse_pochhammer(1, 1, n, order)).shifted(n * z_exponent);
    }

    PowerSeries rhs = a ? q_pochhammer_inf({a->sign, a->exponent + z_exponent}, 1, order) : PowerSeries::one(order);
    rhs = divide(rhs, q_pochhammer_inf({1, z_exponent}, 1, order));
    return {std::move(lhs), std::move(rhs)};
}

PowerSeries gf_partitions(int order) { return invert(poch_inf(1, 1, order)); }

PowerSeries gf_sigma_mex(int order)
{
    const PowerSeries distinct = q_pochhammer_inf({-1, 1}, 1, order);
    return distinct * distinct;
}

PowerSeries gf_S(int modulus, int order)
{
    require_positive_r(modulus, "gf_S");
    return divide(poch_inf(modulus, modulus, order), poch_inf(1, 1, order));
}

namespace {

// 1 + sum_{n>=1} q^n (1 - q^{rn}) / ((1-q^n)(q^{r+1};q^{r+1})_n).
PowerSeries mex_chain_bracket(int r, int order)
{
    const int s = r + 1;
    PowerSeries total = PowerSeries::one(order);
    // running 1/(q^s;q^s)_n
    PowerSeries inv_poch = PowerSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        inv_poch = over_binomial(inv_poch, s * n);
        // q^n (1 - q^{rn}) / (1 - q^n) = q^n + q^{2n} + ... + q^{rn}
        PowerSeries head(order);
        for (int t = 1; t <= r && t * n <= order; ++t)
            head += PowerSeries::monomial(t * n, 1, order);
        total += head * inv_poch;
    }
    return total;
}

} // namespace

PowerSeries gf_M(int modulus, int order)
{
    require_positive_r(modulus, "gf_M");
    return mex_chain_bracket(modulus - 1, order);
}

PowerSeries gf_W(int modulus, int order)
{
    require_positive_r(modulus, "gf_W");
    const int s = modulus;
    PowerSeries sum(order);
    for (int n = 1; n <= order; ++n)
        sum += over_binomial(poch_finite(s, s, n, order).shifted(n), n);
    return PowerSeries::one(order) + divide(sum, poch_inf(s, s, order));
}

PowerSeries gf_mex_sum_shifted_rhs(int r, int order)
{
    require_positive_r(r, "gf_mex_sum_shifted_rhs");
    const int s = r + 1;
    PowerSeries residues(order);
    for (int m = 1; m <= r; ++m)
        residues += inverse_pochhammer(m, s, -1, order);
    return gf_S(s, order) * residues;
}

PowerSeries gf_mexr3_rhs(int r, int order)
{
    require_positive_r(r, "gf_mexr3_rhs");
    return gf_mex_sum_shifted_rhs(r, order) - gf_partitions(order).scaled(r - 1);
}

PowerSeries gf_mexr2_rhs(int r, int order)
{
    require_positive_r(r, "gf_mexr2_rhs");
    return gf_S(r + 1, order) * mex_chain_bracket(r, order);
}

PowerSeries gf_max1_rhs(int order)
{
    PowerSeries sum(order);
    for (int n = 1; n <= order; ++n)
        sum += poch_finite(2, 2, n - 1, order).shifted(n);
    return sum * gf_partitions(order);
}

PowerSeries gf_maxr1_rhs(int r, int order)
{
    require_positive_r(r, "gf_maxr1_rhs");
    const int s = r + 1;
    PowerSeries sum(order);
    for (int n = 1; n <= order; ++n)
        sum += over_binomial(poch_finite(s, s, n, order).shifted(n), n);
    return gf_S(s, order) + sum * gf_partitions(order);
}

PowerSeries gf_maxr1_product(int r, int order)
{
    require_positive_r(r, "gf_maxr1_product");
    return gf_S(r + 1, order) * gf_W(r + 1, order);
}

PowerSeries gf_sigma_L(int order)
{
    PowerSeries sum(order);
    for (int n = 1; n <= order; ++n)
        sum += over_binomial(PowerSeries::monomial(n, 1, order), n);
    return sum * gf_partitions(order);
}

PowerSeries gf_j_parts(int r, int j, int order)
{
    if (r < 2 || j < 1)
        throw ContractError("gf_j_parts needs r >= 2 and j >= 1");
    require_order(order);
    if (checked_mul(j, r) > order)
        return PowerSeries(order);
    PowerSeries out = over_binomial(PowerSeries::monomial(j * r, 1, order), j);
    out *= inverse_pochhammer(j + 1, 1, -1, order);
    for (int n = 1; n < j; ++n) {
        PowerSeries factor(order);
        for (int t = 0; t < r && t * n <= order; ++t)
            factor += PowerSeries::monomial(t * n, 1, order);
        out *= factor;
    }
    return out;
}

// Bivariate series.

BivariateSeries::BivariateSeries(int z_order, int q_order) : z_order_(z_order), q_order_(q_order)
{
    if (z_order < 0 || q_order < 0)
        throw ContractError("bivariate orders must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(z_order + 1) * static_cast<std::size_t>(q_order + 1), 0);
}

BivariateSeries BivariateSeries::one(int z_order, int q_order)
{
    BivariateSeries s(z_order, q_order);
    s.coeffs_[0] = 1;
    return s;
}

BivariateSeries BivariateSeries::from_q_series(const PowerSeries& s, int z_exponent, int z_order)
{
    BivariateSeries out(z_order, s.order());
    if (z_exponent < 0)
        throw ContractError("negative z exponent");
    if (z_exponent <= z_order)
        for (int n = 0; n <= s.order(); ++n)
            out.coeffs_[out.index(z_exponent, n)] = s.coeff(n);
    return out;
}

Integer BivariateSeries::coeff(int m, int n) const
{
    if (m < 0 || m > z_order_ || n < 0 || n > q_order_)
        throw std::out_of_range("coefficient z^" + std::to_string(m) + " q^" + std::to_string(n) +
                                " is beyond the truncation box");
    return coeffs_[index(m, n)];
}

void BivariateSeries::add_term(int m, int n, Integer value)
{
    if (m < 0 || n < 0 || m > z_order_ || n > q_order_)
        return;
    coeffs_[index(m, n)] = checked_add(coeffs_[index(m, n)], value);
}

namespace {

void require_same_box(const BivariateSeries& a, const BivariateSeries& b)
{
    if (a.z_order() != b.z_order() || a.q_order() != b.q_order())
        throw ContractError("bivariate operands have different truncation boxes");
}

} // namespace

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& other)
{
    require_same_box(*this, other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] = checked_add(coeffs_[k], other.coeffs_[k]);
    return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& other)
{
    require_same_box(*this, other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] = checked_sub(coeffs_[k], other.coeffs_[k]);
    return *this;
}

BivariateSeries& BivariateSeries::operator*=(const BivariateSeries& other)
{
    require_same_box(*this, other);
    BivariateSeries out(z_order_, q_order_);
    for (int m1 = 0; m1 <= z_order_; ++m1)
        for (int n1 = 0; n1 <= q_order_; ++n1) {
            const Integer a = coeffs_[index(m1, n1)];
            if (a == 0)
                continue;
            for (int m2 = 0; m1 + m2 <= z_order_; ++m2)
                for (int n2 = 0; n1 + n2 <= q_order_; ++n2) {
                    const Integer b = other.coeffs_[index(m2, n2)];
                    if (b != 0)
                        out.coeffs_[index(m1 + m2, n1 + n2)] =
                            checked_add(out.coeffs_[index(m1 + m2, n1 + n2)], checked_mul(a, b));
                }
        }
    *this = std::move(out);
    return *this;
}

PowerSeries BivariateSeries::at_z_one() const
{
    PowerSeries out(q_order_);
    for (int m = 0; m <= z_order_; ++m) {
        std::vector<Integer> row(static_cast<std::size_t>(q_order_) + 1);
        for (int n = 0; n <= q_order_; ++n)
            row[static_cast<std::size_t>(n)] = coeffs_[index(m, n)];
        out += PowerSeries(std::move(row), q_order_);
    }
    return out;
}

BivariateSeries invert(const BivariateSeries& a)
{
    const Integer c0 = a.coeff(0, 0);
    if (c0 != 1 && c0 != -1)
        throw std::domain_error("bivariate series with constant term " + std::to_string(c0) +
                                " has no inverse over the integers");
    BivariateSeries b(a.z_order(), a.q_order());
    for (int m = 0; m <= a.z_order(); ++m)
        for (int n = 0; n <= a.q_order(); ++n) {
            if (m == 0 && n == 0) {
                b.add_term(0, 0, c0);
                continue;
            }
            Integer acc = 0;
            for (int i = 0; i <= m; ++i)
                for (int j = 0; j <= n; ++j) {
                    if (i == 0 && j == 0)
                        continue;
                    const Integer ai = a.coeff(i, j);
                    if (ai != 0)
                        acc = checked_add(acc, checked_mul(ai, b.coeff(m - i, n - j)));
                }
            b.add_term(m, n, checked_mul(-c0, acc));
        }
    return b;
}

namespace {

// p *= (1 - z q^e)
void times_one_minus_zq(BivariateSeries& p, int e)
{
    for (int m = p.z_order(); m >= 1; --m)
        for (int n = p.q_order(); n >= e; --n)
            p.add_term(m, n, -p.coeff(m - 1, n - e));
}

BivariateSeries times_q_series(const BivariateSeries& p, const PowerSeries& s)
{
    BivariateSeries out(p.z_order(), p.q_order());
    for (int m = 0; m <= p.z_order(); ++m)
        for (int a = 0; a <= p.q_order(); ++a) {
            const Integer c = p.coeff(m, a);
            if (c == 0)
                continue;
            for (int b = 0; a + b <= p.q_order() && b <= s.order(); ++b)
                if (s.coeff(b) != 0)
                    out.add_term(m, a + b, checked_mul(c, s.coeff(b)));
        }
    return out;
}

} // namespace

BivariateSeries przq(int r, int z_order, int q_order)
{
    require_positive_r(r, "przq");
    const int s = r + 1;
    BivariateSeries total(z_order, q_order);
    const int last = q_order / s - 1; // largest n with s(n+1) <= q_order
    if (last < 0)
        return total;

    // product = (z q^{n+1}; q)_inf, grown one factor at a time as n decreases;
    // factors with exponent > q_order are 1 inside the box.
    BivariateSeries product = BivariateSeries::one(z_order, q_order);
    for (int i = q_order; i > last + 1; --i)
        times_one_minus_zq(product, i);

    for (int n = last; n >= 0; --n) {
        times_one_minus_zq(product, n + 1);
        PowerSeries coefficient = poch_finite(s, s, n, q_order).shifted(s * (n + 1));
        coefficient *= inverse_pochhammer(1, 1, n, q_order);
        total += times_q_series(invert(product), coefficient);
    }

    // multiply by z^r
    BivariateSeries out(z_order, q_order);
    for (int m = 0; m + r <= z_order; ++m)
        for (int n = 0; n <= q_order; ++n)
            out.add_term(m + r, n, total.coeff(m, n));
    return out;
}

BivariateSeries przq_double_sum(int r, int z_order, int q_order)
{
    require_positive_r(r, "przq_double_sum");
    const int s = r + 1;
    BivariateSeries out(z_order, q_order);
    for (int m = r; m <= z_order; ++m) {
        const PowerSeries lower = inverse_pochhammer(1, 1, m - r, q_order);
        for (int l = 1; (m + 1) * l <= q_order; ++l) {
            PowerSeries term = poch_finite(s, s, l - 1, q_order).shifted((m + 1) * l);
            term *= inverse_pochhammer(1, 1, l - 1, q_order);
            term *= lower;
            out += BivariateSeries::from_q_series(term, m, z_order);
        }
    }
    return out;
}

} // namespace rchain
