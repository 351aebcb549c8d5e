#pragma once

// Reference implementations used by the tests. None of them touches the
// library: partitions are plain weakly decreasing int vectors.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;

// p(0..n) by Euler's pentagonal recurrence.
inline std::vector<std::int64_t> partition_numbers(int n)
{
    std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        std::int64_t total = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m)
                break;
            const int sign = (k % 2 == 1) ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m)
                total += sign * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = total;
    }
    return p;
}

// Coefficients of (q;q)_inf: +-1 at generalized pentagonal numbers.
inline std::vector<std::int64_t> euler_product(int n)
{
    std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
    for (int k = -n; k <= n; ++k) {
        const long e = static_cast<long>(k) * (3 * k - 1) / 2;
        if (e >= 0 && e <= n)
            c[static_cast<std::size_t>(e)] += (k % 2 == 0) ? 1 : -1;
    }
    return c;
}

// All partitions of n via the ascending-composition generator (Kelleher's
// accel_asc), returned in weakly decreasing form.
inline std::vector<Parts> partitions(int n)
{
    std::vector<Parts> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> a(static_cast<std::size_t>(n) + 1, 0);
    int k = 1;
    int y = n - 1;
    while (k != 0) {
        int x = a[static_cast<std::size_t>(k - 1)] + 1;
        --k;
        while (2 * x <= y) {
            a[static_cast<std::size_t>(k)] = x;
            y -= x;
            ++k;
        }
        int l = k + 1;
        while (x <= y) {
            a[static_cast<std::size_t>(k)] = x;
            a[static_cast<std::size_t>(l)] = y;
            Parts p(a.begin(), a.begin() + k + 2);
            std::reverse(p.begin(), p.end());
            out.push_back(p);
            ++x;
            --y;
        }
        a[static_cast<std::size_t>(k)] = x + y;
        y = x + y - 1;
        Parts p(a.begin(), a.begin() + k + 1);
        std::reverse(p.begin(), p.end());
        out.push_back(p);
    }
    return out;
}

// Transpose of the Ferrers grid.
inline Parts transpose(const Parts& p)
{
    if (p.empty())
        return {};
    const int rows = static_cast<int>(p.size());
    const int cols = p.front();
    std::vector<std::vector<bool>> grid(static_cast<std::size_t>(rows), std::vector<bool>(static_cast<std::size_t>(cols)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < p[static_cast<std::size_t>(i)]; ++j)
            grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    Parts out;
    for (int j = 0; j < cols; ++j) {
        int height = 0;
        for (int i = 0; i < rows; ++i)
            height += grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ? 1 : 0;
        out.push_back(height);
    }
    return out;
}

inline int weight(const Parts& p)
{
    int w = 0;
    for (int v : p)
        w += v;
    return w;
}

inline int largest(const Parts& p) { return p.empty() ? 0 : p.front(); }

inline int count_of(const Parts& p, int v) { return static_cast<int>(std::count(p.begin(), p.end(), v)); }

inline bool has(const Parts& p, int v) { return count_of(p, v) > 0; }

// Direct scans of the definitions.
inline int mex(const Parts& p, int r)
{
    for (int k = 1;; ++k) {
        bool clear = true;
        for (int t = 0; t < r; ++t)
            clear = clear && !has(p, k + t);
        if (clear)
            return k;
    }
}

inline int maex(const Parts& p, int r)
{
    for (int k = largest(p) - 1; k >= r; --k) {
        bool clear = true;
        for (int t = 0; t < r; ++t)
            clear = clear && !has(p, k - t);
        if (clear)
            return k;
    }
    return 0;
}

// Zero class: no r consecutive integers below the largest part are all missing.
inline bool zero_class(const Parts& p, int r) { return mex(p, r) == largest(p) + 1; }

inline int multiples(const Parts& p, int r)
{
    return static_cast<int>(std::count_if(p.begin(), p.end(), [r](int v) { return v % r == 0; }));
}

inline int largest_repeating(const Parts& p, int r)
{
    for (int v : p)
        if (count_of(p, v) >= r)
            return v;
    return 0;
}

inline int smallest_repeating(const Parts& p, int r)
{
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        if (count_of(p, *it) >= r)
            return *it;
    return 0;
}

inline int largest_multiple_count(const Parts& p, int r)
{
    for (int v : p)
        if (v % r == 0)
            return count_of(p, v);
    return 0;
}

inline int above(const Parts& p, int v)
{
    return static_cast<int>(std::count_if(p.begin(), p.end(), [v](int x) { return x > v; }));
}

// Coefficients of [n choose m]_q by counting partitions inside an m x (n-m) box.
inline std::vector<std::int64_t> box_counts(int n, int m)
{
    const int width = n - m;
    std::vector<std::int64_t> c(static_cast<std::size_t>(m * width) + 1, 0);
    for (int w = 0; w <= m * width; ++w)
        for (const auto& p : partitions(w))
            if (static_cast<int>(p.size()) <= m && largest(p) <= width)
                ++c[static_cast<std::size_t>(w)];
    return c;
}

// Random partition of n by uniform random cuts, for property tests.
inline Parts random_partition(std::mt19937_64& rng, int n)
{
    Parts out;
    int left = n;
    while (left > 0) {
        std::uniform_int_distribution<int> pick(1, left);
        const int v = pick(rng);
        out.push_back(v);
        left -= v;
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

} // namespace oracle
