#include "dfmax/krawtchouk.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dfmax {

namespace {

using Float50 = boost::multiprecision::cpp_bin_float_50;

void require_range(int k, int n, int x) {
    if (n < 0) throw std::invalid_argument("kr: n must be >= 0");
    if (k < 0 || k > n) throw std::out_of_range("kr: k = " + std::to_string(k) + " outside [0, n]");
    if (x < 0 || x > n) throw std::out_of_range("kr: x = " + std::to_string(x) + " outside [0, n]");
}

BigInt kr_numerator(int k, int n, int x) {
    BigInt s;
    for (int j = 0; j <= k; ++j) {
        BigInt t = binomial(x, j) * binomial(n - x, k - j);
        if (j % 2) s -= t;
        else s += t;
    }
    return s;
}

Float50 to_float50(const Rational& q) {
    return Float50(q.get_num().get_str()) / Float50(q.get_den().get_str());
}

} // namespace

Rational kr(int k, int n, int x) {
    require_range(k, n, x);
    Rational q(kr_numerator(k, n, x), binomial(n, k));
    q.canonicalize();
    return q;
}

std::vector<Rational> kr_row(int k, int n) {
    std::vector<Rational> row;
    row.reserve(static_cast<size_t>(n) + 1);
    for (int x = 0; x <= n; ++x) row.push_back(kr(k, n, x));
    return row;
}

double krawtchouk_decay_constant() { return -2.0 * std::log(0.93); }

KrawtchoukPropertyReport check_krawtchouk_properties(int n_max) {
    if (n_max < 1) throw std::invalid_argument("check_krawtchouk_properties: n_max must be >= 1");
    KrawtchoukPropertyReport rep;
    rep.n_max = n_max;
    const Float50 c = -2 * boost::multiprecision::log(Float50("0.93"));

    std::vector<std::vector<Rational>> prev2;  // table for n - 2
    std::vector<std::vector<Rational>> prev1;
    for (int n = 0; n <= n_max; ++n) {
        std::vector<std::vector<Rational>> table;
        for (int k = 0; k <= n; ++k) table.push_back(kr_row(k, n));

        for (int k = 0; k <= n; ++k) {
            for (int x = 0; x <= n; ++x) {
                ++rep.symmetry_checked;
                if (table[k][x] != table[x][k]) ++rep.symmetry_violations;
                ++rep.reflection_checked;
                Rational expect = (k % 2) ? Rational(-table[k][x]) : table[k][x];
                if (table[k][n - x] != expect) ++rep.reflection_violations;

                if (n >= 1 && 2 * k <= n && 2 * x <= n) {
                    ++rep.bound_checked;
                    Float50 lhs = boost::multiprecision::abs(to_float50(table[k][x]));
                    Float50 rhs = boost::multiprecision::exp(-c * k * x / n);
                    double ratio = static_cast<double>(lhs / rhs);
                    rep.bound_worst_ratio = std::max(rep.bound_worst_ratio, ratio);
                    if (k > 0 && x > 0) {
                        rep.bound_worst_ratio_interior = std::max(rep.bound_worst_ratio_interior, ratio);
                    }
                    if (lhs > rhs) ++rep.bound_violations;
                }
            }
        }

        // kr_{k+2}(x) - kr_k(x) = -4 x (n - x) / (n (n-1)) kr_k^{(n-2)}(x - 1)
        if (n >= 2) {
            for (int k = 0; k + 2 <= n; ++k) {
                for (int x = 0; x <= n; ++x) {
                    ++rep.difference_checked;
                    Rational lhs = table[k + 2][x] - table[k][x];
                    Rational rhs;
                    if (x > 0 && x < n) {
                        Rational scale(-4 * x * (n - x), n * (n - 1));
                        scale.canonicalize();
                        rhs = scale * prev2[k][x - 1];
                    }
                    if (lhs != rhs) ++rep.difference_violations;
                }
            }
        }
        prev2 = std::move(prev1);
        prev1 = std::move(table);
    }
    return rep;
}

} // namespace dfmax
