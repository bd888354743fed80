#include "dfmax/formal_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace dfmax {

FormalSeries::FormalSeries(int order) : c_(static_cast<size_t>(std::max(order, 0))) {}

FormalSeries::FormalSeries(std::vector<Rational> coeffs, int order) : c_(std::move(coeffs)) {
    c_.resize(static_cast<size_t>(std::max(order, 0)));
}

FormalSeries FormalSeries::constant(const Rational& c, int order) {
    FormalSeries f(order);
    if (order > 0) f[0] = c;
    return f;
}

FormalSeries FormalSeries::variable(int order) {
    FormalSeries f(order);
    if (order > 1) f[1] = 1;
    return f;
}

FormalSeries FormalSeries::truncated(int order) const {
    return FormalSeries(c_, std::min(order, this->order()));
}

FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
    FormalSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k < r.order(); ++k) r[k] = a[k] + b[k];
    return r;
}

FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) {
    FormalSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k < r.order(); ++k) r[k] = a[k] - b[k];
    return r;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
    FormalSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i < r.order(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (int j = 0; i + j < r.order(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

FormalSeries operator*(const Rational& s, const FormalSeries& a) {
    FormalSeries r = a;
    for (int k = 0; k < r.order(); ++k) r[k] *= s;
    return r;
}

FormalSeries operator/(const FormalSeries& a, const FormalSeries& b) { return a * b.inverse(); }

FormalSeries FormalSeries::inverse() const {
    if (order() == 0) return *this;
    if (sgn(c_[0]) == 0) throw std::domain_error("FormalSeries::inverse: zero constant term");
    FormalSeries r(order());
    r[0] = 1 / c_[0];
    for (int k = 1; k < order(); ++k) {
        Rational acc;
        for (int j = 1; j <= k; ++j) acc += c_[j] * r[k - j];
        r[k] = -acc * r[0];
    }
    return r;
}

FormalSeries FormalSeries::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    FormalSeries result = constant(1, order());
    FormalSeries base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

FormalSeries FormalSeries::derivative() const {
    FormalSeries r(std::max(order() - 1, 0));
    for (int k = 1; k < order(); ++k) r[k - 1] = c_[k] * k;
    return r;
}

FormalSeries FormalSeries::log() const {
    if (order() == 0) return *this;
    if (c_[0] != 1) throw std::domain_error("FormalSeries::log: constant term must be 1");
    // (log f)' = f'/f, integrated term by term.
    FormalSeries q = derivative() * truncated(order() - 1).inverse();
    FormalSeries r(order());
    for (int k = 1; k < order(); ++k) r[k] = q[k - 1] / k;
    return r;
}

FormalSeries FormalSeries::compose(const FormalSeries& inner) const {
    if (inner.order() > 0 && sgn(inner[0]) != 0) {
        throw std::domain_error("FormalSeries::compose: inner series must vanish at 0");
    }
    int ord = inner.order();
    // Horner: c_0 + g (c_1 + g (c_2 + ...)).
    FormalSeries acc(ord);
    for (int k = std::min(order(), ord) - 1; k >= 0; --k) {
        acc = acc * inner;
        acc[0] += c_[k];
    }
    if (order() < ord) acc = acc.truncated(order());
    return acc;
}

FormalSeries FormalSeries::shift_down() const {
    if (order() > 0 && sgn(c_[0]) != 0) {
        throw std::domain_error("FormalSeries::shift_down: nonzero constant term");
    }
    FormalSeries r(std::max(order() - 1, 0));
    for (int k = 1; k < order(); ++k) r[k - 1] = c_[k];
    return r;
}

} // namespace dfmax
