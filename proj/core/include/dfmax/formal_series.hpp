#pragma once

#include "dfmax/big_number.hpp"

#include <vector>

namespace dfmax {

// Truncated power series over Q, known modulo z^order.
class FormalSeries {
public:
    explicit FormalSeries(int order);
    FormalSeries(std::vector<Rational> coeffs, int order);

    static FormalSeries constant(const Rational& c, int order);
    static FormalSeries variable(int order);  // z

    int order() const { return static_cast<int>(c_.size()); }
    const Rational& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
    Rational& operator[](int k) { return c_[static_cast<size_t>(k)]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    FormalSeries truncated(int order) const;

    friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b);
    friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b);
    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
    friend FormalSeries operator*(const Rational& s, const FormalSeries& a);
    friend FormalSeries operator/(const FormalSeries& a, const FormalSeries& b);

    FormalSeries inverse() const;          // needs c_0 != 0
    FormalSeries pow(int e) const;
    FormalSeries derivative() const;       // order drops by one
    FormalSeries log() const;              // needs c_0 == 1
    FormalSeries compose(const FormalSeries& inner) const;  // needs inner c_0 == 0
    FormalSeries shift_down() const;       // f / z, needs c_0 == 0

private:
    std::vector<Rational> c_;
};

} // namespace dfmax
