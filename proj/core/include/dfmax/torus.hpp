#pragma once

#include <complex>
#include <vector>

namespace dfmax {

using Complex = std::complex<double>;

// Complex values on (Z/MZ)^d, row-major with the last coordinate fastest.
// Limited to d <= 4 and M <= 32.
class TorusFunction {
public:
    TorusFunction(int d, int M);

    int d() const { return d_; }
    int M() const { return M_; }
    std::size_t size() const { return values_.size(); }

    Complex& operator[](std::size_t i) { return values_[i]; }
    const Complex& operator[](std::size_t i) const { return values_[i]; }
    std::vector<Complex>& values() { return values_; }
    const std::vector<Complex>& values() const { return values_; }

    // Coordinates are reduced mod M.
    std::size_t index_of(const std::vector<int>& x) const;
    std::vector<int> coords_of(std::size_t i) const;

    double l2_norm() const;

private:
    int d_;
    int M_;
    std::vector<Complex> values_;
};

// hat f(m) = sum_x f(x) e^{-2 pi i x.m / M}
std::vector<Complex> dft(const TorusFunction& f);
// Inverse of dft, including the 1/M^d factor.
TorusFunction inverse_dft(int d, int M, const std::vector<Complex>& spectrum);

} // namespace dfmax
