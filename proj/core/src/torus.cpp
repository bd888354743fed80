#include "dfmax/torus.hpp"

#include "dfmax/errors.hpp"

#include <fftw3.h>

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

namespace dfmax {

TorusFunction::TorusFunction(int d, int M) : d_(d), M_(M) {
    if (d < 1) throw std::invalid_argument("torus dimension must be >= 1");
    if (M < 1) throw std::invalid_argument("torus side M must be >= 1");
    if (d > 4) throw GuardError("d <= 4", "torus dimension " + std::to_string(d));
    if (M > 32) throw GuardError("M <= 32", "torus side " + std::to_string(M));
    std::size_t n = 1;
    for (int i = 0; i < d; ++i) n *= static_cast<std::size_t>(M);
    values_.assign(n, Complex(0.0, 0.0));
}

std::size_t TorusFunction::index_of(const std::vector<int>& x) const {
    if (static_cast<int>(x.size()) != d_) throw std::invalid_argument("index_of: wrong dimension");
    std::size_t idx = 0;
    for (int v : x) idx = idx * static_cast<std::size_t>(M_) + static_cast<std::size_t>(((v % M_) + M_) % M_);
    return idx;
}

std::vector<int> TorusFunction::coords_of(std::size_t i) const {
    std::vector<int> x(static_cast<std::size_t>(d_));
    for (int k = d_ - 1; k >= 0; --k) {
        x[static_cast<std::size_t>(k)] = static_cast<int>(i % static_cast<std::size_t>(M_));
        i /= static_cast<std::size_t>(M_);
    }
    return x;
}

double TorusFunction::l2_norm() const {
    double s = 0.0;
    for (const Complex& v : values_) s += std::norm(v);
    return std::sqrt(s);
}

namespace {

struct PlanDeleter {
    void operator()(fftw_plan_s* p) const { fftw_destroy_plan(p); }
};

std::vector<Complex> transform(int d, int M, std::vector<Complex> data, int sign) {
    std::vector<int> dims(static_cast<std::size_t>(d), M);
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    std::unique_ptr<fftw_plan_s, PlanDeleter> plan(
        fftw_plan_dft(d, dims.data(), buf, buf, sign, FFTW_ESTIMATE));
    if (!plan) throw std::runtime_error("FFTW could not build a plan");
    fftw_execute(plan.get());
    return data;
}

} // namespace

std::vector<Complex> dft(const TorusFunction& f) {
    return transform(f.d(), f.M(), f.values(), FFTW_FORWARD);
}

TorusFunction inverse_dft(int d, int M, const std::vector<Complex>& spectrum) {
    TorusFunction out(d, M);
    if (spectrum.size() != out.size()) throw std::invalid_argument("inverse_dft: spectrum size mismatch");
    out.values() = transform(d, M, spectrum, FFTW_BACKWARD);
    const double scale = 1.0 / static_cast<double>(out.size());
    for (Complex& v : out.values()) v *= scale;
    return out;
}

} // namespace dfmax
