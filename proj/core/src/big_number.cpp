#include "dfmax/big_number.hpp"

#include <cmath>
#include <stdexcept>

namespace dfmax {

BigInt binomial(long n, long k) {
    BigInt r;
    if (n < 0 || k < 0 || k > n) return r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt power_of_two(unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

double log_big(const BigInt& x) {
    if (sgn(x) <= 0) throw std::domain_error("log_big: argument must be positive");
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

double to_double_rounded(const Rational& q) {
    int s = sgn(q);
    if (s == 0) return 0.0;
    BigInt num = abs(q.get_num());
    BigInt den = q.get_den();
    long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2))
           - static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 53;
    const BigInt lo = power_of_two(52), hi = power_of_two(53);
    BigInt quo, rem;
    for (;;) {
        BigInt a = num, b = den;
        if (e < 0) a <<= static_cast<mp_bitcnt_t>(-e);
        else b <<= static_cast<mp_bitcnt_t>(e);
        mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (quo < lo) { --e; continue; }
        if (quo >= hi) { ++e; continue; }
        BigInt twice = rem * 2;
        int c = cmp(twice, b);
        if (c > 0 || (c == 0 && mpz_odd_p(quo.get_mpz_t()))) ++quo;
        break;
    }
    double m = quo.get_d();
    return s * std::ldexp(m, static_cast<int>(e));
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace dfmax
