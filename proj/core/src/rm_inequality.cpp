#include "dfmax/rm_inequality.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace dfmax {

namespace {

int nu2(long x) { return std::countr_zero(static_cast<unsigned long>(x)); }

} // namespace

std::vector<DyadicPiece> dyadic_decompose(long n, long k, int s) {
    if (s < 1 || s > 62) throw std::invalid_argument("dyadic_decompose: s must lie in [1, 62]");
    if (n % 2 || k % 2) throw std::invalid_argument("dyadic_decompose: endpoints must be even");
    if (n < 0 || n >= k || k > (1L << s)) {
        throw std::invalid_argument("dyadic_decompose: needs 0 <= n < k <= 2^s, got (" +
                                    std::to_string(n) + ", " + std::to_string(k) + "]");
    }
    // Highest bit where n and k differ.
    const int l = 63 - std::countl_zero(static_cast<unsigned long>(n ^ k));

    std::vector<DyadicPiece> out;
    long u = n;
    if (n != 0 && nu2(n) < l) {
        while (nu2(u) < l) {
            long next = u + (1L << nu2(u));
            out.push_back({u, next});
            u = next;
        }
    } else {
        out.push_back({n, n + (1L << l)});
        u = n + (1L << l);
    }
    // Remaining bits of k below l, highest first.
    for (int i = l - 1; i >= 1; --i) {
        if (!(k >> i & 1)) continue;
        long v = (k >> i) << i;
        out.push_back({u, v});
        u = v;
    }
    return out;
}

RMEvaluation rm_evaluate(std::span<const int> s, std::span<const int> m, const SequenceOracle& a) {
    const int K = static_cast<int>(s.size());
    if (K < 1 || K > 16) throw std::invalid_argument("rm_evaluate: K must lie in [1, 16]");
    if (m.size() != s.size()) throw std::invalid_argument("rm_evaluate: s and m differ in length");
    for (int j = 0; j < K; ++j) {
        if (s[j] < 1 || s[j] > 20) throw std::invalid_argument("rm_evaluate: s_j must lie in [1, 20]");
        if (m[j] < 0 || m[j] > (1 << s[j])) throw std::invalid_argument("rm_evaluate: needs 0 <= m_j <= 2^s_j");
    }

    RMEvaluation out;
    std::vector<int> idx(static_cast<size_t>(K), 0);

    // Left side: every even index below m.
    auto sup = [&](auto&& self, int j) -> void {
        if (j == K) {
            out.lhs = std::max(out.lhs, std::abs(a(idx)));
            return;
        }
        for (int v = 0; v <= m[j]; v += 2) {
            idx[j] = v;
            self(self, j + 1);
        }
        idx[j] = 0;
    };
    sup(sup, 0);

    std::fill(idx.begin(), idx.end(), 0);
    out.rhs = std::abs(a(idx));

    for (unsigned U = 1; U < (1u << K); ++U) {
        std::vector<int> members;
        for (int j = 0; j < K; ++j) {
            if (U >> j & 1) members.push_back(j);
        }
        const size_t u = members.size();

        // Mixed difference at k(U): sum over W subset U of (-1)^{|W|} a_{k - 2 1_W}.
        auto delta = [&](std::vector<int>& kidx) {
            std::complex<double> acc = 0.0;
            for (unsigned W = 0; W < (1u << u); ++W) {
                int sign = 1;
                for (size_t b = 0; b < u; ++b) {
                    if (W >> b & 1) {
                        kidx[members[b]] -= 2;
                        sign = -sign;
                    }
                }
                acc += static_cast<double>(sign) * a(kidx);
                for (size_t b = 0; b < u; ++b) {
                    if (W >> b & 1) kidx[members[b]] += 2;
                }
            }
            return acc;
        };

        std::vector<int> level(u), block(u);
        for (size_t b = 0; b < u; ++b) level[b] = 1;
        for (;;) {
            // Square function at this level vector.
            double squares = 0.0;
            for (size_t b = 0; b < u; ++b) block[b] = 1;
            for (;;) {
                std::vector<int> kidx(static_cast<size_t>(K), 0);
                std::complex<double> blocksum = 0.0;
                auto inner = [&](auto&& self, size_t b) -> void {
                    if (b == u) {
                        blocksum += delta(kidx);
                        return;
                    }
                    const int j = members[b];
                    const long width = 1L << level[b];
                    const long lo = (block[b] - 1) * width, hi = block[b] * width;
                    for (long v = lo + 2; v <= hi && v <= m[j]; v += 2) {
                        kidx[j] = static_cast<int>(v);
                        self(self, b + 1);
                    }
                    kidx[j] = 0;
                };
                inner(inner, 0);
                squares += std::norm(blocksum);

                size_t b = 0;
                while (b < u && block[b] == (1 << (s[members[b]] - level[b]))) block[b++] = 1;
                if (b == u) break;
                ++block[b];
            }
            out.rhs += std::sqrt(squares);

            size_t b = 0;
            while (b < u && level[b] == s[members[b]]) level[b++] = 1;
            if (b == u) break;
            ++level[b];
        }
    }
    return out;
}

RMReport rm_check(std::span<const int> s, std::span<const int> m, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("rm_check: trials must be >= 1");
    const int K = static_cast<int>(s.size());
    if (m.size() != s.size()) throw std::invalid_argument("rm_check: s and m differ in length");
    RMReport rep;
    rep.K = K;
    rep.s.assign(s.begin(), s.end());
    rep.m.assign(m.begin(), m.end());
    rep.trials = trials;
    rep.seed = seed;

    // Dense table over even indices 0..m_j.
    std::vector<size_t> stride(static_cast<size_t>(K) + 1, 1);
    for (int j = 0; j < K; ++j) stride[j + 1] = stride[j] * static_cast<size_t>(m[j] / 2 + 1);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<std::complex<double>> table(stride[K]);
    SequenceOracle oracle = [&](std::span<const int> n) {
        size_t off = 0;
        for (int j = 0; j < K; ++j) off += static_cast<size_t>(n[j] / 2) * stride[j];
        return table[off];
    };
    for (int t = 0; t < trials; ++t) {
        for (auto& v : table) v = {g(rng), g(rng)};
        RMEvaluation e = rm_evaluate(s, m, oracle);
        double ratio = e.lhs / e.rhs;
        if (ratio > rep.fitted_constant) {
            rep.fitted_constant = ratio;
            rep.worst_lhs = e.lhs;
            rep.worst_rhs = e.rhs;
        }
    }
    return rep;
}

} // namespace dfmax
