#include "cspd/spectral.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace cspd::spectral {

UnitaryDft::UnitaryDft(int size) : size_(size) {
    if (size < 1) {
        throw InvalidDimension("UnitaryDft: size must be >= 1, got " + std::to_string(size));
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(size));
    inverse_.resize(size, size);
    for (int a = 0; a < size; ++a) {
        for (int b = 0; b < size; ++b) {
            // exp(+j*2*pi*a*b/N)/sqrt(N); reduce the product mod N to keep the
            // argument small for large sizes.
            const long long prod = (static_cast<long long>(a) * b) % size;
            const double phase = 2.0 * std::numbers::pi * static_cast<double>(prod) / size;
            inverse_(a, b) = scale * Complex(std::cos(phase), std::sin(phase));
        }
    }
}

CVec UnitaryDft::to_delay(const CVec& freq) const {
    if (freq.size() != size_) {
        throw InvalidDimension("UnitaryDft::to_delay: vector length mismatch");
    }
    return inverse_ * freq;
}

CVec UnitaryDft::to_frequency(const CVec& delay) const {
    if (delay.size() != size_) {
        throw InvalidDimension("UnitaryDft::to_frequency: vector length mismatch");
    }
    return inverse_.adjoint() * delay;
}

UnitaryDft idft_matrix(int n) { return UnitaryDft(n); }

DelayMask::DelayMask(int size, int cutoff) : size_(size), cutoff_(cutoff) {
    if (size < 0) {
        throw InvalidDimension("DelayMask: negative size");
    }
    if (cutoff < 0 || cutoff > size) {
        throw InvalidParameter("DelayMask: cutoff must be in [0, size], got " +
                               std::to_string(cutoff) + " for size " + std::to_string(size));
    }
}

CVec DelayMask::apply(const CVec& v) const {
    if (v.size() != size_) {
        throw InvalidDimension("DelayMask::apply: vector length mismatch");
    }
    CVec out = v;
    out.head(cutoff_).setZero();
    return out;
}

RVec DelayMask::diagonal() const {
    RVec d = RVec::Ones(size_);
    d.head(cutoff_).setZero();
    return d;
}

DelayMask delay_mask(int n_v, int n_e) { return DelayMask(n_v, n_e); }

PilotSequence zadoff_chu(int n_p, int u) {
    if (n_p < 1 || n_p % 2 == 0) {
        throw InvalidParameter("zadoff_chu: length must be odd and positive, got " +
                               std::to_string(n_p));
    }
    if (std::gcd(u, n_p) != 1) {
        throw InvalidParameter("zadoff_chu: root " + std::to_string(u) +
                               " is not coprime with length " + std::to_string(n_p));
    }
    PilotSequence seq;
    seq.length = n_p;
    seq.root = u;
    seq.values.resize(n_p);
    // exp(-j*pi*u*c*(c+1)/n_p) has period 2*n_p in the integer exponent.
    const long long period = 2LL * n_p;
    for (int c = 0; c < n_p; ++c) {
        const long long num = (static_cast<long long>(u) * c % period) * (c + 1) % period;
        const double phase = -std::numbers::pi * static_cast<double>(num) / n_p;
        seq.values(c) = Complex(std::cos(phase), std::sin(phase));
    }
    return seq;
}

int largest_prime_at_most(int n) {
    if (n < 2) {
        throw InvalidParameter("largest_prime_at_most: need n >= 2");
    }
    for (int candidate = n; candidate >= 2; --candidate) {
        bool prime = true;
        for (int d = 2; static_cast<long long>(d) * d <= candidate; ++d) {
            if (candidate % d == 0) {
                prime = false;
                break;
            }
        }
        if (prime) return candidate;
    }
    return 2;
}

} // namespace cspd::spectral
