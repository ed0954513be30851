#ifndef CSPD_SPECTRAL_HPP
#define CSPD_SPECTRAL_HPP

#include "cspd/types.hpp"

namespace cspd::spectral {

/// Unitary DFT/IDFT pair of a fixed size (1/sqrt(N) normalization).
/// Inverse entry (a,b) = exp(+j*2*pi*a*b/N)/sqrt(N); forward is its adjoint.
class UnitaryDft {
public:
    explicit UnitaryDft(int size);

    int size() const { return size_; }
    const CMat& inverse_matrix() const { return inverse_; }
    CMat forward_matrix() const { return inverse_.adjoint(); }

    /// Frequency -> delay (applies the IDFT matrix).
    CVec to_delay(const CVec& freq) const;
    /// Delay -> frequency (applies the forward DFT matrix).
    CVec to_frequency(const CVec& delay) const;

private:
    int size_;
    CMat inverse_;
};

UnitaryDft idft_matrix(int n);

/// Diagonal 0/1 selector keeping delay bins >= cutoff ("large" delays).
class DelayMask {
public:
    DelayMask(int size, int cutoff);

    int size() const { return size_; }
    int cutoff() const { return cutoff_; }

    /// Diagonal entry for bin i (0 for i < cutoff, 1 otherwise).
    double entry(int i) const { return i < cutoff_ ? 0.0 : 1.0; }
    CVec apply(const CVec& v) const;
    RVec diagonal() const;

private:
    int size_;
    int cutoff_;
};

DelayMask delay_mask(int n_v, int n_e);

/// Constant-modulus Zadoff-Chu sequence; odd length, root coprime with it.
struct PilotSequence {
    int length = 0;
    int root = 0;
    CVec values;
};

PilotSequence zadoff_chu(int n_p, int u);

/// Largest prime not exceeding n (n >= 2).
int largest_prime_at_most(int n);

} // namespace cspd::spectral

#endif
