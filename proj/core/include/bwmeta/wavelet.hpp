#pragma once

#include <Eigen/Core>
#include <array>
#include <vector>

namespace bwmeta {

/// Orthonormal dyadic wavelet filter bank with periodic boundary handling.
///
/// The analysis step maps a length-N signal to N/2 approximation and N/2
/// detail coefficients:
///
///   a[k] = sum_m h[m] * x[(2k + m) mod N]
///   d[k] = sum_m g[m] * x[(2k + m) mod N],   g[m] = (-1)^m h[taps-1-m]
///
/// With periodic extension this operator is exactly orthogonal for every even
/// N, so synthesis is its transpose and both perfect reconstruction and the
/// Parseval identity hold to round-off. `level` cascaded steps are applied to
/// the running approximation.
struct WaveletBasis {
    static constexpr int kTaps = 12;

    std::array<double, kTaps> lowpass{}; // synthesis/analysis lowpass, sum = sqrt(2)
    int level = 0;                       // decomposition depth J

    double highpass(int m) const {
        return (m % 2 == 0 ? 1.0 : -1.0) * lowpass[kTaps - 1 - m];
    }

    /// Daubechies filter with 6 vanishing moments (12 taps). Coefficients were
    /// obtained by spectral factorization of the Daubechies half-band
    /// polynomial in 60-digit arithmetic and agree with the usual published
    /// tables; validity is asserted by the quadrature-mirror checks in the
    /// test suite rather than trusted from the table.
    static WaveletBasis daubechies6(int level);
};

/// Multichannel coefficient stack for one signal block.
/// `approx` holds the level-J approximation coefficients (K x channels,
/// K = T / 2^J). `details[j]` holds the detail band produced at cascade step
/// j+1: details[0] is the finest (T/2 rows), details[J-1] the coarsest
/// (K rows). Detail bands may be absent (approximation-only representation).
struct CoeffSequence {
    Eigen::MatrixXd approx;
    std::vector<Eigen::MatrixXd> details;
    int original_length = 0;
    int level = 0;

    bool has_details() const { return !details.empty(); }
};

/// Forward transform of T x C channel block. Requires T divisible by 2^level.
/// Throws DataError otherwise (callers are expected to pad).
CoeffSequence dwt(const Eigen::MatrixXd& signals, const WaveletBasis& basis,
                  bool keep_details);

/// Inverse transform back to original_length x C. Missing detail bands are
/// treated as zero (approximation-only reconstruction).
Eigen::MatrixXd idwt(const CoeffSequence& coeffs, const WaveletBasis& basis);

} // namespace bwmeta
