#ifndef CSPD_CHANNEL_HPP
#define CSPD_CHANNEL_HPP

#include "cspd/types.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace cspd {

/// How the RATTLE sphere multiplier lambda_n is obtained.
enum class MultiplierMode {
    ClosedForm, ///< printed closed-form expression
    Exact,      ///< root of the sphere-constraint quadratic in lambda
};

/// Scenario and algorithm parameters shared by all modules.
struct SystemConfig {
    int m_x = 4;                   ///< horizontal antennas
    int m_z = 4;                   ///< vertical antennas
    int num_users = 4;             ///< K
    int num_subcarriers_total = 32;///< N_c (DFT size of the OFDM grid)
    int num_subcarriers = 32;      ///< N_v used for data (N_v <= N_c)
    int delay_cutoff = 8;          ///< N_e; delay bins >= N_e count as large
    double noise_var = 0.1;        ///< sigma_z^2 (linear power)
    double total_power = 32.0;     ///< P; per-subcarrier budget is P/N_v
    std::vector<double> user_weights; ///< w_k; empty means all ones

    double alpha = 8.0;            ///< smoothing weight (>= 0)
    double gamma = 0.5;            ///< dissipation coefficient (> 0)
    double h0 = 0.1;               ///< initial step length
    double step_target_error = 1e-3; ///< r, target local error for P control
    double step_gain = 0.1;        ///< theta in [0, 2]; 0 freezes the step
    double h_min_factor = 1e-4;    ///< h_min = h_min_factor * h0
    double h_max_factor = 10.0;    ///< h_max = h_max_factor * h0
    MultiplierMode multiplier_mode = MultiplierMode::ClosedForm;

    int num_taps = 6;              ///< L
    double pdp_decay = 2.0;        ///< exponential power-delay-profile decay
    std::uint64_t seed = 1;

    int max_iters = 500;
    double tol = 1e-6;             ///< relative-change stopping tolerance
    bool wmmse_use_cg = false;     ///< CG instead of direct solves in WMMSE

    int antennas() const { return m_x * m_z; }
    double per_subcarrier_power() const {
        return total_power / static_cast<double>(num_subcarriers);
    }
    double weight(int k) const {
        return user_weights.empty() ? 1.0 : user_weights.at(static_cast<std::size_t>(k));
    }
    int stack_size() const { return num_users * num_subcarriers * antennas(); }

    /// Throws InvalidParameter on any violated field constraint.
    void validate() const;
};

/// Deterministic random source (xoshiro-free: mt19937_64 + explicit
/// Box-Muller so streams do not depend on libstdc++ internals).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform();          ///< U[0, 1)
    double normal();           ///< N(0, 1)
    Complex cnormal();         ///< CN(0, 1)
    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Frequency-selective multi-user MISO channel: per user a tap matrix
/// (num_taps x M) and the derived per-subcarrier rows h_{k,c}.
class ChannelSet {
public:
    static ChannelSet from_taps(std::vector<CMat> taps, int n_c, int n_v);

    int num_users() const { return static_cast<int>(taps_.size()); }
    int num_subcarriers() const { return n_v_; }
    int total_subcarriers() const { return n_c_; }
    int antennas() const { return taps_.empty() ? 0 : static_cast<int>(taps_[0].cols()); }
    int num_taps() const { return taps_.empty() ? 0 : static_cast<int>(taps_[0].rows()); }

    const CMat& taps(int k) const { return taps_.at(static_cast<std::size_t>(k)); }
    /// All per-subcarrier rows of user k; row c is h_{k,c} (length M).
    const CMat& rows(int k) const { return freq_.at(static_cast<std::size_t>(k)); }
    Eigen::RowVectorXcd row(int k, int c) const { return rows(k).row(c); }

    /// Blockwise product H_k p_k: entry c is h_{k,c} * p_k^c.
    CVec apply_user(int k, const CVec& p_user) const;
    /// H_k^H v: block c is h_{k,c}^H v_c.
    CVec apply_user_adjoint(int k, const CVec& v) const;
    /// Full block-diagonal H applied to the stacked precoder (K*N_v values,
    /// user-major).
    CVec apply(const CVec& p) const;
    /// H^H applied to a stacked K*N_v vector.
    CVec apply_adjoint(const CVec& v) const;

private:
    std::vector<CMat> taps_; ///< per user: num_taps x M
    std::vector<CMat> freq_; ///< per user: N_v x M
    int n_c_ = 0;
    int n_v_ = 0;
};

/// Tapped-delay-line channel with exponential power-delay profile,
/// normalized so E[||h_{k,c}||^2] = M. Deterministic given the rng state.
ChannelSet generate_channel(const SystemConfig& cfg, Rng& rng);

/// Raw binary tap dump: user-major, tap-major, antenna-minor, interleaved
/// re/im little-endian doubles.
void dump_taps(const ChannelSet& ch, const std::string& path);
ChannelSet load_taps(const std::string& path, int num_users, int num_taps, int antennas,
                     int n_c, int n_v);

} // namespace cspd

#endif
