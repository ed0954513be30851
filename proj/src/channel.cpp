#include "cspd/channel.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

namespace cspd {

void SystemConfig::validate() const {
    if (m_x < 1 || m_z < 1) throw InvalidParameter("antenna grid factors must be >= 1");
    if (num_users < 1) throw InvalidParameter("num_users must be >= 1");
    if (num_subcarriers < 1) throw InvalidParameter("num_subcarriers must be >= 1");
    if (num_subcarriers > num_subcarriers_total) {
        throw InvalidParameter("n_v must not exceed n_c");
    }
    if (delay_cutoff < 0 || delay_cutoff > num_subcarriers) {
        throw InvalidParameter("n_e must lie in [0, n_v]");
    }
    if (noise_var <= 0.0) throw InvalidParameter("noise_var must be > 0");
    if (total_power <= 0.0) throw InvalidParameter("total_power must be > 0");
    if (!user_weights.empty() && static_cast<int>(user_weights.size()) != num_users) {
        throw InvalidParameter("user_weights size must equal num_users");
    }
    for (double w : user_weights) {
        if (w < 0.0) throw InvalidParameter("user weights must be >= 0");
    }
    if (alpha < 0.0) throw InvalidParameter("alpha must be >= 0");
    if (gamma <= 0.0) throw InvalidParameter("gamma must be > 0");
    if (h0 <= 0.0) throw InvalidParameter("h0 must be > 0");
    if (step_target_error <= 0.0) throw InvalidParameter("r must be > 0");
    if (step_gain < 0.0 || step_gain > 2.0) {
        throw InvalidParameter("theta must lie within the range [0,2]");
    }
    if (h_min_factor <= 0.0 || h_max_factor < 1.0 || h_min_factor > h_max_factor) {
        throw InvalidParameter("step clamp factors must satisfy 0 < h_min_factor <= h_max_factor, h_max_factor >= 1");
    }
    if (num_taps < 1) throw InvalidParameter("num_taps must be >= 1");
    if (num_taps > num_subcarriers_total) {
        throw InvalidParameter("num_taps must not exceed n_c");
    }
    if (pdp_decay <= 0.0) throw InvalidParameter("pdp_decay must be > 0");
    if (max_iters < 1) throw InvalidParameter("max_iters must be >= 1");
    if (tol <= 0.0) throw InvalidParameter("tol must be > 0");
}

double Rng::uniform() {
    // 53-bit mantissa from the top bits of the 64-bit state.
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Complex Rng::cnormal() {
    // Unit-variance complex normal: each part N(0, 1/2).
    return Complex(normal(), normal()) / std::sqrt(2.0);
}

ChannelSet ChannelSet::from_taps(std::vector<CMat> taps, int n_c, int n_v) {
    if (taps.empty()) throw InvalidDimension("ChannelSet: need at least one user");
    const auto num_taps = taps[0].rows();
    const auto antennas = taps[0].cols();
    for (const auto& t : taps) {
        if (t.rows() != num_taps || t.cols() != antennas) {
            throw InvalidDimension("ChannelSet: inconsistent tap matrix shapes");
        }
    }
    if (n_v < 1 || n_v > n_c) throw InvalidParameter("ChannelSet: need 1 <= n_v <= n_c");
    if (num_taps > n_c) throw InvalidParameter("ChannelSet: more taps than n_c");

    ChannelSet ch;
    ch.n_c_ = n_c;
    ch.n_v_ = n_v;
    ch.freq_.reserve(taps.size());
    for (const auto& t : taps) {
        CMat rows(n_v, antennas);
        for (int c = 0; c < n_v; ++c) {
            Eigen::RowVectorXcd acc = Eigen::RowVectorXcd::Zero(antennas);
            for (int l = 0; l < num_taps; ++l) {
                const double phase = -2.0 * std::numbers::pi * static_cast<double>(c) *
                                     static_cast<double>(l) / static_cast<double>(n_c);
                acc += Complex(std::cos(phase), std::sin(phase)) * t.row(l);
            }
            rows.row(c) = acc;
        }
        ch.freq_.push_back(std::move(rows));
    }
    ch.taps_ = std::move(taps);
    return ch;
}

CVec ChannelSet::apply_user(int k, const CVec& p_user) const {
    const int m = antennas();
    if (p_user.size() != static_cast<Eigen::Index>(m) * n_v_) {
        throw InvalidDimension("apply_user: stacked precoder length mismatch");
    }
    CVec out(n_v_);
    const CMat& h = rows(k);
    for (int c = 0; c < n_v_; ++c) {
        out(c) = h.row(c) * p_user.segment(static_cast<Eigen::Index>(c) * m, m);
    }
    return out;
}

CVec ChannelSet::apply_user_adjoint(int k, const CVec& v) const {
    if (v.size() != n_v_) throw InvalidDimension("apply_user_adjoint: length mismatch");
    const int m = antennas();
    CVec out(static_cast<Eigen::Index>(m) * n_v_);
    const CMat& h = rows(k);
    for (int c = 0; c < n_v_; ++c) {
        out.segment(static_cast<Eigen::Index>(c) * m, m) = h.row(c).adjoint() * v(c);
    }
    return out;
}

CVec ChannelSet::apply(const CVec& p) const {
    const int m = antennas();
    const int k_count = num_users();
    const Eigen::Index per_user = static_cast<Eigen::Index>(m) * n_v_;
    if (p.size() != per_user * k_count) {
        throw InvalidDimension("apply: stacked precoder length mismatch");
    }
    CVec out(static_cast<Eigen::Index>(k_count) * n_v_);
    for (int k = 0; k < k_count; ++k) {
        out.segment(static_cast<Eigen::Index>(k) * n_v_, n_v_) =
            apply_user(k, p.segment(k * per_user, per_user));
    }
    return out;
}

CVec ChannelSet::apply_adjoint(const CVec& v) const {
    const int m = antennas();
    const int k_count = num_users();
    if (v.size() != static_cast<Eigen::Index>(k_count) * n_v_) {
        throw InvalidDimension("apply_adjoint: length mismatch");
    }
    const Eigen::Index per_user = static_cast<Eigen::Index>(m) * n_v_;
    CVec out(per_user * k_count);
    for (int k = 0; k < k_count; ++k) {
        out.segment(k * per_user, per_user) =
            apply_user_adjoint(k, v.segment(static_cast<Eigen::Index>(k) * n_v_, n_v_));
    }
    return out;
}

ChannelSet generate_channel(const SystemConfig& cfg, Rng& rng) {
    cfg.validate();
    const int m = cfg.antennas();
    const int taps = cfg.num_taps;

    // Exponential PDP normalized to unit total power.
    RVec pdp(taps);
    for (int l = 0; l < taps; ++l) pdp(l) = std::exp(-static_cast<double>(l) / cfg.pdp_decay);
    pdp /= pdp.sum();

    std::vector<CMat> tap_sets;
    tap_sets.reserve(static_cast<std::size_t>(cfg.num_users));
    for (int k = 0; k < cfg.num_users; ++k) {
        CMat g(taps, m);
        for (int l = 0; l < taps; ++l) {
            const double amp = std::sqrt(pdp(l));
            for (int a = 0; a < m; ++a) g(l, a) = amp * rng.cnormal();
        }
        tap_sets.push_back(std::move(g));
    }
    return ChannelSet::from_taps(std::move(tap_sets), cfg.num_subcarriers_total,
                                 cfg.num_subcarriers);
}

void dump_taps(const ChannelSet& ch, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("dump_taps: cannot open " + path);
    for (int k = 0; k < ch.num_users(); ++k) {
        const CMat& t = ch.taps(k);
        for (int l = 0; l < t.rows(); ++l) {
            for (int a = 0; a < t.cols(); ++a) {
                const double re = t(l, a).real();
                const double im = t(l, a).imag();
                out.write(reinterpret_cast<const char*>(&re), sizeof(double));
                out.write(reinterpret_cast<const char*>(&im), sizeof(double));
            }
        }
    }
    if (!out) throw Error("dump_taps: write failed for " + path);
}

ChannelSet load_taps(const std::string& path, int num_users, int num_taps, int antennas,
                     int n_c, int n_v) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("load_taps: cannot open " + path);
    std::vector<CMat> taps;
    taps.reserve(static_cast<std::size_t>(num_users));
    for (int k = 0; k < num_users; ++k) {
        CMat t(num_taps, antennas);
        for (int l = 0; l < num_taps; ++l) {
            for (int a = 0; a < antennas; ++a) {
                double re = 0.0;
                double im = 0.0;
                in.read(reinterpret_cast<char*>(&re), sizeof(double));
                in.read(reinterpret_cast<char*>(&im), sizeof(double));
                t(l, a) = Complex(re, im);
            }
        }
        taps.push_back(std::move(t));
    }
    if (!in) throw Error("load_taps: file too short or unreadable: " + path);
    return ChannelSet::from_taps(std::move(taps), n_c, n_v);
}

} // namespace cspd
