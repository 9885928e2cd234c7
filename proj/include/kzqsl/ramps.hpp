#ifndef KZQSL_RAMPS_HPP
#define KZQSL_RAMPS_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "kzqsl/errors.hpp"

namespace kzqsl {

enum class RampKind { LinearTo, PowerApproach, PowerFromZero };

/// Driving schedule g(t) on the closed window [0, tau_q].
///
/// LinearTo:       g(t) = g0 + (g1 - g0) t / tau_q
/// PowerApproach:  g(t) = 1 - (1 - t/tau_q)^r          (ends at g = 1)
/// PowerFromZero:  g(t) = g1 (t/tau_q)^r
///
/// Schedules are stored analytically (kind + parameters) so derivatives and
/// inversions are exact. Evaluations outside [0, tau_q] are errors, not
/// extrapolations.
struct RampProtocol {
    RampKind kind = RampKind::LinearTo;
    double tau_q = 1.0;
    double g0 = 0.0;
    double g1 = 0.0;
    double r = 1.0;

    static RampProtocol linear_to(double g0, double g1, double tau_q) {
        require_tau(tau_q);
        if (g1 == g0)
            throw std::domain_error("RampProtocol: linear ramp requires g1 != g0");
        RampProtocol p;
        p.kind = RampKind::LinearTo;
        p.tau_q = tau_q;
        p.g0 = g0;
        p.g1 = g1;
        return p;
    }

    static RampProtocol power_approach(double r, double tau_q) {
        require_tau(tau_q);
        require_exponent(r);
        RampProtocol p;
        p.kind = RampKind::PowerApproach;
        p.tau_q = tau_q;
        p.g0 = 0.0;
        p.g1 = 1.0;
        p.r = r;
        return p;
    }

    static RampProtocol power_from_zero(double r, double g1, double tau_q) {
        require_tau(tau_q);
        require_exponent(r);
        if (g1 == 0.0)
            throw std::domain_error("RampProtocol: power-from-zero ramp requires g1 != 0");
        RampProtocol p;
        p.kind = RampKind::PowerFromZero;
        p.tau_q = tau_q;
        p.g0 = 0.0;
        p.g1 = g1;
        p.r = r;
        return p;
    }

    double initial_value() const {
        return kind == RampKind::LinearTo ? g0 : 0.0;
    }

    double final_value() const {
        return kind == RampKind::PowerApproach ? 1.0 : g1;
    }

private:
    static void require_tau(double tau_q) {
        if (!(tau_q > 0.0) || !std::isfinite(tau_q))
            throw std::domain_error("RampProtocol: tau_q must be strictly positive");
    }
    static void require_exponent(double r) {
        if (!(r > 0.0) || !std::isfinite(r))
            throw std::domain_error("RampProtocol: exponent r must be strictly positive");
    }
};

inline void check_ramp_window(const RampProtocol& ramp, double t) {
    if (!(t >= 0.0 && t <= ramp.tau_q))
        throw std::domain_error("ramp evaluation outside [0, tau_q]: t = " + std::to_string(t));
}

/// Schedule value at time t; exact at both endpoints.
inline double g_of_t(const RampProtocol& ramp, double t) {
    check_ramp_window(ramp, t);
    const double s = t / ramp.tau_q;
    switch (ramp.kind) {
    case RampKind::LinearTo:
        if (t == ramp.tau_q) return ramp.g1;
        return ramp.g0 + (ramp.g1 - ramp.g0) * s;
    case RampKind::PowerApproach:
        return 1.0 - std::pow(1.0 - s, ramp.r);
    case RampKind::PowerFromZero:
        return ramp.g1 * std::pow(s, ramp.r);
    }
    throw std::logic_error("unreachable ramp kind");
}

/// Analytic derivative of g_of_t. Diverging cases (r < 1 at the window edge
/// where the power-law argument vanishes) are signaled as singularity_error.
inline double dgdt(const RampProtocol& ramp, double t) {
    check_ramp_window(ramp, t);
    const double s = t / ramp.tau_q;
    switch (ramp.kind) {
    case RampKind::LinearTo:
        return (ramp.g1 - ramp.g0) / ramp.tau_q;
    case RampKind::PowerApproach:
        if (ramp.r < 1.0 && t == ramp.tau_q)
            throw singularity_error("dgdt: infinite rate at t = tau_q for power-approach with r < 1");
        return ramp.r / ramp.tau_q * std::pow(1.0 - s, ramp.r - 1.0);
    case RampKind::PowerFromZero:
        if (ramp.r < 1.0 && t == 0.0)
            throw singularity_error("dgdt: infinite rate at t = 0 for power-from-zero with r < 1");
        return ramp.g1 * ramp.r / ramp.tau_q * std::pow(s, ramp.r - 1.0);
    }
    throw std::logic_error("unreachable ramp kind");
}

/// Unique t_c with g(t_c) = g_c (schedules are monotone); analytic inversion.
inline double critical_time(const RampProtocol& ramp, double g_c) {
    switch (ramp.kind) {
    case RampKind::LinearTo: {
        const double s = (g_c - ramp.g0) / (ramp.g1 - ramp.g0);
        if (!(s >= 0.0 && s <= 1.0))
            throw std::domain_error("critical_time: g_c outside ramp range");
        return s * ramp.tau_q;
    }
    case RampKind::PowerApproach: {
        if (!(g_c >= 0.0 && g_c <= 1.0))
            throw std::domain_error("critical_time: g_c outside ramp range");
        return ramp.tau_q * (1.0 - std::pow(1.0 - g_c, 1.0 / ramp.r));
    }
    case RampKind::PowerFromZero: {
        const double s = g_c / ramp.g1;
        if (!(s >= 0.0 && s <= 1.0))
            throw std::domain_error("critical_time: g_c outside ramp range");
        return ramp.tau_q * std::pow(s, 1.0 / ramp.r);
    }
    }
    throw std::logic_error("unreachable ramp kind");
}

} // namespace kzqsl

#endif // KZQSL_RAMPS_HPP
