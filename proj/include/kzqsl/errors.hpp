#ifndef KZQSL_ERRORS_HPP
#define KZQSL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kzqsl {

/// A formula diverges at the requested point (infinite rate / closing gap).
class singularity_error : public std::domain_error {
public:
    explicit singularity_error(const std::string& msg) : std::domain_error(msg) {}
};

/// Closed-form result requested outside its validity region.
class validity_exceeded_error : public std::domain_error {
public:
    explicit validity_exceeded_error(const std::string& msg) : std::domain_error(msg) {}
};

/// No interior minimum exists in the search window; carries the trend of the
/// scanned trace (+1 increasing, -1 decreasing).
class no_minimum_error : public std::runtime_error {
public:
    no_minimum_error(const std::string& msg, int direction)
        : std::runtime_error(msg), monotone_direction(direction) {}
    int monotone_direction;
};

class integration_failure : public std::runtime_error {
public:
    integration_failure(const std::string& msg, double t, double step,
                        long accepted, long rejected)
        : std::runtime_error(msg), t_fail(t), last_step(step),
          accepted_steps(accepted), rejected_steps(rejected) {}
    double t_fail;
    double last_step;
    long accepted_steps;
    long rejected_steps;
};

class insufficient_data_error : public std::runtime_error {
public:
    explicit insufficient_data_error(const std::string& msg) : std::runtime_error(msg) {}
};

class empty_sweep_error : public std::runtime_error {
public:
    explicit empty_sweep_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace kzqsl

#endif // KZQSL_ERRORS_HPP
