#ifndef WBUS_ERRORS_HPP
#define WBUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wbus {

// Exit-code mapping used by the CLI: invalid_argument_error -> 2,
// infeasible_design_error -> 3, accuracy_error -> 4.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class invalid_argument_error : public error {
public:
    using error::error;
};

// A requested pulse area exceeds what the mode geometry can deliver.
class infeasible_design_error : public error {
public:
    infeasible_design_error(const std::string& msg, double feasibility_margin,
                            int limiting_index = -1)
        : error(msg), margin_(feasibility_margin), limiting_index_(limiting_index) {}

    // achievable maximum angle minus the required one, rad (negative when infeasible)
    double feasibility_margin() const { return margin_; }
    // 1-based index of the first ion whose target angle is unreachable, -1 if n/a
    int limiting_index() const { return limiting_index_; }

private:
    double margin_;
    int limiting_index_;
};

// Raised when an integration fails its convergence gate.
class accuracy_error : public error {
public:
    using error::error;
};

} // namespace wbus

#endif // WBUS_ERRORS_HPP
