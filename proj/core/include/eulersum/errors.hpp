#ifndef EULERSUM_ERRORS_HPP
#define EULERSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eulersum {

// Input outside an operation's domain (odd Bernoulli order, zeta(1), x <= 0 for ln, ...).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Result cannot be certified at the requested precision (digit-count straddle,
// bracket wider than tolerance after escalation where a hard answer is required).
class precision_error : public std::runtime_error {
public:
    explicit precision_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace eulersum

#endif
