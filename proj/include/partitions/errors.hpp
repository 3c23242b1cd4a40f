#ifndef PARTITIONS_ERRORS_HPP
#define PARTITIONS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace partitions {

// Error taxonomy; the CLI maps these onto exit codes
//   argument/parse/pole/domain -> 2, capability -> 3, numeric -> 4.

struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// bad model-spec text; carries the offending token position
struct parse_error : argument_error {
    parse_error(const std::string& msg, std::size_t pos)
        : argument_error(msg + " (at offset " + std::to_string(pos) + ")"), offset(pos) {}
    std::size_t offset;
};

// evaluation requested at a pole (zeta at 1, Gamma at -n, L at alpha, ...)
struct pole_error : argument_error {
    using argument_error::argument_error;
};

// model fails an admissibility condition; witness = modulus exhibiting the failure
struct admissibility_error : argument_error {
    admissibility_error(const std::string& msg, long long witness_modulus)
        : argument_error(msg), witness(witness_modulus) {}
    long long witness;
};

// a value the model cannot supply (e.g. L(-2j) for strong expansions)
struct capability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// iteration caps, bracket failures, quadrature residuals out of tolerance
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace partitions

#endif
