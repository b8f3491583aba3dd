#ifndef ZETA27_ERROR_HPP
#define ZETA27_ERROR_HPP

#include <stdexcept>
#include <string>

namespace zeta27 {

// One exception type for the whole library. The kind matters at the CLI
// boundary, where refusals map to distinct exit codes.
class Error : public std::runtime_error {
public:
    enum class Kind {
        domain,        // precondition violated by the caller
        divide_by_zero,
        unsupported,   // outside the implemented range (e.g. sqrt in char 2)
        budget,        // enumeration would exceed the configured ceiling
        impossible,    // refused because the requested object cannot exist
        verification,  // a checked identity failed on concrete data
        internal
    };

    Error(Kind k, std::string msg) : std::runtime_error(std::move(msg)), kind(k) {}
    Kind kind;
};

[[noreturn]] inline void fail(Error::Kind k, const std::string& msg) { throw Error(k, msg); }

} // namespace zeta27

#endif
