#ifndef MOMGRA_COMMON_HPP
#define MOMGRA_COMMON_HPP

#include <stdexcept>
#include <string>

namespace momgra {

/* Error kinds mirror the failure modes of the algorithms: a GKM violation,
 * a degree cutoff that did not stabilize, a module that failed to fit a
 * graded free ansatz, and an exact division that was not exact. */
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct GkmError : Error {
    explicit GkmError(const std::string& msg) : Error(msg) {}
};

struct CutoffError : Error {
    explicit CutoffError(const std::string& msg) : Error(msg) {}
};

struct FitError : Error {
    explicit FitError(const std::string& msg) : Error(msg) {}
};

struct DivisionError : Error {
    explicit DivisionError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

}  // namespace momgra

#endif
