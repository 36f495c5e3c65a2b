#pragma once

#include <ostream>

#include "trapcorr/error.hpp"

namespace trapcorr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitNoConvergence = 2;

template <class F> int guarded(F &&body, std::ostream &err) {
    try {
        body();
        return kExitOk;
    } catch (const ConvergenceError &e) {
        err << "error: " << e.what() << '\n';
        return kExitNoConvergence;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
}

} // namespace trapcorr::cli
