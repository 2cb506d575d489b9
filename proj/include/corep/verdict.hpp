#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace corep {

/// Outcome vocabulary of the decision procedures. FOUND always carries an
/// exactly verified witness; NO comes only from complete linear reasoning;
/// NO_WITNESS_FOUND and UNKNOWN are honest negatives of a bounded search.
enum class Status { FOUND, NO, NO_WITNESS_FOUND, UNKNOWN };

inline std::string status_str(Status s) {
    switch (s) {
        case Status::FOUND: return "FOUND";
        case Status::NO: return "NO";
        case Status::NO_WITNESS_FOUND: return "NO_WITNESS_FOUND";
        case Status::UNKNOWN: return "UNKNOWN";
    }
    return "UNKNOWN";
}

struct SearchTrace {
    std::uint64_t seed = 0;
    long budget = 0;
    long trials_used = 0;
    std::vector<std::string> notes;
};

} // namespace corep
