#ifndef OPEXACT_REPORT_HPP
#define OPEXACT_REPORT_HPP

#include <map>
#include <string>

namespace opexact {

enum class CheckStatus { pass, fail, skipped };

inline const char* to_cstr(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

struct IdentityReport {
    std::string identity_id;
    std::map<std::string, std::string> params;
    std::string lhs;
    std::string rhs;
    CheckStatus status = CheckStatus::pass;
    double elapsed_ms = 0.0;
};

}  // namespace opexact

#endif
