#pragma once

#include <stdexcept>
#include <string>

namespace elena {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// codec errors
struct NonBalanced : Error { using Error::Error; };
struct BadAlphabet : Error { using Error::Error; };
struct TrailingGarbage : Error { using Error::Error; };
struct GrammarViolation : Error { using Error::Error; };
struct BadToken : Error { using Error::Error; };

// conversion preconditions
struct NotElenaShape : Error { using Error::Error; };
struct NotNondecreasing : Error { using Error::Error; };
struct TooTall : Error { using Error::Error; };

// resource limits
struct LimitExceeded : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };

// exact series identity failed; message carries the first offending coefficient
struct IdentityViolated : Error { using Error::Error; };

} // namespace elena
