// Domain error type with stable machine-readable kind tags.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace wrp {

class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
  throw Error(kind, msg);
}

// Kind tags used across the library. Tests match on these strings.
namespace errk {
inline constexpr const char* MixedGroupKinds = "MixedGroupKinds";
inline constexpr const char* PointOutOfDomain = "PointOutOfDomain";
inline constexpr const char* UnboundSymbol = "UnboundSymbol";
inline constexpr const char* RadiusBudgetExceeded = "RadiusBudgetExceeded";
inline constexpr const char* TruncationEscape = "TruncationEscape";
inline constexpr const char* MaskWidthExceeded = "MaskWidthExceeded";
inline constexpr const char* ClassifierViolation = "ClassifierViolation";
inline constexpr const char* NotFullyEnumerable = "NotFullyEnumerable";
inline constexpr const char* ConditionViolated = "ConditionViolated";
inline constexpr const char* NotInvariant = "NotInvariant";
inline constexpr const char* MissingRepresentatives = "MissingRepresentatives";
inline constexpr const char* PreconditionNotFP = "PreconditionNotFP";
inline constexpr const char* TrivialLabel = "TrivialLabel";
inline constexpr const char* NotIncreasing = "NotIncreasing";
inline constexpr const char* NotRegularOnClass = "NotRegularOnClass";
inline constexpr const char* NotHomomorphism = "NotHomomorphism";
inline constexpr const char* NotSurjective = "NotSurjective";
inline constexpr const char* DoesNotContainH = "DoesNotContainH";
inline constexpr const char* NotNormal = "NotNormal";
inline constexpr const char* BudgetExceeded = "BudgetExceeded";
inline constexpr const char* SchemaError = "SchemaError";
inline constexpr const char* Overflow = "Overflow";
inline constexpr const char* Unsupported = "Unsupported";
}  // namespace errk

}  // namespace wrp
