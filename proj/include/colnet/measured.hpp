#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace colnet {

/// Reason codes attached to measurements that could not be produced.
namespace reason {
inline constexpr const char* kNotApplicable = "not applicable";
inline constexpr const char* kEmptyNetwork = "empty network";
inline constexpr const char* kDegenerateSize = "degenerate size";
inline constexpr const char* kBaselineDegenerate = "baseline degenerate";
inline constexpr const char* kPathLengthUndefined = "path length undefined";
inline constexpr const char* kDisabled = "disabled";
}  // namespace reason

/// A value or the reason it is missing. Missing values are never zeros.
template <typename T>
class Measured {
 public:
  Measured() : reason_("not computed") {}
  Measured(T value) : value_(std::move(value)) {}  // NOLINT: implicit by intent

  static Measured undefined(std::string why) {
    Measured m;
    m.reason_ = std::move(why);
    return m;
  }

  bool has_value() const { return value_.has_value(); }
  explicit operator bool() const { return has_value(); }

  const T& value() const {
    if (!value_) throw std::logic_error("undefined measurement: " + reason_);
    return *value_;
  }
  const T& operator*() const { return value(); }

  /// Empty when a value is present.
  const std::string& reason() const { return reason_; }

  template <typename U>
  Measured<U> cast() const {
    if (value_) return Measured<U>(static_cast<U>(*value_));
    return Measured<U>::undefined(reason_);
  }

  friend bool operator==(const Measured& a, const Measured& b) {
    return a.value_ == b.value_ && a.reason_ == b.reason_;
  }

 private:
  std::optional<T> value_;
  std::string reason_;
};

}  // namespace colnet
