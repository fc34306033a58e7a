#pragma once

#include <stdexcept>

namespace kerr {

/// The truncated number basis cannot hold the requested state or operation.
class TruncationInsufficient : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A time series does not contain enough full revivals to establish a period.
class NoRevivalFound : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Fractional-revival order without a matching moment channel.
class UnsupportedOrder : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Time grid too coarse to resolve oscillations near a fractional revival.
class GridTooCoarse : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace kerr
