#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wog {

/// Malformed graph description or an argument that names a vertex the graph does not have.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive procedure was asked to run on a graph larger than its configured bound.
class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(const std::string& what, std::size_t order, std::size_t bound)
      : std::runtime_error(what + ": graph has " + std::to_string(order) +
                           " vertices, bound is " + std::to_string(bound)),
        order_(order),
        bound_(bound) {}

  std::size_t order() const { return order_; }
  std::size_t bound() const { return bound_; }

 private:
  std::size_t order_;
  std::size_t bound_;
};

/// Default bound for single-instance exhaustive enumeration.
inline constexpr std::size_t kDefaultBound = 24;
/// Default bound used inside fuzz loops.
inline constexpr std::size_t kFuzzBound = 12;

inline void require_bound(const char* what, std::size_t order, std::size_t bound) {
  if (order > bound) throw BoundExceeded(what, order, bound);
}

}  // namespace wog
