#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "wreath/error.hpp"
#include "wreath/wreath_element.hpp"

namespace wreath {

using DistanceMap = std::unordered_map<WreathElement, std::int64_t, WreathElementHash>;

struct Ball {
  DistanceMap distance;
  /// Every element at distance <= complete_radius is present.
  std::int64_t complete_radius = 0;
};

/// Thrown when a ball outgrows its element cap; carries the layers finished
/// so far.
class BallCapExceeded : public CapExceeded {
 public:
  BallCapExceeded(const std::string& what, std::shared_ptr<Ball> partial)
      : CapExceeded(what), partial_(std::move(partial)) {}
  const Ball& partial() const { return *partial_; }

 private:
  std::shared_ptr<Ball> partial_;
};

/// Breadth-first search in the Cayley graph of A wr Z^d over the standard
/// generators.
Ball bfs_ball(const WreathGroupPtr& group, std::int64_t radius, std::size_t max_elements = 5'000'000);

/// Same search over an arbitrary generating set of a subgroup (inverses are
/// added automatically).
Ball bfs_ball(const WreathGroupPtr& group, const std::vector<WreathElement>& generators, std::int64_t radius,
              std::size_t max_elements = 5'000'000);

/// Elements of the ball grouped by distance.
std::vector<std::vector<WreathElement>> layers(const Ball& ball);

}  // namespace wreath
