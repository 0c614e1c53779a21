#include "wreath/cayley_ball.hpp"

#include <algorithm>

namespace wreath {

namespace {

template <class Step>
Ball run_bfs(const WreathGroupPtr& group, std::int64_t radius, std::size_t max_elements, std::size_t degree,
             Step step) {
  auto ball = std::make_shared<Ball>();
  WreathElement id(group);
  ball->distance.emplace(id, 0);
  std::vector<WreathElement> frontier{id};
  for (std::int64_t r = 1; r <= radius; ++r) {
    std::vector<WreathElement> next;
    for (const auto& e : frontier) {
      for (std::size_t g = 0; g < degree; ++g) {
        WreathElement n = step(e, g);
        if (ball->distance.emplace(n, r).second) {
          next.push_back(std::move(n));
          if (ball->distance.size() > max_elements) {
            // drop the unfinished layer so complete_radius stays truthful
            for (const auto& x : next) ball->distance.erase(x);
            throw BallCapExceeded("ball of radius " + std::to_string(radius) + " exceeds " +
                                      std::to_string(max_elements) + " elements",
                                  ball);
          }
        }
      }
    }
    frontier = std::move(next);
    ball->complete_radius = r;
    if (frontier.empty()) {
      ball->complete_radius = radius;
      break;
    }
  }
  ball->complete_radius = radius;
  return std::move(*ball);
}

}  // namespace

Ball bfs_ball(const WreathGroupPtr& group, std::int64_t radius, std::size_t max_elements) {
  const auto gens = standard_generators(*group);
  return run_bfs(group, radius, max_elements, gens.size(), [&](const WreathElement& e, std::size_t g) {
    WreathElement n = e;
    n.multiply_by(gens[g]);
    return n;
  });
}

Ball bfs_ball(const WreathGroupPtr& group, const std::vector<WreathElement>& generators, std::int64_t radius,
              std::size_t max_elements) {
  std::vector<WreathElement> sym;
  for (const auto& g : generators) {
    for (const auto& c : {g, g.inverse()}) {
      if (!c.is_identity() && std::find(sym.begin(), sym.end(), c) == sym.end()) sym.push_back(c);
    }
  }
  return run_bfs(group, radius, max_elements, sym.size(),
                 [&](const WreathElement& e, std::size_t g) { return wr_mul(e, sym[g]); });
}

std::vector<std::vector<WreathElement>> layers(const Ball& ball) {
  std::vector<std::vector<WreathElement>> out(static_cast<std::size_t>(ball.complete_radius) + 1);
  for (const auto& [e, d] : ball.distance) {
    if (d <= ball.complete_radius) out[static_cast<std::size_t>(d)].push_back(e);
  }
  return out;
}

}  // namespace wreath
