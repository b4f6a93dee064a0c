#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ps/env.hpp"

namespace ps {

enum class GridAction { Left = 0, Right = 1, Up = 2, Down = 3 };
inline constexpr int kGridActionCount = 4;

/// Cell coordinates: column x in 1..width, row y in 1..height, row 1 at the
/// top. The canonical maze starts at (1,3) with the goal at the top-right.
struct GridCell {
  int x = 0;
  int y = 0;
  friend bool operator==(const GridCell&, const GridCell&) = default;
};

/// Maze with four movement actions. Moves into walls or off the grid leave
/// the agent in place but still consume the time step. Entering the goal
/// yields reward 1 and ends the episode; every other step yields reward 0.
///
/// Percepts are the non-wall, non-goal cells, indexed row-major 0..n-1. The
/// goal is terminal and is not a percept.
class GridWorld {
 public:
  /// Parses a maze from text: '#' wall, '.' free, 'S' start, 'G' goal.
  /// All rows must have equal length; exactly one S and one G.
  static GridWorld from_text(const std::string& text);
  static GridWorld load_file(const std::string& path);
  /// The built-in 6x9 maze (7 walls, 46 percepts, 14-step optimal path).
  static GridWorld default_maze();

  int width() const { return width_; }
  int height() const { return height_; }
  int percept_count() const { return static_cast<int>(cells_.size()); }
  static constexpr int action_count() { return kGridActionCount; }
  int wall_count() const { return wall_count_; }

  GridCell start() const { return start_; }
  GridCell goal() const { return goal_; }
  GridCell agent() const { return agent_; }
  bool done() const { return done_; }

  bool in_bounds(GridCell c) const {
    return c.x >= 1 && c.x <= width_ && c.y >= 1 && c.y <= height_;
  }
  bool is_wall(GridCell c) const {
    return in_bounds(c) && wall_[flat(c)] != 0;
  }
  /// Percept index of a cell, or kTerminalPercept for walls and the goal.
  int percept_of(GridCell c) const { return percept_[flat(c)]; }
  GridCell cell_of_percept(int percept) const;

  /// Places the agent on the start cell and revives a finished episode.
  int reset();
  EnvStep step(GridAction action);
  EnvStep step(int action_index) { return step(static_cast<GridAction>(action_index)); }

 private:
  GridWorld() = default;
  std::size_t flat(GridCell c) const {
    return static_cast<std::size_t>(c.y - 1) * width_ + (c.x - 1);
  }

  int width_ = 0;
  int height_ = 0;
  int wall_count_ = 0;
  std::vector<std::uint8_t> wall_;
  std::vector<int> percept_;      // cell -> percept index (kTerminalPercept for wall/goal)
  std::vector<GridCell> cells_;   // percept index -> cell
  GridCell start_, goal_, agent_;
  bool done_ = false;
};

/// Breadth-first-search oracle: minimal number of moves from start to goal
/// under the blocking rules above. Throws std::runtime_error if the goal is
/// unreachable.
int shortest_path_length(const GridWorld& world);

}  // namespace ps
