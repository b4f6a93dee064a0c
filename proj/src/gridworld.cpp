#include "ps/gridworld.hpp"

#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ps {

namespace {

// Fig-2 maze: start in the third row from the top, goal at the top-right,
// three wall segments. Transcription is pinned by tests: 46 percepts,
// 7 walls, BFS distance 14.
constexpr const char* kDefaultMazeText =
    ".......#G\n"
    "..#....#.\n"
    "S.#....#.\n"
    "..#......\n"
    ".....#...\n"
    ".........\n";

GridCell neighbor(GridCell c, GridAction a) {
  switch (a) {
    case GridAction::Left: return {c.x - 1, c.y};
    case GridAction::Right: return {c.x + 1, c.y};
    case GridAction::Up: return {c.x, c.y - 1};
    case GridAction::Down: return {c.x, c.y + 1};
  }
  throw std::invalid_argument("GridWorld: unknown action");
}

}  // namespace

GridWorld GridWorld::from_text(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) rows.push_back(line);
  }
  if (rows.empty()) throw std::invalid_argument("GridWorld: empty maze text");

  GridWorld w;
  w.height_ = static_cast<int>(rows.size());
  w.width_ = static_cast<int>(rows.front().size());
  w.wall_.assign(static_cast<std::size_t>(w.width_) * w.height_, 0);
  w.percept_.assign(w.wall_.size(), kTerminalPercept);

  bool have_start = false, have_goal = false;
  for (int y = 1; y <= w.height_; ++y) {
    const std::string& row = rows[y - 1];
    if (static_cast<int>(row.size()) != w.width_)
      throw std::invalid_argument("GridWorld: ragged maze rows");
    for (int x = 1; x <= w.width_; ++x) {
      const GridCell c{x, y};
      switch (row[x - 1]) {
        case '#':
          w.wall_[w.flat(c)] = 1;
          ++w.wall_count_;
          break;
        case '.':
          break;
        case 'S':
          if (have_start) throw std::invalid_argument("GridWorld: duplicate start");
          w.start_ = c;
          have_start = true;
          break;
        case 'G':
          if (have_goal) throw std::invalid_argument("GridWorld: duplicate goal");
          w.goal_ = c;
          have_goal = true;
          break;
        default:
          throw std::invalid_argument("GridWorld: unknown maze character");
      }
    }
  }
  if (!have_start || !have_goal)
    throw std::invalid_argument("GridWorld: maze needs one S and one G");

  // Row-major percept indices over free non-goal cells.
  for (int y = 1; y <= w.height_; ++y) {
    for (int x = 1; x <= w.width_; ++x) {
      const GridCell c{x, y};
      if (w.is_wall(c) || c == w.goal_) continue;
      w.percept_[w.flat(c)] = static_cast<int>(w.cells_.size());
      w.cells_.push_back(c);
    }
  }
  w.agent_ = w.start_;
  return w;
}

GridWorld GridWorld::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("GridWorld: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str());
}

GridWorld GridWorld::default_maze() { return from_text(kDefaultMazeText); }

GridCell GridWorld::cell_of_percept(int percept) const {
  if (percept < 0 || percept >= percept_count())
    throw std::out_of_range("GridWorld: percept index out of range");
  return cells_[static_cast<std::size_t>(percept)];
}

int GridWorld::reset() {
  agent_ = start_;
  done_ = false;
  return percept_of(agent_);
}

EnvStep GridWorld::step(GridAction action) {
  if (done_) throw std::logic_error("GridWorld: episode already finished");
  const GridCell target = neighbor(agent_, action);
  if (in_bounds(target) && !is_wall(target)) agent_ = target;
  if (agent_ == goal_) {
    done_ = true;
    return {kTerminalPercept, 1.0, true};
  }
  return {percept_of(agent_), 0.0, false};
}

int shortest_path_length(const GridWorld& world) {
  const int unvisited = -1;
  std::vector<int> dist(static_cast<std::size_t>(world.width()) * world.height(),
                        unvisited);
  const auto flat = [&](GridCell c) {
    return static_cast<std::size_t>(c.y - 1) * world.width() + (c.x - 1);
  };
  std::deque<GridCell> queue{world.start()};
  dist[flat(world.start())] = 0;
  while (!queue.empty()) {
    const GridCell c = queue.front();
    queue.pop_front();
    if (c == world.goal()) return dist[flat(c)];
    for (int a = 0; a < kGridActionCount; ++a) {
      GridCell t = c;
      switch (static_cast<GridAction>(a)) {
        case GridAction::Left: --t.x; break;
        case GridAction::Right: ++t.x; break;
        case GridAction::Up: --t.y; break;
        case GridAction::Down: ++t.y; break;
      }
      if (!world.in_bounds(t) || world.is_wall(t)) continue;
      if (dist[flat(t)] != unvisited) continue;
      dist[flat(t)] = dist[flat(c)] + 1;
      queue.push_back(t);
    }
  }
  throw std::runtime_error("GridWorld: goal unreachable from start");
}

}  // namespace ps
