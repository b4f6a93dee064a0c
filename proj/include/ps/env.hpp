#pragma once

namespace ps {

/// Percept reported on the goal-entering step. The terminal state is not a
/// percept clip; this value must never be fed back into the network.
inline constexpr int kTerminalPercept = -1;

/// One environment transition as seen by the agent.
struct EnvStep {
  int percept;
  double reward;
  bool done;
};

}  // namespace ps
