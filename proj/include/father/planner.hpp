#pragma once
#include <optional>
#include <string>
#include <vector>

#include "father/core.hpp"
#include "father/roadnet.hpp"

namespace father {

enum class ArmKind { industrial, modular };

struct Arm {
    int id = 0;
    std::string name;
    ArmKind kind = ArmKind::industrial;
    double pick = 0.0;
    double transfer = 0.0;
    double place = 0.0;
    std::vector<int> reach;  // tray slots it can serve; empty = all

    double duration() const { return pick + transfer + place; }
    bool reaches(int slot) const;
};

struct Task {
    int id = 0;
    int part_id = 0;
    int source_bin = 0;  // -1 = staging (re-pick after a drop)
    int dest_slot = 0;
};

// Interval during which til_enable is false (predicted hazardous maneuvering).
struct BlackoutWindow {
    Interval iv;
    int message_id = -1;
    double margin = 0.0;
};

// at_start: an action only needs til_enable true at its start and may run
// into a window. conservative: the whole action interval must lie outside
// every window.
enum class TilMode { at_start, conservative };

struct DurativeAction {
    int task_id = 0;
    int arm_id = 0;
    TimePoint start = 0.0;
    Duration duration = 0.0;

    double end() const { return start + duration; }
};

struct Schedule {
    std::vector<DurativeAction> actions;
    double makespan = 0.0;
};

// Windows for every message arrived by `now`, padded by `margin`, merged,
// with fully-past windows dropped. Lost messages contribute nothing.
std::vector<BlackoutWindow> build_tils(const std::vector<Delivery>& deliveries,
                                       TimePoint now, double margin);

// Smallest start >= from at which an action of the given duration may begin
// under the TIL semantics of `mode`. Windows must be merged and sorted.
TimePoint earliest_feasible_start(TimePoint from, Duration duration,
                                  const std::vector<BlackoutWindow>& windows, TilMode mode);

// List scheduling in task priority order (earliest feasible start, tie to the
// lower arm id), followed by a local-search pass of pairwise swaps and arm
// reassignments accepting strict makespan improvements until fixpoint.
Schedule schedule_greedy(const std::vector<Task>& tasks, const std::vector<Arm>& arms,
                         const std::vector<BlackoutWindow>& windows, TimePoint ready,
                         TilMode mode = TilMode::at_start);
Schedule schedule_greedy(const std::vector<Task>& tasks, const std::vector<Arm>& arms,
                         const std::vector<BlackoutWindow>& windows,
                         const std::vector<TimePoint>& ready_per_arm,
                         TilMode mode = TilMode::at_start);

// Provably minimum makespan by branch-and-bound over task-to-arm assignments
// and per-arm sequences. Guarded to small instances; node_budget aborts
// runaway searches.
Schedule schedule_exact(const std::vector<Task>& tasks, const std::vector<Arm>& arms,
                        const std::vector<BlackoutWindow>& windows, TimePoint ready,
                        TilMode mode = TilMode::at_start,
                        long node_budget = 50'000'000L);

// Reschedule the remaining tasks around immovable in-flight actions: each
// arm becomes available at max(now, end of its in-flight action).
Schedule replan(const std::vector<Task>& remaining, const std::vector<DurativeAction>& in_flight,
                const std::vector<Arm>& arms, const std::vector<BlackoutWindow>& windows,
                TimePoint now, TilMode mode = TilMode::at_start);

}  // namespace father
