#include "father/planner.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace father {

bool Arm::reaches(int slot) const {
    if (reach.empty()) return true;
    return std::find(reach.begin(), reach.end(), slot) != reach.end();
}

std::vector<BlackoutWindow> build_tils(const std::vector<Delivery>& deliveries,
                                       TimePoint now, double margin) {
    if (margin < 0.0) throw std::invalid_argument("build_tils: margin must be >= 0");
    std::vector<BlackoutWindow> raw;
    for (const auto& d : deliveries) {
        if (d.lost || d.arrival > now) continue;
        BlackoutWindow w;
        w.iv = {d.msg.hazard.start - margin, d.msg.hazard.end + margin};
        w.message_id = d.msg.event_id;
        w.margin = margin;
        if (w.iv.end <= now) continue;  // entirely in the past
        raw.push_back(w);
    }
    std::sort(raw.begin(), raw.end(),
              [](const BlackoutWindow& a, const BlackoutWindow& b) {
                  return a.iv.start < b.iv.start;
              });
    std::vector<BlackoutWindow> merged;
    for (const auto& w : raw) {
        if (!merged.empty() && w.iv.start <= merged.back().iv.end)
            merged.back().iv.end = std::max(merged.back().iv.end, w.iv.end);
        else
            merged.push_back(w);
    }
    return merged;
}

TimePoint earliest_feasible_start(TimePoint from, Duration duration,
                                  const std::vector<BlackoutWindow>& windows, TilMode mode) {
    TimePoint s = from;
    bool moved = true;
    while (moved) {
        moved = false;
        for (const auto& w : windows) {
            bool blocked = (mode == TilMode::at_start)
                               ? w.iv.contains(s)
                               : w.iv.overlaps(s, s + duration);
            if (blocked && w.iv.end > s) {
                s = w.iv.end;
                moved = true;
            }
        }
    }
    return s;
}

namespace {

// Per-arm task sequences pushed to their earliest feasible starts. Delaying
// any action can only delay later ones (windows are fixed and constraints
// point forward in time), so this is the best realization of a sequence.
Schedule realize(const std::vector<std::vector<int>>& seqs, const std::vector<Task>& tasks,
                 const std::vector<Arm>& arms, const std::vector<BlackoutWindow>& windows,
                 const std::vector<TimePoint>& ready, TilMode mode) {
    Schedule sched;
    for (std::size_t ai = 0; ai < arms.size(); ++ai) {
        TimePoint free_at = ready[ai];
        for (int ti : seqs[ai]) {
            double dur = arms[ai].duration();
            TimePoint s = earliest_feasible_start(free_at, dur, windows, mode);
            sched.actions.push_back({tasks[ti].id, arms[ai].id, s, dur});
            free_at = s + dur;
            sched.makespan = std::max(sched.makespan, free_at);
        }
    }
    std::sort(sched.actions.begin(), sched.actions.end(),
              [](const DurativeAction& a, const DurativeAction& b) {
                  if (a.start != b.start) return a.start < b.start;
                  return a.arm_id < b.arm_id;
              });
    return sched;
}

void local_search(std::vector<std::vector<int>>& seqs, double& best_mk,
                  const std::vector<Task>& tasks, const std::vector<Arm>& arms,
                  const std::vector<BlackoutWindow>& windows,
                  const std::vector<TimePoint>& ready, TilMode mode) {
    auto mk_of = [&](const std::vector<std::vector<int>>& s) {
        return realize(s, tasks, arms, windows, ready, mode).makespan;
    };
    bool improved = true;
    while (improved) {
        improved = false;
        // reassign one task to another arm / position
        for (std::size_t a = 0; a < arms.size() && !improved; ++a) {
            for (std::size_t i = 0; i < seqs[a].size() && !improved; ++i) {
                int ti = seqs[a][i];
                for (std::size_t b = 0; b < arms.size() && !improved; ++b) {
                    if (!arms[b].reaches(tasks[ti].dest_slot)) continue;
                    for (std::size_t j = 0; j <= seqs[b].size() && !improved; ++j) {
                        if (a == b && (j == i || j == i + 1)) continue;
                        auto cand = seqs;
                        cand[a].erase(cand[a].begin() + i);
                        std::size_t jj = (a == b && j > i) ? j - 1 : j;
                        cand[b].insert(cand[b].begin() + jj, ti);
                        double mk = mk_of(cand);
                        if (mk < best_mk - 1e-9) {
                            seqs = cand;
                            best_mk = mk;
                            improved = true;
                        }
                    }
                }
            }
        }
        if (improved) continue;
        // swap two tasks across positions
        for (std::size_t a = 0; a < arms.size() && !improved; ++a)
            for (std::size_t i = 0; i < seqs[a].size() && !improved; ++i)
                for (std::size_t b = a; b < arms.size() && !improved; ++b)
                    for (std::size_t j = (a == b ? i + 1 : 0); j < seqs[b].size() && !improved;
                         ++j) {
                        int ta = seqs[a][i], tb = seqs[b][j];
                        if (!arms[b].reaches(tasks[ta].dest_slot)) continue;
                        if (!arms[a].reaches(tasks[tb].dest_slot)) continue;
                        auto cand = seqs;
                        std::swap(cand[a][i], cand[b][j]);
                        double mk = mk_of(cand);
                        if (mk < best_mk - 1e-9) {
                            seqs = cand;
                            best_mk = mk;
                            improved = true;
                        }
                    }
    }
}

}  // namespace

Schedule schedule_greedy(const std::vector<Task>& tasks, const std::vector<Arm>& arms,
                         const std::vector<BlackoutWindow>& windows, TimePoint ready,
                         TilMode mode) {
    return schedule_greedy(tasks, arms, windows,
                           std::vector<TimePoint>(arms.size(), ready), mode);
}

Schedule schedule_greedy(const std::vector<Task>& tasks, const std::vector<Arm>& arms,
                         const std::vector<BlackoutWindow>& windows,
                         const std::vector<TimePoint>& ready_per_arm, TilMode mode) {
    if (arms.empty()) throw std::invalid_argument("schedule_greedy: no arms");
    if (ready_per_arm.size() != arms.size())
        throw std::invalid_argument("schedule_greedy: ready size mismatch");

    std::vector<std::vector<int>> seqs(arms.size());
    std::vector<TimePoint> free_at = ready_per_arm;
    for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
        int best_arm = -1;
        TimePoint best_start = std::numeric_limits<double>::infinity();
        for (std::size_t ai = 0; ai < arms.size(); ++ai) {
            if (!arms[ai].reaches(tasks[ti].dest_slot)) continue;
            TimePoint s = earliest_feasible_start(free_at[ai], arms[ai].duration(), windows, mode);
            if (s < best_start) {  // tie keeps the lower arm id
                best_start = s;
                best_arm = static_cast<int>(ai);
            }
        }
        if (best_arm < 0)
            throw std::runtime_error("schedule_greedy: task " + std::to_string(tasks[ti].id) +
                                     " unreachable by any of " + std::to_string(arms.size()) +
                                     " arms");
        seqs[best_arm].push_back(static_cast<int>(ti));
        free_at[best_arm] = best_start + arms[best_arm].duration();
    }

    double mk = realize(seqs, tasks, arms, windows, ready_per_arm, mode).makespan;
    local_search(seqs, mk, tasks, arms, windows, ready_per_arm, mode);
    return realize(seqs, tasks, arms, windows, ready_per_arm, mode);
}

namespace {

struct ExactState {
    const std::vector<Task>* tasks;
    const std::vector<Arm>* arms;
    const std::vector<BlackoutWindow>* windows;
    TilMode mode;
    long nodes = 0;
    long budget = 0;
    double best_mk = std::numeric_limits<double>::infinity();
    std::vector<std::vector<int>> best_seqs;
    std::vector<std::vector<int>> seqs;
    std::vector<TimePoint> free_at;
    std::vector<bool> done;
    int remaining = 0;

    // Tasks are interchangeable when their reach constraints match (duration
    // is a property of the arm), so branch on one representative per class.
    std::vector<int> class_rep() const {
        std::vector<int> reps;
        for (std::size_t i = 0; i < tasks->size(); ++i) {
            if (done[i]) continue;
            bool dup = false;
            for (int r : reps) {
                const auto& a = (*tasks)[r];
                const auto& b = (*tasks)[i];
                std::vector<bool> ra, rb;
                for (const auto& arm : *arms) {
                    ra.push_back(arm.reaches(a.dest_slot));
                    rb.push_back(arm.reaches(b.dest_slot));
                }
                if (ra == rb) {
                    dup = true;
                    break;
                }
            }
            if (!dup) reps.push_back(static_cast<int>(i));
        }
        return reps;
    }

    void dfs(double mk) {
        if (++nodes > budget)
            throw std::runtime_error("schedule_exact: node budget exceeded");
        if (remaining == 0) {
            if (mk < best_mk) {
                best_mk = mk;
                best_seqs = seqs;
            }
            return;
        }
        if (mk >= best_mk) return;
        for (int ti : class_rep()) {
            // identical arms at the same free time explore identical subtrees
            std::vector<std::pair<double, std::size_t>> seen;
            for (std::size_t ai = 0; ai < arms->size(); ++ai) {
                const Arm& arm = (*arms)[ai];
                if (!arm.reaches((*tasks)[ti].dest_slot)) continue;
                TimePoint s = earliest_feasible_start(free_at[ai], arm.duration(), *windows, mode);
                bool dup = false;
                for (auto& [ps, pi] : seen) {
                    const Arm& prev = (*arms)[pi];
                    if (ps == s && prev.pick == arm.pick && prev.transfer == arm.transfer &&
                        prev.place == arm.place && prev.reach == arm.reach) {
                        dup = true;
                        break;
                    }
                }
                if (dup) continue;
                seen.emplace_back(s, ai);
                double child_mk = std::max(mk, s + arm.duration());
                if (child_mk >= best_mk) continue;
                TimePoint saved = free_at[ai];
                free_at[ai] = s + arm.duration();
                seqs[ai].push_back(ti);
                done[ti] = true;
                --remaining;
                dfs(child_mk);
                ++remaining;
                done[ti] = false;
                seqs[ai].pop_back();
                free_at[ai] = saved;
            }
        }
    }
};

}  // namespace

Schedule schedule_exact(const std::vector<Task>& tasks, const std::vector<Arm>& arms,
                        const std::vector<BlackoutWindow>& windows, TimePoint ready,
                        TilMode mode, long node_budget) {
    if (tasks.size() > 8)
        throw std::invalid_argument("schedule_exact: instance too large (> 8 tasks)");
    if (arms.empty()) throw std::invalid_argument("schedule_exact: no arms");
    for (const auto& t : tasks) {
        bool ok = false;
        for (const auto& a : arms) ok = ok || a.reaches(t.dest_slot);
        if (!ok)
            throw std::runtime_error("schedule_exact: task " + std::to_string(t.id) +
                                     " unreachable by any arm");
    }

    ExactState st;
    st.tasks = &tasks;
    st.arms = &arms;
    st.windows = &windows;
    st.mode = mode;
    st.budget = node_budget;
    st.seqs.assign(arms.size(), {});
    st.best_seqs.assign(arms.size(), {});
    st.free_at.assign(arms.size(), ready);
    st.done.assign(tasks.size(), false);
    st.remaining = static_cast<int>(tasks.size());
    st.dfs(0.0);

    std::vector<TimePoint> ready_per_arm(arms.size(), ready);
    return realize(st.best_seqs, tasks, arms, windows, ready_per_arm, mode);
}

Schedule replan(const std::vector<Task>& remaining, const std::vector<DurativeAction>& in_flight,
                const std::vector<Arm>& arms, const std::vector<BlackoutWindow>& windows,
                TimePoint now, TilMode mode) {
    std::vector<TimePoint> ready(arms.size(), now);
    for (const auto& act : in_flight) {
        for (std::size_t ai = 0; ai < arms.size(); ++ai)
            if (arms[ai].id == act.arm_id)
                ready[ai] = std::max(ready[ai], act.end());
    }
    return schedule_greedy(remaining, arms, windows, ready, mode);
}

}  // namespace father
