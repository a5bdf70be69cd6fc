#include "father/executor.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>
#include <queue>
#include <stdexcept>

namespace father {

GateDecision dispatch_gate(TimePoint now, Duration duration,
                           const std::vector<BlackoutWindow>& known_windows,
                           Strategy strategy, TilMode mode) {
    if (strategy == Strategy::static_ || strategy == Strategy::on_wheels) return {true, now};
    TimePoint s = earliest_feasible_start(now, duration, known_windows, mode);
    if (s <= now) return {true, now};
    return {false, s};
}

namespace {

constexpr double kTick = 0.01;  // accel cadence while a part is held

struct HeapEv {
    TimePoint t;
    long seq;
    enum Kind { message_arrival, action_end, part_drop, wakeup } kind;
    int idx;  // delivery index / arm index
};

struct HeapCmp {
    bool operator()(const HeapEv& a, const HeapEv& b) const {
        if (a.t != b.t) return a.t > b.t;
        return a.seq > b.seq;  // ties broken by insertion order
    }
};

// Outcome of one carry, precomputed against the immutable trace at dispatch.
struct CarryOutcome {
    bool dropped = false;
    TimePoint drop_time = 0.0;
    double pose_delta = 0.0;  // drift (plus drop penalty when dropped)
    std::vector<Incident> episodes;
};

struct ArmRuntime {
    Arm arm;
    bool busy = false;
    std::deque<Task> queue;
    std::optional<Task> active_task;
    DurativeAction active_act{};
    CarryOutcome active_carry;
    TimePoint pending_wake = -1.0;
};

struct Sim {
    const ScenarioConfig& cfg;
    RunResult& res;
    std::vector<ArmRuntime> arms;
    std::vector<PartState>& parts;
    std::vector<BlackoutWindow> known_windows;
    std::deque<Task> pending_recovery;
    std::vector<int> retries_left;
    std::priority_queue<HeapEv, std::vector<HeapEv>, HeapCmp> heap;
    long seq = 0;
    int next_task_id;
    bool zero_accel;

    Sim(const ScenarioConfig& c, RunResult& r)
        : cfg(c), res(r), parts(r.parts), zero_accel(c.strategy == Strategy::static_) {}

    void log(TimePoint t, const std::string& kind, const std::string& detail) {
        res.timeline.push_back({t, seq++, kind, detail});
    }

    void push(TimePoint t, HeapEv::Kind kind, int idx) { heap.push({t, seq++, kind, idx}); }

    double accel_mag(TimePoint t) const {
        if (zero_accel) return 0.0;
        if (res.trace.empty() || t < res.trace.first_t() || t > res.trace.last_t()) return 0.0;
        return accel_at(res.trace, t).lateral_mag();
    }

    CarryOutcome scan_carry(const PartState& part, Interval held) const {
        CarryOutcome out;
        if (zero_accel) return out;
        std::vector<PartState> probe{part};
        probe[0].loc = Location::held;
        double before = probe[0].pose_error;
        std::vector<Incident> raw;
        for (double t = held.start; t <= held.end + 1e-9; t += kTick) {
            apply_accel(probe, accel_mag(t), kTick, cfg.disturbance, t, raw);
            if (probe[0].loc == Location::staging) {
                out.dropped = true;
                out.drop_time = t;
                break;
            }
        }
        out.pose_delta = probe[0].pose_error - before;
        // compress per-tick slips into contiguous episodes, keeping the peak
        for (const auto& inc : raw) {
            if (inc.kind == IncidentKind::drop) {
                out.episodes.push_back(inc);
            } else if (!out.episodes.empty() &&
                       out.episodes.back().kind == IncidentKind::slip &&
                       inc.t - out.episodes.back().t <= 2.5 * kTick) {
                auto& ep = out.episodes.back();
                ep.a_mag = std::max(ep.a_mag, inc.a_mag);
                ep.t = inc.t;  // track episode tail to extend it
            } else {
                out.episodes.push_back(inc);
            }
        }
        return out;
    }

    std::vector<Task> queued_tasks() const {
        std::vector<Task> out;
        for (const auto& a : arms)
            for (const auto& t : a.queue) out.push_back(t);
        for (const auto& t : pending_recovery) out.push_back(t);
        return out;
    }

    void install_schedule(const Schedule& sched, const std::vector<Task>& available) {
        for (auto& a : arms) a.queue.clear();
        pending_recovery.clear();
        for (const auto& act : sched.actions) {  // already sorted by start
            auto it = std::find_if(available.begin(), available.end(),
                                   [&](const Task& t) { return t.id == act.task_id; });
            if (it == available.end()) throw std::logic_error("install_schedule: unknown task");
            arms[act.arm_id].queue.push_back(*it);
        }
        res.schedules.push_back(sched);
    }

    void do_replan(TimePoint now) {
        std::vector<Task> remaining = queued_tasks();
        std::vector<DurativeAction> in_flight;
        for (const auto& a : arms)
            if (a.busy) in_flight.push_back(a.active_act);
        Schedule sched = replan(remaining, in_flight, armset(), known_windows, now,
                                cfg.planner.mode);
        install_schedule(sched, remaining);
        log(now, "replan", "tasks=" + std::to_string(remaining.size()) +
                               " windows=" + std::to_string(known_windows.size()));
    }

    std::vector<Arm> armset() const {
        std::vector<Arm> out;
        for (const auto& a : arms) out.push_back(a.arm);
        return out;
    }

    void start_action(ArmRuntime& ar, const Task& task, TimePoint now) {
        DurativeAction act{task.id, ar.arm.id, now, ar.arm.duration()};
        ar.busy = true;
        ar.active_task = task;
        ar.active_act = act;
        res.executed.push_back(act);
        log(now, "action_start", "task=" + std::to_string(task.id) +
                                     " arm=" + std::to_string(ar.arm.id) +
                                     " part=" + std::to_string(task.part_id));
        auto& part = part_by_id(task.part_id);
        part.loc = Location::held;
        part.arm = ar.arm.id;
        Interval held{now + ar.arm.pick, now + ar.arm.duration()};
        ar.active_carry = scan_carry(part, held);
        for (const auto& ep : ar.active_carry.episodes) {
            res.incidents.push_back(ep);
            log(ep.t, ep.kind == IncidentKind::drop ? "drop" : "slip",
                "part=" + std::to_string(ep.part_id) + " a_mag=" + std::to_string(ep.a_mag));
        }
        if (ar.active_carry.dropped)
            push(ar.active_carry.drop_time, HeapEv::part_drop, ar.arm.id);
        push(act.end(), HeapEv::action_end, ar.arm.id);
    }

    PartState& part_by_id(int part_id) {
        for (auto& p : parts)
            if (p.part_id == part_id) return p;
        throw std::logic_error("unknown part");
    }

    bool order_complete() const {
        return std::all_of(parts.begin(), parts.end(),
                           [](const PartState& p) { return p.loc == Location::on_tray; });
    }

    void try_dispatch(TimePoint now) {
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto& ar : arms) {
                if (ar.busy) continue;
                const Task* next = nullptr;
                bool from_recovery = false;
                if (!ar.queue.empty()) {
                    next = &ar.queue.front();
                } else if (!pending_recovery.empty() &&
                           ar.arm.reaches(pending_recovery.front().dest_slot)) {
                    next = &pending_recovery.front();
                    from_recovery = true;
                }
                if (!next) continue;
                GateDecision gate = dispatch_gate(now, ar.arm.duration(), known_windows,
                                                  cfg.strategy, cfg.planner.mode);
                if (gate.start) {
                    Task task = *next;
                    if (from_recovery)
                        pending_recovery.pop_front();
                    else
                        ar.queue.pop_front();
                    start_action(ar, task, now);
                    progress = true;
                } else if (ar.pending_wake != gate.defer_until) {
                    ar.pending_wake = gate.defer_until;
                    push(gate.defer_until, HeapEv::wakeup, ar.arm.id);
                }
            }
        }
    }

    void run() {
        next_task_id = cfg.order.part_count();
        retries_left.assign(cfg.order.part_count(), 1);
        for (auto& a : cfg.make_arms()) {
            ArmRuntime ar;
            ar.arm = a;
            arms.push_back(ar);
        }
        for (int i = 0; i < cfg.order.part_count(); ++i)
            parts.push_back({i, Location::in_bin, -1, -1, 0.0, false});

        std::vector<Task> initial_tasks = cfg.make_tasks();
        Schedule plan0 = schedule_greedy(initial_tasks, armset(), {}, 0.0, cfg.planner.mode);
        install_schedule(plan0, initial_tasks);

        for (std::size_t i = 0; i < res.deliveries.size(); ++i)
            if (!res.deliveries[i].lost)
                push(res.deliveries[i].arrival, HeapEv::message_arrival, static_cast<int>(i));

        try_dispatch(0.0);

        bool capped = false;
        while (!heap.empty()) {
            HeapEv ev = heap.top();
            heap.pop();
            if (ev.t > cfg.time_cap) {
                capped = true;
                break;
            }
            TimePoint now = ev.t;
            switch (ev.kind) {
                case HeapEv::message_arrival: {
                    const auto& d = res.deliveries[ev.idx];
                    log(now, "message_arrival", "event=" + std::to_string(d.msg.event_id));
                    if (cfg.strategy == Strategy::wait ||
                        cfg.strategy == Strategy::replan_til) {
                        known_windows =
                            build_tils(res.deliveries, now, cfg.planner.margin);
                        if (cfg.strategy == Strategy::replan_til) do_replan(now);
                        try_dispatch(now);
                    }
                    break;
                }
                case HeapEv::action_end: {
                    auto& ar = arms[ev.idx];
                    const Task task = *ar.active_task;
                    auto& part = part_by_id(task.part_id);
                    bool placed = part.loc == Location::held && part.arm == ar.arm.id;
                    if (placed) {
                        part.loc = Location::on_tray;
                        part.slot = task.dest_slot;
                        part.arm = -1;
                        part.secured = true;  // tray slot fixture engages on placement
                        part.pose_error += ar.active_carry.pose_delta;
                    }
                    log(now, "action_end",
                        "task=" + std::to_string(task.id) + " arm=" +
                            std::to_string(ar.arm.id) + (placed ? " placed" : " empty"));
                    ar.busy = false;
                    ar.active_task.reset();
                    if (order_complete()) {
                        res.completed = true;
                        res.tpt = now;
                        log(now, "order_complete", "");
                        return;
                    }
                    try_dispatch(now);
                    break;
                }
                case HeapEv::part_drop: {
                    auto& ar = arms[ev.idx];
                    const Task task = *ar.active_task;
                    auto& part = part_by_id(task.part_id);
                    part.loc = Location::staging;
                    part.arm = -1;
                    part.pose_error += ar.active_carry.pose_delta;
                    if (retries_left[task.part_id] > 0) {
                        --retries_left[task.part_id];
                        Task recovery{next_task_id++, task.part_id, -1, task.dest_slot};
                        pending_recovery.push_back(recovery);
                        if (cfg.strategy == Strategy::replan_til) do_replan(now);
                    }
                    try_dispatch(now);
                    break;
                }
                case HeapEv::wakeup: {
                    arms[ev.idx].pending_wake = -1.0;
                    try_dispatch(now);
                    break;
                }
            }
        }
        // incomplete: stuck (unrecoverable part) or time cap
        res.completed = false;
        res.tpt = cfg.time_cap;
        (void)capped;
    }
};

}  // namespace

RunResult simulate(const ScenarioConfig& cfg) {
    RunResult res;
    res.config = cfg;

    Rng events_rng = make_rng(cfg.seed, "events");
    Rng channel_rng = make_rng(cfg.seed, "channel");
    Rng noise_rng = make_rng(cfg.seed, "noise");

    if (cfg.road_events.mode == "poisson") {
        res.events = generate_events(cfg.road_events.gen, cfg.trace.horizon, events_rng);
    } else {
        res.events = cfg.road_events.events;
        for (std::size_t i = 0; i < res.events.size(); ++i)
            res.events[i].id = static_cast<int>(i);
    }

    // The trace and channel outcomes are generated identically for every
    // strategy at the same seed; static simply executes against zero
    // acceleration without consuming anything extra.
    if (cfg.trace.source == "file")
        res.trace = load_trace(cfg.trace.path);
    else
        res.trace = synth_trace(res.events, cfg.trace.horizon, cfg.trace.noise_rms, noise_rng);

    for (const auto& msg : signage(res.events))
        res.deliveries.push_back(transmit(msg, cfg.channel, channel_rng));

    Sim sim(cfg, res);
    sim.run();

    std::stable_sort(res.timeline.begin(), res.timeline.end(),
                     [](const SimEventRow& a, const SimEventRow& b) { return a.t < b.t; });
    std::sort(res.incidents.begin(), res.incidents.end(),
              [](const Incident& a, const Incident& b) {
                  if (a.t != b.t) return a.t < b.t;
                  return a.part_id < b.part_id;
              });
    return res;
}

}  // namespace father
