#pragma once
#include <string>
#include <vector>

#include "father/executor.hpp"
#include "father/scoring.hpp"

namespace father {

// Fixed-width numeric formatting so reruns are byte-identical.
std::string fmt_num(double v);

void write_timeline_csv(const RunResult& res, const std::string& path);
void write_events_csv(const RunResult& res, const std::string& path);
void write_schedules_csv(const RunResult& res, const std::string& path);
void write_score_csv(const std::vector<CompareRow>& rows, const std::string& path);

struct SweepRun {
    std::string strategy;
    std::uint64_t seed = 0;
    int points = 0;
    double tgs = 0.0;
    double tpt = 0.0;
};

struct SweepAggregate {
    std::string strategy;
    double mean_points = 0.0;
    double mean_tgs = 0.0;
    double mean_tpt = 0.0;
    double tpt_ratio = 0.0;  // mean_tpt / mean_tpt(static), 0 when static absent
};

void write_comparison_csv(const std::vector<SweepAggregate>& aggregates,
                          const std::vector<SweepRun>& runs, const std::string& path);

// Bar chart of total points and TPT ratio per strategy, hand-written markup.
void write_chart_svg(const std::vector<SweepAggregate>& aggregates, const std::string& path);

}  // namespace father
