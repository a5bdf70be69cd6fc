#include "father/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace father {

std::string fmt_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

namespace {
std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}
}  // namespace

void write_timeline_csv(const RunResult& res, const std::string& path) {
    auto out = open_out(path);
    out << "t,seq,kind,detail\n";
    for (const auto& row : res.timeline)
        out << fmt_num(row.t) << ',' << row.seq << ',' << row.kind << ',' << row.detail
            << '\n';
}

void write_events_csv(const RunResult& res, const std::string& path) {
    auto out = open_out(path);
    out << "event_id,kind,onset,duration,peak,sent_at,arrival\n";
    for (std::size_t i = 0; i < res.events.size(); ++i) {
        const auto& ev = res.events[i];
        out << ev.id << ',' << to_string(ev.kind) << ',' << fmt_num(ev.onset) << ','
            << fmt_num(ev.duration) << ',' << fmt_num(ev.peak_accel) << ','
            << fmt_num(ev.onset - ev.sign_lead) << ',';
        if (i < res.deliveries.size() && !res.deliveries[i].lost)
            out << fmt_num(res.deliveries[i].arrival);
        else
            out << "LOST";
        out << '\n';
    }
}

void write_schedules_csv(const RunResult& res, const std::string& path) {
    auto out = open_out(path);
    out << "plan,task,arm,start,duration\n";
    for (std::size_t p = 0; p < res.schedules.size(); ++p)
        for (const auto& act : res.schedules[p].actions)
            out << p << ',' << act.task_id << ',' << act.arm_id << ',' << fmt_num(act.start)
                << ',' << fmt_num(act.duration) << '\n';
}

void write_score_csv(const std::vector<CompareRow>& rows, const std::string& path) {
    auto out = open_out(path);
    out << "label,points,tgs,tpt,ratio\n";
    for (const auto& r : rows)
        out << r.label << ',' << r.points << ',' << fmt_num(r.tgs) << ',' << fmt_num(r.tpt)
            << ',' << fmt_num(r.ratio) << '\n';
}

void write_comparison_csv(const std::vector<SweepAggregate>& aggregates,
                          const std::vector<SweepRun>& runs, const std::string& path) {
    auto out = open_out(path);
    out << "row,strategy,seed,points,tgs,tpt,tpt_ratio\n";
    for (const auto& a : aggregates)
        out << "aggregate," << a.strategy << ",," << fmt_num(a.mean_points) << ','
            << fmt_num(a.mean_tgs) << ',' << fmt_num(a.mean_tpt) << ','
            << fmt_num(a.tpt_ratio) << '\n';
    for (const auto& r : runs)
        out << "run," << r.strategy << ',' << r.seed << ',' << r.points << ','
            << fmt_num(r.tgs) << ',' << fmt_num(r.tpt) << ",\n";
}

void write_chart_svg(const std::vector<SweepAggregate>& aggregates, const std::string& path) {
    auto out = open_out(path);
    const int bar_w = 60, gap = 40, base_y = 220, chart_h = 160;
    int width = 120 + static_cast<int>(aggregates.size()) * 2 * (bar_w + gap);
    double max_points = 1.0, max_ratio = 1.0;
    for (const auto& a : aggregates) {
        max_points = std::max(max_points, a.mean_points);
        max_ratio = std::max(max_ratio, a.tpt_ratio);
    }
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"300\">\n";
    out << "<text x=\"10\" y=\"20\" font-size=\"14\">mean points (blue) and TPT ratio "
           "(orange) per strategy</text>\n";
    int x = 60;
    for (const auto& a : aggregates) {
        int hp = static_cast<int>(chart_h * a.mean_points / max_points);
        int hr = max_ratio > 0.0 ? static_cast<int>(chart_h * a.tpt_ratio / max_ratio) : 0;
        out << "<rect x=\"" << x << "\" y=\"" << base_y - hp << "\" width=\"" << bar_w
            << "\" height=\"" << hp << "\" fill=\"#4878cf\"/>\n";
        out << "<text x=\"" << x << "\" y=\"" << base_y - hp - 6 << "\" font-size=\"11\">"
            << fmt_num(a.mean_points) << "</text>\n";
        out << "<rect x=\"" << x + bar_w + 8 << "\" y=\"" << base_y - hr << "\" width=\""
            << bar_w << "\" height=\"" << hr << "\" fill=\"#e08a3c\"/>\n";
        out << "<text x=\"" << x + bar_w + 8 << "\" y=\"" << base_y - hr - 6
            << "\" font-size=\"11\">" << fmt_num(a.tpt_ratio) << "</text>\n";
        out << "<text x=\"" << x << "\" y=\"" << base_y + 20 << "\" font-size=\"12\">"
            << a.strategy << "</text>\n";
        x += 2 * (bar_w + gap);
    }
    out << "</svg>\n";
}

}  // namespace father
