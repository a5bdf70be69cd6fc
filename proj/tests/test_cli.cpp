#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "father/motion.hpp"

using namespace father;

namespace {

struct CmdResult {
    int code = -1;
    std::string out;
    std::string err;
};

CmdResult run_cli(const std::string& args) {
    std::string out_file = "/tmp/father_cli_out.txt";
    std::string err_file = "/tmp/father_cli_err.txt";
    std::string cmd =
        std::string(CLI_PATH) + " " + args + " > " + out_file + " 2> " + err_file;
    int status = std::system(cmd.c_str());
    CmdResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    auto slurp = [](const std::string& p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    return r;
}

bool file_exists(const std::string& p) { return std::ifstream(p).good(); }

const std::string kConfig = std::string(DATA_DIR) + "/reference.json";

}  // namespace

TEST_CASE("run produces the score line and the output files") {
    auto r = run_cli("run --config " + kConfig + " --out /tmp/father_cli_run");
    CHECK(r.code == 0);
    CHECK(r.out.find("strategy=static") != std::string::npos);
    CHECK(r.out.find("points=36") != std::string::npos);
    CHECK(r.out.find("tgs=1.0000") != std::string::npos);
    CHECK(r.out.find("tpt=96.0000") != std::string::npos);
    for (const char* f : {"timeline.csv", "events.csv", "schedules.csv", "score.csv",
                          "resolved_config.json", "manifest.json"})
        CHECK(file_exists(std::string("/tmp/father_cli_run/") + f));
}

TEST_CASE("strategy override reaches the simulation") {
    auto r = run_cli("run --config " + kConfig +
                     " --strategy on_wheels --out /tmp/father_cli_ow");
    CHECK(r.code == 0);
    CHECK(r.out.find("strategy=on_wheels") != std::string::npos);
    CHECK(r.out.find("points=29") != std::string::npos);
}

TEST_CASE("missing config file exits 2 and names the path") {
    auto r = run_cli("run --config /tmp/father_cli_nope.json");
    CHECK(r.code == 2);
    CHECK(r.err.find("/tmp/father_cli_nope.json") != std::string::npos);
}

TEST_CASE("unknown strategy value exits 2") {
    auto r = run_cli("run --config " + kConfig + " --strategy sideways");
    CHECK(r.code == 2);
    CHECK(r.err.find("strategy") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run_cli("").code == 1);                 // missing subcommand
    CHECK(run_cli("run").code == 1);              // missing --config
    CHECK(run_cli("frobnicate").code == 1);       // unknown subcommand
}

TEST_CASE("gen-trace writes a loadable trace with the configured brake peak") {
    std::string path = "/tmp/father_cli_trace.csv";
    auto r = run_cli("gen-trace --config " + kConfig + " --out " + path);
    CHECK(r.code == 0);
    AccelTrace trace = load_trace(path);
    CHECK(trace.samples.size() > 1000);
    // reference brake peaks at 6.5 m/s^2; Gaussian noise (rms 0.2) rides on top
    CHECK(peak_magnitude(trace, {0.0, 300.0}) == doctest::Approx(6.5).epsilon(0.15));
}

TEST_CASE("compare with only the static strategy reports ratio 1") {
    auto r = run_cli("compare --config " + kConfig +
                     " --seeds 1,2 --strategies static --out /tmp/father_cli_cmp");
    CHECK(r.code == 0);
    CHECK(r.out.find("ratio=1.0000") != std::string::npos);
    CHECK(file_exists("/tmp/father_cli_cmp/comparison.csv"));
    CHECK(file_exists("/tmp/father_cli_cmp/chart.svg"));

    std::ifstream in("/tmp/father_cli_cmp/comparison.csv");
    std::string header;
    std::getline(in, header);
    CHECK(header == "row,strategy,seed,points,tgs,tpt,tpt_ratio");
}

TEST_CASE("compare over all strategies reproduces the headline ordering") {
    auto r = run_cli("compare --config " + kConfig +
                     " --seeds 1:5 --out /tmp/father_cli_cmp_all");
    CHECK(r.code == 0);
    // aggregate lines are sorted by strategy name
    auto pos_static = r.out.find("static points=36.0000");
    auto pos_replan = r.out.find("replan_til points=36.0000");
    auto pos_wait = r.out.find("wait points=36.0000");
    CHECK(pos_static != std::string::npos);
    CHECK(pos_replan != std::string::npos);
    CHECK(pos_wait != std::string::npos);
    CHECK(r.out.find("on_wheels points=29.0000") != std::string::npos);
}
