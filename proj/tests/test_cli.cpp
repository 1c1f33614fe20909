#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "spg/errors.hpp"
#include "spg/io.hpp"
#include "spg/verify.hpp"

using namespace spg;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const auto out_path = std::filesystem::temp_directory_path() / "spg_cli_out.txt";
  const std::string cmd = std::string(SPGRAPH_PATH) + " " + args + " > " + out_path.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  r.out = buffer.str();
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("campaign summary equals record tallies") {
  CampaignOptions o;
  o.family = "exhaustive";
  o.max_n = 5;
  const VerificationReport r = run_campaign(o);
  CHECK(r.count(Status::Fail) == 0);
  CHECK(r.count(Status::Capped) == 0);
  const std::string text = format_report(r);
  const std::string summary = "summary records=" + std::to_string(r.records.size()) +
                              " pass=" + std::to_string(r.count(Status::Pass)) + " fail=0 capped=0 note=" +
                              std::to_string(r.count(Status::Note));
  CHECK(text.find(summary) != std::string::npos);
}

TEST_CASE("campaigns are deterministic regardless of thread count") {
  CampaignOptions o;
  o.family = "random";
  o.max_n = 7;
  o.max_edges = 10;
  o.count = 40;
  o.seed = 9;
  o.jobs = 1;
  const std::string one = format_report(run_campaign(o));
  o.jobs = 4;
  CHECK(format_report(run_campaign(o)) == one);
}

TEST_CASE("unknown names are input errors") {
  CampaignOptions o;
  o.family = "nope";
  CHECK_THROWS_AS(run_campaign(o), InputError);
  o.family = "exhaustive";
  o.theorems = {"nope"};
  CHECK_THROWS_AS(run_campaign(o), InputError);
}

TEST_CASE("failures carry the graph") {
  CampaignOptions o;
  o.family = "trees";
  o.max_n = 6;
  const VerificationReport r = run_campaign(o);
  for (const Record& rec : r.records) {
    CHECK_FALSE(rec.graph.empty());
    CHECK(rec.detail.find(' ') == std::string::npos);
  }
}

}

TEST_SUITE("cli") {

TEST_CASE("compute on C5 and star(3)") {
  const Run c5 = run("compute " + write_temp("spg_c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n"));
  CHECK(c5.code == 0);
  CHECK(has_line(c5.out, "sp=2"));
  CHECK(has_line(c5.out, "matching_number=2"));
  CHECK(has_line(c5.out, "chromatic_index=3"));

  const Run star = run("compute --witnesses " + write_temp("spg_star.txt", "4 3\n0 1\n0 2\n0 3\n"));
  CHECK(star.code == 0);
  CHECK(has_line(star.out, "sp=3"));
  CHECK(has_line(star.out, "matching_number=1"));
  CHECK(has_line(star.out, "chromatic_index=3"));
  CHECK(has_line(star.out, "factor k=3 edges=0,1,2"));
}

TEST_CASE("malformed file exits 2 with a line number") {
  const Run bad = run("compute " + write_temp("spg_bad.txt", "2 1\n0 0\n"));
  CHECK(bad.code == 2);
  CHECK(bad.out.find("line 2") != std::string::npos);
  CHECK(run("compute /nonexistent/file").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("resource cap exits 3") {
  const Run capped = run("compute --max-edges 2 " + write_temp("spg_k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"));
  CHECK(capped.code == 3);
  CHECK(capped.out.find("exact_edges") != std::string::npos);
}

TEST_CASE("generate families") {
  const Run p = run("generate prop21 --a 1 --b 1 --n 4");
  CHECK(p.code == 0);
  CHECK(p.out.rfind("# generator: prop21 a=1 b=1 n=4", 0) == 0);
  CHECK(parse_graph(p.out).vertex_count() == 13);

  const Run c = run("generate cycle --n 5");
  CHECK(parse_graph(c.out).edge_count() == 5);

  const Run t = run("generate tightness --r 3 --base complete");
  CHECK(parse_graph(t.out).vertex_count() == 6);

  CHECK(run("generate prop21 --n 2").code == 2);
  CHECK(run("generate nothing").code == 2);
}

TEST_CASE("verify exit codes and determinism") {
  const Run a = run("verify --family exhaustive --max-n 5 --seed 3");
  CHECK(a.code == 0);
  CHECK(a.out == run("verify --family exhaustive --max-n 5 --seed 3 --jobs 2").out);
  CHECK(a.out.find("status=fail") == std::string::npos);
  CHECK(run("verify --family trees --max-n 8 --theorems sp_delta,decomposition").code == 0);
  CHECK(run("verify --family random --max-n 8 --max-edges 12 --count 100 --theorems bounds").code == 0);
  CHECK(run("verify --family bogus").code == 2);
}

}
