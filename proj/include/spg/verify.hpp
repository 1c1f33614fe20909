#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "spg/graph.hpp"
#include "spg/limits.hpp"

namespace spg {

enum class Status { Pass, Fail, Capped, Note };

std::string to_string(Status s);

struct Record {
  std::size_t index = 0;  // instance position in the family
  std::string label;      // generator spec or compact graph
  std::string graph;      // compact graph, always present
  std::string theorem;
  Status status = Status::Pass;
  std::string detail;  // key=value pairs separated by ';', no spaces
};

struct Instance {
  std::string label;
  Multigraph graph;
  // (a, b, n) for the extremal tree family.
  std::optional<std::tuple<int, int, int>> prop21;
};

struct CampaignOptions {
  std::string family = "exhaustive";  // exhaustive | multigraph | random | trees | generated
  int max_n = 6;
  int max_edges = 15;
  std::uint64_t seed = 1;
  int count = 100;
  std::vector<std::string> theorems;  // empty = all
  unsigned jobs = 0;                  // 0 = hardware concurrency
  SearchLimits limits;
};

struct VerificationReport {
  std::string campaign;
  CampaignOptions options;
  std::vector<Record> records;

  int count(Status s) const;
};

const std::vector<std::string>& theorem_names();

std::vector<Instance> campaign_family(const CampaignOptions& options);

// Every applicable check of one theorem on one instance; nothing when the
// theorem does not apply to the instance.
std::optional<Record> check_theorem(const std::string& theorem, const Instance& instance, const SearchLimits& limits);

VerificationReport run_campaign(const CampaignOptions& options);

// One header line, one line per record, one summary line.
std::string format_report(const VerificationReport& report);

}  // namespace spg
