#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "termcheck/checker.hpp"

namespace termcheck {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 1;
inline constexpr int kExitRuntimeError = 2;
inline constexpr int kExitStrictFailure = 3;

struct RunOptions {
  bool check_only = false;  // no evaluation, no result lines
  bool eval_only = false;   // no analysis lines
  bool strict = false;      // exit 3 when any function fails the check
  bool verbose = false;     // full call matrices under each call line
  std::optional<std::uint64_t> fuel;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string output;  // standard output text
  std::string errors;  // standard error text
  CallGraph graph;     // extracted calls of every processed definition
};

// Processes the statements of a program in order: definitions are analysed
// and reported, terms are evaluated and printed.
RunResult run(std::string_view source, const RunOptions& options = {});

// "r1 r2: f -> g -> f"
std::string render_call_line(const CallGraph& g, const BehaviourRow& row);
std::string render_verdict_line(const std::string& name, const Verdict& v);

// Self-edges of f ordered by path length, then by path names.
std::vector<BehaviourRow> ordered_behaviour(const CallGraph& completed, FunctionId f);

// Graphviz digraph: one node per function, one edge per call labelled with
// its matrix in "[<?][?=]" form.
std::string export_dot(const CallGraph& g);

}  // namespace termcheck
