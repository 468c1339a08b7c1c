// termcheck: structural termination checker and interpreter.

#include <pthread.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "termcheck/driver.hpp"

namespace {

constexpr const char* kVersion = "termcheck 0.1.0";

// Parsing, evaluation and value teardown all recurse on term depth. Programs
// over unary numbers get deep quickly, so the work runs on a thread with a
// large (lazily committed) stack.
constexpr std::size_t kStackBytes = std::size_t{1} << 30;

bool read_all(std::istream& in, std::string& out) {
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return !in.bad();
}

template <typename F>
bool run_on_large_stack(F&& body) {
  pthread_attr_t attr;
  if (pthread_attr_init(&attr) != 0) return false;
  bool ok = pthread_attr_setstacksize(&attr, kStackBytes) == 0;
  pthread_t thread;
  auto* fn = &body;
  auto trampoline = [](void* p) -> void* {
    (*static_cast<F*>(p))();
    return nullptr;
  };
  ok = ok && pthread_create(&thread, &attr, trampoline, fn) == 0;
  pthread_attr_destroy(&attr);
  if (!ok) return false;
  pthread_join(thread, nullptr);
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural termination checker and interpreter for a small functional language"};
  app.set_version_flag("--version", std::string(kVersion));

  std::string file;
  std::string dot_file;
  std::uint64_t fuel = 0;
  termcheck::RunOptions options;
  bool dot_completed = false;

  app.add_option("FILE", file, "Program file (default: standard input)");
  auto* check_only = app.add_flag("--check-only", options.check_only, "Run the termination check only");
  auto* eval_only = app.add_flag("--eval-only", options.eval_only, "Evaluate terms only");
  check_only->excludes(eval_only);
  app.add_flag("--strict", options.strict, "Exit with status 3 if any function fails the check");
  auto* dot = app.add_option("--dot", dot_file, "Write the call graph in DOT format (to FILE or stdout)")
                  ->expected(0, 1);
  app.add_flag("--dot-completed", dot_completed, "Export the completed call graph instead of the extracted one");
  app.add_flag("--verbose", options.verbose, "Print full call matrices");
  auto* fuel_opt = app.add_option("--fuel", fuel, "Evaluation step budget");

  CLI11_PARSE(app, argc, argv);
  if (fuel_opt->count() > 0) options.fuel = fuel;

  std::string source;
  if (file.empty() || file == "-") {
    if (!read_all(std::cin, source)) {
      std::cerr << "error: cannot read standard input\n";
      return termcheck::kExitParseError;
    }
  } else {
    std::ifstream in(file, std::ios::binary);
    if (!in || !read_all(in, source)) {
      std::cerr << "error: cannot read " << file << "\n";
      return termcheck::kExitParseError;
    }
  }

  termcheck::RunResult result;
  if (!run_on_large_stack([&] { result = termcheck::run(source, options); })) {
    result = termcheck::run(source, options);
  }
  std::cout << result.output;
  std::cerr << result.errors;

  if (dot->count() > 0 && result.exit_code != termcheck::kExitParseError) {
    const auto& graph = dot_completed ? termcheck::complete_graph(result.graph) : result.graph;
    std::string text = termcheck::export_dot(graph);
    if (dot_file.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(dot_file);
      out << text;
      if (!out) {
        std::cerr << "error: cannot write " << dot_file << "\n";
        return termcheck::kExitRuntimeError;
      }
    }
  }
  std::cout.flush();
  return result.exit_code;
}
