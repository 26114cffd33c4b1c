#ifndef DSLAB_REPORT_HPP
#define DSLAB_REPORT_HPP

// Experiment reports: a parameter block, a grid of rows, a verdict, and a
// summary. Rows are preformatted strings (rational "num/den" text in exact
// mode, shortest-round-trip doubles in float mode) so CSV output is
// byte-stable for identical inputs regardless of thread count.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace dslab {

enum class Verdict { pass, fail, inconclusive };

std::string verdict_name(Verdict v);
Verdict worst_of(Verdict a, Verdict b);
int verdict_exit_code(Verdict v);  // pass 0, fail 1, inconclusive 2

struct ExperimentReport {
  std::string id;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  Verdict verdict = Verdict::inconclusive;
  std::vector<std::pair<std::string, std::string>> summary;
};

std::string to_csv(const ExperimentReport& report);
std::string to_json(const ExperimentReport& report);

// Writes <base>.csv and <base>.json.
void write_report(const ExperimentReport& report, const std::string& base);

// Shortest representation that round-trips.
std::string format_double(double v);

// DSLAB_THREADS overrides the requested count; 0 requests hardware width.
unsigned effective_threads(unsigned requested);

// Runs fn(i) for i in [0, count) across `threads` workers. Deterministic
// output is the caller's job: write into slot i only.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace dslab

#endif  // DSLAB_REPORT_HPP
