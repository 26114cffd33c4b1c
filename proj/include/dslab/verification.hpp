#ifndef DSLAB_VERIFICATION_HPP
#define DSLAB_VERIFICATION_HPP

// The experiment layer: exact identity checks for the kernel decomposition,
// the empirical kernel-majorant constant, the counterexample blow-up
// arithmetic, and convergence sweeps. Each experiment emits an
// ExperimentReport whose rows are recomputable from its parameters alone.

#include <cstdint>
#include <memory>
#include <vector>

#include "dslab/analysis.hpp"
#include "dslab/means.hpp"
#include "dslab/report.hpp"
#include "dslab/weights.hpp"

namespace dslab {

// f_n = D_{2^{n+1}} - D_{2^n}; needs resolution >= n+2 for the experiments.
SampledFunction<Rat> counterexample_function(int n, int resolution);

// Exact check of the Norlund kernel decomposition on (2^m, 2^{m+1}]: the
// oracle is direct summation of Q_n F_n; both the proof-form and the
// printed statement-form right-hand sides are evaluated and the report
// records which one is the identity. Exact weights required.
ExperimentReport verify_lemma2(const WeightSequence& q, int m, int resolution,
                               unsigned threads = 1);

// Empirical majorant constant: ratio_n = max_x |F_n(x)| / (n^{-alpha}
// sum_{j<=|n|} 2^{j alpha} K_{2^j}(x)), swept over n <= n_max in float
// arithmetic (the majorant contains irrational powers of two). Verdict
// rests on stabilization of the running max over the top half of the grid.
ExperimentReport verify_lemma3(const WeightSequence& q, const Rat& alpha,
                               std::uint64_t n_max, int resolution,
                               unsigned threads = 1);

// Counterexample arithmetic at p in (0, 1/2): the full pipeline value of
// ||t_{2^n+1} f_n||_{L_{p,inf}} / ||f_n||_{H_p} against the closed formula
// q_0 2^{n(1/p-1)} / Q_{2^n+1}, per n, with exact equality in rational mode.
ExperimentReport blowup_theorem2(std::shared_ptr<WeightSequence> q,
                                 const Rat& p, const std::vector<int>& n_list,
                                 unsigned threads = 1,
                                 bool force_float = false);

enum class Theorem3Part { part_b, part_c };

// part_b: ratio q_0 2^{n(1/p-1)}/Q_{2^n+1} at 0 < p < 1/(1+alpha);
// part_c: the same pipeline at p = 1/(1+alpha), ratio q_0 2^{n alpha}/Q.
ExperimentReport blowup_theorem3(std::shared_ptr<WeightSequence> q,
                                 const Rat& alpha, const Rat& p,
                                 const std::vector<int>& n_list,
                                 Theorem3Part part, unsigned threads = 1,
                                 bool force_float = false);

// L_1 convergence sweep of a mean applied to an embedded coarse function.
ExperimentReport convergence_experiment(const MeanId& mean,
                                        const SampledFunction<double>& f,
                                        const std::vector<std::uint64_t>& n_list,
                                        unsigned threads = 1,
                                        const std::string& f_label = "f");

// Norlund-logarithmic counterexample ratio. L_{2^n+1} annihilates f_n, so
// the first index seeing the surviving coefficient is 2^n+2:
// L_{2^n+2} f_n = kappa_{2^n}/l_{2^n+2}, giving the exact ratio
// 2^{n(1/p-1)}/l_{2^n+2}.
ExperimentReport norlund_log_blowup(const Rat& p, const std::vector<int>& n_list,
                                    unsigned threads = 1);

// Corollary bundle: blow-up runs on the iterated-log weights (p < 1/2), the
// power weights (p < 1/(1+alpha)), and the Norlund-logarithmic mean.
std::vector<ExperimentReport> corollary_presets_suite(unsigned threads = 1,
                                                      const Rat& p4 = Rat(2, 3));

}  // namespace dslab

#endif  // DSLAB_VERIFICATION_HPP
