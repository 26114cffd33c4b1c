#ifndef DSLAB_WEIGHTS_HPP
#define DSLAB_WEIGHTS_HPP

// Weight sequences {q_k} with partial sums Q_n, the named presets from the
// summability literature, and empirical checkers for the side conditions the
// boundedness/blow-up statements impose on them.

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "dslab/cesaro.hpp"
#include "dslab/rational.hpp"

namespace dslab {

struct ModeError : std::runtime_error {
  explicit ModeError(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateWeightsError : std::runtime_error {
  explicit DegenerateWeightsError(const std::string& what)
      : std::runtime_error(what) {}
};

// q_k >= 0 with q_0 > 0; Q_n = q_0 + ... + q_{n-1}, Q_0 = 0. Exact-rational
// where the generator permits, float-only otherwise (iterated-log weights).
// Caches grow monotonically and extension is thread-safe.
class WeightSequence {
 public:
  static std::shared_ptr<WeightSequence> constant();
  // q_k = A_k^{alpha-1}; the (C,alpha) weights. 0 < alpha <= 1 keeps them
  // non-increasing.
  static std::shared_ptr<WeightSequence> cesaro(const Rat& alpha);
  // q_k = k^{alpha-1} for k >= 1, q_0 = 1. Irrational powers are rounded
  // down to 64 fractional bits so exact-mode identity checks stay exact.
  static std::shared_ptr<WeightSequence> power(const Rat& alpha);
  // q_k = (log^(beta)(k+1))^alpha, float-only.
  static std::shared_ptr<WeightSequence> log_preset(double alpha, int beta);
  static std::shared_ptr<WeightSequence> custom(std::vector<Rat> values,
                                                std::string label = "custom");
  // q_k = ratio^k with 0 < ratio < 1: bounded Q_n, used as a blow-up
  // counterexample input; not part of the CLI preset vocabulary.
  static std::shared_ptr<WeightSequence> geometric(const Rat& ratio);

  // "constant" | "cesaro:a/b" | "power:a/b" | "log:alpha:beta" |
  // "custom:file" (one rational per line).
  static std::shared_ptr<WeightSequence> parse_preset(const std::string& text);

  const std::string& key() const { return key_; }
  bool exact_capable() const { return exact_capable_; }
  bool non_increasing() const { return non_increasing_; }
  bool non_decreasing() const { return non_decreasing_; }

  Rat q(std::size_t k) const;
  Rat Q(std::size_t n) const;
  double qf(std::size_t k) const;
  double Qf(std::size_t n) const;

  // Copies of q_0..q_{n} / Q_0..Q_{n}, for tight loops.
  std::vector<Rat> q_prefix(std::size_t n) const;
  std::vector<Rat> Q_prefix(std::size_t n) const;
  std::vector<double> qf_prefix(std::size_t n) const;
  std::vector<double> Qf_prefix(std::size_t n) const;

 private:
  WeightSequence() = default;
  void ensure(std::size_t k) const;  // cache q_0..q_k (locked)

  std::string key_;
  bool exact_capable_ = true;
  bool non_increasing_ = false;
  bool non_decreasing_ = false;
  std::function<Rat(std::size_t)> gen_;        // exact generator
  std::function<double(std::size_t)> gen_f_;   // float-only generator
  std::size_t custom_limit_ = 0;               // custom sequences are finite

  mutable std::mutex mutex_;
  mutable std::vector<Rat> q_;
  mutable std::vector<Rat> Q_;      // Q_[n], size q_.size()+1
  mutable std::vector<double> qf_;
  mutable std::vector<double> Qf_;
};

enum class Condition {
  regular_1a11,
  bounded_100,
  cond0,
  no1_first,
  no1_second,
  nom3,
  nom2,
  cond5,
};

std::string condition_name(Condition c);
Condition parse_condition(const std::string& text);
std::vector<Condition> all_conditions();

enum class ConditionVerdict { holds_empirically, fails_at, inconclusive };

// Empirical classification of a side condition on a dyadic grid of n. The
// verdict vocabulary deliberately excludes "proved": O(1) and limsup
// statements are judged by the monotonicity/saturation of the witness.
struct ConditionReport {
  Condition condition;
  std::string weight_key;
  double alpha = 1.0;
  std::vector<std::string> witness_names;
  std::vector<std::uint64_t> grid;
  std::vector<std::vector<double>> witnesses;  // one row per grid point
  ConditionVerdict verdict = ConditionVerdict::inconclusive;
  std::uint64_t fail_n = 0;  // set when verdict == fails_at
  double summary_min = 0.0;
  double summary_max = 0.0;
};

// Witnesses are evaluated at n = 2, 4, ..., n_max. alpha feeds the
// n^alpha-type conditions and is ignored by the others.
ConditionReport check_condition(const WeightSequence& q, Condition condition,
                                std::uint64_t n_max, double alpha = 1.0);

// Abel decomposition of the n-th Norlund mean over Fejer means:
// t_n = sum of coeff_j * sigma_j with the listed (coefficient, index) pairs;
// the coefficients satisfy sum_{j<n} (q_{n-j}-q_{n-j-1}) j + q_0 n = Q_n.
std::vector<std::pair<Rat, std::uint64_t>> abel_decompose(
    const WeightSequence& q, std::uint64_t n);

}  // namespace dslab

#endif  // DSLAB_WEIGHTS_HPP
