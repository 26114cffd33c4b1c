#include "dslab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace dslab {

namespace {

// Smallest integer shift s with log^(beta)(s) > 0; the preset evaluates the
// iterated log at k + s so every weight is positive and non-decreasing.
int log_shift(int beta) {
  for (int s = 2;; ++s) {
    double v = static_cast<double>(s);
    bool ok = true;
    for (int b = 0; b < beta; ++b) {
      v = std::log(v);
      if (v <= 0.0) {
        ok = false;
        break;
      }
    }
    if (ok) return s;
  }
}

double iterated_log(double x, int beta) {
  for (int b = 0; b < beta; ++b) x = std::log(x);
  return x;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::shared_ptr<WeightSequence> WeightSequence::constant() {
  auto w = std::shared_ptr<WeightSequence>(new WeightSequence());
  w->key_ = "constant";
  w->non_increasing_ = true;
  w->non_decreasing_ = true;
  w->gen_ = [](std::size_t) { return Rat(1); };
  return w;
}

std::shared_ptr<WeightSequence> WeightSequence::cesaro(const Rat& alpha) {
  if (alpha <= 0 || alpha > 1)
    throw std::domain_error("cesaro preset needs 0 < alpha <= 1");
  auto w = std::shared_ptr<WeightSequence>(new WeightSequence());
  w->key_ = "cesaro:" + rational_to_string(alpha);
  w->non_increasing_ = true;
  w->non_decreasing_ = (alpha == 1);
  auto table = std::make_shared<CesaroTable>(alpha - 1);
  w->gen_ = [table](std::size_t k) { return table->at(k); };
  return w;
}

std::shared_ptr<WeightSequence> WeightSequence::power(const Rat& alpha) {
  if (alpha <= 0 || alpha > 1)
    throw std::domain_error("power preset needs 0 < alpha <= 1");
  auto w = std::shared_ptr<WeightSequence>(new WeightSequence());
  w->key_ = "power:" + rational_to_string(alpha);
  w->non_increasing_ = true;
  w->non_decreasing_ = (alpha == 1);
  Rat e = alpha - 1;
  long u = e.get_num().get_si();
  unsigned long v = e.get_den().get_ui();
  w->gen_ = [u, v](std::size_t k) {
    if (k == 0) return Rat(1);  // 0^{alpha-1} is undefined; q_0 := 1
    return fixed_point_power(static_cast<unsigned long>(k), u, v);
  };
  return w;
}

std::shared_ptr<WeightSequence> WeightSequence::log_preset(double alpha,
                                                           int beta) {
  if (alpha < 0) throw std::domain_error("log preset needs alpha >= 0");
  if (beta < 1) throw std::domain_error("log preset needs beta >= 1");
  auto w = std::shared_ptr<WeightSequence>(new WeightSequence());
  std::ostringstream key;
  key << "log:" << alpha << ":" << beta;
  w->key_ = key.str();
  w->exact_capable_ = false;
  w->non_decreasing_ = true;
  w->non_increasing_ = (alpha == 0.0);
  int shift = log_shift(beta);
  w->gen_f_ = [alpha, beta, shift](std::size_t k) {
    return std::pow(iterated_log(static_cast<double>(k) + shift, beta), alpha);
  };
  return w;
}

std::shared_ptr<WeightSequence> WeightSequence::custom(std::vector<Rat> values,
                                                       std::string label) {
  if (values.empty()) throw std::domain_error("custom weights are empty");
  if (values[0] <= 0)
    throw DegenerateWeightsError("custom weights need q_0 > 0");
  bool inc = true, dec = true;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] < 0)
      throw DegenerateWeightsError("custom weights must be nonnegative");
    if (k > 0) {
      if (values[k] > values[k - 1]) dec = false;
      if (values[k] < values[k - 1]) inc = false;
    }
  }
  auto w = std::shared_ptr<WeightSequence>(new WeightSequence());
  std::string blob;
  for (const Rat& v : values) blob += rational_to_string(v) + "\n";
  w->key_ = label + ":" + std::to_string(fnv1a(blob));
  w->non_increasing_ = dec;
  w->non_decreasing_ = inc;
  w->custom_limit_ = values.size();
  auto store = std::make_shared<std::vector<Rat>>(std::move(values));
  w->gen_ = [store](std::size_t k) {
    if (k >= store->size())
      throw std::domain_error("custom weight sequence exhausted");
    return (*store)[k];
  };
  return w;
}

std::shared_ptr<WeightSequence> WeightSequence::geometric(const Rat& ratio) {
  if (ratio <= 0 || ratio >= 1)
    throw std::domain_error("geometric weights need 0 < ratio < 1");
  auto w = std::shared_ptr<WeightSequence>(new WeightSequence());
  w->key_ = "geometric:" + rational_to_string(ratio);
  w->non_increasing_ = true;
  auto cache = std::make_shared<std::pair<std::mutex, std::vector<Rat>>>();
  cache->second.push_back(Rat(1));
  w->gen_ = [ratio, cache](std::size_t k) {
    std::lock_guard<std::mutex> lock(cache->first);
    auto& vals = cache->second;
    while (vals.size() <= k) vals.push_back(vals.back() * ratio);
    return vals[k];
  };
  return w;
}

std::shared_ptr<WeightSequence> WeightSequence::parse_preset(
    const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(':', start);
    if (pos == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  const std::string& name = parts[0];
  if (name == "constant") {
    if (parts.size() != 1)
      throw std::invalid_argument("constant preset takes no parameters");
    return constant();
  }
  if (name == "cesaro" || name == "power") {
    if (parts.size() != 2)
      throw std::invalid_argument(name + " preset needs one rational alpha");
    Rat alpha = parse_rational(parts[1]);
    return name == "cesaro" ? cesaro(alpha) : power(alpha);
  }
  if (name == "log") {
    if (parts.size() != 3)
      throw std::invalid_argument("log preset is log:alpha:beta");
    double alpha = to_double(parse_rational(parts[1]));
    int beta = std::stoi(parts[2]);
    return log_preset(alpha, beta);
  }
  if (name == "custom") {
    if (parts.size() != 2)
      throw std::invalid_argument("custom preset is custom:file");
    std::ifstream in(parts[1]);
    if (!in) throw std::invalid_argument("cannot open " + parts[1]);
    std::vector<Rat> values;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      values.push_back(parse_rational(line));
    }
    return custom(std::move(values));
  }
  throw std::invalid_argument("unknown weight preset: " + text);
}

void WeightSequence::ensure(std::size_t k) const {
  while (q_.size() <= k) {
    std::size_t idx = q_.size();
    if (custom_limit_ > 0 && idx >= custom_limit_)
      throw std::domain_error("custom weight sequence exhausted");
    Rat qe;
    double qd;
    if (exact_capable_) {
      qe = gen_(idx);
      qd = qe.get_d();
    } else {
      qd = gen_f_(idx);
    }
    if (exact_capable_ ? (qe < 0) : (qd < 0))
      throw DegenerateWeightsError("negative weight at k=" +
                                   std::to_string(idx));
    if (idx > 0) {
      bool rose = exact_capable_ ? (qe > q_.back()) : (qd > qf_.back());
      bool fell = exact_capable_ ? (qe < q_.back()) : (qd < qf_.back());
      if ((non_increasing_ && rose) || (non_decreasing_ && fell))
        throw std::logic_error(key_ + ": declared monotonicity violated at k=" +
                               std::to_string(idx));
    }
    if (idx == 0) {
      if (exact_capable_ ? (qe <= 0) : (qd <= 0))
        throw DegenerateWeightsError("q_0 must be positive");
      Q_.push_back(Rat(0));
      Qf_.push_back(0.0);
    }
    if (exact_capable_) {
      q_.push_back(qe);
      Q_.push_back(Q_.back() + qe);
      qf_.push_back(qd);
      Qf_.push_back(Q_.back().get_d());
    } else {
      q_.push_back(Rat(0));
      Q_.push_back(Rat(0));
      qf_.push_back(qd);
      Qf_.push_back(Qf_.back() + qd);
    }
  }
}

Rat WeightSequence::q(std::size_t k) const {
  if (!exact_capable_) throw ModeError(key_ + " has no exact values");
  std::lock_guard<std::mutex> lock(mutex_);
  ensure(k);
  return q_[k];
}

Rat WeightSequence::Q(std::size_t n) const {
  if (!exact_capable_) throw ModeError(key_ + " has no exact values");
  std::lock_guard<std::mutex> lock(mutex_);
  if (n > 0) ensure(n - 1);
  else ensure(0);
  return Q_[n];
}

double WeightSequence::qf(std::size_t k) const {
  std::lock_guard<std::mutex> lock(mutex_);
  ensure(k);
  return qf_[k];
}

double WeightSequence::Qf(std::size_t n) const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (n > 0) ensure(n - 1);
  else ensure(0);
  return Qf_[n];
}

std::vector<Rat> WeightSequence::q_prefix(std::size_t n) const {
  if (!exact_capable_) throw ModeError(key_ + " has no exact values");
  std::lock_guard<std::mutex> lock(mutex_);
  ensure(n);
  return std::vector<Rat>(q_.begin(), q_.begin() + n + 1);
}

std::vector<Rat> WeightSequence::Q_prefix(std::size_t n) const {
  if (!exact_capable_) throw ModeError(key_ + " has no exact values");
  std::lock_guard<std::mutex> lock(mutex_);
  if (n > 0) ensure(n - 1);
  else ensure(0);
  return std::vector<Rat>(Q_.begin(), Q_.begin() + n + 1);
}

std::vector<double> WeightSequence::qf_prefix(std::size_t n) const {
  std::lock_guard<std::mutex> lock(mutex_);
  ensure(n);
  return std::vector<double>(qf_.begin(), qf_.begin() + n + 1);
}

std::vector<double> WeightSequence::Qf_prefix(std::size_t n) const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (n > 0) ensure(n - 1);
  else ensure(0);
  return std::vector<double>(Qf_.begin(), Qf_.begin() + n + 1);
}

std::string condition_name(Condition c) {
  switch (c) {
    case Condition::regular_1a11: return "regular_1a11";
    case Condition::bounded_100: return "bounded_100";
    case Condition::cond0: return "cond0";
    case Condition::no1_first: return "no1_first";
    case Condition::no1_second: return "no1_second";
    case Condition::nom3: return "nom3";
    case Condition::nom2: return "nom2";
    case Condition::cond5: return "cond5";
  }
  return "?";
}

Condition parse_condition(const std::string& text) {
  for (Condition c : all_conditions()) {
    if (condition_name(c) == text) return c;
  }
  throw std::invalid_argument("unknown condition: " + text);
}

std::vector<Condition> all_conditions() {
  return {Condition::regular_1a11, Condition::bounded_100, Condition::cond0,
          Condition::no1_first,    Condition::no1_second,  Condition::nom3,
          Condition::nom2,         Condition::cond5};
}

namespace {

enum class Trend { decreasing, increasing, constant, none };

Trend trend_of(const std::vector<double>& v) {
  bool inc = true, dec = true;
  for (std::size_t i = 1; i < v.size(); ++i) {
    double tol = 1e-12 * std::max(std::abs(v[i]), std::abs(v[i - 1]));
    if (v[i] > v[i - 1] + tol) dec = false;
    if (v[i] < v[i - 1] - tol) inc = false;
  }
  if (inc && dec) return Trend::constant;
  if (dec) return Trend::decreasing;
  if (inc) return Trend::increasing;
  return Trend::none;
}

bool saturated(const std::vector<double>& v) {
  if (v.size() < 2) return true;
  double last = v.back();
  double half = v[v.size() / 2];
  return std::abs(last - half) <= 0.05 * std::max(std::abs(last), 1e-300);
}

}  // namespace

ConditionReport check_condition(const WeightSequence& q, Condition condition,
                                std::uint64_t n_max, double alpha) {
  if (n_max < 8) throw std::domain_error("condition grid needs n_max >= 8");
  ConditionReport report;
  report.condition = condition;
  report.weight_key = q.key();
  report.alpha = alpha;

  for (std::uint64_t n = 2; n <= n_max; n <<= 1) report.grid.push_back(n);
  const double q0 = q.qf(0);

  auto witness_row = [&](std::uint64_t n) -> std::vector<double> {
    double Qn = q.Qf(static_cast<std::size_t>(n));
    double na = std::pow(static_cast<double>(n), alpha);
    switch (condition) {
      case Condition::regular_1a11:
        return {q.qf(static_cast<std::size_t>(n - 1)) / Qn};
      case Condition::bounded_100:
        return {q0 * static_cast<double>(n) / Qn};
      case Condition::cond0:
        return {q0 * static_cast<double>(n) / Qn};
      case Condition::no1_first:
        return {q0 * na / Qn};
      case Condition::no1_second: {
        double diff = q.qf(static_cast<std::size_t>(n)) -
                      q.qf(static_cast<std::size_t>(n + 1));
        return {diff * std::pow(static_cast<double>(n), 2.0 - alpha)};
      }
      case Condition::nom3:
        return {q0 * na / Qn};
      case Condition::nom2:
        return {q0 * na / Qn};
      case Condition::cond5: {
        double diff = q.qf(static_cast<std::size_t>(n)) -
                      q.qf(static_cast<std::size_t>(n + 1));
        return {q0 * na / Qn,
                diff * std::pow(static_cast<double>(n), 2.0 - alpha)};
      }
    }
    return {};
  };

  switch (condition) {
    case Condition::regular_1a11:
      report.witness_names = {"q_{n-1}/Q_n"};
      break;
    case Condition::bounded_100:
    case Condition::cond0:
      report.witness_names = {"q0*n/Q_n"};
      break;
    case Condition::no1_first:
    case Condition::nom3:
    case Condition::nom2:
      report.witness_names = {"q0*n^alpha/Q_n"};
      break;
    case Condition::no1_second:
      report.witness_names = {"(q_n-q_{n+1})*n^(2-alpha)"};
      break;
    case Condition::cond5:
      report.witness_names = {"q0*n^alpha/Q_n", "(q_n-q_{n+1})*n^(2-alpha)"};
      break;
  }

  for (std::uint64_t n : report.grid) report.witnesses.push_back(witness_row(n));

  std::vector<double> first_col;
  for (const auto& row : report.witnesses) first_col.push_back(row[0]);
  report.summary_min = *std::min_element(first_col.begin(), first_col.end());
  report.summary_max = *std::max_element(first_col.begin(), first_col.end());

  auto classify_bounded = [&](const std::vector<double>& col) {
    Trend t = trend_of(col);
    if (t == Trend::decreasing || t == Trend::constant)
      return ConditionVerdict::holds_empirically;
    if (t == Trend::increasing) {
      return saturated(col) ? ConditionVerdict::holds_empirically
                            : ConditionVerdict::fails_at;
    }
    return ConditionVerdict::inconclusive;
  };
  auto classify_lower = [&](const std::vector<double>& col) {
    double mn = *std::min_element(col.begin(), col.end());
    if (mn <= 0) return ConditionVerdict::fails_at;
    Trend t = trend_of(col);
    if (t == Trend::decreasing && !saturated(col))
      return ConditionVerdict::inconclusive;
    return ConditionVerdict::holds_empirically;
  };

  switch (condition) {
    case Condition::regular_1a11: {
      Trend t = trend_of(first_col);
      if (t == Trend::decreasing && first_col.back() <= first_col.front() / 2) {
        report.verdict = ConditionVerdict::holds_empirically;
      } else if (t == Trend::increasing &&
                 first_col.back() > first_col.front()) {
        report.verdict = ConditionVerdict::fails_at;
        report.fail_n = report.grid.back();
      } else {
        report.verdict = ConditionVerdict::inconclusive;
      }
      break;
    }
    case Condition::bounded_100:
    case Condition::no1_first:
    case Condition::no1_second: {
      report.verdict = classify_bounded(first_col);
      if (report.verdict == ConditionVerdict::fails_at)
        report.fail_n = report.grid.back();
      break;
    }
    case Condition::cond0: {
      report.verdict = ConditionVerdict::holds_empirically;
      for (std::size_t i = 0; i < first_col.size(); ++i) {
        if (first_col[i] < 1.0 - 1e-9) {
          report.verdict = ConditionVerdict::fails_at;
          report.fail_n = report.grid[i];
          break;
        }
      }
      break;
    }
    case Condition::nom3: {
      report.verdict = classify_lower(first_col);
      if (report.verdict == ConditionVerdict::fails_at)
        report.fail_n = report.grid.back();
      break;
    }
    case Condition::nom2: {
      std::vector<double> run_max(first_col.size());
      double m = -1e300;
      for (std::size_t i = 0; i < first_col.size(); ++i) {
        m = std::max(m, first_col[i]);
        run_max[i] = m;
      }
      double half = run_max[run_max.size() / 2];
      if (run_max.back() >= 2.0 * half) {
        report.verdict = ConditionVerdict::holds_empirically;
      } else if (saturated(run_max)) {
        report.verdict = ConditionVerdict::fails_at;  // no growth by n_max
        report.fail_n = report.grid.back();
      } else {
        report.verdict = ConditionVerdict::inconclusive;
      }
      break;
    }
    case Condition::cond5: {
      std::vector<double> second_col;
      for (const auto& row : report.witnesses) second_col.push_back(row[1]);
      ConditionVerdict a = classify_lower(first_col);
      ConditionVerdict b = classify_lower(second_col);
      report.verdict =
          (a == ConditionVerdict::fails_at || b == ConditionVerdict::fails_at)
              ? ConditionVerdict::fails_at
          : (a == ConditionVerdict::inconclusive ||
             b == ConditionVerdict::inconclusive)
              ? ConditionVerdict::inconclusive
              : ConditionVerdict::holds_empirically;
      if (report.verdict == ConditionVerdict::fails_at)
        report.fail_n = report.grid.back();
      break;
    }
  }
  return report;
}

std::vector<std::pair<Rat, std::uint64_t>> abel_decompose(
    const WeightSequence& q, std::uint64_t n) {
  if (n == 0) throw std::domain_error("abel_decompose needs n >= 1");
  auto qp = q.q_prefix(static_cast<std::size_t>(n));
  Rat Qn = q.Q(static_cast<std::size_t>(n));
  std::vector<std::pair<Rat, std::uint64_t>> out;
  for (std::uint64_t j = 1; j < n; ++j) {
    Rat coeff = (qp[n - j] - qp[n - j - 1]) * Rat(static_cast<long>(j)) / Qn;
    out.emplace_back(coeff, j);
  }
  out.emplace_back(qp[0] * Rat(static_cast<long>(n)) / Qn, n);
  return out;
}

}  // namespace dslab
