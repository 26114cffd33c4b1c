#include "dslab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace dslab {

namespace {

void require_positive(const Rat& p) {
  if (p <= 0) throw std::domain_error("norm exponent must be positive");
}

// Distinct |values| with multiplicities, zeros dropped.
std::map<Rat, std::size_t> abs_histogram(const SampledFunction<Rat>& f) {
  std::map<Rat, std::size_t> hist;
  for (const Rat& v : f.values()) {
    if (v == 0) continue;
    hist[rat_abs(v)] += 1;
  }
  return hist;
}

double lp_power_sum(const SampledFunction<double>& f, double p) {
  double acc = 0.0;
  for (double v : f.values()) acc += std::pow(std::abs(v), p);
  return acc / static_cast<double>(f.size());
}

}  // namespace

NormValue lp_norm(const SampledFunction<Rat>& f, const Rat& p) {
  require_positive(p);
  const double pd = to_double(p);
  NormValue out;
  out.approx = std::pow(lp_power_sum(to_float(f), pd), 1.0 / pd);

  auto hist = abs_histogram(f);
  if (hist.empty()) {
    out.exact = Pow2Value();
    out.approx = 0.0;
    return out;
  }
  // Factor the top level out before exponentiating, so that single-level
  // functions (and levels related by powers of two) stay exact:
  //   integral = V^p * sum count * (v/V)^p, norm = V * (...)^{1/p}.
  const Pow2Value top(hist.rbegin()->first);
  std::optional<Pow2Value> total = Pow2Value();
  for (const auto& [v, count] : hist) {
    auto term = (Pow2Value(v) / top).pow(p);
    if (!term) {
      total.reset();
      break;
    }
    auto scaled = *term * Pow2Value(Rat(static_cast<unsigned long>(count)));
    total = total->add(scaled);
    if (!total) break;
  }
  if (total) {
    Pow2Value scaled_integral = *total * Pow2Value::pow2(Rat(-f.resolution()));
    if (auto root = scaled_integral.pow(1 / p)) out.exact = top * *root;
  }
  if (out.exact) out.approx = out.exact->to_double();
  return out;
}

double lp_norm(const SampledFunction<double>& f, double p) {
  if (p <= 0) throw std::domain_error("norm exponent must be positive");
  return std::pow(lp_power_sum(f, p), 1.0 / p);
}

NormValue weak_lp_norm(const SampledFunction<Rat>& f, const Rat& p) {
  require_positive(p);
  NormValue out;
  auto hist = abs_histogram(f);
  if (hist.empty()) {
    out.exact = Pow2Value();
    return out;
  }
  // Tail measures mu(|f| >= v), sweeping levels from the largest down.
  const Rat inv_p = 1 / p;
  std::size_t tail = 0;
  bool all_exact = true;
  std::optional<Pow2Value> best;
  double best_approx = 0.0;
  for (auto it = hist.rbegin(); it != hist.rend(); ++it) {
    tail += it->second;
    Rat measure = Rat(static_cast<unsigned long>(tail)) *
                  pow2_rat(-f.resolution());
    double cand_approx = to_double(it->first) *
                         std::pow(to_double(measure), to_double(inv_p));
    best_approx = std::max(best_approx, cand_approx);
    if (all_exact) {
      auto mu_pow = Pow2Value(measure).pow(inv_p);
      if (!mu_pow) {
        all_exact = false;
        continue;
      }
      Pow2Value cand = Pow2Value(it->first) * *mu_pow;
      if (!best || *best < cand) best = cand;
    }
  }
  out.approx = best_approx;
  if (all_exact && best) {
    out.exact = *best;
    out.approx = best->to_double();
  }
  return out;
}

double weak_lp_norm(const SampledFunction<double>& f, double p) {
  if (p <= 0) throw std::domain_error("norm exponent must be positive");
  std::vector<double> levels;
  levels.reserve(f.size());
  for (double v : f.values()) {
    if (v != 0.0) levels.push_back(std::abs(v));
  }
  if (levels.empty()) return 0.0;
  std::sort(levels.begin(), levels.end(), std::greater<>());
  double best = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i + 1 < levels.size() && levels[i + 1] == levels[i]) continue;
    double measure = static_cast<double>(i + 1) / static_cast<double>(f.size());
    best = std::max(best, levels[i] * std::pow(measure, 1.0 / p));
  }
  return best;
}

NormValue hardy_norm(const SampledFunction<Rat>& f, const Rat& p) {
  return lp_norm(martingale_maximal(f), p);
}

double hardy_norm(const SampledFunction<double>& f, double p) {
  return lp_norm(martingale_maximal(f), p);
}

PAtom make_atom(const Rat& p, const DyadicInterval& interval, int resolution,
                AtomProfile profile) {
  if (p <= 0 || p > 1) throw std::domain_error("atom exponent must be in (0,1]");
  if (profile != AtomProfile::haar)
    throw std::domain_error("unknown atom profile");
  if (interval.rank() >= resolution)
    throw std::domain_error("haar atom needs an interval that can be halved");
  CellRange range = interval_cells(interval, resolution);
  // e = floor(rank / p)
  Rat budget_exp = Rat(interval.rank()) / p;
  Int e;
  mpz_fdiv_q(e.get_mpz_t(), budget_exp.get_num().get_mpz_t(),
             budget_exp.get_den().get_mpz_t());
  Rat scale = pow2_rat(e.get_si());
  SampledFunction<Rat> data(resolution);
  std::size_t half = range.begin + range.size() / 2;
  for (std::size_t c = range.begin; c < half; ++c) data[c] = scale;
  for (std::size_t c = half; c < range.end; ++c) data[c] = -scale;
  return PAtom{p, interval, std::move(data)};
}

std::string atom_violation(const PAtom& atom) {
  if (atom.p <= 0 || atom.p > 1) return "exponent outside (0,1]";
  const int res = atom.data.resolution();
  if (atom.interval.rank() > res) return "interval rank exceeds resolution";
  CellRange range = interval_cells(atom.interval, res);
  Rat mean(0);
  for (std::size_t c = 0; c < atom.data.size(); ++c) {
    if ((c < range.begin || c >= range.end) && atom.data[c] != 0)
      return "support leaks outside the interval";
    mean += atom.data[c];
  }
  if (mean != 0) return "nonzero mean";
  // sup |a| <= mu(I)^{-1/p} = 2^{rank/p}
  Pow2Value budget = Pow2Value::pow2(Rat(atom.interval.rank()) / atom.p);
  for (std::size_t c = range.begin; c < range.end; ++c) {
    if (budget < Pow2Value(rat_abs(atom.data[c])))
      return "sup-norm exceeds mu(I)^{-1/p}";
  }
  return "";
}

}  // namespace dslab
