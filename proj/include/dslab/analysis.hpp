#ifndef DSLAB_ANALYSIS_HPP
#define DSLAB_ANALYSIS_HPP

// L_p, weak-L_p and finite-resolution Hardy norms, plus p-atoms.
//
// In exact mode a norm is reported as an optional Pow2Value (m * 2^t):
// the quantities this laboratory certifies (single-level functions, dyadic
// counterexamples) always land in that form. When a value is genuinely
// outside it, `exact` is empty and the double approximation stands alone;
// the approximation carries <= 1e-12 relative error on the p-th power.

#include <optional>

#include "dslab/dyadic.hpp"
#include "dslab/means.hpp"
#include "dslab/rational.hpp"
#include "dslab/transforms.hpp"

namespace dslab {

struct NormValue {
  std::optional<Pow2Value> exact;
  double approx = 0.0;
};

// (integral of |f|^p)^{1/p}; p > 0.
NormValue lp_norm(const SampledFunction<Rat>& f, const Rat& p);
double lp_norm(const SampledFunction<double>& f, double p);

// sup_{lambda>0} lambda * mu(|f| > lambda)^{1/p}. Since |f| takes finitely
// many values the sup is attained just below a level: it is the max over
// distinct levels v of v * mu(|f| >= v)^{1/p}.
NormValue weak_lp_norm(const SampledFunction<Rat>& f, const Rat& p);
double weak_lp_norm(const SampledFunction<double>& f, double p);

// ||f*||_p over the dyadic filtration (S_{2^k} f)_{k<=N}.
NormValue hardy_norm(const SampledFunction<Rat>& f, const Rat& p);
double hardy_norm(const SampledFunction<double>& f, double p);

// Mean-zero function supported on a dyadic interval with
// sup|a| <= mu(I)^{-1/p}.
struct PAtom {
  Rat p;
  DyadicInterval interval;
  SampledFunction<Rat> data;
};

enum class AtomProfile { haar };

// The haar profile splits I in half and takes +/-2^e with
// e = floor(rank/p), the largest power of two within the sup-norm budget
// (equal to mu(I)^{-1/p} whenever rank/p is an integer).
PAtom make_atom(const Rat& p, const DyadicInterval& interval, int resolution,
                AtomProfile profile = AtomProfile::haar);

// Empty string when valid, otherwise the violated requirement.
std::string atom_violation(const PAtom& atom);
inline bool atom_is_valid(const PAtom& atom) {
  return atom_violation(atom).empty();
}

}  // namespace dslab

#endif  // DSLAB_ANALYSIS_HPP
