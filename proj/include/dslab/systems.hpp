#ifndef DSLAB_SYSTEMS_HPP
#define DSLAB_SYSTEMS_HPP

// Pointwise evaluation of the Rademacher, Walsh-Paley and Walsh-Kaczmarz
// functions, plus the per-block bit-reversal linking the two orderings.

#include <cstdint>
#include <string>

#include "dslab/dyadic.hpp"

namespace dslab {

enum class System { walsh_paley, walsh_kaczmarz };

std::string system_name(System s);
char system_letter(System s);  // 'w' or 'k'
System parse_system(const std::string& text);

// r_k(x) = (-1)^{x_k}
int rademacher_eval(int k, const DyadicPoint& x);

// w_n(x) = prod_k r_k(x)^{n_k}
int walsh_eval(std::uint64_t n, const DyadicPoint& x);

// kappa_n(x) = r_{|n|}(x) * (-1)^{sum_{k<|n|} n_k x_{|n|-1-k}}, kappa_0 = 1.
int kaczmarz_eval(std::uint64_t n, const DyadicPoint& x);

int system_eval(System s, std::uint64_t n, const DyadicPoint& x);

// 2^{|n|} + reversal of the low |n| bits of n - 2^{|n|}. An involution on
// each block [2^m, 2^{m+1}); kappa_n and w_{lower_bit_reverse(n)} coincide
// as functions (this is the transform fast path, not the definition).
std::uint64_t lower_bit_reverse(std::uint64_t n);

}  // namespace dslab

#endif  // DSLAB_SYSTEMS_HPP
