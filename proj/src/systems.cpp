#include "dslab/systems.hpp"

namespace dslab {

std::string system_name(System s) {
  return s == System::walsh_paley ? "walsh_paley" : "walsh_kaczmarz";
}

char system_letter(System s) {
  return s == System::walsh_paley ? 'w' : 'k';
}

System parse_system(const std::string& text) {
  if (text == "w" || text == "walsh_paley" || text == "paley")
    return System::walsh_paley;
  if (text == "k" || text == "walsh_kaczmarz" || text == "kaczmarz")
    return System::walsh_kaczmarz;
  throw std::invalid_argument("unknown system: " + text);
}

int rademacher_eval(int k, const DyadicPoint& x) {
  return x.bit(k) ? -1 : 1;
}

int walsh_eval(std::uint64_t n, const DyadicPoint& x) {
  if (n == 0) return 1;
  if (bit_length(n) >= x.resolution())
    throw ResolutionError("walsh index needs more resolution");
  int parity = 0;
  for (int k = 0; n >> k; ++k) {
    if ((n >> k) & 1u) parity ^= x.bit(k);
  }
  return parity ? -1 : 1;
}

int kaczmarz_eval(std::uint64_t n, const DyadicPoint& x) {
  if (n == 0) return 1;
  int m = bit_length(n);
  if (m >= x.resolution())
    throw ResolutionError("kaczmarz index needs more resolution");
  int parity = x.bit(m);
  for (int k = 0; k < m; ++k) {
    if ((n >> k) & 1u) parity ^= x.bit(m - 1 - k);
  }
  return parity ? -1 : 1;
}

int system_eval(System s, std::uint64_t n, const DyadicPoint& x) {
  return s == System::walsh_paley ? walsh_eval(n, x) : kaczmarz_eval(n, x);
}

std::uint64_t lower_bit_reverse(std::uint64_t n) {
  if (n == 0) throw std::domain_error("lower_bit_reverse requires n >= 1");
  int m = bit_length(n);
  std::uint64_t low = n - (std::uint64_t{1} << m);
  std::uint64_t rev = 0;
  for (int i = 0; i < m; ++i) {
    rev = (rev << 1) | ((low >> i) & 1u);
  }
  return (std::uint64_t{1} << m) + rev;
}

}  // namespace dslab
