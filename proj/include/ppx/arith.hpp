#pragma once

#include <vector>

namespace ppx {

/// Divisors of n in ascending order (n >= 1).
std::vector<unsigned long> divisors(unsigned long n);
unsigned long euler_phi(unsigned long n);
bool is_prime(unsigned long n);
bool is_power_of_two(unsigned long n);
unsigned long gcd_ul(unsigned long a, unsigned long b);
/// Distinct prime factors in ascending order.
std::vector<unsigned long> prime_factors(unsigned long n);

} // namespace ppx
