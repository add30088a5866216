#include "ppx/arith.hpp"

#include <algorithm>
#include <numeric>

namespace ppx {

std::vector<unsigned long> divisors(unsigned long n)
{
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

unsigned long euler_phi(unsigned long n)
{
    unsigned long result = n;
    for (unsigned long p : prime_factors(n)) result = result / p * (p - 1);
    return result;
}

bool is_prime(unsigned long n)
{
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_power_of_two(unsigned long n) { return n != 0 && (n & (n - 1)) == 0; }

unsigned long gcd_ul(unsigned long a, unsigned long b) { return std::gcd(a, b); }

std::vector<unsigned long> prime_factors(unsigned long n)
{
    std::vector<unsigned long> ps;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        ps.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

} // namespace ppx
