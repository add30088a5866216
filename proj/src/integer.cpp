#include "ppx/integer.hpp"

#include <stdexcept>

#include "ppx/errors.hpp"

namespace ppx {

Integer::Integer(std::string_view decimal)
{
    if (v_.set_str(std::string(decimal), 10) != 0) {
        throw std::invalid_argument("not a decimal integer: " + std::string(decimal));
    }
}

long Integer::to_long() const
{
    if (!fits_long()) {
        throw std::overflow_error("integer does not fit in long: " + str());
    }
    return v_.get_si();
}

Integer tdiv(const Integer& a, const Integer& b)
{
    if (b.is_zero()) throw std::domain_error("division by zero");
    mpz_class r;
    mpz_tdiv_q(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(std::move(r));
}

Integer tmod(const Integer& a, const Integer& b)
{
    if (b.is_zero()) throw std::domain_error("division by zero");
    mpz_class r;
    mpz_tdiv_r(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(std::move(r));
}

Integer mod_floor(const Integer& a, const Integer& m)
{
    if (m.is_zero()) throw std::domain_error("modulus zero");
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.raw().get_mpz_t(), m.raw().get_mpz_t());
    return Integer(std::move(r));
}

bool divides(const Integer& d, const Integer& a)
{
    if (d.is_zero()) return a.is_zero();
    return mpz_divisible_p(a.raw().get_mpz_t(), d.raw().get_mpz_t()) != 0;
}

Integer divexact(const Integer& a, const Integer& b)
{
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (!divides(b, a)) {
        throw InexactDivision(a.str() + " is not divisible by " + b.str());
    }
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(std::move(r));
}

Integer gcd(const Integer& a, const Integer& b)
{
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(std::move(r));
}

Integer pow(const Integer& base, unsigned long exp)
{
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exp);
    return Integer(std::move(r));
}

Integer factorial(unsigned long n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Integer(std::move(r));
}

Integer binomial(unsigned long n, unsigned long k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Integer(std::move(r));
}

} // namespace ppx
