#include "equifix/rat.hpp"

#include <vector>

namespace equifix {

Rat bernoulli(int k) {
    if (k < 0)
        throw std::domain_error("bernoulli: negative index");
    // Recurrence sum_{j=0}^{m} C(m+1,j) B_j = 0, m >= 1, gives B1 = -1/2.
    std::vector<Rat> b(static_cast<std::size_t>(k) + 1);
    b[0] = Rat(1);
    for (int m = 1; m <= k; ++m) {
        Rat acc(0);
        for (int j = 0; j < m; ++j)
            acc += Rat(binomial(m + 1, j)) * b[static_cast<std::size_t>(j)];
        b[static_cast<std::size_t>(m)] = -acc / Rat(m + 1);
    }
    return b[static_cast<std::size_t>(k)];
}

Int binomial(long n, long k) {
    if (n < 0)
        throw std::domain_error("binomial: negative n");
    if (k < 0 || k > n)
        return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int int_pow(const Int& base, long e) {
    if (e < 0)
        throw std::domain_error("int_pow: negative exponent");
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

}  // namespace equifix
