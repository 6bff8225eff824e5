#include "sqlab/binomial.hpp"

namespace sqlab {

bool choose_mod2(std::int64_t n, std::int64_t k)
{
    if (n < 0 || k < 0 || k > n)
        return false;
    // C(1,0) = C(0,0) = C(1,1) = 1, C(0,1) = 0
    while (k > 0) {
        if ((k & 1) && !(n & 1))
            return false;
        n >>= 1;
        k >>= 1;
    }
    return true;
}

bool binom_pair_mod2(std::int64_t a, std::int64_t b)
{
    if (a < 0 || b < 0)
        return false;
    return choose_mod2(a + b, a);
}

}  // namespace sqlab
