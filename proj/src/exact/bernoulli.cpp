#include "exact/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace witten {

namespace {
std::mutex cache_mutex;
std::vector<BigRational> cache{BigRational(1)};
}  // namespace

BigRational bernoulli(unsigned k) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    while (cache.size() <= k) {
        const unsigned m = static_cast<unsigned>(cache.size());
        // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
        mpz_class c = 1;  // C(m+1, 0)
        BigRational sum;
        for (unsigned j = 0; j < m; ++j) {
            if (!cache[j].is_zero()) sum += BigRational(c) * cache[j];
            c = c * (m + 1 - j) / (j + 1);
        }
        cache.push_back(-sum / BigRational(static_cast<long>(m + 1)));
    }
    return cache[k];
}

BigRational zeta_neg_int(unsigned k) {
    if (k == 0) return BigRational(-1, 2);
    return -bernoulli(k + 1) / BigRational(static_cast<long>(k + 1));
}

}  // namespace witten
