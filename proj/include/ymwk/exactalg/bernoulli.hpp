#pragma once

#include <mutex>
#include <shared_mutex>
#include <vector>

#include "ymwk/exactalg/rational.hpp"

namespace ymwk {

// Memoized even Bernoulli numbers B_{2n}, computed from tangent numbers.
// Readers share the lock; a writer publishes a longer table only if no
// other writer has already published one at least as long.
class BernoulliTable {
public:
    Rational even(int n) {
        if (n < 0) throw usage_error("Bernoulli index must be nonnegative");
        {
            std::shared_lock lock(mutex_);
            if (n < static_cast<int>(table_.size())) return table_[n];
        }
        std::vector<Rational> fresh = compute(std::max(n, 2 * static_cast<int>(snapshot_size())));
        std::unique_lock lock(mutex_);
        if (fresh.size() > table_.size()) table_ = std::move(fresh);
        return table_[n];
    }

    std::size_t snapshot_size() const {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

    static BernoulliTable& global() {
        static BernoulliTable instance;
        return instance;
    }

private:
    // B_0..B_{2n} (even indices). Brent-Harvey tangent-number recurrence.
    static std::vector<Rational> compute(int n) {
        std::vector<Rational> out(n + 1);
        out[0] = 1;
        if (n == 0) return out;
        std::vector<BigInt> T(n + 1);
        T[1] = 1;
        for (int k = 2; k <= n; ++k) T[k] = (k - 1) * T[k - 1];
        for (int k = 2; k <= n; ++k)
            for (int j = k; j <= n; ++j) T[j] = (j - k) * T[j - 1] + (j - k + 2) * T[j];
        for (int k = 1; k <= n; ++k) {
            BigInt four_k = pow2(2 * k);
            Rational b = make_rational(2 * k * T[k], four_k * (four_k - 1));
            out[k] = (k % 2 == 1) ? b : Rational(-b);
        }
        return out;
    }

    mutable std::shared_mutex mutex_;
    std::vector<Rational> table_;
};

// B_n with the convention B_1 = -1/2.
inline Rational bernoulli(int n) {
    if (n < 0) throw usage_error("Bernoulli index must be nonnegative");
    if (n == 1) return Rational(-1, 2);
    if (n % 2 == 1) return 0;
    return BernoulliTable::global().even(n / 2);
}

}  // namespace ymwk
