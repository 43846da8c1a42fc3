#include "mslab/state_space.hpp"

#include "mslab/errors.hpp"

namespace mslab {

namespace {

uint64_t mul_checked(uint64_t a, uint64_t b) {
    uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("multinomial coefficient exceeds 64 bits");
    return r;
}

}  // namespace

uint64_t multinomial_size(const ColorProfile& profile) {
    // Incremental n-choose-k products: result stays integral at each step.
    uint64_t result = 1;
    uint64_t placed = 0;
    for (int k : profile.counts) {
        for (int t = 1; t <= k; ++t) {
            ++placed;
            // result * placed / t is exact: result tracks C(placed, block prefix)
            result = mul_checked(result, placed) / t;
        }
    }
    return result;
}

StateSpace::StateSpace(ColorProfile profile, uint64_t cap)
    : profile_(std::move(profile)) {
    size_ = multinomial_size(profile_);
    if (size_ > cap)
        throw CapError("state space has " + std::to_string(size_) +
                       " states, exceeding the enumeration cap of " +
                       std::to_string(cap));
}

uint64_t StateSpace::rank(const Word& w) const {
    const int n = profile_.n();
    const int L = profile_.l();
    if (static_cast<int>(w.size()) != n)
        throw MalformedStateError("word length does not match profile");
    std::vector<int> rem = profile_.counts;
    for (uint8_t c : w) {
        if (c < 1 || c > L || rem[c - 1] <= 0)
            throw MalformedStateError("word violates profile color counts");
        --rem[c - 1];
    }
    rem = profile_.counts;
    uint64_t total = size_;
    uint64_t r = 0;
    for (int p = 0; p < n; ++p) {
        const int remlen = n - p;
        const int c = w[p] - 1;
        for (int cc = 0; cc < c; ++cc) {
            if (rem[cc] > 0)
                r += total * static_cast<uint64_t>(rem[cc]) / remlen;
        }
        total = total * static_cast<uint64_t>(rem[c]) / remlen;
        --rem[c];
    }
    return r;
}

Word StateSpace::unrank(uint64_t idx) const {
    if (idx >= size_)
        throw ConfigError("state index " + std::to_string(idx) +
                          " out of range [0, " + std::to_string(size_) + ")");
    const int n = profile_.n();
    const int L = profile_.l();
    std::vector<int> rem = profile_.counts;
    uint64_t total = size_;
    Word w(n);
    for (int p = 0; p < n; ++p) {
        const int remlen = n - p;
        for (int c = 0; c < L; ++c) {
            if (rem[c] == 0) continue;
            const uint64_t block = total * static_cast<uint64_t>(rem[c]) / remlen;
            if (idx < block) {
                w[p] = static_cast<uint8_t>(c + 1);
                total = block;
                --rem[c];
                break;
            }
            idx -= block;
        }
    }
    return w;
}

}  // namespace mslab
