#pragma once

#include <cstdint>

#include "mslab/profile.hpp"

namespace mslab {

inline constexpr uint64_t kDefaultStateCap = 200000;

// Exact multinomial coefficient n! / (kappa_1! ... kappa_L!).
// Pure counting: no cap, but throws OverflowError beyond 64 bits.
uint64_t multinomial_size(const ColorProfile& profile);

// Enumerated multislice Omega_kappa with bijective lexicographic
// rank/unrank (colors compared numerically).
class StateSpace {
  public:
    explicit StateSpace(ColorProfile profile, uint64_t cap = kDefaultStateCap);

    const ColorProfile& profile() const { return profile_; }
    uint64_t size() const { return size_; }
    int n() const { return profile_.n(); }
    int num_colors() const { return profile_.l(); }

    // Position of w in the canonical lexicographic ordering, O(n*L) via
    // multinomial prefix counts. Throws MalformedStateError if w does not
    // match the profile.
    uint64_t rank(const Word& w) const;

    // Inverse of rank. Throws ConfigError if idx >= size.
    Word unrank(uint64_t idx) const;

  private:
    ColorProfile profile_;
    uint64_t size_ = 0;
};

}  // namespace mslab
