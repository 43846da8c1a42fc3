#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mslab {

// A word on the multislice: length-n sequence of colors in 1..L.
using Word = std::vector<uint8_t>;

// The parameter kappa = (kappa_1, ..., kappa_L).
struct ColorProfile {
    std::vector<int> counts;

    ColorProfile() = default;
    explicit ColorProfile(std::vector<int> c);

    int n() const { return total_; }
    int l() const { return static_cast<int>(counts.size()); }
    int kappa_min() const { return min_; }

    // Parses "2,2,1". Rejects non-positive or malformed entries.
    static ColorProfile parse(const std::string& text);

    // Entries sorted in descending order; constants depend only on the
    // multiset of entries.
    ColorProfile canonical() const;

    // kappa with the ell-th entry removed (ell is 1-based).
    ColorProfile removed(int ell) const;

    std::string to_string() const;

    bool operator==(const ColorProfile& o) const { return counts == o.counts; }

  private:
    int total_ = 0;
    int min_ = 0;
};

// Word with letters at positions i and j swapped (1-based, i < j).
Word transposition_image(const Word& w, int i, int j);

// xi_ell = { i : w_i = ell }, positions 1-based.
std::vector<int> color_region(const Word& w, int color, int num_colors);

// Block projection Psi : [n] -> [L]; Psi(i) = ell iff i lies in the ell-th
// consecutive block of sizes kappa_1, ..., kappa_L. 1-based in and out.
std::vector<int> coarsening_map(const ColorProfile& profile);

// Coordinate-wise application of Psi: maps a word on (1,...,1) colors
// (a permutation written as a word over [n]) to a word on Omega_kappa.
Word coarsen_word(const ColorProfile& profile, const Word& w);

// All partitions of n into at least min_parts parts, as canonical profiles.
std::vector<ColorProfile> all_partitions(int n, int min_parts = 2);

// All compositions (ordered) of n with at least min_parts parts.
std::vector<ColorProfile> all_compositions(int n, int min_parts = 2);

}  // namespace mslab
