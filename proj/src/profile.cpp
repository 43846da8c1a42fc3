#include "mslab/profile.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mslab/errors.hpp"

namespace mslab {

ColorProfile::ColorProfile(std::vector<int> c) : counts(std::move(c)) {
    if (counts.empty())
        throw ConfigError("color profile must have at least one entry");
    for (int k : counts)
        if (k < 1) throw ConfigError("color profile entries must be positive");
    total_ = std::accumulate(counts.begin(), counts.end(), 0);
    min_ = *std::min_element(counts.begin(), counts.end());
}

ColorProfile ColorProfile::parse(const std::string& text) {
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw ConfigError("bad profile entry '" + tok + "' in '" + text + "'");
        }
        if (pos != tok.size() || v < 1)
            throw ConfigError("bad profile entry '" + tok + "' in '" + text + "'");
        entries.push_back(v);
    }
    if (entries.empty()) throw ConfigError("empty profile '" + text + "'");
    return ColorProfile(std::move(entries));
}

ColorProfile ColorProfile::canonical() const {
    std::vector<int> c = counts;
    std::sort(c.begin(), c.end(), std::greater<int>());
    return ColorProfile(std::move(c));
}

ColorProfile ColorProfile::removed(int ell) const {
    if (ell < 1 || ell > l()) throw ConfigError("color index out of range");
    if (l() < 2) throw DegenerateSpaceError("cannot remove the only color");
    std::vector<int> c = counts;
    c.erase(c.begin() + (ell - 1));
    return ColorProfile(std::move(c));
}

std::string ColorProfile::to_string() const {
    std::string s;
    for (size_t i = 0; i < counts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(counts[i]);
    }
    return s;
}

Word transposition_image(const Word& w, int i, int j) {
    const int n = static_cast<int>(w.size());
    if (i < 1 || j > n || i >= j)
        throw ConfigError("transposition requires 1 <= i < j <= n");
    Word out = w;
    std::swap(out[i - 1], out[j - 1]);
    return out;
}

std::vector<int> color_region(const Word& w, int color, int num_colors) {
    if (color < 1 || color > num_colors)
        throw ConfigError("color out of range");
    std::vector<int> region;
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] == color) region.push_back(static_cast<int>(i) + 1);
    return region;
}

std::vector<int> coarsening_map(const ColorProfile& profile) {
    std::vector<int> psi(profile.n());
    int pos = 0;
    for (int ell = 1; ell <= profile.l(); ++ell)
        for (int k = 0; k < profile.counts[ell - 1]; ++k) psi[pos++] = ell;
    return psi;
}

Word coarsen_word(const ColorProfile& profile, const Word& w) {
    const std::vector<int> psi = coarsening_map(profile);
    Word out(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
        int site = w[i];
        if (site < 1 || site > profile.n())
            throw MalformedStateError("letter out of range for coarsening");
        out[i] = static_cast<uint8_t>(psi[site - 1]);
    }
    return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<ColorProfile>& out, int min_parts) {
    if (remaining == 0) {
        if (static_cast<int>(cur.size()) >= min_parts)
            out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out, min_parts);
        cur.pop_back();
    }
}

}  // namespace

std::vector<ColorProfile> all_partitions(int n, int min_parts) {
    std::vector<ColorProfile> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out, min_parts);
    return out;
}

std::vector<ColorProfile> all_compositions(int n, int min_parts) {
    std::vector<ColorProfile> out;
    // one composition per subset of cut points of [1, n)
    for (uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1ull << i)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        if (static_cast<int>(parts.size()) >= min_parts)
            out.emplace_back(std::move(parts));
    }
    return out;
}

}  // namespace mslab
