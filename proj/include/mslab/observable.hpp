#pragma once

#include <string>
#include <vector>

#include "mslab/state_space.hpp"

namespace mslab {

// A function f : Omega_kappa -> R stored by state rank.
struct Observable {
    const StateSpace* space = nullptr;
    std::vector<double> values;

    Observable() = default;
    Observable(const StateSpace& s, std::vector<double> v);
    static Observable constant(const StateSpace& s, double c);

    double& operator[](uint64_t i) { return values[i]; }
    double operator[](uint64_t i) const { return values[i]; }
    uint64_t size() const { return values.size(); }
};

// CSV: one value per line in rank order; optional non-numeric header line.
Observable load_observable_csv(const StateSpace& s, const std::string& path);
void store_observable_csv(const Observable& f, const std::string& path);

}  // namespace mslab
