#include "mslab/observable.hpp"

#include <fstream>
#include <sstream>

#include "mslab/errors.hpp"

namespace mslab {

Observable::Observable(const StateSpace& s, std::vector<double> v)
    : space(&s), values(std::move(v)) {
    if (values.size() != s.size())
        throw ConfigError("observable length " + std::to_string(values.size()) +
                          " does not match state-space size " +
                          std::to_string(s.size()));
}

Observable Observable::constant(const StateSpace& s, double c) {
    return Observable(s, std::vector<double>(s.size(), c));
}

Observable load_observable_csv(const StateSpace& s, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open observable file '" + path + "'");
    std::vector<double> vals;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            size_t pos = 0;
            double v = std::stod(line, &pos);
            vals.push_back(v);
        } catch (const std::exception&) {
            if (first) {  // optional header
                first = false;
                continue;
            }
            throw ConfigError("bad value '" + line + "' in '" + path + "'");
        }
        first = false;
    }
    return Observable(s, std::move(vals));
}

void store_observable_csv(const Observable& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write observable file '" + path + "'");
    out.precision(17);
    for (double v : f.values) out << v << '\n';
}

}  // namespace mslab
