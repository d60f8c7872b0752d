#ifndef MC_CONFIG_HPP
#define MC_CONFIG_HPP

#include <string>

namespace mc {

struct Config {
    int default_digits = 12;
    int identity_m_cap = 12;
    long refinement_budget = 100000;
    std::string output_format = "json";  // json | csv

    // Loads overrides from a key=value file; path from MC_CONFIG when unset.
    static Config load(const std::string& path = "");
    void validate() const;
};

}  // namespace mc

#endif
