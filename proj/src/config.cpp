#include "mc/config.hpp"

#include <cstdlib>
#include <fstream>

#include "mc/rational.hpp"

namespace mc {

Config Config::load(const std::string& path) {
    Config cfg;
    std::string p = path;
    if (p.empty()) {
        const char* env = std::getenv("MC_CONFIG");
        if (env) p = env;
    }
    if (p.empty()) return cfg;
    std::ifstream in(p);
    if (!in) fail(ErrorKind::ParseError, "cannot open config file " + p);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(ErrorKind::ParseError, p + ":" + std::to_string(lineno) + ": expected key=value");
        std::string key = line.substr(0, eq), val = line.substr(eq + 1);
        if (key == "default_digits")
            cfg.default_digits = std::atoi(val.c_str());
        else if (key == "identity_m_cap")
            cfg.identity_m_cap = std::atoi(val.c_str());
        else if (key == "refinement_budget")
            cfg.refinement_budget = std::atol(val.c_str());
        else if (key == "output_format")
            cfg.output_format = val;
        else
            fail(ErrorKind::ParseError, p + ":" + std::to_string(lineno) + ": unknown key " + key);
    }
    cfg.validate();
    return cfg;
}

void Config::validate() const {
    if (default_digits <= 0 || identity_m_cap <= 0 || refinement_budget <= 0)
        fail(ErrorKind::ParseError, "config values must be positive");
    if (output_format != "json" && output_format != "csv")
        fail(ErrorKind::ParseError, "output_format must be json or csv");
}

}  // namespace mc
