#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "opexact/runner.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t b = item.find_first_not_of(" \t");
        size_t e = item.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

// flat key=value file; '#' starts a comment line
std::map<std::string, std::string> load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        size_t b = line.find_first_not_of(" \t");
        if (b == std::string::npos || line[b] == '#') continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line without '=': " + line);
        std::string key = line.substr(b, eq - b);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        std::string val = line.substr(eq + 1);
        size_t vb = val.find_first_not_of(" \t");
        val = vb == std::string::npos ? "" : val.substr(vb);
        while (!val.empty() && (val.back() == ' ' || val.back() == '\t' || val.back() == '\r'))
            val.pop_back();
        kv[key] = val;
    }
    return kv;
}

nlohmann::json config_json(const opexact::SuiteConfig& cfg) {
    nlohmann::json j;
    j["suites"] = cfg.suites;
    std::vector<std::string> as, bs;
    for (const auto& a : cfg.alphas) as.push_back(a.str());
    for (const auto& b : cfg.betas) bs.push_back(b.str());
    j["alpha"] = as;
    j["beta"] = bs;
    j["bigN"] = cfg.big_ns;
    j["nmax"] = cfg.nmax;
    j["seed"] = cfg.seed;
    j["jobs"] = cfg.jobs;
    j["format"] = cfg.format;
    return j;
}

void print_json(const opexact::SuiteConfig& cfg, const opexact::RunOutcome& out) {
    nlohmann::json j;
    j["version"] = 1;
    j["config"] = config_json(cfg);
    j["reports"] = nlohmann::json::array();
    for (const auto& r : out.reports) {
        nlohmann::json jr;
        jr["identity_id"] = r.identity_id;
        jr["params"] = r.params;
        jr["lhs"] = r.lhs;
        jr["rhs"] = r.rhs;
        jr["status"] = opexact::to_cstr(r.status);
        jr["elapsed_ms"] = r.elapsed_ms;
        j["reports"].push_back(std::move(jr));
    }
    j["summary"] = {{"pass", out.passed}, {"fail", out.failed}, {"skipped", out.skipped}};
    std::cout << j.dump(2) << "\n";
}

void print_text(const opexact::RunOutcome& out) {
    size_t idw = 10, pw = 6;
    for (const auto& r : out.reports) {
        idw = std::max(idw, r.identity_id.size());
        std::string ps;
        for (const auto& [k, v] : r.params) ps += k + "=" + v + " ";
        pw = std::max(pw, ps.size());
    }
    for (const auto& r : out.reports) {
        std::string ps;
        for (const auto& [k, v] : r.params) ps += k + "=" + v + " ";
        std::cout << std::left << std::setw(static_cast<int>(idw) + 2) << r.identity_id
                  << std::setw(static_cast<int>(pw) + 2) << ps << std::setw(9)
                  << opexact::to_cstr(r.status);
        if (r.status == opexact::CheckStatus::fail)
            std::cout << r.lhs << " != " << r.rhs;
        else
            std::cout << r.lhs;
        std::cout << "\n";
    }
    std::cout << "summary: " << out.passed << " pass, " << out.failed << " fail, " << out.skipped
              << " skipped\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of orthogonal-polynomial and hypergeometric identities"};

    std::string suites_arg, alpha_arg, beta_arg, bign_arg, format_arg, config_path;
    long nmax = -1;
    long seed = -1;
    int jobs = 0;

    app.add_option("--suite", suites_arg, "comma-separated suite list");
    app.add_option("--alpha", alpha_arg, "comma-separated rational alpha grid");
    app.add_option("--beta", beta_arg, "comma-separated rational beta grid");
    app.add_option("--bigN", bign_arg, "comma-separated N grid for the discrete family");
    app.add_option("--nmax", nmax, "maximum degree index");
    app.add_option("--format", format_arg, "output format: text or json");
    app.add_option("--jobs", jobs, "worker count");
    app.add_option("--seed", seed, "seed for randomized property checks");
    app.add_option("--config", config_path, "flat key=value config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    opexact::SuiteConfig cfg = opexact::SuiteConfig::defaults();
    try {
        if (!config_path.empty()) {
            auto kv = load_config_file(config_path);
            for (const auto& [key, val] : kv) {
                if (key == "suites" || key == "suite") cfg.suites = split_csv(val);
                else if (key == "alpha") {
                    cfg.alphas.clear();
                    for (const auto& s : split_csv(val))
                        cfg.alphas.push_back(opexact::Rational::from_string(s));
                } else if (key == "beta") {
                    cfg.betas.clear();
                    for (const auto& s : split_csv(val))
                        cfg.betas.push_back(opexact::Rational::from_string(s));
                } else if (key == "bigN") {
                    cfg.big_ns.clear();
                    for (const auto& s : split_csv(val)) cfg.big_ns.push_back(std::stol(s));
                } else if (key == "nmax") cfg.nmax = std::stol(val);
                else if (key == "seed") cfg.seed = std::stoul(val);
                else if (key == "jobs") cfg.jobs = std::stoi(val);
                else if (key == "format") cfg.format = val;
                else throw std::invalid_argument("unknown config key '" + key + "'");
            }
        }
        if (!suites_arg.empty()) cfg.suites = split_csv(suites_arg);
        if (!alpha_arg.empty()) {
            cfg.alphas.clear();
            for (const auto& s : split_csv(alpha_arg))
                cfg.alphas.push_back(opexact::Rational::from_string(s));
        }
        if (!beta_arg.empty()) {
            cfg.betas.clear();
            for (const auto& s : split_csv(beta_arg))
                cfg.betas.push_back(opexact::Rational::from_string(s));
        }
        if (!bign_arg.empty()) {
            cfg.big_ns.clear();
            for (const auto& s : split_csv(bign_arg)) cfg.big_ns.push_back(std::stol(s));
        }
        if (nmax >= 0) cfg.nmax = nmax;
        if (seed >= 0) cfg.seed = static_cast<unsigned long>(seed);
        if (jobs > 0) cfg.jobs = jobs;
        if (!format_arg.empty()) cfg.format = format_arg;
        cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    opexact::RunOutcome out = opexact::run_suites(cfg);
    if (cfg.format == "json")
        print_json(cfg, out);
    else
        print_text(out);
    return out.exit_code;
}
