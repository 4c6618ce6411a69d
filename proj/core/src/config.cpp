#include "oscbath/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "oscbath/errors.hpp"
#include "oscbath/fock_oracle.hpp"
#include "oscbath/reports.hpp"

namespace oscbath {

namespace {

struct RawValue {
    std::string text;
    int line = 0;
    mutable bool consumed = false;
};

using RawMap = std::map<std::string, RawValue>;

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(const std::string& name, int line, const std::string& msg) {
    std::ostringstream os;
    os << name << ":" << line << ": " << msg;
    throw config_error(os.str());
}

RawMap tokenize(const std::string& text, const std::string& name) {
    RawMap map;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail(name, lineno, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty()) fail(name, lineno, "empty section name");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(name, lineno, "expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(name, lineno, "empty key");
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        const std::string full = section.empty() ? key : section + "." + key;
        if (map.count(full)) fail(name, lineno, "duplicate key '" + full + "'");
        map[full] = {value, lineno, false};
    }
    return map;
}

class Reader {
  public:
    Reader(RawMap map, std::string name) : map_(std::move(map)), name_(std::move(name)) {}

    bool has(const std::string& key) const { return map_.count(key) != 0; }

    bool has_section(const std::string& prefix) const {
        const auto it = map_.lower_bound(prefix + ".");
        return it != map_.end() && it->first.rfind(prefix + ".", 0) == 0;
    }

    std::string get_string(const std::string& key, const std::string& fallback) {
        const auto* v = find(key);
        return v ? v->text : fallback;
    }

    double get_double(const std::string& key, double fallback) {
        const auto* v = find(key);
        if (!v) return fallback;
        try {
            std::size_t used = 0;
            const double d = std::stod(v->text, &used);
            if (used != v->text.size()) throw std::invalid_argument("");
            return d;
        } catch (...) {
            fail(name_, v->line, "expected a number for '" + key + "', got '" + v->text + "'");
        }
    }

    long long get_int(const std::string& key, long long fallback) {
        const auto* v = find(key);
        if (!v) return fallback;
        try {
            std::size_t used = 0;
            const long long i = std::stoll(v->text, &used);
            if (used != v->text.size()) throw std::invalid_argument("");
            return i;
        } catch (...) {
            fail(name_, v->line, "expected an integer for '" + key + "', got '" + v->text + "'");
        }
    }

    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) {
        const auto* v = find(key);
        if (!v) return fallback;
        try {
            std::size_t used = 0;
            const std::uint64_t i = std::stoull(v->text, &used);
            if (used != v->text.size()) throw std::invalid_argument("");
            return i;
        } catch (...) {
            fail(name_, v->line, "expected an unsigned integer for '" + key + "'");
        }
    }

    bool get_bool(const std::string& key, bool fallback) {
        const auto* v = find(key);
        if (!v) return fallback;
        if (v->text == "true") return true;
        if (v->text == "false") return false;
        fail(name_, v->line, "expected true/false for '" + key + "'");
    }

    void reject_unconsumed() const {
        for (const auto& [key, v] : map_) {
            if (!v.consumed) fail(name_, v.line, "unknown key '" + key + "'");
        }
    }

    [[noreturn]] void fail_key(const std::string& key, const std::string& msg) const {
        const auto it = map_.find(key);
        fail(name_, it == map_.end() ? 0 : it->second.line, msg);
    }

  private:
    const RawValue* find(const std::string& key) {
        const auto it = map_.find(key);
        if (it == map_.end()) return nullptr;
        it->second.consumed = true;
        return &it->second;
    }

    RawMap map_;
    std::string name_;
};

FormFactor read_profile(Reader& r, const std::string& prefix, const std::string& name) {
    const std::string kind = r.get_string(prefix + ".kind", "zero");
    if (kind == "zero") return FormFactor::zero();
    if (kind == "power_law") {
        return FormFactor::power_law(r.get_double(prefix + ".amplitude", 1.0),
                                     r.get_double(prefix + ".exponent", 0.0),
                                     r.get_double(prefix + ".cutoff", 1.0));
    }
    const auto read_rows = [&](const std::string& file) {
        std::ifstream in(file);
        if (!in) r.fail_key(prefix + ".file", "cannot open '" + file + "'");
        std::vector<std::pair<double, double>> rows;
        std::string line;
        while (std::getline(in, line)) {
            line = trim(line);
            if (line.empty() || line.front() == '#') continue;
            std::replace(line.begin(), line.end(), ',', ' ');
            std::istringstream row(line);
            double a, b;
            if (!(row >> a >> b)) r.fail_key(prefix + ".file", "bad row in '" + file + "'");
            rows.emplace_back(a, b);
        }
        return rows;
    };
    if (kind == "tabulated") {
        const std::string file = r.get_string(prefix + ".file", "");
        if (file.empty()) r.fail_key(prefix + ".kind", "tabulated profile needs 'file = <csv path>'");
        std::vector<double> radius, value;
        for (const auto& [rr, ff] : read_rows(file)) {
            radius.push_back(rr);
            value.push_back(ff);
        }
        return FormFactor::tabulated(std::move(radius), std::move(value));
    }
    if (kind == "discrete_modes") {
        const std::string file = r.get_string(prefix + ".file", "");
        if (file.empty())
            r.fail_key(prefix + ".kind", "discrete_modes profile needs 'file = <csv path>' with omega,g rows");
        std::vector<Mode> modes;
        for (const auto& [omega, g] : read_rows(file)) modes.push_back({omega, g});
        return FormFactor::discrete_modes(std::move(modes));
    }
    r.fail_key(prefix + ".kind", "unknown profile kind '" + kind + "' for " + name);
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& name,
                       const std::vector<std::string>& overrides) {
    RawMap raw = tokenize(text, name);
    for (const auto& ov : overrides) {
        const auto eq = ov.find('=');
        if (eq == std::string::npos)
            throw config_error("override '" + ov + "' is not KEY=VALUE");
        raw[trim(ov.substr(0, eq))] = {trim(ov.substr(eq + 1)), 0, false};
    }
    Reader r(std::move(raw), name);

    const long long schema = r.get_int("schema", -1);
    if (schema != 1) {
        if (schema == -1)
            throw config_error(name + ": missing 'schema = 1'");
        throw config_error(name + ": unsupported schema version " + std::to_string(schema));
    }

    RunConfig cfg;
    try {
        cfg.model.theta = r.get_double("model.theta", 1.0);
        cfg.model.lambda = r.get_double("model.lambda", 0.0);
        cfg.model.beta = r.get_double("model.beta", 1.0);
        cfg.model.form_factor = read_profile(r, "model.form_factor", "model.form_factor");
        cfg.discretize_modes = static_cast<int>(r.get_int("model.form_factor.discretize_modes", 0));
        if (cfg.discretize_modes < 0)
            r.fail_key("model.form_factor.discretize_modes", "must be >= 0");
        if (cfg.discretize_modes > 0)
            cfg.model.form_factor =
                FormFactor::discrete_modes(mode_discretization(cfg.model.form_factor, cfg.discretize_modes));

        if (r.has_section("eta") || r.has("eta.gamma")) {
            EtaConfig eta;
            eta.profiles.gamma = r.get_double("eta.gamma", 0.0);
            eta.profiles.g_norm = read_profile(r, "eta.g", "eta.g");
            eta.profiles.h_norm = read_profile(r, "eta.h", "eta.h");
            eta.profiles.f_gamma_norm = read_profile(r, "eta.f", "eta.f");
            eta.profiles.f_star_gamma_norm = read_profile(r, "eta.f_star", "eta.f_star");
            eta.c_inner = r.get_double("eta.c_inner", 1.0);
            if (eta.profiles.gamma < 0.0 || eta.profiles.gamma > 0.5)
                r.fail_key("eta.gamma", "gamma must lie in [0, 1/2]");
            cfg.eta = std::move(eta);
        }

        cfg.compute.seed = r.get_u64("compute.seed", cfg.compute.seed);
        cfg.compute.samples = r.get_int("compute.samples", cfg.compute.samples);
        cfg.compute.grid = static_cast<int>(r.get_int("compute.grid", cfg.compute.grid));
        cfg.compute.max_n = static_cast<int>(r.get_int("compute.max_n", cfg.compute.max_n));
        cfg.compute.budget_seconds = r.get_double("compute.budget_seconds", 0.0);
        if (cfg.compute.samples < 2) r.fail_key("compute.samples", "need at least 2 samples");
        if (cfg.compute.grid < 16) r.fail_key("compute.grid", "grid must be >= 16");
        if (cfg.compute.max_n < 0) r.fail_key("compute.max_n", "max_n must be >= 0");

        cfg.oracle.enabled = r.get_bool("oracle.enabled", false);
        cfg.oracle.d_el = static_cast<int>(r.get_int("oracle.d_el", cfg.oracle.d_el));
        cfg.oracle.d_b = static_cast<int>(r.get_int("oracle.d_b", cfg.oracle.d_b));
        if (cfg.oracle.enabled && cfg.model.form_factor.kind() != ProfileKind::DiscreteModes)
            r.fail_key("oracle.enabled",
                       "the oracle needs a discrete-mode form factor "
                       "(set model.form_factor.discretize_modes or kind = discrete_modes)");

        cfg.scan.beta_min = r.get_double("scan.beta_min", cfg.scan.beta_min);
        cfg.scan.beta_max = r.get_double("scan.beta_max", cfg.scan.beta_max);
        cfg.scan.beta_steps = static_cast<int>(r.get_int("scan.beta_steps", cfg.scan.beta_steps));
        cfg.scan.lambda_min = r.get_double("scan.lambda_min", cfg.scan.lambda_min);
        cfg.scan.lambda_max = r.get_double("scan.lambda_max", cfg.scan.lambda_max);
        cfg.scan.lambda_steps = static_cast<int>(r.get_int("scan.lambda_steps", cfg.scan.lambda_steps));

        cfg.output_dir = r.get_string("output.dir", cfg.output_dir);

        cfg.model.validate();
    } catch (const config_error&) {
        throw;
    } catch (const std::exception& e) {
        throw config_error(name + ": " + e.what());
    }
    r.reject_unconsumed();
    return cfg;
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path, overrides);
}

std::vector<std::pair<std::string, std::string>> RunConfig::flatten() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back("schema", "1");
    out.emplace_back("model.theta", format_g17(model.theta));
    out.emplace_back("model.lambda", format_g17(model.lambda));
    out.emplace_back("model.beta", format_g17(model.beta));
    out.emplace_back("model.form_factor", model.form_factor.describe());
    out.emplace_back("model.form_factor.discretize_modes", std::to_string(discretize_modes));
    if (eta) {
        out.emplace_back("eta.gamma", format_g17(eta->profiles.gamma));
        out.emplace_back("eta.c_inner", format_g17(eta->c_inner));
        out.emplace_back("eta.g", eta->profiles.g_norm.describe());
        out.emplace_back("eta.h", eta->profiles.h_norm.describe());
        out.emplace_back("eta.f", eta->profiles.f_gamma_norm.describe());
        out.emplace_back("eta.f_star", eta->profiles.f_star_gamma_norm.describe());
    }
    out.emplace_back("compute.seed", std::to_string(compute.seed));
    out.emplace_back("compute.samples", std::to_string(compute.samples));
    out.emplace_back("compute.grid", std::to_string(compute.grid));
    out.emplace_back("compute.max_n", std::to_string(compute.max_n));
    out.emplace_back("compute.budget_seconds", format_g17(compute.budget_seconds));
    out.emplace_back("oracle.enabled", oracle.enabled ? "true" : "false");
    out.emplace_back("oracle.d_el", std::to_string(oracle.d_el));
    out.emplace_back("oracle.d_b", std::to_string(oracle.d_b));
    out.emplace_back("scan.beta_min", format_g17(scan.beta_min));
    out.emplace_back("scan.beta_max", format_g17(scan.beta_max));
    out.emplace_back("scan.beta_steps", std::to_string(scan.beta_steps));
    out.emplace_back("scan.lambda_min", format_g17(scan.lambda_min));
    out.emplace_back("scan.lambda_max", format_g17(scan.lambda_max));
    out.emplace_back("scan.lambda_steps", std::to_string(scan.lambda_steps));
    return out;
}

}  // namespace oscbath
