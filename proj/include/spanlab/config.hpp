#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace spanlab {

// Flat key-value configuration with section-prefixed keys ("train.lr = 3e-5").
// Lookup precedence is handled by the caller: flags override file, file
// overrides defaults.
class Config {
public:
    Config() = default;

    static Config defaults();
    static Config from_file(const std::string& path);

    void set(const std::string& key, const std::string& value);
    bool has(const std::string& key) const;

    // Throws config_error when the key is absent or malformed.
    std::string get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    std::int64_t get_int(const std::string& key) const;
    bool get_bool(const std::string& key) const;
    // Comma-separated list values.
    std::vector<std::string> get_list(const std::string& key) const;
    std::vector<double> get_double_list(const std::string& key) const;

    // Overlay: entries in `other` win.
    void merge(const Config& other);

    const std::map<std::string, std::string>& entries() const { return entries_; }
    std::string to_string() const;

private:
    std::map<std::string, std::string> entries_;
};

// Derives a module-local seed from the run seed: FNV-1a over the module name,
// folded with the seed. Documented so runs are reproducible across builds.
std::uint64_t derive_seed(std::uint64_t run_seed, const std::string& module_name);

}  // namespace spanlab
