#include "spanlab/config.hpp"

#include <fstream>
#include <sstream>

#include "spanlab/errors.hpp"

namespace spanlab {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

Config Config::defaults() {
    Config c;
    // textproc
    c.set("pipeline.steps", "nfc,diacritic_strip,roman_to_nastaliq,noise_removal,whitespace_norm,word_segmentation");
    c.set("pipeline.translit_table", "");
    c.set("pipeline.segment_table", "");
    c.set("pipeline.dedup_threshold", "0.8");
    // splits
    c.set("split.train", "0.8");
    c.set("split.dev", "0.1");
    c.set("split.test", "0.1");
    c.set("split.stratify", "domain_toxicity");
    // encoder
    c.set("encoder.kind", "recurrent");
    c.set("encoder.vocab_size", "0");  // 0: sized from the training vocabulary
    c.set("encoder.embed_dim", "32");
    c.set("encoder.hidden_dim", "64");
    c.set("encoder.attention_heads", "4");
    c.set("encoder.dropout", "0.0");
    // loss
    c.set("loss.kind", "crf");
    c.set("loss.gamma", "2.0");
    c.set("loss.derived_weights", "true");
    c.set("loss.weights", "1,1,1");
    c.set("loss.constrain_bio", "true");
    // training
    c.set("train.lr", "0.1");
    c.set("train.lr_grid", "1e-5,3e-5,5e-5");
    c.set("train.batch_grid", "16,32");
    c.set("train.dropout_grid", "0.1,0.3");
    c.set("train.batch_size", "16");
    c.set("train.max_epochs", "20");
    c.set("train.patience", "5");
    c.set("train.momentum", "0.9");
    c.set("train.clip_norm", "5.0");
    c.set("train.domain_weighting", "true");
    // explain
    c.set("explain.ig_steps", "50");
    c.set("explain.attention_threshold", "0.3");
    c.set("explain.are_lambda", "0.1");
    c.set("explain.are_threshold", "0.5");
    // augmentation
    c.set("augment.synonym.enabled", "false");
    c.set("augment.synonym.replace_frac_lo", "0.10");
    c.set("augment.synonym.replace_frac_hi", "0.15");
    c.set("augment.synonym.dict", "");
    c.set("augment.mask.enabled", "false");
    c.set("augment.mask.prob", "0.05");
    c.set("augment.mask.token", "<MASK>");
    c.set("augment.codeswitch.enabled", "false");
    c.set("augment.codeswitch.sample_frac", "0.15");
    c.set("augment.codeswitch.word_frac_lo", "0.20");
    c.set("augment.codeswitch.word_frac_hi", "0.30");
    c.set("augment.codeswitch.dict", "");
    // synth
    c.set("synth.posts", "600");
    c.set("synth.lexicon_size", "30");
    c.set("synth.domains", "social_media,news,youtube");
    // global
    c.set("seed", "42");
    return c;
}

Config Config::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open config file: " + path);
    Config c;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw config_error(path + ":" + std::to_string(lineno) +
                               ": expected 'key = value'");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw config_error(path + ":" + std::to_string(lineno) + ": empty key");
        c.set(key, value);
    }
    return c;
}

void Config::set(const std::string& key, const std::string& value) {
    entries_[key] = value;
}

bool Config::has(const std::string& key) const { return entries_.count(key) > 0; }

std::string Config::get(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw config_error("missing config key: " + key);
    return it->second;
}

std::string Config::get_or(const std::string& key, const std::string& fallback) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key) const {
    const std::string v = get(key);
    try {
        std::size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw config_error("config key " + key + " is not a number: " + v);
    }
}

std::int64_t Config::get_int(const std::string& key) const {
    const std::string v = get(key);
    try {
        std::size_t pos = 0;
        std::int64_t d = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw config_error("config key " + key + " is not an integer: " + v);
    }
}

bool Config::get_bool(const std::string& key) const {
    const std::string v = get(key);
    if (v == "true" || v == "on" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "off" || v == "0" || v == "no") return false;
    throw config_error("config key " + key + " is not a boolean: " + v);
}

std::vector<std::string> Config::get_list(const std::string& key) const {
    std::vector<std::string> out;
    std::stringstream ss(get(key));
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string t = trim(item);
        if (!t.empty()) out.push_back(t);
    }
    return out;
}

std::vector<double> Config::get_double_list(const std::string& key) const {
    std::vector<double> out;
    for (const auto& s : get_list(key)) {
        try {
            out.push_back(std::stod(s));
        } catch (const std::exception&) {
            throw config_error("config key " + key + " has non-numeric item: " + s);
        }
    }
    return out;
}

void Config::merge(const Config& other) {
    for (const auto& [k, v] : other.entries_) entries_[k] = v;
}

std::string Config::to_string() const {
    std::string out;
    for (const auto& [k, v] : entries_) {
        out += k;
        out += " = ";
        out += v;
        out += '\n';
    }
    return out;
}

std::uint64_t derive_seed(std::uint64_t run_seed, const std::string& module_name) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : module_name) {
        h ^= c;
        h *= 1099511628211ull;
    }
    for (int i = 0; i < 8; ++i) {
        h ^= (run_seed >> (8 * i)) & 0xFF;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace spanlab
