// qadc-cli: experiments and constructions for coarsely quantized AWGN
// receivers, driven entirely through the qadc C API.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qadc/qadc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

struct ApiFailure {
    qadc_status status;
    std::string message;
};

void check(qadc_status rc) {
    if (rc != QADC_OK) throw ApiFailure{rc, qadc_last_error()};
}

int exit_code_for(const ApiFailure& f) {
    return f.status == QADC_ERR_PARSE ? kExitIo : kExitValidation;
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    qadc_string_free(s);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ApiFailure{QADC_ERR_PARSE, "cannot open " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw ApiFailure{QADC_ERR_PARSE, "cannot write " + out_path};
    out << text;
}

struct CodeHandle {
    qadc_code* ptr = nullptr;
    ~CodeHandle() { qadc_code_free(ptr); }
};

struct QuantizerHandle {
    qadc_quantizer* ptr = nullptr;
    ~QuantizerHandle() { qadc_quantizer_free(ptr); }
};

std::vector<std::vector<int>> code_words(const qadc_code* c) {
    int n = 0, width = 0;
    check(qadc_code_length(c, &n, &width));
    std::vector<std::vector<int>> words(static_cast<size_t>(n),
                                        std::vector<int>(static_cast<size_t>(width)));
    for (int i = 0; i < n; ++i) check(qadc_code_word(c, i, words[static_cast<size_t>(i)].data()));
    return words;
}

std::string word_str(const std::vector<int>& w) {
    std::string s;
    for (int v : w) s += std::to_string(v);
    return s;
}

// ---- example -------------------------------------------------------------

const char* kExampleQuantizerJson = R"({
  "n_q": 2, "ell": 3, "delta": 2,
  "polys": [[0, 2, 1], [0, 3, 1]],
  "thresholds": [[3, 0], [10, 18]]
})";

int cmd_example(bool as_json) {
    QuantizerHandle q;
    check(qadc_quantizer_from_json(kExampleQuantizerJson, &q.ptr));

    int n_roots = 0, repeated = 0;
    std::vector<double> roots(16);
    check(qadc_quantizer_transition_points(q.ptr, 1e-7, roots.data(), 16, &n_roots, &repeated));
    roots.resize(static_cast<size_t>(n_roots));

    CodeHandle code;
    check(qadc_quantizer_code(q.ptr, &code.ptr));
    int size = 0;
    check(qadc_code_size(code.ptr, &size));
    const auto words = code_words(code.ptr);

    const std::vector<double> golden_roots{-6, -5, -3, -2, 0, 1, 2, 3};
    const std::vector<std::string> golden_code{"22", "21", "20", "10", "00",
                                               "10", "20", "21", "22"};
    bool ok = n_roots == 8 && size == 5 && words.size() == golden_code.size();
    for (size_t i = 0; ok && i < golden_roots.size(); ++i)
        ok = std::abs(roots[i] - golden_roots[i]) <= 1e-8;
    for (size_t i = 0; ok && i < words.size(); ++i) ok = word_str(words[i]) == golden_code[i];
    const double rate = std::log2(static_cast<double>(size));

    if (as_json) {
        nlohmann::json j;
        j["roots"] = roots;
        j["code"] = words;
        j["code_size"] = size;
        j["high_snr_rate_bits"] = rate;
        j["golden_match"] = ok;
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("transition points:");
        for (double r : roots) std::printf(" %g", r);
        std::printf("\npartition: [-inf, %g)", roots.front());
        for (size_t i = 0; i + 1 < roots.size(); ++i)
            std::printf(", (%g, %g)", roots[i], roots[i + 1]);
        std::printf(", (%g, inf]\n", roots.back());
        std::printf("associated code:");
        for (const auto& w : words) std::printf(" %s", word_str(w).c_str());
        std::printf("\n|C| = %d\nhigh-SNR rate = log2(%d) = %.4f bits\n", size, size, rate);
        std::printf("golden check: %s\n", ok ? "ok" : "MISMATCH");
    }
    return ok ? kExitOk : kExitValidation;
}

// ---- code-search ----------------------------------------------------------

int cmd_code_search(int n_q, int ell, int delta, bool as_json) {
    int gamma = 0, lower = 0, upper = 0;
    CodeHandle witness;
    check(qadc_search_max_code(n_q, ell, delta, &gamma, &witness.ptr));
    check(qadc_gamma_bounds(n_q, ell, delta, &lower, &upper));

    char* report_raw = nullptr;
    check(qadc_code_validate(witness.ptr, ell, delta, n_q, &report_raw));
    const std::string report = take_string(report_raw);
    const auto rj = nlohmann::json::parse(report);
    bool witness_ok = true;
    for (int i = 1; i <= 5; ++i)
        witness_ok = witness_ok && rj["item" + std::to_string(i)]["pass"].get<bool>();

    const auto words = code_words(witness.ptr);
    if (as_json) {
        nlohmann::json j;
        j["gamma"] = gamma;
        j["bounds"] = {lower, upper};
        j["witness"] = words;
        j["witness_properties_1_to_5"] = witness_ok;
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("gamma = %d (closed-form bounds [%d, %d])\nwitness:", gamma, lower, upper);
        for (const auto& w : words) std::printf(" %s", word_str(w).c_str());
        std::printf("\nwitness satisfies properties 1-5: %s\n", witness_ok ? "yes" : "NO");
    }
    return witness_ok ? kExitOk : kExitValidation;
}

// ---- rate-curve ------------------------------------------------------------

std::vector<double> parse_snr_range(const std::string& text) {
    // "start:stop:step" or comma-separated list
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        double start = 0, stop = 0, step = 1;
        if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &start, &stop, &step) < 2 || step <= 0)
            throw ApiFailure{QADC_ERR_PARSE, "bad --snr range: " + text};
        for (double v = start; v <= stop + 1e-9; v += step) out.push_back(v);
        return out;
    }
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

int cmd_rate_curve(const std::string& config_path, const std::string& out_path,
                   std::optional<int> n_q, std::optional<int> ell, std::optional<int> delta,
                   std::optional<double> h, const std::string& snr, int threads) {
    nlohmann::json cfg = nlohmann::json::object();
    if (!config_path.empty()) {
        cfg = nlohmann::json::parse(read_file(config_path), nullptr, false);
        if (cfg.is_discarded()) throw ApiFailure{QADC_ERR_PARSE, "bad config JSON"};
    }
    if (n_q) cfg["n_q"] = *n_q;
    if (ell) cfg["ell"] = *ell;
    if (delta) cfg["delta"] = *delta;
    if (h) cfg["h"] = *h;
    if (!snr.empty()) cfg["snr_db"] = parse_snr_range(snr);
    if (threads > 0) cfg["threads"] = threads;

    char* csv_raw = nullptr;
    check(qadc_rate_curve(cfg.dump().c_str(), &csv_raw));
    write_output(take_string(csv_raw), out_path);
    return kExitOk;
}

// ---- validate ---------------------------------------------------------------

int cmd_validate(const std::string& path, bool as_json) {
    const std::string text = read_file(path);
    QuantizerHandle q;
    check(qadc_quantizer_from_json(text.c_str(), &q.ptr));
    int n_q = 0, ell = 0, delta = 0;
    check(qadc_quantizer_info(q.ptr, &n_q, &ell, &delta));

    CodeHandle code;
    check(qadc_quantizer_code(q.ptr, &code.ptr));
    int repeated = 0;
    check(qadc_code_repeated_roots(code.ptr, &repeated));
    std::vector<int> counts(static_cast<size_t>(n_q));
    check(qadc_code_transition_counts(code.ptr, counts.data()));
    char* report_raw = nullptr;
    check(qadc_code_validate(code.ptr, ell, delta, n_q, &report_raw));
    const auto rj = nlohmann::json::parse(take_string(report_raw));
    bool all = true;
    for (int i = 1; i <= 6; ++i) all = all && rj["item" + std::to_string(i)]["pass"].get<bool>();

    if (as_json) {
        nlohmann::json j;
        j["report"] = rj;
        j["transition_counts"] = counts;
        j["repeated_roots"] = repeated != 0;
        j["all_pass"] = all;
        std::cout << j.dump(2) << "\n";
    } else {
        if (repeated) std::printf("warning: repeated transition points\n");
        std::printf("transition counts:");
        for (int k : counts) std::printf(" %d", k);
        std::printf("\n%s\n", rj.dump(2).c_str());
        std::printf("all properties pass: %s\n", all ? "yes" : "no");
    }
    return all ? kExitOk : kExitValidation;
}

// ---- synth ------------------------------------------------------------------

int cmd_synth(const std::string& code_json, const std::string& code_file,
              const std::string& roots_csv, const std::string& out_path) {
    std::string text = code_json;
    if (text.empty() && !code_file.empty()) text = read_file(code_file);
    if (text.empty()) throw ApiFailure{QADC_ERR_PARSE, "synth needs --code or --code-file"};

    std::vector<double> roots;
    std::stringstream ss(roots_csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) roots.push_back(std::stod(tok));

    CodeHandle code;
    check(qadc_code_from_json(text.c_str(), &code.ptr));
    QuantizerHandle q;
    check(qadc_synthesize_quantizer(code.ptr, roots.data(), static_cast<int>(roots.size()),
                                    &q.ptr));
    char* json_raw = nullptr;
    check(qadc_quantizer_to_json(q.ptr, &json_raw));
    write_output(take_string(json_raw), out_path);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"capacity toolkit for low-resolution-ADC receivers with polynomial front-ends"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    auto* example = app.add_subcommand("example", "run the built-in worked example and self-check");

    auto* search = app.add_subcommand("code-search", "exact maximum code size with witness");
    int s_nq = 2, s_ell = 2, s_delta = 2;
    search->add_option("n_q", s_nq, "number of ADCs")->required();
    search->add_option("ell", s_ell, "ADC output levels")->required();
    search->add_option("delta", s_delta, "maximum polynomial degree")->required();

    auto* curve = app.add_subcommand("rate-curve", "achievable-rate table over an SNR sweep");
    std::string c_config, c_out, c_snr;
    std::optional<int> c_nq, c_ell, c_delta;
    std::optional<double> c_h;
    int c_threads = 0;
    curve->add_option("--config", c_config, "experiment config JSON file");
    curve->add_option("--out", c_out, "output CSV path (default stdout)");
    curve->add_option("--nq", c_nq, "override n_q");
    curve->add_option("--ell", c_ell, "override ell");
    curve->add_option("--delta", c_delta, "override delta");
    curve->add_option("--h", c_h, "override channel gain");
    curve->add_option("--snr", c_snr, "SNR dB sweep, 'start:stop:step' or comma list");
    curve->add_option("--threads", c_threads, "worker threads for the threshold search");

    auto* validate = app.add_subcommand("validate", "check a quantizer JSON file");
    std::string v_path;
    validate->add_option("path", v_path, "quantizer JSON file")->required();

    auto* synth = app.add_subcommand("synth", "build a quantizer from a code and roots");
    std::string sy_code, sy_code_file, sy_roots, sy_out;
    synth->add_option("--code", sy_code, "code as JSON array of integer arrays");
    synth->add_option("--code-file", sy_code_file, "code JSON file");
    synth->add_option("--roots", sy_roots, "comma-separated strictly increasing roots")->required();
    synth->add_option("--out", sy_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (example->parsed()) return cmd_example(as_json);
        if (search->parsed()) return cmd_code_search(s_nq, s_ell, s_delta, as_json);
        if (curve->parsed())
            return cmd_rate_curve(c_config, c_out, c_nq, c_ell, c_delta, c_h, c_snr, c_threads);
        if (validate->parsed()) return cmd_validate(v_path, as_json);
        if (synth->parsed()) return cmd_synth(sy_code, sy_code_file, sy_roots, sy_out);
    } catch (const ApiFailure& f) {
        std::fprintf(stderr, "error (%s): %s\n", qadc_status_name(f.status), f.message.c_str());
        return exit_code_for(f);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    }
    return kExitOk;
}
