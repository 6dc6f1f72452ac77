#include "serialization.hpp"

#include <cstdio>

#include "json.hpp"

namespace qadc {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) fail(ErrorCode::ParseError, "invalid JSON");
    return j;
}

std::string dump(const json& j, int indent) { return indent >= 0 ? j.dump(indent) : j.dump(); }

} // namespace

std::string quantizer_to_json(const Quantizer& q, int indent) {
    json j;
    j["n_q"] = q.n_q;
    j["ell"] = q.ell;
    j["delta"] = q.delta;
    j["polys"] = json::array();
    for (const auto& p : q.polys) j["polys"].push_back(p.coeffs());
    j["thresholds"] = q.thresholds;
    return dump(j, indent);
}

Quantizer quantizer_from_json(const std::string& text) {
    const json j = parse(text);
    Quantizer q;
    try {
        q.n_q = j.at("n_q").get<int>();
        q.ell = j.at("ell").get<int>();
        q.delta = j.at("delta").get<int>();
        for (const auto& coeffs : j.at("polys"))
            q.polys.emplace_back(coeffs.get<std::vector<double>>());
        q.thresholds = j.at("thresholds").get<std::vector<std::vector<double>>>();
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, std::string("quantizer JSON: ") + e.what());
    }
    q.validate();
    return q;
}

std::string code_to_json(const AssociatedCode& c, int indent) {
    json j = json::array();
    for (const auto& w : c.codewords) j.push_back(w);
    return dump(j, indent);
}

AssociatedCode code_from_json(const std::string& text) {
    const json j = parse(text);
    AssociatedCode c;
    try {
        for (const auto& w : j) c.codewords.push_back(w.get<Codeword>());
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, std::string("code JSON: ") + e.what());
    }
    if (c.codewords.empty()) fail(ErrorCode::ParseError, "code JSON: no codewords");
    for (const auto& w : c.codewords)
        if (w.size() != c.codewords[0].size())
            fail(ErrorCode::ParseError, "code JSON: ragged codewords");
    return c;
}

std::string report_to_json(const PropertyReport& r, int indent) {
    json j;
    for (int i = 0; i < 6; ++i) {
        json item;
        item["pass"] = r.items[static_cast<size_t>(i)].pass;
        item["counterexample"] = r.items[static_cast<size_t>(i)].counterexample;
        j["item" + std::to_string(i + 1)] = item;
    }
    return dump(j, indent);
}

std::string capacity_result_to_json(const CapacityResult& r, int indent) {
    json j;
    j["rate_bits"] = r.rate_bits;
    j["inputs"] = r.inputs;
    j["input_distribution"] = r.input_distribution;
    j["thresholds"] = r.thresholds;
    j["iterations"] = r.iterations;
    j["converged"] = r.converged;
    j["power_used"] = r.power_used;
    j["multiplier"] = r.multiplier;
    return dump(j, indent);
}

std::string rate_table_csv(const std::vector<RatePoint>& points) {
    std::string out = "snr_db,rate_bits_lower,rate_bits_upper,gamma,thresholds_json\n";
    char buf[64];
    for (const auto& pt : points) {
        std::snprintf(buf, sizeof buf, "%.4f", pt.snr_db);
        out += buf;
        std::snprintf(buf, sizeof buf, ",%.9f", pt.rate_bits_lower);
        out += buf;
        std::snprintf(buf, sizeof buf, ",%.9f", pt.rate_bits_upper);
        out += buf;
        std::snprintf(buf, sizeof buf, ",%d,\"[", pt.gamma_upper);
        out += buf;
        for (size_t i = 0; i < pt.thresholds.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%s%.6f", i ? "," : "", pt.thresholds[i]);
            out += buf;
        }
        out += "]\"\n";
    }
    return out;
}

void ExperimentConfig::validate() const {
    if (n_q < 1 || ell < 2 || delta < 1)
        fail(ErrorCode::InvalidArgument, "config: need n_q >= 1, ell >= 2, delta >= 1");
    if (snr_db.empty()) fail(ErrorCode::InvalidArgument, "config: snr_db list is empty");
    if (h == 0.0) fail(ErrorCode::InvalidArgument, "config: channel gain h must be nonzero");
}

ExperimentConfig config_from_json(const std::string& text) {
    const json j = parse(text);
    ExperimentConfig c;
    try {
        c.n_q = j.value("n_q", c.n_q);
        c.ell = j.value("ell", c.ell);
        c.delta = j.value("delta", c.delta);
        c.h = j.value("h", c.h);
        if (j.contains("snr_db")) {
            c.snr_db = j.at("snr_db").get<std::vector<double>>();
        } else if (j.contains("snr")) {
            const auto& s = j.at("snr");
            const double start = s.at("start").get<double>();
            const double stop = s.at("stop").get<double>();
            const double step = s.value("step", 1.0);
            if (!(step > 0.0)) fail(ErrorCode::InvalidArgument, "config: snr step must be positive");
            for (double v = start; v <= stop + 1e-9; v += step) c.snr_db.push_back(v);
        }
        if (j.contains("input_grid")) {
            const auto& g = j.at("input_grid");
            c.curve.input_step_scale = g.value("step_scale", c.curve.input_step_scale);
            c.curve.input_range_scale = g.value("range_scale", c.curve.input_range_scale);
        }
        if (j.contains("threshold_grid")) {
            const auto& g = j.at("threshold_grid");
            c.curve.search.step_scale = g.value("step_scale", c.curve.search.step_scale);
            c.curve.search.range_scale = g.value("range_scale", c.curve.search.range_scale);
        }
        if (j.contains("ba")) {
            const auto& b = j.at("ba");
            c.curve.search.ba.tol_bits = b.value("tol_bits", c.curve.search.ba.tol_bits);
            c.curve.search.ba.max_iter = b.value("max_iter", c.curve.search.ba.max_iter);
            c.curve.search.coarse_tol_bits =
                b.value("coarse_tol_bits", c.curve.search.coarse_tol_bits);
            c.curve.search.coarse_max_iter =
                b.value("coarse_max_iter", c.curve.search.coarse_max_iter);
            c.curve.search.refine_margin_bits =
                b.value("refine_margin_bits", c.curve.search.refine_margin_bits);
        }
        c.curve.search.threads = j.value("threads", c.curve.search.threads);
        const std::string form = j.value("labeling", std::string("bounded"));
        if (form == "bounded")
            c.curve.search.form = LabelingForm::Bounded;
        else if (form == "merged")
            c.curve.search.form = LabelingForm::MergedEnds;
        else
            fail(ErrorCode::ParseError, "config: labeling must be 'bounded' or 'merged'");
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, std::string("config JSON: ") + e.what());
    }
    c.validate();
    return c;
}

} // namespace qadc
