#include "ordloc/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "ordloc/rational.hpp"

namespace ordloc {

namespace {

using nlohmann::json;

Rat number_field(const json& v, const std::string& where) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer())
        return Rat(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_number_float())
        throw std::runtime_error(where + ": floating-point literals are inexact, quote the value");
    throw std::runtime_error(where + ": expected a number string");
}

}  // namespace

Instance parse_instance_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("instance parse error: ") + e.what());
    }
    if (!doc.is_object()) throw std::runtime_error("instance: top level must be an object");
    for (const auto& [key, _] : doc.items())
        if (key != "model" && key != "alpha" && key != "agents")
            throw std::runtime_error("instance: unknown key \"" + key + "\"");
    if (!doc.contains("model") || !doc["model"].is_string())
        throw std::runtime_error("instance: missing string field \"model\"");
    if (!doc.contains("alpha") || !doc["alpha"].is_array())
        throw std::runtime_error("instance: missing array field \"alpha\"");
    if (!doc.contains("agents") || !doc["agents"].is_array())
        throw std::runtime_error("instance: missing array field \"agents\"");

    ModelKind model = parse_model(doc["model"].get<std::string>());

    std::vector<Rat> alpha;
    for (std::size_t k = 0; k < doc["alpha"].size(); ++k)
        alpha.push_back(number_field(doc["alpha"][k], "alpha[" + std::to_string(k) + "]"));
    const std::size_t m = alpha.size();

    std::vector<Agent> agents;
    for (std::size_t i = 0; i < doc["agents"].size(); ++i) {
        const json& a = doc["agents"][i];
        const std::string where = "agents[" + std::to_string(i) + "]";
        if (!a.is_object() || !a.contains("x") || !a.contains("pref") || !a["pref"].is_array())
            throw std::runtime_error(where + ": expected {\"x\": ..., \"pref\": [...]}");
        Agent agent;
        agent.x = number_field(a["x"], where + ".x");
        for (const json& p : a["pref"]) {
            if (!p.is_number_integer())
                throw std::runtime_error(where + ".pref: facility indices must be integers");
            const std::int64_t idx = p.get<std::int64_t>();
            if (idx < 1 || static_cast<std::size_t>(idx) > m)
                throw std::runtime_error(where + ".pref: facility index " + std::to_string(idx) +
                                         " out of range 1.." + std::to_string(m));
            agent.pref.push_back(static_cast<int>(idx - 1));
        }
        agents.push_back(std::move(agent));
    }
    return Instance::make(model, std::move(alpha), std::move(agents));
}

Instance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance_text(buf.str());
}

std::string instance_to_text(const Instance& inst) {
    nlohmann::ordered_json doc;
    doc["model"] = model_name(inst.model);
    doc["alpha"] = json::array();
    for (const Rat& a : inst.alpha) doc["alpha"].push_back(rat_to_string(a));
    doc["agents"] = json::array();
    for (const Agent& agent : inst.agents) {
        nlohmann::ordered_json a;
        a["x"] = rat_to_string(agent.x);
        a["pref"] = json::array();
        for (int f : agent.pref) a["pref"].push_back(f + 1);
        doc["agents"].push_back(std::move(a));
    }
    return doc.dump(2);
}

Placement parse_placement(const std::string& list, std::size_t expected_size) {
    Placement y;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) y.push_back(parse_rational(item));
    if (y.size() != expected_size)
        throw std::runtime_error("placement has " + std::to_string(y.size()) +
                                 " coordinates, instance needs " + std::to_string(expected_size));
    for (const Rat& v : y)
        if (v < 0 || v > 1) throw std::runtime_error("placement coordinate outside [0,1]");
    return y;
}

std::string placement_to_string(const Placement& y) {
    std::string out;
    for (std::size_t k = 0; k < y.size(); ++k) {
        if (k) out += ',';
        out += rat_to_string(y[k]);
    }
    return out;
}

std::string alpha_to_string(const std::vector<Rat>& alpha) {
    std::string out;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        if (k) out += ';';
        out += rat_to_string(alpha[k]);
    }
    return out;
}

const char* const kCsvHeader =
    "command,mechanism,objective,alpha,n,seed,value_lo,value_hi,opt_lo,opt_hi,ratio_lo,ratio_hi,"
    "verdict";

std::string csv_line(const CsvRow& row) {
    auto field = [](const std::string& s) { return s.empty() ? std::string("-") : s; };
    std::string out;
    for (const std::string* s : {&row.command, &row.mechanism, &row.objective, &row.alpha, &row.n,
                                 &row.seed, &row.value_lo, &row.value_hi, &row.opt_lo, &row.opt_hi,
                                 &row.ratio_lo, &row.ratio_hi, &row.verdict}) {
        if (!out.empty()) out += ',';
        out += field(*s);
    }
    return out;
}

}  // namespace ordloc
