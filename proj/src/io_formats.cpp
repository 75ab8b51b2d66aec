#include <hyperinvert/io_formats.hpp>

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hyperinvert {

namespace {

CoefficientFamily parse_family(const nlohmann::json& j, const std::string& where) {
    if (j.is_array()) {
        std::vector<Rational> values;
        for (const auto& item : j) values.push_back(Rational::parse(item.get<std::string>()));
        return CoefficientFamily::table(std::move(values));
    }
    if (j.is_object() && j.contains("base") && j.contains("step")) {
        return CoefficientFamily::affine(Rational::parse(j.at("base").get<std::string>()),
                                         Rational::parse(j.at("step").get<std::string>()));
    }
    throw std::invalid_argument(where + ": expected a table of rationals or {base, step}");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

FactorSequences parse_coefficients_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("classes") || !j.at("classes").is_array() ||
        j.at("classes").empty())
        throw std::invalid_argument("coefficient file needs a nonempty \"classes\" array");
    const auto& classes = j.at("classes");
    std::vector<CoefficientFamily> a, b;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& cls = classes[i];
        const std::string where = "classes[" + std::to_string(i) + "]";
        if (!cls.contains("A") || !cls.contains("B"))
            throw std::invalid_argument(where + ": needs families \"A\" and \"B\"");
        a.push_back(parse_family(cls.at("A"), where + ".A"));
        b.push_back(parse_family(cls.at("B"), where + ".B"));
    }
    return FactorSequences(static_cast<unsigned>(classes.size() - 1), std::move(a), std::move(b));
}

FiniteSequence parse_sequence_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("sequence file must be a nonempty array of rationals");
    FiniteSequence seq;
    for (const auto& item : j) seq.push_back(Rational::parse(item.get<std::string>()));
    return seq;
}

std::string sequence_to_json(const FiniteSequence& seq) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& v : seq) j.push_back(v.to_string());
    return j.dump(2) + "\n";
}

FactorSequences load_coefficients_file(const std::string& path) {
    return parse_coefficients_json(slurp(path));
}

FiniteSequence load_sequence_file(const std::string& path) {
    return parse_sequence_json(slurp(path));
}

} // namespace hyperinvert
