#include "lvmel/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lvmel {

namespace {

using nlohmann::json;

std::pair<int, int> parse_ij(const std::string& key) {
    int i = -1, j = -1;
    char extra;
    if (std::sscanf(key.c_str(), "%d,%d%c", &i, &j, &extra) != 2 || i < 0 || j < 0)
        throw Error("bad coefficient key '" + key + "' (expected \"i,j\")");
    return {i, j};
}

void fill_map(const json& obj, int n, bool is_a, PerturbationCoeffs& out) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        auto [i, j] = parse_ij(it.key());
        if (i + j > n)
            throw Error("coefficient key '" + it.key() + "' exceeds degree " +
                        std::to_string(n));
        double v = it.value().get<double>();
        if (is_a)
            out.set_a(i, j, v);
        else
            out.set_b(i, j, v);
    }
}

}  // namespace

CoeffFile parse_coeff_json(const std::string& text) {
    json doc = json::parse(text);
    static const char* known[] = {"family", "b", "c", "n", "a", "b_coeffs"};
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        bool ok = false;
        for (const char* k : known) ok = ok || it.key() == k;
        if (!ok) throw Error("unknown key '" + it.key() + "' in coefficient file");
    }
    std::string family = doc.at("family").get<std::string>();
    double b = doc.at("b").get<double>();
    int n = doc.at("n").get<int>();
    SystemParams params = family == "X29"    ? SystemParams::x29(b, doc.at("c").get<double>())
                          : family == "X210" ? SystemParams::x210(b)
                                             : throw Error("family must be X29 or X210");
    if (params.family == Family::X210 && doc.contains("c") &&
        doc.at("c").get<double>() != b)
        throw Error("X210 requires b == c");
    PerturbationCoeffs coeffs(n);
    if (doc.contains("a")) fill_map(doc.at("a"), n, true, coeffs);
    if (doc.contains("b_coeffs")) fill_map(doc.at("b_coeffs"), n, false, coeffs);
    return {params, coeffs};
}

CoeffFile load_coeff_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open coefficient file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_coeff_json(ss.str());
}

std::string coeff_file_to_json(const SystemParams& params, const PerturbationCoeffs& coeffs) {
    json doc;
    doc["family"] = params.family == Family::X29 ? "X29" : "X210";
    doc["b"] = params.b;
    doc["c"] = params.c;
    doc["n"] = coeffs.degree();
    json a = json::object(), bc = json::object();
    coeffs.for_each([&](int i, int j, double av, double bv) {
        std::string key = std::to_string(i) + "," + std::to_string(j);
        if (av != 0.0) a[key] = av;
        if (bv != 0.0) bc[key] = bv;
    });
    doc["a"] = a;
    doc["b_coeffs"] = bc;
    return doc.dump(2);
}

void save_coeff_file(const std::string& path, const SystemParams& params,
                     const PerturbationCoeffs& coeffs) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write coefficient file: " + path);
    out << coeff_file_to_json(params, coeffs) << "\n";
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace lvmel
