#include "horncert/polyfile.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace horncert::io {
namespace {

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::string hex_literal(double d) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%a", d);
    return buf;
}

double parse_double(const std::string& text) {
    std::string t = strip(text);
    if (t.empty()) throw std::invalid_argument("parse_double: empty field");
    const char* begin = t.c_str();
    char* end = nullptr;
    errno = 0;
    double v = std::strtod(begin, &end);
    if (end != begin + t.size())
        throw std::invalid_argument("parse_double: trailing junk in '" + t + "'");
    return v;
}

Polynomial read_polynomial(std::istream& in) {
    std::vector<double> coeffs;
    long declared_degree = -1;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = strip(line);
        if (line.empty()) continue;
        if (line.rfind("degree:", 0) == 0) {
            if (declared_degree >= 0 || !coeffs.empty())
                throw std::invalid_argument("polynomial file: misplaced degree header");
            declared_degree = std::stol(strip(line.substr(7)));
            continue;
        }
        coeffs.push_back(parse_double(line));
    }
    if (coeffs.empty()) throw std::invalid_argument("polynomial file: no coefficients");
    if (declared_degree >= 0 &&
        static_cast<std::size_t>(declared_degree) + 1 != coeffs.size())
        throw std::invalid_argument("polynomial file: degree header mismatch");
    return Polynomial(std::move(coeffs));
}

Polynomial read_polynomial_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_polynomial(in);
}

void write_polynomial(std::ostream& out, const Polynomial& p) {
    out << "degree: " << p.degree() << "\n";
    for (double c : p.coeffs()) out << hex_literal(c) << "\n";
}

void write_polynomial_file(const std::string& path, const Polynomial& p) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_polynomial(out, p);
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_corpus(std::ostream& out, std::span<const CorpusRecord> records) {
    for (const auto& r : records) {
        nlohmann::json j;
        j["degree"] = r.coeffs.size() - 1;
        j["x"] = hex_literal(r.x);
        j["seed"] = r.seed;
        j["target_cond"] = r.target_cond;
        j["measured_cond"] = r.measured_cond;
        auto& arr = j["coeffs"] = nlohmann::json::array();
        for (double c : r.coeffs) arr.push_back(hex_literal(c));
        out << j.dump() << "\n";
    }
}

std::vector<CorpusRecord> read_corpus(std::istream& in) {
    std::vector<CorpusRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        CorpusRecord r;
        r.x = parse_double(j.at("x").get<std::string>());
        r.seed = j.at("seed").get<std::uint64_t>();
        r.target_cond = j.at("target_cond").get<double>();
        r.measured_cond = j.at("measured_cond").get<double>();
        for (const auto& c : j.at("coeffs"))
            r.coeffs.push_back(parse_double(c.get<std::string>()));
        if (r.coeffs.size() != j.at("degree").get<std::size_t>() + 1)
            throw std::invalid_argument("corpus record: degree mismatch");
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace horncert::io
