#include "coho/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace coho::ring {

std::size_t Presentation::max_relation_degree() const {
    std::size_t m = 0;
    for (const auto& r : relations) m = std::max(m, r.degree());
    return m;
}

std::vector<std::size_t> Presentation::generator_degrees() const {
    std::vector<std::size_t> d;
    for (const auto& g : generators) d.push_back(g.degree);
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<std::size_t> Presentation::relation_degrees() const {
    std::vector<std::size_t> d;
    for (const auto& r : relations) d.push_back(r.degree());
    std::sort(d.begin(), d.end());
    return d;
}

Presentation read_presentation(std::istream& in) {
    Presentation p;
    std::vector<std::string> relation_lines;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t a = line.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r\n");
        line = line.substr(a, b - a + 1);
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "gen") {
            Generator g;
            std::string kind;
            ls >> g.label >> g.degree >> kind;
            if (g.label.empty() || g.degree == 0 || (kind != "b" && kind != "c"))
                throw std::runtime_error("presentation: bad generator line: " + line);
            g.kind = kind[0];
            p.generators.push_back(std::move(g));
        } else if (kw == "truncation") {
            ls >> p.truncation_degree;
        } else {
            relation_lines.push_back(line);
        }
    }
    std::set<std::string> labels;
    for (const auto& g : p.generators)
        if (!labels.insert(g.label).second)
            throw std::runtime_error("presentation: duplicate label " + g.label);
    PolyRing ring(p.generators);
    for (const auto& rl : relation_lines) {
        Polynomial rel = ring.parse(rl);
        if (rel.is_zero()) continue;
        if (!ring.is_homogeneous(rel))
            throw std::runtime_error("presentation: inhomogeneous relation: " + rl);
        if (rel.degree() < 2)
            throw std::runtime_error("presentation: relation of degree < 2: " + rl);
        p.relations.push_back(std::move(rel));
    }
    return p;
}

Presentation read_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open presentation file: " + path);
    return read_presentation(in);
}

Presentation read_presentation_string(const std::string& text) {
    std::istringstream in(text);
    return read_presentation(in);
}

void write_presentation(std::ostream& out, const Presentation& p, const std::string& comment) {
    if (!comment.empty()) {
        std::istringstream cs(comment);
        std::string cl;
        while (std::getline(cs, cl)) out << "# " << cl << "\n";
    }
    for (const auto& g : p.generators)
        out << "gen " << g.label << " " << g.degree << " " << g.kind << "\n";
    if (p.truncation_degree) out << "truncation " << p.truncation_degree << "\n";
    PolyRing ring(p.generators);
    for (const auto& r : p.relations) out << ring.to_string(r) << "\n";
}

void write_presentation_file(const std::string& path, const Presentation& p,
                             const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write presentation file: " + path);
    write_presentation(out, p, comment);
}

std::string presentation_to_json(const Presentation& p,
                                 const std::vector<std::int64_t>* dimensions) {
    nlohmann::json j;
    j["generators"] = nlohmann::json::array();
    for (const auto& g : p.generators)
        j["generators"].push_back({{"label", g.label},
                                   {"degree", g.degree},
                                   {"kind", std::string(1, g.kind)}});
    PolyRing ring(p.generators);
    j["relations"] = nlohmann::json::array();
    for (const auto& r : p.relations) j["relations"].push_back(ring.to_string(r));
    j["truncation_degree"] = p.truncation_degree;
    if (dimensions) j["dimensions"] = *dimensions;
    return j.dump(2);
}

Presentation presentation_from_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    Presentation p;
    for (const auto& jg : j.at("generators")) {
        Generator g;
        g.label = jg.at("label").get<std::string>();
        g.degree = jg.at("degree").get<std::size_t>();
        g.kind = jg.at("kind").get<std::string>().at(0);
        p.generators.push_back(std::move(g));
    }
    p.truncation_degree = j.value("truncation_degree", std::size_t{0});
    PolyRing ring(p.generators);
    for (const auto& jr : j.at("relations")) p.relations.push_back(ring.parse(jr.get<std::string>()));
    return p;
}

}  // namespace coho::ring
