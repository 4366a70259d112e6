#include "coho/group_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace coho::perm {

Group read_group(std::istream& in) {
    std::string line;
    std::size_t degree = 0;
    std::vector<Perm> gens;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t a = line.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r\n");
        line = line.substr(a, b - a + 1);
        if (degree == 0) {
            std::istringstream ls(line);
            std::string kw;
            ls >> kw >> degree;
            if (kw != "degree" || degree == 0)
                throw std::runtime_error("group file: expected `degree N` header");
            continue;
        }
        gens.push_back(Perm::from_cycles(line, degree));
    }
    if (degree == 0) throw std::runtime_error("group file: missing degree header");
    if (gens.empty()) gens.push_back(Perm(degree));
    return Group(std::move(gens));
}

Group read_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open group file: " + path);
    return read_group(in);
}

Group read_group_string(const std::string& text) {
    std::istringstream in(text);
    return read_group(in);
}

void write_group(std::ostream& out, const Group& g, const std::string& comment) {
    if (!comment.empty()) {
        std::istringstream cs(comment);
        std::string cl;
        while (std::getline(cs, cl)) out << "# " << cl << "\n";
    }
    out << "degree " << g.degree() << "\n";
    for (const auto& p : g.generators()) out << p.to_cycles() << "\n";
}

void write_group_file(const std::string& path, const Group& g, const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write group file: " + path);
    write_group(out, g, comment);
}

}  // namespace coho::perm
