// Ring presentations: generators with degrees and Duflot kinds, plus
// homogeneous relations. Text format mirrors the fixture files; JSON mirrors
// carry the same data.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coho/polynomial.hpp"

namespace coho::ring {

struct Presentation {
    std::vector<Generator> generators;
    std::vector<Polynomial> relations;
    std::size_t truncation_degree = 0;

    PolyRing ring() const { return PolyRing(generators); }
    std::size_t max_relation_degree() const;
    std::vector<std::size_t> generator_degrees() const;
    std::vector<std::size_t> relation_degrees() const;
};

/// Parses the presentation text format:
///   gen <label> <degree> <b|c>
///   <polynomial>            (one relation per line)
/// `#` comments and blank lines are skipped. Validates label uniqueness,
/// homogeneity, and relation degree >= 2.
Presentation read_presentation(std::istream& in);
Presentation read_presentation_file(const std::string& path);
Presentation read_presentation_string(const std::string& text);

void write_presentation(std::ostream& out, const Presentation& p, const std::string& comment = "");
void write_presentation_file(const std::string& path, const Presentation& p,
                             const std::string& comment = "");

std::string presentation_to_json(const Presentation& p,
                                 const std::vector<std::int64_t>* dimensions = nullptr);
Presentation presentation_from_json(const std::string& json_text);

}  // namespace coho::ring
