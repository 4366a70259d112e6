// Graded commutative polynomial algebra over F2 with weighted generators.
// Monomial order: weighted degrevlex, variables ranked by (degree, listing
// index). Characteristic 2 keeps everything strictly commutative.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coho::ring {

struct Generator {
    std::string label;
    std::size_t degree = 1;
    char kind = 'b';  // 'b' nilpotent-restriction, 'c' Duflot
};

struct Monomial {
    std::vector<std::uint16_t> e;  // exponents, listing order
    std::uint32_t deg = 0;         // cached weighted degree

    bool is_one() const {
        for (auto x : e) if (x) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

/// Polynomial over F2: monomial list sorted descending in the ring order.
struct Polynomial {
    std::vector<Monomial> terms;

    bool is_zero() const { return terms.empty(); }
    const Monomial& leading() const { return terms.front(); }
    std::size_t degree() const { return terms.empty() ? 0 : terms.front().deg; }
    bool operator==(const Polynomial& o) const { return terms == o.terms; }
};

class PolyRing {
public:
    PolyRing() = default;
    explicit PolyRing(std::vector<Generator> gens);

    std::size_t ngens() const { return gens_.size(); }
    const std::vector<Generator>& generators() const { return gens_; }
    std::size_t degree_of(std::size_t i) const { return gens_[i].degree; }
    /// Index of a generator label, or npos.
    std::size_t index_of(const std::string& label) const;

    Monomial one() const;
    Monomial variable(std::size_t i, std::uint16_t power = 1) const;
    std::uint32_t mono_degree_raw(const std::vector<std::uint16_t>& e) const;

    /// Weighted degrevlex. True iff a < b.
    bool mono_less(const Monomial& a, const Monomial& b) const;
    static bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
    Monomial mono_mul(const Monomial& a, const Monomial& b) const;
    /// b / a, requires a | b.
    Monomial mono_div(const Monomial& b, const Monomial& a) const;
    Monomial mono_lcm(const Monomial& a, const Monomial& b) const;
    static bool mono_coprime(const Monomial& a, const Monomial& b);

    Polynomial zero() const { return {}; }
    Polynomial poly_one() const;
    Polynomial from_monomials(std::vector<Monomial> ms) const;  // sorts, cancels pairs
    Polynomial add(const Polynomial& a, const Polynomial& b) const;  // XOR merge
    Polynomial mul_mono(const Polynomial& p, const Monomial& m) const;
    Polynomial mul(const Polynomial& a, const Polynomial& b) const;
    /// Substitute variable i by the given polynomials (must be homogeneous of
    /// the right degrees for graded use; not enforced here).
    Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) const;
    bool is_homogeneous(const Polynomial& p) const;

    std::string to_string(const Polynomial& p) const;
    std::string mono_to_string(const Monomial& m) const;
    /// Parses "b_5_0^2 + b_3_0*b_7_0"; throws on unknown labels.
    Polynomial parse(const std::string& text) const;

private:
    std::vector<Generator> gens_;
    std::vector<std::uint32_t> order_pos_;  // variable -> rank in (degree, index) order
    std::vector<std::uint32_t> pos_to_var_; // rank -> variable
};

}  // namespace coho::ring
