#include "coho/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coho::ring {

PolyRing::PolyRing(std::vector<Generator> gens) : gens_(std::move(gens)) {
    std::vector<std::uint32_t> idx(gens_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (gens_[a].degree != gens_[b].degree) return gens_[a].degree < gens_[b].degree;
        return a < b;
    });
    pos_to_var_ = idx;
    order_pos_.resize(gens_.size());
    for (std::uint32_t p = 0; p < idx.size(); ++p) order_pos_[idx[p]] = p;
}

std::size_t PolyRing::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].label == label) return i;
    return static_cast<std::size_t>(-1);
}

Monomial PolyRing::one() const {
    Monomial m;
    m.e.assign(gens_.size(), 0);
    m.deg = 0;
    return m;
}

Monomial PolyRing::variable(std::size_t i, std::uint16_t power) const {
    Monomial m = one();
    m.e[i] = power;
    m.deg = static_cast<std::uint32_t>(gens_[i].degree * power);
    return m;
}

std::uint32_t PolyRing::mono_degree_raw(const std::vector<std::uint16_t>& e) const {
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<std::uint32_t>(e[i] * gens_[i].degree);
    return d;
}

bool PolyRing::mono_less(const Monomial& a, const Monomial& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    // degrevlex: a > b iff the last (in variable rank) nonzero entry of a-b is
    // negative; so a < b iff that entry is positive.
    for (std::size_t p = pos_to_var_.size(); p-- > 0;) {
        std::uint32_t v = pos_to_var_[p];
        if (a.e[v] != b.e[v]) return a.e[v] > b.e[v];
    }
    return false;
}

bool PolyRing::mono_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial PolyRing::mono_mul(const Monomial& a, const Monomial& b) const {
    Monomial m;
    m.e.resize(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i)
        m.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    m.deg = a.deg + b.deg;
    return m;
}

Monomial PolyRing::mono_div(const Monomial& b, const Monomial& a) const {
    Monomial m;
    m.e.resize(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) {
        if (a.e[i] > b.e[i]) throw std::invalid_argument("mono_div: not divisible");
        m.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
    }
    m.deg = b.deg - a.deg;
    return m;
}

Monomial PolyRing::mono_lcm(const Monomial& a, const Monomial& b) const {
    Monomial m;
    m.e.resize(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) m.e[i] = std::max(a.e[i], b.e[i]);
    m.deg = mono_degree_raw(m.e);
    return m;
}

bool PolyRing::mono_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

Polynomial PolyRing::poly_one() const {
    Polynomial p;
    p.terms.push_back(one());
    return p;
}

Polynomial PolyRing::from_monomials(std::vector<Monomial> ms) const {
    std::sort(ms.begin(), ms.end(), [&](const Monomial& a, const Monomial& b) {
        return mono_less(b, a);  // descending
    });
    Polynomial p;
    for (auto& m : ms) {
        if (!p.terms.empty() && p.terms.back() == m)
            p.terms.pop_back();  // F2: pairs cancel
        else
            p.terms.push_back(std::move(m));
    }
    return p;
}

Polynomial PolyRing::add(const Polynomial& a, const Polynomial& b) const {
    Polynomial out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        if (a.terms[i] == b.terms[j]) { ++i; ++j; continue; }
        if (mono_less(b.terms[j], a.terms[i]))
            out.terms.push_back(a.terms[i++]);
        else
            out.terms.push_back(b.terms[j++]);
    }
    while (i < a.terms.size()) out.terms.push_back(a.terms[i++]);
    while (j < b.terms.size()) out.terms.push_back(b.terms[j++]);
    return out;
}

Polynomial PolyRing::mul_mono(const Polynomial& p, const Monomial& m) const {
    Polynomial out;
    out.terms.reserve(p.terms.size());
    for (const auto& t : p.terms) out.terms.push_back(mono_mul(t, m));
    return out;  // order preserved: translation-invariant monomial order
}

Polynomial PolyRing::mul(const Polynomial& a, const Polynomial& b) const {
    Polynomial acc;
    for (const auto& t : b.terms) acc = add(acc, mul_mono(a, t));
    return acc;
}

Polynomial PolyRing::substitute(const Polynomial& p, const std::vector<Polynomial>& images) const {
    if (images.size() != gens_.size())
        throw std::invalid_argument("substitute: one image per variable");
    Polynomial acc;
    for (const auto& t : p.terms) {
        Polynomial term = poly_one();
        for (std::size_t i = 0; i < t.e.size(); ++i)
            for (std::uint16_t k = 0; k < t.e[i]; ++k) term = mul(term, images[i]);
        acc = add(acc, term);
    }
    return acc;
}

bool PolyRing::is_homogeneous(const Polynomial& p) const {
    for (const auto& t : p.terms)
        if (t.deg != p.terms.front().deg) return false;
    return true;
}

std::string PolyRing::mono_to_string(const Monomial& m) const {
    if (m.is_one()) return "1";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (!m.e[i]) continue;
        if (!first) out << "*";
        out << gens_[i].label;
        if (m.e[i] > 1) out << "^" << m.e[i];
        first = false;
    }
    return out.str();
}

std::string PolyRing::to_string(const Polynomial& p) const {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < p.terms.size(); ++i) {
        if (i) out << " + ";
        out << mono_to_string(p.terms[i]);
    }
    return out.str();
}

Polynomial PolyRing::parse(const std::string& text) const {
    auto trim = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) return std::string();
        std::size_t b = s.find_last_not_of(" \t\r\n");
        return s.substr(a, b - a + 1);
    };
    std::vector<Monomial> monos;
    std::string t = text;
    std::size_t pos = 0;
    while (pos <= t.size()) {
        std::size_t plus = t.find('+', pos);
        std::string term = trim(t.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos));
        pos = (plus == std::string::npos) ? t.size() + 1 : plus + 1;
        if (term.empty()) continue;
        if (term == "0") continue;
        Monomial m = one();
        if (term != "1") {
            std::size_t fpos = 0;
            while (fpos < term.size()) {
                std::size_t star = term.find('*', fpos);
                std::string factor = trim(term.substr(fpos, star == std::string::npos ? std::string::npos : star - fpos));
                fpos = (star == std::string::npos) ? term.size() : star + 1;
                if (factor.empty()) continue;
                std::size_t caret = factor.find('^');
                std::string label = trim(caret == std::string::npos ? factor : factor.substr(0, caret));
                int power = 1;
                if (caret != std::string::npos) power = std::stoi(factor.substr(caret + 1));
                std::size_t vi = index_of(label);
                if (vi == static_cast<std::size_t>(-1))
                    throw std::invalid_argument("unknown generator label: " + label);
                m.e[vi] = static_cast<std::uint16_t>(m.e[vi] + power);
            }
            m.deg = mono_degree_raw(m.e);
        }
        monos.push_back(std::move(m));
    }
    return from_monomials(std::move(monos));
}

}  // namespace coho::ring
