#include "coho/perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coho::perm {

Perm::Perm(std::size_t degree) : img_(degree) {
    for (std::size_t i = 0; i < degree; ++i) img_[i] = static_cast<Point>(i);
}

Perm Perm::from_images(std::vector<Point> images) {
    std::vector<bool> seen(images.size(), false);
    for (auto v : images) {
        if (v >= images.size() || seen[v]) throw std::invalid_argument("not a bijection");
        seen[v] = true;
    }
    Perm p;
    p.img_ = std::move(images);
    return p;
}

Perm Perm::from_cycles(std::string_view s, std::size_t degree) {
    Perm p(degree);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && (s[i] == ' ' || s[i] == ',' || s[i] == '\t')) ++i; };
    skip_ws();
    while (i < s.size()) {
        if (s[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
        ++i;
        std::vector<Point> cyc;
        skip_ws();
        while (i < s.size() && s[i] != ')') {
            std::size_t v = 0;
            if (!isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("expected digit in cycle");
            while (i < s.size() && isdigit(static_cast<unsigned char>(s[i])))
                v = v * 10 + (s[i++] - '0');
            if (v >= degree) throw std::invalid_argument("cycle point out of range");
            cyc.push_back(static_cast<Point>(v));
            skip_ws();
        }
        if (i == s.size()) throw std::invalid_argument("unterminated cycle");
        ++i;  // ')'
        for (std::size_t k = 0; k + 1 < cyc.size(); ++k) p.img_[cyc[k]] = cyc[k + 1];
        if (cyc.size() > 1) p.img_[cyc.back()] = cyc.front();
        skip_ws();
    }
    // Validate disjointness implicitly: must still be a bijection.
    return from_images(std::move(p.img_));
}

Perm Perm::operator*(const Perm& b) const {
    if (degree() != b.degree()) throw std::invalid_argument("degree mismatch");
    Perm r;
    r.img_.resize(degree());
    for (std::size_t x = 0; x < degree(); ++x) r.img_[x] = img_[b.img_[x]];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.img_.resize(degree());
    for (std::size_t x = 0; x < degree(); ++x) r.img_[img_[x]] = static_cast<Point>(x);
    return r;
}

Perm Perm::conjugated_by(const Perm& g) const {
    // g^{-1} * this * g, computed without forming g^{-1}:
    // r(g^{-1}(x)) would need the inverse; do it directly instead.
    Perm r;
    r.img_.resize(degree());
    // y = g^{-1} t g means y(x) = g^{-1}(t(g(x))); build via g-images.
    std::vector<Point> ginv(degree());
    for (std::size_t x = 0; x < degree(); ++x) ginv[g.img_[x]] = static_cast<Point>(x);
    for (std::size_t x = 0; x < degree(); ++x) r.img_[x] = ginv[img_[g.img_[x]]];
    return r;
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

std::uint64_t Perm::order() const {
    std::vector<bool> seen(degree(), false);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        std::size_t j = i;
        while (!seen[j]) { seen[j] = true; j = img_[j]; ++len; }
        ord = std::lcm(ord, len);
    }
    return ord;
}

std::size_t Perm::fixed_points() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < img_.size(); ++i) c += (img_[i] == i);
    return c;
}

namespace {
inline std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}
}  // namespace

std::pair<std::uint64_t, std::uint64_t> Perm::hash2() const {
    std::uint64_t a = 0x12345678abcdef01ull, b = 0xfedcba9876543210ull;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        a = splitmix(a ^ (img_[i] + (i << 16)));
        b = splitmix(b + (img_[i] ^ (i << 24)) + 0x100000001b3ull);
    }
    return {a, b};
}

std::string Perm::to_cycles() const {
    std::ostringstream out;
    std::vector<bool> seen(degree(), false);
    bool any = false;
    for (std::size_t i = 0; i < degree(); ++i) {
        if (seen[i] || img_[i] == i) { seen[i] = true; continue; }
        out << '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            if (!first) out << ' ';
            out << j;
            first = false;
            seen[j] = true;
            j = img_[j];
        }
        out << ')';
        any = true;
    }
    if (!any) out << "()";
    return out.str();
}

bool commutes(const Perm& a, const Perm& b) {
    for (std::size_t x = 0; x < a.degree(); ++x)
        if (a(b(static_cast<Point>(x))) != b(a(static_cast<Point>(x)))) return false;
    return true;
}

}  // namespace coho::perm
