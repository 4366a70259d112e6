// Permutations on {0..degree-1}.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace coho::perm {

using Point = std::uint16_t;

class Perm {
public:
    Perm() = default;
    explicit Perm(std::size_t degree);  // identity
    static Perm from_images(std::vector<Point> images);
    /// Disjoint-cycle notation with 0-based points, e.g. "(0 1 2)(3 4)".
    /// "()" denotes the identity.
    static Perm from_cycles(std::string_view s, std::size_t degree);

    std::size_t degree() const { return img_.size(); }
    Point operator()(Point x) const { return img_[x]; }
    const std::vector<Point>& images() const { return img_; }

    /// Composition: (a*b)(x) = a(b(x)).
    Perm operator*(const Perm& b) const;
    Perm inverse() const;
    /// g^{-1} * (*this) * g.
    Perm conjugated_by(const Perm& g) const;

    bool is_identity() const;
    std::uint64_t order() const;  // lcm of cycle lengths
    std::size_t fixed_points() const;

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    /// Two independent 64-bit hashes of the image table.
    std::pair<std::uint64_t, std::uint64_t> hash2() const;

    std::string to_cycles() const;

private:
    std::vector<Point> img_;
};

bool commutes(const Perm& a, const Perm& b);

}  // namespace coho::perm
