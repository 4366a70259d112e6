#include "coho/group_ops.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace coho::perm {

Perm perm_power(const Perm& p, std::uint64_t k) {
    Perm r(p.degree());
    Perm b = p;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

std::uint64_t two_part_of(std::uint64_t n) {
    std::uint64_t t = 1;
    while (n % 2 == 0) { n /= 2; t *= 2; }
    return t;
}

// ---------------------------------------------------------------------------
// ConjugationOrbit

ConjugationOrbit::ConjugationOrbit(const Group& g, const Perm& x0, const OrbitLimits& lim)
    : group_(&g), x0_(x0), index_(1024) {
    for (const auto& gen : g.generators()) {
        if (gen.is_identity()) continue;
        action_gens_.push_back(gen);
        Perm inv = gen.inverse();
        if (inv != gen) action_gens_.push_back(std::move(inv));
    }
    bool store = true;
    auto [h1, h2] = x0.hash2();
    bool ins;
    index_.find_or_insert(h1, h2, 0, &ins);
    parents_.emplace_back(0, 0);
    stored_.push_back(x0);

    for (std::uint32_t q = 0; q < parents_.size(); ++q) {
        Perm cur = store ? stored_[q] : element(q);
        for (std::uint16_t k = 0; k < action_gens_.size(); ++k) {
            Perm y = cur.conjugated_by(action_gens_[k]);
            auto [a, b] = y.hash2();
            std::uint32_t fresh = static_cast<std::uint32_t>(parents_.size());
            std::uint32_t got = index_.find_or_insert(a, b, fresh, &ins);
            if (!ins) continue;
            (void)got;
            parents_.emplace_back(q, k);
            if (store) {
                stored_.push_back(std::move(y));
                if (stored_.size() > lim.store_threshold) {
                    store = false;
                    stored_.clear();
                    stored_.shrink_to_fit();
                }
            }
            if (parents_.size() > lim.max_orbit) {
                truncated_ = true;
                return;
            }
        }
    }
}

Perm ConjugationOrbit::conjugator(std::uint32_t i) const {
    std::vector<std::uint16_t> path;
    while (i != 0) {
        path.push_back(parents_[i].second);
        i = parents_[i].first;
    }
    Perm c(x0_.degree());
    for (auto it = path.rbegin(); it != path.rend(); ++it) c = c * action_gens_[*it];
    return c;
}

Perm ConjugationOrbit::element(std::uint32_t i) const {
    if (!stored_.empty()) return stored_[i];
    std::vector<std::uint16_t> path;
    while (i != 0) {
        path.push_back(parents_[i].second);
        i = parents_[i].first;
    }
    Perm x = x0_;
    for (auto it = path.rbegin(); it != path.rend(); ++it) x = x.conjugated_by(action_gens_[*it]);
    return x;
}

std::uint32_t ConjugationOrbit::index_of(const Perm& y) const {
    auto [a, b] = y.hash2();
    return index_.find(a, b);
}

Perm ConjugationOrbit::schreier_generator(std::uint32_t node, std::uint32_t gen_idx) const {
    Perm ci = conjugator(node);
    Perm y = element(node).conjugated_by(action_gens_[gen_idx]);
    std::uint32_t j = index_of(y);
    Perm cj = conjugator(j);
    return ci * action_gens_[gen_idx] * cj.inverse();
}

// ---------------------------------------------------------------------------

Group stabilizer_from_orbit(const ConjugationOrbit& orbit, Rng& rng,
                            const std::vector<Perm>& known_members) {
    const Group& g = orbit.group();
    if (orbit.truncated()) throw ScaleError("orbit truncated; raise the orbit limit");
    std::uint64_t target = g.order() / orbit.size();
    if (g.order() % orbit.size() != 0)
        throw std::logic_error("orbit length does not divide group order");

    std::vector<Perm> gens = known_members;
    if (gens.empty()) gens.push_back(Perm(g.degree()));
    Group cur(gens);
    if (cur.order() == target) return cur;

    std::uint64_t n = orbit.size();
    std::size_t ng = orbit.action_gen_count();
    for (int round = 0; round < 600; ++round) {
        bool added = false;
        for (int b = 0; b < 8; ++b) {
            std::uint32_t node = static_cast<std::uint32_t>(rng() % n);
            std::uint32_t k = static_cast<std::uint32_t>(rng() % ng);
            Perm s = orbit.schreier_generator(node, k);
            if (!s.is_identity() && !cur.contains(s)) {
                gens.push_back(std::move(s));
                added = true;
            }
        }
        if (added) {
            cur = Group(gens);
            if (cur.order() == target) return cur;
        }
    }
    // Deterministic sweep: all Schreier generators in discovery order.
    for (std::uint32_t node = 0; node < n; ++node) {
        for (std::uint32_t k = 0; k < ng; ++k) {
            Perm s = orbit.schreier_generator(node, k);
            if (s.is_identity() || cur.contains(s)) continue;
            gens.push_back(std::move(s));
            cur = Group(gens);
            if (cur.order() == target) return cur;
        }
    }
    throw std::logic_error("stabilizer generation failed to reach target order");
}

Group centralizer_of_element(const Group& g, const Perm& x, Rng& rng, const OrbitLimits& lim) {
    if (!g.contains(x)) throw std::invalid_argument("centralizer: element not in group");
    ConjugationOrbit orbit(g, x, lim);
    if (!orbit.truncated()) return stabilizer_from_orbit(orbit, rng, {x});
    std::uint64_t m = x.order();
    if (m % 2 != 0 || m == 2)
        throw ScaleError("centralizer: conjugation orbit exceeds limit");
    // C_G(x) = C_{C_G(z)}(x) for the involution z = x^(m/2).
    Perm z = perm_power(x, m / 2);
    Group cz = centralizer_of_element(g, z, rng, lim);
    return centralizer_of_element(cz, x, rng, lim);
}

ElementClassReport classify_element(const Group& g, const Perm& x, Rng& rng,
                                    const OrbitLimits& lim) {
    ElementClassReport rep;
    rep.element_order = x.order();
    Group c = centralizer_of_element(g, x, rng, lim);
    rep.centralizer_order = c.order();
    rep.class_size = g.order() / rep.centralizer_order;
    if (rep.class_size * rep.centralizer_order != g.order())
        throw std::logic_error("orbit-stabilizer mismatch");
    return rep;
}

// ---------------------------------------------------------------------------
// Sylow 2-subgroups: find a 2-central involution t, pass to C_G(t); once t is
// central, reduce modulo the block action on <t>-orbits (the kernel is an
// elementary abelian 2-group) and lift a Sylow 2-subgroup of the image.

namespace {

Group sylow_2_central(const Group& g, const Perm& t, Rng& rng, const OrbitLimits& lim) {
    std::size_t deg = g.degree();
    std::vector<int32_t> blockid(deg, -1);
    std::vector<Point> rep;
    for (std::size_t p = 0; p < deg; ++p) {
        if (blockid[p] >= 0) continue;
        blockid[p] = static_cast<int32_t>(rep.size());
        blockid[t(static_cast<Point>(p))] = blockid[p];
        rep.push_back(static_cast<Point>(p));
    }
    std::size_t nb = rep.size();

    std::vector<Perm> cgens;
    std::vector<Perm> igens;
    for (const auto& x : g.generators()) {
        std::vector<Point> comp(nb + deg);
        std::vector<Point> im(nb);
        for (std::size_t b = 0; b < nb; ++b) {
            Point q = static_cast<Point>(blockid[x(rep[b])]);
            comp[b] = q;
            im[b] = q;
        }
        for (std::size_t p = 0; p < deg; ++p) comp[nb + p] = static_cast<Point>(nb + x(static_cast<Point>(p)));
        cgens.push_back(Perm::from_images(std::move(comp)));
        igens.push_back(Perm::from_images(std::move(im)));
    }

    std::vector<Point> preferred(nb);
    for (std::size_t b = 0; b < nb; ++b) preferred[b] = static_cast<Point>(b);
    Group compound(cgens, preferred);
    const StabChain& chain = compound.chain();

    auto restrict_tail = [&](const Perm& c) {
        std::vector<Point> im(deg);
        for (std::size_t p = 0; p < deg; ++p) im[p] = static_cast<Point>(c(static_cast<Point>(nb + p)) - nb);
        return Perm::from_images(std::move(im));
    };

    std::vector<Perm> qgens{t};
    for (const auto& s : chain.strong_generators()) {
        bool block_trivial = true;
        for (std::size_t b = 0; b < nb && block_trivial; ++b)
            if (s(static_cast<Point>(b)) != b) block_trivial = false;
        if (block_trivial) qgens.push_back(restrict_tail(s));
    }

    Group image(igens.empty() ? std::vector<Perm>{Perm(nb)} : igens);
    Group tbar = sylow_2(image, rng, lim);
    for (const auto& u : tbar.generators()) {
        auto e = chain.element_with_images([&](Point p) -> int32_t {
            return p < nb ? static_cast<int32_t>(u(p)) : -1;
        });
        if (!e) throw std::logic_error("sylow_2: lift failed");
        for (std::size_t b = 0; b < nb; ++b)
            if ((*e)(static_cast<Point>(b)) != u(static_cast<Point>(b)))
                throw std::logic_error("sylow_2: lift has wrong block action");
        qgens.push_back(restrict_tail(*e));
    }
    Group q(qgens);
    if (q.order() != g.two_part()) throw std::logic_error("sylow_2: lifted subgroup has wrong order");
    return q;
}

}  // namespace

Group sylow_2(const Group& g, Rng& rng, const OrbitLimits& lim) {
    std::uint64_t tp = g.two_part();
    if (tp == 1) return Group({g.identity()});
    if (g.order() == tp) return g;

    for (int attempts = 0; attempts < 500; ++attempts) {
        Perm r = g.random_element(rng);
        std::uint64_t m = r.order();
        if (m % 2) continue;
        Perm t = perm_power(r, m / 2);
        ConjugationOrbit orbit(g, t, lim);
        if (orbit.truncated()) continue;
        std::uint64_t corder = g.order() / orbit.size();
        if (two_part_of(corder) != tp) continue;
        if (orbit.size() == 1) return sylow_2_central(g, t, rng, lim);
        Group c = stabilizer_from_orbit(orbit, rng, {t});
        return sylow_2(c, rng, lim);
    }
    throw ScaleError("sylow_2: no 2-central involution found");
}

// ---------------------------------------------------------------------------

std::string AbelianType::to_string() const {
    if (cyclic_orders.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < cyclic_orders.size(); ++i) {
        if (i) out << " x ";
        out << "C" << cyclic_orders[i];
    }
    return out.str();
}

AbelianType abelian_type(const Group& a, std::uint64_t cap) {
    if (!a.is_abelian()) throw std::invalid_argument("abelian_type: group not abelian");
    auto elems = a.elements(cap);
    std::uint64_t rest = a.order();
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2))
        if (rest % p == 0) {
            primes.push_back(p);
            while (rest % p == 0) rest /= p;
        }
    if (rest > 1) primes.push_back(rest);

    std::vector<std::uint64_t> factors;
    for (auto p : primes) {
        // e_k = #cyclic p-factors of exponent >= k, from the counts
        // n_k = #{x : x^(p^k) = 1} via e_k = log_p(n_k / n_{k-1}).
        std::vector<std::uint64_t> e;
        std::uint64_t prev = 1;
        for (std::uint64_t pk = p;; pk *= p) {
            std::uint64_t c = 0;
            for (const auto& x : elems)
                if (perm_power(x, pk).is_identity()) ++c;
            if (c == prev) break;
            std::uint64_t ratio = c / prev, log = 0, v = 1;
            while (v < ratio) { v *= p; ++log; }
            e.push_back(log);
            prev = c;
        }
        for (std::size_t k = 0; k < e.size(); ++k) {
            std::uint64_t next = (k + 1 < e.size()) ? e[k + 1] : 0;
            std::uint64_t ord = 1;
            for (std::size_t j = 0; j <= k; ++j) ord *= p;
            for (std::uint64_t c = next; c < e[k]; ++c) factors.push_back(ord);
        }
    }
    std::sort(factors.begin(), factors.end(), std::greater<>());
    AbelianType out;
    out.cyclic_orders = std::move(factors);
    return out;
}

namespace {

Group group_from_elements(std::size_t degree, const std::vector<Perm>& elems) {
    std::vector<Perm> gens{Perm(degree)};
    Group cur(gens);
    for (const auto& e : elems) {
        if (!cur.contains(e)) {
            gens.push_back(e);
            cur = Group(gens);
        }
    }
    return cur;
}

}  // namespace

CentralSeries central_series(const Group& s, std::uint64_t cap) {
    auto elems = s.elements(cap);
    std::vector<Perm> zelems;
    for (const auto& x : elems) {
        bool central = true;
        for (const auto& g : s.generators())
            if (!commutes(x, g)) { central = false; break; }
        if (central) zelems.push_back(x);
    }
    CentralSeries cs{Group({s.identity()}), Group({s.identity()}), {}, {}};
    cs.center = group_from_elements(s.degree(), zelems);

    std::vector<Perm> z2elems;
    for (const auto& x : elems) {
        bool ok = true;
        Perm xinv = x.inverse();
        for (const auto& g : s.generators()) {
            Perm comm = xinv * x.conjugated_by(g);  // [x,g] = x^{-1} (g^{-1} x g)
            if (!cs.center.contains(comm)) { ok = false; break; }
        }
        if (ok) z2elems.push_back(x);
    }
    cs.second_center = group_from_elements(s.degree(), z2elems);
    cs.center_type = abelian_type(cs.center, cap);
    if (cs.second_center.is_abelian())
        cs.second_center_type = abelian_type(cs.second_center, cap);
    return cs;
}

// ---------------------------------------------------------------------------

Group normalizer(const Group& g, const Group& h, Rng& rng, const OrbitLimits& lim) {
    if (!g.contains(h)) throw std::invalid_argument("normalizer: h is not a subgroup of g");
    bool normal = true;
    for (const auto& x : g.generators()) {
        for (const auto& y : h.generators())
            if (!h.contains(y.conjugated_by(x))) { normal = false; break; }
        if (!normal) break;
    }
    if (normal) return g;

    auto helems = h.elements(65536);
    auto set_key = [&](const std::vector<Perm>& set) {
        std::uint64_t a = 0, b = 0;
        for (const auto& e : set) {
            auto [x, y] = e.hash2();
            a ^= x; b ^= y;
        }
        return std::pair<std::uint64_t, std::uint64_t>{a, b};
    };

    std::vector<Perm> agens;
    for (const auto& gen : g.generators()) {
        if (gen.is_identity()) continue;
        agens.push_back(gen);
        Perm inv = gen.inverse();
        if (inv != gen) agens.push_back(std::move(inv));
    }

    HashIndexMap index(1024);
    std::vector<Perm> conjs;         // conjugator per node
    std::vector<std::vector<Perm>> sets;
    bool ins;
    auto [k1, k2] = set_key(helems);
    index.find_or_insert(k1, k2, 0, &ins);
    conjs.push_back(Perm(g.degree()));
    sets.push_back(helems);

    std::uint64_t max_nodes = std::max<std::uint64_t>(4, lim.max_orbit / std::max<std::uint64_t>(1, helems.size()));
    for (std::uint32_t q = 0; q < conjs.size(); ++q) {
        for (std::size_t k = 0; k < agens.size(); ++k) {
            std::vector<Perm> img;
            img.reserve(helems.size());
            for (const auto& e : sets[q]) img.push_back(e.conjugated_by(agens[k]));
            auto [a, b] = set_key(img);
            std::uint32_t fresh = static_cast<std::uint32_t>(conjs.size());
            std::uint32_t got = index.find_or_insert(a, b, fresh, &ins);
            (void)got;
            if (!ins) continue;
            conjs.push_back(conjs[q] * agens[k]);
            sets.push_back(std::move(img));
            if (conjs.size() > max_nodes)
                throw ScaleError("normalizer: subgroup-conjugation orbit exceeds limit");
        }
    }

    std::uint64_t target = g.order() / conjs.size();
    std::vector<Perm> gens = h.generators();
    Group cur(gens);
    if (cur.order() == target) return cur;
    std::uint64_t n = conjs.size();
    for (int round = 0; round < 600; ++round) {
        bool added = false;
        for (int bi = 0; bi < 8; ++bi) {
            std::uint32_t node = static_cast<std::uint32_t>(rng() % n);
            std::uint32_t k = static_cast<std::uint32_t>(rng() % agens.size());
            std::vector<Perm> img;
            for (const auto& e : sets[node]) img.push_back(e.conjugated_by(agens[k]));
            auto [a, b] = set_key(img);
            std::uint32_t j = index.find(a, b);
            Perm s = conjs[node] * agens[k] * conjs[j].inverse();
            if (!s.is_identity() && !cur.contains(s)) {
                gens.push_back(std::move(s));
                added = true;
            }
        }
        if (added) {
            cur = Group(gens);
            if (cur.order() == target) return cur;
        }
    }
    for (std::uint32_t node = 0; node < n; ++node)
        for (std::uint32_t k = 0; k < agens.size(); ++k) {
            std::vector<Perm> img;
            for (const auto& e : sets[node]) img.push_back(e.conjugated_by(agens[k]));
            auto [a, b] = set_key(img);
            std::uint32_t j = index.find(a, b);
            Perm s = conjs[node] * agens[k] * conjs[j].inverse();
            if (s.is_identity() || cur.contains(s)) continue;
            gens.push_back(std::move(s));
            cur = Group(gens);
            if (cur.order() == target) return cur;
        }
    throw std::logic_error("normalizer: generation failed");
}

Group subgroup_intersection(const Group& g, const Group& a, const Group& b, std::uint64_t cap) {
    (void)g;
    const Group& small = (a.order() <= b.order()) ? a : b;
    const Group& big = (a.order() <= b.order()) ? b : a;
    if (small.order() > cap) throw ScaleError("subgroup_intersection: enumeration too large");
    std::vector<Perm> gens{Perm(small.degree())};
    Group cur(gens);
    small.chain().for_each_element(
        [&](const Perm& x) {
            if (big.contains(x) && !cur.contains(x)) {
                gens.push_back(x);
                cur = Group(gens);
            }
        },
        cap);
    return cur;
}

// ---------------------------------------------------------------------------
// Double cosets

DoubleCosetDecomposition double_cosets(const Group& g, const Group& h, std::uint64_t max_cosets) {
    if (!g.contains(h)) throw std::invalid_argument("double_cosets: h not a subgroup");
    std::uint64_t index = g.order() / h.order();
    if (index > max_cosets) throw ScaleError("double_cosets: index too large; use the conjugation-orbit route");

    std::vector<int32_t> orbid(g.degree(), -1);
    {
        auto orbs = h.orbits();
        for (std::size_t i = 0; i < orbs.size(); ++i)
            for (auto p : orbs[i]) orbid[p] = static_cast<int32_t>(i);
    }
    auto coset_key = [&](const Perm& x) {
        std::uint64_t a = 0x9ae16a3b2f90404full, b = 0xc3a5c85c97cb3127ull;
        for (std::size_t p = 0; p < g.degree(); ++p) {
            std::uint64_t v = static_cast<std::uint64_t>(orbid[x(static_cast<Point>(p))]);
            a = (a ^ (v + p * 0x100000001b3ull)) * 0x9e3779b97f4a7c15ull;
            a ^= a >> 29;
            b = (b + v * 0xff51afd7ed558ccdull + p) * 0xc4ceb9fe1a85ec53ull;
            b ^= b >> 31;
        }
        return std::pair<std::uint64_t, std::uint64_t>{a, b};
    };

    std::vector<Perm> reps;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
    auto find_or_add = [&](const Perm& x, bool* added) -> std::uint32_t {
        auto [a, b] = coset_key(x);
        auto& bucket = buckets[a ^ (b * 0x9e3779b97f4a7c15ull)];
        for (auto idx : bucket)
            if (h.contains(x * reps[idx].inverse())) { *added = false; return idx; }
        std::uint32_t idx = static_cast<std::uint32_t>(reps.size());
        reps.push_back(x);
        bucket.push_back(idx);
        *added = true;
        return idx;
    };

    bool added;
    find_or_add(g.identity(), &added);
    for (std::uint32_t q = 0; q < reps.size(); ++q) {
        Perm cur = reps[q];
        for (const auto& gen : g.generators()) {
            Perm nxt = cur * gen;  // right multiplication: H(x)*gen = H(x*gen)
            find_or_add(nxt, &added);
            if (reps.size() > index) throw std::logic_error("double_cosets: coset overcount");
        }
    }
    if (reps.size() != index) throw std::logic_error("double_cosets: coset undercount");

    // H-orbits on right cosets via right multiplication by H generators.
    std::vector<std::uint32_t> uf(reps.size());
    std::iota(uf.begin(), uf.end(), 0);
    std::function<std::uint32_t(std::uint32_t)> find_root = [&](std::uint32_t x) {
        while (uf[x] != x) { uf[x] = uf[uf[x]]; x = uf[x]; }
        return x;
    };
    for (std::uint32_t q = 0; q < reps.size(); ++q)
        for (const auto& hg : h.generators()) {
            Perm nxt = reps[q] * hg;
            bool was_added;
            std::uint32_t j = find_or_add(nxt, &was_added);
            if (was_added) throw std::logic_error("double_cosets: action left coset space");
            std::uint32_t a = find_root(q), b2 = find_root(j);
            if (a != b2) uf[a] = b2;
        }

    std::map<std::uint32_t, std::uint64_t> counts;
    for (std::uint32_t q = 0; q < reps.size(); ++q) counts[find_root(q)]++;
    DoubleCosetDecomposition out;
    out.group_order = g.order();
    out.subgroup_order = h.order();
    for (auto& [root, cnt] : counts) {
        out.representatives.push_back(reps[root]);
        out.sizes.push_back(cnt * h.order());
    }
    std::uint64_t total = std::accumulate(out.sizes.begin(), out.sizes.end(), std::uint64_t{0});
    if (total != g.order()) throw std::logic_error("double_cosets: sizes do not sum to |G|");
    return out;
}

DoubleCosetDecomposition double_cosets_by_conjugation(const Group& g, const Perm& z, Rng& rng,
                                                      const OrbitLimits& lim) {
    ConjugationOrbit orbit(g, z, lim);
    if (orbit.truncated()) throw ScaleError("double_cosets_by_conjugation: orbit exceeds limit");
    if (!orbit.has_stored())
        throw ScaleError("double_cosets_by_conjugation: orbit exceeds storage threshold");
    Group h = stabilizer_from_orbit(orbit, rng, {z});

    std::uint64_t n = orbit.size();
    std::vector<std::uint32_t> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<std::uint32_t(std::uint32_t)> find_root = [&](std::uint32_t x) {
        while (uf[x] != x) { uf[x] = uf[uf[x]]; x = uf[x]; }
        return x;
    };
    for (std::uint32_t i = 0; i < n; ++i)
        for (const auto& hg : h.generators()) {
            Perm y = orbit.stored_element(i).conjugated_by(hg);
            std::uint32_t j = orbit.index_of(y);
            if (j == UINT32_MAX) throw std::logic_error("conjugation orbit not closed");
            std::uint32_t a = find_root(i), b = find_root(j);
            if (a != b) uf[a] = b;
        }

    std::map<std::uint32_t, std::uint64_t> counts;
    for (std::uint32_t i = 0; i < n; ++i) counts[find_root(i)]++;
    DoubleCosetDecomposition out;
    out.group_order = g.order();
    out.subgroup_order = h.order();
    for (auto& [root, cnt] : counts) {
        out.representatives.push_back(orbit.conjugator(root));
        out.sizes.push_back(cnt * h.order());
    }
    std::uint64_t total = std::accumulate(out.sizes.begin(), out.sizes.end(), std::uint64_t{0});
    if (total != g.order()) throw std::logic_error("double cosets do not sum to |G|");
    return out;
}

// ---------------------------------------------------------------------------
// Maximal elementary abelian subgroups

namespace {

void bron_kerbosch(std::vector<std::uint64_t>& R, std::vector<std::uint64_t> P,
                   std::vector<std::uint64_t> X,
                   const std::vector<std::vector<std::uint64_t>>& adj, std::size_t words,
                   const std::function<void(const std::vector<std::uint64_t>&)>& report) {
    bool p_empty = true, x_empty = true;
    for (auto w : P) if (w) { p_empty = false; break; }
    for (auto w : X) if (w) { x_empty = false; break; }
    if (p_empty && x_empty) { report(R); return; }
    // pivot: vertex in P∪X with most neighbours in P
    std::size_t pivot = SIZE_MAX, best = 0;
    for (std::size_t v = 0; v < adj.size(); ++v) {
        bool in = ((P[v >> 6] >> (v & 63)) & 1) || ((X[v >> 6] >> (v & 63)) & 1);
        if (!in) continue;
        std::size_t cnt = 0;
        for (std::size_t w = 0; w < words; ++w) cnt += std::popcount(adj[v][w] & P[w]);
        if (pivot == SIZE_MAX || cnt > best) { pivot = v; best = cnt; }
    }
    std::vector<std::size_t> candidates;
    for (std::size_t v = 0; v < adj.size(); ++v) {
        bool in_p = (P[v >> 6] >> (v & 63)) & 1;
        if (!in_p) continue;
        bool adj_pivot = pivot != SIZE_MAX && ((adj[pivot][v >> 6] >> (v & 63)) & 1);
        if (!adj_pivot) candidates.push_back(v);
    }
    for (auto v : candidates) {
        R[v >> 6] |= 1ull << (v & 63);
        std::vector<std::uint64_t> P2(words), X2(words);
        for (std::size_t w = 0; w < words; ++w) {
            P2[w] = P[w] & adj[v][w];
            X2[w] = X[w] & adj[v][w];
        }
        bron_kerbosch(R, P2, X2, adj, words, report);
        R[v >> 6] &= ~(1ull << (v & 63));
        P[v >> 6] &= ~(1ull << (v & 63));
        X[v >> 6] |= 1ull << (v & 63);
    }
}

}  // namespace

std::vector<MaxElementaryAbelian> maximal_elementary_abelians(
    const Group& s, const std::function<std::uint64_t(const Perm&)>& ambient_invariant,
    std::uint64_t cap) {
    auto elems = s.elements(cap);
    std::vector<Perm> inv;
    for (const auto& x : elems)
        if (!x.is_identity() && (x * x).is_identity()) inv.push_back(x);
    std::size_t n = inv.size();
    std::size_t words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> adj(n, std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (commutes(inv[i], inv[j])) {
                adj[i][j >> 6] |= 1ull << (j & 63);
                adj[j][i >> 6] |= 1ull << (i & 63);
            }

    std::vector<std::vector<std::uint32_t>> cliques;
    std::vector<std::uint64_t> R(words, 0), P(words, 0), X(words, 0);
    for (std::size_t v = 0; v < n; ++v) P[v >> 6] |= 1ull << (v & 63);
    bron_kerbosch(R, P, X, adj, words, [&](const std::vector<std::uint64_t>& mask) {
        std::vector<std::uint32_t> c;
        for (std::size_t v = 0; v < n; ++v)
            if ((mask[v >> 6] >> (v & 63)) & 1) c.push_back(static_cast<std::uint32_t>(v));
        cliques.push_back(std::move(c));
    });

    // s-conjugacy classes of the clique subgroups, keyed by element-set hash.
    auto clique_key = [&](const std::vector<Perm>& set) {
        std::uint64_t a = 0, b = 0;
        for (const auto& e : set) {
            auto [x, y] = e.hash2();
            a ^= x; b ^= y;
        }
        return std::pair<std::uint64_t, std::uint64_t>{a, b};
    };
    HashIndexMap key_to_clique(cliques.size() * 2 + 16);
    std::vector<std::vector<Perm>> clique_sets;
    for (std::uint32_t c = 0; c < cliques.size(); ++c) {
        std::vector<Perm> set;
        for (auto v : cliques[c]) set.push_back(inv[v]);
        auto [a, b] = clique_key(set);
        bool ins;
        key_to_clique.find_or_insert(a, b, c, &ins);
        if (!ins) throw std::logic_error("duplicate maximal clique");
        clique_sets.push_back(std::move(set));
    }
    std::vector<std::uint32_t> uf(cliques.size());
    std::iota(uf.begin(), uf.end(), 0);
    std::function<std::uint32_t(std::uint32_t)> find_root = [&](std::uint32_t x) {
        while (uf[x] != x) { uf[x] = uf[uf[x]]; x = uf[x]; }
        return x;
    };
    for (std::uint32_t c = 0; c < cliques.size(); ++c)
        for (const auto& g : s.generators()) {
            std::vector<Perm> img;
            for (const auto& e : clique_sets[c]) img.push_back(e.conjugated_by(g));
            auto [a, b] = clique_key(img);
            std::uint32_t j = key_to_clique.find(a, b);
            if (j == UINT32_MAX) throw std::logic_error("conjugate of maximal clique not found");
            std::uint32_t x = find_root(c), y = find_root(j);
            if (x != y) uf[x] = y;
        }

    std::vector<std::uint32_t> roots;
    for (std::uint32_t c = 0; c < cliques.size(); ++c)
        if (find_root(c) == c) roots.push_back(c);

    // Fusion classes: equal multisets of ambient invariants.
    std::vector<std::vector<std::uint64_t>> signatures;
    std::vector<MaxElementaryAbelian> out;
    for (auto c : roots) {
        std::vector<std::uint64_t> sig;
        for (const auto& e : clique_sets[c]) sig.push_back(ambient_invariant(e));
        std::sort(sig.begin(), sig.end());
        int fid = -1;
        for (std::size_t i = 0; i < signatures.size(); ++i)
            if (signatures[i] == sig) { fid = static_cast<int>(i); break; }
        if (fid < 0) {
            fid = static_cast<int>(signatures.size());
            signatures.push_back(sig);
        }
        std::vector<Perm> gens = clique_sets[c];
        Group sub(gens);
        std::size_t rank = 0;
        std::uint64_t o = sub.order();
        while (o > 1) { o /= 2; ++rank; }
        out.push_back({std::move(sub), rank, fid});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hom

Hom::Hom(const Group& src, std::vector<Perm> gen_images, std::size_t target_degree)
    : src_(src), images_(std::move(gen_images)), sdeg_(src.degree()), tdeg_(target_degree) {
    if (images_.size() != src_.generators().size())
        throw std::invalid_argument("Hom: one image per generator required");
    std::vector<Perm> cgens;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i].degree() != tdeg_) throw std::invalid_argument("Hom: image degree mismatch");
        const Perm& s = src_.generators()[i];
        std::vector<Point> comp(sdeg_ + tdeg_);
        for (std::size_t p = 0; p < sdeg_; ++p) comp[p] = s(static_cast<Point>(p));
        for (std::size_t q = 0; q < tdeg_; ++q)
            comp[sdeg_ + q] = static_cast<Point>(sdeg_ + images_[i](static_cast<Point>(q)));
        cgens.push_back(Perm::from_images(std::move(comp)));
    }
    if (cgens.empty()) cgens.push_back(Perm(sdeg_ + tdeg_));
    std::vector<Point> preferred(sdeg_);
    for (std::size_t p = 0; p < sdeg_; ++p) preferred[p] = static_cast<Point>(p);
    graph_ = std::make_shared<StabChain>(cgens, preferred);
    if (graph_->order() != src_.order())
        throw std::invalid_argument("Hom: generator images do not define a homomorphism");
}

Hom Hom::identity(const Group& g) { return Hom(g, g.generators(), g.degree()); }

Hom Hom::inclusion(const Group& sub) { return identity(sub); }

Hom Hom::conjugation(const Group& src, const Perm& c) {
    std::vector<Perm> imgs;
    imgs.reserve(src.generators().size());
    for (const auto& g : src.generators()) imgs.push_back(g.conjugated_by(c));
    return Hom(src, std::move(imgs), c.degree());
}

Perm Hom::apply(const Perm& x) const {
    if (x.degree() != sdeg_) throw std::invalid_argument("Hom::apply degree mismatch");
    auto e = graph_->element_with_images([&](Point p) -> int32_t {
        return p < sdeg_ ? static_cast<int32_t>(x(p)) : -1;
    });
    if (!e) throw std::invalid_argument("Hom::apply: element not in source group");
    for (std::size_t p = 0; p < sdeg_; ++p)
        if ((*e)(static_cast<Point>(p)) != x(static_cast<Point>(p)))
            throw std::invalid_argument("Hom::apply: element not in source group");
    std::vector<Point> im(tdeg_);
    for (std::size_t q = 0; q < tdeg_; ++q)
        im[q] = static_cast<Point>((*e)(static_cast<Point>(sdeg_ + q)) - sdeg_);
    return Perm::from_images(std::move(im));
}

Hom Hom::after(const Hom& inner) const {
    std::vector<Perm> imgs;
    imgs.reserve(inner.images_.size());
    for (const auto& y : inner.images_) imgs.push_back(apply(y));
    return Hom(inner.src_, std::move(imgs), tdeg_);
}

Hom Hom::inverse_iso() const {
    Group img(images_.empty() ? std::vector<Perm>{Perm(tdeg_)} : images_);
    if (img.order() != src_.order())
        throw std::invalid_argument("Hom::inverse_iso: homomorphism is not injective");
    return Hom(img, src_.generators(), sdeg_);
}

}  // namespace coho::perm
