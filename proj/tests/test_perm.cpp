#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "coho/group_io.hpp"
#include "coho/group_ops.hpp"

using namespace coho::perm;

namespace {

Group S3() { return read_group_string("degree 3\n(0 1)\n(0 1 2)\n"); }
Group S4() { return read_group_string("degree 4\n(0 1)\n(0 1 2 3)\n"); }
Group D8() { return read_group_string("degree 4\n(0 1 2 3)\n(0 2)\n"); }
Group V4() { return read_group_string("degree 4\n(0 1)(2 3)\n(0 2)(1 3)\n"); }
Group A4() { return read_group_string("degree 4\n(0 1)(2 3)\n(0 1 2)\n"); }
Group Q8() { return read_group_string("degree 8\n(0 1 2 3)(4 5 6 7)\n(0 4 2 6)(1 7 3 5)\n"); }

}  // namespace

TEST_CASE("perm basics") {
    auto p = Perm::from_cycles("(0 1 2)(3 4)", 5);
    CHECK(p(0) == 1);
    CHECK(p(2) == 0);
    CHECK(p(3) == 4);
    CHECK(p.order() == 6);
    CHECK(Perm::from_cycles(p.to_cycles(), 5) == p);
    CHECK(Perm::from_cycles("()", 4).is_identity());

    auto a = Perm::from_cycles("(0 1)", 3), b = Perm::from_cycles("(1 2)", 3);
    CHECK((a * b)(2) == 0);  // apply b then a: b(2)=1, a(1)=0
    CHECK((a * b)(2) == a(b(2)));
    CHECK((a * a.inverse()).is_identity());
    auto c = b.conjugated_by(a);  // a^{-1} b a
    CHECK(c == a.inverse() * b * a);
}

TEST_CASE("build small groups") {
    CHECK(S3().order() == 6);
    CHECK(Group({Perm::from_cycles("(0 1)", 2)}).order() == 2);
    CHECK(S4().order() == 24);
    CHECK(D8().order() == 8);
    CHECK(V4().order() == 4);
    CHECK(A4().order() == 12);
    CHECK(Q8().order() == 8);
    // Q8: unique involution
    int invols = 0;
    for (const auto& x : Q8().elements())
        if (!x.is_identity() && (x * x).is_identity()) ++invols;
    CHECK(invols == 1);
}

TEST_CASE("membership agrees with word enumeration on S3") {
    auto g = S3();
    // Enumerate words in the generators to collect all elements.
    std::set<Perm> all{g.identity()};
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<Perm> next = all;
        for (const auto& w : all)
            for (const auto& s : g.generators())
                if (next.insert(w * s).second) grew = true;
        all = next;
    }
    CHECK(all.size() == 6);
    for (const auto& x : all) CHECK(g.contains(x));
    CHECK_FALSE(S3().contains(Perm::from_cycles("(0 1)", 4)));
}

TEST_CASE("elements enumeration matches order") {
    for (auto g : {S4(), D8(), A4(), Q8()}) {
        auto elems = g.elements();
        std::set<Perm> uniq(elems.begin(), elems.end());
        CHECK(uniq.size() == g.order());
        for (const auto& x : elems) CHECK(g.contains(x));
    }
}

TEST_CASE("sylow_2 of small groups") {
    Rng rng(0);
    auto p3 = sylow_2(S3(), rng);
    CHECK(p3.order() == 2);
    CHECK(S3().contains(p3));

    auto p4 = sylow_2(S4(), rng);
    CHECK(p4.order() == 8);
    CHECK(S4().contains(p4));

    auto pa4 = sylow_2(A4(), rng);
    CHECK(pa4.order() == 4);

    // odd group: trivial sylow
    auto c3 = read_group_string("degree 3\n(0 1 2)\n");
    CHECK(sylow_2(c3, rng).order() == 1);

    // 2-group: itself
    CHECK(sylow_2(D8(), rng).order() == 8);
}

TEST_CASE("central series") {
    auto cs = central_series(D8());
    CHECK(cs.center.order() == 2);
    CHECK(cs.center_type.to_string() == "C2");
    CHECK(cs.second_center.order() == 8);  // D8 is of class 2: Z2 = D8? [D8,D8]=Z: Z2(D8)=D8

    auto csv = central_series(V4());
    CHECK(csv.center.order() == 4);  // abelian: Z = S
    CHECK(csv.center_type.to_string() == "C2 x C2");

    auto c4xc2 = read_group_string("degree 6\n(0 1 2 3)\n(4 5)\n");
    CHECK(abelian_type(c4xc2).to_string() == "C4 x C2");
    auto c8 = read_group_string("degree 8\n(0 1 2 3 4 5 6 7)\n");
    CHECK(abelian_type(c8).to_string() == "C8");
}

TEST_CASE("centralizer and classify") {
    Rng rng(1);
    auto g = S3();
    auto t = Perm::from_cycles("(0 1)", 3);
    auto c = centralizer_of_element(g, t, rng);
    CHECK(c.order() == 2);

    auto rep = classify_element(g, t, rng);
    CHECK(rep.element_order == 2);
    CHECK(rep.class_size == 3);
    CHECK(rep.centralizer_order == 2);

    // identity: class size 1
    auto repid = classify_element(g, g.identity(), rng);
    CHECK(repid.class_size == 1);
    CHECK(repid.element_order == 1);

    // all transpositions of S4 conjugate: class size 6
    auto rep4 = classify_element(S4(), Perm::from_cycles("(0 1)", 4), rng);
    CHECK(rep4.class_size == 6);

    // central element: whole group
    auto q = Q8();
    Perm minus1 = perm_power(q.generators()[0], 2);
    CHECK(centralizer_of_element(q, minus1, rng).order() == 8);

    CHECK_THROWS_AS(centralizer_of_element(g, Perm::from_cycles("(0 1)", 4), rng),
                    std::invalid_argument);
}

TEST_CASE("normalizer") {
    Rng rng(2);
    // normal subgroup: whole group
    CHECK(normalizer(S4(), V4(), rng).order() == 24);
    // <(0 1)> in S3 is self-normalizing
    auto h = Group({Perm::from_cycles("(0 1)", 3), Perm(3)});
    CHECK(normalizer(S3(), h, rng).order() == 2);
    // D8 in S4 is self-normalizing (Sylow with 3 conjugates)
    CHECK(normalizer(S4(), D8(), rng).order() == 8);
    // not a subgroup: transposition outside A4
    CHECK_THROWS_AS(normalizer(A4(), Group({Perm::from_cycles("(0 1)", 4)}), rng),
                    std::invalid_argument);
}

TEST_CASE("subgroup_intersection") {
    auto a = D8();
    CHECK(subgroup_intersection(S4(), a, a).order() == 8);
    // two distinct order-2 subgroups of V4 intersect trivially
    auto h1 = Group({Perm::from_cycles("(0 1)(2 3)", 4)});
    auto h2 = Group({Perm::from_cycles("(0 2)(1 3)", 4)});
    CHECK(subgroup_intersection(V4(), h1, h2).order() == 1);

    // D8 ∩ D8^g orders vs brute force over <=8 elements
    Rng rng(5);
    auto dc = double_cosets(S4(), D8());
    for (const auto& g : dc.representatives) {
        auto conj = conjugate_group(D8(), g);
        auto inter = subgroup_intersection(S4(), D8(), conj);
        std::size_t count = 0;
        for (const auto& x : D8().elements())
            if (conj.contains(x)) ++count;
        CHECK(inter.order() == count);
    }
}

TEST_CASE("double cosets") {
    // H = G: single double coset
    auto dcg = double_cosets(S4(), S4());
    CHECK(dcg.sizes == std::vector<std::uint64_t>{24});

    // D8 <= S4: sizes sum to 24
    auto dc = double_cosets(S4(), D8());
    std::uint64_t total = 0;
    for (auto s : dc.sizes) total += s;
    CHECK(total == 24);
    CHECK(dc.representatives.size() == 2);  // 8 + 16

    // each size divisible by |H| and equal to |H| * |H : H ∩ H^g|
    for (std::size_t i = 0; i < dc.sizes.size(); ++i) {
        CHECK(dc.sizes[i] % 8 == 0);
        auto conj = conjugate_group(D8(), dc.representatives[i]);
        auto inter = subgroup_intersection(S4(), D8(), conj);
        CHECK(dc.sizes[i] == 8 * (8 / inter.order()));
    }

    // transposition in S3: orbit length 3, 2 double cosets
    Rng rng(4);
    auto dcc = double_cosets_by_conjugation(S3(), Perm::from_cycles("(0 1)", 3), rng);
    CHECK(dcc.representatives.size() == 2);
    CHECK(dcc.subgroup_order == 2);
    std::uint64_t tot = 0;
    for (auto s : dcc.sizes) tot += s;
    CHECK(tot == 6);

    // central z: one coset, one double coset
    auto q8 = Q8();
    Perm minus1 = perm_power(q8.generators()[0], 2);
    auto dcz = double_cosets_by_conjugation(q8, minus1, rng);
    CHECK(dcz.representatives.size() == 1);
    CHECK(dcz.sizes == std::vector<std::uint64_t>{8});
}

TEST_CASE("maximal elementary abelians") {
    auto invariant = [](const Perm& p) { return std::uint64_t(p.fixed_points()); };
    // elementary abelian: itself
    auto v4 = V4();
    auto mv = maximal_elementary_abelians(v4, invariant);
    REQUIRE(mv.size() == 1);
    CHECK(mv[0].rank == 2);
    CHECK(mv[0].subgroup.order() == 4);

    // D8: two Klein four-subgroups, rank 2
    auto md = maximal_elementary_abelians(D8(), invariant);
    REQUIRE(md.size() == 2);
    for (const auto& m : md) {
        CHECK(m.rank == 2);
        CHECK(m.subgroup.is_elementary_abelian_2());
    }

    // Q8: only the centre, rank 1
    auto mq = maximal_elementary_abelians(Q8(), invariant);
    REQUIRE(mq.size() == 1);
    CHECK(mq[0].rank == 1);
}

TEST_CASE("homomorphisms") {
    auto s3 = S3();
    auto id = Hom::identity(s3);
    for (const auto& x : s3.elements()) CHECK(id.apply(x) == x);

    // sign map S3 -> C2
    auto c2 = read_group_string("degree 2\n(0 1)\n");
    Perm flip = Perm::from_cycles("(0 1)", 2);
    Hom sign(s3, {flip, Perm(2)}, 2);  // (01) -> flip, (012) -> id
    CHECK(sign.apply(Perm::from_cycles("(0 1 2)", 3)).is_identity());
    CHECK(sign.apply(Perm::from_cycles("(1 2)", 3)) == flip);

    // invalid: C3 generator -> order-2 image is not a homomorphism
    auto c3 = read_group_string("degree 3\n(0 1 2)\n");
    CHECK_THROWS(Hom(c3, {flip}, 2));

    // conjugation and composition
    auto d8 = D8();
    Perm g = Perm::from_cycles("(0 1)", 4);
    auto cg = Hom::conjugation(d8, g);
    for (const auto& x : d8.elements()) CHECK(cg.apply(x) == x.conjugated_by(g));

    auto iso = Hom::conjugation(d8, g);
    auto inv = iso.inverse_iso();
    for (const auto& x : d8.elements()) CHECK(inv.apply(iso.apply(x)) == x);

    // functoriality of after()
    auto comp = cg.after(Hom::identity(d8));
    for (const auto& x : d8.elements()) CHECK(comp.apply(x) == cg.apply(x));

    CHECK_THROWS(sign.apply(Perm::from_cycles("(0 1)", 4)));
}

TEST_CASE("group io round trip") {
    auto g = S4();
    std::ostringstream out;
    write_group(out, g, "symmetric group");
    auto back = read_group_string(out.str());
    CHECK(back.order() == 24);
    CHECK(back.degree() == 4);
    CHECK_THROWS(read_group_string("no header\n"));
}

TEST_CASE("orbit-stabilizer invariant on random subgroup elements") {
    Rng rng(9);
    auto g = S4();
    for (int t = 0; t < 10; ++t) {
        Perm x = g.random_element(rng);
        auto rep = classify_element(g, x, rng);
        CHECK(rep.class_size * rep.centralizer_order == g.order());
    }
}
