#include <doctest.h>

#include "telescoped/error.hpp"
#include "telescoped/exactalg/primes.hpp"
#include "telescoped/torsionfree/groups.hpp"
#include "telescoped/torsionfree/io.hpp"
#include "telescoped/towers/limits.hpp"

#include <algorithm>
#include <random>

using namespace telescoped;

namespace {

using Type = PrimeExponentSeq;

MultiplierSequence seq(std::vector<long long> prefix, std::vector<long long> block)
{
    MultiplierSequence k;
    for (auto v : prefix) k.prefix.emplace_back(v);
    for (auto v : block) k.block.emplace_back(v);
    return k;
}

Type random_type(std::mt19937& gen, bool allow_default)
{
    static const long long small_primes[] = {2, 3, 5, 7, 11, 13};
    std::map<BigInt, Exponent> ex;
    for (long long p : small_primes) {
        switch (gen() % 4) {
        case 0: ex[BigInt(p)] = Exponent(gen() % 4); break;
        case 1: ex[BigInt(p)] = Exponent::infinity(); break;
        default: break;
        }
    }
    return Type(ex, allow_default && gen() % 3 == 0 ? 1 + gen() % 2 : 0);
}

// p-height of 1 in colim(Z, x k_n), read off the first n multipliers by
// plain division of the running product.
unsigned long long height(const MultiplierSequence& k, long long p, std::size_t n)
{
    BigInt prod = 1;
    for (std::size_t i = 0; i < n; ++i) prod *= k.at(i);
    unsigned long long h = 0;
    while (prod % p == 0) {
        prod /= p;
        ++h;
    }
    return h;
}

}  // namespace

TEST_CASE("types of multiplication towers")
{
    for (long long p : {2, 3, 7}) {
        const RankOneGroup g = from_multiplication_tower(seq({}, {p}));
        CHECK(g.type == Type({{BigInt(p), Exponent::infinity()}}));
        CHECK_FALSE(g.is_free());
    }
    CHECK(from_multiplication_tower(seq({}, {1})).type == Type());
    CHECK(from_multiplication_tower(seq({6}, {1})).type == Type({{BigInt(2), Exponent(1)}, {BigInt(3), Exponent(1)}}));
    CHECK_THROWS_AS(from_multiplication_tower(seq({2, 0}, {1})), PreconditionError);
    CHECK_THROWS_AS(from_multiplication_tower(seq({}, {0})), PreconditionError);

    // Heights read off growing products.
    std::mt19937 gen(8);
    std::uniform_int_distribution<int> entry(1, 30);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<long long> prefix(gen() % 4), block(1 + gen() % 2);
        for (auto& x : prefix) x = entry(gen) * (gen() % 2 ? 1 : -1);
        for (auto& x : block) x = gen() % 2 ? 1 : entry(gen);
        const MultiplierSequence k = seq(prefix, block);
        const Type m = type_of(k);
        for (long long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
            const auto h1 = height(k, p, prefix.size() + 3 * block.size());
            const auto h2 = height(k, p, prefix.size() + 6 * block.size());
            if (h2 > h1)
                CHECK(m.at(BigInt(p)).is_infinite());
            else
                CHECK(m.at(BigInt(p)) == Exponent(h1));
        }
    }
}

TEST_CASE("types are invariant under prefix permutation and merging")
{
    std::mt19937 gen(21);
    std::uniform_int_distribution<int> entry(1, 40);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<long long> prefix(2 + gen() % 4);
        for (auto& x : prefix) x = entry(gen);
        const std::vector<long long> block{gen() % 2 ? 1 : entry(gen)};
        const Type m = type_of(seq(prefix, block));
        auto shuffled = prefix;
        std::shuffle(shuffled.begin(), shuffled.end(), gen);
        CHECK(type_of(seq(shuffled, block)) == m);
        auto merged = prefix;
        const std::size_t i = gen() % (merged.size() - 1);
        merged[i] *= merged[i + 1];
        merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        CHECK(type_of(seq(merged, block)) == m);
    }
}

TEST_CASE("presentations realize their type")
{
    std::mt19937 gen(3);
    for (int trial = 0; trial < 60; ++trial) {
        const Type m = random_type(gen, true);
        CHECK(type_of(multipliers_for(m)) == m);
    }
    const Type big({{BigInt(2), Exponent(100)}});
    CHECK(type_of(multipliers_for(big)) == big);
}

TEST_CASE("star equivalence")
{
    const Type a({{BigInt(2), Exponent(3)}, {BigInt(5), Exponent::infinity()}});
    const Type b({{BigInt(2), Exponent(1)}, {BigInt(5), Exponent::infinity()}});
    CHECK(star_equivalent(a, b));
    CHECK_FALSE(star_equivalent(Type({}, 1), Type({}, 2)));
    CHECK_FALSE(star_equivalent(Type({{BigInt(2), Exponent::infinity()}}), Type({{BigInt(3), Exponent::infinity()}})));
    CHECK_FALSE(star_equivalent(Type({{BigInt(2), Exponent::infinity()}}), Type({{BigInt(2), Exponent(9)}})));

    std::mt19937 gen(77);
    for (int trial = 0; trial < 200; ++trial) {
        const Type x = random_type(gen, true), y = random_type(gen, true), z = random_type(gen, true);
        CHECK(star_equivalent(x, x));
        CHECK(star_equivalent(x, y) == star_equivalent(y, x));
        if (star_equivalent(x, y) && star_equivalent(y, z)) CHECK(star_equivalent(x, z));
        CHECK(star_equivalent(x, star_canonical(x)));
    }
}

TEST_CASE("Hom into Z agrees with lim of the dual tower")
{
    CHECK(hom_to_Z(RankOneGroup{}) == FgAbGroup::free(1));
    CHECK(hom_to_Z(RankOneGroup{Type({{BigInt(5), Exponent::infinity()}})}).is_trivial());
    CHECK(hom_to_Z(RankOneGroup{Type({}, 1)}).is_trivial());
    CHECK(hom_to_Z(HomogeneousGroup(3, RankOneGroup{Type({{BigInt(2), Exponent(4)}})})) == FgAbGroup::free(3));

    std::mt19937 gen(41);
    for (int trial = 0; trial < 40; ++trial) {
        const HomogeneousGroup g(1 + gen() % 2, RankOneGroup{random_type(gen, true)});
        CHECK(hom_to_Z(g) == lim(presented_tower(g).dual()).group);
    }
}

TEST_CASE("Ext into Z")
{
    const ExtDescriptor z2 = ext_to_Z(HomogeneousGroup(2, RankOneGroup{}));
    CHECK(z2.is_trivial);
    CHECK(z2.is_smooth_classification);
    CHECK(z2.is_essentially_hyperfinite);

    for (long long p : {2, 3, 5}) {
        const ExtDescriptor e = ext_to_Z(RankOneGroup{Type({{BigInt(p), Exponent::infinity()}})});
        CHECK_FALSE(e.is_trivial);
        CHECK_FALSE(e.is_smooth_classification);
        CHECK(e.is_essentially_hyperfinite);
        CHECK(e.lim1.status.status == Lim1Status::NonZero);
        REQUIRE(e.lim1.rank1_type);
        CHECK(*e.lim1.rank1_type == Type({{BigInt(p), Exponent::infinity()}}));
    }

    // Three routes: descriptor, freeness, Mittag-Leffler of the transposed tower.
    std::mt19937 gen(12);
    for (int trial = 0; trial < 60; ++trial) {
        const HomogeneousGroup g(1 + gen() % 3, RankOneGroup{random_type(gen, true)});
        const ExtDescriptor e = ext_to_Z(g);
        CHECK(e.is_trivial == g.is_free());
        CHECK(e.is_trivial == (mittag_leffler(presented_tower(g).dual()).status == Lim1Status::Zero));
    }

    // Keys for Z[1/P^m]^d: equal iff same d and m =* n.
    for (int trial = 0; trial < 60; ++trial) {
        const Type m = random_type(gen, true);
        Type n = m;
        n.set(BigInt(17), Exponent(gen() % 5));
        n.set(BigInt(2), m.at(BigInt(2)).is_infinite() ? Exponent::infinity() : Exponent(gen() % 7));
        const auto d = 1 + gen() % 3;
        CHECK(ext_to_Z(HomogeneousGroup(d, RankOneGroup{m})).borel_class_key ==
              ext_to_Z(HomogeneousGroup(d, RankOneGroup{n})).borel_class_key);
        const Type other = random_type(gen, true);
        CHECK((ext_to_Z(HomogeneousGroup(d, RankOneGroup{m})).borel_class_key ==
               ext_to_Z(HomogeneousGroup(d, RankOneGroup{other})).borel_class_key) == star_equivalent(m, other));
        CHECK(ext_to_Z(HomogeneousGroup(d, RankOneGroup{m})).borel_class_key !=
              ext_to_Z(HomogeneousGroup(d + 1, RankOneGroup{m})).borel_class_key);
    }
}

TEST_CASE("supplied presentations are checked")
{
    const HomogeneousGroup g(1, RankOneGroup{Type({{BigInt(3), Exponent::infinity()}})});
    const AbTower good = AbTower::multiplication(seq({2, 2}, {3}));
    CHECK_FALSE(ext_to_Z(g, &good).is_trivial);
    const AbTower wrong = AbTower::multiplication(seq({}, {2}));
    CHECK_THROWS_AS(ext_to_Z(g, &wrong), PreconditionError);
    const AbTower wrong_rank = AbTower::scalar(2, seq({}, {3}));
    CHECK_THROWS_AS(ext_to_Z(g, &wrong_rank), PreconditionError);
    const AbTower not_scalar(Tail::periodic({int_matrix({{3, 1}, {0, 3}})}));
    CHECK_THROWS_AS(ext_to_Z(HomogeneousGroup(2, g.base), &not_scalar), PreconditionError);
    CHECK_THROWS_AS(HomogeneousGroup(0, RankOneGroup{}), PreconditionError);
    CHECK_THROWS_AS(Type({{BigInt(4), Exponent(1)}}), PreconditionError);
}

TEST_CASE("torsion-free JSON")
{
    const auto j = jsonio::parse_text(R"({"kind":"rank1","type":{"default":0,"exceptional":{"2":"inf","3":4}},"power":2})",
                                      "group");
    const HomogeneousGroup g = homogeneous_from_json(j);
    CHECK(g.rank == 2);
    CHECK(g.base.type.at(BigInt(2)).is_infinite());
    CHECK(g.base.type.at(BigInt(3)) == Exponent(4));
    const HomogeneousGroup back = homogeneous_from_json(to_json(g));
    CHECK(back.rank == g.rank);
    CHECK(back.base == g.base);

    try {
        homogeneous_from_json(jsonio::parse_text(R"({"kind":"rank1","type":{"exceptional":{"6":1}}})", "g"));
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("/type/exceptional") != std::string::npos);
    }
    CHECK_THROWS_AS(homogeneous_from_json(jsonio::parse_text(R"({"kind":"rank2","type":{}})", "g")), ParseError);
    CHECK_THROWS_AS(type_from_json(jsonio::parse_text(R"({"exceptional":{"2":"many"}})", "t")), ParseError);

    const MultiplierSequence k = multipliers_for(Type({{BigInt(2), Exponent(2)}}, 1));
    const MultiplierSequence k2 = multipliers_from_json(to_json(k));
    CHECK(type_of(k2) == type_of(k));
    CHECK(to_json(ext_to_Z(g))["is_trivial"] == false);
}
