#include <doctest.h>

#include "ayh/yokonuma.hpp"
#include "gen.hpp"

using namespace ayh;

TEST_CASE("quadratic relation h1 h1") {
    YAlgebra Y(2, 2);
    Cyclotomic gap = Cyclotomic::from_laurent(2, laurent_gap());
    YElem expected = Y.unit() + Y.mul(Y.e_idem(1), Y.gen_h(1)).scaled(gap);
    CHECK(Y.mul(Y.gen_h(1), Y.gen_h(1)) == expected);
}

TEST_CASE("e_i idempotent and the stated expansions") {
    YAlgebra Y1(1, 2);
    CHECK(Y1.e_idem(1) == Y1.unit()); // r = 1 collapses the sum

    YAlgebra Y(2, 2);
    auto e1 = Y.e_idem(1);
    CHECK(Y.mul(e1, e1) == e1);
    // r=2, n=2: e_1 = (1/2)(1 + t_1 t_2)
    YElem expected(2, 2);
    Cyclotomic half = Cyclotomic::rational(2, Rational(1, 2));
    expected.add({{0, 0}, Perm::identity(2)}, half);
    expected.add({{1, 1}, Perm::identity(2)}, half);
    CHECK(e1 == expected);

    // e_i t_i t_{i+1}^-1 = e_i
    YElem t1t2inv = Y.mul(Y.gen_t(1, 1), Y.gen_t(2, -1));
    CHECK(Y.mul(e1, t1t2inv) == e1);
    YAlgebra Y32(3, 2);
    auto e = Y32.e_idem(1);
    CHECK(Y32.mul(e, Y32.mul(Y32.gen_t(1, 1), Y32.gen_t(2, -1))) == e);
}

TEST_CASE("h inverse") {
    YAlgebra Y(2, 2);
    Cyclotomic gap = Cyclotomic::from_laurent(2, laurent_gap());
    YElem hinv = Y.gen_h(1) - Y.e_idem(1).scaled(gap);
    CHECK(Y.mul(Y.gen_h(1), hinv) == Y.unit());
    CHECK(Y.mul(hinv, Y.gen_h(1)) == Y.unit());
}

TEST_CASE("relation suite at the three sizes") {
    for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
        YAlgebra Y(r, n);
        for (const auto& check : y_relation_suite(Y)) {
            INFO(check.name << " at (" << r << "," << n << ")");
            CHECK(check.pass);
        }
    }
}

TEST_CASE("basis closure and rank") {
    for (auto [r, n, rank] :
         std::vector<std::tuple<int, int, size_t>>{{2, 2, 8}, {3, 2, 18}, {2, 3, 48}}) {
        YAlgebra Y(r, n);
        auto basis = Y.basis();
        CHECK(basis.size() == rank);
        for (const auto& ka : basis)
            for (const auto& kb : basis) {
                YElem prod = Y.mul(Y.monomial(ka.tpow, ka.w), Y.monomial(kb.tpow, kb.w));
                for (const auto& [k, c] : prod.terms) {
                    // stays inside the span of the declared basis
                    bool in_range = true;
                    for (int v : k.tpow) in_range &= (0 <= v && v < r);
                    CHECK(in_range);
                }
            }
    }
}

TEST_CASE("h_w invertible for every w in S_3") {
    YAlgebra Y(2, 3);
    Cyclotomic gap = Cyclotomic::from_laurent(2, laurent_gap());
    for (const auto& w : all_perms(3)) {
        YElem hw = Y.monomial({0, 0, 0}, w);
        auto word = reduced_word(w);
        YElem inv = Y.unit();
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            inv = Y.mul(inv, Y.gen_h(*it) - Y.e_idem(*it).scaled(gap));
        CHECK(Y.mul(hw, inv) == Y.unit());
        CHECK(Y.mul(inv, hw) == Y.unit());
    }
}

TEST_CASE("e_i commutes with h_i") {
    for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
        YAlgebra Y(r, n);
        for (int i = 1; i < n; ++i)
            CHECK(Y.mul(Y.e_idem(i), Y.gen_h(i)) == Y.mul(Y.gen_h(i), Y.e_idem(i)));
    }
}

TEST_CASE("generator images in the idempotent presentation") {
    YAlgebra Y(2, 2);
    HhatR H(2, 2);

    // t_1 -> 1_{(1,1)} + 1_{(1,2)} + z 1_{(2,1)} + z 1_{(2,2)}
    HhatElem<Cyclotomic> t1 = image_t(H, 1);
    HhatElem<Cyclotomic> expected(2, 2);
    Perm id2 = Perm::identity(2);
    expected.add({{0, 0}, ResidueTuple(2, {1, 1}), id2}, Cyclotomic::one(2));
    expected.add({{0, 0}, ResidueTuple(2, {1, 2}), id2}, Cyclotomic::one(2));
    expected.add({{0, 0}, ResidueTuple(2, {2, 1}), id2}, Cyclotomic::zeta_pow(2, 1));
    expected.add({{0, 0}, ResidueTuple(2, {2, 2}), id2}, Cyclotomic::zeta_pow(2, 1));
    CHECK(t1 == expected);

    // e_1 -> 1_{(1,1)} + 1_{(2,2)}
    HhatElem<Cyclotomic> e1 = to_idempotent_presentation(Y, H, Y.e_idem(1));
    HhatElem<Cyclotomic> e1exp(2, 2);
    e1exp.add({{0, 0}, ResidueTuple(2, {1, 1}), id2}, Cyclotomic::one(2));
    e1exp.add({{0, 0}, ResidueTuple(2, {2, 2}), id2}, Cyclotomic::one(2));
    CHECK(e1 == e1exp);

    // t_i^r -> 1
    for (int i = 1; i <= 2; ++i) {
        HhatElem<Cyclotomic> p = H.unit();
        for (int s = 0; s < 2; ++s) p = H.mul(p, image_t(H, i));
        CHECK(p == H.unit());
    }
}

TEST_CASE("presentation change maps all defining relations to identities") {
    for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
        YAlgebra Y(r, n);
        HhatR H(r, n);
        for (const auto& check : presentation_image_suite(Y, H)) {
            INFO(check.name << " at (" << r << "," << n << ")");
            CHECK(check.pass);
        }
    }
}

TEST_CASE("presentation change is multiplicative") {
    YAlgebra Y(2, 2);
    HhatR H(2, 2);
    // exhaustive over basis monomial pairs at (2,2)
    for (const auto& ka : Y.basis())
        for (const auto& kb : Y.basis()) {
            YElem a = Y.monomial(ka.tpow, ka.w), b = Y.monomial(kb.tpow, kb.w);
            CHECK(to_idempotent_presentation(Y, H, Y.mul(a, b)) ==
                  H.mul(to_idempotent_presentation(Y, H, a), to_idempotent_presentation(Y, H, b)));
        }

    // random pairs at the other suite sizes
    Rng rng(31);
    for (auto [r, n] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}}) {
        YAlgebra Yr(r, n);
        HhatR Hr(r, n);
        for (int t = 0; t < 40; ++t) {
            YElem a(r, n), b(r, n);
            for (int s = 0; s < 2; ++s) {
                std::vector<int> tp(n);
                for (auto& v : tp) v = static_cast<int>(rng.range(0, r - 1));
                a.add({tp, random_perm(rng, n)}, random_cyclotomic(rng, r));
                for (auto& v : tp) v = static_cast<int>(rng.range(0, r - 1));
                b.add({tp, random_perm(rng, n)}, random_cyclotomic(rng, r));
            }
            CHECK(to_idempotent_presentation(Yr, Hr, Yr.mul(a, b)) ==
                  Hr.mul(to_idempotent_presentation(Yr, Hr, a),
                         to_idempotent_presentation(Yr, Hr, b)));
        }
    }
}

TEST_CASE("index and size guards") {
    YAlgebra Y(2, 2);
    CHECK_THROWS_AS(Y.e_idem(5), std::invalid_argument);
    CHECK_THROWS_AS(Y.gen_t(3), std::invalid_argument);
    CHECK_THROWS_AS(y_relation_suite(YAlgebra(10, 4)), guard_error);
}

TEST_CASE("images of the idempotents agree with the stabilizer sums") {
    for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
        YAlgebra Y(r, n);
        HhatR H(r, n);
        for (int i = 1; i < n; ++i)
            CHECK(to_idempotent_presentation(Y, H, Y.e_idem(i)) == H.ehat(i));
    }
}
