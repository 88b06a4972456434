#pragma once

#include "ayh/cellular.hpp"
#include "ayh/matrix_model.hpp"
#include "ayh/prng.hpp"
#include "ayh/yokonuma.hpp"

namespace ayh {

inline Perm random_perm(SplitMix& rng, int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    for (int i = n - 1; i > 0; --i) std::swap(img[i], img[rng.range(0, i)]);
    return Perm(std::move(img));
}

inline LaurentZ random_laurent(SplitMix& rng, int max_exp = 2, int max_coeff = 3) {
    LaurentZ p;
    for (int t = 0; t < 2; ++t)
        p.add_term(static_cast<int>(rng.range(-max_exp, max_exp)),
                   rng.range(-max_coeff, max_coeff));
    return p;
}

inline ResidueTuple random_tuple(SplitMix& rng, int r, int n) {
    std::vector<int> e(n);
    for (auto& v : e) v = static_cast<int>(rng.range(1, r));
    return ResidueTuple(r, std::move(e));
}

inline HhatElem<LaurentZ> random_hhat(SplitMix& rng, const HhatA& A, int terms = 2,
                                      int max_exp = 1) {
    HhatElem<LaurentZ> out = A.zero();
    for (int t = 0; t < terms; ++t) {
        std::vector<int> alpha(A.n());
        for (auto& v : alpha) v = static_cast<int>(rng.range(-max_exp, max_exp));
        out.add({std::move(alpha), random_tuple(rng, A.r(), A.n()), random_perm(rng, A.n())},
                random_laurent(rng));
    }
    return out;
}

inline EElement random_e(SplitMix& rng, const MatrixModel& M) {
    EElement out(M.r(), M.n());
    const auto& tuples = M.algebra().tuples();
    for (int t = 0; t < 2; ++t) {
        const ResidueTuple& l1 = tuples[rng.next() % tuples.size()];
        auto orbit = orbit_of(l1);
        const ResidueTuple& l2 = orbit[rng.next() % orbit.size()];
        const YoungHecke& Y = M.young(orbit_rep(l1).first);
        auto ball = Y.ball(2, -1, 1);
        out.add_block({l1, l2},
                      Y.g_basis(ball[rng.next() % ball.size()]).scaled(random_laurent(rng)));
    }
    return out;
}

inline std::vector<RelationCheck> suite_relations_y(int r, int n) {
    return y_relation_suite(YAlgebra(r, n));
}

inline std::vector<RelationCheck> suite_relations_hhat(int r, int n) {
    HhatA A(r, n);
    return hhat_relation_suite(A);
}

// the isomorphism pair of the matrix model: round trips and multiplicativity
inline std::vector<RelationCheck> suite_iso_roundtrip(int r, int n, uint64_t seed,
                                                      int samples, int max_deg = 1) {
    std::vector<RelationCheck> out;
    MatrixModel M(r, n);
    const HhatA& A = M.algebra();
    SplitMix rng(seed);

    out.push_back({"Psi(1) is the unit", M.psi(A.unit()) == M.unit()});
    out.push_back({"Phi(unit) = 1", M.phi_map(M.unit()) == A.unit()});

    bool round1 = true;
    for (int t = 0; t < samples && round1; ++t) {
        auto h = random_hhat(rng, A, 2, max_deg);
        round1 = M.phi_map(M.psi(h)) == h;
    }
    out.push_back({"Phi o Psi = id on sampled elements", round1});

    bool round2 = true;
    for (const auto& rep : sorted_reps(r, n)) {
        const YoungHecke& Y = M.young(rep);
        auto orbit = orbit_of(rep);
        auto ball = Y.ball(2, -1, 1);
        for (int t = 0; t < samples / 4 + 1 && round2; ++t) {
            const ResidueTuple& l1 = orbit[rng.next() % orbit.size()];
            const ResidueTuple& l2 = orbit[rng.next() % orbit.size()];
            EElement x = M.x_basis(l1, l2, ball[rng.next() % ball.size()]);
            round2 = M.psi(M.phi_map(x)) == x;
        }
    }
    out.push_back({"Psi o Phi = id on sampled basis elements", round2});

    bool hom = true;
    for (int t = 0; t < samples && hom; ++t) {
        auto h1 = random_hhat(rng, A, 2, max_deg);
        auto h2 = random_hhat(rng, A, 2, max_deg);
        hom = M.psi(A.mul(h1, h2)) == M.e_mul(M.psi(h1), M.psi(h2));
        if (hom) {
            EElement x1 = random_e(rng, M), x2 = random_e(rng, M);
            hom = M.phi_map(M.e_mul(x1, x2)) == A.mul(M.phi_map(x1), M.phi_map(x2));
        }
    }
    out.push_back({"both maps are multiplicative on sampled pairs", hom});
    return out;
}

inline std::vector<RelationCheck> suite_tau_identities(int r, int n) {
    std::vector<RelationCheck> out;
    MatrixModel M(r, n);
    const HhatA& A = M.algebra();
    for (const auto& lam : A.tuples()) {
        bool ok = true;
        std::string note;
        try {
            const TauPair& t = M.tau(lam); // construction verifies both identities
            ResidueTuple rep = orbit_rep(lam).first;
            ok = A.mul(A.mul(A.idem(rep), t.tau), t.tau_prime) == A.idem(rep) &&
                 A.mul(A.mul(A.idem(lam), t.tau_prime), t.tau) == A.idem(lam);
        } catch (const std::exception& ex) {
            ok = false;
            note = std::string(" (") + ex.what() + ")";
        }
        out.push_back({"sandwich identities at " + lam.str() + note, ok});
    }
    return out;
}

// canonical basis conditions over a ball; also renders the coefficient table
inline std::vector<RelationCheck> suite_kl(int n, int maxlen, long long pi_window,
                                           std::string* table = nullptr) {
    std::vector<RelationCheck> out;
    AffineHecke H(n);
    SplitMix rng(7);

    bool bar2 = true;
    for (int t = 0; t < 50 && bar2; ++t) {
        BernsteinElem a(n);
        a.add({std::vector<int>(n, 0), random_perm(rng, n)}, random_laurent(rng));
        for (int j = 1; j <= n; ++j)
            if (rng.range(0, 1)) a = H.mul(a, H.gen_Z(j, rng.range(0, 1) ? 1 : -1));
        bar2 = H.bar(H.bar(a)) == a;
    }
    out.push_back({"bar is an involution", bar2});

    std::string tbl;
    bool kl_ok = true;
    for (const auto& w : enumerate_ball(n, maxlen, -pi_window, pi_window)) {
        try {
            KLBasisElem c = H.kl(w, maxlen + 1); // construction asserts the two conditions
            if (!(c.expansion.terms.at(w) == LaurentZ(1))) kl_ok = false;
            tbl += "c{" + w.str() + "} =";
            for (const auto& [y, p] : c.expansion.terms)
                tbl += "  [" + y.str() + "] " + p.str() + ";";
            tbl += "\n";
        } catch (const std::exception& ex) {
            kl_ok = false;
            tbl += std::string("c{") + w.str() + "} FAILED: " + ex.what() + "\n";
        }
    }
    out.push_back({"canonical basis conditions on the ball", kl_ok});
    if (table) *table = tbl;
    return out;
}

inline CellIdealInstance<EElement> finite_orbit_instance(const MatrixModel& M,
                                                         const ResidueTuple& rep,
                                                         bool corrupt) {
    auto orbit = orbit_of(rep);
    int dim = static_cast<int>(orbit.size());
    ExtAffineElem e = ExtAffineElem::identity(rep.n());

    CellIdealInstance<EElement> inst{
        {},
        [&M](const EElement& a, const EElement& b) { return M.e_mul(a, b); },
        [&M](const EElement& a) { return M.invol(a); },
        {},
        GenMatrixAlgebra::make(dim, 1, identity_matrix(dim, 1), RingInvolution::identity(1)),
        {}};
    std::vector<EKey> keys;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            inst.basis.push_back(M.x_basis(orbit[i], orbit[j], e));
            inst.iso.emplace_back(i + 1, j + 1, MultiLaurent::constant(1, 1));
            keys.push_back({orbit[i], orbit[j]});
        }
    if (corrupt) std::swap(std::get<0>(inst.iso[1]), std::get<1>(inst.iso[1]));

    inst.coords = [&M, keys](const EElement& x) -> std::optional<std::vector<MultiLaurent>> {
        std::vector<MultiLaurent> out;
        size_t seen = 0;
        for (const auto& key : keys) {
            auto it = x.blocks.find(key);
            if (it == x.blocks.end()) {
                out.push_back(MultiLaurent(1));
                continue;
            }
            ++seen;
            if (it->second.terms.size() != 1) return std::nullopt;
            const auto& [k, v] = *it->second.terms.begin();
            if (!k.is_finite() || !k.w.is_identity()) return std::nullopt;
            out.push_back(MultiLaurent::from_laurent(v));
        }
        if (seen != x.blocks.size()) return std::nullopt;
        return out;
    };
    return inst;
}

inline std::vector<RelationCheck> suite_cellular(uint64_t seed, int samples) {
    std::vector<RelationCheck> out;
    SplitMix rng(seed);

    auto random_ml = [&](int nvars) {
        MultiLaurent p(nvars);
        for (int t = 0; t < 2; ++t) {
            std::vector<int> e(nvars);
            for (auto& v : e) v = static_cast<int>(rng.range(-2, 2));
            p.add_term(std::move(e), rng.range(-3, 3));
        }
        return p;
    };
    auto random_matrix = [&](int dim, int nvars) {
        BMatrix m = zero_matrix(dim, nvars);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) m[i][j] = random_ml(nvars);
        return m;
    };

    bool assoc = true;
    for (int t = 0; t < samples && assoc; ++t) {
        int nvars = 1 + static_cast<int>(rng.range(0, 1));
        int dim = static_cast<int>(rng.range(1, 3));
        auto G = GenMatrixAlgebra::make_unchecked(dim, nvars, random_matrix(dim, nvars),
                                                  RingInvolution::identity(nvars));
        BMatrix x = random_matrix(dim, nvars), y = random_matrix(dim, nvars),
                z = random_matrix(dim, nvars);
        assoc = G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z));
    }
    out.push_back({"generalized matrix product associativity", assoc});

    {
        auto A = GenMatrixAlgebra::make(2, 1, identity_matrix(2, 1), RingInvolution::bar(1, {0}));
        bool anti = true;
        for (int t = 0; t < samples && anti; ++t) {
            BMatrix x = random_matrix(2, 1), y = random_matrix(2, 1);
            anti = A.involution(A.mul(x, y)) == A.mul(A.involution(y), A.involution(x)) &&
                   A.involution(A.involution(x)) == x;
        }
        out.push_back({"compatible form gives an involutive anti-automorphism", anti});

        BMatrix badpsi = identity_matrix(2, 1);
        badpsi[0][1] = MultiLaurent::variable(1, 0);
        auto B = GenMatrixAlgebra::make_unchecked(2, 1, badpsi, RingInvolution::identity(1));
        bool witness = false;
        for (int t = 0; t < samples && !witness; ++t) {
            BMatrix x = random_matrix(2, 1), y = random_matrix(2, 1);
            witness = !(B.involution_unchecked(B.mul(x, y)) ==
                        B.mul(B.involution_unchecked(y), B.involution_unchecked(x)));
        }
        out.push_back({"incompatible form breaks the anti-automorphism", !B.involution_compatible() && witness});
    }

    {
        bool layers_ok = true;
        for (int t = 0; t < 10 && layers_ok; ++t) {
            ChainSpec c1, c2;
            int k1 = static_cast<int>(rng.range(1, 3)), k2 = static_cast<int>(rng.range(1, 3));
            for (int i = 0; i < k1; ++i)
                c1.layers.push_back({"J" + std::to_string(i + 1), rng.range(1, 3),
                                     static_cast<int>(rng.range(0, 2)), {}});
            for (int i = 0; i < k2; ++i)
                c2.layers.push_back({"K" + std::to_string(i + 1), rng.range(1, 3),
                                     static_cast<int>(rng.range(0, 2)), {}});
            ChainSpec tens = chain_tensor(c1, c2);
            layers_ok = tens.layers.size() == static_cast<size_t>(k1) * k2;
            size_t idx = 0;
            for (int i = 0; layers_ok && i < k1; ++i)
                for (int j = 0; layers_ok && j < k2; ++j, ++idx)
                    layers_ok = tens.layers[idx].rank ==
                                    checked_mul(c1.layers[i].rank, c2.layers[j].rank) &&
                                tens.layers[idx].nvars ==
                                    c1.layers[i].nvars + c2.layers[j].nvars;
        }
        out.push_back({"tensor chain layers are the interleaved products", layers_ok});
    }

    {
        MatrixModel M(2, 2);
        auto good = cell_ideal_check(finite_orbit_instance(M, ResidueTuple(2, {1, 2}), false));
        out.push_back({"cell ideal check passes on the finite orbit block", all_pass(good)});
        auto bad = cell_ideal_check(finite_orbit_instance(M, ResidueTuple(2, {1, 2}), true));
        out.push_back({"cell ideal check rejects the corrupted map", !all_pass(bad)});
    }
    return out;
}

} // namespace ayh
