#include "tetra/verify.hpp"

#include <stdexcept>

#include "tetra/tetra_algebra.hpp"

namespace tetra {

Report suite_relations() { return verify_tetra_relations(); }

Report suite_table(int max_degree) {
    Report rep;
    OnsagerRecursion rec(generator_image({1, 2}).nf, generator_image({0, 3}).nf);
    for (long m = 1; m <= max_degree; ++m) {
        std::string tag = " (m=" + std::to_string(m) + ")";
        for (int sector = 0; sector < 3; ++sector) {
            std::string marks(static_cast<std::size_t>(sector), '\'');
            LoopElem am = rec.a(m);
            LoopElem a1m = rec.a(1 - m);
            LoopElem gm = rec.g(m);
            for (int s = 0; s < sector; ++s) {
                am = loop_prime(am);
                a1m = loop_prime(a1m);
                gm = loop_prime(gm);
            }
            rep.add("table row a" + marks + "_m vs recursion" + tag, sigma_a(m, sector) == am);
            rep.add("table row a" + marks + "_{1-m} vs recursion" + tag,
                    sigma_a(1 - m, sector) == a1m);
            rep.add("table row g" + marks + "_m vs recursion" + tag, sigma_g(m, sector) == gm);
        }
    }
    return rep;
}

Report suite_brackets(int max_degree) {
    Report rep = verify_bracket_recursions(max_degree);
    const long N = max_degree;
    // Transport of the defining Onsager brackets through the standard
    // embedding: the images satisfy the same structure constants. Rows are
    // precomputed once; the index ranges reach 2N where sums of indices land.
    auto A = [&](long m) { return sigma_a(m); };
    std::vector<LoopElem> apos(static_cast<std::size_t>(2 * N + 2)), aneg(apos.size());
    std::vector<LoopElem> g(static_cast<std::size_t>(2 * N + 1));
    for (long m = 0; m <= 2 * N + 1; ++m) {
        apos[static_cast<std::size_t>(m)] = A(m);
        aneg[static_cast<std::size_t>(m)] = A(-m);
    }
    for (long l = 1; l <= 2 * N; ++l) g[static_cast<std::size_t>(l)] = sigma_g(l);
    auto a_at = [&](long m) -> const LoopElem& {
        return m >= 0 ? apos[static_cast<std::size_t>(m)] : aneg[static_cast<std::size_t>(-m)];
    };

    for (long l = -N; l <= N; ++l) {
        bool ok = true;
        for (long m = -N; m <= N; ++m) {
            LoopElem lhs = loop_bracket(a_at(l), a_at(m));
            LoopElem rhs;
            long d = l - m;
            if (d > 0) rhs = loop_scale(2, g[static_cast<std::size_t>(d)]);
            else if (d < 0) rhs = loop_scale(-2, g[static_cast<std::size_t>(-d)]);
            ok = ok && lhs == rhs;
        }
        rep.add("[a_l, a_m] = 2 g_{l-m} for |m| <= " + std::to_string(N) +
                    " (l=" + std::to_string(l) + ")",
                ok);
    }
    for (long l = 1; l <= N; ++l) {
        bool ok = true;
        for (long m = -N; m <= N; ++m) {
            LoopElem lhs = loop_bracket(g[static_cast<std::size_t>(l)], a_at(m));
            LoopElem rhs = a_at(m + l) - a_at(m - l);
            ok = ok && lhs == rhs;
        }
        rep.add("[g_l, a_m] = a_{m+l} - a_{m-l} for |m| <= " + std::to_string(N) +
                    " (l=" + std::to_string(l) + ")",
                ok);
    }
    for (long l = 1; l <= N; ++l) {
        bool ok = true;
        for (long m = 1; m <= N; ++m)
            ok = ok && loop_bracket(g[static_cast<std::size_t>(l)],
                                    g[static_cast<std::size_t>(m)])
                           .is_zero();
        rep.add("[g_l, g_m] = 0 for m <= " + std::to_string(N) + " (l=" + std::to_string(l) + ")",
                ok);
    }
    return rep;
}

Report suite_diagrams(int max_degree) {
    Report rep;

    // Equitable sl2: rotating then embedding equals embedding then the
    // transported rotation; same for the flip.
    {
        const std::array<int, 3> std_triple = {1, 2, 3};
        const SigmaAut& pr = sigma_action(perm_prime());
        const SigmaAut& om = sigma_action(perm_omega());
        const Sl2Elem basis[3] = {sl2_x(), sl2_y(), sl2_z()};
        const char* names[3] = {"X", "Y", "Z"};
        for (int k = 0; k < 3; ++k) {
            rep.add(std::string("sl2 prime diagram on ") + names[k],
                    std_hom_sl2(sl2_prime(basis[k]), std_triple).nf ==
                        pr.apply(std_hom_sl2(basis[k], std_triple).nf));
            rep.add(std::string("sl2 omega diagram on ") + names[k],
                    std_hom_sl2(sl2_omega(basis[k]), std_triple).nf ==
                        om.apply(std_hom_sl2(basis[k], std_triple).nf));
        }
    }

    // Onsager: each of the three involutions commutes with the standard
    // embedding on the basis up to the stated index bound.
    {
        struct Pair {
            OnsAuto which;
            Permutation perm;
            const char* name;
        };
        const Pair pairs[3] = {{OnsAuto::down, perm_down(), "down"},
                               {OnsAuto::Down, perm_Down(), "Down"},
                               {OnsAuto::star, perm_star(), "star"}};
        for (const auto& p : pairs) {
            const SigmaAut& aut = sigma_action(p.perm);
            bool ok = true;
            for (long m = -max_degree; m <= max_degree; ++m) {
                OnsagerElem u = onsager_a(m);
                ok = ok && onsager_image(onsager_auto(u, p.which)).nf ==
                               aut.apply(onsager_image(u).nf);
            }
            for (long l = 1; l <= max_degree; ++l) {
                OnsagerElem u = onsager_g(l);
                ok = ok && onsager_image(onsager_auto(u, p.which)).nf ==
                               aut.apply(onsager_image(u).nf);
            }
            rep.add(std::string("Onsager ") + p.name + " diagram on A_m, G_l (|m|,l <= " +
                        std::to_string(max_degree) + ")",
                    ok);
        }
    }

    // Laurent loop algebra: the flip omega and the index swap d commute with
    // the standard embedding on the six equitable generators.
    {
        using G = EquitableLoopGen;
        const SigmaAut& om = sigma_action(perm_omega());
        const SigmaAut& dd = sigma_action(perm_d());
        auto X0 = equitable_loop_generator(G::X0), Y0 = equitable_loop_generator(G::Y0),
             Z0 = equitable_loop_generator(G::Z0), X1 = equitable_loop_generator(G::X1),
             Y1 = equitable_loop_generator(G::Y1), Z1 = equitable_loop_generator(G::Z1);
        bool om_ok = om.apply(X0) == -Y0 && om.apply(Y0) == -X0 && om.apply(Z0) == -Z0 &&
                     om.apply(X1) == -Y1 && om.apply(Y1) == -X1 && om.apply(Z1) == -Z1;
        rep.add("loop omega diagram on the equitable generators", om_ok);
        bool d_ok = dd.apply(X0) == X1 && dd.apply(Y0) == Y1 && dd.apply(Z0) == Z1 &&
                    dd.apply(X1) == X0 && dd.apply(Y1) == Y0 && dd.apply(Z1) == Z0;
        rep.add("loop d diagram on the equitable generators", d_ok);
    }

    // The rotation diagram: applying prime to indices matches the coefficient
    // rotation on every signed generator.
    {
        bool ok = true;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                if (i == j) continue;
                ok = ok && s4_act_generator({i, j}, perm_prime()).nf ==
                               loop_prime(generator_image({i, j}).nf);
            }
        rep.add("prime diagram on all signed generators", ok);
    }

    // Natural homomorphism: chasing the Chevalley generators through the
    // standard loop embedding lands on the same tensors.
    {
        auto half = rat(1, 2);
        auto chase_e1 = loop_scale(half, generator_image({1, 2}).nf + generator_image({3, 1}).nf);
        auto chase_f1 = loop_scale(-half, generator_image({2, 3}).nf + generator_image({3, 1}).nf);
        auto chase_h1 = generator_image({3, 1}).nf;
        auto chase_e0 = loop_scale(half, generator_image({3, 0}).nf + generator_image({1, 3}).nf);
        auto chase_f0 = loop_scale(-half, generator_image({0, 1}).nf + generator_image({1, 3}).nf);
        auto chase_h0 = generator_image({1, 3}).nf;
        rep.add("natural hom chase: e1", chase_e1 == chevalley_generator(Chevalley::e1));
        rep.add("natural hom chase: f1", chase_f1 == chevalley_generator(Chevalley::f1));
        rep.add("natural hom chase: h1", chase_h1 == chevalley_generator(Chevalley::h1));
        rep.add("natural hom chase: e0", chase_e0 == chevalley_generator(Chevalley::e0));
        rep.add("natural hom chase: f0", chase_f0 == chevalley_generator(Chevalley::f0));
        rep.add("natural hom chase: h0", chase_h0 == chevalley_generator(Chevalley::h0));
    }

    return rep;
}

Report suite_presentation() {
    Report rep = check_loop_presentation();
    rep.add("Dolan-Grady for (A_0, A_1) in the abstract algebra",
            check_dolan_grady(onsager_a(0), onsager_a(1)));
    // The two degree-3 relations hold for the seed pair of every one of the
    // 24 conjugated embeddings.
    for (const Permutation& tau : all_permutations()) {
        std::array<int, 4> quad = {tau(1), tau(2), tau(0), tau(3)};
        LoopElem u = generator_image({quad[0], quad[1]}).nf;
        LoopElem v = generator_image({quad[2], quad[3]}).nf;
        LoopElem uv = loop_bracket(u, v);
        LoopElem vu = loop_bracket(v, u);
        bool ok = loop_bracket(u, loop_bracket(u, uv)) == loop_scale(4, uv) &&
                  loop_bracket(v, loop_bracket(v, vu)) == loop_scale(4, vu);
        rep.add("Dolan-Grady on sigma-images for quad " + std::to_string(quad[0]) +
                    std::to_string(quad[1]) + std::to_string(quad[2]) + std::to_string(quad[3]),
                ok);
    }
    return rep;
}

Report suite_s4() { return verify_s4_injection(); }

Report run_suite(const std::string& name, int max_degree) {
    if (name == "relations") return suite_relations();
    if (name == "table") return suite_table(max_degree);
    if (name == "brackets") return suite_brackets(max_degree);
    if (name == "diagrams") return suite_diagrams(max_degree);
    if (name == "presentation") return suite_presentation();
    if (name == "s4") return suite_s4();
    if (name == "all") {
        Report rep = suite_relations();
        rep.merge(suite_table(max_degree));
        rep.merge(suite_brackets(max_degree));
        rep.merge(suite_diagrams(max_degree));
        rep.merge(suite_presentation());
        rep.merge(suite_s4());
        return rep;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace tetra
