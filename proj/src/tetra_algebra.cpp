#include "tetra/tetra_algebra.hpp"

#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "tetra/chebyshev.hpp"

namespace tetra {

namespace {

void require_vertex(int v) {
    if (v < 0 || v > 3) throw std::invalid_argument("vertex index outside 0..3");
}

RingElem ring_one() { return ring_const(1); }
RingElem tm1() { return ring_t(1) + ring_const(-1); }  // T - 1
RingElem um1() { return ring_u(1) + ring_const(-1); }  // U - 1
RingElem vm1() { return ring_v(1) + ring_const(-1); }  // V - 1

}  // namespace

GeneratorId make_generator(int i, int j) {
    require_vertex(i);
    require_vertex(j);
    if (i == j) throw std::invalid_argument("generator digits must differ");
    return {i, j};
}

TetraElem generator_image(GeneratorId g) {
    int code = g.i * 10 + g.j;
    switch (code) {
        case 12: return {loop_x(ring_one())};
        case 23: return {loop_y(ring_one())};
        case 31: return {loop_z(ring_one())};
        case 3: return {loop_y(ring_t(1)) + loop_z(tm1())};   // X03
        case 1: return {loop_z(ring_u(1)) + loop_x(um1())};   // X01
        case 2: return {loop_x(ring_v(1)) + loop_y(vm1())};   // X02
        default: break;
    }
    return -generator_image(make_generator(g.j, g.i));
}

TetraElem tetra_bracket(const TetraElem& a, const TetraElem& b) {
    return {loop_bracket(a.nf, b.nf)};
}

TetraElem s4_act_generator(GeneratorId g, const Permutation& tau) {
    return generator_image(make_generator(tau(g.i), tau(g.j)));
}

TetraElem std_hom_sl2(const Sl2Elem& u, const std::array<int, 3>& triple) {
    auto [h, i, j] = triple;
    require_vertex(h);
    require_vertex(i);
    require_vertex(j);
    if (h == i || i == j || h == j)
        throw std::invalid_argument("sl2 homomorphism needs mutually distinct indices");
    return u.x * generator_image({h, i}) + u.y * generator_image({i, j}) +
           u.z * generator_image({j, h});
}

namespace {

// Polynomial written in the given canonical symbol: p0 + p1*S + p2*S^2 + ...
RingElem poly_in_symbol(const Polynomial& p, int sector) {
    if (sector == 0) return ring_from_poly(p);
    RingElem r;
    r.c = p.coeff(0);
    auto& part = (sector == 1) ? r.u : r.v;
    for (std::size_t k = 1; k < p.coeffs().size(); ++k)
        if (!rat_is_zero(p.coeffs()[k])) part.emplace(static_cast<unsigned>(k), p.coeffs()[k]);
    return r;
}

RingElem cheb_in_sector(int n, int sector) {
    return poly_in_symbol(chebyshev_shifted_poly(n), sector);
}

// S, S-1 for the sector symbol S in {T, U, V}.
RingElem sector_sym(int sector) {
    return sector == 0 ? ring_t(1) : sector == 1 ? ring_u(1) : ring_v(1);
}
RingElem sector_sym_m1(int sector) {
    return sector == 0 ? tm1() : sector == 1 ? um1() : vm1();
}

}  // namespace

LoopElem sigma_a(long m, int sector) {
    // Coordinate pattern of the closed forms, cyclically rotated by sector:
    // sector 0 puts the "plain" coefficient on X, sector 1 on Y, sector 2 on Z.
    RingElem plain, with_sym, with_sym_m1;
    if (m >= 1) {
        plain = -cheb_in_sector(static_cast<int>(m) - 2, sector);
        with_sym = sector_sym(sector) * cheb_in_sector(static_cast<int>(m) - 1, sector);
        with_sym_m1 = sector_sym_m1(sector) * cheb_in_sector(static_cast<int>(m) - 1, sector);
    } else {
        int mp = static_cast<int>(1 - m);
        plain = cheb_in_sector(mp - 1, sector);
        with_sym = -(sector_sym(sector) * cheb_in_sector(mp - 2, sector));
        with_sym_m1 = -(sector_sym_m1(sector) * cheb_in_sector(mp - 2, sector));
    }
    switch (sector) {
        case 0: return {plain, with_sym, with_sym_m1};
        case 1: return {with_sym_m1, plain, with_sym};
        case 2: return {with_sym, with_sym_m1, plain};
        default: throw std::invalid_argument("sector outside 0..2");
    }
}

LoopElem sigma_g(long l, int sector) {
    if (l < 1) throw std::invalid_argument("sigma_g needs l >= 1");
    RingElem base = cheb_in_sector(static_cast<int>(l) - 1, sector);
    RingElem plain = -base;
    RingElem with_sym = -(sector_sym(sector) * base);
    RingElem with_sym_m1 = sector_sym_m1(sector) * base;
    switch (sector) {
        case 0: return {plain, with_sym, with_sym_m1};
        case 1: return {with_sym_m1, plain, with_sym};
        case 2: return {with_sym, with_sym_m1, plain};
        default: throw std::invalid_argument("sector outside 0..2");
    }
}

OnsagerRecursion::OnsagerRecursion(LoopElem a0, LoopElem a1) {
    g1_ = loop_scale(rat(1, 2), loop_bracket(a1, a0));
    a_.emplace(0, std::move(a0));
    a_.emplace(1, std::move(a1));
    g_.emplace(1, g1_);
}

const LoopElem& OnsagerRecursion::a(long m) {
    while (hi_ < m) {
        // a_{m+1} = [g1, a_m] + a_{m-1}
        LoopElem next = loop_bracket(g1_, a_.at(hi_)) + a_.at(hi_ - 1);
        a_.emplace(hi_ + 1, std::move(next));
        ++hi_;
    }
    while (lo_ > m) {
        // a_{m-1} = a_{m+1} - [g1, a_m]
        LoopElem prev = a_.at(lo_ + 1) - loop_bracket(g1_, a_.at(lo_));
        a_.emplace(lo_ - 1, std::move(prev));
        --lo_;
    }
    return a_.at(m);
}

const LoopElem& OnsagerRecursion::g(long l) {
    if (l < 1) throw std::invalid_argument("recursion g needs l >= 1");
    auto it = g_.find(l);
    if (it == g_.end()) {
        LoopElem val = loop_scale(rat(1, 2), loop_bracket(a(l), a(0)));
        it = g_.emplace(l, std::move(val)).first;
    }
    return it->second;
}

TetraElem onsager_image(const OnsagerElem& u, const std::array<int, 4>& quad) {
    auto [h, i, j, k] = quad;
    for (int v : quad) require_vertex(v);
    if (h == i || h == j || h == k || i == j || i == k || j == k)
        throw std::invalid_argument("Onsager homomorphism needs mutually distinct indices");
    LoopElem acc;
    if (quad == kStdOnsagerQuad) {
        for (const auto& [m, q] : u.a) acc = acc + loop_scale(q, sigma_a(m));
        for (const auto& [l, q] : u.g) acc = acc + loop_scale(q, sigma_g(l));
        return {acc};
    }
    OnsagerRecursion rec(generator_image({h, i}).nf, generator_image({j, k}).nf);
    for (const auto& [m, q] : u.a) acc = acc + loop_scale(q, rec.a(m));
    for (const auto& [l, q] : u.g) acc = acc + loop_scale(q, rec.g(l));
    return {acc};
}

RingElem SigmaAut::subst(const RingElem& r) const {
    RingElem out = ring_const(r.c);
    const std::map<unsigned, Rational>* parts[3] = {&r.t, &r.u, &r.v};
    for (int s = 0; s < 3; ++s) {
        RingElem pw = ring_const(1);
        unsigned have = 0;
        for (const auto& [i, q] : *parts[s]) {
            while (have < i) {
                pw = pw * theta[static_cast<std::size_t>(s)];
                ++have;
            }
            out = out + ring_scale(q, pw);
        }
    }
    return out;
}

LoopElem SigmaAut::apply(const LoopElem& v) const {
    auto scale_by = [](const LoopElem& u, const RingElem& a) {
        return LoopElem{u.cx * a, u.cy * a, u.cz * a};
    };
    return scale_by(col[0], subst(v.cx)) + scale_by(col[1], subst(v.cy)) +
           scale_by(col[2], subst(v.cz));
}

namespace {

std::map<Permutation, SigmaAut> build_sigma_table() {
    SigmaAut id{{loop_x(ring_one()), loop_y(ring_one()), loop_z(ring_one())},
                {ring_t(1), ring_u(1), ring_v(1)}};
    SigmaAut pr{{loop_y(ring_one()), loop_z(ring_one()), loop_x(ring_one())},
                {ring_u(1), ring_v(1), ring_t(1)}};
    SigmaAut om{{loop_y(ring_const(-1)), loop_x(ring_const(-1)), loop_z(ring_const(-1))},
                {ring_const(1) - ring_u(1), ring_const(1) - ring_t(1), ring_const(1) - ring_v(1)}};
    SigmaAut st{{loop_y(ring_t(1)) + loop_z(tm1()),
                 loop_y(ring_const(-1)),
                 loop_x(ring_v(1, -1)) + loop_y(ring_scale(-1, vm1()))},
                {ring_t(1), ring_u(1), ring_v(1)}};

    const std::array<std::pair<Permutation, const SigmaAut*>, 3> gens = {
        std::make_pair(perm_prime(), &pr), std::make_pair(perm_omega(), &om),
        std::make_pair(perm_star(), &st)};

    std::map<Permutation, SigmaAut> table;
    table.emplace(perm_identity(), id);
    std::deque<Permutation> queue = {perm_identity()};
    while (!queue.empty()) {
        Permutation p = queue.front();
        queue.pop_front();
        const SigmaAut base = table.at(p);
        for (const auto& [gp, ga] : gens) {
            Permutation np = perm_compose(p, gp);  // p first, then the generator
            if (table.count(np)) continue;
            SigmaAut na;
            for (int k = 0; k < 3; ++k) {
                na.col[static_cast<std::size_t>(k)] = ga->apply(base.col[static_cast<std::size_t>(k)]);
                na.theta[static_cast<std::size_t>(k)] =
                    ga->subst(base.theta[static_cast<std::size_t>(k)]);
            }
            table.emplace(np, std::move(na));
            queue.push_back(np);
        }
    }
    return table;
}

}  // namespace

const SigmaAut& sigma_action(const Permutation& tau) {
    static const std::map<Permutation, SigmaAut> table = build_sigma_table();
    return table.at(tau);
}

TetraElem loop_image(const LoopElem& u, const std::array<int, 4>& quad) {
    auto [h, i, j, k] = quad;
    for (int v : quad) require_vertex(v);
    if (h == i || h == j || h == k || i == j || i == k || j == k)
        throw std::invalid_argument("loop homomorphism needs mutually distinct indices");
    if (!loop_in_laurent_subalgebra(u))
        throw std::invalid_argument("loop_image: element outside K[T, T^-1] coefficients");
    // The permutation carrying the standard quad (1,2,3,0) to (h,i,j,k).
    Permutation tau{{k, h, i, j}};
    if (quad == kStdLoopQuad) return {u};
    return {sigma_action(tau).apply(u)};
}

namespace {

// Expresses a polynomial on the shifted Chebyshev basis; entry k is the
// coefficient of U_k(1-2x). Triangular since deg U_k(1-2x) = k.
std::vector<Rational> chebyshev_coords(Polynomial w) {
    std::vector<Rational> out;
    if (w.is_zero()) return out;
    out.assign(*w.degree() + 1, Rational(0));
    while (!w.is_zero()) {
        std::size_t d = *w.degree();
        Polynomial basis = chebyshev_shifted_poly(static_cast<int>(d));
        Rational c = w.coeff(d) / basis.coeff(d);
        out[d] = c;
        w -= c * basis;
    }
    return out;
}

// Coordinates of an element of Delta on the Onsager basis, by back
// substitution against the triple-block listing
//   a_0, a_1 - g_1, g_1, a_{-1}, a_2 - g_2, g_2, ...
// whose matrix against the graded basis
//   X(x)U_k(1-2T), Y(x)T U_k(1-2T), Z(x)(T-1) U_k(1-2T)
// is triangular with diagonal 1, 2, 1, ...
OnsagerElem solve_delta_coords(const LoopElem& d) {
    Polynomial px = ring_to_poly(d.cx);
    Polynomial py_full = ring_to_poly(d.cy);
    Polynomial pz_full = ring_to_poly(d.cz);
    if (!rat_is_zero(py_full.coeff(0)))
        throw std::logic_error("Delta component: Y coefficient has a constant term");
    std::vector<Rational> shifted(py_full.coeffs().begin() + (py_full.is_zero() ? 0 : 1),
                                  py_full.coeffs().end());
    Polynomial py(std::move(shifted));
    auto [pz, rem] = Polynomial::divmod(pz_full, Polynomial({Rational(-1), Rational(1)}));
    if (!rem.is_zero())
        throw std::logic_error("Delta component: Z coefficient does not vanish at T=1");

    std::vector<Rational> alpha = chebyshev_coords(px);
    std::vector<Rational> beta = chebyshev_coords(py);
    std::vector<Rational> gamma = chebyshev_coords(pz);
    std::size_t blocks = std::max({alpha.size(), beta.size(), gamma.size()});
    if (blocks == 0) return {};

    std::vector<Rational> t(3 * blocks, Rational(0));
    for (std::size_t k = 0; k < blocks; ++k) {
        if (k < alpha.size()) t[3 * k] = alpha[k];
        if (k < beta.size()) t[3 * k + 1] = beta[k];
        if (k < gamma.size()) t[3 * k + 2] = gamma[k];
    }

    std::vector<Rational> c(3 * blocks, Rational(0));
    for (std::size_t ii = 3 * blocks; ii-- > 0;) {
        std::size_t m = ii / 3 + 1;  // block index, 1-based
        int type = static_cast<int>(ii % 3);
        Rational ci = (type == 1) ? Rational(t[ii] / 2) : t[ii];
        c[ii] = ci;
        if (rat_is_zero(ci)) continue;
        std::size_t b1 = 3 * (m - 1);
        switch (type) {
            case 0:  // a_{1-m}: alpha_{m-1} = 1, beta_{m-2} = gamma_{m-2} = -1
                t[b1] -= ci;
                if (m >= 2) {
                    t[3 * (m - 2) + 1] += ci;
                    t[3 * (m - 2) + 2] += ci;
                }
                break;
            case 1:  // a_m - g_m: alpha_{m-1} = 1, alpha_{m-2} = -1, beta_{m-1} = 2
                t[b1] -= ci;
                if (m >= 2) t[3 * (m - 2)] += ci;
                t[b1 + 1] -= 2 * ci;
                break;
            case 2:  // g_m: alpha_{m-1} = beta_{m-1} = -1, gamma_{m-1} = 1
                t[b1] += ci;
                t[b1 + 1] += ci;
                t[b1 + 2] -= ci;
                break;
        }
    }
    for (const auto& q : t)
        if (!rat_is_zero(q)) throw std::logic_error("Delta coordinate solve left a residue");

    OnsagerElem out;
    for (std::size_t m = 1; m <= blocks; ++m) {
        out = out + onsager_a(1 - static_cast<long>(m), c[3 * (m - 1)]);
        out = out + onsager_a(static_cast<long>(m), c[3 * (m - 1) + 1]);
        out = out + onsager_g(static_cast<long>(m), c[3 * (m - 1) + 2] - c[3 * (m - 1) + 1]);
    }
    return out;
}

}  // namespace

OmegaCoords omega_decompose(const TetraElem& u) {
    DeltaSplit s = split_delta(u.nf);
    return {solve_delta_coords(s.d),
            solve_delta_coords(loop_prime(loop_prime(s.dp))),
            solve_delta_coords(loop_prime(s.dpp))};
}

TetraElem omega_reconstruct(const OmegaCoords& c) {
    LoopElem acc = onsager_image(c.omega).nf;
    acc = acc + loop_prime(onsager_image(c.omega_p).nf);
    acc = acc + loop_prime(loop_prime(onsager_image(c.omega_pp).nf));
    return {acc};
}

Report verify_tetra_relations() {
    Report rep;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            std::string name = "X" + std::to_string(i) + std::to_string(j) + " + X" +
                               std::to_string(j) + std::to_string(i) + " = 0";
            rep.add(name, (generator_image({i, j}) + generator_image({j, i})).is_zero());
        }
    for (int h = 0; h < 4; ++h)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                if (h == i || i == j || h == j) continue;
                TetraElem a = generator_image({h, i});
                TetraElem b = generator_image({i, j});
                std::string name = "[X" + std::to_string(h) + std::to_string(i) + ",X" +
                                   std::to_string(i) + std::to_string(j) + "] = 2+2";
                rep.add(name, tetra_bracket(a, b) == Rational(2) * a + Rational(2) * b);
            }
    for (int h = 0; h < 4; ++h)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k) {
                    if (h == i || h == j || h == k || i == j || i == k || j == k) continue;
                    TetraElem a = generator_image({h, i});
                    TetraElem b = generator_image({j, k});
                    TetraElem inner = tetra_bracket(a, b);
                    std::string name = "ad(X" + std::to_string(h) + std::to_string(i) + ")^3 X" +
                                       std::to_string(j) + std::to_string(k) + " = 4[.,.]";
                    rep.add(name, tetra_bracket(a, tetra_bracket(a, inner)) == Rational(4) * inner);
                }
    return rep;
}

Report verify_bracket_recursions(int max_m) {
    if (max_m < 1) throw std::invalid_argument("verify_bracket_recursions needs max_m >= 1");
    Report rep;
    LoopElem a0p = loop_prime(sigma_a(0));
    LoopElem a1p = loop_prime(sigma_a(1));
    std::map<long, LoopElem> a;
    for (long m = -max_m; m <= max_m; ++m) a.emplace(m, sigma_a(m));
    LoopElem sum_a, sum_a1m, sum_g, sum_sym;
    sum_sym = a.at(0) + a.at(1);
    for (long m = 1; m <= max_m; ++m) {
        // The running sums are over 1 <= i <= m-1 and 1-m <= i <= m.
        if (m >= 2) {
            sum_a = sum_a + a.at(m - 1);
            sum_a1m = sum_a1m + a.at(2 - m);
            sum_g = sum_g + sigma_g(m - 1);
            sum_sym = sum_sym + a.at(m) + a.at(1 - m);
        }
        std::string tag = " (m=" + std::to_string(m) + ")";

        rep.add("[a0',a_m] = -2a0'+2a_m+4sum(a)-4sum(g)" + tag,
                loop_bracket(a0p, a.at(m)) ==
                    loop_scale(-2, a0p) + loop_scale(2, a.at(m)) + loop_scale(4, sum_a) +
                        loop_scale(-4, sum_g));
        rep.add("[a0',a_{1-m}] = -2a0'-2a_{1-m}-4sum(a_{1-i})-4sum(g)" + tag,
                loop_bracket(a0p, a.at(1 - m)) ==
                    loop_scale(-2, a0p) + loop_scale(-2, a.at(1 - m)) +
                        loop_scale(-4, sum_a1m) + loop_scale(-4, sum_g));
        rep.add("[a0',g_m] = 2sum_{1-m..m}(a)" + tag,
                loop_bracket(a0p, sigma_g(m)) == loop_scale(2, sum_sym));
        rep.add("[a1',a_m] = 2a1'-2a_m-4sum(a)-4sum(g)" + tag,
                loop_bracket(a1p, a.at(m)) ==
                    loop_scale(2, a1p) + loop_scale(-2, a.at(m)) + loop_scale(-4, sum_a) +
                        loop_scale(-4, sum_g));
        rep.add("[a1',a_{1-m}] = 2a1'+2a_{1-m}+4sum(a_{1-i})-4sum(g)" + tag,
                loop_bracket(a1p, a.at(1 - m)) ==
                    loop_scale(2, a1p) + loop_scale(2, a.at(1 - m)) + loop_scale(4, sum_a1m) +
                        loop_scale(-4, sum_g));
        rep.add("[a1',g_m] = 2sum_{1-m..m}(a)" + tag,
                loop_bracket(a1p, sigma_g(m)) == loop_scale(2, sum_sym));
    }
    return rep;
}

Report verify_s4_injection() {
    Report rep;
    const std::array<GeneratorId, 6> gens = {
        GeneratorId{1, 2}, GeneratorId{2, 3}, GeneratorId{3, 1},
        GeneratorId{0, 3}, GeneratorId{0, 1}, GeneratorId{0, 2}};

    std::set<std::string> images;
    for (const Permutation& tau : all_permutations()) {
        std::ostringstream key;
        for (const GeneratorId& g : gens) key << loop_str(s4_act_generator(g, tau).nf) << "|";
        images.insert(key.str());
    }
    rep.add("24 pairwise distinct generator actions", images.size() == all_permutations().size());

    // Transported automorphisms agree with the index action on every signed
    // generator, and respect brackets on a fixed sample of words.
    for (const Permutation& tau : all_permutations()) {
        const SigmaAut& aut = sigma_action(tau);
        bool gens_ok = true;
        for (int i = 0; i < 4 && gens_ok; ++i)
            for (int j = 0; j < 4 && gens_ok; ++j) {
                if (i == j) continue;
                gens_ok = aut.apply(generator_image({i, j}).nf) ==
                          s4_act_generator({i, j}, tau).nf;
            }
        rep.add("perm " + perm_str(tau) + " matches the index action on all generators", gens_ok);

        const std::array<std::pair<GeneratorId, GeneratorId>, 3> words = {
            std::make_pair(GeneratorId{0, 1}, GeneratorId{1, 2}),
            std::make_pair(GeneratorId{0, 3}, GeneratorId{2, 3}),
            std::make_pair(GeneratorId{1, 3}, GeneratorId{0, 2})};
        bool br_ok = true;
        for (const auto& [ga, gb] : words) {
            LoopElem lhs = aut.apply(
                loop_bracket(generator_image(ga).nf, generator_image(gb).nf));
            LoopElem rhs = loop_bracket(s4_act_generator(ga, tau).nf,
                                        s4_act_generator(gb, tau).nf);
            br_ok = br_ok && lhs == rhs;
        }
        rep.add("perm " + perm_str(tau) + " preserves sample brackets", br_ok);
    }
    return rep;
}

}  // namespace tetra
