#include "tetra/loop.hpp"

#include <array>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace tetra {

LoopElem loop_zero() { return {}; }

LoopElem loop_x(const RingElem& a) { return {a, {}, {}}; }
LoopElem loop_y(const RingElem& a) { return {{}, a, {}}; }
LoopElem loop_z(const RingElem& a) { return {{}, {}, a}; }

LoopElem loop_tensor(const Sl2Elem& u, const RingElem& a) {
    return {ring_scale(u.x, a), ring_scale(u.y, a), ring_scale(u.z, a)};
}

LoopElem loop_add(const LoopElem& a, const LoopElem& b) {
    return {a.cx + b.cx, a.cy + b.cy, a.cz + b.cz};
}

LoopElem loop_scale(const Rational& s, const LoopElem& a) {
    return {ring_scale(s, a.cx), ring_scale(s, a.cy), ring_scale(s, a.cz)};
}

LoopElem loop_bracket(const LoopElem& a, const LoopElem& b) {
    RingElem p = a.cx * b.cy - a.cy * b.cx;  // weight of [X,Y] = 2X+2Y
    RingElem q = a.cy * b.cz - a.cz * b.cy;  // weight of [Y,Z] = 2Y+2Z
    RingElem r = a.cz * b.cx - a.cx * b.cz;  // weight of [Z,X] = 2Z+2X
    RingElem two = ring_const(2);
    return {two * (p + r), two * (p + q), two * (q + r)};
}

LoopElem loop_prime(const LoopElem& a) {
    // X -> Y -> Z -> X on the sl2 side, T -> U -> V -> T on coefficients.
    return {ring_prime(a.cz), ring_prime(a.cx), ring_prime(a.cy)};
}

Sl2Elem loop_eval(const LoopElem& a, const Rational& t) {
    return {eval_at(a.cx, t), eval_at(a.cy, t), eval_at(a.cz, t)};
}

bool loop_in_laurent_subalgebra(const LoopElem& a) {
    return a.cx.v.empty() && a.cy.v.empty() && a.cz.v.empty();
}

LoopElem chevalley_generator(Chevalley name) {
    const RingElem one = ring_const(1);
    const RingElem t = ring_t(1);
    const RingElem tinv = ring_const(1) - ring_u(1);  // T^-1 = 1 - U
    switch (name) {
        case Chevalley::e1: return loop_tensor(efh_to_equitable(1, 0, 0), one);
        case Chevalley::f1: return loop_tensor(efh_to_equitable(0, 1, 0), one);
        case Chevalley::h1: return loop_tensor(efh_to_equitable(0, 0, 1), one);
        case Chevalley::e0: return loop_tensor(efh_to_equitable(0, 1, 0), t);
        case Chevalley::f0: return loop_tensor(efh_to_equitable(1, 0, 0), tinv);
        case Chevalley::h0: return loop_tensor(efh_to_equitable(0, 0, -1), one);
    }
    throw std::logic_error("unreachable");
}

LoopElem equitable_loop_generator(EquitableLoopGen name) {
    auto combine = [](Chevalley e, Chevalley f, Chevalley h, long cxe, long cxf, long cxh) {
        return loop_scale(cxe, chevalley_generator(e)) +
               loop_scale(cxf, chevalley_generator(f)) +
               loop_scale(cxh, chevalley_generator(h));
    };
    switch (name) {
        case EquitableLoopGen::X1: return combine(Chevalley::e1, Chevalley::f1, Chevalley::h1, 2, 0, -1);
        case EquitableLoopGen::Y1: return combine(Chevalley::e1, Chevalley::f1, Chevalley::h1, 0, -2, -1);
        case EquitableLoopGen::Z1: return combine(Chevalley::e1, Chevalley::f1, Chevalley::h1, 0, 0, 1);
        case EquitableLoopGen::X0: return combine(Chevalley::e0, Chevalley::f0, Chevalley::h0, 2, 0, -1);
        case EquitableLoopGen::Y0: return combine(Chevalley::e0, Chevalley::f0, Chevalley::h0, 0, -2, -1);
        case EquitableLoopGen::Z0: return combine(Chevalley::e0, Chevalley::f0, Chevalley::h0, 0, 0, 1);
    }
    throw std::logic_error("unreachable");
}

Report check_loop_presentation(int /*maxdeg*/) {
    Report rep;
    const std::array<LoopElem, 2> e = {chevalley_generator(Chevalley::e0),
                                       chevalley_generator(Chevalley::e1)};
    const std::array<LoopElem, 2> f = {chevalley_generator(Chevalley::f0),
                                       chevalley_generator(Chevalley::f1)};
    const std::array<LoopElem, 2> h = {chevalley_generator(Chevalley::h0),
                                       chevalley_generator(Chevalley::h1)};
    const long A[2][2] = {{2, -2}, {-2, 2}};  // Cartan matrix

    rep.add("kac-moody: h0+h1 = 0", (h[0] + h[1]).is_zero());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            rep.add("kac-moody: [h" + std::to_string(i) + ",e" + std::to_string(j) + "] = A_ij*e_j",
                    loop_bracket(h[i], e[j]) == loop_scale(A[i][j], e[j]));
            rep.add("kac-moody: [h" + std::to_string(i) + ",f" + std::to_string(j) + "] = -A_ij*f_j",
                    loop_bracket(h[i], f[j]) == loop_scale(-A[i][j], f[j]));
            rep.add("kac-moody: [e" + std::to_string(i) + ",f" + std::to_string(j) + "] = delta_ij*h_j",
                    loop_bracket(e[i], f[j]) == (i == j ? h[j] : loop_zero()));
        }
    for (int i = 0; i < 2; ++i) {
        int j = 1 - i;
        rep.add("kac-moody serre: ad(e" + std::to_string(i) + ")^3 e" + std::to_string(j) + " = 0",
                loop_bracket(e[i], loop_bracket(e[i], loop_bracket(e[i], e[j]))).is_zero());
        rep.add("kac-moody serre: ad(f" + std::to_string(i) + ")^3 f" + std::to_string(j) + " = 0",
                loop_bracket(f[i], loop_bracket(f[i], loop_bracket(f[i], f[j]))).is_zero());
    }

    const std::array<LoopElem, 2> X = {equitable_loop_generator(EquitableLoopGen::X0),
                                       equitable_loop_generator(EquitableLoopGen::X1)};
    const std::array<LoopElem, 2> Y = {equitable_loop_generator(EquitableLoopGen::Y0),
                                       equitable_loop_generator(EquitableLoopGen::Y1)};
    const std::array<LoopElem, 2> Z = {equitable_loop_generator(EquitableLoopGen::Z0),
                                       equitable_loop_generator(EquitableLoopGen::Z1)};

    rep.add("equitable: Z0+Z1 = 0", (Z[0] + Z[1]).is_zero());
    for (int i = 0; i < 2; ++i) {
        auto tag = std::to_string(i);
        rep.add("equitable: [X" + tag + ",Y" + tag + "] = 2X+2Y",
                loop_bracket(X[i], Y[i]) == loop_scale(2, X[i]) + loop_scale(2, Y[i]));
        rep.add("equitable: [Y" + tag + ",Z" + tag + "] = 2Y+2Z",
                loop_bracket(Y[i], Z[i]) == loop_scale(2, Y[i]) + loop_scale(2, Z[i]));
        rep.add("equitable: [Z" + tag + ",X" + tag + "] = 2Z+2X",
                loop_bracket(Z[i], X[i]) == loop_scale(2, Z[i]) + loop_scale(2, X[i]));
    }
    for (int i = 0; i < 2; ++i) {
        int j = 1 - i;
        rep.add("equitable: [Y" + std::to_string(i) + ",X" + std::to_string(j) + "] = 2Y_i+2X_j",
                loop_bracket(Y[i], X[j]) == loop_scale(2, Y[i]) + loop_scale(2, X[j]));
        LoopElem xbr = loop_bracket(X[i], X[j]);
        rep.add("equitable: ad(X" + std::to_string(i) + ")^3 X" + std::to_string(j) +
                    " = 4[X_i,X_j]",
                loop_bracket(X[i], loop_bracket(X[i], xbr)) == loop_scale(4, xbr));
        LoopElem ybr = loop_bracket(Y[i], Y[j]);
        rep.add("equitable: ad(Y" + std::to_string(i) + ")^3 Y" + std::to_string(j) +
                    " = 4[Y_i,Y_j]",
                loop_bracket(Y[i], loop_bracket(Y[i], ybr)) == loop_scale(4, ybr));
    }
    return rep;
}

namespace {

// Routing of one canonical-basis coefficient into the three direct summands.
// Per coordinate, one of the three sectors keeps the constants; the other
// two must vanish at 1 (in their own variable) or have no constant at all.
struct Routed {
    RingElem d, dp, dpp;
};

// cx sector: K[T] + (U-1)K[U] + V*K[V]
Routed route_x(const RingElem& a) {
    Routed r;
    Rational su = map_coeff_sum(a.u);
    r.d.c = a.c + su;
    r.d.t = a.t;
    r.dp.u = a.u;
    r.dp.c = -su;
    r.dpp.v = a.v;
    return r;
}

// cy sector: T*K[T] + K[U] + (V-1)K[V]
Routed route_y(const RingElem& a) {
    Routed r;
    Rational sv = map_coeff_sum(a.v);
    r.d.t = a.t;
    r.dp.c = a.c + sv;
    r.dp.u = a.u;
    r.dpp.v = a.v;
    r.dpp.c = -sv;
    return r;
}

// cz sector: (T-1)K[T] + U*K[U] + K[V]
Routed route_z(const RingElem& a) {
    Routed r;
    Rational st = map_coeff_sum(a.t);
    r.d.t = a.t;
    r.d.c = -st;
    r.dp.u = a.u;
    r.dpp.c = a.c + st;
    r.dpp.v = a.v;
    return r;
}

}  // namespace

DeltaSplit split_delta(const LoopElem& a) {
    Routed x = route_x(a.cx), y = route_y(a.cy), z = route_z(a.cz);
    return {{x.d, y.d, z.d}, {x.dp, y.dp, z.dp}, {x.dpp, y.dpp, z.dpp}};
}

namespace {

bool in_poly_sector(const RingElem& a, char var) {
    // a lies in K[var]
    switch (var) {
        case 'T': return a.u.empty() && a.v.empty();
        case 'U': return a.t.empty() && a.v.empty();
        default: return a.t.empty() && a.u.empty();
    }
}

bool in_no_const_sector(const RingElem& a, char var) {
    // a lies in var*K[var]
    return in_poly_sector(a, var) && rat_is_zero(a.c);
}

bool in_vanishing_sector(const RingElem& a, char var) {
    // a lies in (var-1)*K[var], i.e. polynomial in var vanishing at var=1
    if (!in_poly_sector(a, var)) return false;
    const auto& part = (var == 'T') ? a.t : (var == 'U') ? a.u : a.v;
    return rat_is_zero(a.c + map_coeff_sum(part));
}

}  // namespace

bool delta_membership(const LoopElem& a, DeltaKind which) {
    switch (which) {
        case DeltaKind::Delta:
            return in_poly_sector(a.cx, 'T') && in_no_const_sector(a.cy, 'T') &&
                   in_vanishing_sector(a.cz, 'T');
        case DeltaKind::DeltaPrime:
            return in_vanishing_sector(a.cx, 'U') && in_poly_sector(a.cy, 'U') &&
                   in_no_const_sector(a.cz, 'U');
        case DeltaKind::DeltaPrimePrime:
            return in_no_const_sector(a.cx, 'V') && in_vanishing_sector(a.cy, 'V') &&
                   in_poly_sector(a.cz, 'V');
    }
    throw std::logic_error("unreachable");
}

std::string loop_str(const LoopElem& a) {
    auto block = [](const char* sym, const RingElem& r) {
        std::string body = r.is_zero() ? "" : ring_str(r);
        return std::string(sym) + "[" + body + "]";
    };
    return block("X", a.cx) + "; " + block("Y", a.cy) + "; " + block("Z", a.cz);
}

namespace {

nlohmann::ordered_json part_json(const std::map<unsigned, Rational>& part) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [i, q] : part) j[std::to_string(i)] = rat_str(q);
    return j;
}

nlohmann::ordered_json ring_json_obj(const RingElem& r) {
    nlohmann::ordered_json j;
    j["1"] = rat_str(r.c);
    j["T"] = part_json(r.t);
    j["U"] = part_json(r.u);
    j["V"] = part_json(r.v);
    return j;
}

}  // namespace

std::string loop_json(const LoopElem& a) {
    nlohmann::ordered_json j;
    j["X"] = ring_json_obj(a.cx);
    j["Y"] = ring_json_obj(a.cy);
    j["Z"] = ring_json_obj(a.cz);
    return j.dump();
}

}  // namespace tetra
