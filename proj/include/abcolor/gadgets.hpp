#ifndef ABCOLOR_GADGETS_HPP
#define ABCOLOR_GADGETS_HPP

#include <vector>

#include "abcolor/generators.hpp"
#include "abcolor/graph.hpp"
#include "abcolor/solver.hpp"

namespace abcolor {

// Candidate gadgets for the hardness reductions. Reductions accept any
// gadget that passes check_gadget for the required behavioral contract;
// these are the shipped defaults.

namespace gadget_detail {

// Shared building block for the (2,1) gadgets: a friendship core whose
// center s* is forced to the single d2 color. A vertex u is pinned to a d1
// color by a bridge u - x - s*: u then sits at distance 2 from s*.
struct PinBoard {
    std::vector<std::pair<int, int>> edges;
    int next = 0;
    int star_center = -1;

    int fresh() { return next++; }
    void edge(int a, int b) { edges.emplace_back(a, b); }

    void build_core() {
        star_center = fresh();
        for (int t = 0; t < 2; ++t) {
            int a = fresh(), b = fresh();
            edge(star_center, a);
            edge(star_center, b);
            edge(a, b);
        }
    }
    void pin(int u) {
        int x = fresh();
        edge(u, x);
        edge(x, star_center);
    }
    // five-cycle through p and q whose other three vertices are pinned;
    // exactly one of p, q ends up with the d2 color
    void exclusive_pair(int p, int q) {
        int a = fresh(), b = fresh(), c = fresh();
        edge(p, a);
        edge(a, q);
        edge(q, b);
        edge(b, c);
        edge(c, p);
        pin(a);
        pin(b);
        pin(c);
    }
};

}  // namespace gadget_detail

// Variable gadget for the (2,1) wiring, one terminal per occurrence. The
// three terminals are synchronized through exclusive five-cycles: pos1 and
// pos2 agree, neg is their complement. Terminal pairs that can be d2
// simultaneously sit at distance >= 3.
struct VarGadget21 {
    GadgetSpec spec;              // primary contract: pos1 d1 iff neg d2
    GadgetProperty second_check;  // pos2 d1 iff neg d2
};

inline VarGadget21 var_gadget_2_1() {
    gadget_detail::PinBoard b;
    int pos1 = b.fresh(), pos2 = b.fresh(), neg = b.fresh(), mid = b.fresh();
    b.build_core();
    b.exclusive_pair(pos1, mid);
    b.exclusive_pair(mid, pos2);
    b.exclusive_pair(pos1, neg);

    VarGadget21 out;
    out.spec.gadget = Graph::build(b.next, b.edges);
    out.spec.ports = {{"pos1", pos1}, {"pos2", pos2}, {"neg", neg}};
    out.spec.property = {GadgetPropertyKind::iff_d1_d2, {"pos1", "neg"}};
    out.second_check = {GadgetPropertyKind::iff_d1_d2, {"pos2", "neg"}};
    return out;
}

// Clause gadget for the (2,1) wiring: a nine-cycle with the three ports at
// mutual circular distance 3 and every other cycle vertex pinned to d1. An
// odd cycle cannot be colored by the two d1 colors alone, so some port takes
// the d2 color.
inline GadgetSpec clause_gadget_2_1() {
    gadget_detail::PinBoard b;
    std::vector<int> ring;
    for (int i = 0; i < 9; ++i) ring.push_back(b.fresh());
    b.build_core();
    for (int i = 0; i < 9; ++i) {
        b.edge(ring[i], ring[(i + 1) % 9]);
        if (i % 3 != 0) b.pin(ring[i]);
    }
    GadgetSpec spec;
    spec.gadget = Graph::build(b.next, b.edges);
    spec.ports = {{"x", ring[0]}, {"y", ring[3]}, {"z", ring[6]}};
    spec.property = {GadgetPropertyKind::at_least_one_d2, {"x", "y", "z"}};
    return spec;
}

// Variable gadget for the (1,k) identification wiring. v and vbar share the
// neighbor h; v', vbar' hang off them and are joined to k-1 spine vertices of
// degree k+1. With one d1 color, degree k+1 forces a d2 color, so v and vbar
// can neither both avoid nor both take the d2 palette.
inline GadgetSpec var_gadget_1_k(int k) {
    if (k < 2) throw std::invalid_argument("variable gadget: need k >= 2");
    std::vector<std::pair<int, int>> edges;
    int next = 0;
    int h = next++, v = next++, vbar = next++, vp = next++, vbp = next++;
    edges.insert(edges.end(), {{h, v}, {h, vbar}, {v, vp}, {vbar, vbp}});
    for (int i = 0; i < k - 1; ++i) {
        int m = next++;
        edges.emplace_back(vp, m);
        edges.emplace_back(vbp, m);
        for (int p = 0; p < k - 1; ++p) edges.emplace_back(m, next++);
    }
    GadgetSpec spec;
    spec.gadget = Graph::build(next, edges);
    spec.ports = {{"v", v}, {"vbar", vbar}};
    spec.property = {GadgetPropertyKind::iff_d1_d2, {"v", "vbar"}};
    return spec;
}

// Clause gadget for the (1,k) identification wiring: each port holds a
// private neighbor that hangs off the hub c of degree k+1; if all three
// ports were d1, the three private neighbors, the hub and its k-3 satellites
// would need k+1 d2 colors within distance 2.
inline GadgetSpec clause_gadget_1_k(int k) {
    if (k < 4) throw std::invalid_argument("clause gadget: need k >= 4");
    std::vector<std::pair<int, int>> edges;
    int next = 0;
    int px = next++, py = next++, pz = next++;
    int nx = next++, ny = next++, nz = next++;
    int c = next++;
    edges.insert(edges.end(),
                 {{px, nx}, {py, ny}, {pz, nz}, {c, nx}, {c, ny}, {c, nz}, {c, next}});
    ++next;  // hub pendant
    for (int i = 0; i < k - 3; ++i) {
        int sat = next++;
        edges.emplace_back(c, sat);
        for (int p = 0; p < k; ++p) edges.emplace_back(sat, next++);
    }
    GadgetSpec spec;
    spec.gadget = Graph::build(next, edges);
    spec.ports = {{"x", px}, {"y", py}, {"z", pz}};
    spec.property = {GadgetPropertyKind::at_least_one_d2, {"x", "y", "z"}};
    return spec;
}

// Attachment gadget for the (3,k) wiring: u is adjacent to v and to k
// centers of K4 windmills. Each center is forced to a d2 color, the centers
// exhaust the d2 palette around u and v, so both must take d1 colors.
struct H1Gadget {
    GadgetSpec spec;              // primary contract: v forced d1
    GadgetProperty second_check;  // u forced d1
};

inline H1Gadget h1_gadget(int k) {
    if (k < 1) throw std::invalid_argument("attachment gadget: need k >= 1");
    std::vector<std::pair<int, int>> edges;
    int next = 0;
    int u = next++, v = next++;
    edges.emplace_back(u, v);
    for (int i = 0; i < k; ++i) {
        int m = next++;
        edges.emplace_back(u, m);
        for (int copy = 0; copy < k + 1; ++copy) {
            int a = next++, b = next++, c = next++;
            edges.insert(edges.end(), {{m, a}, {m, b}, {m, c}, {a, b}, {a, c}, {b, c}});
        }
    }
    H1Gadget out;
    out.spec.gadget = Graph::build(next, edges);
    out.spec.ports = {{"u", u}, {"v", v}};
    out.spec.property = {GadgetPropertyKind::forced_d1, {"v"}};
    out.second_check = {GadgetPropertyKind::forced_d1, {"u"}};
    return out;
}

}  // namespace abcolor

#endif  // ABCOLOR_GADGETS_HPP
